#include "mwp/polynomial.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace mwp {

std::strong_ordering delta_list_order(const DeltaList& a, const DeltaList& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

bool delta_list_less(const DeltaList& a, const DeltaList& b) {
  return delta_list_order(a, b) < 0;
}

bool delta_list_subset(const DeltaList& sub, const DeltaList& super) {
  std::size_t j = 0;
  for (const Delta& d : sub) {
    while (j < super.size() && super[j].position < d.position) ++j;
    if (j == super.size() || !(super[j] == d)) return false;
    ++j;
  }
  return true;
}

std::string Monomial::str() const {
  std::string s = coeff_str(scalar);
  for (const Delta& d : deltas)
    s += ".d(" + std::to_string(d.value) + "," + std::to_string(d.position) + ")";
  return s;
}

std::optional<Monomial> mono_product(const Monomial& x, const Monomial& y) {
  const Coeff s = coeff_mul(x.scalar, y.scalar);
  if (s == Coeff::Zero) return std::nullopt;
  DeltaList merged;
  merged.reserve(x.deltas.size() + y.deltas.size());
  std::size_t i = 0, j = 0;
  while (i < x.deltas.size() && j < y.deltas.size()) {
    const Delta& a = x.deltas[i];
    const Delta& b = y.deltas[j];
    if (a.position < b.position) {
      merged.push_back(a);
      ++i;
    } else if (b.position < a.position) {
      merged.push_back(b);
      ++j;
    } else {
      if (a.value != b.value) return std::nullopt;  // contradictory deltas
      merged.push_back(a);
      ++i;
      ++j;
    }
  }
  merged.insert(merged.end(), x.deltas.begin() + i, x.deltas.end());
  merged.insert(merged.end(), y.deltas.begin() + j, y.deltas.end());
  return Monomial{s, std::move(merged)};
}

bool mono_subsumes(const Monomial& general, const Monomial& specific) {
  return general.scalar >= specific.scalar &&
         delta_list_subset(general.deltas, specific.deltas);
}

std::uint32_t ChoiceDomains::size_of(std::uint32_t position) const {
  if (position >= sizes_.size())
    throw std::out_of_range("choice position " + std::to_string(position) +
                            " outside the active domains");
  return sizes_[position];
}

std::uint64_t ChoiceDomains::assignment_count(std::uint64_t cap) const {
  std::uint64_t n = 1;
  for (std::uint32_t s : sizes_) {
    n *= s;
    if (n > cap || s == 0) throw std::length_error("domain too large to enumerate");
  }
  return n;
}

Assignment first_assignment(const ChoiceDomains& d) {
  return Assignment(d.count(), 0);
}

std::optional<Assignment> next_assignment(const ChoiceDomains& d, Assignment a) {
  // Position 0 is most significant; increment from the right.
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] + 1 < d.size_of(static_cast<std::uint32_t>(k))) {
      ++a[k];
      std::fill(a.begin() + static_cast<std::ptrdiff_t>(k) + 1, a.end(), 0u);
      return a;
    }
  }
  return std::nullopt;
}

bool deltas_match(const DeltaList& deltas, const Assignment& a) {
  for (const Delta& d : deltas) {
    if (d.position >= a.size() || a[d.position] != d.value) return false;
  }
  return true;
}

Polynomial Polynomial::constant(Coeff c) {
  Polynomial p;
  if (c != Coeff::Zero) p.ms_.push_back(Monomial{c, {}});
  return p;
}

Polynomial Polynomial::monomial(Monomial m) {
  return from_monomials({std::move(m)});
}

Polynomial Polynomial::from_monomials(std::vector<Monomial> ms) {
  std::erase_if(ms, [](const Monomial& m) { return m.scalar == Coeff::Zero; });
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    if (auto c = delta_list_order(a.deltas, b.deltas); c != 0) return c < 0;
    return a.scalar < b.scalar;
  });
  // Merge monomials sharing a delta list (add = max, so keep the largest).
  std::vector<Monomial> merged;
  for (Monomial& m : ms) {
    if (!merged.empty() && merged.back().deltas == m.deltas)
      merged.back().scalar = coeff_add(merged.back().scalar, m.scalar);
    else
      merged.push_back(std::move(m));
  }
  // Drop monomials subsumed by another (subsumption is transitive, so testing
  // against dropped monomials is sound).
  std::vector<bool> drop(merged.size(), false);
  for (std::size_t i = 0; i < merged.size(); ++i) {
    for (std::size_t j = 0; j < merged.size(); ++j) {
      if (i == j || merged[j].deltas.size() > merged[i].deltas.size()) continue;
      if (merged[j].deltas == merged[i].deltas) continue;
      if (mono_subsumes(merged[j], merged[i])) {
        drop[i] = true;
        break;
      }
    }
  }
  Polynomial p;
  for (std::size_t i = 0; i < merged.size(); ++i)
    if (!drop[i]) p.ms_.push_back(std::move(merged[i]));
  return p;
}

std::vector<Monomial> Polynomial::inf_monomials() const {
  std::vector<Monomial> out;
  for (const Monomial& m : ms_)
    if (m.scalar == Coeff::Inf) out.push_back(m);
  return out;
}

std::string Polynomial::str() const {
  if (ms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < ms_.size(); ++i) {
    if (i) s += "+";
    s += ms_[i].str();
  }
  return s;
}

Polynomial poly_add(const Polynomial& x, const Polynomial& y) {
  std::vector<Monomial> ms = x.monomials();
  ms.insert(ms.end(), y.monomials().begin(), y.monomials().end());
  return Polynomial::from_monomials(std::move(ms));
}

Polynomial poly_mul(const Polynomial& x, const Polynomial& y) {
  // One product stream per monomial of y, each inheriting x's order, plus the
  // Inf carry-over streams for both factors.
  std::vector<std::vector<Monomial>> streams;
  streams.reserve(y.monomials().size() + 2);
  for (const Monomial& ym : y.monomials()) {
    std::vector<Monomial> s;
    s.reserve(x.monomials().size());
    for (const Monomial& xm : x.monomials()) {
      if (auto prod = mono_product(xm, ym)) s.push_back(std::move(*prod));
    }
    if (!s.empty()) streams.push_back(std::move(s));
  }
  if (auto inf = x.inf_monomials(); !inf.empty()) streams.push_back(std::move(inf));
  if (auto inf = y.inf_monomials(); !inf.empty()) streams.push_back(std::move(inf));

  // Frontier merge: repeatedly extract the least current head.
  struct Head {
    const std::vector<Monomial>* stream;
    std::size_t index;
  };
  auto later = [](const Head& a, const Head& b) {
    const Monomial& ma = (*a.stream)[a.index];
    const Monomial& mb = (*b.stream)[b.index];
    if (auto c = delta_list_order(ma.deltas, mb.deltas); c != 0) return c > 0;
    return ma.scalar > mb.scalar;
  };
  std::priority_queue<Head, std::vector<Head>, decltype(later)> frontier(later);
  for (const auto& s : streams) frontier.push(Head{&s, 0});

  std::vector<Monomial> out;
  while (!frontier.empty()) {
    Head h = frontier.top();
    frontier.pop();
    out.push_back((*h.stream)[h.index]);
    if (++h.index < h.stream->size()) frontier.push(h);
  }
  // The per-stream order is not always preserved by the monomial product, so
  // canonicalization re-sorts and prunes.
  return Polynomial::from_monomials(std::move(out));
}

Coeff poly_eval(const Polynomial& x, const Assignment& a) {
  Coeff acc = Coeff::Zero;
  for (const Monomial& m : x.monomials())
    if (deltas_match(m.deltas, a)) acc = coeff_add(acc, m.scalar);
  return acc;
}

bool poly_equiv(const Polynomial& x, const Polynomial& y, const ChoiceDomains& d,
                std::uint64_t cap) {
  d.assignment_count(cap);
  for (Assignment a = first_assignment(d);;) {
    if (poly_eval(x, a) != poly_eval(y, a)) return false;
    auto nxt = next_assignment(d, a);
    if (!nxt) return true;
    a = std::move(*nxt);
  }
}

}  // namespace mwp
