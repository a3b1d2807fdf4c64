#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mwp/semiring.hpp"

namespace mwp {

// delta(value, position): the indicator valued m when choice `position` takes
// `value`, Zero otherwise. Products of deltas carve out cylinder sets of
// assignments.
struct Delta {
  std::uint32_t value = 0;
  std::uint32_t position = 0;

  friend bool operator==(const Delta&, const Delta&) = default;
  // Canonical key order: by position, then value.
  friend auto operator<=>(const Delta& a, const Delta& b) {
    if (auto c = a.position <=> b.position; c != 0) return c;
    return a.value <=> b.value;
  }
};

using DeltaList = std::vector<Delta>;  // sorted by position, one per position

// Lexicographic on (position, value) pairs; a strict prefix sorts first.
std::strong_ordering delta_list_order(const DeltaList& a, const DeltaList& b);
bool delta_list_less(const DeltaList& a, const DeltaList& b);
// Subset test on delta sets (both sorted by position).
bool delta_list_subset(const DeltaList& sub, const DeltaList& super);

// A scalar grade times a product of deltas. Zero scalars are never stored.
struct Monomial {
  Coeff scalar = Coeff::M;
  DeltaList deltas;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  std::string str() const;
};

// Pointwise product; empty when the deltas contradict (two values at one
// position) so the product denotes the constant-Zero function.
std::optional<Monomial> mono_product(const Monomial& x, const Monomial& y);

// True iff dropping `specific` from a polynomial containing both leaves the
// denoted function unchanged: general matches everywhere specific does, with
// an at-least-as-large grade.
bool mono_subsumes(const Monomial& general, const Monomial& specific);

// Per-position cardinalities of the choice space. Positions are allocated
// densely from 0.
class ChoiceDomains {
 public:
  ChoiceDomains() = default;
  explicit ChoiceDomains(std::vector<std::uint32_t> sizes) : sizes_(std::move(sizes)) {}

  std::uint32_t allocate(std::uint32_t card) {
    sizes_.push_back(card);
    return static_cast<std::uint32_t>(sizes_.size() - 1);
  }
  std::size_t count() const { return sizes_.size(); }
  std::uint32_t size_of(std::uint32_t position) const;
  const std::vector<std::uint32_t>& sizes() const { return sizes_; }

  // Number of total assignments; throws domain_too_large beyond `cap`.
  std::uint64_t assignment_count(std::uint64_t cap) const;

  friend bool operator==(const ChoiceDomains&, const ChoiceDomains&) = default;

 private:
  std::vector<std::uint32_t> sizes_;
};

// A total choice of one value per position, odometer-ordered with position 0
// most significant.
using Assignment = std::vector<std::uint32_t>;

// First assignment (all zeros); empty optional when called on the last one.
Assignment first_assignment(const ChoiceDomains& d);
std::optional<Assignment> next_assignment(const ChoiceDomains& d, Assignment a);

bool deltas_match(const DeltaList& deltas, const Assignment& a);

// Canonical sum of monomials: merged per delta list, sorted in the canonical
// order, free of subsumed monomials. Denotes a function from assignments to
// Coeff (empty list = constant Zero).
class Polynomial {
 public:
  Polynomial() = default;  // Zero
  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Coeff c);
  static Polynomial monomial(Monomial m);
  // Canonicalizes an arbitrary monomial soup.
  static Polynomial from_monomials(std::vector<Monomial> ms);

  const std::vector<Monomial>& monomials() const { return ms_; }
  bool is_zero() const { return ms_.empty(); }
  bool is_constant(Coeff c) const {
    return ms_.size() == 1 && ms_[0].deltas.empty() && ms_[0].scalar == c;
  }
  // Monomials with an Inf grade (used to carry Inf through products).
  std::vector<Monomial> inf_monomials() const;

  std::string str() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Monomial> ms_;
};

// Pointwise max.
Polynomial poly_add(const Polynomial& x, const Polynomial& y);
// Pointwise coeff_mul. Ordered-merge of the per-monomial product streams,
// plus the Inf monomials of both factors (Inf * Zero = Inf: an Inf region of
// either factor survives multiplication by anything, including the empty
// polynomial).
Polynomial poly_mul(const Polynomial& x, const Polynomial& y);

Coeff poly_eval(const Polynomial& x, const Assignment& a);

inline constexpr std::uint64_t kDefaultEquivCap = 1u << 21;

// Semantic equality: equal under poly_eval at every assignment of d.
bool poly_equiv(const Polynomial& x, const Polynomial& y, const ChoiceDomains& d,
                std::uint64_t cap = kDefaultEquivCap);

}  // namespace mwp
