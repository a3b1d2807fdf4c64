#include "mwp/deltagraph.hpp"

#include <algorithm>

namespace mwp {

void DeltaGraph::insert(const ChoiceDomains& domains, DeltaList deltas) {
  if (!add_list(std::move(deltas))) return;
  fuse_families(domains);
}

// Adds one list under subsumption: dropped when a stored subset covers it,
// and stored supersets are removed. Returns whether the graph changed.
bool DeltaGraph::add_list(DeltaList deltas) {
  for (const auto& [len, lists] : layers_) {
    if (len > deltas.size()) break;
    for (const DeltaList& d : lists)
      if (delta_list_subset(d, deltas)) return false;
  }
  for (auto it = layers_.begin(); it != layers_.end();) {
    if (it->first > deltas.size()) {
      auto& lists = it->second;
      for (auto sit = lists.begin(); sit != lists.end();)
        sit = delta_list_subset(deltas, *sit) ? lists.erase(sit) : std::next(sit);
    }
    it = it->second.empty() ? layers_.erase(it) : std::next(it);
  }
  layers_[deltas.size()].insert(std::move(deltas));
  return true;
}

bool DeltaGraph::is_covered(const DeltaList& deltas) const {
  for (const auto& [len, lists] : layers_) {
    if (len > deltas.size()) break;
    for (const DeltaList& d : lists)
      if (delta_list_subset(d, deltas)) return true;
  }
  return false;
}

// Saturating fusion. A sibling family at one position fuses as soon as every
// value is stored or covered by a stored subset (subsumption may have eaten a
// sibling that is nevertheless represented), with at least one sibling
// actually stored; the family collapses to the list without that position.
void DeltaGraph::fuse_families(const ChoiceDomains& domains) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto layerIt = layers_.begin(); layerIt != layers_.end() && !changed;
         ++layerIt) {
      for (const DeltaList& m : layerIt->second) {
        for (std::size_t qi = 0; qi < m.size() && !changed; ++qi) {
          const std::uint32_t pos = m[qi].position;
          const std::uint32_t card = domains.size_of(pos);
          DeltaList rest = m;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(qi));
          auto sibling = [&](std::uint32_t v) {
            DeltaList s = rest;
            s.insert(s.begin() + static_cast<std::ptrdiff_t>(qi), Delta{v, pos});
            return s;
          };
          bool fusable = true;
          for (std::uint32_t v = 0; v < card && fusable; ++v) {
            const DeltaList s = sibling(v);
            fusable = layerIt->second.count(s) > 0 || is_covered(s);
          }
          if (!fusable) continue;
          for (std::uint32_t v = 0; v < card; ++v) layerIt->second.erase(sibling(v));
          if (layerIt->second.empty()) layers_.erase(layerIt);
          add_list(std::move(rest));
          changed = true;
        }
        if (changed) break;
      }
    }
  }
}

bool DeltaGraph::complete() const {
  auto it = layers_.find(0);
  return it != layers_.end() && !it->second.empty();
}

bool DeltaGraph::empty() const { return layers_.empty(); }

bool DeltaGraph::matches(const Assignment& a) const {
  for (const auto& [len, lists] : layers_)
    for (const DeltaList& d : lists)
      if (deltas_match(d, a)) return true;
  return false;
}

std::size_t DeltaGraph::list_count() const {
  std::size_t n = 0;
  for (const auto& [len, lists] : layers_) n += lists.size();
  return n;
}

namespace {

const DeltaList* find_match(const DeltaGraph& g, const Assignment& a) {
  for (const auto& [len, lists] : g.layers())
    for (const DeltaList& d : lists)
      if (deltas_match(d, a)) return &d;
  return nullptr;
}

// Increment at position q, zeroing the less significant positions; carry runs
// toward position 0. False when the odometer wraps past the end.
bool bump_at(const ChoiceDomains& domains, Assignment& a, std::size_t q) {
  std::fill(a.begin() + static_cast<std::ptrdiff_t>(q) + 1, a.end(), 0u);
  for (std::size_t k = q + 1; k-- > 0;) {
    if (a[k] + 1 < domains.size_of(static_cast<std::uint32_t>(k))) {
      ++a[k];
      return true;
    }
    a[k] = 0;
  }
  return false;
}

}  // namespace

std::optional<Assignment> dg_next_assignment(const DeltaGraph& g,
                                             const ChoiceDomains& domains,
                                             const std::optional<Assignment>& after) {
  Assignment a;
  if (after) {
    auto nxt = next_assignment(domains, *after);
    if (!nxt) return std::nullopt;
    a = std::move(*nxt);
  } else {
    a = first_assignment(domains);
  }
  for (;;) {
    const DeltaList* blocker = find_match(g, a);
    if (blocker == nullptr) return a;
    if (blocker->empty()) return std::nullopt;  // complete graph blocks everything
    // Every assignment up to the next change at the blocker's least
    // significant position stays inside the blocked cylinder, so carry there
    // directly.
    if (!bump_at(domains, a, blocker->back().position)) return std::nullopt;
  }
}

}  // namespace mwp
