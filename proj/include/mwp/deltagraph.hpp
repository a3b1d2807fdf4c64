#pragma once

#include <map>
#include <optional>
#include <set>

#include "mwp/polynomial.hpp"

namespace mwp {

// Layered index of the delta lists that carry Inf. Layer n holds lists of n
// deltas; sibling families that cover every value of one position fuse into
// the list without that position. Fully fused to the empty list exactly when
// no assignment is Inf-free.
class DeltaGraph {
 public:
  DeltaGraph() = default;

  // Adds a canonical delta list unless a stored subset already covers it;
  // stored supersets are dropped and fusion is applied to saturation.
  void insert(const ChoiceDomains& domains, DeltaList deltas);

  bool complete() const;
  bool empty() const;
  // True iff some stored list matches a.
  bool matches(const Assignment& a) const;

  const std::map<std::size_t, std::set<DeltaList>>& layers() const { return layers_; }
  std::size_t list_count() const;

  friend bool operator==(const DeltaGraph&, const DeltaGraph&) = default;

 private:
  bool add_list(DeltaList deltas);
  bool is_covered(const DeltaList& deltas) const;
  void fuse_families(const ChoiceDomains& domains);

  std::map<std::size_t, std::set<DeltaList>> layers_;
};

// Lexicographically least assignment strictly greater than `after` (odometer
// order, position 0 most significant) matched by no stored list; nullopt when
// exhausted. Blocked cylinders are skipped by carrying directly past the
// offending value. `after == nullopt` starts before the first assignment.
std::optional<Assignment> dg_next_assignment(const DeltaGraph& g,
                                             const ChoiceDomains& domains,
                                             const std::optional<Assignment>& after);

}  // namespace mwp
