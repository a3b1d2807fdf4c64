#pragma once

#include <set>
#include <string>
#include <vector>

#include "mwp/deltagraph.hpp"
#include "mwp/matrix.hpp"
#include "mwp/polynomial.hpp"

namespace mwp::testsupport {

// Distribute-every-pair product followed by canonicalization. Independent of
// the ordered-merge path; exact for Inf-free inputs.
Polynomial naive_poly_mul(const Polynomial& x, const Polynomial& y);

std::vector<Assignment> all_assignments(const ChoiceDomains& d);

// Assignments matched by no list of the graph, by brute force.
std::vector<Assignment> brute_force_unmatched(const DeltaGraph& g, const ChoiceDomains& d);

// The Inf-free evaluations of a polynomial matrix, as a byte-keyed set.
std::set<std::string> inf_free_evaluations(const PolyMatrix& m, const ChoiceDomains& d);

}  // namespace mwp::testsupport
