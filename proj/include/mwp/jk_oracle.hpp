#pragma once

#include <set>
#include <vector>

#include "mwp/ast.hpp"
#include "mwp/matrix.hpp"

namespace mwp {

// Exhaustive enumeration of the original nondeterministic (Jones-Kristiansen)
// derivations on call-free commands. The original calculus has no Inf: loop
// and while premises violating the side conditions simply fail.
//
// `fullE2` additionally enumerates the dominated derivations where a bare
// variable takes the w-vector (E2 on an atom); the restricted mode matches
// the deterministic system's choices exactly.
std::vector<std::vector<Coeff>> jk_expr(const Expr& e,
                                        const std::vector<std::string>& vars,
                                        bool fullE2 = false);

std::vector<CoeffMatrix> jk_cmd_set(const CmdSeq& seq,
                                    const std::vector<std::string>& vars,
                                    bool fullE2 = false);

struct JkBudget {
  std::size_t maxChoicePositions = 8;
  std::uint64_t maxAssignments = 1u << 16;
};

// Theorem-style comparison: the deterministic engine's Inf-free evaluations
// equal the oracle's derivation set (modulo dominated E2-on-variable
// derivations, i.e. against the restricted oracle). Call-free bodies only.
bool jk_equals_deterministic(const FunDecl& f, const JkBudget& budget = {});

}  // namespace mwp
