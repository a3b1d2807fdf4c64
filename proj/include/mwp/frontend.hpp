#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwp/ast.hpp"

namespace mwp {

struct ParseError : std::runtime_error {
  ParseError(SourcePos p, const std::string& msg)
      : std::runtime_error(std::to_string(p.line) + ":" + std::to_string(p.col) +
                           ": " + msg),
        pos(p) {}
  SourcePos pos;
};

// Parses the C-like subset: int functions over int parameters, assignments,
// if/while with discarded conditions, and the nonstandard `loop X { ... }`.
// Arithmetic keeps full binary trees until normalization; integer literals
// are admitted only inside conditions.
Program parse(const std::string& source, const std::string& filename = "<input>");

// Splits nested expressions (and non-variable call arguments) into fresh
// `__tN` temporaries, left-to-right.
Program normalize_three_address(const Program& p);
FunDecl normalize_three_address(const FunDecl& f);

// Parameters first in declaration order, then locals and temporaries in first
// occurrence order.
std::vector<std::string> collect_vars(const FunDecl& f);

// Replaces the `occurrence`-th call to `callee` in the caller body with the
// parameter copies, the renamed callee body and the final copy out of the
// fresh return slot (callee params become X__pk, the returned variable __R).
// Throws on a recursive callee or a fresh-name collision.
FunDecl inline_call(const FunDecl& caller, const FunDecl& callee,
                    std::size_t occurrence = 0);

}  // namespace mwp
