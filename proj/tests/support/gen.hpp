#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mwp/ast.hpp"
#include "mwp/matrix.hpp"
#include "mwp/polynomial.hpp"

namespace mwp::testsupport {

// Deterministic enumeration of call-free command sequences over three
// variables, wrapped as functions. Commands weigh 1 plus their bodies;
// `maxWeight` bounds the total. Weights above `fullWeight` are
// stride-sampled to keep the corpus at desk scale.
std::vector<FunDecl> enumerate_corpus(int fullWeight, int maxWeight,
                                      std::size_t sampleStride);

// Random nested expression tree over the given variables (for normalization
// tests; depth 0 yields a bare variable).
Expr random_expr(std::mt19937& rng, const std::vector<std::string>& vars, int depth);

// Random call-free function, possibly with nested expressions.
FunDecl random_function(std::mt19937& rng, int maxCmds, int exprDepth);

struct PolyGenOptions {
  std::uint32_t positions = 4;
  std::uint32_t card = 3;
  std::size_t maxMonomials = 6;
  bool allowInf = true;
};

Polynomial random_polynomial(std::mt19937& rng, const PolyGenOptions& opt);
Monomial random_monomial(std::mt19937& rng, const PolyGenOptions& opt);
PolyMatrix random_matrix(std::mt19937& rng, std::size_t n, const PolyGenOptions& opt);

ChoiceDomains uniform_domains(std::uint32_t positions, std::uint32_t card);

}  // namespace mwp::testsupport
