#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mwp/polynomial.hpp"
#include "mwp/semiring.hpp"

namespace mwp {

// Column vector over Polynomial, indexed like the enclosing analysis's vars.
struct PolyVector {
  std::vector<Polynomial> entries;

  std::size_t dim() const { return entries.size(); }
  static PolyVector zeros(std::size_t n) { return PolyVector{std::vector<Polynomial>(n)}; }
  friend bool operator==(const PolyVector&, const PolyVector&) = default;
};

// Plain matrix over Coeff, the per-assignment image of a PolyMatrix.
class CoeffMatrix {
 public:
  CoeffMatrix() = default;
  explicit CoeffMatrix(std::size_t n) : n_(n), e_(n * n, Coeff::Zero) {}
  static CoeffMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  Coeff at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  Coeff& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  bool contains_inf() const;
  // Stable byte key for set membership.
  std::string bytes() const;
  std::string str(const std::vector<std::string>& vars) const;

  friend bool operator==(const CoeffMatrix&, const CoeffMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Coeff> e_;
};

CoeffMatrix coeff_mat_add(const CoeffMatrix& a, const CoeffMatrix& b);
CoeffMatrix coeff_mat_mul(const CoeffMatrix& a, const CoeffMatrix& b);
CoeffMatrix coeff_mat_star(const CoeffMatrix& a);

// Square matrix of Polynomials over the tracked variables; entry (i, j)
// records how Xi's initial value flows into Xj's final value.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  static PolyMatrix zero(std::vector<std::string> vars);
  static PolyMatrix identity(std::vector<std::string> vars);

  std::size_t dim() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return e_[i * dim() + j]; }
  Polynomial& at(std::size_t i, std::size_t j) { return e_[i * dim() + j]; }

  std::string str() const;
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::vector<std::string> vars_;
  std::vector<Polynomial> e_;
};

PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
// Least fixpoint of X -> 1 + A*X, by repeated squaring of (1 + A) until the
// entries stabilize.
PolyMatrix mat_star(const PolyMatrix& a);
CoeffMatrix mat_eval(const PolyMatrix& a, const Assignment& assignment);
PolyMatrix column_replace(PolyMatrix a, std::size_t j, const PolyVector& v);

}  // namespace mwp
