#include "mwp/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace mwp {

namespace {

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("matrix dimension/variable mismatch");
}

}  // namespace

CoeffMatrix CoeffMatrix::identity(std::size_t n) {
  CoeffMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Coeff::M;
  return m;
}

bool CoeffMatrix::contains_inf() const {
  for (Coeff c : e_)
    if (c == Coeff::Inf) return true;
  return false;
}

std::string CoeffMatrix::bytes() const {
  std::string s;
  s.reserve(e_.size());
  for (Coeff c : e_) s.push_back(static_cast<char>(c));
  return s;
}

std::string CoeffMatrix::str(const std::vector<std::string>& vars) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i < vars.size() ? vars[i] : std::to_string(i)) << ":";
    for (std::size_t j = 0; j < n_; ++j) os << " " << coeff_char(at(i, j));
    os << "\n";
  }
  return os.str();
}

CoeffMatrix coeff_mat_add(const CoeffMatrix& a, const CoeffMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  CoeffMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      c.at(i, j) = coeff_add(a.at(i, j), b.at(i, j));
  return c;
}

CoeffMatrix coeff_mat_mul(const CoeffMatrix& a, const CoeffMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  CoeffMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Coeff acc = Coeff::Zero;
      for (std::size_t k = 0; k < a.dim(); ++k)
        acc = coeff_add(acc, coeff_mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = acc;
    }
  return c;
}

CoeffMatrix coeff_mat_star(const CoeffMatrix& a) {
  CoeffMatrix b = coeff_mat_add(CoeffMatrix::identity(a.dim()), a);
  for (;;) {
    CoeffMatrix sq = coeff_mat_mul(b, b);
    if (sq == b) return b;
    b = std::move(sq);
  }
}

PolyMatrix PolyMatrix::zero(std::vector<std::string> vars) {
  PolyMatrix m;
  m.vars_ = std::move(vars);
  m.e_.assign(m.vars_.size() * m.vars_.size(), Polynomial::zero());
  return m;
}

PolyMatrix PolyMatrix::identity(std::vector<std::string> vars) {
  PolyMatrix m = zero(std::move(vars));
  for (std::size_t i = 0; i < m.dim(); ++i)
    m.at(i, i) = Polynomial::constant(Coeff::M);
  return m;
}

std::string PolyMatrix::str() const {
  std::size_t width = 0;
  for (const std::string& v : vars_) width = std::max(width, v.size());
  std::vector<std::size_t> colw(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    colw[j] = vars_[j].size();
    for (std::size_t i = 0; i < dim(); ++i)
      colw[j] = std::max(colw[j], at(i, j).str().size());
  }
  std::ostringstream os;
  os << std::string(width, ' ');
  for (std::size_t j = 0; j < dim(); ++j) {
    os << "  " << vars_[j] << std::string(colw[j] - vars_[j].size(), ' ');
  }
  os << "\n";
  for (std::size_t i = 0; i < dim(); ++i) {
    os << vars_[i] << std::string(width - vars_[i].size(), ' ');
    for (std::size_t j = 0; j < dim(); ++j) {
      const std::string s = at(i, j).str();
      os << "  " << s << std::string(colw[j] - s.size(), ' ');
    }
    os << "\n";
  }
  return os.str();
}

PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix c = PolyMatrix::zero(a.vars());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      c.at(i, j) = poly_add(a.at(i, j), b.at(i, j));
  return c;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix c = PolyMatrix::zero(a.vars());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Polynomial acc;
      for (std::size_t k = 0; k < a.dim(); ++k)
        acc = poly_add(acc, poly_mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = std::move(acc);
    }
  return c;
}

PolyMatrix mat_star(const PolyMatrix& a) {
  PolyMatrix b = mat_add(PolyMatrix::identity(a.vars()), a);
  for (;;) {
    PolyMatrix sq = mat_mul(b, b);
    if (sq == b) return b;
    b = std::move(sq);
  }
}

CoeffMatrix mat_eval(const PolyMatrix& a, const Assignment& assignment) {
  CoeffMatrix m(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      m.at(i, j) = poly_eval(a.at(i, j), assignment);
  return m;
}

PolyMatrix column_replace(PolyMatrix a, std::size_t j, const PolyVector& v) {
  if (j >= a.dim() || v.dim() != a.dim())
    throw std::out_of_range("column index or vector size out of range");
  for (std::size_t i = 0; i < a.dim(); ++i) a.at(i, j) = v.entries[i];
  return a;
}

}  // namespace mwp
