#include "mwp/jk_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "mwp/analysis.hpp"
#include "mwp/frontend.hpp"

namespace mwp {

namespace {

std::size_t var_index(const std::vector<std::string>& vars, const std::string& name) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  throw std::invalid_argument("unknown variable '" + name + "'");
}

std::vector<Coeff> unit(std::size_t n, std::size_t i, Coeff c) {
  std::vector<Coeff> v(n, Coeff::Zero);
  v[i] = c;
  return v;
}

std::vector<Coeff> vec_add(std::vector<Coeff> a, const std::vector<Coeff>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = coeff_add(a[i], b[i]);
  return a;
}

std::vector<Coeff> vec_scale(Coeff s, std::vector<Coeff> a) {
  for (Coeff& c : a) c = coeff_mul(s, c);
  return a;
}

void dedup_vectors(std::vector<std::vector<Coeff>>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

std::vector<CoeffMatrix> dedup_matrices(std::vector<CoeffMatrix> ms) {
  std::sort(ms.begin(), ms.end(), [](const CoeffMatrix& a, const CoeffMatrix& b) {
    return a.bytes() < b.bytes();
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return ms;
}

}  // namespace

std::vector<std::vector<Coeff>> jk_expr(const Expr& e,
                                        const std::vector<std::string>& vars,
                                        bool fullE2) {
  const std::size_t n = vars.size();
  std::vector<std::vector<Coeff>> out;
  if (e.is_var()) {
    const std::size_t i = var_index(vars, e.name);
    out.push_back(unit(n, i, Coeff::M));               // E1
    if (fullE2) out.push_back(unit(n, i, Coeff::W));   // E2 on an atom
    dedup_vectors(out);
    return out;
  }
  if (!e.args[0].is_var() || !e.args[1].is_var())
    throw std::invalid_argument("oracle requires three-address expressions");
  const std::size_t i = var_index(vars, e.args[0].name);
  const std::size_t j = var_index(vars, e.args[1].name);

  // E2 applies to any expression: w on every occurring variable.
  std::vector<Coeff> e2 = unit(n, i, Coeff::W);
  e2[j] = Coeff::W;
  out.push_back(e2);

  if (e.op == '+' || e.op == '-') {
    const std::vector<std::vector<Coeff>> lefts = jk_expr(e.args[0], vars, fullE2);
    const std::vector<std::vector<Coeff>> rights = jk_expr(e.args[1], vars, fullE2);
    for (const auto& v1 : lefts)
      for (const auto& v2 : rights) {
        out.push_back(vec_add(vec_scale(Coeff::P, v1), v2));  // E3
        out.push_back(vec_add(v1, vec_scale(Coeff::P, v2)));  // E4
      }
  }
  dedup_vectors(out);
  return out;
}

namespace {

std::vector<CoeffMatrix> jk_cmd(const Cmd& c, const std::vector<std::string>& vars,
                                bool fullE2) {
  const std::size_t n = vars.size();
  std::vector<CoeffMatrix> out;
  switch (c.kind) {
    case Cmd::Kind::Assign: {
      const std::size_t j = var_index(vars, c.target);
      for (const auto& v : jk_expr(c.expr, vars, fullE2)) {
        CoeffMatrix m = CoeffMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = v[i];
        out.push_back(std::move(m));
      }
      break;
    }
    case Cmd::Kind::If: {
      for (const CoeffMatrix& m1 : jk_cmd_set(c.body, vars, fullE2))
        for (const CoeffMatrix& m2 : jk_cmd_set(c.elseBody, vars, fullE2))
          out.push_back(coeff_mat_add(m1, m2));
      break;
    }
    case Cmd::Kind::While: {
      for (const CoeffMatrix& m : jk_cmd_set(c.body, vars, fullE2)) {
        const CoeffMatrix star = coeff_mat_star(m);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = star.at(i, i) == Coeff::M;
        for (std::size_t i = 0; i < n && ok; ++i)
          for (std::size_t j = 0; j < n && ok; ++j) ok = star.at(i, j) != Coeff::P;
        if (ok) out.push_back(star);
      }
      break;
    }
    case Cmd::Kind::Loop: {
      const std::size_t l = var_index(vars, c.counter);
      for (const CoeffMatrix& m : jk_cmd_set(c.body, vars, fullE2)) {
        CoeffMatrix star = coeff_mat_star(m);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = star.at(i, i) == Coeff::M;
        if (!ok) continue;
        for (std::size_t j = 0; j < n; ++j) {
          bool hasP = false;
          for (std::size_t i = 0; i < n; ++i) hasP |= star.at(i, j) == Coeff::P;
          if (hasP) star.at(l, j) = coeff_add(star.at(l, j), Coeff::P);
        }
        out.push_back(std::move(star));
      }
      break;
    }
    case Cmd::Kind::Call:
      throw std::invalid_argument("the original calculus has no function calls");
  }
  return dedup_matrices(std::move(out));
}

}  // namespace

std::vector<CoeffMatrix> jk_cmd_set(const CmdSeq& seq,
                                    const std::vector<std::string>& vars,
                                    bool fullE2) {
  std::vector<CoeffMatrix> acc{CoeffMatrix::identity(vars.size())};
  for (const Cmd& c : seq) {
    std::vector<CoeffMatrix> next;
    for (const CoeffMatrix& m1 : acc)
      for (const CoeffMatrix& m2 : jk_cmd(c, vars, fullE2))
        next.push_back(coeff_mat_mul(m1, m2));
    acc = dedup_matrices(std::move(next));
  }
  return acc;
}

bool jk_equals_deterministic(const FunDecl& f, const JkBudget& budget) {
  Program p;
  p.decls.push_back(f);
  Analyzer analyzer(std::move(p));
  const FunctionAnalysis& fa = analyzer.function(f.name);
  if (fa.result.domains.count() > budget.maxChoicePositions)
    throw std::length_error("choice budget exceeded for the oracle comparison");
  fa.result.domains.assignment_count(budget.maxAssignments);

  std::set<std::string> detSet;
  for (std::optional<Assignment> a = first_assignment(fa.result.domains); a;
       a = next_assignment(fa.result.domains, *a)) {
    const CoeffMatrix m = mat_eval(fa.result.matrix, *a);
    if (!m.contains_inf()) detSet.insert(m.bytes());
  }

  const FunDecl normalized = normalize_three_address(f);
  std::set<std::string> oracleSet;
  for (const CoeffMatrix& m : jk_cmd_set(normalized.body, fa.result.vars, false))
    oracleSet.insert(m.bytes());
  return detSet == oracleSet;
}

}  // namespace mwp
