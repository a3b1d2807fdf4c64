#include "mwp/analysis.hpp"

#include <algorithm>

#include "mwp/frontend.hpp"

namespace mwp {

namespace {

std::size_t var_index(const std::vector<std::string>& vars, const std::string& name,
                      SourcePos pos) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  throw AnalysisError(pos, "unknown variable '" + name + "'");
}

Polynomial ternary_choice(Coeff at0, Coeff at1, Coeff at2, std::uint32_t q) {
  std::vector<Monomial> ms;
  if (at0 != Coeff::Zero) ms.push_back(Monomial{at0, {Delta{0, q}}});
  if (at1 != Coeff::Zero) ms.push_back(Monomial{at1, {Delta{1, q}}});
  if (at2 != Coeff::Zero) ms.push_back(Monomial{at2, {Delta{2, q}}});
  return Polynomial::from_monomials(std::move(ms));
}

bool covered_by(const Monomial& m, const std::vector<DeltaList>& doom) {
  for (const DeltaList& d : doom)
    if (delta_list_subset(d, m.deltas)) return true;
  return false;
}

// Shared implementation of the two iteration rules. Entries keep their closure
// form outside the Inf-marked choice regions and fall back to the pre-closure
// body matrix inside them, so a doomed choice stays marked without inheriting
// closure growth; per assignment this agrees with the original side conditions
// wherever no Inf is introduced.
PolyMatrix loop_like(const PolyMatrix& body, bool isWhile,
                     std::size_t counterIdx, AnalysisContext& ctx) {
  const PolyMatrix closure = mat_star(body);
  const std::size_t n = closure.dim();

  std::vector<DeltaList> doom;
  for (std::size_t j = 0; j < n; ++j)
    for (const Monomial& m : closure.at(j, j).monomials())
      if (m.scalar > Coeff::M) doom.push_back(m.deltas);
  if (isWhile) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const Monomial& m : closure.at(i, j).monomials())
          if (m.scalar == Coeff::P) doom.push_back(m.deltas);
  }

  PolyMatrix out = PolyMatrix::zero(closure.vars());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Monomial> ms;
      for (const Monomial& m : closure.at(i, j).monomials())
        if (!covered_by(m, doom)) ms.push_back(m);
      for (const Monomial& m : body.at(i, j).monomials())
        if (covered_by(m, doom)) ms.push_back(m);
      out.at(i, j) = Polynomial::from_monomials(std::move(ms));
    }

  auto mark_inf = [&](std::size_t i, std::size_t j, const DeltaList& deltas) {
    out.at(i, j) =
        poly_add(out.at(i, j), Polynomial::monomial(Monomial{Coeff::Inf, deltas}));
    ctx.graph.insert(ctx.domains, deltas);
  };

  for (std::size_t j = 0; j < n; ++j)
    for (const Monomial& m : closure.at(j, j).monomials())
      if (m.scalar > Coeff::M) mark_inf(j, j, m.deltas);

  if (isWhile) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const Monomial& m : closure.at(i, j).monomials())
          if (m.scalar == Coeff::P) mark_inf(i, j, m.deltas);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const Monomial& m : closure.at(i, j).monomials())
          if (m.scalar == Coeff::P && !covered_by(m, doom))
            out.at(counterIdx, j) = poly_add(
                out.at(counterIdx, j),
                Polynomial::monomial(Monomial{Coeff::P, m.deltas}));
  }
  return out;
}

PolyVector call_column(const Cmd& call, const FunctionSummary& summary,
                       AnalysisContext& ctx) {
  const std::size_t n = ctx.vars.size();
  PolyVector col = PolyVector::zeros(n);

  if (summary.infinityFallback) {
    // The callee admits no Inf-free assignment, so the call contributes an
    // unconditional Inf on every argument row.
    if (ctx.diagnostics)
      ctx.diagnostics->push_back("call to '" + call.callee +
                                 "' has no polynomially bounded summary; "
                                 "marking the call infinite");
    ctx.graph.insert(ctx.domains, {});
    for (const Expr& a : call.args) {
      const std::size_t row = var_index(ctx.vars, a.name, call.pos);
      col.entries[row] = Polynomial::constant(Coeff::Inf);
    }
    return col;
  }

  const std::size_t k = summary.vectors.size();
  std::optional<std::uint32_t> q;
  if (k >= 2) {
    q = ctx.domains.allocate(static_cast<std::uint32_t>(k));
    ctx.provenance.push_back({call.pos, "call"});
  }

  for (std::size_t t = 0; t < k; ++t) {
    // Collapse parameter flows onto argument rows; one caller variable may
    // feed several parameters.
    std::vector<Coeff> rowFlow(n, Coeff::Zero);
    for (std::size_t pk = 0; pk < call.args.size(); ++pk) {
      const std::size_t row = var_index(ctx.vars, call.args[pk].name, call.pos);
      rowFlow[row] = coeff_add(rowFlow[row], summary.vectors[t].paramFlows[pk]);
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (rowFlow[row] == Coeff::Zero) continue;
      DeltaList deltas;
      if (q) deltas.push_back(Delta{static_cast<std::uint32_t>(t), *q});
      col.entries[row] = poly_add(col.entries[row],
                                  Polynomial::monomial(Monomial{rowFlow[row], deltas}));
    }
  }
  return col;
}

}  // namespace

PolyVector analyze_expr(const Expr& e, const std::vector<std::string>& vars,
                        ChoiceDomains& domains, std::optional<std::size_t> target,
                        std::vector<ChoiceProvenance>* provenance) {
  PolyVector v = PolyVector::zeros(vars.size());
  if (e.is_var()) {
    v.entries[var_index(vars, e.name, e.pos)] = Polynomial::constant(Coeff::M);
    return v;
  }
  if (!e.args[0].is_var() || !e.args[1].is_var())
    throw AnalysisError(e.pos, "expression is not in three-address form");
  const std::size_t i = var_index(vars, e.args[0].name, e.pos);
  const std::size_t j = var_index(vars, e.args[1].name, e.pos);

  if (e.op == '*') {
    v.entries[i] = Polynomial::constant(Coeff::W);
    v.entries[j] = Polynomial::constant(Coeff::W);
    return v;
  }

  const std::uint32_t q = domains.allocate(3);
  if (provenance) provenance->push_back({e.pos, "expr"});
  if (i == j) {
    v.entries[i] = ternary_choice(Coeff::P, Coeff::P, Coeff::W, q);
    return v;
  }
  if (target && *target == j) {
    v.entries[i] = ternary_choice(Coeff::P, Coeff::M, Coeff::W, q);
    v.entries[j] = ternary_choice(Coeff::M, Coeff::P, Coeff::W, q);
  } else {
    v.entries[i] = ternary_choice(Coeff::M, Coeff::P, Coeff::W, q);
    v.entries[j] = ternary_choice(Coeff::P, Coeff::M, Coeff::W, q);
  }
  return v;
}

PolyMatrix analyze_cmd(const Cmd& c, AnalysisContext& ctx) {
  switch (c.kind) {
    case Cmd::Kind::Assign: {
      const std::size_t tgt = var_index(ctx.vars, c.target, c.pos);
      const PolyVector v =
          analyze_expr(c.expr, ctx.vars, ctx.domains, tgt, &ctx.provenance);
      return column_replace(PolyMatrix::identity(ctx.vars), tgt, v);
    }
    case Cmd::Kind::Call: {
      const FunctionSummary& summary = ctx.lookup(c.callee, c.pos);
      const std::size_t tgt = var_index(ctx.vars, c.target, c.pos);
      return column_replace(PolyMatrix::identity(ctx.vars), tgt,
                            call_column(c, summary, ctx));
    }
    case Cmd::Kind::If: {
      const PolyMatrix thenM = analyze_seq(c.body, ctx);
      const PolyMatrix elseM = analyze_seq(c.elseBody, ctx);
      return mat_add(thenM, elseM);
    }
    case Cmd::Kind::While: {
      const PolyMatrix body = analyze_seq(c.body, ctx);
      return loop_like(body, /*isWhile=*/true, 0, ctx);
    }
    case Cmd::Kind::Loop: {
      const PolyMatrix body = analyze_seq(c.body, ctx);
      const std::size_t l = var_index(ctx.vars, c.counter, c.pos);
      return loop_like(body, /*isWhile=*/false, l, ctx);
    }
  }
  throw AnalysisError(c.pos, "unreachable command kind");
}

PolyMatrix analyze_seq(const CmdSeq& seq, AnalysisContext& ctx) {
  // Fold the composition rule pairwise, without a seeding identity: in the
  // extended semi-ring 1 is not neutral on Inf-carrying matrices (Inf times
  // Zero stays Inf), and the rules compose commands directly.
  if (seq.empty()) return PolyMatrix::identity(ctx.vars);
  PolyMatrix acc = analyze_cmd(seq.front(), ctx);
  for (std::size_t i = 1; i < seq.size(); ++i)
    acc = mat_mul(acc, analyze_cmd(seq[i], ctx));
  return acc;
}

Analyzer::Analyzer(Program parsed, AnalysisLimits limits)
    : program_(normalize_three_address(parsed)), limits_(limits) {
  for (std::size_t i = 0; i < program_.decls.size(); ++i) {
    const FunDecl& f = program_.decls[i];
    index_.emplace(f.name, i);
    // Calls may only reference earlier declarations or the function itself.
    std::function<void(const CmdSeq&)> check = [&](const CmdSeq& seq) {
      for (const Cmd& c : seq) {
        if (c.kind == Cmd::Kind::Call) {
          auto it = index_.find(c.callee);
          if (it == index_.end())
            throw AnalysisError(
                c.pos, "unknown function '" + c.callee +
                           "' (functions must be declared before use; mutual "
                           "recursion is not supported)");
          const FunDecl& callee = program_.decls[it->second];
          if (c.args.size() != callee.params.size())
            throw AnalysisError(c.pos, "call to '" + c.callee + "' passes " +
                                           std::to_string(c.args.size()) +
                                           " arguments, expected " +
                                           std::to_string(callee.params.size()));
        }
        check(c.body);
        check(c.elseBody);
      }
    };
    check(f.body);
  }
}

std::vector<std::string> Analyzer::function_names() const {
  std::vector<std::string> names;
  names.reserve(program_.decls.size());
  for (const FunDecl& f : program_.decls) names.push_back(f.name);
  return names;
}

const FunDecl& Analyzer::decl(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw AnalysisError({}, "unknown function '" + name + "'");
  return program_.decls[it->second];
}

SummaryLookup Analyzer::lookup_for(const FunDecl& f, const FunctionSummary* selfSummary) {
  return [this, &f, selfSummary](const std::string& callee,
                                 SourcePos at) -> const FunctionSummary& {
    if (callee == f.name) {
      if (selfSummary == nullptr)
        throw AnalysisError(at, "recursive call outside the fixpoint solver");
      return *selfSummary;
    }
    return summary(callee);
  };
}

FunctionAnalysis Analyzer::analyze_function(const FunDecl& f) {
  FunctionAnalysis out;
  const bool selfRecursive = [&] {
    std::function<bool(const CmdSeq&)> rec = [&](const CmdSeq& seq) {
      for (const Cmd& c : seq) {
        if (c.kind == Cmd::Kind::Call && c.callee == f.name) return true;
        if (rec(c.body) || rec(c.elseBody)) return true;
      }
      return false;
    };
    return rec(f.body);
  }();

  FunctionSummary recursionSummary;
  if (selfRecursive) {
    recursionSummary = solve_recursion(f);
    if (recursionSummary.infinityFallback)
      out.diagnostics.push_back("recursive function '" + f.name +
                                "' has no Inf-free fixpoint solution");
    summaries_[f.name] = recursionSummary;
  }

  out.result.vars = collect_vars(f);
  AnalysisContext ctx{out.result.vars,
                      out.result.domains,
                      out.result.provenance,
                      out.graph,
                      lookup_for(f, selfRecursive ? &recursionSummary : nullptr),
                      &out.diagnostics};
  out.result.matrix = analyze_seq(f.body, ctx);
  return out;
}

const FunctionAnalysis& Analyzer::function(const std::string& name) {
  auto it = analyses_.find(name);
  if (it != analyses_.end()) return it->second;
  FunctionAnalysis fa = analyze_function(decl(name));
  return analyses_.emplace(name, std::move(fa)).first->second;
}

FunctionSummary Analyzer::summarize(const FunDecl& f) {
  const FunctionAnalysis& fa = function(f.name);
  const std::vector<std::string>& vars = fa.result.vars;
  const std::size_t retCol = var_index(vars, f.returnVar, f.pos);

  FunctionSummary s;
  std::vector<std::string> seen;
  std::uint64_t steps = 0;
  std::optional<Assignment> a = dg_next_assignment(fa.graph, fa.result.domains, {});
  while (a) {
    if (++steps > limits_.summaryEnumeration)
      throw AnalysisError(f.pos, "function '" + f.name +
                                     "' has too many derivations to summarize");
    const CoeffMatrix m = mat_eval(fa.result.matrix, *a);
    if (!m.contains_inf()) {
      SummaryVector v;
      v.returnFlow = m.at(retCol, retCol);
      for (std::size_t k = 0; k < f.params.size(); ++k)
        v.paramFlows.push_back(m.at(var_index(vars, f.params[k], f.pos), retCol));
      v.witness = *a;
      std::string key;
      for (Coeff c : v.paramFlows) key.push_back(coeff_char(c));
      key.push_back(coeff_char(v.returnFlow));
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(key);
        s.vectors.push_back(std::move(v));
      }
    }
    a = dg_next_assignment(fa.graph, fa.result.domains, a);
  }
  if (s.vectors.empty()) s.infinityFallback = true;
  return s;
}

const FunctionSummary& Analyzer::summary(const std::string& name) {
  auto it = summaries_.find(name);
  if (it != summaries_.end()) return it->second;
  const FunDecl& f = decl(name);
  function(name);  // a recursive function stores its summary as a side effect
  it = summaries_.find(name);
  if (it != summaries_.end()) return it->second;
  return summaries_.emplace(name, summarize(f)).first->second;
}

FunctionSummary Analyzer::solve_recursion(const FunDecl& f) {
  const std::size_t r = f.params.size();
  if (r > limits_.recursionParams)
    throw AnalysisError(f.pos, "recursive function '" + f.name +
                                   "' has too many parameters to solve");
  const std::vector<std::string> vars = collect_vars(f);
  const std::size_t retCol = var_index(vars, f.returnVar, f.pos);
  const bool returnIsParam =
      std::find(f.params.begin(), f.params.end(), f.returnVar) != f.params.end();

  // Enumerate candidate summary vectors over the five grades and analyze the
  // body with each; a candidate solves an assignment's equation system when
  // the return column reproduces it there.
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < r; ++k) total *= kAllCoeffs.size();

  struct Run {
    std::vector<Coeff> v;
    PolyMatrix matrix;
  };
  std::vector<Run> runs;
  ChoiceDomains bodyDomains;
  for (std::uint64_t enc = 0; enc < total; ++enc) {
    std::vector<Coeff> v(r);
    std::uint64_t rest = enc;
    for (std::size_t k = 0; k < r; ++k) {
      v[k] = kAllCoeffs[rest % kAllCoeffs.size()];
      rest /= kAllCoeffs.size();
    }
    FunctionSummary candidate;
    candidate.fromRecursion = true;
    candidate.vectors.push_back(SummaryVector{v, Coeff::Zero, {}});

    ChoiceDomains domains;
    std::vector<ChoiceProvenance> prov;
    DeltaGraph graph;
    std::vector<std::string> diags;
    AnalysisContext ctx{vars, domains, prov, graph, lookup_for(f, &candidate), &diags};
    PolyMatrix m = analyze_seq(f.body, ctx);
    if (enc == 0)
      bodyDomains = domains;
    else if (!(bodyDomains == domains))
      throw AnalysisError(f.pos, "recursion solving produced unstable choice domains");
    runs.push_back(Run{std::move(v), std::move(m)});
  }

  // Per body assignment, gather the solutions and keep the minimal ones,
  // preferring solutions without Zero components: the all-Zero valuation
  // solves every system vacuously and carries no flow information.
  auto leq = [](const std::vector<Coeff>& a, const std::vector<Coeff>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > b[k]) return false;
    return true;
  };
  std::vector<std::pair<std::vector<Coeff>, Assignment>> collected;
  for (std::optional<Assignment> a = first_assignment(bodyDomains); a;
       a = next_assignment(bodyDomains, *a)) {
    std::vector<std::vector<Coeff>> solutions;
    for (const Run& run : runs) {
      const CoeffMatrix m = mat_eval(run.matrix, *a);
      bool ok = true;
      for (std::size_t k = 0; k < r && ok; ++k)
        ok = m.at(var_index(vars, f.params[k], f.pos), retCol) == run.v[k];
      if (ok && !returnIsParam) ok = m.at(retCol, retCol) == Coeff::Zero;
      if (ok) solutions.push_back(run.v);
    }
    std::vector<std::vector<Coeff>> pool;
    for (const auto& v : solutions)
      if (std::find(v.begin(), v.end(), Coeff::Zero) == v.end()) pool.push_back(v);
    if (pool.empty()) pool = solutions;
    for (const auto& v : pool) {
      bool minimal = true;
      for (const auto& w : pool)
        if (!(w == v) && leq(w, v)) {
          minimal = false;
          break;
        }
      if (minimal && std::find(v.begin(), v.end(), Coeff::Inf) == v.end())
        collected.emplace_back(v, *a);
    }
  }

  // Deduplicate and drop dominated vectors; all others are larger.
  FunctionSummary s;
  s.fromRecursion = true;
  s.recursionSolutions = collected;
  for (const auto& [v, witness] : collected) {
    bool dominated = false;
    for (const auto& [w, w2] : collected)
      if (!(w == v) && leq(w, v)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    bool dup = false;
    for (const SummaryVector& sv : s.vectors) dup |= (sv.paramFlows == v);
    if (!dup)
      s.vectors.push_back(SummaryVector{
          v, returnIsParam ? v[static_cast<std::size_t>(
                                 std::find(f.params.begin(), f.params.end(),
                                           f.returnVar) -
                                 f.params.begin())]
                           : Coeff::Zero,
          witness});
  }
  if (s.vectors.empty()) s.infinityFallback = true;
  return s;
}

void Analyzer::analyze_all() {
  for (const FunDecl& f : program_.decls) function(f.name);
}

std::string render_bound(const std::vector<Coeff>& flows,
                         const std::vector<std::string>& vars) {
  std::string ms, ws, ps;
  for (std::size_t i = 0; i < flows.size(); ++i) {
    std::string* dst = nullptr;
    switch (flows[i]) {
      case Coeff::Zero: continue;
      case Coeff::M: dst = &ms; break;
      case Coeff::W: dst = &ws; break;
      case Coeff::P: dst = &ps; break;
      case Coeff::Inf:
        throw std::invalid_argument("cannot render a bound containing Inf");
    }
    if (!dst->empty()) *dst += ", ";
    *dst += vars[i];
  }
  std::string head;
  if (!ms.empty() && !ws.empty())
    head = "max(" + ms + ", p1(" + ws + "))";
  else if (!ms.empty())
    head = "max(" + ms + ")";
  else if (!ws.empty())
    head = "p1(" + ws + ")";
  std::string tail = ps.empty() ? "" : "p2(" + ps + ")";
  if (head.empty() && tail.empty()) return "0";
  if (head.empty()) return tail;
  if (tail.empty()) return head;
  return head + " + " + tail;
}

Assignment map_assignment_psi(const Assignment& caller, const CallChoiceMap& m) {
  std::uint32_t tag = 0;
  if (m.callerPosition) {
    if (*m.callerPosition >= caller.size())
      throw std::out_of_range("caller position outside the assignment");
    if (*m.callerPosition != m.inlinedBlockStart)
      throw std::invalid_argument(
          "call choice must sit where the inlined block starts");
    tag = caller[*m.callerPosition];
  }
  if (tag >= m.tagToCalleeAssignment.size())
    throw std::out_of_range("summary tag out of range");
  const Assignment& block = m.tagToCalleeAssignment[tag];
  if (block.size() != m.inlinedBlockLen)
    throw std::invalid_argument("callee assignment does not fill the inlined block");

  Assignment out;
  out.insert(out.end(), caller.begin(),
             caller.begin() + std::min<std::size_t>(m.inlinedBlockStart, caller.size()));
  out.insert(out.end(), block.begin(), block.end());
  std::size_t resume = m.inlinedBlockStart + (m.callerPosition ? 1 : 0);
  if (resume < caller.size())
    out.insert(out.end(), caller.begin() + static_cast<std::ptrdiff_t>(resume),
               caller.end());
  return out;
}

}  // namespace mwp
