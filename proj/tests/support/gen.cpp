#include "support/gen.hpp"

#include <functional>
#include <map>

namespace mwp::testsupport {

namespace {

const std::vector<std::string> kVars = {"X1", "X2", "X3"};

std::vector<Cmd> assign_commands() {
  // A representative expression alphabet: every rule orientation appears
  // (additive with distinct/equal operands, subtraction both ways,
  // multiplication with distinct/equal operands, copies).
  std::vector<Expr> exprs;
  exprs.push_back(Expr::bin('+', Expr::var("X1"), Expr::var("X2")));
  exprs.push_back(Expr::bin('+', Expr::var("X2"), Expr::var("X3")));
  exprs.push_back(Expr::bin('+', Expr::var("X1"), Expr::var("X1")));
  exprs.push_back(Expr::bin('-', Expr::var("X1"), Expr::var("X2")));
  exprs.push_back(Expr::bin('-', Expr::var("X3"), Expr::var("X1")));
  exprs.push_back(Expr::bin('*', Expr::var("X1"), Expr::var("X2")));
  exprs.push_back(Expr::bin('*', Expr::var("X2"), Expr::var("X2")));
  exprs.push_back(Expr::var("X2"));
  std::vector<Cmd> out;
  for (const std::string& target : kVars)
    for (const Expr& e : exprs) {
      Cmd c;
      c.kind = Cmd::Kind::Assign;
      c.target = target;
      c.expr = e;
      out.push_back(std::move(c));
    }
  return out;
}

class Enumerator {
 public:
  Enumerator(int fullWeight, int maxWeight, std::size_t stride)
      : fullWeight_(fullWeight), maxWeight_(maxWeight), stride_(std::max<std::size_t>(1, stride)) {}

  std::vector<FunDecl> run() {
    for (int w = 1; w <= maxWeight_; ++w) {
      for (const CmdSeq& seq : seqs(w)) {
        if (w > fullWeight_ && (counter_++ % stride_) != 0) continue;
        FunDecl f;
        f.name = "f";
        f.params = kVars;
        f.body = seq;
        f.returnVar = "X1";
        out_.push_back(std::move(f));
      }
    }
    return std::move(out_);
  }

 private:
  const std::vector<CmdSeq>& seqs(int w) {
    auto it = seqCache_.find(w);
    if (it != seqCache_.end()) return it->second;
    std::vector<CmdSeq> result;
    if (w == 0) {
      result.push_back({});
    } else {
      for (int k = 1; k <= w; ++k)
        for (const Cmd& head : cmds(k))
          for (const CmdSeq& rest : seqs(w - k)) {
            CmdSeq seq{head};
            seq.insert(seq.end(), rest.begin(), rest.end());
            result.push_back(std::move(seq));
          }
    }
    return seqCache_.emplace(w, std::move(result)).first->second;
  }

  const std::vector<Cmd>& cmds(int w) {
    auto it = cmdCache_.find(w);
    if (it != cmdCache_.end()) return it->second;
    std::vector<Cmd> result;
    if (w == 1) {
      result = assign_commands();
    } else {
      for (const CmdSeq& body : seqs(w - 1)) {
        if (body.empty()) continue;
        Cmd wh;
        wh.kind = Cmd::Kind::While;
        wh.body = body;
        result.push_back(std::move(wh));
        for (const std::string& counter : kVars) {
          Cmd lp;
          lp.kind = Cmd::Kind::Loop;
          lp.counter = counter;
          lp.body = body;
          result.push_back(std::move(lp));
        }
        Cmd ifNoElse;
        ifNoElse.kind = Cmd::Kind::If;
        ifNoElse.body = body;
        result.push_back(std::move(ifNoElse));
      }
      for (int a = 1; a < w - 1; ++a)
        for (const CmdSeq& thenB : seqs(a))
          for (const CmdSeq& elseB : seqs(w - 1 - a)) {
            if (thenB.empty() || elseB.empty()) continue;
            Cmd c;
            c.kind = Cmd::Kind::If;
            c.body = thenB;
            c.elseBody = elseB;
            result.push_back(std::move(c));
          }
    }
    return cmdCache_.emplace(w, std::move(result)).first->second;
  }

  int fullWeight_, maxWeight_;
  std::size_t stride_;
  std::size_t counter_ = 0;
  std::map<int, std::vector<CmdSeq>> seqCache_;
  std::map<int, std::vector<Cmd>> cmdCache_;
  std::vector<FunDecl> out_;
};

}  // namespace

std::vector<FunDecl> enumerate_corpus(int fullWeight, int maxWeight,
                                      std::size_t sampleStride) {
  return Enumerator(fullWeight, maxWeight, sampleStride).run();
}

Expr random_expr(std::mt19937& rng, const std::vector<std::string>& vars, int depth) {
  if (depth <= 0 || (rng() % 3) == 0)
    return Expr::var(vars[rng() % vars.size()]);
  static const char ops[] = {'+', '-', '*'};
  return Expr::bin(ops[rng() % 3], random_expr(rng, vars, depth - 1),
                   random_expr(rng, vars, depth - 1));
}

FunDecl random_function(std::mt19937& rng, int maxCmds, int exprDepth) {
  FunDecl f;
  f.name = "f";
  f.params = kVars;
  f.returnVar = "X1";
  std::function<CmdSeq(int)> gen = [&](int budget) {
    CmdSeq seq;
    while (budget > 0) {
      const int pick = static_cast<int>(rng() % 6);
      Cmd c;
      if (pick <= 2 || budget == 1) {
        c.kind = Cmd::Kind::Assign;
        c.target = kVars[rng() % kVars.size()];
        c.expr = random_expr(rng, kVars, exprDepth);
        budget -= 1;
      } else if (pick == 3) {
        c.kind = Cmd::Kind::If;
        c.body = gen(budget / 2 == 0 ? 1 : static_cast<int>(rng() % (budget / 2)) + 1);
        budget -= 1 + static_cast<int>(c.body.size());
        if ((rng() & 1) != 0 && budget > 0) {
          c.elseBody = gen(1);
          budget -= 1;
        }
      } else if (pick == 4) {
        c.kind = Cmd::Kind::While;
        c.body = gen(1 + static_cast<int>(rng() % 2));
        budget -= 1 + static_cast<int>(c.body.size());
      } else {
        c.kind = Cmd::Kind::Loop;
        c.counter = kVars[rng() % kVars.size()];
        c.body = gen(1 + static_cast<int>(rng() % 2));
        budget -= 1 + static_cast<int>(c.body.size());
      }
      seq.push_back(std::move(c));
      if (seq.size() >= static_cast<std::size_t>(maxCmds)) break;
    }
    return seq;
  };
  f.body = gen(maxCmds);
  if (f.body.empty()) {
    Cmd c;
    c.kind = Cmd::Kind::Assign;
    c.target = "X1";
    c.expr = Expr::var("X2");
    f.body.push_back(std::move(c));
  }
  return f;
}

Monomial random_monomial(std::mt19937& rng, const PolyGenOptions& opt) {
  static const Coeff finite[] = {Coeff::M, Coeff::W, Coeff::P};
  Monomial m;
  m.scalar = opt.allowInf && (rng() % 5 == 0) ? Coeff::Inf : finite[rng() % 3];
  for (std::uint32_t pos = 0; pos < opt.positions; ++pos)
    if (rng() % 2 == 0) m.deltas.push_back(Delta{static_cast<std::uint32_t>(rng() % opt.card), pos});
  return m;
}

Polynomial random_polynomial(std::mt19937& rng, const PolyGenOptions& opt) {
  std::vector<Monomial> ms;
  const std::size_t n = rng() % (opt.maxMonomials + 1);
  for (std::size_t i = 0; i < n; ++i) ms.push_back(random_monomial(rng, opt));
  return Polynomial::from_monomials(std::move(ms));
}

PolyMatrix random_matrix(std::mt19937& rng, std::size_t n, const PolyGenOptions& opt) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back("X" + std::to_string(i + 1));
  PolyMatrix m = PolyMatrix::zero(vars);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_polynomial(rng, opt);
  return m;
}

ChoiceDomains uniform_domains(std::uint32_t positions, std::uint32_t card) {
  ChoiceDomains d;
  for (std::uint32_t i = 0; i < positions; ++i) d.allocate(card);
  return d;
}

}  // namespace mwp::testsupport
