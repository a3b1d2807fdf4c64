#include <set>

#include "mwp/frontend.hpp"

namespace mwp {

namespace {

class Normalizer {
 public:
  CmdSeq run(const CmdSeq& seq) {
    CmdSeq out;
    for (const Cmd& c : seq) emit(c, out);
    return out;
  }

 private:
  void emit(const Cmd& c, CmdSeq& out) {
    switch (c.kind) {
      case Cmd::Kind::Assign: {
        Cmd flat = c;
        flat.expr = flatten_rhs(c.expr, out);
        out.push_back(std::move(flat));
        break;
      }
      case Cmd::Kind::Call: {
        Cmd flat = c;
        for (Expr& a : flat.args) {
          if (!a.is_var()) a = Expr::var(lower(a, out), a.pos);
        }
        out.push_back(std::move(flat));
        break;
      }
      case Cmd::Kind::If: {
        Cmd copy = c;
        copy.body = run(c.body);
        copy.elseBody = run(c.elseBody);
        out.push_back(std::move(copy));
        break;
      }
      case Cmd::Kind::While:
      case Cmd::Kind::Loop: {
        Cmd copy = c;
        copy.body = run(c.body);
        out.push_back(std::move(copy));
        break;
      }
    }
  }

  // The top-level rhs may keep one binary node; deeper nodes move to temps.
  Expr flatten_rhs(const Expr& e, CmdSeq& out) {
    if (e.is_var()) return e;
    Expr flat = e;
    for (Expr& a : flat.args) {
      if (!a.is_var()) a = Expr::var(lower(a, out), a.pos);
    }
    return flat;
  }

  // Lowers an arbitrary expression to a variable name, appending temporary
  // assignments left-to-right.
  std::string lower(const Expr& e, CmdSeq& out) {
    if (e.is_var()) return e.name;
    Cmd tmp;
    tmp.kind = Cmd::Kind::Assign;
    tmp.pos = e.pos;
    tmp.expr = flatten_rhs(e, out);
    tmp.target = "__t" + std::to_string(counter_++);
    out.push_back(tmp);
    return out.back().target;
  }

  unsigned counter_ = 0;
};

void add_var(std::vector<std::string>& out, std::set<std::string>& seen,
             const std::string& v) {
  if (seen.insert(v).second) out.push_back(v);
}

void collect_expr(const Expr& e, std::vector<std::string>& out,
                  std::set<std::string>& seen) {
  if (e.is_var()) {
    add_var(out, seen, e.name);
    return;
  }
  for (const Expr& a : e.args) collect_expr(a, out, seen);
}

void collect_seq(const CmdSeq& seq, std::vector<std::string>& out,
                 std::set<std::string>& seen) {
  for (const Cmd& c : seq) {
    switch (c.kind) {
      case Cmd::Kind::Assign:
        collect_expr(c.expr, out, seen);
        add_var(out, seen, c.target);
        break;
      case Cmd::Kind::Call:
        for (const Expr& a : c.args) collect_expr(a, out, seen);
        add_var(out, seen, c.target);
        break;
      case Cmd::Kind::If:
        collect_seq(c.body, out, seen);
        collect_seq(c.elseBody, out, seen);
        break;
      case Cmd::Kind::While:
        collect_seq(c.body, out, seen);
        break;
      case Cmd::Kind::Loop:
        collect_seq(c.body, out, seen);
        add_var(out, seen, c.counter);
        break;
    }
  }
}

void rename_expr(Expr& e, const std::string& from, const std::string& to) {
  if (e.is_var()) {
    if (e.name == from) e.name = to;
    return;
  }
  for (Expr& a : e.args) rename_expr(a, from, to);
}

void rename_seq(CmdSeq& seq, const std::string& from, const std::string& to) {
  for (Cmd& c : seq) {
    switch (c.kind) {
      case Cmd::Kind::Assign:
        if (c.target == from) c.target = to;
        rename_expr(c.expr, from, to);
        break;
      case Cmd::Kind::Call:
        if (c.target == from) c.target = to;
        for (Expr& a : c.args) rename_expr(a, from, to);
        break;
      case Cmd::Kind::If:
        rename_seq(c.body, from, to);
        rename_seq(c.elseBody, from, to);
        break;
      case Cmd::Kind::While:
        rename_seq(c.body, from, to);
        break;
      case Cmd::Kind::Loop:
        if (c.counter == from) c.counter = to;
        rename_seq(c.body, from, to);
        break;
    }
  }
}

bool calls_function(const CmdSeq& seq, const std::string& name) {
  for (const Cmd& c : seq) {
    switch (c.kind) {
      case Cmd::Kind::Call:
        if (c.callee == name) return true;
        break;
      case Cmd::Kind::If:
        if (calls_function(c.body, name) || calls_function(c.elseBody, name)) return true;
        break;
      case Cmd::Kind::While:
      case Cmd::Kind::Loop:
        if (calls_function(c.body, name)) return true;
        break;
      case Cmd::Kind::Assign:
        break;
    }
  }
  return false;
}

// Replaces the n-th call to `callee` (in-order) when found.
bool splice_call(CmdSeq& seq, const std::string& callee, std::size_t& remaining,
                 const CmdSeq& replacement) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Cmd& c = seq[i];
    if (c.kind == Cmd::Kind::Call && c.callee == callee) {
      if (remaining-- == 0) {
        CmdSeq tail(seq.begin() + static_cast<std::ptrdiff_t>(i) + 1, seq.end());
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(i), seq.end());
        seq.insert(seq.end(), replacement.begin(), replacement.end());
        seq.insert(seq.end(), tail.begin(), tail.end());
        return true;
      }
    } else if (c.kind == Cmd::Kind::If) {
      if (splice_call(c.body, callee, remaining, replacement) ||
          splice_call(c.elseBody, callee, remaining, replacement))
        return true;
    } else if (c.kind == Cmd::Kind::While || c.kind == Cmd::Kind::Loop) {
      if (splice_call(c.body, callee, remaining, replacement)) return true;
    }
  }
  return false;
}

const Cmd* find_call(const CmdSeq& seq, const std::string& callee, std::size_t& remaining) {
  for (const Cmd& c : seq) {
    if (c.kind == Cmd::Kind::Call && c.callee == callee) {
      if (remaining-- == 0) return &c;
    } else if (c.kind == Cmd::Kind::If) {
      if (const Cmd* r = find_call(c.body, callee, remaining)) return r;
      if (const Cmd* r = find_call(c.elseBody, callee, remaining)) return r;
    } else if (c.kind == Cmd::Kind::While || c.kind == Cmd::Kind::Loop) {
      if (const Cmd* r = find_call(c.body, callee, remaining)) return r;
    }
  }
  return nullptr;
}

}  // namespace

FunDecl normalize_three_address(const FunDecl& f) {
  FunDecl out = f;
  out.body = Normalizer().run(f.body);
  return out;
}

Program normalize_three_address(const Program& p) {
  Program out;
  out.decls.reserve(p.decls.size());
  for (const FunDecl& f : p.decls) out.decls.push_back(normalize_three_address(f));
  return out;
}

std::vector<std::string> collect_vars(const FunDecl& f) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const std::string& p : f.params) add_var(out, seen, p);
  collect_seq(f.body, out, seen);
  return out;
}

FunDecl inline_call(const FunDecl& caller, const FunDecl& callee, std::size_t occurrence) {
  if (calls_function(callee.body, callee.name))
    throw std::invalid_argument("cannot inline recursive function '" + callee.name + "'");
  std::size_t remaining = occurrence;
  const Cmd* site = find_call(caller.body, callee.name, remaining);
  if (site == nullptr)
    throw std::invalid_argument("no call to '" + callee.name + "' to inline");
  if (site->args.size() != callee.params.size())
    throw std::invalid_argument("call to '" + callee.name + "' has " +
                                std::to_string(site->args.size()) + " arguments, expected " +
                                std::to_string(callee.params.size()));

  const std::set<std::string> callerVars = [&] {
    auto v = collect_vars(caller);
    return std::set<std::string>(v.begin(), v.end());
  }();
  auto fresh_check = [&](const std::string& name) {
    if (callerVars.count(name))
      throw std::invalid_argument("fresh name '" + name + "' collides with a caller variable");
    return name;
  };

  // param k copies into X__pk; the returned variable becomes __R (a param
  // return slot skips its primed name entirely); other callee locals get a
  // __c suffix so they cannot capture caller variables.
  const std::string returnSlot = fresh_check("__R");
  CmdSeq replacement;
  CmdSeq renamedBody = callee.body;
  std::vector<std::string> primed(callee.params.size());
  for (std::size_t k = 0; k < callee.params.size(); ++k) {
    const bool isReturn = callee.params[k] == callee.returnVar;
    primed[k] = isReturn ? returnSlot : fresh_check("X__p" + std::to_string(k + 1));
    rename_seq(renamedBody, callee.params[k], primed[k]);
  }
  bool returnIsParam = false;
  for (const std::string& q : callee.params) returnIsParam |= (q == callee.returnVar);
  if (!returnIsParam) rename_seq(renamedBody, callee.returnVar, returnSlot);
  for (const std::string& local : collect_vars(callee)) {
    bool isParam = false;
    for (const std::string& q : callee.params) isParam |= (q == local);
    if (isParam || local == callee.returnVar) continue;
    rename_seq(renamedBody, local, fresh_check(local + "__c"));
  }

  for (std::size_t k = 0; k < callee.params.size(); ++k) {
    Cmd copy;
    copy.kind = Cmd::Kind::Assign;
    copy.target = primed[k];
    copy.expr = site->args[k];
    replacement.push_back(std::move(copy));
  }
  replacement.insert(replacement.end(), renamedBody.begin(), renamedBody.end());
  Cmd out;
  out.kind = Cmd::Kind::Assign;
  out.target = site->target;
  out.expr = Expr::var(returnSlot);
  replacement.push_back(std::move(out));

  FunDecl result = caller;
  std::size_t rem2 = occurrence;
  splice_call(result.body, callee.name, rem2, replacement);
  return result;
}

}  // namespace mwp
