#include "mwp/ast.hpp"

#include <sstream>

namespace mwp {

bool same_expr(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Expr::Kind::Var) return a.name == b.name;
  if (a.op != b.op || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!same_expr(a.args[i], b.args[i])) return false;
  return true;
}

bool same_cmd(const Cmd& a, const Cmd& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Cmd::Kind::Assign:
      return a.target == b.target && same_expr(a.expr, b.expr);
    case Cmd::Kind::Call: {
      if (a.target != b.target || a.callee != b.callee || a.args.size() != b.args.size())
        return false;
      for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!same_expr(a.args[i], b.args[i])) return false;
      return true;
    }
    case Cmd::Kind::If:
      return same_seq(a.body, b.body) && same_seq(a.elseBody, b.elseBody);
    case Cmd::Kind::While:
      return same_seq(a.body, b.body);
    case Cmd::Kind::Loop:
      return a.counter == b.counter && same_seq(a.body, b.body);
  }
  return false;
}

bool same_seq(const CmdSeq& a, const CmdSeq& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_cmd(a[i], b[i])) return false;
  return true;
}

bool same_fun(const FunDecl& a, const FunDecl& b) {
  return a.name == b.name && a.params == b.params && a.returnVar == b.returnVar &&
         same_seq(a.body, b.body);
}

bool same_program(const Program& a, const Program& b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i)
    if (!same_fun(a.decls[i], b.decls[i])) return false;
  return true;
}

namespace {

void print_expr(std::ostream& os, const Expr& e, bool parens) {
  if (e.is_var()) {
    os << e.name;
    return;
  }
  if (parens) os << "(";
  print_expr(os, e.args[0], true);
  os << " " << e.op << " ";
  print_expr(os, e.args[1], true);
  if (parens) os << ")";
}

void print_seq(std::ostream& os, const CmdSeq& seq, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const Cmd& c : seq) {
    switch (c.kind) {
      case Cmd::Kind::Assign:
        os << pad << c.target << " = ";
        print_expr(os, c.expr, false);
        os << ";\n";
        break;
      case Cmd::Kind::Call: {
        os << pad << c.target << " = " << c.callee << "(";
        for (std::size_t i = 0; i < c.args.size(); ++i) {
          if (i) os << ", ";
          print_expr(os, c.args[i], false);
        }
        os << ");\n";
        break;
      }
      case Cmd::Kind::If:
        os << pad << "if (b) {\n";
        print_seq(os, c.body, indent + 1);
        os << pad << "}";
        if (!c.elseBody.empty()) {
          os << " else {\n";
          print_seq(os, c.elseBody, indent + 1);
          os << pad << "}";
        }
        os << "\n";
        break;
      case Cmd::Kind::While:
        os << pad << "while (b) {\n";
        print_seq(os, c.body, indent + 1);
        os << pad << "}\n";
        break;
      case Cmd::Kind::Loop:
        os << pad << "loop " << c.counter << " {\n";
        print_seq(os, c.body, indent + 1);
        os << pad << "}\n";
        break;
    }
  }
}

}  // namespace

std::string pretty_print(const Expr& e) {
  std::ostringstream os;
  print_expr(os, e, false);
  return os.str();
}

std::string pretty_print(const FunDecl& f) {
  std::ostringstream os;
  os << "int " << f.name << "(";
  for (std::size_t i = 0; i < f.params.size(); ++i) {
    if (i) os << ", ";
    os << "int " << f.params[i];
  }
  os << ") {\n";
  print_seq(os, f.body, 1);
  os << "  return " << f.returnVar << ";\n}\n";
  return os.str();
}

std::string pretty_print(const Program& p) {
  std::string out;
  for (std::size_t i = 0; i < p.decls.size(); ++i) {
    if (i) out += "\n";
    out += pretty_print(p.decls[i]);
  }
  return out;
}

}  // namespace mwp
