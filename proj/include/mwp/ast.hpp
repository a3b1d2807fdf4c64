#pragma once

#include <string>
#include <vector>

namespace mwp {

struct SourcePos {
  int line = 0;
  int col = 0;
};

// Arithmetic expression; after three-address normalization every Bin has two
// Var children.
struct Expr {
  enum class Kind { Var, Bin };

  Kind kind = Kind::Var;
  std::string name;        // Var
  char op = 0;             // Bin: '+', '-', '*'
  std::vector<Expr> args;  // Bin: exactly two
  SourcePos pos;

  static Expr var(std::string n, SourcePos p = {}) {
    Expr e;
    e.name = std::move(n);
    e.pos = p;
    return e;
  }
  static Expr bin(char op, Expr l, Expr r, SourcePos p = {}) {
    Expr e;
    e.kind = Kind::Bin;
    e.op = op;
    e.args.push_back(std::move(l));
    e.args.push_back(std::move(r));
    e.pos = p;
    return e;
  }
  bool is_var() const { return kind == Kind::Var; }
};

bool same_expr(const Expr& a, const Expr& b);  // structural, ignoring positions

struct Cmd;
using CmdSeq = std::vector<Cmd>;

// Boolean conditions are parsed for syntax but not stored; they play no role
// in the analysis.
struct Cmd {
  enum class Kind { Assign, If, While, Loop, Call };

  Kind kind = Kind::Assign;
  SourcePos pos;
  std::string target;      // Assign, Call
  Expr expr;               // Assign rhs
  std::string callee;      // Call
  std::vector<Expr> args;  // Call arguments (Var after normalization)
  std::string counter;     // Loop
  CmdSeq body;             // If-then, While, Loop
  CmdSeq elseBody;         // If-else
};

bool same_cmd(const Cmd& a, const Cmd& b);
bool same_seq(const CmdSeq& a, const CmdSeq& b);

struct FunDecl {
  std::string name;
  std::vector<std::string> params;
  CmdSeq body;
  std::string returnVar;
  SourcePos pos;
};

bool same_fun(const FunDecl& a, const FunDecl& b);

struct Program {
  std::vector<FunDecl> decls;
};

bool same_program(const Program& a, const Program& b);

std::string pretty_print(const Expr& e);
std::string pretty_print(const FunDecl& f);
std::string pretty_print(const Program& p);

}  // namespace mwp
