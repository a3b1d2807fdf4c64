#include <cctype>
#include <string_view>

#include "mwp/frontend.hpp"

namespace mwp {

namespace {

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  SourcePos pos;
};

const char* kUnsupportedKeywords[] = {"for",    "do",   "switch", "case",
                                      "break",  "goto", "struct", "union",
                                      "float",  "char", "double", "void",
                                      "signed", "unsigned", "long", "short"};

bool is_unsupported_keyword(std::string_view s) {
  for (const char* k : kUnsupportedKeywords)
    if (s == k) return true;
  return false;
}

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      SourcePos p{line_, col_};
      if (i_ >= src_.size()) {
        out.push_back({Token::Kind::End, "", p});
        return out;
      }
      char c = src_[i_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id;
        while (i_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
          id += advance();
        out.push_back({Token::Kind::Ident, std::move(id), p});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_])))
          num += advance();
        out.push_back({Token::Kind::Int, std::move(num), p});
      } else {
        static const char* two[] = {"<=", ">=", "==", "!=", "&&", "||"};
        std::string punct(1, c);
        if (i_ + 1 < src_.size()) {
          std::string pair{c, src_[i_ + 1]};
          for (const char* t : two)
            if (pair == t) punct = pair;
        }
        static const std::string singles = "(){};,=+-*<>!%/&[]#.";
        if (punct.size() == 1 && singles.find(c) == std::string::npos)
          throw ParseError(p, std::string("unexpected character '") + c + "'");
        for (std::size_t k = 0; k < punct.size(); ++k) advance();
        out.push_back({Token::Kind::Punct, std::move(punct), p});
      }
    }
  }

 private:
  char advance() {
    char c = src_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    for (;;) {
      while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_])))
        advance();
      if (i_ + 1 < src_.size() && src_[i_] == '/' && src_[i_ + 1] == '/') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
        continue;
      }
      if (i_ + 1 < src_.size() && src_[i_] == '/' && src_[i_ + 1] == '*') {
        SourcePos p{line_, col_};
        advance();
        advance();
        while (i_ + 1 < src_.size() && !(src_[i_] == '*' && src_[i_ + 1] == '/')) advance();
        if (i_ + 1 >= src_.size()) throw ParseError(p, "unterminated comment");
        advance();
        advance();
        continue;
      }
      return;
    }
  }

  const std::string& src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program run() {
    Program prog;
    while (!at_end()) prog.decls.push_back(fundecl(prog));
    if (prog.decls.empty()) throw ParseError(peek().pos, "expected a function declaration");
    return prog;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(i_ + ahead, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  Token next() { return toks_[std::min(i_++, toks_.size() - 1)]; }

  bool is_punct(const std::string& s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Punct && peek(ahead).text == s;
  }
  bool is_ident(const std::string& s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Ident && peek(ahead).text == s;
  }

  Token expect_punct(const std::string& s) {
    if (!is_punct(s))
      throw ParseError(peek().pos, "expected '" + s + "', found '" + peek().text + "'");
    return next();
  }

  std::string expect_name() {
    if (peek().kind != Token::Kind::Ident)
      throw ParseError(peek().pos, "expected an identifier, found '" + peek().text + "'");
    const Token t = next();
    if (is_unsupported_keyword(t.text))
      throw ParseError(t.pos, "unsupported construct '" + t.text + "'");
    if (t.text == "int" || t.text == "if" || t.text == "else" || t.text == "while" ||
        t.text == "loop" || t.text == "return")
      throw ParseError(t.pos, "expected an identifier, found keyword '" + t.text + "'");
    if (t.text.rfind("__", 0) == 0)
      throw ParseError(t.pos, "identifiers starting with '__' are reserved");
    return t.text;
  }

  FunDecl fundecl(const Program& sofar) {
    SourcePos p = peek().pos;
    if (!is_ident("int")) throw ParseError(p, "expected 'int' to start a function");
    next();
    FunDecl f;
    f.pos = p;
    f.name = expect_name();
    for (const FunDecl& d : sofar.decls)
      if (d.name == f.name) throw ParseError(p, "function '" + f.name + "' redeclared");
    expect_punct("(");
    if (!is_punct(")")) {
      for (;;) {
        if (is_ident("int")) next();
        std::string param = expect_name();
        for (const std::string& q : f.params)
          if (q == param) throw ParseError(p, "duplicate parameter '" + param + "'");
        f.params.push_back(std::move(param));
        if (is_punct(",")) {
          next();
          continue;
        }
        break;
      }
    }
    expect_punct(")");
    expect_punct("{");
    while (!is_ident("return")) {
      if (at_end() || is_punct("}"))
        throw ParseError(peek().pos, "expected 'return' before the end of the function");
      f.body.push_back(stmt());
    }
    next();  // return
    f.returnVar = expect_name();
    expect_punct(";");
    expect_punct("}");
    if (!var_occurs(f, f.returnVar))
      throw ParseError(p, "returned variable '" + f.returnVar +
                              "' does not occur in function '" + f.name + "'");
    return f;
  }

  static bool var_occurs_expr(const Expr& e, const std::string& v) {
    if (e.is_var()) return e.name == v;
    for (const Expr& a : e.args)
      if (var_occurs_expr(a, v)) return true;
    return false;
  }

  static bool var_occurs_seq(const CmdSeq& seq, const std::string& v) {
    for (const Cmd& c : seq) {
      switch (c.kind) {
        case Cmd::Kind::Assign:
          if (c.target == v || var_occurs_expr(c.expr, v)) return true;
          break;
        case Cmd::Kind::Call:
          if (c.target == v) return true;
          for (const Expr& a : c.args)
            if (var_occurs_expr(a, v)) return true;
          break;
        case Cmd::Kind::Loop:
          if (c.counter == v || var_occurs_seq(c.body, v)) return true;
          break;
        case Cmd::Kind::If:
          if (var_occurs_seq(c.body, v) || var_occurs_seq(c.elseBody, v)) return true;
          break;
        case Cmd::Kind::While:
          if (var_occurs_seq(c.body, v)) return true;
          break;
      }
    }
    return false;
  }

  static bool var_occurs(const FunDecl& f, const std::string& v) {
    for (const std::string& q : f.params)
      if (q == v) return true;
    return var_occurs_seq(f.body, v);
  }

  CmdSeq block() {
    expect_punct("{");
    CmdSeq seq;
    while (!is_punct("}")) {
      if (at_end()) throw ParseError(peek().pos, "expected '}'");
      seq.push_back(stmt());
    }
    next();
    return seq;
  }

  Cmd stmt() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Ident) {
      if (is_unsupported_keyword(t.text))
        throw ParseError(t.pos, "unsupported construct '" + t.text + "'");
      if (t.text == "if") return if_stmt();
      if (t.text == "while") return while_stmt();
      if (t.text == "loop") return loop_stmt();
      if (t.text == "int")
        throw ParseError(t.pos, "local declarations are not supported; assign directly");
      return assign_stmt();
    }
    throw ParseError(t.pos, "expected a statement, found '" + t.text + "'");
  }

  Cmd assign_stmt() {
    Cmd c;
    c.pos = peek().pos;
    c.target = expect_name();
    expect_punct("=");
    if (peek().kind == Token::Kind::Ident && is_punct("(", 1) &&
        !is_unsupported_keyword(peek().text)) {
      c.kind = Cmd::Kind::Call;
      c.callee = expect_name();
      expect_punct("(");
      if (!is_punct(")")) {
        for (;;) {
          c.args.push_back(expr());
          if (is_punct(",")) {
            next();
            continue;
          }
          break;
        }
      }
      expect_punct(")");
    } else {
      c.kind = Cmd::Kind::Assign;
      c.expr = expr();
    }
    expect_punct(";");
    return c;
  }

  Cmd if_stmt() {
    Cmd c;
    c.kind = Cmd::Kind::If;
    c.pos = next().pos;
    expect_punct("(");
    condition();
    expect_punct(")");
    c.body = block();
    if (is_ident("else")) {
      next();
      c.elseBody = block();
    }
    return c;
  }

  Cmd while_stmt() {
    Cmd c;
    c.kind = Cmd::Kind::While;
    c.pos = next().pos;
    expect_punct("(");
    condition();
    expect_punct(")");
    c.body = block();
    return c;
  }

  Cmd loop_stmt() {
    Cmd c;
    c.kind = Cmd::Kind::Loop;
    c.pos = next().pos;
    c.counter = expect_name();
    c.body = block();
    return c;
  }

  // Arithmetic expressions: +, -, * over variables; literals are rejected
  // here (they are only admitted inside conditions).
  Expr expr() {
    Expr e = term();
    while (is_punct("+") || is_punct("-")) {
      Token op = next();
      e = Expr::bin(op.text[0], std::move(e), term(), op.pos);
    }
    return e;
  }

  Expr term() {
    Expr e = factor();
    while (is_punct("*")) {
      Token op = next();
      e = Expr::bin('*', std::move(e), factor(), op.pos);
    }
    return e;
  }

  Expr factor() {
    if (is_punct("(")) {
      next();
      Expr e = expr();
      expect_punct(")");
      return e;
    }
    if (peek().kind == Token::Kind::Int)
      throw ParseError(peek().pos,
                       "integer literals are only allowed inside conditions");
    if (is_punct("-") || is_punct("&") || is_punct("*"))
      throw ParseError(peek().pos, "unsupported construct '" + peek().text + "'");
    SourcePos p = peek().pos;
    return Expr::var(expect_name(), p);
  }

  // Conditions are validated and discarded; they have no impact on the rules.
  void condition() { cond_or(); }

  void cond_or() {
    cond_and();
    while (is_punct("||")) {
      next();
      cond_and();
    }
  }

  void cond_and() {
    cond_not();
    while (is_punct("&&")) {
      next();
      cond_not();
    }
  }

  void cond_not() {
    if (is_punct("!")) {
      next();
      cond_not();
      return;
    }
    cond_cmp();
  }

  void cond_cmp() {
    cond_sum();
    static const char* cmps[] = {"<", ">", "<=", ">=", "==", "!="};
    for (const char* op : cmps) {
      if (is_punct(op)) {
        next();
        cond_sum();
        return;
      }
    }
  }

  void cond_sum() {
    cond_term();
    while (is_punct("+") || is_punct("-")) {
      next();
      cond_term();
    }
  }

  void cond_term() {
    cond_atom();
    while (is_punct("*") || is_punct("/") || is_punct("%")) {
      next();
      cond_atom();
    }
  }

  void cond_atom() {
    if (is_punct("(")) {
      next();
      cond_or();
      expect_punct(")");
      return;
    }
    if (is_punct("-")) {
      next();
      cond_atom();
      return;
    }
    if (peek().kind == Token::Kind::Int) {
      next();
      return;
    }
    expect_name();
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Program parse(const std::string& source, const std::string&) {
  return Parser(Lexer(source).run()).run();
}

}  // namespace mwp
