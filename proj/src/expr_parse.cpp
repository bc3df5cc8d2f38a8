#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "qsc/expr.hpp"

namespace qsc {
namespace {

enum class Tok { Int, Ident, Op, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::vector<Token> tokenize(std::string_view src, int first_line) {
  std::vector<Token> out;
  int line = first_line, col = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    const char ch = src[i];
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++col;
      continue;
    }
    const SourcePos pos{line, col};
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), pos});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), pos});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (ch == '=' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::Op, "==", pos});
      i += 2;
      col += 2;
      continue;
    }
    static const std::string_view ops = "+-*/^(),;:=";
    if (ops.find(ch) == std::string_view::npos) throw SyntaxError(line, col, "a token (unexpected '" + std::string(1, ch) + "')");
    out.push_back({Tok::Op, std::string(1, ch), pos});
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

const std::set<std::string, std::less<>> kReserved = {"q", "qint", "phi", "poch", "sum"};

std::shared_ptr<Expr> node(ExprKind kind, SourcePos pos, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->pos = pos;
  e->args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[i_]; }
  bool at_op(std::string_view op) const { return peek().kind == Tok::Op && peek().text == op; }
  bool at_ident(std::string_view name) const { return peek().kind == Tok::Ident && peek().text == name; }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(peek().pos.line, peek().pos.col, expected);
  }

  Token take() { return toks_[i_++]; }

  void expect_op(std::string_view op) {
    if (!at_op(op)) fail("'" + std::string(op) + "'");
    ++i_;
  }

  std::string expect_ident(const char* what) {
    if (peek().kind != Tok::Ident || kReserved.count(peek().text)) fail(what);
    return take().text;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (at_op("+") || at_op("-")) {
      const Token t = take();
      lhs = node(t.text == "+" ? ExprKind::Add : ExprKind::Sub, t.pos, {lhs, term()});
    }
    return lhs;
  }

 private:
  ExprPtr term() {
    ExprPtr lhs = unary();
    while (at_op("*") || at_op("/")) {
      const Token t = take();
      lhs = node(t.text == "*" ? ExprKind::Mul : ExprKind::Div, t.pos, {lhs, unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (at_op("-")) {
      const Token t = take();
      return node(ExprKind::Neg, t.pos, {unary()});
    }
    return factor();
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (at_op("^")) {
      const Token t = take();
      return node(ExprKind::Pow, t.pos, {base, power_atom()});
    }
    return base;
  }

  ExprPtr power_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Int) return integer();
    if (t.kind == Tok::Ident && !kReserved.count(t.text)) return symbol();
    if (at_op("-")) {
      const Token m = take();
      return node(ExprKind::Neg, m.pos, {power_atom()});
    }
    if (at_op("(")) {
      take();
      ExprPtr e = expr();
      expect_op(")");
      return e;
    }
    fail("an integer exponent");
  }

  ExprPtr integer() {
    const Token t = take();
    auto e = node(ExprKind::Rational, t.pos);
    e->value = BigRat(t.text);
    return e;
  }

  ExprPtr symbol() {
    const Token t = take();
    auto e = node(ExprKind::Symbol, t.pos);
    e->name = t.text;
    return e;
  }

  ExprPtr atom() {
    const Token& t = peek();
    if (t.kind == Tok::Int) return integer();
    if (at_op("(")) {
      take();
      ExprPtr e = expr();
      expect_op(")");
      return e;
    }
    if (t.kind != Tok::Ident) fail("an expression");
    const SourcePos pos = t.pos;
    if (t.text == "q") {
      take();
      if (at_op("^")) {
        take();
        return node(ExprKind::QPower, pos, {power_atom()});
      }
      return node(ExprKind::QVar, pos);
    }
    if (t.text == "qint" || t.text == "phi") {
      const ExprKind kind = t.text == "qint" ? ExprKind::QInt : ExprKind::Phi;
      take();
      expect_op("(");
      ExprPtr arg = expr();
      expect_op(")");
      return node(kind, pos, {arg});
    }
    if (t.text == "poch") {
      take();
      expect_op("(");
      std::vector<ExprPtr> args{expr()};
      while (at_op(",")) {
        take();
        args.push_back(expr());
      }
      expect_op(";");
      if (!at_ident("q")) fail("'q' (the base q^step)");
      take();
      expect_op("^");
      args.push_back(power_atom());
      expect_op(";");
      args.push_back(expr());
      expect_op(")");
      return node(ExprKind::Poch, pos, std::move(args));
    }
    if (t.text == "sum") {
      take();
      expect_op("(");
      const std::string index = expect_ident("a summation index");
      expect_op(",");
      ExprPtr lo = expr();
      expect_op(",");
      ExprPtr hi = expr();
      expect_op(",");
      ExprPtr body = expr();
      expect_op(")");
      auto e = node(ExprKind::Sum, pos, {lo, hi, body});
      e->name = index;
      return e;
    }
    return symbol();
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

int precedence(ExprKind k) {
  switch (k) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Pow:
    case ExprKind::QPower: return 4;
    case ExprKind::Rational:
    case ExprKind::QVar:
    case ExprKind::QInt:
    case ExprKind::Phi:
    case ExprKind::Poch:
    case ExprKind::Sum:
    case ExprKind::Symbol: return 5;
  }
  return 0;
}

void print(const Expr& e, int min_prec, std::ostream& os);

void print_power(const Expr& e, std::ostream& os) {
  if ((e.kind == ExprKind::Rational && e.value >= 0 && e.value.get_den() == 1) || e.kind == ExprKind::Symbol) {
    print(e, 5, os);
  } else {
    os << "(";
    print(e, 0, os);
    os << ")";
  }
}

void print(const Expr& e, int min_prec, std::ostream& os) {
  const int prec = precedence(e.kind);
  const bool paren = prec < min_prec;
  if (paren) os << "(";
  switch (e.kind) {
    case ExprKind::Rational:
      if (e.value < 0 || e.value.get_den() != 1) os << "(" << e.value << ")";
      else os << e.value;
      break;
    case ExprKind::QVar: os << "q"; break;
    case ExprKind::QPower:
      os << "q^";
      print_power(*e.args[0], os);
      break;
    case ExprKind::QInt:
    case ExprKind::Phi:
      os << (e.kind == ExprKind::QInt ? "qint(" : "phi(");
      print(*e.args[0], 0, os);
      os << ")";
      break;
    case ExprKind::Poch: {
      os << "poch(";
      const std::size_t nargs = e.args.size() - 2;
      for (std::size_t i = 0; i < nargs; ++i) {
        if (i) os << ", ";
        print(*e.args[i], 0, os);
      }
      os << "; q^";
      print_power(*e.args[nargs], os);
      os << "; ";
      print(*e.args[nargs + 1], 0, os);
      os << ")";
      break;
    }
    case ExprKind::Sum:
      os << "sum(" << e.name << ", ";
      print(*e.args[0], 0, os);
      os << ", ";
      print(*e.args[1], 0, os);
      os << ", ";
      print(*e.args[2], 0, os);
      os << ")";
      break;
    case ExprKind::Symbol: os << e.name; break;
    case ExprKind::Neg:
      os << "-";
      print(*e.args[0], 3, os);
      break;
    case ExprKind::Add:
    case ExprKind::Sub:
      print(*e.args[0], 1, os);
      os << (e.kind == ExprKind::Add ? " + " : " - ");
      print(*e.args[1], 2, os);
      break;
    case ExprKind::Mul:
    case ExprKind::Div:
      print(*e.args[0], 2, os);
      os << (e.kind == ExprKind::Mul ? "*" : "/");
      print(*e.args[1], 3, os);
      break;
    case ExprKind::Pow:
      print(*e.args[0], 5, os);
      os << "^";
      print_power(*e.args[1], os);
      break;
  }
  if (paren) os << ")";
}

void check_scope(const Expr& e, std::vector<std::string>& scope, const std::set<std::string, std::less<>>& bound) {
  if (e.kind == ExprKind::Symbol) {
    const bool local = std::find(scope.begin(), scope.end(), e.name) != scope.end();
    if (!local && !bound.count(e.name)) {
      throw Error(Errc::UnboundSymbol, "'" + e.name + "' at line " + std::to_string(e.pos.line) + ", col " +
                                           std::to_string(e.pos.col));
    }
    return;
  }
  if (e.kind == ExprKind::Sum) {
    check_scope(*e.args[0], scope, bound);
    check_scope(*e.args[1], scope, bound);
    scope.push_back(e.name);
    check_scope(*e.args[2], scope, bound);
    scope.pop_back();
    return;
  }
  for (const auto& a : e.args) check_scope(*a, scope, bound);
}

}  // namespace

bool same_ast(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same_ast(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

ExprPtr parse_expr(std::string_view text) {
  Parser p(tokenize(text, 1));
  ExprPtr e = p.expr();
  if (!p.at_end()) p.fail("end of input");
  return e;
}

std::string print_expr(const Expr& e) {
  std::ostringstream os;
  print(e, 0, os);
  return os.str();
}

SpecFile parse_spec(std::string_view text) {
  SpecFile out;
  std::set<std::string, std::less<>> bound;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    Parser p(tokenize(text.substr(start, end - start), line_no));
    start = end + 1;
    if (p.at_end()) continue;
    if (p.at_ident("let")) {
      p.take();
      const std::string name = p.expect_ident("a symbol name");
      p.expect_op("=");
      ExprPtr value = p.expr();
      if (!p.at_end()) p.fail("end of line");
      std::vector<std::string> scope;
      check_scope(*value, scope, bound);
      bound.insert(name);
      out.lets.emplace_back(name, value);
    } else if (p.at_ident("check")) {
      const SourcePos pos = p.take().pos;
      const std::string name = p.expect_ident("a check name");
      p.expect_op(":");
      CongruenceSpec c{name, pos, nullptr, nullptr, nullptr};
      c.lhs = p.expr();
      p.expect_op("==");
      c.rhs = p.expr();
      if (!p.at_ident("mod")) p.fail("'mod'");
      p.take();
      c.modulus = p.expr();
      if (!p.at_end()) p.fail("end of line");
      std::vector<std::string> scope;
      for (const ExprPtr* e : {&c.lhs, &c.rhs, &c.modulus}) check_scope(**e, scope, bound);
      out.checks.push_back(std::move(c));
    } else {
      p.fail("'let' or 'check'");
    }
  }
  return out;
}

}  // namespace qsc
