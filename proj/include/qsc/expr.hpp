#pragma once

// Expression DSL for closed forms: q-integers, q-shifted factorials, finite
// sums, and rational arithmetic, evaluated exactly to QRat.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/polyring.hpp"

namespace qsc {

struct SourcePos {
  int line = 1;
  int col = 1;
};

enum class ExprKind {
  Rational,  // non-negative integer literal (fractions are Div nodes)
  QVar,      // q
  QPower,    // q^e, args[0] = integer exponent
  QInt,      // qint(m)
  Phi,       // phi(m), the cyclotomic polynomial
  Poch,      // poch(x1, ..., xj; q^step; len): args = x1..xj, step, len
  Sum,       // sum(name, lo, hi, body): args = lo, hi, body
  Symbol,
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Pow,  // args[0]^args[1], integer exponent
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  SourcePos pos;
  BigRat value;      // Rational
  std::string name;  // Symbol, Sum index
  std::vector<ExprPtr> args;
};

/// Structural equality, ignoring source positions.
bool same_ast(const Expr& a, const Expr& b);

/// Values of the statement parameters (n, d, r, a, b, ...).
using Bindings = std::map<std::string, BigRat>;

ExprPtr parse_expr(std::string_view text);
std::string print_expr(const Expr& e);

QRat eval_expr(const Expr& e, const Bindings& b);
/// Evaluates a q-free expression that must be an integer (NonIntegerBound otherwise).
long eval_int(const Expr& e, const Bindings& b);
/// Evaluates a q-free expression to a rational.
BigRat eval_scalar(const Expr& e, const Bindings& b);

/// Splits a product such as qint(n)*phi(n)^4 into (factor, multiplicity) pairs.
std::vector<std::pair<ExprPtr, long>> product_factors(const ExprPtr& e, const Bindings& b);

/// One `check` declaration of a spec file.
struct CongruenceSpec {
  std::string name;
  SourcePos pos;
  ExprPtr lhs;
  ExprPtr rhs;
  ExprPtr modulus;
};

/// A parsed .qcs file: `let` bindings in order, then `check` declarations.
struct SpecFile {
  std::vector<std::pair<std::string, ExprPtr>> lets;
  std::vector<CongruenceSpec> checks;
};

SpecFile parse_spec(std::string_view text);
/// Evaluates the `let` lines in order.
Bindings spec_bindings(const SpecFile& spec);

}  // namespace qsc
