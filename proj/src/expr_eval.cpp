#include <climits>

#include "qsc/expr.hpp"
#include "qsc/qseries.hpp"

namespace qsc {
namespace {

std::string where(const Expr& e) {
  return " at line " + std::to_string(e.pos.line) + ", col " + std::to_string(e.pos.col);
}

long to_long(const BigRat& v, const Expr& e) {
  if (v.get_den() != 1) throw Error(Errc::NonIntegerBound, "non-integer value " + v.get_str() + where(e));
  if (!v.get_num().fits_slong_p()) throw Error(Errc::OutOfRange, "integer too large" + where(e));
  return v.get_num().get_si();
}

// c*q^e if x is a single monomial.
std::optional<QMonomialArg> as_monomial(const QRat& x) {
  const ZPoly& n = x.znum();
  const ZPoly& d = x.zden();
  if (n.nonzero_terms() != 1 || d.nonzero_terms() != 1) return std::nullopt;
  const long ne = n.degree(), de = d.degree();
  BigRat c(n.lead(), d.lead());
  c.canonicalize();
  return QMonomialArg{c, ne - de};
}

class Evaluator {
 public:
  explicit Evaluator(const Bindings& b) : bindings_(b) {}

  const BigRat& lookup(const Expr& e) const {
    for (auto it = locals_.rbegin(); it != locals_.rend(); ++it) {
      if (it->first == e.name) return it->second;
    }
    auto it = bindings_.find(e.name);
    if (it == bindings_.end()) throw Error(Errc::UnboundSymbol, "'" + e.name + "'" + where(e));
    return it->second;
  }

  long integer(const Expr& e) { return to_long(scalar(e), e); }

  BigRat scalar(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Rational: return e.value;
      case ExprKind::Symbol: return lookup(e);
      case ExprKind::Neg: return -scalar(*e.args[0]);
      case ExprKind::Add: return scalar(*e.args[0]) + scalar(*e.args[1]);
      case ExprKind::Sub: return scalar(*e.args[0]) - scalar(*e.args[1]);
      case ExprKind::Mul: return scalar(*e.args[0]) * scalar(*e.args[1]);
      case ExprKind::Div: {
        const BigRat den = scalar(*e.args[1]);
        if (den == 0) throw Error(Errc::DivisionByZero, "division by zero" + where(e));
        return scalar(*e.args[0]) / den;
      }
      case ExprKind::Pow: {
        const BigRat base = scalar(*e.args[0]);
        const long k = integer(*e.args[1]);
        if (base == 0 && k < 0) throw Error(Errc::DivisionByZero, "zero to a negative power" + where(e));
        BigRat out = 1;
        for (long i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
        return k < 0 ? BigRat(1 / out) : out;
      }
      case ExprKind::Sum: {
        const long lo = integer(*e.args[0]), hi = integer(*e.args[1]);
        BigRat acc = 0;
        for (long j = lo; j <= hi; ++j) {
          locals_.emplace_back(e.name, BigRat(j));
          acc += scalar(*e.args[2]);
          locals_.pop_back();
        }
        return acc;
      }
      default:
        throw Error(Errc::NonIntegerBound, "expression depends on q where a number is required" + where(e));
    }
  }

  QRat value(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Rational: return QRat(e.value);
      case ExprKind::Symbol: return QRat(lookup(e));
      case ExprKind::QVar: return QRat::q();
      case ExprKind::QPower: return QRat::monomial(BigRat(1), integer(*e.args[0]));
      case ExprKind::QInt: return q_integer(integer(*e.args[0]));
      case ExprKind::Phi: {
        const long m = integer(*e.args[0]);
        if (m < 1) throw Error(Errc::OutOfRange, "phi needs a positive index" + where(e));
        return QRat(cyclotomic_z(m));
      }
      case ExprKind::Poch: return poch(e);
      case ExprKind::Sum: {
        const long lo = integer(*e.args[0]), hi = integer(*e.args[1]);
        QRat acc;
        for (long j = lo; j <= hi; ++j) {
          locals_.emplace_back(e.name, BigRat(j));
          acc += value(*e.args[2]);
          locals_.pop_back();
        }
        return acc;
      }
      case ExprKind::Neg: return -value(*e.args[0]);
      case ExprKind::Add: return value(*e.args[0]) + value(*e.args[1]);
      case ExprKind::Sub: return value(*e.args[0]) - value(*e.args[1]);
      case ExprKind::Mul: {
        // no short cut on a zero left factor: 0 * (1/0) must still fail
        QRat lhs = value(*e.args[0]);
        return lhs * value(*e.args[1]);
      }
      case ExprKind::Div: {
        const QRat den = value(*e.args[1]);
        if (den.is_zero()) throw Error(Errc::DivisionByZero, "division by zero" + where(e));
        return value(*e.args[0]) / den;
      }
      case ExprKind::Pow: {
        const QRat base = value(*e.args[0]);
        const long k = integer(*e.args[1]);
        if (base.is_zero() && k < 0) throw Error(Errc::DivisionByZero, "zero to a negative power" + where(e));
        return base.pow(k);
      }
    }
    throw std::logic_error("unhandled expression kind");
  }

 private:
  QRat poch(const Expr& e) {
    const std::size_t nargs = e.args.size() - 2;
    const long step = integer(*e.args[nargs]);
    const long len = integer(*e.args[nargs + 1]);
    if (len < 0) throw Error(Errc::NegativeLength, "negative Pochhammer length" + where(e));
    if (step < 1) throw Error(Errc::OutOfRange, "Pochhammer base must be a positive power of q" + where(e));
    QRat out(1);
    for (std::size_t i = 0; i < nargs && !out.is_zero(); ++i) {
      const QRat x = value(*e.args[i]);
      if (auto m = as_monomial(x)) {
        out *= pochhammer(*m, step, len);
      } else {
        for (long j = 0; j < len; ++j) out *= QRat(1) - x * QRat::monomial(BigRat(1), step * j);
      }
    }
    return out;
  }

  const Bindings& bindings_;
  std::vector<std::pair<std::string, BigRat>> locals_;
};

}  // namespace

QRat eval_expr(const Expr& e, const Bindings& b) { return Evaluator(b).value(e); }

long eval_int(const Expr& e, const Bindings& b) { return Evaluator(b).integer(e); }

BigRat eval_scalar(const Expr& e, const Bindings& b) { return Evaluator(b).scalar(e); }

std::vector<std::pair<ExprPtr, long>> product_factors(const ExprPtr& e, const Bindings& b) {
  std::vector<std::pair<ExprPtr, long>> out;
  if (e->kind == ExprKind::Mul) {
    for (const auto& a : e->args) {
      auto sub = product_factors(a, b);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  } else if (e->kind == ExprKind::Pow) {
    out.emplace_back(e->args[0], eval_int(*e->args[1], b));
  } else {
    out.emplace_back(e, 1);
  }
  return out;
}

Bindings spec_bindings(const SpecFile& spec) {
  Bindings b;
  for (const auto& [name, value] : spec.lets) b[name] = eval_scalar(*value, b);
  return b;
}

}  // namespace qsc
