#pragma once

// Polynomial and rational-function arithmetic in q: QPoly over Q, ZPoly over Z,
// and the reduced quotient QRat used for every q-side value.

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qsc/arith.hpp"
#include "qsc/poly.hpp"

namespace qsc {

using QPoly = Poly<BigRat>;
using ZPoly = Poly<BigInt>;

QPoly to_qpoly(const ZPoly& p);
/// Splits p = scale * prim with prim primitive and positive leading coefficient.
std::pair<BigRat, ZPoly> to_zpoly(const QPoly& p);

BigInt content(const ZPoly& p);
/// p / content(p), sign fixed so the leading coefficient is positive.
ZPoly primitive_part(const ZPoly& p);

/// f / g when g divides f over Z[q]; nullopt otherwise. Aborts on the first
/// inexact leading-coefficient division.
std::optional<ZPoly> divexact(const ZPoly& f, const ZPoly& g);
/// Divisibility over Q[q] (g need not be primitive).
bool divides(const ZPoly& g, const ZPoly& f);

/// Primitive gcd with positive leading coefficient (multi-modular).
ZPoly gcd(const ZPoly& f, const ZPoly& g);

/// Phi_n(q), memoized; safe to call from several threads.
const ZPoly& cyclotomic_z(long n);
QPoly cyclotomic(long n);

/// 1 + q + ... + q^{r-1} for r >= 0.
ZPoly q_integer_poly(long r);

std::pair<QPoly, QPoly> poly_divrem(const QPoly& f, const QPoly& g);

struct GcdExt {
  QPoly gcd;  // monic
  QPoly u;
  QPoly v;
};
/// u*f + v*g = gcd.
GcdExt poly_gcd_ext(const QPoly& f, const QPoly& g);

/// A reduced quotient N/D of integer polynomials. Canonical: D has positive
/// leading coefficient, gcd(N, D) = 1 in Q[q], and the integer contents of N
/// and D are coprime. The equivalent monic-denominator form over Q is available
/// through num()/den().
class QRat {
 public:
  QRat() : den_(ZPoly::one()) {}
  QRat(const BigRat& c);  // NOLINT(google-explicit-constructor)
  QRat(long c) : QRat(BigRat(c)) {}  // NOLINT(google-explicit-constructor)
  explicit QRat(const ZPoly& p) : num_(p), den_(ZPoly::one()) { fix_content(); }
  explicit QRat(const QPoly& p);

  /// Cancels gcd(num, den). Throws DivisionByZeroPoly for den = 0.
  static QRat make(const ZPoly& num, const ZPoly& den);
  /// Caller guarantees gcd(num, den) = 1 over Q[q]; only contents and sign are fixed.
  static QRat from_coprime(ZPoly num, ZPoly den);
  /// value * q^e, e may be negative.
  static QRat monomial(const BigRat& value, long e);
  static QRat q() { return monomial(BigRat(1), 1); }

  const ZPoly& znum() const noexcept { return num_; }
  const ZPoly& zden() const noexcept { return den_; }
  QPoly num() const;
  QPoly den() const;

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// Constant value; requires is_constant().
  BigRat constant_value() const;

  /// Value at a rational point; throws DivisionByZero if the denominator vanishes there.
  BigRat eval(const BigRat& x) const;

  QRat inverse() const;
  QRat pow(long e) const;

  QRat operator-() const;
  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend bool operator==(const QRat& a, const QRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

 private:
  QRat(ZPoly num, ZPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  void fix_content();

  ZPoly num_;
  ZPoly den_;
};

std::string to_string(const QRat& x);
std::ostream& operator<<(std::ostream& os, const QRat& x);

/// [r] = (1 - q^r)/(1 - q); a Laurent rational function for r < 0.
QRat q_integer(long r);

QRat ratfun_normalize(const QPoly& num, const QPoly& den);

/// Residue of a QRat modulo m as a polynomial of degree < deg m.
/// Throws DenominatorNotUnit when gcd(den, m) != 1.
QPoly reduce_mod(const QRat& x, const QPoly& m);

/// x with x = r1 (mod m1), x = r2 (mod m2), deg x < deg(m1 m2).
QRat crt_combine(const QRat& r1, const QPoly& m1, const QRat& r2, const QPoly& m2);

}  // namespace qsc
