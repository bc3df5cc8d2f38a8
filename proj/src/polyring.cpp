#include "qsc/polyring.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qsc {

QPoly to_qpoly(const ZPoly& p) {
  std::vector<BigRat> c(p.coeffs().begin(), p.coeffs().end());
  return QPoly(std::move(c));
}

std::pair<BigRat, ZPoly> to_zpoly(const QPoly& p) {
  if (p.is_zero()) return {BigRat(0), ZPoly()};
  BigInt den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<BigInt> z(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    z[i] = p[i].get_num() * (den_lcm / p[i].get_den());
  }
  ZPoly zp(std::move(z));
  BigInt cont = content(zp);
  if (zp.lead() < 0) cont = -cont;
  ZPoly prim = primitive_part(zp);
  BigRat scale(cont, den_lcm);
  scale.canonicalize();
  return {scale, prim};
}

BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.lead() < 0) g = -g;
  if (g == 1) return p;
  std::vector<BigInt> c(p.coeffs());
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return ZPoly(std::move(c));
}

std::optional<ZPoly> divexact(const ZPoly& f, const ZPoly& g) {
  if (g.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  if (f.is_zero()) return ZPoly();
  if (f.degree() < g.degree()) return std::nullopt;
  const int dg = g.degree();
  const BigInt& lc = g.lead();
  const bool unit_lead = (lc == 1 || lc == -1);

  std::vector<std::pair<int, const BigInt*>> terms;
  for (int j = 0; j < dg; ++j) {
    if (g[static_cast<std::size_t>(j)] != 0) terms.emplace_back(j, &g[static_cast<std::size_t>(j)]);
  }
  std::vector<BigInt> rem(f.coeffs());
  std::vector<BigInt> quot(static_cast<std::size_t>(f.degree() - dg + 1));
  BigInt c;
  for (int i = f.degree(); i >= dg; --i) {
    BigInt& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (unit_lead) {
      c = lc == 1 ? top : BigInt(-top);
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
      mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    }
    const int shift = i - dg;
    for (const auto& [j, gj] : terms) {
      mpz_submul(rem[static_cast<std::size_t>(shift + j)].get_mpz_t(), c.get_mpz_t(), gj->get_mpz_t());
    }
    top = 0;
    quot[static_cast<std::size_t>(shift)] = c;
  }
  for (int i = 0; i < dg; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  return ZPoly(std::move(quot));
}

bool divides(const ZPoly& g, const ZPoly& f) {
  if (g.is_zero()) return f.is_zero();
  if (g.is_constant()) return true;
  return divexact(f, primitive_part(g)).has_value();
}

const ZPoly& cyclotomic_z(long n) {
  if (n < 1) throw std::logic_error("cyclotomic: n must be positive");
  static std::mutex mu;
  static std::map<long, ZPoly> table;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(n);
    if (it != table.end()) return it->second;
  }
  ZPoly p = ZPoly::monomial(BigInt(1), static_cast<int>(n)) - ZPoly::one();
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto quot = divexact(p, cyclotomic_z(d));
    if (!quot) throw std::logic_error("cyclotomic: inexact division");
    p = std::move(*quot);
  }
  std::lock_guard<std::mutex> lock(mu);
  return table.emplace(n, std::move(p)).first->second;
}

QPoly cyclotomic(long n) { return to_qpoly(cyclotomic_z(n)); }

ZPoly q_integer_poly(long r) {
  if (r < 0) throw std::logic_error("q_integer_poly: negative argument");
  return ZPoly(std::vector<BigInt>(static_cast<std::size_t>(r), BigInt(1)));
}

std::pair<QPoly, QPoly> poly_divrem(const QPoly& f, const QPoly& g) { return divrem(f, g); }

GcdExt poly_gcd_ext(const QPoly& f, const QPoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::logic_error("poly_gcd_ext: both arguments are zero");
  QPoly r0 = f, r1 = g;
  QPoly s0 = QPoly::one(), s1;
  QPoly t0, t1 = QPoly::one();
  while (!r1.is_zero()) {
    auto [quot, rem] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    QPoly s2 = s0 - quot * s1;
    QPoly t2 = t0 - quot * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const BigRat inv = BigRat(1) / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

// QRat

QRat::QRat(const BigRat& c) : den_(ZPoly::constant(c.get_den())) {
  if (c != 0) num_ = ZPoly::constant(c.get_num());
  else den_ = ZPoly::one();
}

QRat::QRat(const QPoly& p) : den_(ZPoly::one()) {
  auto [scale, prim] = to_zpoly(p);
  if (scale == 0) return;
  num_ = prim * BigInt(scale.get_num());
  den_ = ZPoly::constant(scale.get_den());
}

void QRat::fix_content() {
  if (num_.is_zero()) {
    den_ = ZPoly::one();
    return;
  }
  BigInt g = content(num_);
  if (g != 1) g = gcd(g, content(den_));
  if (den_.lead() < 0) g = -g;
  if (g != 1) {
    for (auto& x : num_.mutable_coeffs()) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (auto& x : den_.mutable_coeffs()) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

QRat QRat::make(const ZPoly& num, const ZPoly& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZeroPoly, "zero denominator");
  if (num.is_zero()) return QRat();
  if (den.is_constant() || num.is_constant()) return from_coprime(num, den);
  ZPoly g = gcd(num, den);
  if (g.is_constant()) return from_coprime(num, den);
  return from_coprime(*divexact(num, g), *divexact(den, g));
}

QRat QRat::from_coprime(ZPoly num, ZPoly den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZeroPoly, "zero denominator");
  QRat out(std::move(num), std::move(den), 0);
  out.fix_content();
  return out;
}

QRat QRat::monomial(const BigRat& value, long e) {
  if (value == 0) return QRat();
  if (e >= 0) {
    return from_coprime(ZPoly::monomial(value.get_num(), static_cast<int>(e)), ZPoly::constant(value.get_den()));
  }
  return from_coprime(ZPoly::constant(value.get_num()), ZPoly::monomial(value.get_den(), static_cast<int>(-e)));
}

QPoly QRat::num() const {
  QPoly out = to_qpoly(num_);
  out *= BigRat(1) / BigRat(den_.lead());
  return out;
}

QPoly QRat::den() const {
  QPoly out = to_qpoly(den_);
  out *= BigRat(1) / BigRat(den_.lead());
  return out;
}

BigRat QRat::constant_value() const {
  if (!is_constant()) throw std::logic_error("QRat::constant_value on a non-constant");
  if (num_.is_zero()) return BigRat(0);
  BigRat out(num_[0], den_[0]);
  out.canonicalize();
  return out;
}

BigRat QRat::eval(const BigRat& x) const {
  const BigRat d = den_.eval(x);
  if (d == 0) throw Error(Errc::DivisionByZero, "denominator vanishes at q = " + x.get_str());
  return num_.eval(x) / d;
}

QRat QRat::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return from_coprime(den_, num_);
}

QRat QRat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return QRat(1);
  return from_coprime(qsc::pow(num_, static_cast<unsigned>(e)), qsc::pow(den_, static_cast<unsigned>(e)));
}

QRat QRat::operator-() const { return QRat(-num_, den_, 0); }

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_constant() && o.den_.is_constant()) {
    const BigInt& d1 = den_[0];
    const BigInt& d2 = o.den_[0];
    num_ = num_ * d2 + o.num_ * d1;
    den_ = ZPoly::constant(d1 * d2);
    fix_content();
    return *this;
  }
  ZPoly g = gcd(den_, o.den_);
  if (g.is_constant()) {
    ZPoly t = num_ * o.den_ + o.num_ * den_;
    return *this = from_coprime(std::move(t), den_ * o.den_);
  }
  ZPoly d1 = *divexact(den_, g);
  ZPoly d2 = *divexact(o.den_, g);
  ZPoly t = num_ * d2 + o.num_ * d1;
  if (t.is_zero()) return *this = QRat();
  ZPoly g2 = gcd(t, g);
  if (!g2.is_constant()) {
    t = *divexact(t, g2);
    g = *divexact(g, g2);
  }
  return *this = from_coprime(std::move(t), d1 * d2 * g);
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero() || o.is_zero()) return *this = QRat();
  ZPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  ZPoly g1 = gcd(n1, d2);
  if (!g1.is_constant()) {
    n1 = *divexact(n1, g1);
    d2 = *divexact(d2, g1);
  }
  ZPoly g2 = gcd(n2, d1);
  if (!g2.is_constant()) {
    n2 = *divexact(n2, g2);
    d1 = *divexact(d1, g2);
  }
  return *this = from_coprime(n1 * n2, d1 * d2);
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

std::string to_string(const QRat& x) {
  const QPoly d = x.den();
  if (d.is_constant()) return to_string(x.num());
  return "(" + to_string(x.num()) + ")/(" + to_string(d) + ")";
}

std::ostream& operator<<(std::ostream& os, const QRat& x) { return os << to_string(x); }

QRat q_integer(long r) {
  if (r >= 0) return QRat(q_integer_poly(r));
  // (1 - q^r)/(1 - q) = -q^r [-r]
  return QRat::from_coprime(-q_integer_poly(-r), ZPoly::monomial(BigInt(1), static_cast<int>(-r)));
}

QRat ratfun_normalize(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZeroPoly, "zero denominator");
  return QRat(num) / QRat(den);
}

QPoly reduce_mod(const QRat& x, const QPoly& m) {
  if (m.is_zero()) throw Error(Errc::DivisionByZeroPoly, "zero modulus");
  if (m.is_constant()) return QPoly();
  const QPoly n = divrem(x.num(), m).second;
  const QPoly d = divrem(x.den(), m).second;
  if (d.is_zero()) throw Error(Errc::DenominatorNotUnit, "denominator shares a factor with the modulus");
  GcdExt e = poly_gcd_ext(d, m);
  if (e.gcd.degree() != 0) throw Error(Errc::DenominatorNotUnit, "denominator shares a factor with the modulus");
  return divrem(n * e.u, m).second;
}

QRat crt_combine(const QRat& r1, const QPoly& m1, const QRat& r2, const QPoly& m2) {
  if (m1.is_zero() || m2.is_zero()) throw Error(Errc::DivisionByZeroPoly, "zero modulus");
  GcdExt e = poly_gcd_ext(m1, m2);
  if (e.gcd.degree() != 0) throw Error(Errc::ModuliNotCoprime, "moduli share a factor");
  const QPoly a1 = reduce_mod(r1, m1);
  const QPoly a2 = reduce_mod(r2, m2);
  // u*m1 + v*m2 = 1
  const QPoly x = a1 * e.v * m2 + a2 * e.u * m1;
  return QRat(divrem(x, m1 * m2).second);
}

}  // namespace qsc
