#include "qsc/arith.hpp"
#include "qsc/random.hpp"

#include <stdexcept>

namespace qsc {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotPIntegral: return "NotPIntegral";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::ModuliNotCoprime: return "ModuliNotCoprime";
    case Errc::DenominatorNotUnit: return "DenominatorNotUnit";
    case Errc::NegativeLength: return "NegativeLength";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ZeroDenominatorFactor: return "ZeroDenominatorFactor";
    case Errc::NonTerminating: return "NonTerminating";
    case Errc::DegenerateParameters: return "DegenerateParameters";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnboundSymbol: return "UnboundSymbol";
    case Errc::NonIntegerBound: return "NonIntegerBound";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::UnknownKind: return "UnknownKind";
    case Errc::SamplingExhausted: return "SamplingExhausted";
    case Errc::SideConditionViolated: return "SideConditionViolated";
    case Errc::PrecisionBudgetExceeded: return "PrecisionBudgetExceeded";
    case Errc::InsufficientPrecision: return "InsufficientPrecision";
    case Errc::UnknownStatement: return "UnknownStatement";
  }
  return "Unknown";
}

BigRat make_rat(long num, long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigRat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRat& x) { return x.get_str(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n && d < 1000; ++d) {
    if (n % d == 0) return n == d;
  }
  return mpz_probab_prime_p(BigInt(std::to_string(n)).get_mpz_t(), 30) > 0;
}

BigInt pow_int(long base, unsigned long exp) {
  BigInt out;
  BigInt b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
  return out;
}

long padic_valuation(const BigInt& x, long p) {
  if (x == 0) return kInfiniteValuation;
  BigInt bp(p);
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), bp.get_mpz_t()));
}

long padic_valuation(const BigRat& x, long p) {
  if (x == 0) return kInfiniteValuation;
  return padic_valuation(BigInt(x.get_num()), p) - padic_valuation(BigInt(x.get_den()), p);
}

BigInt inv_mod_prime_power(const BigInt& a, long p, int precision) {
  BigInt m = pow_int(p, static_cast<unsigned long>(precision));
  BigInt r = a % m;
  if (r < 0) r += m;
  BigInt inv;
  if (r == 0 || mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(Errc::NotAUnit, to_string(a) + " is not invertible mod " + std::to_string(p) + "^" +
                                    std::to_string(precision));
  }
  return inv;
}

PadicInt::PadicInt(long p, int precision, const BigInt& value)
    : p_(p), precision_(precision), modulus_(pow_int(p, static_cast<unsigned long>(precision))) {
  if (precision < 1) throw std::logic_error("PadicInt precision must be positive");
  residue_ = value % modulus_;
  if (residue_ < 0) residue_ += modulus_;
}

void PadicInt::check_compatible(const PadicInt& o) const {
  if (p_ != o.p_ || precision_ != o.precision_) {
    throw std::logic_error("PadicInt operands differ in prime or precision");
  }
}

bool PadicInt::is_unit() const { return mpz_divisible_ui_p(residue_.get_mpz_t(), p_) == 0; }

PadicInt PadicInt::inverse() const {
  return PadicInt(p_, precision_, inv_mod_prime_power(residue_, p_, precision_));
}

PadicInt PadicInt::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  BigInt out;
  BigInt ee(e);
  mpz_powm(out.get_mpz_t(), residue_.get_mpz_t(), ee.get_mpz_t(), modulus_.get_mpz_t());
  return PadicInt(p_, precision_, out);
}

PadicInt PadicInt::truncate(int precision) const {
  if (precision > precision_) throw std::logic_error("cannot raise PadicInt precision");
  return PadicInt(p_, precision, residue_);
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, precision_, -residue_); }

PadicInt& PadicInt::operator+=(const PadicInt& o) {
  check_compatible(o);
  residue_ += o.residue_;
  if (residue_ >= modulus_) residue_ -= modulus_;
  return *this;
}

PadicInt& PadicInt::operator-=(const PadicInt& o) {
  check_compatible(o);
  residue_ -= o.residue_;
  if (residue_ < 0) residue_ += modulus_;
  return *this;
}

PadicInt& PadicInt::operator*=(const PadicInt& o) {
  check_compatible(o);
  residue_ *= o.residue_;
  residue_ %= modulus_;
  return *this;
}

bool operator==(const PadicInt& a, const PadicInt& b) {
  a.check_compatible(b);
  return a.residue_ == b.residue_;
}

std::ostream& operator<<(std::ostream& os, const PadicInt& x) {
  return os << x.residue() << " (mod " << x.prime() << "^" << x.precision() << ")";
}

PadicInt residue_of_rational(const BigRat& x, long p, int precision) {
  BigInt den(x.get_den());
  if (mpz_divisible_ui_p(den.get_mpz_t(), p) != 0) {
    throw Error(Errc::NotPIntegral, to_string(x) + " has " + std::to_string(p) + " in its denominator");
  }
  BigInt inv = inv_mod_prime_power(den, p, precision);
  return PadicInt(p, precision, BigInt(x.get_num()) * inv);
}

}  // namespace qsc

namespace qsc {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace qsc
