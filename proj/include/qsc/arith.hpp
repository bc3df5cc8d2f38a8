#pragma once

// Exact integer / rational substrate and finite-precision p-adic integers.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "qsc/error.hpp"

namespace qsc {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Valuation of zero.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

BigRat make_rat(long num, long den = 1);
BigRat make_rat(const BigInt& num, const BigInt& den);
/// Parses "a", "-a/b"; throws std::invalid_argument on malformed text.
BigRat parse_rat(const std::string& text);
std::string to_string(const BigInt& x);
std::string to_string(const BigRat& x);

bool is_prime(std::uint64_t n);
BigInt pow_int(long base, unsigned long exp);

/// Exponent of p in x; kInfiniteValuation for x = 0.
long padic_valuation(const BigRat& x, long p);
long padic_valuation(const BigInt& x, long p);

/// b in [0, p^N) with a*b = 1 (mod p^N).
BigInt inv_mod_prime_power(const BigInt& a, long p, int precision);

/// An element of Z/p^N, the finite-precision model of Z_p used for congruence
/// checks. Binary operations require identical (p, N).
class PadicInt {
 public:
  PadicInt(long p, int precision, const BigInt& value);

  static PadicInt one(long p, int precision) { return PadicInt(p, precision, BigInt(1)); }

  long prime() const noexcept { return p_; }
  int precision() const noexcept { return precision_; }
  const BigInt& residue() const noexcept { return residue_; }
  const BigInt& modulus() const noexcept { return modulus_; }

  bool is_unit() const;
  PadicInt inverse() const;
  PadicInt pow(long e) const;
  /// Same element reduced to a coarser precision.
  PadicInt truncate(int precision) const;

  PadicInt operator-() const;
  PadicInt& operator+=(const PadicInt& o);
  PadicInt& operator-=(const PadicInt& o);
  PadicInt& operator*=(const PadicInt& o);

  friend PadicInt operator+(PadicInt a, const PadicInt& b) { return a += b; }
  friend PadicInt operator-(PadicInt a, const PadicInt& b) { return a -= b; }
  friend PadicInt operator*(PadicInt a, const PadicInt& b) { return a *= b; }
  friend bool operator==(const PadicInt& a, const PadicInt& b);

 private:
  void check_compatible(const PadicInt& o) const;

  long p_;
  int precision_;
  BigInt modulus_;
  BigInt residue_;
};

std::ostream& operator<<(std::ostream& os, const PadicInt& x);

/// numerator * denominator^{-1} mod p^N. Throws NotPIntegral when p divides the denominator.
PadicInt residue_of_rational(const BigRat& x, long p, int precision);

}  // namespace qsc
