#include "qsc/padic.hpp"

#include <mutex>

namespace qsc {

PadicInt gamma_p(const BigRat& x, long p, int precision, long budget) {
  if (precision < 1) throw Error(Errc::OutOfRange, "gamma_p precision must be positive");
  const BigInt modulus = pow_int(p, static_cast<unsigned long>(precision));
  if (modulus > budget) {
    throw Error(Errc::PrecisionBudgetExceeded,
                std::to_string(p) + "^" + std::to_string(precision) + " exceeds budget " + std::to_string(budget));
  }
  const std::uint64_t m = modulus.get_ui();
  std::uint64_t r = residue_of_rational(x, p, precision).residue().get_ui();
  if (r == 0) r = m;

  std::uint64_t acc = 1;
  const auto up = static_cast<std::uint64_t>(p);
  for (std::uint64_t k = 1, next_multiple = up; k < r; ++k) {
    if (k == next_multiple) {
      next_multiple += up;
      continue;
    }
    acc = static_cast<std::uint64_t>(static_cast<unsigned __int128>(acc) * k % m);
  }
  if (r % 2 == 1 && acc != 0) acc = m - acc;
  return PadicInt(p, precision, BigInt(static_cast<unsigned long>(acc)));
}

BigRat harmonic(long m, long ell) {
  if (ell < 1) throw Error(Errc::OutOfRange, "harmonic order must be >= 1");
  BigRat h = 0;
  for (long k = 1; k <= m; ++k) h += BigRat(1, pow_int(k, static_cast<unsigned long>(ell)));
  return h;
}

namespace {

std::mutex g_bernoulli_mutex;
std::vector<BigRat> g_bernoulli{BigRat(1)};

}  // namespace

BigRat bernoulli(long n) {
  if (n < 0) throw Error(Errc::OutOfRange, "bernoulli index must be >= 0");
  std::lock_guard lock(g_bernoulli_mutex);
  auto& b = g_bernoulli;
  while (static_cast<long>(b.size()) <= n) {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 with m = b.size()
    const long m = static_cast<long>(b.size());
    BigRat s = 0;
    BigInt binom = 1;  // C(m+1, k)
    for (long k = 0; k < m; ++k) {
      s += BigRat(binom) * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    BigRat next = -s / BigRat(m + 1);
    next.canonicalize();
    b.push_back(next);
  }
  return b[n];
}

BigRat shifted_factorial(const BigRat& x, long k) {
  if (k < 0) throw Error(Errc::NegativeLength, "shifted factorial length " + std::to_string(k));
  BigRat out = 1;
  for (long i = 0; i < k; ++i) out *= x + i;
  return out;
}

bool rational_congruent(const BigRat& lhs, const BigRat& rhs, long p, long k) {
  if (padic_valuation(lhs, p) < 0 || padic_valuation(rhs, p) < 0) {
    throw Error(Errc::NotPIntegral, "rational congruence needs p-integral sides");
  }
  return padic_valuation(BigRat(lhs - rhs), p) >= k;
}

bool rational_congruent(const BigRat& lhs, const PadicInt& rhs, long k) {
  if (rhs.precision() < k) {
    throw Error(Errc::InsufficientPrecision, "right side known to " + std::to_string(rhs.precision()) +
                                                 " digits, congruence needs " + std::to_string(k));
  }
  const int N = static_cast<int>(k);
  return residue_of_rational(lhs, rhs.prime(), N) == rhs.truncate(N);
}

BigRat classical_sum(long m, int sign, long a, long b, const BigRat& x, long e) {
  BigRat total = 0;
  BigRat ratio = 1;  // (x)_k^e / k!^e
  for (long k = 0; k <= m; ++k) {
    if (k > 0) {
      BigRat step = (x + (k - 1)) / BigRat(k);
      BigRat f = 1;
      for (long i = 0; i < e; ++i) f *= step;
      ratio *= f;
    }
    BigRat term = ratio * BigRat(a * k + b);
    if (sign < 0 && k % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

}  // namespace qsc
