#pragma once

// Morita's p-adic Gamma function at rational arguments, harmonic and
// Bernoulli numbers, rational congruences mod p^k, and the classical
// supercongruences obtained as q -> 1.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qsc/arith.hpp"
#include "qsc/statement.hpp"

namespace qsc {

inline constexpr long kDefaultPrecisionBudget = 10'000'000;

/// Gamma_p(x) mod p^N through the integer representative r in [1, p^N] of x.
/// Exact to N digits since Gamma_p(x) mod p^N depends only on x mod p^N.
/// Throws NotPIntegral, or PrecisionBudgetExceeded when p^N > budget.
PadicInt gamma_p(const BigRat& x, long p, int precision, long budget = kDefaultPrecisionBudget);

/// H_m^{(ell)} = sum_{k=1}^m 1/k^ell.
BigRat harmonic(long m, long ell);

/// B_n with B_1 = -1/2. Cached; safe to call concurrently.
BigRat bernoulli(long n);

/// Rising factorial (x)_k = x(x+1)...(x+k-1).
BigRat shifted_factorial(const BigRat& x, long k);

/// v_p(lhs - rhs) >= k. Both sides must be p-integral (NotPIntegral otherwise).
bool rational_congruent(const BigRat& lhs, const BigRat& rhs, long p, long k);

/// lhs = rhs (mod p^k) where rhs is a p-adic value; InsufficientPrecision when
/// rhs carries fewer than k digits.
bool rational_congruent(const BigRat& lhs, const PadicInt& rhs, long k);

/// Outcome of a check of the shape  L = c * p^j * G (mod p^k),  with G a
/// product of Gamma_p powers (a p-adic unit) and c rational.
struct GammaCheck {
  bool verified = false;
  long lhs_valuation = 0;
  long digits = 0;  // precision at which G was evaluated, 0 if not needed
};

/// `gamma` receives the digit count N and returns G mod p^N.
template <class GammaFn>
GammaCheck check_gamma_form(const BigRat& lhs, BigRat c, long j, GammaFn gamma, long p, long k);

/// Ids of the classical statements, in catalog order.
const std::vector<StatementInfo>& classical_statements();
bool is_classical(std::string_view id);

/// Side conditions of a classical statement; empty when admissible.
std::optional<std::string> classical_violation(std::string_view id, const StatementParams& sp);

/// Exact check of one classical statement at p^s (d, r where applicable).
VerificationRecord verify_classical(std::string_view id, const StatementParams& sp, MChoice m, long budget);

/// Sum_{k=0}^m sign^k (a k + b) (x)_k^e / k!^e: the q -> 1 images of the q-sums.
BigRat classical_sum(long m, int sign, long a, long b, const BigRat& x, long e);

// ---------------------------------------------------------------------------

template <class GammaFn>
GammaCheck check_gamma_form(const BigRat& lhs, BigRat c, long j, GammaFn gamma, long p, long k) {
  GammaCheck out;
  out.lhs_valuation = padic_valuation(lhs, p);
  if (c == 0) {
    out.verified = out.lhs_valuation >= k;
    return out;
  }
  const long vc = padic_valuation(c, p);
  j += vc;
  if (vc > 0) {
    c /= BigRat(pow_int(p, static_cast<unsigned long>(vc)));
  } else if (vc < 0) {
    c *= BigRat(pow_int(p, static_cast<unsigned long>(-vc)));
  }
  const long digits = k - j;
  if (digits <= 0) {
    out.verified = out.lhs_valuation >= k;
    return out;
  }
  if (out.lhs_valuation < j) return out;
  BigRat scaled = lhs;
  if (j > 0) scaled /= BigRat(pow_int(p, static_cast<unsigned long>(j)));
  if (j < 0) scaled *= BigRat(pow_int(p, static_cast<unsigned long>(-j)));
  const int N = static_cast<int>(digits);
  out.digits = digits;
  const PadicInt rhs = residue_of_rational(c, p, N) * gamma(N);
  out.verified = residue_of_rational(scaled, p, N) == rhs;
  return out;
}

}  // namespace qsc
