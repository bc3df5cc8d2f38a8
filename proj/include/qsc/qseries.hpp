#pragma once

// q-shifted factorials, hypergeometric summands and exact truncated sums.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/polyring.hpp"
#include "qsc/random.hpp"

namespace qsc {

/// coeff * q^exp
struct QMonomialArg {
  BigRat coeff{1};
  long exp = 0;
};

/// (arg; q^step)_k raised to `power`.
struct PochFactor {
  QMonomialArg arg;
  long step = 1;
  int power = 1;
};

/// Shape of a summand
///   sign^k * [slope*k + offset] * prod numer / prod denom * z^k,
/// the q-integer being present only when linear_factor is set.
struct TermSpec {
  long d = 1;
  long r = 0;
  bool linear_factor = false;
  long slope = 0;
  long offset = 1;
  int sign = 1;
  std::vector<PochFactor> numer;
  std::vector<PochFactor> denom;
  QMonomialArg z;
};

/// prod_{i<k} (1 - coeff q^{exp + step i}).
QRat pochhammer(const QMonomialArg& arg, long step, long k);
/// The Gaussian binomial [t choose s]_q.
ZPoly q_binomial(long t, long s);

QRat hyper_term(const TermSpec& spec, long k);
/// sum_{k=0}^{M} hyper_term(spec, k). Terms past a vanishing numerator factor are
/// zero; a vanishing denominator factor inside the range throws ZeroDenominatorFactor.
QRat truncated_sum(const TermSpec& spec, long M);

enum class IdentityId { QChu, JacksonSpec, WhippleSpec, WatsonSpec };

inline constexpr IdentityId kAllIdentities[] = {IdentityId::QChu, IdentityId::JacksonSpec, IdentityId::WhippleSpec,
                                                IdentityId::WatsonSpec};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view name);

struct IdentityParams {
  long n = 1;
  long d = 3;
  long r = 1;
  long t = 1;
  std::optional<BigRat> b;
  std::optional<BigRat> c;
};

struct IdentityCheck {
  IdentityId id;
  IdentityParams params;  // with b and c resolved
  bool equal = false;
  QRat lhs;
  QRat rhs;
};

/// Exact comparison of a terminating summation with its finite closed form.
/// Unset free parameters are drawn from `seed`.
IdentityCheck check_terminating_identity(IdentityId id, const IdentityParams& params, std::uint64_t seed);

/// Admissible random instance for the randomized identity suite.
IdentityParams random_identity_params(IdentityId id, SeededRng& rng);

}  // namespace qsc
