#include <numeric>
#include <stdexcept>
#include <vector>

#include "qsc/qseries.hpp"

// Terminating specializations of classical summation formulas, each compared
// exactly with its finite closed form. The parameter a of the Whipple, Jackson
// and Watson series is set to q^{tn}; the summands are symmetric in a <-> 1/a,
// so this also covers a = q^{-tn}.

namespace qsc {
namespace {

PochFactor poch(const BigRat& coeff, long exp, long step, int power = 1) { return PochFactor{{coeff, exp}, step, power}; }

BigRat inv(const BigRat& x) { return BigRat(1) / x; }

QRat poch_value(const BigRat& coeff, long exp, long step, long k) { return pochhammer(QMonomialArg{coeff, exp}, step, k); }

void require_generic(const BigRat& x, const char* name) {
  if (x == 0 || x == 1 || x == -1) {
    throw Error(Errc::DegenerateParameters, std::string(name) + " must not be 0 or +-1");
  }
}

BigRat draw(SeededRng& rng) {
  for (;;) {
    BigRat x = rng.small_rational();
    if (x != 1 && x != -1) return x;
  }
}

long mod(long a, long m) { return ((a % m) + m) % m; }

IdentityCheck run_qchu(IdentityParams p) {
  if (p.n < 0) throw Error(Errc::NonTerminating, "QCHU needs n >= 0");
  const BigRat& b = *p.b;
  const BigRat& c = *p.c;
  require_generic(b, "b");
  require_generic(c, "c");
  TermSpec s;
  s.numer = {poch(BigRat(1), -p.n, 1), poch(b, 0, 1)};
  s.denom = {poch(BigRat(1), 1, 1), poch(c, 0, 1)};
  s.z = {c / b, p.n};
  IdentityCheck out{IdentityId::QChu, p, false, {}, {}};
  out.lhs = truncated_sum(s, p.n);
  out.rhs = poch_value(c / b, 0, 1, p.n) / poch_value(c, 0, 1, p.n);
  return out;
}

IdentityCheck run_jackson(IdentityParams p) {
  if (p.t != 1 && p.t != 2) throw Error(Errc::DegenerateParameters, "JACKSON_SPEC needs t in {1, 2}");
  const long N = p.t * p.n;
  if (p.n < 1 || mod(N, 3) != 1) throw Error(Errc::NonTerminating, "JACKSON_SPEC needs n >= 1 and tn = 1 (mod 3)");
  const BigRat& b = *p.b;
  require_generic(b, "b");
  const long L = (N - 1) / 3;
  TermSpec s;
  s.linear_factor = true;
  s.slope = 6;
  s.offset = 1;
  s.numer = {poch(BigRat(1), 1 + N, 3), poch(BigRat(1), 1 - N, 3), poch(b, 1, 3), poch(inv(b), 1, 3),
             poch(BigRat(1), 1, 3, 2)};
  s.denom = {poch(BigRat(1), 3 - N, 3), poch(BigRat(1), 3 + N, 3), poch(inv(b), 3, 3), poch(b, 3, 3),
             poch(BigRat(1), 3, 3, 2)};
  s.z = {BigRat(1), 3};
  IdentityCheck out{IdentityId::JacksonSpec, p, false, {}, {}};
  out.lhs = truncated_sum(s, L);
  out.rhs = q_integer(N) * poch_value(b, 2, 3, L) * poch_value(inv(b), 2, 3, L) * poch_value(BigRat(1), 2, 3, L) /
            (poch_value(inv(b), 3, 3, L) * poch_value(b, 3, 3, L) * poch_value(BigRat(1), 3, 3, L));
  return out;
}

IdentityCheck run_whipple(IdentityParams p) {
  if (p.n < 1 || p.n % 2 == 0) throw Error(Errc::NonTerminating, "WHIPPLE_SPEC needs odd n >= 1");
  const long n = p.n;
  const BigRat& b = *p.b;
  require_generic(b, "b");
  TermSpec s;
  s.linear_factor = true;
  s.slope = 4;
  s.offset = 1;
  s.sign = -1;
  s.numer = {poch(BigRat(1), 1 + n, 2), poch(BigRat(1), 1 - n, 2), poch(b, 1, 2), poch(inv(b), 1, 2),
             poch(BigRat(1), 2, 4)};
  s.denom = {poch(BigRat(1), 2 + n, 2), poch(BigRat(1), 2 - n, 2), poch(inv(b), 2, 2), poch(b, 2, 2),
             poch(BigRat(1), 4, 4)};
  s.z = {BigRat(1), 1};
  IdentityCheck out{IdentityId::WhippleSpec, p, false, {}, {}};
  out.lhs = truncated_sum(s, (n - 1) / 2);
  if (n % 4 == 1) {
    const long m = (n - 1) / 4;
    out.rhs = q_integer(n) * poch_value(b, 2, 4, m) * poch_value(inv(b), 2, 4, m) /
              (poch_value(inv(b), 4, 4, m) * poch_value(b, 4, 4, m));
  } else {
    const long m = (n + 1) / 4;
    out.rhs = q_integer(n) * QRat::monomial(BigRat(-1), 1) * poch_value(b, 0, 4, m) * poch_value(inv(b), 0, 4, m) /
              (poch_value(inv(b), 2, 4, m) * poch_value(b, 2, 4, m));
  }
  return out;
}

IdentityCheck run_watson(IdentityParams p) {
  const long d = p.d, r = p.r, t = p.t, n = p.n;
  if (n < 1 || d < 2) throw Error(Errc::NonTerminating, "WATSON_SPEC needs n >= 1 and d >= 2");
  const long N = t * n;
  if (mod(N - r, d) != 0 || r > N) throw Error(Errc::NonTerminating, "WATSON_SPEC needs tn = r (mod d) and r <= tn");
  if (d + N - d * n > r) throw Error(Errc::DegenerateParameters, "WATSON_SPEC needs d + tn - dn <= r");
  if (std::gcd(n, d) != 1) throw Error(Errc::DegenerateParameters, "WATSON_SPEC needs gcd(n, d) = 1");
  const BigRat& b = *p.b;
  const BigRat& c = *p.c;
  require_generic(b, "b");
  require_generic(c, "c");
  const long L = (N - r) / d;
  TermSpec s;
  s.d = d;
  s.r = r;
  s.linear_factor = true;
  s.slope = 2 * d;
  s.offset = r;
  s.numer = {poch(BigRat(1), r + N, d), poch(BigRat(1), r - N, d), poch(b, r, d), poch(inv(b), r, d),
             poch(c, r, d), poch(BigRat(1), r, d)};
  s.denom = {poch(BigRat(1), d - N, d), poch(BigRat(1), d + N, d), poch(inv(b), d, d), poch(b, d, d),
             poch(inv(c), d, d), poch(BigRat(1), d, d)};
  s.z = {inv(c), 2 * d - 3 * r};

  TermSpec inner;
  inner.numer = {poch(BigRat(1), d - r, d), poch(c, r, d), poch(BigRat(1), r + N, d), poch(BigRat(1), r - N, d)};
  inner.denom = {poch(BigRat(1), d, d), poch(inv(b), d, d), poch(b, d, d), poch(c, 2 * r, d)};
  inner.z = {BigRat(1), d};

  IdentityCheck out{IdentityId::WatsonSpec, p, false, {}, {}};
  try {
    out.lhs = truncated_sum(s, L);
    out.rhs = q_integer(N) * QRat::monomial(c, r).pow(-L) * poch_value(c, 2 * r, d, L) / poch_value(inv(c), d, d, L) *
              truncated_sum(inner, L);
  } catch (const Error& e) {
    if (e.code() == Errc::ZeroDenominatorFactor) throw Error(Errc::DegenerateParameters, e.what());
    throw;
  }
  return out;
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::QChu: return "QCHU";
    case IdentityId::JacksonSpec: return "JACKSON_SPEC";
    case IdentityId::WhippleSpec: return "WHIPPLE_SPEC";
    case IdentityId::WatsonSpec: return "WATSON_SPEC";
  }
  return "?";
}

std::optional<IdentityId> parse_identity_id(std::string_view name) {
  for (IdentityId id : kAllIdentities) {
    if (identity_name(id) == name) return id;
  }
  return std::nullopt;
}

IdentityCheck check_terminating_identity(IdentityId id, const IdentityParams& params, std::uint64_t seed) {
  IdentityParams p = params;
  SeededRng rng(seed);
  if (!p.b) p.b = draw(rng);
  if (!p.c) {
    do {
      p.c = draw(rng);
    } while (*p.c == *p.b);
  }
  IdentityCheck out;
  switch (id) {
    case IdentityId::QChu: out = run_qchu(p); break;
    case IdentityId::JacksonSpec: out = run_jackson(p); break;
    case IdentityId::WhippleSpec: out = run_whipple(p); break;
    case IdentityId::WatsonSpec: out = run_watson(p); break;
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

IdentityParams random_identity_params(IdentityId id, SeededRng& rng) {
  IdentityParams p;
  p.b = draw(rng);
  do {
    p.c = draw(rng);
  } while (*p.c == *p.b);
  switch (id) {
    case IdentityId::QChu:
      p.n = rng.range(0, 8);
      break;
    case IdentityId::JacksonSpec:
      p.t = rng.range(1, 2);
      p.n = p.t + 3 * rng.range(0, 3);
      break;
    case IdentityId::WhippleSpec:
      p.n = 2 * rng.range(0, 7) + 1;
      break;
    case IdentityId::WatsonSpec: {
      struct Shape {
        long d, r, t, n;
      };
      std::vector<Shape> shapes;
      for (long d = 3; d <= 5; ++d) {
        for (long t : {1L, d - 1}) {
          for (long n = 1; n <= 6; ++n) {
            for (long r = -d; r <= t * n; ++r) {
              if (r == 0 || std::gcd(n, d) != 1 || mod(t * n - r, d) != 0 || d + t * n - d * n > r) continue;
              shapes.push_back({d, r, t, n});
            }
          }
        }
      }
      const Shape& s = shapes[rng.below(shapes.size())];
      p.d = s.d;
      p.r = s.r;
      p.t = s.t;
      p.n = s.n;
      break;
    }
  }
  return p;
}

}  // namespace qsc
