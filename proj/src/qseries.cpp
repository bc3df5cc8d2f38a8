#include "qsc/qseries.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace qsc {
namespace {

// Binomial factors 1 - c q^e are split into irreducible-ish "atoms" so that the
// summation engine can cancel common factors by bookkeeping instead of gcds:
// cyclotomic polynomials for c = +-1, otherwise the primitive binomial itself.
struct AtomKey {
  long e;     // degree of the binomial, or n for Phi_n
  BigInt a0;  // constant coefficient (0 marks a cyclotomic atom)
  BigInt ae;  // leading coefficient, positive
};

bool operator<(const AtomKey& x, const AtomKey& y) {
  if (x.e != y.e) return x.e < y.e;
  if (x.a0 != y.a0) return x.a0 < y.a0;
  return x.ae < y.ae;
}

using AtomCounts = std::map<AtomKey, long>;

ZPoly atom_poly(const AtomKey& key) {
  if (key.a0 == 0) return cyclotomic_z(key.e);
  std::vector<BigInt> c(static_cast<std::size_t>(key.e) + 1);
  c.front() = key.a0;
  c.back() = key.ae;
  return ZPoly(std::move(c));
}

void add_cyclotomic_atoms(AtomCounts& out, long f, bool plus_one, long mult) {
  // q^f - 1 = prod_{d|f} Phi_d;  q^f + 1 = prod_{d|2f, d not dividing f} Phi_d
  const long top = plus_one ? 2 * f : f;
  for (long d = 1; d <= top; ++d) {
    if (top % d != 0) continue;
    if (plus_one && f % d == 0) continue;
    out[AtomKey{d, BigInt(0), BigInt(0)}] += mult;
  }
}

// Multiplicative contribution kappa * q^shift * prod atoms^counts of a value.
struct Factored {
  bool zero = false;
  BigRat kappa{1};
  long shift = 0;
  AtomCounts atoms;
};

// Accumulates (1 - c q^e)^mult into f (mult may be negative).
// Returns false when the factor is zero.
bool accumulate_binomial(Factored& f, const BigRat& c, long e, long mult) {
  if (c == 0 || mult == 0) return true;
  if (e == 0) {
    const BigRat v = BigRat(1) - c;
    if (v == 0) return false;
    BigRat m = 1;
    for (long i = 0; i < (mult < 0 ? -mult : mult); ++i) m *= v;
    if (mult < 0) m = BigRat(1) / m;
    f.kappa *= m;
    return true;
  }
  const BigInt& u = c.get_num();
  const BigInt& v = c.get_den();
  BigRat kappa;
  BigInt a0, ae;
  long deg;
  if (e > 0) {
    deg = e;
    if (u > 0) {  // 1 - (u/v) q^e = (-1/v) (u q^e - v)
      a0 = -v;
      ae = u;
      kappa = BigRat(-1, v);
    } else {  // (1/v) (|u| q^e + v)
      a0 = v;
      ae = -u;
      kappa = BigRat(1, v);
    }
  } else {  // 1 - (u/v) q^{-f} = q^{-f} (1/v) (v q^f - u)
    deg = -e;
    a0 = -u;
    ae = v;
    kappa = BigRat(1, v);
    f.shift += e * mult;
  }
  kappa.canonicalize();
  BigRat m = 1;
  for (long i = 0; i < (mult < 0 ? -mult : mult); ++i) m *= kappa;
  if (mult < 0) m = BigRat(1) / m;
  f.kappa *= m;
  if (ae == 1 && (a0 == 1 || a0 == -1)) {
    add_cyclotomic_atoms(f.atoms, deg, a0 == 1, mult);
  } else {
    f.atoms[AtomKey{deg, a0, ae}] += mult;
  }
  return true;
}

void prune(AtomCounts& atoms) {
  for (auto it = atoms.begin(); it != atoms.end();) {
    it = it->second == 0 ? atoms.erase(it) : std::next(it);
  }
}

enum class RatioState { Ok, Zero };

// term_{k+1} / term_k without the q-integer factor.
RatioState ratio_at(const TermSpec& spec, long k, Factored& out) {
  out = Factored{};
  out.kappa = BigRat(spec.sign) * spec.z.coeff;
  out.shift = spec.z.exp;
  for (const auto& f : spec.denom) {
    if (!accumulate_binomial(out, f.arg.coeff, f.arg.exp + f.step * k, -f.power)) {
      throw Error(Errc::ZeroDenominatorFactor, "denominator factor vanishes at k = " + std::to_string(k + 1));
    }
  }
  for (const auto& f : spec.numer) {
    if (!accumulate_binomial(out, f.arg.coeff, f.arg.exp + f.step * k, f.power)) return RatioState::Zero;
  }
  if (out.kappa == 0) return RatioState::Zero;
  prune(out.atoms);
  return RatioState::Ok;
}

// The q-integer factor of term k as lambda * q^l * [m] with m >= 0.
struct LinearPart {
  long lambda = 1;
  long l = 0;
  long m = 1;
};

LinearPart linear_at(const TermSpec& spec, long k) {
  if (!spec.linear_factor) return {1, 0, 1};
  const long m = spec.slope * k + spec.offset;
  if (m == 0) return {0, 0, 0};
  if (m > 0) return {1, 0, m};
  return {-1, m, -m};  // [m] = -q^m [-m]
}

// p * [m], via the sliding-window form of multiplication by 1 + q + ... + q^{m-1}.
ZPoly times_q_integer(const ZPoly& p, long m) {
  if (m == 1 || p.is_zero()) return p;
  if (m == 0) return ZPoly();
  const std::size_t n = p.size() + static_cast<std::size_t>(m) - 1;
  std::vector<BigInt> out(n);
  BigInt window = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < p.size()) window += p[i];
    if (i >= static_cast<std::size_t>(m)) window -= p[i - static_cast<std::size_t>(m)];
    out[i] = window;
  }
  return ZPoly(std::move(out));
}

ZPoly product_of(const AtomCounts& atoms, bool positive) {
  ZPoly out = ZPoly::one();
  for (const auto& [key, cnt] : atoms) {
    const long c = positive ? cnt : -cnt;
    if (c <= 0) continue;
    const ZPoly a = atom_poly(key);
    for (long i = 0; i < c; ++i) out *= a;
  }
  return out;
}

// Drops factors q from the bottom of p, returning how many were removed.
long strip_q(ZPoly& p) {
  if (p.is_zero()) return 0;
  std::size_t z = 0;
  while (p[z] == 0) ++z;
  if (z == 0) return 0;
  std::vector<BigInt> c(p.coeffs().begin() + static_cast<long>(z), p.coeffs().end());
  p = ZPoly(std::move(c));
  return static_cast<long>(z);
}

constexpr unsigned long kFilterPrime = 2305843009213693951UL;  // 2^61 - 1

// Cheap necessary condition for g | f: the remainder vanishes modulo a prime.
bool maybe_divisible(const ZPoly& f, const ZPoly& g) {
  using u64 = unsigned long;
  using u128 = unsigned __int128;
  const u64 p = kFilterPrime;
  const u64 lead = mpz_fdiv_ui(g.lead().get_mpz_t(), p);
  if (lead == 0 || f.degree() < g.degree()) return true;
  std::vector<u64> r(f.size()), gm(g.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  for (std::size_t i = 0; i < g.size(); ++i) gm[i] = mpz_fdiv_ui(g[i].get_mpz_t(), p);
  u64 inv = 1, b = lead, e = p - 2;
  while (e) {
    if (e & 1) inv = static_cast<u64>(static_cast<u128>(inv) * b % p);
    b = static_cast<u64>(static_cast<u128>(b) * b % p);
    e >>= 1;
  }
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = r.size() - 1; i >= dg; --i) {
    const u64 c = static_cast<u64>(static_cast<u128>(r[i]) * inv % p);
    if (c != 0) {
      for (std::size_t j = 0; j < dg; ++j) {
        if (gm[j] == 0) continue;
        const u64 t = static_cast<u64>(static_cast<u128>(c) * gm[j] % p);
        u64& s = r[i - dg + j];
        s = s >= t ? s - t : s + p - t;
      }
    }
    r[i] = 0;
    if (i == 0) break;
  }
  for (std::size_t i = 0; i < dg; ++i) {
    if (r[i] != 0) return false;
  }
  return true;
}

QRat assemble(BigRat sigma, long shift, ZPoly num, ZPoly den) {
  if (num.is_zero() || sigma == 0) return QRat();
  shift += strip_q(num);
  num *= BigInt(sigma.get_num());
  den *= BigInt(sigma.get_den());
  if (shift > 0) num = num.shifted(static_cast<int>(shift));
  if (shift < 0) den = den.shifted(static_cast<int>(-shift));
  return QRat::make(num, den);
}

}  // namespace

QRat pochhammer(const QMonomialArg& arg, long step, long k) {
  if (k < 0) throw Error(Errc::NegativeLength, "negative Pochhammer length " + std::to_string(k));
  if (step < 1) throw std::logic_error("pochhammer: step must be positive");
  Factored f;
  for (long i = 0; i < k; ++i) {
    if (!accumulate_binomial(f, arg.coeff, arg.exp + step * i, 1)) return QRat();
  }
  prune(f.atoms);
  return assemble(f.kappa, f.shift, product_of(f.atoms, true), ZPoly::one());
}

ZPoly q_binomial(long t, long s) {
  if (s < 0 || s > t) throw Error(Errc::OutOfRange, "q_binomial needs 0 <= s <= t");
  // [t choose s] = prod_{i=1}^{s} (1 - q^{t-s+i}) / (1 - q^i), as a product of cyclotomics
  Factored f;
  for (long i = 1; i <= s; ++i) {
    accumulate_binomial(f, BigRat(1), t - s + i, 1);
    accumulate_binomial(f, BigRat(1), i, -1);
  }
  prune(f.atoms);
  for (const auto& [key, cnt] : f.atoms) {
    if (cnt < 0) throw std::logic_error("q_binomial: non-polynomial result");
  }
  ZPoly out = product_of(f.atoms, true);
  out *= BigInt(f.kappa.get_num());
  return out;
}

QRat hyper_term(const TermSpec& spec, long k) {
  if (k < 0) throw Error(Errc::NegativeLength, "negative term index");
  Factored total;
  bool zero = false;
  for (long j = 0; j < k; ++j) {
    Factored r;
    if (ratio_at(spec, j, r) == RatioState::Zero) {
      zero = true;
      continue;  // keep scanning so a vanishing denominator is still reported
    }
    total.kappa *= r.kappa;
    total.shift += r.shift;
    for (const auto& [key, cnt] : r.atoms) total.atoms[key] += cnt;
  }
  const LinearPart lin = linear_at(spec, k);
  if (zero || lin.lambda == 0) return QRat();
  prune(total.atoms);
  ZPoly num = times_q_integer(product_of(total.atoms, true), lin.m);
  return assemble(total.kappa * lin.lambda, total.shift + lin.l, std::move(num), product_of(total.atoms, false));
}

QRat truncated_sum(const TermSpec& spec, long M) {
  if (M < 0) throw Error(Errc::NegativeLength, "negative truncation point");

  std::vector<Factored> ratios;
  ratios.reserve(static_cast<std::size_t>(M));
  for (long j = 0; j < M; ++j) {
    Factored r;
    if (ratio_at(spec, j, r) == RatioState::Zero) break;
    ratios.push_back(std::move(r));
  }
  const long last = static_cast<long>(ratios.size());

  // Horner: S_k = L_k + rho_{k+1} S_{k+1}, with S = sigma q^s N / E and E kept
  // both as a product polynomial and as atom counts.
  LinearPart lin = linear_at(spec, last);
  BigRat sigma = lin.lambda;
  long s = lin.l;
  ZPoly N = q_integer_poly(lin.m);
  AtomCounts E;
  ZPoly Epoly = ZPoly::one();

  for (long k = last - 1; k >= 0; --k) {
    const Factored& rho = ratios[static_cast<std::size_t>(k)];
    if (!N.is_zero()) {
      sigma *= rho.kappa;
      s += rho.shift;
      AtomCounts grow_num, cancel_den, grow_den;
      for (const auto& [key, cnt] : rho.atoms) {
        if (cnt > 0) {
          auto it = E.find(key);
          const long have = it == E.end() ? 0 : it->second;
          const long c = std::min(have, cnt);
          if (c > 0) {
            cancel_den[key] = c;
            it->second -= c;
            if (it->second == 0) E.erase(it);
          }
          if (cnt > c) grow_num[key] = cnt - c;
        } else {
          grow_den[key] = -cnt;
          E[key] += -cnt;
        }
      }
      if (!grow_num.empty()) N *= product_of(grow_num, true);
      if (!cancel_den.empty()) Epoly = *divexact(Epoly, product_of(cancel_den, true));
      if (!grow_den.empty()) Epoly *= product_of(grow_den, true);
    }

    lin = linear_at(spec, k);
    if (lin.lambda == 0) continue;
    if (N.is_zero()) {
      sigma = lin.lambda;
      s = lin.l;
      N = q_integer_poly(lin.m);
      E.clear();
      Epoly = ZPoly::one();
      continue;
    }
    // lambda q^l [m] + sigma q^s N / Epoly over the common denominator Epoly
    const long base = std::min(lin.l, s);
    ZPoly a = times_q_integer(Epoly, lin.m).shifted(static_cast<int>(lin.l - base));
    ZPoly b = N.shifted(static_cast<int>(s - base));
    const BigInt sn = sigma.get_num();
    const BigInt sd = sigma.get_den();
    a *= BigInt(sd * lin.lambda);
    b *= sn;
    N = a + b;
    s = base + strip_q(N);
    if (N.is_zero()) {
      sigma = 0;
      continue;
    }
    BigInt c = content(N);
    if (c != 1) {
      for (auto& x : N.mutable_coeffs()) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    sigma = BigRat(c, sd);
    sigma.canonicalize();
  }

  if (N.is_zero() || sigma == 0) return QRat();

  // Cancel atoms of the denominator that still divide the numerator.
  for (auto& [key, cnt] : E) {
    if (cnt <= 0) continue;
    const ZPoly a = atom_poly(key);
    while (cnt > 0 && maybe_divisible(N, a)) {
      auto quot = divexact(N, a);
      if (!quot) break;
      N = std::move(*quot);
      Epoly = *divexact(Epoly, a);
      --cnt;
    }
  }
  return assemble(sigma, s, std::move(N), std::move(Epoly));
}

}  // namespace qsc
