#include <cstdint>
#include <vector>

#include "qsc/polyring.hpp"

// Multi-modular gcd over Z[q]: images modulo 62-bit primes are combined by CRT
// until the primitive candidate stops changing, then certified by exact division.

namespace qsc {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

const std::vector<u64>& gcd_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    for (u64 c = (u64{1} << 62) - 1; out.size() < 256; c -= 2) {
      if (is_prime(c)) out.push_back(c);
    }
    return out;
  }();
  return primes;
}

using ModPoly = std::vector<u64>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const ZPoly& f, u64 p) {
  ModPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    // mpz_fdiv_ui returns the least nonnegative residue
    out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p));
  }
  trim(out);
  return out;
}

// a <- a mod b, b nonzero and monic
void rem_inplace(ModPoly& a, const ModPoly& b, u64 p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const u64 c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (c != 0) {
      for (std::size_t j = 0; j < db; ++j) {
        if (b[j] == 0) continue;
        u64 t = mulmod(c, b[j], p);
        u64& slot = a[shift + j];
        slot = slot >= t ? slot - t : slot + p - t;
      }
    }
    a.pop_back();
  }
  trim(a);
}

void make_monic(ModPoly& a, u64 p) {
  if (a.empty() || a.back() == 1) return;
  const u64 inv = invmod(a.back(), p);
  for (auto& x : a) x = mulmod(x, inv, p);
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  if (a.size() < b.size()) std::swap(a, b);
  make_monic(b, p);
  while (!b.empty()) {
    rem_inplace(a, b, p);
    std::swap(a, b);
    make_monic(b, p);
  }
  make_monic(a, p);
  return a;
}

BigInt symmetric(const BigInt& c, const BigInt& modulus, const BigInt& half) {
  return c > half ? BigInt(c - modulus) : c;
}

// Primitive Euclid over Z; only reached if the prime table is exhausted.
ZPoly gcd_euclid(ZPoly a, ZPoly b) {
  while (!b.is_zero()) {
    auto [quot, rem] = divrem(to_qpoly(a), to_qpoly(b));
    (void)quot;
    a = std::move(b);
    b = rem.is_zero() ? ZPoly() : to_zpoly(rem).second;
  }
  return primitive_part(a);
}

}  // namespace

ZPoly gcd(const ZPoly& f, const ZPoly& g) {
  if (f.is_zero()) return primitive_part(g);
  if (g.is_zero()) return primitive_part(f);
  if (f.is_constant() || g.is_constant()) return ZPoly::one();

  ZPoly F = primitive_part(f);
  ZPoly G = primitive_part(g);
  if (F == G) return F;
  if (F.degree() < G.degree()) std::swap(F, G);
  if (G.nonzero_terms() <= 2 && divexact(F, G)) return G;

  const BigInt gamma = gcd(F.lead(), G.lead());
  std::vector<BigInt> acc;
  int acc_deg = -1;
  BigInt modulus;
  ZPoly last;

  for (const u64 p : gcd_primes()) {
    const unsigned long pl = static_cast<unsigned long>(p);
    if (mpz_divisible_ui_p(F.lead().get_mpz_t(), pl) || mpz_divisible_ui_p(G.lead().get_mpz_t(), pl)) continue;
    ModPoly h = gcd_mod(reduce(F, p), reduce(G, p), p);
    const int dh = static_cast<int>(h.size()) - 1;
    if (dh == 0) return ZPoly::one();
    if (acc_deg != -1 && dh > acc_deg) continue;  // unlucky prime

    const u64 gp = mpz_fdiv_ui(gamma.get_mpz_t(), pl);
    for (auto& x : h) x = mulmod(x, gp, p);

    if (acc_deg == -1 || dh < acc_deg) {
      acc_deg = dh;
      acc.assign(h.size(), BigInt(0));
      for (std::size_t i = 0; i < h.size(); ++i) acc[i] = h[i];
      modulus = p;
      last = ZPoly();
    } else {
      const u64 minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), pl), p);
      for (std::size_t i = 0; i < h.size(); ++i) {
        const u64 ci = mpz_fdiv_ui(acc[i].get_mpz_t(), pl);
        const u64 diff = h[i] >= ci ? h[i] - ci : h[i] + p - ci;
        const u64 t = mulmod(diff, minv, p);
        mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(t));
      }
      modulus *= p;
    }

    const BigInt half = modulus / 2;
    std::vector<BigInt> lifted(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) lifted[i] = symmetric(acc[i], modulus, half);
    ZPoly candidate = primitive_part(ZPoly(std::move(lifted)));
    if (candidate.degree() == acc_deg && candidate == last) {
      if (divexact(F, candidate) && divexact(G, candidate)) return candidate;
    }
    last = std::move(candidate);
  }
  return gcd_euclid(F, G);
}

}  // namespace qsc
