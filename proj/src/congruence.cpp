#include "qsc/congruence.hpp"

#include <array>

#include "qsc/random.hpp"

namespace qsc {
namespace {

BigRat binding_or(const Bindings& b, const std::string& name, long fallback) {
  auto it = b.find(name);
  return it == b.end() ? BigRat(fallback) : it->second;
}

const BigRat& require(const Bindings& b, const std::string& name) {
  auto it = b.find(name);
  if (it == b.end()) throw Error(Errc::UnboundSymbol, "modulus needs a value for '" + name + "'");
  return it->second;
}

long as_long(const BigRat& v) {
  if (v.get_den() != 1) throw Error(Errc::NonIntegerBound, "non-integer modulus parameter " + v.get_str());
  return v.get_num().get_si();
}

// (1 - x q^N) and (x - q^N) as primitive integer polynomials.
ZPoly one_minus(const BigRat& x, long N) {
  return to_zpoly(to_qpoly(ZPoly::one()) - QPoly::monomial(x, static_cast<int>(N))).second;
}
ZPoly x_minus(const BigRat& x, long N) {
  return to_zpoly(QPoly::constant(x) - QPoly::monomial(BigRat(1), static_cast<int>(N))).second;
}

void add_specialized(Modulus& m, const Bindings& b, long N, bool both) {
  const std::string e = "q^" + std::to_string(N);
  for (const char* sym : {"a", "b"}) {
    const BigRat& x = require(b, sym);
    m.add(one_minus(x, N), 1, std::string("(1-") + sym + "*" + e + ")");
    m.add(x_minus(x, N), 1, std::string("(") + sym + "-" + e + ")");
    if (!both) break;
  }
}

std::string tn_label(long t) { return t == 1 ? "n" : std::to_string(t) + "n"; }

}  // namespace

void Modulus::add(ZPoly poly, long multiplicity, std::string label_text) {
  if (poly.is_constant() || multiplicity <= 0) return;
  for (long i = 0; i < multiplicity; ++i) product *= poly;
  factors.push_back({primitive_part(poly), multiplicity, std::move(label_text)});
}

std::string_view modulus_kind_name(ModulusKind k) {
  switch (k) {
    case ModulusKind::QInt: return "QINT";
    case ModulusKind::PhiPow: return "PHI_POW";
    case ModulusKind::QIntPhiPow: return "QINT_PHI_POW";
    case ModulusKind::HalfSpecialized: return "HALF_SPECIALIZED";
    case ModulusKind::Specialized: return "SPECIALIZED";
    case ModulusKind::SpecializedQInt: return "SPECIALIZED_QINT";
    case ModulusKind::SpecializedQIntPhi: return "SPECIALIZED_QINT_PHI";
  }
  return "?";
}

ModulusKind parse_modulus_kind(std::string_view name) {
  for (ModulusKind k : {ModulusKind::QInt, ModulusKind::PhiPow, ModulusKind::QIntPhiPow, ModulusKind::HalfSpecialized,
                        ModulusKind::Specialized, ModulusKind::SpecializedQInt, ModulusKind::SpecializedQIntPhi}) {
    if (modulus_kind_name(k) == name) return k;
  }
  throw Error(Errc::UnknownKind, "unknown modulus kind '" + std::string(name) + "'");
}

Modulus build_modulus(ModulusKind kind, long n, const Bindings& b) {
  if (n < 1) throw Error(Errc::OutOfRange, "modulus needs n >= 1");
  const long k = as_long(binding_or(b, "k", 1));
  const long t = as_long(binding_or(b, "t", 1));
  const std::string ns = std::to_string(n);
  Modulus m;
  auto add_qint = [&] { m.add(q_integer_poly(n), 1, "[" + ns + "]"); };
  auto add_phi = [&](long power) { m.add(cyclotomic_z(n), power, "Phi_" + ns); };
  const std::string spec_label = "(1-a*q^" + tn_label(t) + ")(a-q^" + tn_label(t) + ")(1-b*q^" + tn_label(t) +
                                 ")(b-q^" + tn_label(t) + ")";
  switch (kind) {
    case ModulusKind::QInt:
      add_qint();
      m.label = "[n]";
      break;
    case ModulusKind::PhiPow:
      add_phi(k);
      m.label = "Phi(n)^" + std::to_string(k);
      break;
    case ModulusKind::QIntPhiPow:
      add_qint();
      add_phi(k);
      m.label = k == 1 ? "[n]*Phi(n)" : "[n]*Phi(n)^" + std::to_string(k);
      break;
    case ModulusKind::HalfSpecialized:
      add_specialized(m, b, t * n, false);
      m.label = "(1-a*q^" + tn_label(t) + ")(a-q^" + tn_label(t) + ")";
      break;
    case ModulusKind::Specialized:
      add_specialized(m, b, t * n, true);
      m.label = spec_label;
      break;
    case ModulusKind::SpecializedQInt:
      add_qint();
      add_specialized(m, b, t * n, true);
      m.label = "[n]*" + spec_label;
      break;
    case ModulusKind::SpecializedQIntPhi:
      add_qint();
      add_phi(1);
      add_specialized(m, b, t * n, true);
      m.label = "[n]*Phi(n)*" + spec_label;
      break;
  }
  return m;
}

Modulus modulus_from_factors(std::vector<ModulusFactor> factors, std::string label) {
  Modulus m;
  for (auto& f : factors) m.add(std::move(f.poly), f.multiplicity, std::move(f.label));
  m.label = std::move(label);
  return m;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Failed: return "failed";
    case Verdict::DenominatorNotUnit: return "denominator_not_unit";
  }
  return "?";
}

CongruenceResult congruent(const QRat& lhs, const QRat& rhs, const Modulus& m) {
  if (m.product.is_zero()) throw std::logic_error("congruent: zero modulus");
  CongruenceResult out;
  const QRat diff = lhs - rhs;
  if (diff.is_zero()) return out;
  if (m.trivial()) {
    out.witness.quotient_degree = diff.znum().degree();
    return out;
  }
  if (!gcd(diff.zden(), m.product).is_constant()) {
    out.verdict = Verdict::DenominatorNotUnit;
    return out;
  }
  const ZPoly P = primitive_part(m.product);
  if (auto quot = divexact(diff.znum(), P)) {
    out.witness.quotient_degree = quot->degree();
    return out;
  }
  out.verdict = Verdict::Failed;
  const QPoly rem = divrem(diff.num(), to_qpoly(P)).second;
  out.witness.remainder_degree = rem.degree();
  out.witness.remainder_lead = rem.lead();
  for (const auto& f : m.factors) {
    ZPoly rest = diff.znum();
    long power = 0;
    while (power < f.multiplicity) {
      auto q = divexact(rest, f.poly);
      if (!q) break;
      rest = std::move(*q);
      ++power;
    }
    if (power < f.multiplicity) {
      out.witness.failing_factor = f.label;
      out.witness.failing_power = power;
      break;
    }
  }
  return out;
}

namespace {

// Exponents of 2, 3, 5, 7 in |x|; the sampler's values have no other prime factors.
std::array<long, 4> small_prime_exponents(const BigRat& x) {
  static constexpr long primes[] = {2, 3, 5, 7};
  std::array<long, 4> e{};
  for (int i = 0; i < 4; ++i) e[i] = padic_valuation(x, primes[i]);
  return e;
}

}  // namespace

bool multiplicatively_dependent(const BigRat& x, const BigRat& y) {
  const auto ex = small_prime_exponents(x);
  const auto ey = small_prime_exponents(y);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (ex[i] * ey[j] != ex[j] * ey[i]) return false;
  return true;
}

ParamSample sample_params(const std::vector<std::string>& symbols, long n, long t, std::uint64_t seed,
                          const SampleGuard& guard) {
  ParamSample out;
  out.seed = seed;
  if (symbols.empty()) return out;
  for (const auto& s : symbols) {
    if (s != "a" && s != "b" && s != "c") throw std::logic_error("sample_params: unsupported symbol " + s);
  }
  SeededRng rng(seed);
  const long N = t * n;
  constexpr long kMaxRejections = 1000;
  while (out.rejection_count <= kMaxRejections) {
    Bindings cand;
    for (const auto& s : symbols) cand[s] = rng.small_rational();

    bool ok = true;
    std::vector<BigRat> seen;
    for (const auto& [name, v] : cand) {
      if (v == 0 || v == 1 || v == -1) ok = false;
      for (const auto& w : seen) {
        // |v|^i = |w|^j lets a modulus factor split off a root shared with a
        // cancelled pole, which a generic parameter never does
        if (v == w || multiplicatively_dependent(v, w)) ok = false;
      }
      seen.push_back(v);
    }
    if (ok && cand.count("a") && cand.count("b")) {
      const BigRat& a = cand["a"];
      const BigRat& b = cand["b"];
      if (a == BigRat(1) / b || a == b + 1 || a == b - 1 || a * b == 1) ok = false;
    }
    if (ok && N > 0) {
      // the factors (1 - x q^N), (x - q^N) over all sampled x must be pairwise coprime
      std::vector<ZPoly> fs;
      for (const auto& [name, v] : cand) {
        fs.push_back(one_minus(v, N));
        fs.push_back(x_minus(v, N));
      }
      fs.push_back(q_integer_poly(n));
      for (std::size_t i = 0; ok && i < fs.size(); ++i) {
        for (std::size_t j = i + 1; ok && j < fs.size(); ++j) {
          if (!gcd(fs[i], fs[j]).is_constant()) ok = false;
        }
      }
    }
    if (ok && guard) {
      try {
        ok = guard(cand);
      } catch (const Error& e) {
        if (e.code() != Errc::DivisionByZero && e.code() != Errc::ZeroDenominatorFactor &&
            e.code() != Errc::DivisionByZeroPoly) {
          throw;
        }
        ok = false;
      }
    }
    if (ok) {
      out.assignments = std::move(cand);
      return out;
    }
    ++out.rejection_count;
  }
  throw Error(Errc::SamplingExhausted, "no admissible parameters after 1000 rejections");
}

}  // namespace qsc
