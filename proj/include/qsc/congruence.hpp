#pragma once

// Moduli with factor structure, the rational-function congruence test, and
// seeded specialization of the free parameters a, b, c.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/expr.hpp"
#include "qsc/polyring.hpp"

namespace qsc {

enum class ModulusKind {
  QInt,                 // [n]
  PhiPow,               // Phi_n^k
  QIntPhiPow,           // [n] Phi_n^k
  HalfSpecialized,      // (1 - a q^{tn})(a - q^{tn})
  Specialized,          // (1 - a q^{tn})(a - q^{tn})(1 - b q^{tn})(b - q^{tn})
  SpecializedQInt,      // [n] * Specialized
  SpecializedQIntPhi,   // [n] Phi_n * Specialized
};

std::string_view modulus_kind_name(ModulusKind k);
/// Throws UnknownKind.
ModulusKind parse_modulus_kind(std::string_view name);

struct ModulusFactor {
  ZPoly poly;  // primitive, positive leading coefficient
  long multiplicity = 1;
  std::string label;  // e.g. "[7]", "Phi_7", "(1-a*q^7)"
};

struct Modulus {
  std::vector<ModulusFactor> factors;
  ZPoly product = ZPoly::one();
  std::string label;  // symbolic, e.g. "[n]*Phi(n)^4"

  bool trivial() const { return product.is_constant(); }
  void add(ZPoly poly, long multiplicity, std::string label);
};

/// Reads k (Phi power, default 1), t (default 1), a and b from the bindings.
Modulus build_modulus(ModulusKind kind, long n, const Bindings& bindings);
/// Modulus from explicit factors; constant factors are dropped.
Modulus modulus_from_factors(std::vector<ModulusFactor> factors, std::string label);

enum class Verdict { Verified, Failed, DenominatorNotUnit };

std::string_view verdict_name(Verdict v);

struct Witness {
  long quotient_degree = -1;  // Verified: degree of (A - B) numerator / modulus; -1 when A = B
  long remainder_degree = -1;
  BigRat remainder_lead;
  std::string failing_factor;  // first factor whose full power does not divide
  long failing_power = 0;      // highest power of that factor that does divide
};

struct CongruenceResult {
  Verdict verdict = Verdict::Verified;
  Witness witness;
};

/// A = B (mod P): with A - B = N/D reduced, requires gcd(D, P) = 1 and P | N.
CongruenceResult congruent(const QRat& lhs, const QRat& rhs, const Modulus& m);

struct ParamSample {
  std::uint64_t seed = 0;
  Bindings assignments;
  long rejection_count = 0;
};

/// Extra admissibility test applied to a candidate assignment.
using SampleGuard = std::function<bool(const Bindings&)>;

/// |x|^i = |y|^j for some positive i, j; x, y have numerators and denominators below 10.
bool multiplicatively_dependent(const BigRat& x, const BigRat& y);

/// Draws each symbol in `symbols` (a subset of {a, b, c}) as u/v with
/// 1 <= |u|, v <= 9, rejecting degenerate points: 0 or +-1, repeated values,
/// a in {b, 1/b, b+1, b-1}, multiplicatively dependent pairs (|x|^i = |y|^j),
/// and points where two factors of the specialized modulus at exponent tn
/// share a root. Throws SamplingExhausted after 1000
/// rejections.
ParamSample sample_params(const std::vector<std::string>& symbols, long n, long t, std::uint64_t seed,
                          const SampleGuard& guard = {});

}  // namespace qsc
