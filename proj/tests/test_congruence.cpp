#include "support.hpp"

#include "qsc/congruence.hpp"
#include "qsc/random.hpp"

using namespace qsc;
using qsc::testing::dsl;
using qsc::testing::zp;

namespace {

Modulus single(const ZPoly& p, long mult = 1) {
  Modulus m;
  m.add(p, mult, "m");
  m.label = "m";
  return m;
}

QRat random_poly_qrat(SeededRng& rng, int degree) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = rng.range(-5, 5);
  return QRat(ZPoly(std::move(c)));
}

}  // namespace

TEST_CASE("modulus construction") {
  const Modulus m = build_modulus(ModulusKind::QIntPhiPow, 3, {{"k", BigRat(4)}});
  REQUIRE(m.factors.size() == 2);
  CHECK(m.factors[0].poly == q_integer_poly(3));
  CHECK(m.factors[0].multiplicity == 1);
  CHECK(m.factors[1].poly == cyclotomic_z(3));
  CHECK(m.factors[1].multiplicity == 4);
  CHECK(m.product == pow(cyclotomic_z(3), 5));

  const Modulus s = build_modulus(ModulusKind::Specialized, 2,
                                  {{"t", BigRat(1)}, {"a", make_rat(2, 3)}, {"b", BigRat(5)}});
  REQUIRE(s.factors.size() == 4);
  const QRat expected = dsl("(1-(2/3)*q^2)*((2/3)-q^2)*(1-5*q^2)*(5-q^2)");
  CHECK(divides(s.product, expected.znum()));
  CHECK(s.product.degree() == 8);

  const Modulus one = build_modulus(ModulusKind::QInt, 1, {});
  CHECK(one.factors.empty());
  CHECK(one.trivial());
  CHECK(parse_modulus_kind(modulus_kind_name(ModulusKind::SpecializedQIntPhi)) == ModulusKind::SpecializedQIntPhi);
  CHECK_ERRC(parse_modulus_kind("NOPE"), Errc::UnknownKind);
}

TEST_CASE("congruence verdicts") {
  CHECK(congruent(dsl("q^2"), QRat(1), single(zp({1, 1}))).verdict == Verdict::Verified);
  CHECK(congruent(dsl("1/(q+1)"), QRat(0), single(zp({1, 1}))).verdict == Verdict::DenominatorNotUnit);
  const CongruenceResult bad = congruent(dsl("q^2"), QRat(0), single(zp({1, 1})));
  CHECK(bad.verdict == Verdict::Failed);
  CHECK(bad.witness.remainder_degree == 0);
  CHECK(bad.witness.remainder_lead != 0);
  CHECK(congruent(QRat(5), QRat(5), build_modulus(ModulusKind::QInt, 1, {})).verdict == Verdict::Verified);
}

TEST_CASE("the two-term sum at n = 2 against 5[4](q^2;q^3)_1^3/(q^3;q^3)_1^3") {
  const QRat lhs = dsl("1 + qint(7)*q^3*(1-q)^6/(1-q^3)^6");
  const QRat rhs = dsl("5*qint(4)*(1-q^2)^3/(1-q^3)^3");
  const Modulus m = build_modulus(ModulusKind::QIntPhiPow, 2, {{"k", BigRat(5)}});
  const CongruenceResult r = congruent(lhs, rhs, m);
  CHECK(r.verdict == Verdict::Verified);
  // one more power of Phi_2 fails, and the witness names it
  const Modulus too_much = build_modulus(ModulusKind::QIntPhiPow, 2, {{"k", BigRat(7)}});
  const CongruenceResult f = congruent(lhs, rhs, too_much);
  CHECK(f.verdict == Verdict::Failed);
  CHECK(f.witness.failing_factor.find("Phi") != std::string::npos);
}

TEST_CASE("seeded parameter sampling") {
  const ParamSample s1 = sample_params({"a", "b"}, 2, 1, 42);
  const ParamSample s2 = sample_params({"a", "b"}, 2, 1, 42);
  CHECK(s1.assignments == s2.assignments);
  CHECK(s1.assignments.at("a") == make_rat(4, 5));
  CHECK(s1.assignments.at("b") == make_rat(-7, 6));
  CHECK(s1.rejection_count == 0);
  CHECK(sample_params({}, 5, 1, 1).assignments.empty());
  CHECK_ERRC(sample_params({"a", "b"}, 2, 1, 42, [](const Bindings& b) { return b.at("a") == b.at("b"); }),
             Errc::SamplingExhausted);
  // poles in the guard count as rejections, not errors
  const ParamSample g = sample_params({"a"}, 3, 1, 5, [](const Bindings& b) {
    if (b.at("a") > 0) throw Error(Errc::DivisionByZero, "pole");
    return true;
  });
  CHECK(g.assignments.at("a") < 0);
}

TEST_CASE("sampled values avoid degenerate points") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Bindings b = sample_params({"a", "b", "c"}, 4, 1, seed).assignments;
    for (const auto& [k, v] : b) {
      CHECK(v != 0);
      CHECK(abs(v) != 1);
    }
    CHECK(b.at("a") != b.at("b"));
    CHECK(b.at("a") * b.at("b") != 1);
    CHECK_FALSE(multiplicatively_dependent(b.at("b"), b.at("c")));
  }
  CHECK(multiplicatively_dependent(make_rat(1, 8), make_rat(1, 4)));
  CHECK(multiplicatively_dependent(make_rat(2, 3), make_rat(9, 4)));
  CHECK_FALSE(multiplicatively_dependent(make_rat(2, 3), make_rat(3, 4)));
}

TEST_CASE("congruence is an equivalence compatible with + and *") {
  SeededRng rng(31337);
  for (int i = 0; i < 100; ++i) {
    const long n = rng.range(2, 12);
    const Modulus m = build_modulus(ModulusKind::QIntPhiPow, n, {{"k", BigRat(rng.range(1, 3))}});
    const QRat P(m.product);
    const QRat a = random_poly_qrat(rng, 6);
    const QRat b = a + P * random_poly_qrat(rng, 3);
    const QRat c = b + P * random_poly_qrat(rng, 2);
    const QRat x = random_poly_qrat(rng, 4);
    const QRat y = x + P * random_poly_qrat(rng, 2);
    auto ok = [&](const QRat& u, const QRat& v) { return congruent(u, v, m).verdict == Verdict::Verified; };
    CHECK(ok(a, a));
    CHECK(ok(a, b));
    CHECK(ok(b, a));
    CHECK(ok(a, c));
    CHECK(ok(a + x, b + y));
    CHECK(ok(a * x, b * y));
    // a unit denominator keeps the relation
    const QRat u = QRat(zp({2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(ok(a / u, b / u));
    if (!(a - b - QRat(1)).is_zero()) CHECK_FALSE(ok(a, b + QRat(1)));
  }
}

TEST_CASE("the weight Theta(a, b) is 1 modulo the a-factors and 0 modulo the b-factors") {
  const char* theta = "(1-b*q^n)*(b-q^n)*(-1-a^2+a*q^n)/((a-b)*(1-a*b))";
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    for (long n = 1; n <= 8; ++n) {
      const Bindings ab = sample_params({"a", "b"}, n, 1, derive_seed(seed, static_cast<std::uint64_t>(n))).assignments;
      Bindings env = ab;
      env["n"] = BigRat(n);
      const QRat w_ab = dsl(theta, env);
      Bindings swapped = env;
      std::swap(swapped["a"], swapped["b"]);
      const QRat w_ba = dsl(theta, swapped);
      const Modulus ma = build_modulus(ModulusKind::HalfSpecialized, n, {{"a", ab.at("a")}});
      const Modulus mb = build_modulus(ModulusKind::HalfSpecialized, n, {{"a", ab.at("b")}});
      CHECK(congruent(w_ab, QRat(1), ma).verdict == Verdict::Verified);
      CHECK(congruent(w_ba, QRat(1), mb).verdict == Verdict::Verified);
      CHECK(congruent(w_ab, QRat(0), mb).verdict == Verdict::Verified);
    }
  }
}
