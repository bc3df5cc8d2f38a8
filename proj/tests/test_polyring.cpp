#include "support.hpp"

#include "qsc/random.hpp"

using namespace qsc;
using qsc::testing::qp;
using qsc::testing::zp;

namespace {

QPoly random_qpoly(SeededRng& rng, int max_degree) {
  std::vector<BigRat> c(static_cast<std::size_t>(rng.range(0, max_degree)) + 1);
  for (auto& x : c) x = rng.below(4) == 0 ? BigRat(0) : rng.small_rational();
  return QPoly(std::move(c));
}

QRat random_qrat(SeededRng& rng) {
  QPoly den = random_qpoly(rng, 3);
  if (den.is_zero()) den = QPoly::one();
  return ratfun_normalize(random_qpoly(rng, 4), den);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_z(1) == zp({-1, 1}));
  CHECK(cyclotomic_z(4) == zp({1, 0, 1}));
  CHECK(cyclotomic_z(6) == zp({1, -1, 1}));
  CHECK(cyclotomic_z(12) == zp({1, 0, -1, 0, 1}));
}

TEST_CASE("q-integers") {
  CHECK(q_integer_poly(3) == zp({1, 1, 1}));
  CHECK(q_integer_poly(0).is_zero());
  CHECK(q_integer_poly(1) == ZPoly::one());
  // [-r] = -q^{-r} [r]
  CHECK(q_integer(-2) == -(QRat::monomial(BigRat(1), -2) * q_integer(2)));
}

TEST_CASE("division with remainder") {
  auto [a, b] = poly_divrem(qp({-1, 0, 1}), qp({1, 1}));
  CHECK(a == qp({-1, 1}));
  CHECK(b.is_zero());
  auto [c, d] = poly_divrem(qp({0, 0, 0, 1}), qp({0, 0, 1}));
  CHECK(c == qp({0, 1}));
  CHECK(d.is_zero());
  auto [e, f] = poly_divrem(qp({1, 0, 1}), qp({-1, 1}));
  CHECK(e == qp({1, 1}));
  CHECK(f == qp({2}));
  CHECK_ERRC(poly_divrem(qp({1}), QPoly()), Errc::DivisionByZeroPoly);
}

TEST_CASE("gcd and extended gcd") {
  CHECK(gcd(zp({-1, 0, 1}), zp({0, -1, 1})) == zp({-1, 1}));
  CHECK(gcd(cyclotomic_z(3), cyclotomic_z(4)) == ZPoly::one());
  const GcdExt g = poly_gcd_ext(qp({1, 1}), qp({1, 1}));
  CHECK(g.gcd == qp({1, 1}));
  CHECK(g.u * qp({1, 1}) + g.v * qp({1, 1}) == qp({1, 1}));
  const GcdExt h = poly_gcd_ext(qp({-1, 0, 1}), qp({0, -1, 1}));
  CHECK(h.u * qp({-1, 0, 1}) + h.v * qp({0, -1, 1}) == h.gcd);
  CHECK(divexact(zp({-1, 0, 1}), zp({-1, 1})) == zp({1, 1}));
  CHECK_FALSE(divexact(zp({1, 0, 1}), zp({-1, 1})).has_value());
}

TEST_CASE("Chinese remaindering") {
  const QRat x = crt_combine(QRat(1), qp({-1, 1}), QRat(0), qp({1, 1}));
  CHECK(x == ratfun_normalize(qp({1, 1}), qp({2})));
  const QRat y = crt_combine(QRat(5), qp({-1, 1}), QRat(5), qp({1, 1}));
  CHECK(y == QRat(5));
  CHECK(crt_combine(QRat(0), cyclotomic(3), QRat(0), cyclotomic(4)).is_zero());
  CHECK_ERRC(crt_combine(QRat(1), qp({-1, 1}), QRat(0), qp({-1, 1})), Errc::ModuliNotCoprime);
}

TEST_CASE("rational functions are kept reduced") {
  CHECK(QRat::make(zp({-1, 0, 1}), zp({-1, 1})) == QRat(zp({1, 1})));
  CHECK(QRat::make(zp({0, 2}), zp({2})) == QRat::q());
  const ZPoly one_minus_q = zp({1, -1});
  const ZPoly one_minus_q3 = zp({1, 0, 0, -1});
  const QRat r = QRat::make(pow(one_minus_q, 6), pow(one_minus_q3, 6));
  CHECK(r == QRat(pow(zp({1, 1, 1}), 6)).inverse());
  CHECK(r.zden().lead() > 0);
  CHECK_ERRC(QRat::make(zp({1}), ZPoly()), Errc::DivisionByZeroPoly);
  CHECK_ERRC(QRat().inverse(), Errc::DivisionByZero);
  CHECK(QRat::make(zp({1, 1}), zp({1, -1})).eval(BigRat(3)) == -2);
  CHECK_ERRC(QRat::make(zp({1}), zp({-1, 1})).eval(BigRat(1)), Errc::DivisionByZero);
}

TEST_CASE("reduction modulo a polynomial") {
  // q^2 = -1 (mod q^2 + 1)
  CHECK(reduce_mod(QRat(zp({0, 0, 1})), qp({1, 0, 1})) == qp({-1}));
  CHECK_ERRC(reduce_mod(QRat(zp({1, 1})).inverse(), qp({1, 1})), Errc::DenominatorNotUnit);
}

TEST_CASE("ring and field axioms on seeded samples") {
  SeededRng rng(2024);
  for (int i = 0; i < 100; ++i) {
    const QRat a = random_qrat(rng), b = random_qrat(rng), c = random_qrat(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QRat(0));
    CHECK(a * QRat(1) == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == QRat(1));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("q^n - 1 is the product of Phi_d over d | n") {
  for (long n = 1; n <= 60; ++n) {
    ZPoly prod = ZPoly::one();
    ZPoly qint = ZPoly::one();
    for (long d = 1; d <= n; ++d) {
      if (n % d) continue;
      prod *= cyclotomic_z(d);
      if (d > 1) qint *= cyclotomic_z(d);
    }
    CHECK_MESSAGE(prod == ZPoly::monomial(BigInt(1), static_cast<int>(n)) - ZPoly::one(), "n = " << n);
    CHECK_MESSAGE(qint == q_integer_poly(n), "n = " << n);
  }
}

TEST_CASE("CRT round trips on seeded residues") {
  SeededRng rng(77);
  for (int i = 0; i < 100; ++i) {
    const long n1 = rng.range(1, 20);
    long n2 = rng.range(1, 20);
    if (n2 == n1) n2 = n1 + 1;
    const QPoly m1 = cyclotomic(n1), m2 = cyclotomic(n2);
    const QPoly r1 = poly_divrem(random_qpoly(rng, 6), m1).second;
    const QPoly r2 = poly_divrem(random_qpoly(rng, 6), m2).second;
    const QRat x = crt_combine(QRat(r1), m1, QRat(r2), m2);
    CHECK(reduce_mod(x, m1) == r1);
    CHECK(reduce_mod(x, m2) == r2);
    CHECK(x.is_polynomial());
    CHECK(x.znum().degree() < m1.degree() + m2.degree());
  }
}
