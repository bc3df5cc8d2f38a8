#include "support.hpp"

using namespace qsc;
using qsc::testing::dsl;
using qsc::testing::zp;

TEST_CASE("parsing builds the expected nodes") {
  CHECK(parse_expr("qint(3)")->kind == ExprKind::QInt);
  CHECK(parse_expr("poch(q^2; q^3; (n-1)/3)^3 / poch(q^3; q^3; (n-1)/3)^3")->kind == ExprKind::Div);
  CHECK(parse_expr("sum(j, 1, (n-1)/2, (-1)^(j+1) * q^(2*j-n) / qint(2*j)^2)")->kind == ExprKind::Sum);
}

TEST_CASE("evaluation") {
  CHECK(dsl("qint(6)") == QRat(zp({1, 1, 1, 1, 1, 1})));
  CHECK(dsl("sum(j, 3, 1, q^j)") == QRat(0));
  CHECK(dsl("q^-2*q^2") == QRat(1));
  const Bindings n4{{"n", BigRat(4)}};
  const QRat rhs = dsl(
      "qint(n)*poch(q^2; q^3; (n-1)/3)^3/poch(q^3; q^3; (n-1)/3)^3"
      "*(1 + qint(n)^2*(2-q^n)*sum(j, 1, (n-1)/3, q^(3*j-1)/qint(3*j-1)^2 - q^(3*j)/qint(3*j)^2))",
      n4);
  const QRat expected = dsl("qint(4)*(1-q^2)^3/(1-q^3)^3*(1 + qint(4)^2*(2-q^4)*(q^2/qint(2)^2 - q^3/qint(3)^2))");
  CHECK(rhs == expected);
  CHECK(dsl("phi(6)") == QRat(zp({1, -1, 1})));
}

TEST_CASE("evaluation errors") {
  CHECK_ERRC(dsl("1/(q-q)"), Errc::DivisionByZero);
  CHECK_ERRC(dsl("0*(1/(q-q))"), Errc::DivisionByZero);
  CHECK_ERRC(dsl("x + 1"), Errc::UnboundSymbol);
  CHECK_ERRC(dsl("poch(q; q^1; n)", {{"n", make_rat(1, 2)}}), Errc::NonIntegerBound);
  CHECK_ERRC(dsl("poch(q; q^1; -1)"), Errc::NegativeLength);
  CHECK_ERRC(parse_expr("qint(3"), Errc::SyntaxError);
  CHECK_THROWS_AS(parse_expr("frob(3)"), Error);
}

TEST_CASE("print and parse round trip") {
  const char* samples[] = {
      "qint(n)*poch(q^2; q^4; (n-1)/4)^2/poch(q^4; q^4; (n-1)/4)^2",
      "sum(j, 1, (n-1)/2, (-1)^(j+1)*q^(2*j-n)/qint(2*j)^2)",
      "-q^(-n)*(1-b*q^n)*(b-q^n)",
      "poch(a*q^r, q^r/a; q^d; k)",
      "2/3 - -x^2",
  };
  for (const char* s : samples) {
    const ExprPtr e = parse_expr(s);
    const ExprPtr again = parse_expr(print_expr(*e));
    CHECK_MESSAGE(same_ast(*e, *again), s << " -> " << print_expr(*e));
  }
}

TEST_CASE("product factors of a modulus expression") {
  const Bindings b{{"n", BigRat(5)}};
  const auto fs = product_factors(parse_expr("qint(n)*phi(n)^4"), b);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].second == 1);
  CHECK(fs[1].second == 4);
}

TEST_CASE("spec files") {
  const SpecFile spec = parse_spec(
      "let n = 5\n"
      "let m = n + 2\n"
      "check gs: sum(k, 0, n-1, qint(6*k+1)*poch(q; q^3; k)^6/poch(q^3; q^3; k)^6*q^(3*k)) == 0 mod qint(n)*phi(n)\n");
  REQUIRE(spec.checks.size() == 1);
  const Bindings b = spec_bindings(spec);
  CHECK(b.at("m") == 7);
  CHECK(spec.checks[0].name == "gs");
  CHECK_ERRC(parse_spec("let n = y\n"), Errc::UnboundSymbol);
  CHECK_ERRC(parse_spec("check x: 1 == 1\n"), Errc::SyntaxError);
}
