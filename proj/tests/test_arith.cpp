#include "support.hpp"

#include "qsc/arith.hpp"
#include "qsc/random.hpp"

using namespace qsc;

TEST_CASE("p-adic valuation") {
  CHECK(padic_valuation(make_rat(50, 3), 5) == 2);
  CHECK(padic_valuation(BigRat(0), 7) == kInfiniteValuation);
  CHECK(padic_valuation(make_rat(1, 25), 5) == -2);
  CHECK(padic_valuation(BigInt(96), 2) == 5);
}

TEST_CASE("residue of a rational") {
  CHECK(residue_of_rational(make_rat(1, 2), 5, 2).residue() == 13);
  CHECK(residue_of_rational(BigRat(3), 7, 1).residue() == 3);
  CHECK(residue_of_rational(BigRat(-1), 5, 2).residue() == 24);
  CHECK_ERRC(residue_of_rational(make_rat(1, 5), 5, 3), Errc::NotPIntegral);
}

TEST_CASE("inverse modulo a prime power") {
  CHECK(inv_mod_prime_power(BigInt(3), 5, 2) == 17);
  CHECK(inv_mod_prime_power(BigInt(1), 7, 3) == 1);
  CHECK_ERRC(inv_mod_prime_power(BigInt(10), 5, 2), Errc::NotAUnit);
}

TEST_CASE("PadicInt arithmetic") {
  const PadicInt x(7, 3, BigInt(100));
  const PadicInt y = x.inverse();
  CHECK((x * y) == PadicInt::one(7, 3));
  CHECK(x.pow(3) == x * x * x);
  CHECK((x - x).residue() == 0);
  CHECK(x.truncate(1).residue() == 2);
  CHECK_FALSE(PadicInt(7, 2, BigInt(14)).is_unit());
  CHECK_ERRC(PadicInt(7, 2, BigInt(14)).inverse(), Errc::NotAUnit);
  CHECK_THROWS_AS(x + PadicInt(7, 2, BigInt(1)), std::logic_error);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("-6/4") == make_rat(-3, 2));
  CHECK(to_string(make_rat(10, -4)) == "-5/2");
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1));
  CHECK(pow_int(3, 4) == 81);
}

TEST_CASE("seeded rng is deterministic") {
  SeededRng a(99), b(99);
  for (int i = 0; i < 20; ++i) CHECK(a.small_rational() == b.small_rational());
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
}
