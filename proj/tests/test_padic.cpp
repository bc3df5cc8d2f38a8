#include "support.hpp"

#include "qsc/catalog.hpp"
#include "qsc/padic.hpp"

using namespace qsc;

namespace {

// a_0(x) in {1, ..., p} with a_0(x) = x (mod p)
long leading_digit(const BigRat& x, long p) {
  const BigInt r = residue_of_rational(x, p, 1).residue();
  return r == 0 ? p : r.get_si();
}

}  // namespace

TEST_CASE("p-adic Gamma values") {
  CHECK(gamma_p(BigRat(0), 7, 3).residue() == 1);
  CHECK(gamma_p(BigRat(1), 5, 2).residue() == 24);
  // Gamma_p(n) = (-1)^n prod_{k<n, p not | k} k
  CHECK(gamma_p(BigRat(4), 5, 2).residue() == 6);
  CHECK(gamma_p(BigRat(7), 5, 2).residue() == residue_of_rational(BigRat(-1 * 2 * 3 * 4 * 6), 5, 2).residue());
  CHECK_ERRC(gamma_p(make_rat(1, 31), 31, 2), Errc::NotPIntegral);
  CHECK_ERRC(gamma_p(make_rat(1, 4), 31, 5), Errc::PrecisionBudgetExceeded);
  CHECK_NOTHROW(gamma_p(make_rat(1, 4), 31, 5, 100'000'000));
}

TEST_CASE("Gamma_p reflection and functional equation") {
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (long num = -12; num <= 12; ++num) {
      for (long den : {1L, 2L, 3L, 4L, 6L}) {
        if (den % p == 0) continue;
        const BigRat x = make_rat(num, den);
        const int N = 3;
        const PadicInt g = gamma_p(x, p, N);
        const PadicInt g1 = gamma_p(BigRat(1) - x, p, N);
        const long sign = leading_digit(x, p) % 2 == 0 ? 1 : -1;
        CHECK_MESSAGE((g * g1) == PadicInt(p, N, BigInt(sign)), "x = " << x << ", p = " << p);
        const PadicInt next = gamma_p(x + 1, p, N);
        if (padic_valuation(x, p) == 0) {
          CHECK((next) == (-residue_of_rational(x, p, N)) * g);
        } else {
          CHECK((next) == -g);
        }
      }
    }
  }
}

TEST_CASE("harmonic and Bernoulli numbers") {
  CHECK(harmonic(0, 2) == 0);
  CHECK(harmonic(2, 1) == make_rat(3, 2));
  CHECK(harmonic(2, 2) == make_rat(5, 4));
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == make_rat(-1, 2));
  CHECK(bernoulli(2) == make_rat(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == make_rat(-691, 2730));
  CHECK(shifted_factorial(make_rat(1, 2), 3) == make_rat(15, 8));
}

TEST_CASE("rational congruences") {
  CHECK(rational_congruent(make_rat(1, 3), BigRat(12), 5, 1));
  CHECK_FALSE(rational_congruent(make_rat(1, 3), BigRat(12), 5, 2));
  CHECK_ERRC(rational_congruent(make_rat(1, 5), BigRat(3), 5, 1), Errc::NotPIntegral);
  // H_6^(2) - (14/3) B_4 = 5929/3600 = 7^2 * 121/3600
  const BigRat sun = harmonic(6, 2) - make_rat(14, 3) * bernoulli(4);
  CHECK(sun == make_rat(5929, 3600));
  CHECK(rational_congruent(sun, BigRat(0), 7, 2));
  CHECK_FALSE(rational_congruent(sun, BigRat(0), 7, 3));
  CHECK_ERRC(rational_congruent(BigRat(1), PadicInt(5, 1, BigInt(1)), 2), Errc::InsufficientPrecision);
  CHECK(rational_congruent(make_rat(1, 2), PadicInt(5, 2, BigInt(13)), 2));
}

TEST_CASE("classical statements at sample primes") {
  auto status = [](const char* id, long p, long s = 1, MChoice m = MChoice::First) {
    StatementParams sp;
    sp.p = p;
    sp.s = s;
    return verify_classical(id, sp, m, kDefaultPrecisionBudget).status;
  };
  CHECK(status("VH_A2", 5) == Status::Verified);
  CHECK(status("COR_1_6", 5) == Status::Verified);
  CHECK(status("COR_1_4", 7, 1, MChoice::First) == Status::Verified);
  CHECK(status("COR_1_4", 7, 1, MChoice::Second) == Status::Verified);
  CHECK(status("COR_1_4", 5, 2) == Status::Verified);
  CHECK(status("VH_D2", 5) == Status::Skipped);
  CHECK(status("SUN_H2", 7) == Status::Verified);
  CHECK(status("LR", 31) == Status::Error);
}

TEST_CASE("classical sums are the q = 1 images of the q-sums") {
  // THM_B at n = 4, M = 1 and THM_A at n = 5, M = 2
  StatementParams b;
  b.n = 4;
  const CongruenceInstance ib = instantiate("THM_B", b, MChoice::First, 0);
  CHECK(ib.lhs.eval(BigRat(1)) == classical_sum(1, 1, 6, 1, make_rat(1, 3), 6));
  StatementParams a;
  a.n = 5;
  const CongruenceInstance ia = instantiate("THM_A", a, MChoice::First, 0);
  CHECK(ia.lhs.eval(BigRat(1)) == classical_sum(2, -1, 4, 1, make_rat(1, 2), 5));
  StatementParams c;
  c.n = 5;
  const CongruenceInstance ic = instantiate("THM_C", c, MChoice::Second, 0);
  CHECK(ic.lhs.eval(BigRat(1)) == classical_sum(4, 1, 6, 1, make_rat(1, 3), 6));
}
