#include "support.hpp"

#include <set>

#include "qsc/catalog.hpp"

using namespace qsc;
using qsc::testing::dsl;

namespace {

StatementParams at_n(long n) {
  StatementParams sp;
  sp.n = n;
  return sp;
}

StatementParams at_ndr(long n, long d, long r) {
  StatementParams sp;
  sp.n = n;
  sp.d = d;
  sp.r = r;
  return sp;
}

bool holds(const CongruenceInstance& inst) { return check_instance(inst).verified(); }

}  // namespace

TEST_CASE("catalog inventory") {
  const std::set<std::string> expected = {
      "THM_A",  "THM_B",     "THM_C",     "GS_16",     "GWY",      "PROP_2_1", "THM_2_2", "NW_A",
      "NW_B",   "LEM_REL",   "LEM_WEI_K", "LEM_WEI_M", "LEM_WEI_N", "PROP_3_1", "THM_3_2", "THM_3_3",
      "NW_23",  "LEM_OO",    "LEM_PP",    "THM_D",     "THM_E",    "PROP_5_3", "THM_5_4", "THM_5_5",
      "VH_A2",  "VH_D2",     "LIU",       "LR",        "COR_1_4",  "COR_1_5",  "COR_1_6", "PROP_1_7",
      "PROP_1_8", "COR_5_E", "COR_5_G",   "COR_5_H",   "SUN_H2",   "SUN_H2HALF", "SUN_H3"};
  std::set<std::string> ids;
  for (const auto& s : list_statements()) ids.insert(s.id);
  CHECK(ids == expected);
  CHECK(find_statement("THM_A") != nullptr);
  CHECK(find_statement("NO_SUCH") == nullptr);
  CHECK_ERRC(side_violation("NO_SUCH", at_n(3)), Errc::UnknownStatement);
}

TEST_CASE("instances carry the stated modulus and closed form") {
  const CongruenceInstance c = instantiate("THM_C", at_n(2), MChoice::First, 0);
  CHECK(c.M == 1);
  CHECK(c.modulus.product == pow(cyclotomic_z(2), 6));
  CHECK(c.rhs == dsl("5*qint(4)*poch(q^2; q^3; 1)^3/poch(q^3; q^3; 1)^3"));
  CHECK(holds(c));

  CHECK_ERRC(instantiate("THM_B", at_n(5), MChoice::First, 0), Errc::SideConditionViolated);
  CHECK(side_violation("THM_B", at_n(5)).has_value());
  CHECK_FALSE(side_violation("THM_B", at_n(7)).has_value());
  CHECK(truncation_values("THM_A", at_n(9)) == std::vector<long>{4, 8});
}

TEST_CASE("THM_D at n = 7, d = 3, r = 1, c = 1") {
  StatementParams sp = at_ndr(7, 3, 1);
  sp.c = BigRat(1);
  const CongruenceInstance d = instantiate("THM_D", sp, MChoice::First, 0);
  CHECK(d.M == 2);
  CHECK(d.modulus.product == q_integer_poly(7) * pow(cyclotomic_z(7), 4));
  CHECK(holds(d));
}

TEST_CASE("small cases of the main congruences") {
  for (MChoice m : {MChoice::First, MChoice::Second}) {
    const CongruenceInstance a = instantiate("THM_A", at_n(3), m, 0);
    CHECK(holds(a));
    CHECK(a.branch == "n = 3 (mod 4)");
  }
  CHECK(holds(instantiate("GS_16", at_n(4), MChoice::First, 0)));
  CHECK(holds(instantiate("GS_16", at_n(5), MChoice::First, 0)));
  CHECK(holds(instantiate("GWY", at_n(5), MChoice::Second, 0)));
}

TEST_CASE("a corrupted right-hand side fails with a witness") {
  for (const char* id : {"THM_A", "THM_B", "THM_C"}) {
    const long n = std::string(id) == "THM_C" ? 5 : 7;
    CongruenceInstance inst = instantiate(id, at_n(n), MChoice::First, 0);
    inst.rhs *= QRat::q();
    const CongruenceResult r = congruent(inst.lhs, inst.rhs, inst.modulus);
    CHECK(r.verdict == Verdict::Failed);
    CHECK(r.witness.remainder_degree >= 0);
    CHECK(r.witness.remainder_lead != 0);
  }
}

TEST_CASE("the double series agree with the single-sum closed forms") {
  for (long n = 1; n <= 8; ++n) {
    if (n % 3 == 1) {
      StatementParams sp = at_ndr(n, 3, 1);
      sp.c = BigRat(1);
      const QRat d = instantiate("THM_D", sp, MChoice::First, 0).rhs;
      const CongruenceInstance b = instantiate("THM_B", at_n(n), MChoice::First, 0);
      CHECK_MESSAGE(congruent(d, b.rhs, b.modulus).verdict == Verdict::Verified, "n = " << n);
    }
    if (n % 3 == 2) {
      const QRat e = instantiate("THM_E", at_ndr(n, 3, 1), MChoice::First, 0).rhs;
      const CongruenceInstance c = instantiate("THM_C", at_n(n), MChoice::First, 0);
      CHECK_MESSAGE(congruent(e, c.rhs, c.modulus).verdict == Verdict::Verified, "n = " << n);
    }
  }
}

TEST_CASE("lemmas") {
  for (long n = 3; n <= 19; n += 4) {
    CHECK(holds(instantiate("LEM_WEI_K", at_n(n), MChoice::First, 0)));
    CHECK(holds(instantiate("LEM_WEI_N", at_n(n), MChoice::First, 0)));
  }
  for (long n = 1; n <= 15; n += 2) CHECK(holds(instantiate("LEM_WEI_M", at_n(n), MChoice::First, 0)));
  for (long n = 2; n <= 14; n += 3) {
    CHECK(holds(instantiate("LEM_PP", at_n(n), MChoice::First, 0)));
    CHECK(holds(instantiate("LEM_OO", at_n(n), MChoice::Second, 0)));
  }
  for (long n = 0; n <= 10; ++n) {
    const CongruenceInstance rel = instantiate("LEM_REL", at_n(n), MChoice::First, 0);
    CHECK(rel.exact_equality);
    CHECK(rel.lhs == rel.rhs);
  }
}

TEST_CASE("parametric statements with sampled parameters") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const CongruenceInstance p = instantiate("THM_2_2", at_n(5), MChoice::First, seed);
    CHECK(p.params.a.has_value());
    CHECK(p.params.b.has_value());
    CHECK(holds(p));
    StatementParams t2 = at_n(5);
    t2.t = 2;
    CHECK(holds(instantiate("PROP_3_1", t2, MChoice::Second, seed)));
    CHECK(holds(instantiate("NW_A", at_ndr(5, 3, -1), MChoice::First, seed)));
  }
  // fixed parameters are used as given
  StatementParams fixed = at_n(5);
  fixed.a = make_rat(2, 3);
  fixed.b = BigRat(5);
  const CongruenceInstance f = instantiate("PROP_2_1", fixed, MChoice::First, 0);
  CHECK(f.params.a == make_rat(2, 3));
  CHECK(holds(f));
}

TEST_CASE("verification records") {
  const VerificationRecord ok = verify_statement("THM_B", at_n(7), MChoice::Second, 5);
  CHECK(ok.status == Status::Verified);
  CHECK(ok.modulus == "[n]*Phi(n)^4");
  CHECK(ok.m_choice == "second");
  CHECK(ok.witness["M"] == 6);
  CHECK(ok.witness["weaker"]["verdict"] == "verified");

  const VerificationRecord skip = verify_statement("THM_B", at_n(5), MChoice::First, 5);
  CHECK(skip.status == Status::Skipped);
  CHECK(verify_statement("GS_16", at_n(4), MChoice::Second, 0).status == Status::Skipped);

  const VerificationRecord para = verify_statement("THM_5_4", at_ndr(5, 3, -1), MChoice::First, 9);
  CHECK(para.status == Status::Verified);
  CHECK(para.witness["trials"].size() == 3);
  // same seed, same record
  CHECK(verify_statement("THM_5_4", at_ndr(5, 3, -1), MChoice::First, 9).witness == para.witness);
  CHECK(verify_statement("THM_5_4", at_ndr(5, 3, -1), MChoice::First, 10).witness != para.witness);

  // c = 1 is a 0/0 point of the closed form here; the record falls back to a generic c
  const VerificationRecord deg = verify_statement("THM_D", at_ndr(3, 2, -1), MChoice::First, 0);
  CHECK(deg.status == Status::Verified);
  CHECK(deg.witness["trials"][0]["c_one_degenerate"] == true);
}

TEST_CASE("default sweep values") {
  CHECK(default_r_values("THM_D", at_ndr(7, 3, 0)) == std::vector<long>{1, -2});
  CHECK(default_r_values("THM_E", at_ndr(5, 3, 0)) == std::vector<long>{1});
  CHECK(default_r_values("THM_A", at_n(5)).empty());
  CHECK(default_t_values("PROP_3_1", at_n(4)) == std::vector<long>{1, 2});
  StatementParams d4 = at_n(3);
  d4.d = 4;
  CHECK(default_t_values("PROP_5_3", d4) == std::vector<long>{1, 3});
  CHECK(instance_salt("A", at_n(1), MChoice::First, 0) != instance_salt("A", at_n(1), MChoice::First, 1));
}
