// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "qsc/catalog.hpp"
#include "qsc/padic.hpp"
#include "qsc/polyring.hpp"
#include "qsc/qseries.hpp"
#include "qsc/random.hpp"
#include "qsc/runner.hpp"

using namespace qsc;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what;
    if (!ok) pass = false;
  }
};

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void criterion(int number, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > budget_s) out.require(false, "over the " + std::to_string(budget_s) + " s budget");
  if (!out.pass) ++g_failures;
  std::cout << "criterion " << number << ": " << (out.pass ? "PASS" : "FAIL") << "  " << title << "  ("
            << std::fixed;
  std::cout.precision(2);
  std::cout << secs << " s)";
  if (!out.note.str().empty()) std::cout << "  " << out.note.str();
  std::cout << std::endl;
}

StatementParams q_params(long n, std::optional<long> d = {}, std::optional<long> r = {}, std::optional<long> t = {}) {
  StatementParams sp;
  sp.n = n;
  sp.d = d;
  sp.r = r;
  sp.t = t;
  return sp;
}

StatementParams p_params(long p, long s = 1) {
  StatementParams sp;
  sp.p = p;
  sp.s = s;
  return sp;
}

std::string describe(const VerificationRecord& r) {
  return r.id + " " + r.params.dump() + " " + r.m_choice + " -> " + std::string(status_name(r.status)) + " " +
         r.witness.dump().substr(0, 200);
}

void expect_verified(Outcome& out, std::string_view id, const StatementParams& sp, const VerifyOptions& opts = {}) {
  const StatementInfo* info = find_statement(id);
  const int choices = info ? info->m_choices : 1;
  for (int c = 0; c < choices; ++c) {
    const auto rec = verify_statement(id, sp, c == 0 ? MChoice::First : MChoice::Second, 42, opts);
    out.require(rec.status == Status::Verified, describe(rec));
  }
}

/// Every admissible point of the sweep verifies, and at least one point exists.
void expect_sweep(Outcome& out, SweepRequest req, int threads = 1) {
  req.admissible_only = true;
  const auto jobs = expand_sweep(req);
  out.require(!jobs.empty(), "empty sweep for " + req.ids.front());
  for (const auto& rec : run_jobs(jobs, {}, threads)) out.require(rec.status == Status::Verified, describe(rec));
}

bool congruent_ok(const QRat& a, const QRat& b, const Modulus& m) {
  return congruent(a, b, m).verdict == Verdict::Verified;
}

}  // namespace

int main() {
  criterion(1, "THM_A, n = 1..15 odd, both truncations, mod [n]Phi^4 with the weaker forms", 60, [](Outcome& o) {
    for (long n = 1; n <= 15; n += 2) expect_verified(o, "THM_A", q_params(n));
  });

  criterion(2, "THM_B, n in {1, 4, 7, 10, 13}, both truncations, mod [n]Phi^4", 60, [](Outcome& o) {
    for (long n : {1, 4, 7, 10, 13}) expect_verified(o, "THM_B", q_params(n));
  });

  criterion(3, "THM_C, n in {2, 5, 8, 11}, both truncations, mod [n]Phi^5", 120, [](Outcome& o) {
    for (long n : {2, 5, 8, 11}) expect_verified(o, "THM_C", q_params(n));
  });

  criterion(4, "parametric statements, n = 2..8, d in {3, 4, 5}, three seeded specializations", 600, [](Outcome& o) {
    SweepRequest req;
    req.ids = {"PROP_2_1", "THM_2_2", "PROP_3_1", "THM_3_2", "THM_3_3", "PROP_5_3",
               "THM_5_4",  "THM_5_5", "NW_A",     "NW_B",    "NW_23"};
    req.n_lo = 2;
    req.n_hi = 8;
    req.d = {3, 4, 5};
    req.seed = 42;
    req.admissible_only = true;
    const auto jobs = expand_sweep(req);
    std::map<std::string, int> verified;
    for (const auto& rec : run_jobs(jobs, {}, 1)) {
      o.require(rec.status == Status::Verified, describe(rec));
      const bool sampled = !find_statement(rec.id)->free_symbols.empty();
      const long trials = rec.witness.contains("trials") ? static_cast<long>(rec.witness["trials"].size()) : 1;
      o.require(!sampled || trials >= 3, rec.id + " ran fewer than 3 specializations");
      if (rec.status == Status::Verified) ++verified[rec.id];
    }
    for (const auto& id : req.ids) o.require(verified[id] > 0, id + " has no verified instance");
    // the t = d - 1 branch and negative r are exercised
    bool t_high = false, r_negative = false;
    for (const auto& j : jobs) {
      if (j.id == "PROP_5_3" && j.params.t && j.params.d && *j.params.t == *j.params.d - 1) t_high = true;
      if (j.params.r && *j.params.r < -1) r_negative = true;
    }
    o.require(t_high && r_negative, "sweep misses t = d - 1 or a negative r below -1");
  });

  criterion(5, "THM_D / THM_E double series, n <= 10, and agreement with THM_B / THM_C for n <= 8", 300,
            [](Outcome& o) {
              for (long d : {3, 4, 5}) {
                SweepRequest req;
                req.n_lo = 1;
                req.n_hi = 10;
                req.d = {d};
                req.r = {1};
                req.ids = {"THM_D", "THM_E"};
                expect_sweep(o, req);
              }
              SweepRequest neg;
              neg.ids = {"THM_E"};
              neg.n_lo = 1;
              neg.n_hi = 10;
              neg.d = {3};
              neg.r = {-1};
              expect_sweep(o, neg);
              for (long n = 1; n <= 8; ++n) {
                if (n % 3 == 1) {
                  StatementParams sp = q_params(n, 3, 1);
                  sp.c = BigRat(1);
                  const auto b = instantiate("THM_B", q_params(n), MChoice::First, 0);
                  o.require(congruent_ok(instantiate("THM_D", sp, MChoice::First, 0).rhs, b.rhs, b.modulus),
                            "THM_D vs THM_B at n = " + std::to_string(n));
                }
                if (n % 3 == 2) {
                  const auto c = instantiate("THM_C", q_params(n), MChoice::First, 0);
                  o.require(congruent_ok(instantiate("THM_E", q_params(n, 3, 1), MChoice::First, 0).rhs, c.rhs,
                                         c.modulus),
                            "THM_E vs THM_C at n = " + std::to_string(n));
                }
              }
            });

  criterion(6, "classical congruences at the listed primes", 300, [](Outcome& o) {
    for (long p : {5, 13, 7, 11}) expect_verified(o, "VH_A2", p_params(p));
    for (long p : {7, 13}) expect_verified(o, "VH_D2", p_params(p));
    for (long p : {7, 11}) expect_verified(o, "LIU", p_params(p));
    for (long p : {7, 11, 13}) expect_verified(o, "LR", p_params(p));
    for (long p : {5, 7, 11, 13}) expect_verified(o, "COR_1_4", p_params(p));
    expect_verified(o, "COR_1_4", p_params(5, 2));
    for (long p : {7, 13}) expect_verified(o, "COR_1_5", p_params(p));
    for (long p : {5, 11}) expect_verified(o, "COR_1_6", p_params(p));
    for (const char* id : {"COR_5_E", "COR_5_G", "COR_5_H"}) {
      SweepRequest req;
      req.ids = {id};
      req.p_lo = 5;
      req.p_hi = 13;
      req.s = {1};
      for (long d : {3, 4}) {
        req.d = {d};
        expect_sweep(o, req);
      }
    }
  });

  criterion(7, "PROP_1_7 and PROP_1_8", 120, [](Outcome& o) {
    for (long p : {13, 17, 7, 11}) expect_verified(o, "PROP_1_7", p_params(p));
    for (long p : {7, 13, 5, 11}) expect_verified(o, "PROP_1_8", p_params(p));
  });

  criterion(8, "harmonic-number congruences, including 5929/3600 at p = 7", 60, [](Outcome& o) {
    for (long p : {5, 7, 11, 13}) {
      expect_verified(o, "SUN_H2", p_params(p));
      expect_verified(o, "SUN_H2HALF", p_params(p));
    }
    for (long p : {7, 11, 13}) expect_verified(o, "SUN_H3", p_params(p));
    const BigRat v = harmonic(6, 2) - make_rat(14, 3) * bernoulli(4);
    o.require(v == make_rat(5929, 3600) && padic_valuation(v, 7) == 2, "worked value at p = 7");
  });

  criterion(9, "terminating identities, 25 seeded checks each", 60, [](Outcome& o) {
    for (IdentityId id : kAllIdentities) {
      for (std::uint64_t i = 0; i < 25; ++i) {
        SeededRng rng(derive_seed(2024, i));
        const IdentityParams p = random_identity_params(id, rng);
        o.require(check_terminating_identity(id, p, derive_seed(7, i)).equal,
                  std::string(identity_name(id)) + " case " + std::to_string(i));
      }
    }
  });

  criterion(10, "property suites", 300, [](Outcome& o) {
    // cyclotomic products and q-integers
    for (long n = 1; n <= 60; ++n) {
      ZPoly all = ZPoly::one(), proper = ZPoly::one();
      for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        all *= cyclotomic_z(d);
        if (d > 1) proper *= cyclotomic_z(d);
      }
      o.require(all == ZPoly::monomial(BigInt(1), static_cast<int>(n)) - ZPoly::one(), "prod Phi_d, n = " +
                                                                                              std::to_string(n));
      o.require(proper == q_integer_poly(n), "[n] as a product, n = " + std::to_string(n));
    }
    SeededRng rng(10);
    auto rand_poly = [&](int deg) {
      std::vector<BigRat> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = rng.small_rational();
      return QPoly(std::move(c));
    };
    // ring and field axioms
    for (int i = 0; i < 100; ++i) {
      const QRat a = ratfun_normalize(rand_poly(3), rand_poly(2));
      const QRat b = ratfun_normalize(rand_poly(2), rand_poly(3));
      const QRat c(rand_poly(4));
      o.require(a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c) && a + b == b + a, "ring axioms");
      o.require(a * a.inverse() == QRat(1) && (a / b) * b == a, "field axioms");
    }
    // CRT round trips
    for (int i = 0; i < 100; ++i) {
      const long n1 = rng.range(1, 24);
      const long n2 = n1 + rng.range(1, 12);
      const QPoly m1 = cyclotomic(n1), m2 = cyclotomic(n2);
      const QPoly r1 = poly_divrem(rand_poly(5), m1).second, r2 = poly_divrem(rand_poly(5), m2).second;
      const QRat x = crt_combine(QRat(r1), m1, QRat(r2), m2);
      o.require(reduce_mod(x, m1) == r1 && reduce_mod(x, m2) == r2, "CRT round trip");
    }
    // congruence laws
    for (int i = 0; i < 100; ++i) {
      const long n = rng.range(2, 10);
      const Modulus m = build_modulus(ModulusKind::QIntPhiPow, n, {{"k", BigRat(rng.range(1, 3))}});
      const QRat P(m.product);
      const QRat a(rand_poly(5)), x(rand_poly(3));
      const QRat b = a + P * QRat(rand_poly(2)), c = b + P * QRat(rand_poly(2)), y = x + P * QRat(rand_poly(1));
      o.require(congruent_ok(a, a, m) && congruent_ok(a, b, m) && congruent_ok(b, a, m) && congruent_ok(a, c, m),
                "equivalence laws");
      o.require(congruent_ok(a + x, b + y, m) && congruent_ok(a * x, b * y, m), "compatibility laws");
    }
    // Gamma_p reflection and functional equation
    for (long p : {5L, 7L, 11L, 13L}) {
      for (long num = -10; num <= 10; ++num) {
        for (long den : {1L, 2L, 3L, 4L}) {
          const BigRat x = make_rat(num, den);
          const int N = 3;
          const PadicInt g = gamma_p(x, p, N);
          const BigInt a0 = residue_of_rational(x, p, 1).residue();
          const long digit = a0 == 0 ? p : a0.get_si();
          const PadicInt sign(p, N, BigInt(digit % 2 == 0 ? 1 : -1));
          o.require(g * gamma_p(BigRat(1) - x, p, N) == sign, "Gamma_p reflection");
          const PadicInt next = gamma_p(x + 1, p, N);
          const PadicInt want = padic_valuation(x, p) == 0 ? -residue_of_rational(x, p, N) * g : -g;
          o.require(next == want, "Gamma_p functional equation");
        }
      }
    }
    // q -> 1 bridge
    for (long n : {4L, 7L, 10L}) {
      const auto inst = instantiate("THM_B", q_params(n), MChoice::First, 0);
      o.require(inst.lhs.eval(BigRat(1)) == classical_sum(inst.M, 1, 6, 1, make_rat(1, 3), 6), "bridge THM_B");
    }
    for (long n : {5L, 7L, 9L}) {
      const auto inst = instantiate("THM_A", q_params(n), MChoice::First, 0);
      o.require(inst.lhs.eval(BigRat(1)) == classical_sum(inst.M, -1, 4, 1, make_rat(1, 2), 5), "bridge THM_A");
    }
    // the weights Theta(a, b) split into 1 and 0 modulo the a- and b-factors
    const ExprPtr theta = parse_expr("(1-b*q^n)*(b-q^n)*(-1-a^2+a*q^n)/((a-b)*(1-a*b))");
    for (long n = 1; n <= 8; ++n) {
      Bindings env = sample_params({"a", "b"}, n, 1, derive_seed(5, static_cast<std::uint64_t>(n))).assignments;
      env["n"] = BigRat(n);
      Bindings swapped = env;
      std::swap(swapped["a"], swapped["b"]);
      const Modulus ma = build_modulus(ModulusKind::HalfSpecialized, n, {{"a", env["a"]}});
      const Modulus mb = build_modulus(ModulusKind::HalfSpecialized, n, {{"a", env["b"]}});
      o.require(congruent_ok(eval_expr(*theta, env), QRat(1), ma), "relation for the a-factors");
      o.require(congruent_ok(eval_expr(*theta, swapped), QRat(1), mb), "relation for the b-factors");
    }
    // lemmas
    for (long n = 3; n <= 23; n += 4) {
      expect_verified(o, "LEM_WEI_K", q_params(n));
      expect_verified(o, "LEM_WEI_N", q_params(n));
    }
    for (long n = 1; n <= 21; n += 2) expect_verified(o, "LEM_WEI_M", q_params(n));
    for (long n = 2; n <= 17; n += 3) {
      expect_verified(o, "LEM_PP", q_params(n));
      expect_verified(o, "LEM_OO", q_params(n));
    }
    for (long n = 0; n <= 12; ++n) expect_verified(o, "LEM_REL", q_params(n));
  });

  criterion(11, "negative controls: THM_A/B/C with the right side times q fail with a witness", 60, [](Outcome& o) {
    const std::pair<const char*, long> cases[] = {{"THM_A", 5}, {"THM_A", 7}, {"THM_B", 4}, {"THM_B", 7},
                                                  {"THM_C", 5}, {"THM_C", 8}};
    for (const auto& [id, n] : cases) {
      for (MChoice m : {MChoice::First, MChoice::Second}) {
        CongruenceInstance inst = instantiate(id, q_params(n), m, 0);
        inst.rhs *= QRat::q();
        const CongruenceResult r = congruent(inst.lhs, inst.rhs, inst.modulus);
        o.require(r.verdict == Verdict::Failed && r.witness.remainder_lead != 0 && r.witness.remainder_degree >= 0,
                  std::string(id) + " n = " + std::to_string(n));
      }
    }
  });

  std::cout << (g_failures == 0 ? "all criteria pass" : std::to_string(g_failures) + " criteria failed") << std::endl;
  return g_failures == 0 ? 0 : 1;
}
