#include <chrono>
#include <functional>
#include <numeric>

#include "qsc/padic.hpp"

namespace qsc {

namespace {

struct Ctx {
  long p = 0;
  long s = 1;
  long P = 0;  // p^s
  long d = 0;
  long r = 0;
  MChoice m = MChoice::First;
  long budget = kDefaultPrecisionBudget;
};

struct Outcome {
  bool verified = false;
  long power = 0;  // the congruence is modulo p^power
  Json detail = Json::object();
};

using Violation = std::optional<std::string>;

struct ClassicalEntry {
  StatementInfo info;
  std::function<Violation(const Ctx&)> side;
  std::function<Outcome(const Ctx&)> check;
};

BigRat rat(long a, long b = 1) { return make_rat(a, b); }

BigRat p_pow(long p, long e) { return BigRat(pow_int(p, static_cast<unsigned long>(e))); }

long pick(const Ctx& c, long first, long second) { return c.m == MChoice::First ? first : second; }

Outcome difference_check(const BigRat& lhs, const BigRat& rhs, long p, long power) {
  Outcome o;
  o.power = power;
  const long v = padic_valuation(BigRat(lhs - rhs), p);
  o.verified = v >= power;
  o.detail["difference_valuation"] = v == kInfiniteValuation ? Json("inf") : Json(v);
  return o;
}

/// L = c p^j G (mod p^power), G = gamma_p(x)^e.
Outcome gamma_check(const Ctx& ctx, const BigRat& lhs, const BigRat& c, long j, const BigRat& x, long e, long power) {
  auto gamma = [&](int N) { return gamma_p(x, ctx.p, N, ctx.budget).pow(e); };
  const GammaCheck g = check_gamma_form(lhs, c, j, gamma, ctx.p, power);
  Outcome o;
  o.power = power;
  o.verified = g.verified;
  o.detail["lhs_valuation"] = g.lhs_valuation == kInfiniteValuation ? Json("inf") : Json(g.lhs_valuation);
  o.detail["gamma_digits"] = g.digits;
  return o;
}

Outcome zero_check(const BigRat& lhs, long p, long power) { return difference_check(lhs, BigRat(0), p, power); }

// Sum_{k=0}^m (-1)^k (4k+1) (1/2)_k^5 / k!^5
BigRat vh_a2_sum(long m) { return classical_sum(m, -1, 4, 1, rat(1, 2), 5); }
// Sum_{k=0}^m (6k+1) (1/3)_k^6 / k!^6
BigRat d2_sum(long m) { return classical_sum(m, 1, 6, 1, rat(1, 3), 6); }

BigRat ratio_pow(const BigRat& x, const BigRat& y, long len, long e) {
  BigRat f = shifted_factorial(x, len) / shifted_factorial(y, len);
  BigRat out = 1;
  for (long i = 0; i < e; ++i) out *= f;
  return out;
}

// Sum_{j=1}^{k} 1/(dj)^2 + 1/(dj-d+r)^2
BigRat double_inner(long k, long d, long r) {
  BigRat s = 0;
  for (long j = 1; j <= k; ++j) {
    s += BigRat(1, BigInt(d * j) * (d * j));
    const long u = d * j - d + r;
    s += BigRat(1, BigInt(u) * u);
  }
  return s;
}

Violation need_prime(const Ctx& c, long min_p) {
  if (c.p < 3 || !is_prime(static_cast<std::uint64_t>(c.p))) return "p must be an odd prime";
  if (c.p < min_p) return "p must be at least " + std::to_string(min_p);
  return std::nullopt;
}

Violation need_s1(const Ctx& c) {
  if (c.s != 1) return std::string("statement is for s = 1");
  return std::nullopt;
}

Violation chain(std::initializer_list<Violation> vs) {
  for (const auto& v : vs)
    if (v) return v;
  return std::nullopt;
}

StatementInfo info(std::string id, std::string description, std::vector<std::string> params, std::string side,
                   std::string modulus, int m_choices) {
  StatementInfo i;
  i.id = std::move(id);
  i.description = std::move(description);
  i.kind = StatementKind::Classical;
  i.params = std::move(params);
  i.side_conditions = std::move(side);
  i.modulus = std::move(modulus);
  i.m_choices = m_choices;
  return i;
}

Violation cor5_side(const Ctx& c) {
  if (auto v = need_prime(c, 3)) return v;
  if (c.d < 1) return std::string("d must be positive");
  if (std::gcd(c.p, c.d) != 1) return std::string("gcd(p, d) must be 1");
  if (!(c.d + c.P - c.d * c.P <= c.r && c.r <= c.P)) return std::string("need d + p^s - d p^s <= r <= p^s");
  if (((c.P - c.r) % c.d + c.d) % c.d != 0) return std::string("need p^s = r (mod d)");
  return std::nullopt;
}

Violation cor5h_side(const Ctx& c) {
  if (auto v = need_prime(c, 3)) return v;
  if (c.r != 1 && c.r != -1) return std::string("r must be 1 or -1");
  if (c.d < 3 || c.P + c.r < c.d) return std::string("need p^s + r >= d >= 3");
  if (std::gcd(c.p, c.d) != 1) return std::string("gcd(p, d) must be 1");
  if ((c.P + c.r) % c.d != 0) return std::string("need p^s = -r (mod d)");
  return std::nullopt;
}

std::vector<ClassicalEntry> build_entries() {
  std::vector<ClassicalEntry> es;

  es.push_back({info("VH_A2", "sum_{k<=(p-1)/2} (-1)^k (4k+1) (1/2)_k^5/k!^5 = -p/Gamma_p(3/4)^4, or 0 when p = 3 (mod 4)",
                     {"p"}, "p odd prime, s = 1", "p^3", 1),
                [](const Ctx& c) { return chain({need_prime(c, 3), need_s1(c)}); },
                [](const Ctx& c) {
                  const BigRat L = vh_a2_sum((c.p - 1) / 2);
                  if (c.p % 4 == 3) return zero_check(L, c.p, 3);
                  auto gamma = [&](int N) { return gamma_p(rat(3, 4), c.p, N, c.budget).pow(4).inverse(); };
                  const GammaCheck g = check_gamma_form(L, rat(-1), 1, gamma, c.p, 3);
                  Outcome o;
                  o.power = 3;
                  o.verified = g.verified;
                  o.detail["lhs_valuation"] = g.lhs_valuation;
                  o.detail["gamma_digits"] = g.digits;
                  return o;
                }});

  es.push_back({info("VH_D2", "sum_{k<=(p-1)/3} (6k+1) (1/3)_k^6/k!^6 = -p Gamma_p(1/3)^9", {"p"},
                     "p = 1 (mod 6), s = 1", "p^4", 1),
                [](const Ctx& c) -> Violation {
                  if (auto v = chain({need_prime(c, 3), need_s1(c)})) return v;
                  if (c.p % 6 != 1) return std::string("need p = 1 (mod 6)");
                  return std::nullopt;
                },
                [](const Ctx& c) { return gamma_check(c, d2_sum((c.p - 1) / 3), rat(-1), 1, rat(1, 3), 9, 4); }});

  es.push_back({info("LIU", "sum_{k<=(p-1)/2} (-1)^k (4k+1) (1/2)_k^5/k!^5 = -(p^3/16) Gamma_p(1/4)^4", {"p"},
                     "p = 3 (mod 4), p > 5, s = 1", "p^4", 1),
                [](const Ctx& c) -> Violation {
                  if (auto v = chain({need_prime(c, 7), need_s1(c)})) return v;
                  if (c.p % 4 != 3) return std::string("need p = 3 (mod 4)");
                  return std::nullopt;
                },
                [](const Ctx& c) { return gamma_check(c, vh_a2_sum((c.p - 1) / 2), rat(-1, 16), 3, rat(1, 4), 4, 4); }});

  es.push_back({info("LR",
                     "sum_{k<=p-1} (6k+1) (1/3)_k^6/k!^6 = -p Gamma_p(1/3)^9 (p = 1 mod 6) or "
                     "-(10/27) p^4 Gamma_p(1/3)^9 (p = 5 mod 6)",
                     {"p"}, "p >= 5, s = 1", "p^6", 1),
                [](const Ctx& c) { return chain({need_prime(c, 5), need_s1(c)}); },
                [](const Ctx& c) {
                  const BigRat L = d2_sum(c.p - 1);
                  if (c.p % 6 == 1) return gamma_check(c, L, rat(-1), 1, rat(1, 3), 9, 6);
                  return gamma_check(c, L, rat(-10, 27), 4, rat(1, 3), 9, 6);
                }});

  es.push_back({info("COR_1_4", "q -> 1 image of the [4k+1] supercongruence at n = p^s", {"p", "s"},
                     "p odd prime", "p^(s+4)", 2),
                [](const Ctx& c) { return need_prime(c, 3); },
                [](const Ctx& c) {
                  const long P = c.P;
                  const BigRat L = vh_a2_sum(pick(c, (P - 1) / 2, P - 1));
                  BigRat R;
                  if (P % 4 == 1) {
                    const long e = (P - 1) / 4;
                    const BigRat P3 = p_pow(P, 3);
                    R = ratio_pow(rat(1, 2), rat(1), e, 2) *
                        (BigRat(P) + P3 / 4 * harmonic((P - 1) / 2, 2) - P3 / 8 * harmonic(e, 2));
                  } else {
                    const long e = (P - 1) / 2;
                    R = p_pow(P, 2) * shifted_factorial(rat(3, 4), e) / shifted_factorial(rat(5, 4), e);
                  }
                  return difference_check(L, R, c.p, c.s + 4);
                }});

  es.push_back({info("COR_1_5", "q -> 1 image of the [6k+1] supercongruence at n = p^s = 1 (mod 3)", {"p", "s"},
                     "p^s = 1 (mod 3)", "p^(s+4)", 2),
                [](const Ctx& c) -> Violation {
                  if (auto v = need_prime(c, 3)) return v;
                  if (c.P % 3 != 1) return std::string("need p^s = 1 (mod 3)");
                  return std::nullopt;
                },
                [](const Ctx& c) {
                  const long P = c.P;
                  const long e = (P - 1) / 3;
                  const BigRat L = d2_sum(pick(c, e, P - 1));
                  BigRat inner = 0;
                  for (long j = 1; j <= e; ++j)
                    inner += BigRat(1, BigInt(3 * j - 1) * (3 * j - 1)) - BigRat(1, BigInt(3 * j) * (3 * j));
                  const BigRat R = ratio_pow(rat(2, 3), rat(1), e, 3) * (BigRat(P) + p_pow(P, 3) * inner);
                  return difference_check(L, R, c.p, c.s + 4);
                }});

  es.push_back({info("COR_1_6", "sum (6k+1) (1/3)_k^6/k!^6 = 10 p^s (2/3)_e^3/e!^3, e = (2p^s-1)/3", {"p", "s"},
                     "p^s = 2 (mod 3)", "p^(s+5)", 2),
                [](const Ctx& c) -> Violation {
                  if (auto v = need_prime(c, 3)) return v;
                  if (c.P % 3 != 2) return std::string("need p^s = 2 (mod 3)");
                  return std::nullopt;
                },
                [](const Ctx& c) {
                  const long P = c.P;
                  const long e = (2 * P - 1) / 3;
                  const BigRat L = d2_sum(pick(c, e, P - 1));
                  const BigRat R = BigRat(10 * P) * ratio_pow(rat(2, 3), rat(1), e, 3);
                  return difference_check(L, R, c.p, c.s + 5);
                }});

  es.push_back({info("PROP_1_7",
                     "(1/2)_e^2/e!^2 {1 + p^2/4 H_{(p-1)/2}^(2) - p^2/8 H_e^(2)} = -Gamma_p(1/4)^4 mod p^4 "
                     "(p = 1 mod 4, e = (p-1)/4); (3/4)_e/(5/4)_e = -(p/16) Gamma_p(1/4)^4 mod p^3 (p = 3 mod 4, "
                     "e = (p-1)/2)",
                     {"p"}, "p > 5, s = 1", "p^4 or p^3", 1),
                [](const Ctx& c) { return chain({need_prime(c, 7), need_s1(c)}); },
                [](const Ctx& c) {
                  const long p = c.p;
                  if (p % 4 == 1) {
                    const long e = (p - 1) / 4;
                    const BigRat p2 = p_pow(p, 2);
                    const BigRat L = ratio_pow(rat(1, 2), rat(1), e, 2) *
                                     (BigRat(1) + p2 / 4 * harmonic((p - 1) / 2, 2) - p2 / 8 * harmonic(e, 2));
                    return gamma_check(c, L, rat(-1), 0, rat(1, 4), 4, 4);
                  }
                  const long e = (p - 1) / 2;
                  const BigRat L = shifted_factorial(rat(3, 4), e) / shifted_factorial(rat(5, 4), e);
                  return gamma_check(c, L, rat(-1, 16), 1, rat(1, 4), 4, 3);
                }});

  es.push_back({info("PROP_1_8",
                     "(2/3)_e^3/e!^3 {1 + p^2 sum_j (1/(3j-1)^2 - 1/(3j)^2)} = -Gamma_p(1/3)^9 mod p^4 (p = 1 mod 6); "
                     "(2/3)_f^3/f!^3 = -(p^3/27) Gamma_p(1/3)^9 mod p^5 (p = 5 mod 6)",
                     {"p"}, "p >= 5, s = 1", "p^4 or p^5", 1),
                [](const Ctx& c) { return chain({need_prime(c, 5), need_s1(c)}); },
                [](const Ctx& c) {
                  const long p = c.p;
                  if (p % 6 == 1) {
                    const long e = (p - 1) / 3;
                    BigRat inner = 0;
                    for (long j = 1; j <= e; ++j)
                      inner += BigRat(1, BigInt(3 * j - 1) * (3 * j - 1)) - BigRat(1, BigInt(3 * j) * (3 * j));
                    const BigRat L = ratio_pow(rat(2, 3), rat(1), e, 3) * (BigRat(1) + p_pow(p, 2) * inner);
                    return gamma_check(c, L, rat(-1), 0, rat(1, 3), 9, 4);
                  }
                  const long f = (2 * p - 1) / 3;
                  return gamma_check(c, ratio_pow(rat(2, 3), rat(1), f, 3), rat(-1, 27), 3, rat(1, 3), 9, 5);
                }});

  es.push_back({info("COR_5_E", "q -> 1, c -> 1 image of the double-series supercongruence with [2dk+r]",
                     {"p", "s", "d", "r"}, "d + p^s - d p^s <= r <= p^s, gcd(p, d) = 1, p^s = r (mod d)",
                     "p^(s+4)", 2),
                cor5_side, [](const Ctx& c) {
                  const long P = c.P, d = c.d, r = c.r;
                  const long e = (P - r) / d;
                  const BigRat x = rat(r, d);
                  const BigRat L = classical_sum(pick(c, e, P - 1), 1, 2 * d, r, x, 6);
                  const BigRat P3 = p_pow(P, 3);
                  BigRat S = 0;
                  for (long k = 0; k <= e; ++k) {
                    const BigRat head = ratio_pow(x, rat(1), k, 3) * shifted_factorial(1 - x, k) /
                                        shifted_factorial(2 * x, k);
                    S += head * (BigRat(P) - P3 * double_inner(k, d, r));
                  }
                  const BigRat R = shifted_factorial(2 * x, e) / shifted_factorial(rat(1), e) * S;
                  return difference_check(L, R, c.p, c.s + 4);
                }});

  es.push_back({info("COR_5_G", "q -> 1, c -> -1 image of the double-series supercongruence with [2dk+r]",
                     {"p", "s", "d", "r"}, "d + p^s - d p^s <= r <= p^s, gcd(p, d) = 1, p^s = r (mod d)",
                     "p^(s+4)", 2),
                cor5_side, [](const Ctx& c) {
                  const long P = c.P, d = c.d, r = c.r;
                  const long e = (P - r) / d;
                  const BigRat x = rat(r, d);
                  const BigRat L = classical_sum(pick(c, e, P - 1), -1, 2 * d, r, x, 5);
                  const BigRat P3 = p_pow(P, 3);
                  BigRat S = 0;
                  for (long k = 0; k <= e; ++k) {
                    const BigRat head = ratio_pow(x, rat(1), k, 2) * shifted_factorial(1 - x, k) /
                                        shifted_factorial(rat(1), k);
                    S += head * (BigRat(P) - P3 * double_inner(k, d, r));
                  }
                  const BigRat R = e % 2 == 0 ? S : BigRat(-S);
                  return difference_check(L, R, c.p, c.s + 4);
                }});

  es.push_back({info("COR_5_H", "q -> 1 image of the double-series supercongruence with (q^r;q^d)_k^6",
                     {"p", "s", "d", "r"}, "r = +-1, p^s + r >= d >= 3, gcd(p, d) = 1, p^s = -r (mod d)",
                     "p^(s+5)", 2),
                cor5h_side, [](const Ctx& c) {
                  const long P = c.P, d = c.d, r = c.r;
                  const long e = (d * P - P - r) / d;
                  const BigRat x = rat(r, d);
                  const BigRat L = classical_sum(pick(c, e, P - 1), 1, 2 * d, r, x, 6);
                  const BigRat D1P = BigRat((d - 1) * P);
                  const BigRat D1P3 = D1P * D1P * D1P;
                  BigRat S = 0;
                  for (long k = 0; k <= e; ++k) {
                    const BigRat head = ratio_pow(x, rat(1), k, 3) * shifted_factorial(1 - x, k) /
                                        shifted_factorial(2 * x, k);
                    S += head * (D1P - D1P3 * double_inner(k, d, r));
                  }
                  const BigRat R = shifted_factorial(2 * x, e) / shifted_factorial(rat(1), e) * S;
                  return difference_check(L, R, c.p, c.s + 5);
                }});

  es.push_back({info("SUN_H2", "H_{p-1}^(2) = (2p/3) B_{p-3}", {"p"}, "p >= 5, s = 1", "p^2", 1),
                [](const Ctx& c) { return chain({need_prime(c, 5), need_s1(c)}); },
                [](const Ctx& c) {
                  Outcome o = difference_check(harmonic(c.p - 1, 2), rat(2 * c.p, 3) * bernoulli(c.p - 3), c.p, 2);
                  o.detail["lhs"] = to_string(harmonic(c.p - 1, 2));
                  return o;
                }});

  es.push_back({info("SUN_H2HALF", "H_{(p-1)/2}^(2) = (7p/3) B_{p-3}", {"p"}, "p >= 5, s = 1", "p^2", 1),
                [](const Ctx& c) { return chain({need_prime(c, 5), need_s1(c)}); },
                [](const Ctx& c) {
                  return difference_check(harmonic((c.p - 1) / 2, 2), rat(7 * c.p, 3) * bernoulli(c.p - 3), c.p, 2);
                }});

  es.push_back({info("SUN_H3", "H_{floor((p-1)/4)}^(3) = -9 B_{p-3}", {"p"}, "p > 5, s = 1", "p", 1),
                [](const Ctx& c) { return chain({need_prime(c, 7), need_s1(c)}); },
                [](const Ctx& c) {
                  return difference_check(harmonic((c.p - 1) / 4, 3), BigRat(-9) * bernoulli(c.p - 3), c.p, 1);
                }});

  return es;
}

const std::vector<ClassicalEntry>& entries() {
  static const std::vector<ClassicalEntry> es = build_entries();
  return es;
}

const ClassicalEntry* find(std::string_view id) {
  for (const auto& e : entries())
    if (e.info.id == id) return &e;
  return nullptr;
}

Ctx make_ctx(const ClassicalEntry& e, const StatementParams& sp) {
  Ctx c;
  c.p = sp.p.value_or(0);
  c.s = sp.s.value_or(1);
  c.d = sp.d.value_or(0);
  c.r = sp.r.value_or(0);
  c.P = 1;
  if (c.p > 1 && c.s >= 1) {
    const BigInt P = pow_int(c.p, static_cast<unsigned long>(c.s));
    if (!P.fits_slong_p() || P > 1'000'000) throw Error(Errc::OutOfRange, "p^s too large");
    c.P = P.get_si();
  }
  (void)e;
  return c;
}

}  // namespace

const std::vector<StatementInfo>& classical_statements() {
  static const std::vector<StatementInfo> infos = [] {
    std::vector<StatementInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

bool is_classical(std::string_view id) { return find(id) != nullptr; }

std::optional<std::string> classical_violation(std::string_view id, const StatementParams& sp) {
  const ClassicalEntry* e = find(id);
  if (!e) throw Error(Errc::UnknownStatement, std::string(id));
  for (const auto& name : e->info.params) {
    const bool present = (name == "p" && sp.p) || (name == "s") || (name == "d" && sp.d) || (name == "r" && sp.r);
    if (!present) return "missing parameter " + name;
  }
  if (sp.s && *sp.s < 1) return std::string("s must be positive");
  return e->side(make_ctx(*e, sp));
}

VerificationRecord verify_classical(std::string_view id, const StatementParams& sp, MChoice m, long budget) {
  const ClassicalEntry* e = find(id);
  if (!e) throw Error(Errc::UnknownStatement, std::string(id));
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord rec;
  rec.id = e->info.id;
  StatementParams shown;
  shown.p = sp.p;
  shown.s = sp.s.value_or(1);
  for (const auto& name : e->info.params) {
    if (name == "d") shown.d = sp.d;
    if (name == "r") shown.r = sp.r;
  }
  rec.params = params_json(shown);
  rec.modulus = e->info.modulus;
  rec.m_choice = e->info.m_choices > 1 ? std::string(m_choice_name(m)) : "";
  try {
    if (auto why = classical_violation(id, sp)) {
      rec.status = Status::Skipped;
      rec.witness["reason"] = *why;
    } else {
      Ctx c = make_ctx(*e, sp);
      c.m = m;
      c.budget = budget;
      Outcome o = e->check(c);
      rec.status = o.verified ? Status::Verified : Status::Failed;
      rec.witness["power"] = o.power;
      for (auto& [k, v] : o.detail.items()) rec.witness[k] = v;
    }
  } catch (const Error& err) {
    rec.status = Status::Error;
    rec.witness["error"] = std::string(errc_name(err.code()));
    rec.witness["message"] = err.what();
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace qsc
