// qsc: command-line front end for the q-supercongruence verifier.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qsc/catalog.hpp"
#include "qsc/expr.hpp"
#include "qsc/padic.hpp"
#include "qsc/polyring.hpp"
#include "qsc/qseries.hpp"
#include "qsc/report.hpp"
#include "qsc/runner.hpp"

namespace {

using namespace qsc;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSkipped = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<long, long> parse_range(const std::string& text, const char* flag) {
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const long v = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo_s = text.substr(0, dots), hi_s = text.substr(dots + 2);
    const long lo = std::stol(lo_s, &used);
    if (used != lo_s.size()) throw std::invalid_argument(text);
    const long hi = std::stol(hi_s, &used);
    if (used != hi_s.size()) throw std::invalid_argument(text);
    if (lo > hi) throw UsageError(std::string(flag) + ": empty range " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + ": expected an integer or a range a..b, got '" + text + "'");
  }
}

/// "1,-1,3" or a range "1..4".
std::vector<long> parse_list(const std::string& text, const char* flag) {
  std::vector<long> out;
  if (text.empty()) return out;
  if (text.find("..") != std::string::npos) {
    auto [lo, hi] = parse_range(text, flag);
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_range(item, flag).first);
  return out;
}

std::optional<BigRat> parse_opt_rat(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  try {
    return parse_rat(text);
  } catch (const Error&) {
    throw UsageError(std::string(flag) + ": expected a rational number, got '" + text + "'");
  }
}

std::optional<MChoice> parse_m_choice(const std::string& text) {
  if (text == "first") return MChoice::First;
  if (text == "second") return MChoice::Second;
  if (text == "both") return std::nullopt;
  throw UsageError("--m-choice must be first, second or both");
}

/// Splices `key=value` lines of --config FILE in right after the subcommand, so
/// later command-line flags override them.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string file;
    std::size_t span = 0;
    if (args[i] == "--config" && i + 1 < args.size()) {
      file = args[i + 1];
      span = 2;
    } else if (args[i].rfind("--config=", 0) == 0) {
      file = args[i].substr(9);
      span = 1;
    } else {
      continue;
    }
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read config file " + file);
    std::vector<std::string> injected;
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto eq = line.find('=');
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      if (trim(line).empty()) continue;
      if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (value == "true" || value == "false") {
        if (value == "true") injected.push_back("--" + key);
      } else {
        injected.push_back("--" + key);
        injected.push_back(value);
      }
    }
    args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i + span));
    // the subcommand is the first argument
    const std::size_t at = args.empty() ? 0 : 1;
    args.insert(args.begin() + static_cast<long>(at), injected.begin(), injected.end());
    break;
  }
  return args;
}

void emit(const std::vector<VerificationRecord>& recs, const std::string& out, const std::string& format,
          bool timestamps) {
  const OutputFormat fmt = parse_output_format(format);
  if (out.empty() || out == "-") {
    write_records(std::cout, recs, fmt, timestamps);
    return;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + out + " for writing");
  write_records(os, recs, fmt, timestamps);
  if (!os) throw std::runtime_error("write to " + out + " failed");
}

int exit_code(const std::vector<VerificationRecord>& recs) {
  long verified = 0, failed = 0, skipped = 0, errors = 0;
  for (const auto& r : recs) {
    switch (r.status) {
      case Status::Verified: ++verified; break;
      case Status::Failed: ++failed; break;
      case Status::Skipped: ++skipped; break;
      case Status::Error: ++errors; break;
    }
  }
  std::cerr << verified << " verified, " << failed << " failed, " << skipped << " skipped, " << errors << " errors\n";
  if (failed || errors) return kExitFailed;
  if (!recs.empty() && skipped == static_cast<long>(recs.size())) return kExitSkipped;
  return kExitOk;
}

struct CommonOptions {
  std::string out;
  std::string format = "jsonl";
  std::uint64_t seed = 0;
  bool timestamps = false;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--seed", o.seed, "seed for generic specializations");
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_option("--format", o.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  cmd->add_flag("--timestamps", o.timestamps, "record elapsed_ms");
}

struct SweepOptions {
  std::vector<std::string> ids;
  std::string n, d, r, t, p, s, a, b, c;
  std::string m_choice = "both";
  int trials = 3;
  long budget = kDefaultPrecisionBudget;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
};

void add_sweep(CLI::App* cmd, SweepOptions& o) {
  cmd->add_option("--id", o.ids, "statement ids, or 'all'")->delimiter(',')->required();
  cmd->add_option("--n", o.n, "n or range a..b");
  cmd->add_option("--d", o.d, "d values (list or range)");
  cmd->add_option("--r", o.r, "r values (list or range); default 1, -1 and the lowest admissible");
  cmd->add_option("--t", o.t, "t values (list)");
  cmd->add_option("--p", o.p, "prime or range a..b for classical statements");
  cmd->add_option("--s", o.s, "exponents s (list or range)");
  cmd->add_option("--a", o.a, "fix the parameter a");
  cmd->add_option("--b", o.b, "fix the parameter b");
  cmd->add_option("--c", o.c, "fix the parameter c");
  cmd->add_option("--m-choice", o.m_choice, "first, second or both");
  cmd->add_option("--trials", o.trials, "generic specializations per instance")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", o.budget, "largest p^N used for p-adic Gamma")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
}

int run_sweep(const SweepOptions& o, const CommonOptions& c, bool classical_only) {
  SweepRequest req;
  const bool all = std::find(o.ids.begin(), o.ids.end(), "all") != o.ids.end();
  if (all) {
    for (const auto& info : list_statements()) {
      const bool classical = info.kind == StatementKind::Classical;
      if (classical ? !o.p.empty() : (!o.n.empty() && !classical_only)) req.ids.push_back(info.id);
    }
    if (req.ids.empty()) throw UsageError("--id all needs --n (q-statements) or --p (classical statements)");
  } else {
    for (const auto& id : o.ids) {
      const StatementInfo* info = find_statement(id);
      if (!info) throw UsageError("unknown statement id " + id);
      const bool classical = info->kind == StatementKind::Classical;
      if (classical_only && !classical) throw UsageError(id + " is not a classical statement");
      if (classical && o.p.empty()) throw UsageError(id + " needs --p");
      if (!classical && o.n.empty()) throw UsageError(id + " needs --n");
      req.ids.push_back(id);
    }
  }
  if (!o.n.empty()) std::tie(req.n_lo, req.n_hi) = parse_range(o.n, "--n");
  if (!o.p.empty()) std::tie(req.p_lo, req.p_hi) = parse_range(o.p, "--p");
  req.d = parse_list(o.d, "--d");
  req.r = parse_list(o.r, "--r");
  req.t = parse_list(o.t, "--t");
  if (!o.s.empty()) req.s = parse_list(o.s, "--s");
  req.a = parse_opt_rat(o.a, "--a");
  req.b = parse_opt_rat(o.b, "--b");
  req.c = parse_opt_rat(o.c, "--c");
  req.m_choice = parse_m_choice(o.m_choice);
  req.seed = c.seed;

  const std::vector<Job> jobs = expand_sweep(req);
  if (jobs.empty()) throw UsageError("the selected ranges contain no instances");
  VerifyOptions vo;
  vo.trials = o.trials;
  vo.budget = o.budget;
  const auto recs = run_jobs(jobs, vo, o.jobs);
  emit(recs, c.out, c.format, c.timestamps);
  return exit_code(recs);
}

int run_list(bool as_json) {
  for (const auto& info : list_statements()) {
    if (as_json) {
      Json j = Json::object();
      j["id"] = info.id;
      j["kind"] = info.kind == StatementKind::Classical ? "classical"
                  : info.kind == StatementKind::Equality ? "equality"
                                                         : "congruence";
      j["params"] = info.params;
      j["free_symbols"] = info.free_symbols;
      j["side_conditions"] = info.side_conditions;
      j["modulus"] = info.modulus;
      j["m_choices"] = info.m_choices;
      j["description"] = info.description;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << info.id << "  mod " << info.modulus << "  [" << info.side_conditions << "]\n    "
                << info.description << '\n';
    }
  }
  return kExitOk;
}

struct IdentityOptions {
  std::vector<std::string> ids;
  std::optional<long> n, d, r, t;
  std::string b, c;
  int random = 0;
};

Json identity_params_json(const IdentityParams& p) {
  Json j = Json::object();
  j["n"] = p.n;
  j["d"] = p.d;
  j["r"] = p.r;
  j["t"] = p.t;
  if (p.b) j["b"] = to_string(*p.b);
  if (p.c) j["c"] = to_string(*p.c);
  return j;
}

VerificationRecord identity_record(IdentityId id, const IdentityParams& params, std::uint64_t seed) {
  VerificationRecord rec;
  rec.id = std::string(identity_name(id));
  rec.modulus = "exact";
  rec.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  const IdentityCheck chk = check_terminating_identity(id, params, seed);
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rec.params = identity_params_json(chk.params);
  rec.status = chk.equal ? Status::Verified : Status::Failed;
  rec.witness["equal"] = chk.equal;
  if (!chk.equal) {
    const QRat diff = chk.lhs - chk.rhs;
    rec.witness["difference_degree"] = diff.znum().degree();
  }
  return rec;
}

int run_identity(const IdentityOptions& o, const CommonOptions& c) {
  std::vector<IdentityId> ids;
  for (const auto& name : o.ids) {
    if (name == "all") {
      ids.assign(std::begin(kAllIdentities), std::end(kAllIdentities));
      continue;
    }
    auto id = parse_identity_id(name);
    if (!id) throw UsageError("unknown identity " + name);
    ids.push_back(*id);
  }
  std::vector<VerificationRecord> recs;
  for (IdentityId id : ids) {
    if (o.random > 0) {
      for (int i = 0; i < o.random; ++i) {
        const std::uint64_t s = derive_seed(c.seed, static_cast<std::uint64_t>(i) + 1);
        SeededRng rng(s);
        recs.push_back(identity_record(id, random_identity_params(id, rng), s));
        recs.back().seed = c.seed;
      }
      continue;
    }
    if (!o.n) throw UsageError("identity needs --n or --random K");
    IdentityParams p;
    p.n = *o.n;
    if (o.d) p.d = *o.d;
    if (o.r) p.r = *o.r;
    if (o.t) p.t = *o.t;
    p.b = parse_opt_rat(o.b, "--b");
    p.c = parse_opt_rat(o.c, "--c");
    try {
      recs.push_back(identity_record(id, p, c.seed));
    } catch (const Error& e) {
      if (e.code() == Errc::NonTerminating || e.code() == Errc::DegenerateParameters) throw UsageError(e.what());
      throw;
    }
  }
  emit(recs, c.out, c.format, c.timestamps);
  return exit_code(recs);
}

Modulus modulus_from_expr(const ExprPtr& e, const Bindings& b) {
  Modulus m;
  for (const auto& [factor, mult] : product_factors(e, b)) {
    const QRat v = eval_expr(*factor, b);
    if (!v.zden().is_constant() || v.is_zero()) {
      throw Error(Errc::OutOfRange, "modulus factor " + print_expr(*factor) + " is not a nonzero polynomial");
    }
    if (v.znum().is_constant()) continue;
    m.add(primitive_part(v.znum()), mult, print_expr(*factor));
  }
  m.label = print_expr(*e);
  return m;
}

int run_check(const std::string& path, const CommonOptions& c) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read spec file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  SpecFile spec;
  Bindings bindings;
  try {
    spec = parse_spec(buf.str());
    bindings = spec_bindings(spec);
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
  Json params = Json::object();
  for (const auto& [name, v] : bindings) params[name] = to_string(v);
  std::vector<VerificationRecord> recs;
  for (const auto& chk : spec.checks) {
    VerificationRecord rec;
    rec.id = chk.name;
    rec.params = params;
    rec.modulus = print_expr(*chk.modulus);
    rec.seed = c.seed;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Modulus m = modulus_from_expr(chk.modulus, bindings);
      const CongruenceResult res = congruent(eval_expr(*chk.lhs, bindings), eval_expr(*chk.rhs, bindings), m);
      rec.witness = result_json(res);
      rec.status = res.verdict == Verdict::Verified ? Status::Verified : Status::Failed;
    } catch (const Error& e) {
      rec.status = Status::Error;
      rec.witness["error"] = std::string(errc_name(e.code()));
      rec.witness["message"] = e.what();
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    recs.push_back(std::move(rec));
  }
  emit(recs, c.out, c.format, c.timestamps);
  return exit_code(recs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of q-supercongruences and their p-adic specializations", "qsc"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  auto* list = app.add_subcommand("list", "list the statement catalog");
  bool list_json = false;
  list->add_flag("--json", list_json, "one JSON object per statement");

  CommonOptions common;
  SweepOptions sweep;
  auto* verify = app.add_subcommand("verify", "verify statements over parameter ranges");
  add_sweep(verify, sweep);
  add_common(verify, common);

  auto* padic = app.add_subcommand("padic", "classical congruences, or p-adic Gamma values");
  SweepOptions padic_sweep;
  std::string gamma_x;
  int gamma_digits = 1;
  padic->add_option("--id", padic_sweep.ids, "classical statement ids, or 'all'")->delimiter(',');
  padic->add_option("--p", padic_sweep.p, "prime or range a..b");
  padic->add_option("--s", padic_sweep.s, "exponents s");
  padic->add_option("--d", padic_sweep.d, "d values");
  padic->add_option("--r", padic_sweep.r, "r values");
  padic->add_option("--m-choice", padic_sweep.m_choice, "first, second or both");
  padic->add_option("--budget", padic_sweep.budget, "largest p^N used for p-adic Gamma");
  padic->add_option("--jobs", padic_sweep.jobs, "worker threads")->check(CLI::PositiveNumber);
  padic->add_option("--gamma", gamma_x, "print Gamma_p(x) mod p^N instead");
  padic->add_option("--digits", gamma_digits, "N for --gamma")->check(CLI::PositiveNumber);
  add_common(padic, common);

  auto* identity = app.add_subcommand("identity", "check terminating q-series identities exactly");
  IdentityOptions iopt;
  identity->add_option("--id", iopt.ids, "QCHU, JACKSON_SPEC, WHIPPLE_SPEC, WATSON_SPEC or all")
      ->delimiter(',')
      ->required();
  identity->add_option("--n", iopt.n);
  identity->add_option("--d", iopt.d);
  identity->add_option("--r", iopt.r);
  identity->add_option("--t", iopt.t);
  identity->add_option("--b", iopt.b);
  identity->add_option("--c", iopt.c);
  identity->add_option("--random", iopt.random, "K random admissible instances")->check(CLI::NonNegativeNumber);
  add_common(identity, common);

  auto* check = app.add_subcommand("check", "check congruences written in a spec file");
  std::string spec_path;
  check->add_option("--spec", spec_path, "file of let/check lines")->required();
  add_common(check, common);

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*list) return run_list(list_json);
    if (*verify) return run_sweep(sweep, common, false);
    if (*identity) return run_identity(iopt, common);
    if (*check) return run_check(spec_path, common);
    if (*padic) {
      if (!gamma_x.empty()) {
        if (padic_sweep.p.empty()) throw UsageError("--gamma needs --p");
        const long p = parse_range(padic_sweep.p, "--p").first;
        if (!is_prime(static_cast<std::uint64_t>(p))) throw UsageError("--p must be prime");
        const PadicInt g = gamma_p(parse_rat(gamma_x), p, gamma_digits, padic_sweep.budget);
        std::cout << g << '\n';
        return kExitOk;
      }
      if (padic_sweep.ids.empty()) padic_sweep.ids = {"all"};
      if (padic_sweep.p.empty()) throw UsageError("padic needs --p");
      return run_sweep(padic_sweep, common, true);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
