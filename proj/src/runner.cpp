#include "qsc/runner.hpp"

#include <atomic>
#include <thread>

#include "qsc/padic.hpp"

namespace qsc {

namespace {

bool takes(const StatementInfo& info, const char* name) {
  for (const auto& p : info.params)
    if (p == name) return true;
  return false;
}

std::vector<MChoice> choices_for(const StatementInfo& info, const std::optional<MChoice>& m) {
  if (m) return {*m};
  if (info.m_choices >= 2) return {MChoice::First, MChoice::Second};
  return {MChoice::First};
}

}  // namespace

std::vector<Job> expand_sweep(const SweepRequest& req) {
  std::vector<Job> jobs;
  for (const auto& id : req.ids) {
    const StatementInfo* info = find_statement(id);
    if (!info) throw Error(Errc::UnknownStatement, "unknown statement id " + id);
    const bool classical = info->kind == StatementKind::Classical;

    std::vector<StatementParams> bases;
    if (classical) {
      for (long p = std::max<long>(req.p_lo, 2); p <= req.p_hi; ++p) {
        if (!is_prime(static_cast<std::uint64_t>(p))) continue;
        for (long s : req.s) {
          StatementParams sp;
          sp.p = p;
          if (takes(*info, "s")) sp.s = s;
          bases.push_back(sp);
          if (!takes(*info, "s")) break;
        }
      }
    } else {
      for (long n = req.n_lo; n <= req.n_hi; ++n) {
        StatementParams sp;
        sp.n = n;
        bases.push_back(sp);
      }
    }

    for (const auto& base : bases) {
      std::vector<StatementParams> with_d;
      if (takes(*info, "d")) {
        for (long d : req.d.empty() ? std::vector<long>{3} : req.d) {
          StatementParams sp = base;
          sp.d = d;
          with_d.push_back(sp);
        }
      } else {
        with_d.push_back(base);
      }
      for (const auto& sd : with_d) {
        std::vector<StatementParams> with_t;
        if (takes(*info, "t")) {
          for (long t : req.t.empty() ? default_t_values(id, sd) : req.t) {
            StatementParams sp = sd;
            sp.t = t;
            with_t.push_back(sp);
          }
          if (with_t.empty()) with_t.push_back(sd);
        } else {
          with_t.push_back(sd);
        }
        for (const auto& st : with_t) {
          std::vector<StatementParams> with_r;
          if (takes(*info, "r")) {
            for (long r : req.r.empty() ? default_r_values(id, st) : req.r) {
              StatementParams sp = st;
              sp.r = r;
              with_r.push_back(sp);
            }
            // no admissible r: keep the point so it is reported as skipped
            if (with_r.empty()) with_r.push_back(st);
          } else {
            with_r.push_back(st);
          }
          for (auto sp : with_r) {
            sp.a = req.a;
            sp.b = req.b;
            sp.c = req.c;
            if (req.admissible_only && side_violation(id, sp)) continue;
            for (MChoice m : choices_for(*info, req.m_choice)) jobs.push_back({id, sp, m, req.seed});
          }
        }
      }
    }
  }
  return jobs;
}

std::vector<VerificationRecord> run_jobs(const std::vector<Job>& jobs, const VerifyOptions& opts, int threads) {
  std::vector<VerificationRecord> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& j = jobs[i];
      out[i] = verify_statement(j.id, j.params, j.m_choice, j.seed, opts);
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  if (n == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace qsc
