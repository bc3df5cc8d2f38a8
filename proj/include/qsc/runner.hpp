#pragma once

// Expanding parameter sweeps into jobs and running them on a thread pool.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsc/catalog.hpp"

namespace qsc {

struct Job {
  std::string id;
  StatementParams params;
  MChoice m_choice = MChoice::First;
  std::uint64_t seed = 0;
};

/// A sweep request: integer ranges are inclusive; unset lists fall back to
/// the statement's defaults (d = 3, r from default_r_values, t from
/// default_t_values, both truncation choices).
struct SweepRequest {
  std::vector<std::string> ids;
  long n_lo = 1, n_hi = 1;
  std::vector<long> d, r, t;
  long p_lo = 5, p_hi = 5;  // classical statements sweep primes in this range
  std::vector<long> s{1};
  std::optional<MChoice> m_choice;
  std::optional<BigRat> a, b, c;
  std::uint64_t seed = 0;
  bool admissible_only = false;  // drop parameter points violating side conditions
};

std::vector<Job> expand_sweep(const SweepRequest& req);

/// Runs the jobs on `threads` workers; results are in job order regardless of
/// scheduling.
std::vector<VerificationRecord> run_jobs(const std::vector<Job>& jobs, const VerifyOptions& opts, int threads = 1);

}  // namespace qsc
