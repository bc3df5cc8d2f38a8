#pragma once

// The statement inventory: every q-supercongruence, lemma and classical
// congruence the engine can check, with parameters, side conditions, and
// right-hand sides written in the expression DSL.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/congruence.hpp"
#include "qsc/statement.hpp"

namespace qsc {

/// All statements, q-side first, then classical ones.
const std::vector<StatementInfo>& list_statements();
const StatementInfo* find_statement(std::string_view id);

/// Side conditions of the statement at these parameters; empty when admissible.
/// Throws UnknownStatement.
std::optional<std::string> side_violation(std::string_view id, const StatementParams& sp);

/// Truncation values offered by a q-statement at admissible parameters.
std::vector<long> truncation_values(std::string_view id, const StatementParams& sp);

/// A weaker or auxiliary congruence checked alongside the main one.
struct AuxCheck {
  std::string label;
  QRat rhs;
  Modulus modulus;
};

struct CongruenceInstance {
  std::string id;
  StatementParams params;  // with a, b, c filled in when sampled
  MChoice m_choice = MChoice::First;
  long M = 0;  // the truncation point; -1 for statements without a sum
  std::string branch;
  std::uint64_t seed = 0;
  long rejection_count = 0;
  bool exact_equality = false;  // compare lhs == rhs instead of a congruence
  QRat lhs;
  QRat rhs;
  Modulus modulus;
  std::vector<AuxCheck> aux;
};

/// Builds the instance: evaluates LHS, RHS and modulus. Unset free symbols are
/// sampled from `seed`. Throws SideConditionViolated, NonIntegerBound, ...
CongruenceInstance instantiate(std::string_view id, const StatementParams& sp, MChoice m, std::uint64_t seed);

struct InstanceOutcome {
  CongruenceResult main;
  std::optional<CongruenceResult> weaker;  // one factor power fewer (monotonicity)
  std::string weaker_label;
  std::vector<std::pair<std::string, CongruenceResult>> aux;
  bool verified() const;
};

InstanceOutcome check_instance(const CongruenceInstance& inst);

/// Verdict plus the witness fields that matter for it.
Json result_json(const CongruenceResult& r);

struct VerifyOptions {
  int trials = 3;  // seeded specializations for statements with free symbols
  long budget = 10'000'000;
};

/// Verifies one statement at fixed integer parameters and truncation choice,
/// aggregating over the seeded trials. Never throws for statement-level
/// problems: those become Skipped or Error records.
VerificationRecord verify_statement(std::string_view id, const StatementParams& sp, MChoice m, std::uint64_t seed,
                                    const VerifyOptions& opts = {});

/// Values of r worth sweeping: 1, -1, and the largest admissible negative r
/// other than -1 (each only if admissible at these parameters).
std::vector<long> default_r_values(std::string_view id, const StatementParams& sp);
/// Values of t the statement ranges over ({1, 2} or {1, d-1}); empty if none.
std::vector<long> default_t_values(std::string_view id, const StatementParams& sp);

/// Stable 64-bit hash used to derive per-instance seeds.
std::uint64_t instance_salt(std::string_view id, const StatementParams& sp, MChoice m, long trial);

}  // namespace qsc
