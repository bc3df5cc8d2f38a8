#pragma once

// Types shared by the q-side catalog and the classical p-adic checks:
// statement parameters, descriptions, and the verification record.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qsc/arith.hpp"

namespace qsc {

using Json = nlohmann::ordered_json;

/// Which truncation point of a statement offering two (e.g. (n-1)/2 vs n-1).
enum class MChoice { First, Second };

std::string_view m_choice_name(MChoice m);

struct StatementParams {
  std::optional<long> n, d, r, t, p, s;
  std::optional<BigRat> a, b, c;
};

/// Integer parameters in fixed order (n, d, r, t, p, s), then a, b, c as strings.
Json params_json(const StatementParams& sp);

enum class StatementKind { Congruence, Equality, Classical };

struct StatementInfo {
  std::string id;
  std::string description;
  StatementKind kind = StatementKind::Congruence;
  std::vector<std::string> params;        // integer parameters, e.g. {"n", "d", "r"}
  std::vector<std::string> free_symbols;  // specialized generically, subset of {a, b, c}
  std::string side_conditions;
  std::string modulus;  // symbolic
  int m_choices = 1;
};

enum class Status { Verified, Failed, Skipped, Error };

std::string_view status_name(Status s);

struct VerificationRecord {
  std::string id;
  Json params = Json::object();
  std::string modulus;
  std::string m_choice;  // "first", "second", or empty when the statement has no truncation choice
  Status status = Status::Error;
  Json witness = Json::object();
  double elapsed_ms = 0;
  std::uint64_t seed = 0;
};

}  // namespace qsc
