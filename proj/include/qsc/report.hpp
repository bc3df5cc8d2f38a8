#pragma once

// JSONL and CSV serialization of verification records.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/statement.hpp"

namespace qsc {

enum class OutputFormat { Jsonl, Csv };

OutputFormat parse_output_format(std::string_view name);

/// Keys id, params, modulus, m_choice, status, witness, elapsed_ms, seed.
/// elapsed_ms is null unless timestamps is set, so reruns compare byte for byte.
Json record_json(const VerificationRecord& rec, bool timestamps = false);

std::string csv_header();
std::string csv_row(const VerificationRecord& rec, bool timestamps = false);

void write_records(std::ostream& os, const std::vector<VerificationRecord>& recs, OutputFormat fmt,
                   bool timestamps = false);

}  // namespace qsc
