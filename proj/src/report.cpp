#include "qsc/report.hpp"

#include <ostream>

#include "qsc/error.hpp"

namespace qsc {

std::string_view m_choice_name(MChoice m) { return m == MChoice::First ? "first" : "second"; }

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Failed: return "failed";
    case Status::Skipped: return "skipped";
    case Status::Error: return "error";
  }
  return "error";
}

Json params_json(const StatementParams& sp) {
  Json j = Json::object();
  const std::pair<const char*, const std::optional<long>*> ints[] = {{"n", &sp.n}, {"d", &sp.d}, {"r", &sp.r},
                                                                    {"t", &sp.t}, {"p", &sp.p}, {"s", &sp.s}};
  for (const auto& [name, v] : ints)
    if (*v) j[name] = **v;
  const std::pair<const char*, const std::optional<BigRat>*> rats[] = {{"a", &sp.a}, {"b", &sp.b}, {"c", &sp.c}};
  for (const auto& [name, v] : rats)
    if (*v) j[name] = to_string(**v);
  return j;
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "jsonl" || name == "json") return OutputFormat::Jsonl;
  if (name == "csv") return OutputFormat::Csv;
  throw Error(Errc::OutOfRange, "unknown output format " + std::string(name));
}

Json record_json(const VerificationRecord& rec, bool timestamps) {
  Json j = Json::object();
  j["id"] = rec.id;
  j["params"] = rec.params;
  j["modulus"] = rec.modulus;
  j["m_choice"] = rec.m_choice;
  j["status"] = std::string(status_name(rec.status));
  j["witness"] = rec.witness;
  if (timestamps) {
    j["elapsed_ms"] = rec.elapsed_ms;
  } else {
    j["elapsed_ms"] = nullptr;
  }
  j["seed"] = rec.seed;
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string csv_header() { return "id,params,modulus,m_choice,status,witness,elapsed_ms,seed"; }

std::string csv_row(const VerificationRecord& rec, bool timestamps) {
  std::string row;
  row += csv_field(rec.id) + ",";
  row += csv_field(rec.params.dump()) + ",";
  row += csv_field(rec.modulus) + ",";
  row += csv_field(rec.m_choice) + ",";
  row += std::string(status_name(rec.status)) + ",";
  row += csv_field(rec.witness.dump()) + ",";
  row += (timestamps ? Json(rec.elapsed_ms).dump() : std::string()) + ",";
  row += std::to_string(rec.seed);
  return row;
}

void write_records(std::ostream& os, const std::vector<VerificationRecord>& recs, OutputFormat fmt, bool timestamps) {
  if (fmt == OutputFormat::Csv) {
    os << csv_header() << '\n';
    for (const auto& r : recs) os << csv_row(r, timestamps) << '\n';
    return;
  }
  for (const auto& r : recs) os << record_json(r, timestamps).dump() << '\n';
}

}  // namespace qsc
