#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace helimom::tool {

// Bumped whenever the record schema changes shape; every emitted record
// carries it so downstream scripts can refuse streams they don't understand.
inline constexpr int kReportFormatVersion = 1;

// One check outcome. `details` is the kind-specific numeric payload for the
// machine-readable stream; `note` is a preformatted one-liner for the human
// table and never enters the stream (it is derived from `details`).
struct CheckRecord {
  std::string kind;  // "identity", "moments", "oracle", "algebra", "summary"
  std::string name;
  bool pass = false;
  std::string note;
  nlohmann::json details = nlohmann::json::object();
};

// Accumulates check records and renders them twice: once as a JSON-lines
// stream (one self-describing object per line) and once as a table. Neither
// form contains timestamps, hostnames or addresses, so a fixed config and
// seed reproduce both byte for byte — that is what makes golden-file
// regression diffs possible.
class Report {
 public:
  void add(CheckRecord rec) { records_.push_back(std::move(rec)); }
  void append(const Report& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
  }

  int failures() const;
  bool all_pass() const { return failures() == 0; }
  const std::vector<CheckRecord>& records() const { return records_; }

  // One JSON object per line; keys sorted (library order), format_version,
  // kind, name and pass merged into the details payload.
  void write_records(std::ostream& os) const;

  void write_table(std::ostream& os) const;

 private:
  std::vector<CheckRecord> records_;
};

// printf-shaped helpers used to build table notes (locale-independent).
std::string fmt_sci(double v);      // "%.3e"
std::string fmt_general(double v);  // "%.12g"

}  // namespace helimom::tool
