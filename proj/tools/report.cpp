#include "tools/report.hpp"

#include <cstdio>
#include <ostream>

namespace helimom::tool {

int Report::failures() const {
  int n = 0;
  for (const auto& r : records_)
    if (!r.pass) ++n;
  return n;
}

void Report::write_records(std::ostream& os) const {
  for (const auto& r : records_) {
    nlohmann::json j = r.details;
    j["format_version"] = kReportFormatVersion;
    j["kind"] = r.kind;
    j["name"] = r.name;
    j["pass"] = r.pass;
    os << j.dump() << '\n';
  }
}

void Report::write_table(std::ostream& os) const {
  std::size_t kind_w = 0, name_w = 0;
  for (const auto& r : records_) {
    kind_w = kind_w < r.kind.size() ? r.kind.size() : kind_w;
    name_w = name_w < r.name.size() ? r.name.size() : name_w;
  }
  for (const auto& r : records_) {
    os << (r.pass ? "[PASS] " : "[FAIL] ");
    os << r.kind << std::string(kind_w - r.kind.size() + 2, ' ');
    os << r.name << std::string(name_w - r.name.size() + 2, ' ');
    os << r.note << '\n';
  }
}

std::string fmt_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fmt_general(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace helimom::tool
