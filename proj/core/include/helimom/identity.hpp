#pragma once

#include <string>
#include <vector>

namespace helimom {

// Result of an identity-verification pass: one named residual per checked
// relation, each with the tolerance it was held to. Verifiers never throw on
// a bad residual; callers decide what failing means.
struct IdentityReport {
  struct Entry {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass() const { return residual <= tol; }
  };

  std::vector<Entry> entries;

  void add(std::string name, double residual, double tol) {
    entries.push_back({std::move(name), residual, tol});
  }

  double max_residual() const {
    double r = 0.0;
    for (const auto& e : entries) r = r < e.residual ? e.residual : r;
    return r;
  }

  const Entry* worst() const {
    const Entry* w = nullptr;
    for (const auto& e : entries)
      if (!w || e.residual / e.tol > w->residual / w->tol) w = &e;
    return w;
  }

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass()) return false;
    return true;
  }

  // Merge another report into this one (suite aggregation keeps the worst
  // residual seen for an already-present entry name untouched; entries are
  // simply appended — names carry the k-sample context if needed).
  void append(const IdentityReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }
};

}  // namespace helimom
