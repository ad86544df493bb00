#pragma once

#include <string>
#include <vector>

namespace dynsym {

enum class CheckStatus { pass, fail, expected_fail };

struct CheckRecord {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::fail;
  double residual = 0.0;
  std::string convention_notes;
};

inline CheckRecord exact_check(std::string id, std::string description,
                               bool ok, std::string notes = "") {
  CheckRecord r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.residual = 0.0;
  r.convention_notes = std::move(notes);
  return r;
}

inline CheckRecord numeric_check(std::string id, std::string description,
                                 double residual, double tolerance,
                                 std::string notes = "") {
  CheckRecord r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.status = residual <= tolerance ? CheckStatus::pass : CheckStatus::fail;
  r.residual = residual;
  r.convention_notes = std::move(notes);
  return r;
}

struct SuiteConfig {
  unsigned seed = 42;
  int trials = 32;
  int fock_cutoff_2mode = 12;
  int fock_cutoff_4mode = 6;
  double tolerance_numeric = 1e-10;
  std::string ks_mode = "hopf-normalized";
  std::string output = "text";
  std::string presentation = "phase";
  std::vector<std::string> suites = {"all"};
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int expected_fail = 0;
};

inline Summary summarize(const std::vector<CheckRecord>& records) {
  Summary s;
  for (const auto& r : records) {
    switch (r.status) {
      case CheckStatus::pass: ++s.pass; break;
      case CheckStatus::fail: ++s.fail; break;
      case CheckStatus::expected_fail: ++s.expected_fail; break;
    }
  }
  return s;
}

std::string emit_text(const std::string& suite,
                      const std::vector<CheckRecord>& records);
std::string emit_json(const std::string& suite, const SuiteConfig& config,
                      const std::vector<CheckRecord>& records);

}  // namespace dynsym
