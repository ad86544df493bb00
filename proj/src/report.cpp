#include "dynsym/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace dynsym {

namespace {

const char* status_column(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::expected_fail: return "expected-fail";
  }
  return "?";
}

const char* status_token(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::expected_fail: return "expected-fail";
  }
  return "?";
}

std::string residual_text(double r) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << r;
  return os.str();
}

}  // namespace

std::string emit_text(const std::string& suite,
                      const std::vector<CheckRecord>& records) {
  const Summary total = summarize(records);
  std::size_t idw = 2;
  for (const auto& r : records) idw = std::max(idw, r.id.size());

  std::ostringstream os;
  os << "suite " << suite << ": " << records.size() << " checks, "
     << total.pass << " pass, " << total.fail << " fail, "
     << total.expected_fail << " expected-fail\n";
  for (const auto& r : records) {
    os << std::left << std::setw(15) << status_column(r.status)
       << std::setw(static_cast<int>(idw) + 2) << r.id << r.description;
    if (r.residual != 0.0)
      os << "  [residual " << residual_text(r.residual) << "]";
    os << "\n";
    if (!r.convention_notes.empty())
      os << std::string(17 + idw, ' ') << "~ " << r.convention_notes << "\n";
  }
  return os.str();
}

std::string emit_json(const std::string& suite, const SuiteConfig& config,
                      const std::vector<CheckRecord>& records) {
  nlohmann::ordered_json root;
  root["schema"] = 1;
  root["suite"] = suite;
  nlohmann::ordered_json cfg;
  cfg["seed"] = config.seed;
  cfg["trials"] = config.trials;
  cfg["fock_cutoff_2mode"] = config.fock_cutoff_2mode;
  cfg["fock_cutoff_4mode"] = config.fock_cutoff_4mode;
  cfg["tolerance_numeric"] = config.tolerance_numeric;
  cfg["ks_mode"] = config.ks_mode;
  cfg["presentation"] = config.presentation;
  root["config"] = std::move(cfg);
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json jr;
    jr["id"] = r.id;
    jr["description"] = r.description;
    jr["status"] = status_token(r.status);
    jr["residual"] = r.residual;
    jr["convention_notes"] = r.convention_notes;
    list.push_back(std::move(jr));
  }
  root["records"] = std::move(list);
  nlohmann::ordered_json sum;
  const Summary totals = summarize(records);
  sum["pass"] = totals.pass;
  sum["fail"] = totals.fail;
  sum["expected_fail"] = totals.expected_fail;
  root["summary"] = std::move(sum);
  return root.dump(2) + "\n";
}

}  // namespace dynsym
