#pragma once

#include <string>
#include <vector>

#include "dynsym/report.hpp"

namespace dynsym {

// Canonical suite order; "all" runs these in sequence.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Full Landau battery: closure in every presentation, cross-presentation
// equalities, Hamiltonian identities, and the spectrum record.
std::vector<CheckRecord> landau_checks(const SuiteConfig& config);

// Bracket-by-bracket closure for the presentation named in the config:
// one record per generator pair plus the fitted-sign summary.
std::vector<CheckRecord> so23_checks(const SuiteConfig& config);

// Dispatches a suite by name ("all" included); throws std::invalid_argument
// for unknown names.
std::vector<CheckRecord> run_suite(const std::string& name,
                                   const SuiteConfig& config);

// Runs config.suites in the order given.
std::vector<CheckRecord> run_selected(const SuiteConfig& config);

}  // namespace dynsym
