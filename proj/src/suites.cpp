#include "dynsym/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dynsym/hydrogen.hpp"
#include "dynsym/jordan.hpp"
#include "dynsym/landau.hpp"
#include "dynsym/spinor.hpp"
#include "dynsym/tkk.hpp"
#include "dynsym/transforms.hpp"
#include "dynsym/weyl.hpp"

namespace dynsym {

namespace {

void append(std::vector<CheckRecord>& out, std::vector<CheckRecord> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

CheckRecord spectrum_record(const SuiteConfig& config) {
  const int cutoff = config.fock_cutoff_2mode;
  const auto levels = landau_spectrum(cutoff);
  double residual = 0.0;
  bool shape_ok = !levels.empty();
  for (int n = 0; n < 10 && shape_ok; ++n) {
    double best = std::numeric_limits<double>::infinity();
    int multiplicity = 0;
    for (const auto& level : levels) {
      const double deviation = std::abs(level.value - (n + 0.5));
      if (deviation < best) {
        best = deviation;
        multiplicity = level.multiplicity;
      }
    }
    residual = std::max(residual, best);
    shape_ok = shape_ok && multiplicity == cutoff + 1;
  }
  CheckRecord r;
  r.id = "landau-spectrum";
  r.description = "energy levels are n + 1/2 for n = 0..9, each " +
                  std::to_string(cutoff + 1) +
                  "-fold degenerate at cutoff " + std::to_string(cutoff);
  r.status = shape_ok && residual <= 1e-8 ? CheckStatus::pass
                                          : CheckStatus::fail;
  r.residual = residual;
  r.convention_notes =
      "levels matched by value; clusters spoiled by the truncation boundary "
      "sit outside the checked range";
  return r;
}

std::string pair_label(int A, int B) {
  return "m(" + std::to_string(A) + "," + std::to_string(B) + ")";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "weyl", "landau", "jordan", "tkk", "hydrogen", "spinor", "transforms"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckRecord> landau_checks(const SuiteConfig& config) {
  std::vector<CheckRecord> out;
  for (Presentation p :
       {Presentation::phase, Presentation::holomorphic,
        Presentation::oscillator, Presentation::spinorial,
        Presentation::cartesian})
    append(out, verify_so23(dirac_generators(p)));
  append(out, cross_presentation_check());
  append(out, hamiltonian_identities(config));
  out.push_back(spectrum_record(config));
  return out;
}

std::vector<CheckRecord> so23_checks(const SuiteConfig& config) {
  const auto p = presentation_from_name(config.presentation);
  if (!p)
    throw std::invalid_argument("unknown presentation: " +
                                config.presentation);
  const auto gens = dirac_generators(*p);
  const auto fam = gens.family();
  const auto report = verify_closure(fam);
  const int sign = report.closed ? report.sign : 1;

  std::vector<CheckRecord> out;
  const auto ps = fam.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const auto [A, B] = ps[i];
      const auto [C, D] = ps[j];
      const WeylElement comm = commutator(fam.stored(A, B), fam.stored(C, D));
      const WeylElement rhs =
          Scalar(sign) * bracket_rule_rhs(fam, A, B, C, D);
      out.push_back(exact_check(
          "pair-" + pair_label(A, B) + "-" + pair_label(C, D),
          "[" + pair_label(A, B) + ", " + pair_label(C, D) +
              "] matches the metric contraction rule",
          comm == rhs));
    }
  append(out, verify_so23(gens));
  return out;
}

std::vector<CheckRecord> run_suite(const std::string& name,
                                   const SuiteConfig& config) {
  if (name == "all") {
    std::vector<CheckRecord> out;
    for (const auto& suite : suite_names()) append(out, run_suite(suite, config));
    return out;
  }
  if (name == "weyl") return weyl_checks(config);
  if (name == "landau") return landau_checks(config);
  if (name == "so23") return so23_checks(config);
  if (name == "jordan") return jordan_checks(config);
  if (name == "tkk") return tkk_checks(config);
  if (name == "hydrogen") return hydrogen_checks(config);
  if (name == "spinor") return spinor_checks(config);
  if (name == "transforms") return transform_checks(config);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<CheckRecord> run_selected(const SuiteConfig& config) {
  std::vector<CheckRecord> out;
  for (const auto& name : config.suites) append(out, run_suite(name, config));
  return out;
}

}  // namespace dynsym
