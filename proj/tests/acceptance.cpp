#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dynsym/hydrogen.hpp"
#include "dynsym/jordan.hpp"
#include "dynsym/landau.hpp"
#include "dynsym/spinor.hpp"
#include "dynsym/tkk.hpp"
#include "dynsym/transforms.hpp"

using namespace dynsym;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& label) {
  std::printf("criterion %2d: %s  %s\n", number, ok ? "pass" : "FAIL",
              label.c_str());
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string with_time(std::string label, double dt) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), " (%.2f s)", dt);
  return label + buf;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool all_pass(const std::vector<CheckRecord>& records) {
  if (records.empty()) return false;
  const Summary s = summarize(records);
  return s.fail == 0 && s.expected_fail == 0;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "./dynsym";
  const SuiteConfig config;

  auto t0 = Clock::now();
  const auto closure = verify_closure(dirac_generators(Presentation::phase).family());
  const double dt1 = seconds_since(t0);
  report(1,
         closure.closed && closure.pairs_checked == 45 && dt1 < 5.0,
         with_time("all 45 phase-variable brackets close with one fitted "
                   "sign and zero residual",
                   dt1));

  const auto xpres = cross_presentation_check();
  int trio_count = 0;
  bool trio_ok = true;
  for (const auto& r : xpres) {
    const bool trio = r.id.starts_with("xpres-holo-phase-") ||
                      r.id.starts_with("xpres-osc-holo-") ||
                      r.id.starts_with("xpres-osc-phase-");
    if (!trio) continue;
    ++trio_count;
    trio_ok = trio_ok && r.status == CheckStatus::pass;
  }
  report(2, trio_ok && trio_count == 30,
         "30 generator equalities across the phase, holomorphic and ladder "
         "presentations hold exactly");

  const auto ham = hamiltonian_identities(config);
  bool ham_ok = !ham.empty();
  double ham_residual = 0.0;
  for (const auto& r : ham) {
    ham_ok = ham_ok && r.status == CheckStatus::pass;
    ham_residual = std::max(ham_residual, r.residual);
  }
  report(3, ham_ok && ham_residual <= config.tolerance_numeric,
         "Hamiltonian identities are exact symbolically and within 1e-10 on "
         "the truncated number basis");

  t0 = Clock::now();
  const int cutoff = config.fock_cutoff_2mode;
  const auto levels = landau_spectrum(cutoff);
  const double dt4 = seconds_since(t0);
  bool spectrum_ok = !levels.empty() && dt4 < 10.0;
  for (int n = 0; n < 10 && spectrum_ok; ++n) {
    double best = 1e300;
    int multiplicity = 0;
    for (const auto& level : levels) {
      const double deviation = std::abs(level.value - (n + 0.5));
      if (deviation < best) {
        best = deviation;
        multiplicity = level.multiplicity;
      }
    }
    spectrum_ok = best <= 1e-8 && multiplicity == cutoff + 1;
  }
  report(4, spectrum_ok,
         with_time("levels n + 1/2 for n = 0..9, each with degeneracy "
                   "cutoff + 1",
                   dt4));

  report(5, all_pass(jordan_checks(config)),
         "Jordan identities, pair symmetry and the linearized exchange rule "
         "pass on seeded tuples; the structure coefficient matches its "
         "closed form on all index combinations");

  report(6, all_pass(tkk_checks(config)),
         "triple-system, conformal, grading, reduction, ambient and "
         "inversion identities are exact in both dimensions");

  const auto hydrogen = hydrogen_checks(config);
  bool hydrogen_match = false;
  for (const auto& r : hydrogen)
    if (r.id == "hydrogen-planar-structure-match")
      hydrogen_match = r.status == CheckStatus::pass;
  report(7, all_pass(hydrogen) && hydrogen_match,
         "radial so(2,4) closes across all 105 brackets, the radial triple "
         "closes, and the planar structure constants match the "
         "two-dimensional table");

  auto gamma_and_ladder = gamma_checks();
  for (auto& r : ladder_representation_checks(config))
    gamma_and_ladder.push_back(std::move(r));
  report(8, all_pass(gamma_and_ladder),
         "Clifford relations, pseudo-hermiticity, spin-generator brackets, "
         "bilinear brackets and the linear Casimir identities are exact");

  report(9, all_pass(majorana_checks()),
         "the reduced spinor keeps canonical brackets, spans ten surviving "
         "bilinears closing as so(2,3), and maps onto the phase generators "
         "with recorded constants");

  const auto transforms = transform_checks(config);
  const Summary tsum = summarize(transforms);
  bool xfail_ok = tsum.fail == 0 && tsum.expected_fail == 1;
  for (const auto& r : transforms)
    if (r.status == CheckStatus::expected_fail)
      xfail_ok = xfail_ok && r.id == "ks-as-written-norm";
  report(10, xfail_ok,
         "spinor-to-space transforms verify canonical brackets, norms and "
         "restrictions; the literal norm discrepancy is recorded as "
         "expected-fail");

  const std::string first = "acceptance_run_1.json";
  const std::string second = "acceptance_run_2.json";
  const std::string base =
      "\"" + cli + "\" verify all --format json 2>/dev/null > ";
  t0 = Clock::now();
  const int rc1 = std::system((base + first).c_str());
  const double dt11 = seconds_since(t0);
  const int rc2 = std::system((base + second).c_str());
  const std::string body1 = slurp(first);
  const std::string body2 = slurp(second);
  std::remove(first.c_str());
  std::remove(second.c_str());
  report(11,
         rc1 == 0 && rc2 == 0 && dt11 < 60.0 && !body1.empty() &&
             body1 == body2,
         with_time("the full battery exits cleanly, under budget, with "
                   "byte-identical reports",
                   dt11));

  if (failures == 0)
    std::printf("all 11 criteria satisfied\n");
  else
    std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
