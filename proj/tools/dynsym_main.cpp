#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynsym/landau.hpp"
#include "dynsym/serialize.hpp"
#include "dynsym/spinor.hpp"
#include "dynsym/suites.hpp"

namespace {

using dynsym::CheckRecord;
using dynsym::SuiteConfig;

void apply_config_file(SuiteConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  const nlohmann::json doc = nlohmann::json::parse(in);
  if (doc.contains("seed")) config.seed = doc.at("seed").get<unsigned>();
  if (doc.contains("trials")) config.trials = doc.at("trials").get<int>();
  if (doc.contains("fock_cutoff_2mode"))
    config.fock_cutoff_2mode = doc.at("fock_cutoff_2mode").get<int>();
  if (doc.contains("fock_cutoff_4mode"))
    config.fock_cutoff_4mode = doc.at("fock_cutoff_4mode").get<int>();
  if (doc.contains("tolerance_numeric"))
    config.tolerance_numeric = doc.at("tolerance_numeric").get<double>();
  if (doc.contains("ks_mode"))
    config.ks_mode = doc.at("ks_mode").get<std::string>();
  if (doc.contains("output"))
    config.output = doc.at("output").get<std::string>();
  if (doc.contains("presentation"))
    config.presentation = doc.at("presentation").get<std::string>();
  if (doc.contains("suites"))
    config.suites = doc.at("suites").get<std::vector<std::string>>();
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "+";
    out += p;
  }
  return out;
}

int run_verify(SuiteConfig config, const std::vector<std::string>& names) {
  if (!names.empty()) config.suites = names;
  std::vector<CheckRecord> records;
  try {
    records = dynsym::run_selected(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const std::string label = join(config.suites);
  if (config.output == "json")
    std::cout << dynsym::emit_json(label, config, records);
  else
    std::cout << dynsym::emit_text(label, records);
  return dynsym::summarize(records).fail == 0 ? 0 : 1;
}

int run_spectrum(const SuiteConfig& config, int cutoff, double field_gauss,
                 double mass_gram, double charge_esu) {
  const int n = cutoff > 0 ? cutoff : config.fock_cutoff_2mode;
  const int given = (field_gauss > 0) + (mass_gram > 0) + (charge_esu > 0);
  if (given != 0 && given != 3) {
    std::cerr << "error: --field-gauss, --mass and --charge must be given "
                 "together\n";
    return 2;
  }
  const bool physical = given == 3;
  constexpr double kHbar = 1.054571817e-27;
  dynsym::LandauFrame frame =
      physical
          ? dynsym::LandauFrame::from_gaussian(field_gauss, mass_gram,
                                               charge_esu)
          : dynsym::LandauFrame::from_omega(1.0);
  const auto levels = dynsym::landau_spectrum(n);

  if (config.output == "json") {
    nlohmann::ordered_json root;
    root["schema"] = 1;
    root["object"] = "landau-spectrum";
    root["cutoff"] = n;
    if (physical) {
      root["omega_rad_per_s"] = frame.omega;
      root["magnetic_length_cm"] = frame.magnetic_length;
    }
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& level : levels) {
      nlohmann::ordered_json entry;
      entry["value"] = level.value;
      entry["multiplicity"] = level.multiplicity;
      if (physical) entry["energy_erg"] = kHbar * frame.omega * level.value;
      list.push_back(std::move(entry));
    }
    root["levels"] = std::move(list);
    std::cout << root.dump(2) << "\n";
    return 0;
  }

  std::ostringstream os;
  os << "landau levels at cutoff " << n << " (dimension " << (n + 1) * (n + 1)
     << ")\n";
  if (physical)
    os << "omega = " << std::setprecision(10) << frame.omega
       << " rad/s, magnetic length = " << frame.magnetic_length << " cm\n";
  for (const auto& level : levels) {
    os << "E/(hbar omega) = " << std::setw(14) << std::setprecision(10)
       << level.value << "  multiplicity " << level.multiplicity;
    if (physical)
      os << "  E = " << std::setprecision(10)
         << kHbar * frame.omega * level.value << " erg";
    os << "\n";
  }
  std::cout << os.str();
  return 0;
}

int run_dump(const SuiteConfig& config, const std::string& object) {
  const auto presentation = dynsym::presentation_from_name(config.presentation);
  if (!presentation) {
    std::cerr << "error: unknown presentation: " << config.presentation
              << "\n";
    return 2;
  }

  nlohmann::ordered_json root;
  root["schema"] = 1;
  root["object"] = object;
  std::ostringstream text;

  if (object == "sigma") {
    const auto basis = dynsym::gamma_basis();
    const auto fam = dynsym::sigma_family(basis);
    root["indices"] = fam.indices;
    nlohmann::ordered_json metric = nlohmann::ordered_json::array();
    for (int idx : fam.indices) metric.push_back(fam.eta.at(idx));
    root["metric"] = std::move(metric);
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& [A, B] : fam.pairs()) {
      nlohmann::ordered_json entry;
      entry["pair"] = nlohmann::ordered_json::array({A, B});
      entry["matrix"] = dynsym::json_matrix(fam.stored(A, B));
      list.push_back(std::move(entry));
      text << "sigma(" << A << "," << B << ") =\n";
      const dynsym::Matrix& m = fam.stored(A, B);
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        text << " ";
        for (Eigen::Index c = 0; c < m.cols(); ++c)
          text << " " << std::setw(12) << m(r, c).str();
        text << "\n";
      }
    }
    root["generators"] = std::move(list);
  } else if (object == "generators") {
    const auto gens = dynsym::dirac_generators(*presentation);
    const auto fam = gens.family();
    root["presentation"] = config.presentation;
    root["indices"] = fam.indices;
    nlohmann::ordered_json metric = nlohmann::ordered_json::array();
    for (int idx : fam.indices) metric.push_back(fam.eta.at(idx));
    root["metric"] = std::move(metric);
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& [A, B] : fam.pairs()) {
      nlohmann::ordered_json entry;
      entry["pair"] = nlohmann::ordered_json::array({A, B});
      entry["element"] = dynsym::json_weyl_element(fam.get(A, B));
      list.push_back(std::move(entry));
      text << "m(" << A << "," << B << ") = " << dynsym::to_text(fam.get(A, B))
           << "\n";
    }
    root["generators"] = std::move(list);
  } else {
    const auto fam = dynsym::dirac_generators(*presentation).family();
    const auto report = dynsym::verify_closure(fam);
    root["presentation"] = config.presentation;
    root["fitted_sign"] = report.sign;
    const auto table = dynsym::structure_constants(fam, report.sign);
    root["rows"] = dynsym::json_structure_table(table);
    for (const auto& [lhs, terms] : table) {
      text << "[m(" << lhs.first.first << "," << lhs.first.second << "), m("
           << lhs.second.first << "," << lhs.second.second << ")] =";
      if (terms.empty()) text << " 0";
      for (const auto& [pair, coeff] : terms)
        text << " + (" << coeff.str() << ") m(" << pair.first << ","
             << pair.second << ")";
      text << "\n";
    }
  }

  if (config.output == "json")
    std::cout << root.dump(2) << "\n";
  else
    std::cout << text.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the so(2,3) dynamical symmetry of the "
               "Landau problem and its companion constructions"};
  app.require_subcommand(1);

  SuiteConfig config;
  if (const char* env = std::getenv("DYNSYM_CONFIG")) {
    try {
      apply_config_file(config, env);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  app.add_option("--seed", config.seed, "seed for randomized checks");
  app.add_option("--trials", config.trials, "sample count for randomized checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--fock-cutoff", config.fock_cutoff_2mode,
                 "per-mode quanta cutoff for two-mode numerics")
      ->check(CLI::PositiveNumber);
  app.add_option("--fock-cutoff-4mode", config.fock_cutoff_4mode,
                 "per-mode quanta cutoff for four-mode numerics")
      ->check(CLI::PositiveNumber);
  app.add_option("--tolerance", config.tolerance_numeric,
                 "numeric tolerance for floating-point checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--ks-mode", config.ks_mode,
                 "position convention echoed into reports")
      ->check(CLI::IsMember({"hopf-normalized", "as-written"}));
  app.add_option("--format,--output", config.output, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--presentation", config.presentation,
                 "generator presentation for so23 and dump")
      ->check(CLI::IsMember(
          {"phase", "holomorphic", "oscillator", "spinorial", "cartesian"}));

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->fallthrough();
  std::vector<std::string> suite_args;
  verify->add_option("suite", suite_args, "suites to run")
      ->check(CLI::IsMember({"all", "weyl", "landau", "so23", "jordan", "tkk",
                             "hydrogen", "spinor", "transforms"}));

  auto* spectrum =
      app.add_subcommand("spectrum", "eigenvalue clusters of the realized "
                                     "Hamiltonian");
  spectrum->fallthrough();
  std::string spectrum_target;
  int cutoff = 0;
  double field_gauss = 0.0;
  double mass_gram = 0.0;
  double charge_esu = 0.0;
  spectrum->add_option("target", spectrum_target, "spectrum to compute")
      ->required()
      ->check(CLI::IsMember({"landau"}));
  spectrum->add_option("--cutoff", cutoff, "per-mode quanta cutoff")
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--field-gauss", field_gauss,
                       "magnetic field in gauss");
  spectrum->add_option("--mass", mass_gram, "particle mass in grams");
  spectrum->add_option("--charge", charge_esu, "particle charge in esu");

  auto* dump = app.add_subcommand("dump", "serialize generator data");
  dump->fallthrough();
  std::string dump_object;
  dump->add_option("object", dump_object, "what to serialize")
      ->required()
      ->check(CLI::IsMember({"sigma", "generators", "structure-constants"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(config, suite_args);
    if (spectrum->parsed())
      return run_spectrum(config, cutoff, field_gauss, mass_gram, charge_esu);
    if (dump->parsed()) return run_dump(config, dump_object);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
