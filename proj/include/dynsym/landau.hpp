#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dynsym/fock.hpp"
#include "dynsym/lie.hpp"
#include "dynsym/report.hpp"
#include "dynsym/weyl.hpp"

namespace dynsym {

struct LandauFrame {
  double omega = 1.0;
  double magnetic_length = 0.0;

  static LandauFrame from_omega(double omega);
  static LandauFrame from_gaussian(double field_gauss, double mass_gram,
                                   double charge_esu);
};

enum class Presentation { phase, holomorphic, oscillator, spinorial, cartesian };

std::string presentation_name(Presentation p);
std::optional<Presentation> presentation_from_name(const std::string& name);

AlgebraSignature phase_signature();
AlgebraSignature holomorphic_signature();
AlgebraSignature oscillator_signature();

struct PhaseOperators {
  WeylElement P_x, P_y, X, Y, H, L_z;
};

PhaseOperators build_phase_operators();

struct Oscillators {
  WeylElement a_plus, a_minus, b_plus, b_minus;
};

Oscillators build_oscillators();

struct DiracGenerators {
  Presentation presentation;
  AlgebraSignature signature;
  WeylElement m12, m23, m31, m1m1, m2m1, m3m1, m01, m02, m03, mm10;

  LieFamily<WeylElement> family() const;
  WeylElement stored(int a, int b) const;
};

DiracGenerators dirac_generators(Presentation p);

GeneratorMap holomorphic_to_phase_map();
GeneratorMap oscillator_to_holomorphic_map();
GeneratorMap landau_gauge_map();

WeylElement landau_gauge_hamiltonian();

DiracGenerators map_to_phase(const DiracGenerators& g);

struct WeylSpinor {
  std::array<WeylElement, 2> chi;
  std::array<WeylElement, 2> chi_star;
};

WeylSpinor weyl_spinor();

std::vector<CheckRecord> verify_so23(const DiracGenerators& g);
std::vector<CheckRecord> cross_presentation_check();
std::vector<CheckRecord> hamiltonian_identities(const SuiteConfig& config);

std::vector<SpectrumLevel> landau_spectrum(int cutoff);

std::string oscillator_adjoint_summary();

}  // namespace dynsym
