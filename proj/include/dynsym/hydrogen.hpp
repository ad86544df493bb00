#pragma once

#include <vector>

#include "dynsym/lie.hpp"
#include "dynsym/report.hpp"
#include "dynsym/weyl.hpp"

namespace dynsym {

// Fifteen radially-weighted differential operators on three coordinates that
// assemble into an antisymmetric generator family over the index set
// {-1, 0, 1, 2, 3, 5} with metric (+, +, -, -, -, -).
struct HydrogenGenerators {
  AlgebraSignature signature;
  std::vector<WeylElement> L;
  std::vector<WeylElement> Gamma;
  WeylElement D;
  WeylElement B0;
  WeylElement A0;
  std::vector<WeylElement> B;
  std::vector<WeylElement> A;

  LieFamily<WeylElement> family() const;

  // Subfamily over {-1, 0, 1, 2, 5}: every generator whose index pair avoids
  // the third spatial direction.
  LieFamily<WeylElement> planar_family() const;
};

HydrogenGenerators hydrogen_generators();

std::vector<CheckRecord> hydrogen_checks(const SuiteConfig& config);

}  // namespace dynsym
