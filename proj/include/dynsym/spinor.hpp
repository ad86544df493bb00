#pragma once

#include <vector>

#include "dynsym/lie.hpp"
#include "dynsym/matrix.hpp"
#include "dynsym/report.hpp"
#include "dynsym/weyl.hpp"

namespace dynsym {

// Dirac-basis gamma matrices with mostly-minus metric, the chirality product
// gamma5 = gamma0 gamma1 gamma2 gamma3, and the charge conjugation matrix
// C = i gamma0 gamma2.
struct GammaBasis {
  std::vector<Matrix> gamma;
  Matrix gamma5;
  Matrix beta;
  Matrix charge_conjugation;
};

GammaBasis gamma_basis();

// Spin generator over the extended index set {-1, 0, 1, 2, 3, 5}:
// (i/4)[gamma^A, gamma^B] between vector indices, -(1/2) gamma^B against
// index -1, and gamma5 standing in for index 5.
Matrix sigma_generator(const GammaBasis& basis, int A, int B);
LieFamily<Matrix> sigma_family(const GammaBasis& basis);

// Four-component spinor whose entries are ladder operators acting on two
// holomorphic and two antiholomorphic modes; psi_bar is its bracket dual,
// [psi^a, psi_bar_b] = delta^a_b.
struct LadderSpinor {
  AlgebraSignature signature;
  std::vector<WeylElement> psi;
  std::vector<WeylElement> psi_bar;
};

LadderSpinor ladder_spinor();

// Two-mode reduction: the four components collapse onto a single pair of
// oscillator towers, realizing the spinor on half as many modes.
LadderSpinor majorana_spinor();

WeylElement spinor_bilinear(const LadderSpinor& spinor, const Matrix& m);
WeylElement casimir_bilinear(const LadderSpinor& spinor);
LieFamily<WeylElement> bilinear_family(const LadderSpinor& spinor,
                                       const GammaBasis& basis);

std::vector<CheckRecord> gamma_checks();
std::vector<CheckRecord> ladder_representation_checks(const SuiteConfig& config);
std::vector<CheckRecord> majorana_checks();

std::vector<CheckRecord> spinor_checks(const SuiteConfig& config);

}  // namespace dynsym
