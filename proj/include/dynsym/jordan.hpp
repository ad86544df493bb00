#pragma once

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "dynsym/matrix.hpp"
#include "dynsym/rational.hpp"
#include "dynsym/report.hpp"

namespace dynsym {

using JordanVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Spin factor over a diagonal Minkowski metric: elements are coordinate
// vectors against the hermitian 2x2 basis (identity plus Pauli matrices for
// the complex factor; the sigma_2-free subset for the real one).
struct SpinFactor {
  int dim = 0;
  std::vector<int> metric;
};

SpinFactor complex_spin_factor();
SpinFactor real_spin_factor();

const std::vector<Matrix>& basis_matrices(const SpinFactor& algebra);

Matrix to_matrix(const SpinFactor& algebra, const JordanVector& x);
JordanVector from_matrix(const SpinFactor& algebra, const Matrix& m);

JordanVector jordan_product(const SpinFactor& algebra, const JordanVector& x,
                            const JordanVector& y);
JordanVector triple_product(const SpinFactor& algebra, const JordanVector& a,
                            const JordanVector& b, const JordanVector& c);

Rational minkowski_norm(const SpinFactor& algebra, const JordanVector& x);

JordanVector project_real(const JordanVector& x);

Rational sigma_coefficient(const SpinFactor& algebra, int alpha, int beta,
                           int gamma, int rho);

JordanVector random_jordan_vector(const SpinFactor& algebra,
                                  std::mt19937& rng);

bool jordan_equal(const JordanVector& a, const JordanVector& b);

std::vector<CheckRecord> jordan_checks(const SuiteConfig& config);

}  // namespace dynsym
