#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "dynsym/weyl.hpp"

namespace dynsym {

using FockOperator = Eigen::SparseMatrix<std::complex<double>>;

class FockBasis {
 public:
  FockBasis(int modes, int cutoff);

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  int dimension() const { return dimension_; }

  std::vector<int> occupation(int index) const;
  int index(const std::vector<int>& occupation) const;
  int total_quanta(int index) const;

 private:
  int modes_;
  int cutoff_;
  int dimension_;
};

FockOperator ladder_raise(const FockBasis& basis, int mode);
FockOperator ladder_lower(const FockBasis& basis, int mode);
FockOperator fock_identity(const FockBasis& basis);

struct FockDictionary {
  FockBasis basis;
  std::vector<FockOperator> position_images;
  std::vector<FockOperator> derivative_images;
};

FockDictionary oscillator_dictionary(const FockBasis& basis,
                                     const AlgebraSignature& signature);

FockOperator realize(const WeylElement& element, const FockDictionary& dict);

Eigen::MatrixXcd interior_block(const FockOperator& op, const FockBasis& basis,
                                int margin = 2);

double interior_residual(const FockOperator& op, const FockBasis& basis,
                         int margin = 2);

std::vector<double> hermitian_spectrum(const FockOperator& op);

struct SpectrumLevel {
  double value = 0.0;
  int multiplicity = 0;
};

std::vector<SpectrumLevel> cluster_spectrum(const std::vector<double>& values,
                                            double tolerance = 1e-8);

}  // namespace dynsym
