#include "dynsym/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace dynsym {

namespace {

using Complex = std::complex<double>;
using Triplet = Eigen::Triplet<Complex>;

long long checked_pow(int base, int exp) {
  long long result = 1;
  for (int k = 0; k < exp; ++k) {
    result *= base;
    if (result > 2'000'000) throw std::overflow_error("Fock dimension too large");
  }
  return result;
}

}  // namespace

FockBasis::FockBasis(int modes, int cutoff) : modes_(modes), cutoff_(cutoff) {
  if (modes < 1 || modes > 6) throw std::invalid_argument("mode count out of range");
  if (cutoff < 1) throw std::invalid_argument("cutoff must be positive");
  dimension_ = static_cast<int>(checked_pow(cutoff + 1, modes));
}

std::vector<int> FockBasis::occupation(int index) const {
  if (index < 0 || index >= dimension_) throw std::out_of_range("basis index");
  std::vector<int> occ(modes_, 0);
  for (int k = modes_ - 1; k >= 0; --k) {
    occ[k] = index % (cutoff_ + 1);
    index /= (cutoff_ + 1);
  }
  return occ;
}

int FockBasis::index(const std::vector<int>& occupation) const {
  if (static_cast<int>(occupation.size()) != modes_)
    throw std::invalid_argument("occupation arity mismatch");
  int idx = 0;
  for (int k = 0; k < modes_; ++k) {
    if (occupation[k] < 0 || occupation[k] > cutoff_)
      throw std::out_of_range("occupation number");
    idx = idx * (cutoff_ + 1) + occupation[k];
  }
  return idx;
}

int FockBasis::total_quanta(int index) const {
  auto occ = occupation(index);
  int total = 0;
  for (int n : occ) total += n;
  return total;
}

FockOperator ladder_raise(const FockBasis& basis, int mode) {
  if (mode < 0 || mode >= basis.modes()) throw std::out_of_range("mode index");
  std::vector<Triplet> entries;
  for (int j = 0; j < basis.dimension(); ++j) {
    auto occ = basis.occupation(j);
    if (occ[mode] >= basis.cutoff()) continue;
    double amp = std::sqrt(static_cast<double>(occ[mode] + 1));
    occ[mode] += 1;
    entries.emplace_back(basis.index(occ), j, Complex(amp, 0.0));
  }
  FockOperator op(basis.dimension(), basis.dimension());
  op.setFromTriplets(entries.begin(), entries.end());
  return op;
}

FockOperator ladder_lower(const FockBasis& basis, int mode) {
  if (mode < 0 || mode >= basis.modes()) throw std::out_of_range("mode index");
  std::vector<Triplet> entries;
  for (int j = 0; j < basis.dimension(); ++j) {
    auto occ = basis.occupation(j);
    if (occ[mode] == 0) continue;
    double amp = std::sqrt(static_cast<double>(occ[mode]));
    occ[mode] -= 1;
    entries.emplace_back(basis.index(occ), j, Complex(amp, 0.0));
  }
  FockOperator op(basis.dimension(), basis.dimension());
  op.setFromTriplets(entries.begin(), entries.end());
  return op;
}

FockOperator fock_identity(const FockBasis& basis) {
  FockOperator op(basis.dimension(), basis.dimension());
  op.setIdentity();
  return op;
}

FockDictionary oscillator_dictionary(const FockBasis& basis,
                                     const AlgebraSignature& signature) {
  const int n = static_cast<int>(signature.position_names.size());
  if (basis.modes() != n) throw std::invalid_argument("mode count mismatch");

  FockDictionary dict{basis, {}, {}};
  const Complex inv_sqrt2(1.0 / std::sqrt(2.0), 0.0);

  if (signature.position_names == std::vector<std::string>{"z", "zb"}) {
    FockOperator ap = ladder_raise(basis, 0), am = ladder_lower(basis, 0);
    FockOperator bp = ladder_raise(basis, 1), bm = ladder_lower(basis, 1);
    dict.position_images = {FockOperator(inv_sqrt2 * (am + bp)),
                            FockOperator(inv_sqrt2 * (ap + bm))};
    dict.derivative_images = {FockOperator(inv_sqrt2 * (bm - ap)),
                              FockOperator(inv_sqrt2 * (am - bp))};
    return dict;
  }

  if (signature.position_names == std::vector<std::string>{"xi", "eta"}) {
    for (int k = 0; k < 2; ++k) {
      FockOperator up = ladder_raise(basis, k), down = ladder_lower(basis, k);
      dict.position_images.push_back(FockOperator(inv_sqrt2 * (up + down)));
      dict.derivative_images.push_back(FockOperator(inv_sqrt2 * (down - up)));
    }
    return dict;
  }

  for (int k = 0; k < n; ++k) {
    dict.position_images.push_back(ladder_raise(basis, k));
    dict.derivative_images.push_back(ladder_lower(basis, k));
  }
  return dict;
}

FockOperator realize(const WeylElement& element, const FockDictionary& dict) {
  const auto& sig = element.signature();
  const int n = static_cast<int>(sig.position_names.size());
  if (static_cast<int>(dict.position_images.size()) != n ||
      static_cast<int>(dict.derivative_images.size()) != n)
    throw std::invalid_argument("dictionary arity mismatch");

  FockOperator total(dict.basis.dimension(), dict.basis.dimension());
  for (const auto& [mono, coeff] : element.terms()) {
    if (mono.eps != 0 || mono.m != 0)
      throw std::invalid_argument("radial factors have no Fock realization");
    FockOperator term = fock_identity(dict.basis);
    for (int k = 0; k < n; ++k)
      for (int p = 0; p < mono.alpha[k]; ++p)
        term = FockOperator(term * dict.position_images[k]);
    for (int k = 0; k < n; ++k)
      for (int p = 0; p < mono.beta[k]; ++p)
        term = FockOperator(term * dict.derivative_images[k]);
    total += FockOperator(coeff.to_complex() * term);
  }
  return total;
}

Eigen::MatrixXcd interior_block(const FockOperator& op, const FockBasis& basis,
                                int margin) {
  std::vector<int> keep;
  for (int j = 0; j < basis.dimension(); ++j)
    if (basis.total_quanta(j) <= basis.cutoff() - margin) keep.push_back(j);
  Eigen::MatrixXcd dense = Eigen::MatrixXcd(op);
  Eigen::MatrixXcd block(keep.size(), keep.size());
  for (size_t r = 0; r < keep.size(); ++r)
    for (size_t c = 0; c < keep.size(); ++c)
      block(r, c) = dense(keep[r], keep[c]);
  return block;
}

double interior_residual(const FockOperator& op, const FockBasis& basis,
                         int margin) {
  Eigen::MatrixXcd block = interior_block(op, basis, margin);
  double worst = 0.0;
  for (Eigen::Index r = 0; r < block.rows(); ++r)
    for (Eigen::Index c = 0; c < block.cols(); ++c)
      worst = std::max(worst, std::abs(block(r, c)));
  return worst;
}

std::vector<double> hermitian_spectrum(const FockOperator& op) {
  Eigen::MatrixXcd dense = Eigen::MatrixXcd(op);
  for (Eigen::Index r = 0; r < dense.rows(); ++r)
    for (Eigen::Index c = 0; c < dense.cols(); ++c)
      if (!std::isfinite(dense(r, c).real()) || !std::isfinite(dense(r, c).imag()))
        throw std::invalid_argument("non-finite matrix entry");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed");
  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + dense.rows());
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<SpectrumLevel> cluster_spectrum(const std::vector<double>& values,
                                            double tolerance) {
  std::vector<SpectrumLevel> levels;
  for (double v : values) {
    if (!levels.empty() && std::abs(v - levels.back().value) <= tolerance) {
      ++levels.back().multiplicity;
    } else {
      levels.push_back({v, 1});
    }
  }
  return levels;
}

}  // namespace dynsym
