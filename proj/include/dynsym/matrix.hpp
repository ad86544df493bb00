#pragma once

#include <Eigen/Core>

#include "dynsym/rational.hpp"

namespace dynsym {

using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Conjugate transpose for matrices over the exact scalar field.  Eigen's
// adjoint() is unavailable because the field is registered as a real type.
template <typename Derived>
Matrix dagger(const Eigen::MatrixBase<Derived>& m) {
  Matrix out(m.cols(), m.rows());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      out(c, r) = m(r, c).conj();
  return out;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

inline Matrix commutator(const Matrix& a, const Matrix& b) {
  return a * b - b * a;
}

}  // namespace dynsym
