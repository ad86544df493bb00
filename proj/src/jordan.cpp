#include "dynsym/jordan.hpp"

#include <stdexcept>
#include <string>

namespace dynsym {

namespace {

const Scalar kI = Scalar::i();
const Scalar kHalf(Rational(1, 2));

Matrix pauli_matrix(int k) {
  Matrix m(2, 2);
  const Scalar z(0), u(1);
  switch (k) {
    case 0:
      m << u, z, z, u;
      break;
    case 1:
      m << z, u, u, z;
      break;
    case 2:
      m << z, -kI, kI, z;
      break;
    default:
      m << u, z, z, -u;
      break;
  }
  return m;
}

Rational rational_part(const Scalar& s) {
  if (!s.is_rational()) throw std::invalid_argument("non-rational coordinate");
  return s.rat_part().re();
}

JordanVector basis_unit(const SpinFactor& algebra, int k) {
  JordanVector e = JordanVector::Zero(algebra.dim);
  e(k) = Rational(1);
  return e;
}

void check_dim(const SpinFactor& algebra, const JordanVector& x) {
  if (x.size() != algebra.dim)
    throw std::invalid_argument("coordinate arity mismatch");
}

}  // namespace

SpinFactor complex_spin_factor() { return {4, {1, -1, -1, -1}}; }

SpinFactor real_spin_factor() { return {3, {1, -1, -1}}; }

const std::vector<Matrix>& basis_matrices(const SpinFactor& algebra) {
  static const std::vector<Matrix> complex_basis = {
      pauli_matrix(0), pauli_matrix(1), pauli_matrix(2), pauli_matrix(3)};
  static const std::vector<Matrix> real_basis = {
      pauli_matrix(0), pauli_matrix(1), pauli_matrix(3)};
  if (algebra.dim == 4) return complex_basis;
  if (algebra.dim == 3) return real_basis;
  throw std::invalid_argument("unsupported spin factor dimension");
}

Matrix to_matrix(const SpinFactor& algebra, const JordanVector& x) {
  check_dim(algebra, x);
  const auto& basis = basis_matrices(algebra);
  Matrix m = Matrix::Zero(2, 2);
  for (int k = 0; k < algebra.dim; ++k) m = m + Scalar(x(k)) * basis[k];
  return m;
}

JordanVector from_matrix(const SpinFactor& algebra, const Matrix& m) {
  if (m.rows() != 2 || m.cols() != 2)
    throw std::invalid_argument("expected a 2x2 matrix");
  const Scalar x0 = kHalf * (m(0, 0) + m(1, 1));
  const Scalar x3 = kHalf * (m(0, 0) - m(1, 1));
  const Scalar x1 = kHalf * (m(0, 1) + m(1, 0));
  const Scalar x2 = kHalf * kI * (m(0, 1) - m(1, 0));
  JordanVector out = JordanVector::Zero(algebra.dim);
  if (algebra.dim == 4) {
    out(0) = rational_part(x0);
    out(1) = rational_part(x1);
    out(2) = rational_part(x2);
    out(3) = rational_part(x3);
  } else {
    if (!x2.is_zero())
      throw std::invalid_argument("matrix leaves the real spin factor");
    out(0) = rational_part(x0);
    out(1) = rational_part(x1);
    out(2) = rational_part(x3);
  }
  return out;
}

JordanVector jordan_product(const SpinFactor& algebra, const JordanVector& x,
                            const JordanVector& y) {
  const Matrix a = to_matrix(algebra, x);
  const Matrix b = to_matrix(algebra, y);
  return from_matrix(algebra, Matrix(kHalf * (a * b + b * a)));
}

JordanVector triple_product(const SpinFactor& algebra, const JordanVector& a,
                            const JordanVector& b, const JordanVector& c) {
  const JordanVector bc = jordan_product(algebra, b, c);
  const JordanVector ac = jordan_product(algebra, a, c);
  const JordanVector ab = jordan_product(algebra, a, b);
  JordanVector out = jordan_product(algebra, a, bc);
  out -= jordan_product(algebra, b, ac);
  out += jordan_product(algebra, ab, c);
  return out;
}

Rational minkowski_norm(const SpinFactor& algebra, const JordanVector& x) {
  check_dim(algebra, x);
  Rational norm(0);
  for (int k = 0; k < algebra.dim; ++k)
    norm += Rational(algebra.metric[k]) * x(k) * x(k);
  return norm;
}

JordanVector project_real(const JordanVector& x) {
  if (x.size() != 4)
    throw std::invalid_argument("projection expects four coordinates");
  JordanVector out = JordanVector::Zero(3);
  out(0) = x(0);
  out(1) = x(1);
  out(2) = x(3);
  return out;
}

Rational sigma_coefficient(const SpinFactor& algebra, int alpha, int beta,
                           int gamma, int rho) {
  const auto in_range = [&](int k) { return k >= 0 && k < algebra.dim; };
  if (!in_range(alpha) || !in_range(beta) || !in_range(gamma) ||
      !in_range(rho))
    throw std::out_of_range("basis index");
  Rational value(0);
  if (rho == gamma && beta == alpha) value += Rational(1);
  if (rho == alpha && beta == gamma) value += Rational(1);
  if (beta == rho && alpha == gamma)
    value -= Rational(algebra.metric[beta]) * Rational(algebra.metric[alpha]);
  return value;
}

JordanVector random_jordan_vector(const SpinFactor& algebra,
                                  std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-5, 5);
  JordanVector out = JordanVector::Zero(algebra.dim);
  for (int k = 0; k < algebra.dim; ++k) out(k) = Rational(dist(rng));
  return out;
}

bool jordan_equal(const JordanVector& a, const JordanVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index k = 0; k < a.size(); ++k)
    if (a(k) != b(k)) return false;
  return true;
}

std::vector<CheckRecord> jordan_checks(const SuiteConfig& config) {
  std::vector<CheckRecord> out;
  const SpinFactor factors[] = {complex_spin_factor(), real_spin_factor()};
  const std::string names[] = {"complex", "real"};

  for (int f = 0; f < 2; ++f) {
    const auto& algebra = factors[f];
    std::mt19937 rng(config.seed);

    bool commutes = true;
    bool jordan_identity = true;
    bool norm_det = true;
    bool norm_square = true;
    for (int t = 0; t < config.trials; ++t) {
      const JordanVector x = random_jordan_vector(algebra, rng);
      const JordanVector y = random_jordan_vector(algebra, rng);
      commutes = commutes && jordan_equal(jordan_product(algebra, x, y),
                                          jordan_product(algebra, y, x));
      const JordanVector xx = jordan_product(algebra, x, x);
      jordan_identity =
          jordan_identity &&
          jordan_equal(
              jordan_product(algebra, jordan_product(algebra, x, y), xx),
              jordan_product(algebra, x, jordan_product(algebra, y, xx)));
      const Matrix m = to_matrix(algebra, x);
      const Scalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
      norm_det = norm_det && det == Scalar(minkowski_norm(algebra, x));
      norm_square =
          norm_square && minkowski_norm(algebra, xx) ==
                             minkowski_norm(algebra, x) *
                                 minkowski_norm(algebra, x);
    }
    out.push_back(exact_check("jordan-commutes-" + names[f],
                              "x o y = y o x on " +
                                  std::to_string(config.trials) +
                                  " random integer tuples",
                              commutes));
    out.push_back(exact_check("jordan-identity-" + names[f],
                              "(x o y) o x^2 = x o (y o x^2) on " +
                                  std::to_string(config.trials) +
                                  " random integer tuples",
                              jordan_identity));
    out.push_back(exact_check("jordan-norm-det-" + names[f],
                              "quadratic norm equals the matrix determinant",
                              norm_det));
    out.push_back(exact_check("jordan-norm-square-" + names[f],
                              "N(x o x) = N(x)^2", norm_square));

    std::mt19937 rng5(config.seed);
    bool five_term = true;
    for (int t = 0; t < config.trials; ++t) {
      const JordanVector a = random_jordan_vector(algebra, rng5);
      const JordanVector b = random_jordan_vector(algebra, rng5);
      const JordanVector c = random_jordan_vector(algebra, rng5);
      const JordanVector d = random_jordan_vector(algebra, rng5);
      const JordanVector x = random_jordan_vector(algebra, rng5);
      const JordanVector lhs =
          triple_product(algebra, a, b, triple_product(algebra, c, d, x)) -
          triple_product(algebra, c, d, triple_product(algebra, a, b, x));
      const JordanVector rhs =
          triple_product(algebra, a, triple_product(algebra, d, c, b), x) -
          triple_product(algebra, triple_product(algebra, c, d, a), b, x);
      five_term = five_term && jordan_equal(lhs, rhs);
    }
    out.push_back(exact_check(
        "jordan-five-term-" + names[f],
        "[L(a,b), L(c,d)] = L(a(dcb), x) - L((cda), b) as triple-product "
        "operators on " +
            std::to_string(config.trials) + " random integer tuples",
        five_term));

    bool sigma_matches = true;
    int combos = 0;
    for (int alpha = 0; alpha < algebra.dim; ++alpha)
      for (int beta = 0; beta < algebra.dim; ++beta)
        for (int gamma = 0; gamma < algebra.dim; ++gamma) {
          const JordanVector triple = triple_product(
              algebra, basis_unit(algebra, alpha), basis_unit(algebra, beta),
              basis_unit(algebra, gamma));
          for (int rho = 0; rho < algebra.dim; ++rho) {
            ++combos;
            sigma_matches =
                sigma_matches &&
                triple(rho) == sigma_coefficient(algebra, alpha, beta, gamma,
                                                 rho);
          }
        }
    out.push_back(exact_check(
        "jordan-sigma-" + names[f],
        "basis triple products match the closed-form coefficients over " +
            std::to_string(combos) + " index combinations",
        sigma_matches));
  }

  const auto c4 = complex_spin_factor();
  const auto r3 = real_spin_factor();
  const int free_index[] = {0, 1, 3};
  bool projection_commutes = true;
  for (int a : free_index)
    for (int b : free_index)
      for (int c : free_index) {
        const JordanVector full = triple_product(
            c4, basis_unit(c4, a), basis_unit(c4, b), basis_unit(c4, c));
        const JordanVector reduced = triple_product(
            r3, project_real(basis_unit(c4, a)),
            project_real(basis_unit(c4, b)), project_real(basis_unit(c4, c)));
        projection_commutes =
            projection_commutes && jordan_equal(project_real(full), reduced);
      }
  out.push_back(exact_check(
      "jordan-projection-triple",
      "dropping the sigma_2 coordinate commutes with the triple product on "
      "all 27 surviving basis triples",
      projection_commutes));

  return out;
}

}  // namespace dynsym
