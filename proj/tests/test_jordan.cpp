#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynsym/jordan.hpp"

using namespace dynsym;

namespace {

JordanVector unit(const SpinFactor& algebra, int k) {
  JordanVector e = JordanVector::Zero(algebra.dim);
  e(k) = Rational(1);
  return e;
}

}  // namespace

TEST_CASE("matrix form round-trips the coordinates") {
  const auto c4 = complex_spin_factor();
  JordanVector x(4);
  x << Rational(2), Rational(-1), Rational(3, 2), Rational(5);
  CHECK(jordan_equal(from_matrix(c4, to_matrix(c4, x)), x));

  const auto r3 = real_spin_factor();
  JordanVector y(3);
  y << Rational(1), Rational(4), Rational(-2);
  CHECK(jordan_equal(from_matrix(r3, to_matrix(r3, y)), y));
}

TEST_CASE("matrices outside the factor are rejected") {
  const auto c4 = complex_spin_factor();
  Matrix m(2, 2);
  m << Scalar::sqrt2(), Scalar(0), Scalar(0), Scalar(0);
  CHECK_THROWS_AS(from_matrix(c4, m), std::invalid_argument);

  const auto r3 = real_spin_factor();
  JordanVector x(4);
  x << Rational(0), Rational(0), Rational(1), Rational(0);
  CHECK_THROWS_AS(from_matrix(r3, to_matrix(complex_spin_factor(), x)),
                  std::invalid_argument);
}

TEST_CASE("identity element is neutral") {
  const auto c4 = complex_spin_factor();
  std::mt19937 rng(7);
  const JordanVector x = random_jordan_vector(c4, rng);
  CHECK(jordan_equal(jordan_product(c4, unit(c4, 0), x), x));
}

TEST_CASE("basis triple products match the published examples") {
  const auto c4 = complex_spin_factor();
  const JordanVector t113 =
      triple_product(c4, unit(c4, 1), unit(c4, 1), unit(c4, 3));
  CHECK(jordan_equal(t113, unit(c4, 3)));
  const JordanVector t131 =
      triple_product(c4, unit(c4, 1), unit(c4, 3), unit(c4, 1));
  JordanVector minus_e3 = unit(c4, 3);
  minus_e3(3) = Rational(-1);
  CHECK(jordan_equal(t131, minus_e3));
}

TEST_CASE("closed-form coefficients agree with the spot values") {
  const auto c4 = complex_spin_factor();
  CHECK(sigma_coefficient(c4, 1, 1, 3, 3) == Rational(1));
  CHECK(sigma_coefficient(c4, 1, 3, 1, 3) == Rational(-1));
  CHECK(sigma_coefficient(c4, 0, 0, 0, 0) == Rational(1));
  CHECK_THROWS_AS(sigma_coefficient(c4, 4, 0, 0, 0), std::out_of_range);
}

TEST_CASE("norm is the determinant") {
  const auto c4 = complex_spin_factor();
  JordanVector x(4);
  x << Rational(3), Rational(1), Rational(-2), Rational(2);
  CHECK(minkowski_norm(c4, x) == Rational(9 - 1 - 4 - 4));
}

TEST_CASE("jordan suite passes end to end") {
  SuiteConfig config;
  const auto records = jordan_checks(config);
  CHECK(records.size() == 13);
  for (const auto& r : records) {
    CAPTURE(r.id);
    CHECK(r.status == CheckStatus::pass);
  }
}
