#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <stdexcept>

#include "dynsym/matrix.hpp"
#include "dynsym/rational.hpp"

using dynsym::GaussianRational;
using dynsym::Matrix;
using dynsym::Rational;
using dynsym::Scalar;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(1, 2).den() == 2);
  CHECK(Rational(-5).str() == "-5");
  CHECK(Rational(-1, 3).str() == "-1/3");
}

TEST_CASE("rational field arithmetic") {
  const Rational a(1, 6), b(1, 10);
  CHECK(a + b == Rational(4, 15));
  CHECK(a - b == Rational(1, 15));
  CHECK(a * b == Rational(1, 60));
  CHECK(a / b == Rational(5, 3));
  CHECK(a < b + Rational(1));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational overflow is detected, not wrapped") {
  const Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_NOTHROW(big + big);
  CHECK_THROWS_AS((big + big) * Rational(2), std::overflow_error);
}

TEST_CASE("gaussian rational arithmetic and inverse") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  const GaussianRational z(Rational(1, 2), Rational(-3, 4));
  const GaussianRational w(Rational(2), Rational(5));
  CHECK(z * w == GaussianRational(Rational(1) + Rational(15, 4),
                                  Rational(5, 2) - Rational(3, 2)));
  CHECK(z / z == GaussianRational(1));
  CHECK((z / w) * w == z);
  CHECK(z.conj() == GaussianRational(Rational(1, 2), Rational(3, 4)));
}

TEST_CASE("sqrt2 extension is a field") {
  const Scalar s2 = Scalar::sqrt2();
  CHECK(s2 * s2 == Scalar(2));
  CHECK(Scalar::inv_sqrt2() * s2 == Scalar(1));
  const Scalar x{GaussianRational(Rational(1), Rational(2)),
                 GaussianRational(Rational(-1, 3), Rational(1))};
  const Scalar y{GaussianRational(Rational(2, 5)), GaussianRational(Rational(7))};
  CHECK((x / y) * y == x);
  CHECK(x - x == Scalar(0));
  CHECK((x * y) / x == y);
  CHECK_THROWS_AS(x / Scalar(0), std::domain_error);
}

TEST_CASE("scalar conjugation fixes sqrt2 and flips i") {
  const Scalar z = Scalar::i() * Scalar::sqrt2() + Scalar(3);
  CHECK(z.conj() == Scalar(3) - Scalar::i() * Scalar::sqrt2());
  CHECK((z * z.conj()).conj() == z * z.conj());
}

TEST_CASE("numeric embedding") {
  const Scalar z = Scalar(Rational(1, 2)) + Scalar::i() * Scalar::sqrt2();
  const std::complex<double> c = z.to_complex();
  CHECK(c.real() == doctest::Approx(0.5));
  CHECK(c.imag() == doctest::Approx(1.4142135623730951));
}

TEST_CASE("exact matrices over the scalar field") {
  Matrix a(2, 2);
  a << Scalar(1), Scalar::i(), Scalar(0), Scalar(2);
  Matrix b(2, 2);
  b << Scalar(0), Scalar(1), Scalar(1), Scalar(0);
  const Matrix c = a * b;
  CHECK(c(0, 0) == Scalar::i());
  CHECK(c(0, 1) == Scalar(1));
  const Matrix d = dynsym::dagger(a);
  CHECK(d(1, 0) == -Scalar::i());
  CHECK(dynsym::is_zero(a - a));
  CHECK(!dynsym::is_zero(dynsym::commutator(a, b)));
}
