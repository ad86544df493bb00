#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dynsym/fock.hpp"
#include "dynsym/landau.hpp"

using namespace dynsym;

namespace {

double max_abs_diff(const FockOperator& a, const FockOperator& b) {
  FockOperator d = FockOperator(a - b);
  double worst = 0.0;
  for (int k = 0; k < d.outerSize(); ++k)
    for (FockOperator::InnerIterator it(d, k); it; ++it)
      worst = std::max(worst, std::abs(it.value()));
  return worst;
}

}  // namespace

TEST_CASE("basis enumeration round-trips") {
  const FockBasis basis(3, 4);
  CHECK(basis.dimension() == 125);
  for (int j = 0; j < basis.dimension(); ++j)
    CHECK(basis.index(basis.occupation(j)) == j);
  CHECK(basis.occupation(0) == std::vector<int>{0, 0, 0});
  CHECK(basis.total_quanta(basis.dimension() - 1) == 12);
  CHECK_THROWS_AS(FockBasis(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(FockBasis(6, 100), std::overflow_error);
}

TEST_CASE("ladder matrix elements carry square-root amplitudes") {
  const FockBasis basis(1, 5);
  const FockOperator up = ladder_raise(basis, 0);
  const FockOperator down = ladder_lower(basis, 0);
  const Eigen::MatrixXcd u = Eigen::MatrixXcd(up);
  CHECK(std::abs(u(3, 2) - std::sqrt(3.0)) < 1e-14);
  CHECK(max_abs_diff(down, FockOperator(up.adjoint())) < 1e-14);
  const FockOperator number = FockOperator(up * down);
  for (int n = 0; n <= 5; ++n)
    CHECK(std::abs(Eigen::MatrixXcd(number)(n, n).real() - n) < 1e-14);
}

TEST_CASE("canonical commutator holds away from the truncation edge") {
  const FockBasis basis(2, 8);
  const auto sig = holomorphic_signature();
  const auto dict = oscillator_dictionary(basis, sig);
  const WeylElement z = WeylElement::position(sig, 0);
  const WeylElement dz = WeylElement::derivative(sig, 0);
  const FockOperator comm = FockOperator(
      realize(dz, dict) * realize(z, dict) -
      realize(z, dict) * realize(dz, dict) - fock_identity(basis));
  CHECK(interior_residual(comm, basis) < 1e-12);
}

TEST_CASE("realization is multiplicative on the safe block") {
  const auto sig = holomorphic_signature();
  const FockBasis basis(2, 10);
  const auto dict = oscillator_dictionary(basis, sig);
  std::mt19937 rng(42);
  for (int trial = 0; trial < 4; ++trial) {
    const WeylElement a = random_polynomial(sig, rng, 2, 3);
    const WeylElement b = random_polynomial(sig, rng, 2, 3);
    const FockOperator lhs = realize(a * b, dict);
    const FockOperator rhs = FockOperator(realize(a, dict) * realize(b, dict));
    CHECK(interior_residual(FockOperator(lhs - rhs), basis, 4) < 1e-9);
  }
}

TEST_CASE("radial elements have no matrix realization") {
  AlgebraSignature sig{{"x1", "x2"}, {"d1", "d2"}, true};
  const FockBasis basis(2, 4);
  FockDictionary dict = oscillator_dictionary(basis, sig);
  CHECK_THROWS_AS(realize(WeylElement::radial(sig), dict),
                  std::invalid_argument);
}

TEST_CASE("four-mode bilinears stay closed under realized brackets") {
  AlgebraSignature sig{{"z1", "z2", "zb1", "zb2"},
                       {"d1", "d2", "db1", "db2"},
                       false};
  const FockBasis basis(4, 6);
  const auto dict = oscillator_dictionary(basis, sig);
  const WeylElement n1 = WeylElement::position(sig, 0) *
                         WeylElement::derivative(sig, 0);
  const WeylElement hop = WeylElement::position(sig, 0) *
                          WeylElement::derivative(sig, 1);
  const FockOperator lhs = realize(commutator(n1, hop), dict);
  const FockOperator a = realize(n1, dict);
  const FockOperator b = realize(hop, dict);
  CHECK(interior_residual(FockOperator(lhs - FockOperator(a * b - b * a)),
                          basis) < 1e-10);
}

TEST_CASE("spectrum clustering groups near-degenerate values") {
  const auto levels = cluster_spectrum({0.5, 0.5 + 1e-12, 1.5, 2.5, 2.5}, 1e-8);
  REQUIRE(levels.size() == 3);
  CHECK(levels[0].multiplicity == 2);
  CHECK(levels[1].multiplicity == 1);
  CHECK(levels[2].multiplicity == 2);
}
