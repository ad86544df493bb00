#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "dynsym/weyl.hpp"

using namespace dynsym;

namespace {

AlgebraSignature holo1() { return {{"z"}, {"dz"}, false}; }
AlgebraSignature holo2() { return {{"z", "zb"}, {"dz", "dzb"}, false}; }
AlgebraSignature phase2() { return {{"xi", "eta"}, {"dxi", "deta"}, false}; }
AlgebraSignature radial3() {
  return {{"x1", "x2", "x3"}, {"d1", "d2", "d3"}, true};
}

WeylElement X(const AlgebraSignature& s, int i) {
  return WeylElement::position(s, i);
}
WeylElement Dv(const AlgebraSignature& s, int i) {
  return WeylElement::derivative(s, i);
}
WeylElement C(const AlgebraSignature& s, std::int64_t v) {
  return WeylElement::constant(s, Scalar(v));
}

}  // namespace

TEST_CASE("normal ordering of the canonical pair") {
  const auto s = holo1();
  const auto z = X(s, 0), d = Dv(s, 0);
  CHECK(d * z == z * d + C(s, 1));
  CHECK(z * z == pow(z, 2));
  CHECK(d * d * z == z * d * d + 2 * d);
  CHECK(commutator(d, z) == C(s, 1));
  CHECK(commutator(z * d, z) == z);
  CHECK(commutator(z * d, d) == -d);
}

TEST_CASE("signature mismatch is rejected") {
  CHECK_THROWS_AS(multiply(X(holo1(), 0), X(phase2(), 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(X(holo1(), 0) + X(phase2(), 0), std::invalid_argument);
}

TEST_CASE("degree bounds") {
  const auto s = holo1();
  const auto z = X(s, 0), d = Dv(s, 0);
  const auto a = z * z * d + 3 * z;
  const auto b = d * d + C(s, 5);
  CHECK(a.degree() == 3);
  CHECK((a * b).degree() <= a.degree() + b.degree());
  CHECK_THROWS_AS(pow(z, 17), std::overflow_error);
}

TEST_CASE("radial reduction rules") {
  const auto s = radial3();
  const auto r = WeylElement::radial(s);
  const auto rinv = WeylElement::inverse_radial(s);
  CHECK(r * r == X(s, 0) * X(s, 0) + X(s, 1) * X(s, 1) + X(s, 2) * X(s, 2));
  CHECK(r * rinv == C(s, 1));
  CHECK(rinv * r == C(s, 1));
  CHECK(rinv * rinv * (r * r) == C(s, 1));

  // [d1, r] = x1 r / (x2), the chain rule for d1 r = x1/r.
  Monomial expected;
  expected.alpha = {1, 0, 0};
  expected.eps = 1;
  expected.m = 1;
  expected.beta = {0, 0, 0};
  WeylElement rhs(s);
  rhs.add_term(expected, Scalar(1));
  CHECK(commutator(Dv(s, 0), r) == rhs);
}

TEST_CASE("radial normal form is canonical and idempotent") {
  const auto s = radial3();
  // x3^2/(x2) enters as a non-normal monomial and is rewritten.
  Monomial raw;
  raw.alpha = {0, 0, 2};
  raw.m = 1;
  raw.beta = {0, 0, 0};
  WeylElement e(s);
  e.add_term(raw, Scalar(1));
  for (const auto& [mono, c] : e.terms()) CHECK(mono.alpha[2] < 2);
  CHECK(radial_reduce(e) == e);

  // (x1^2+x2^2+x3^2)/(x2) collapses to 1.
  const auto x2 = X(s, 0) * X(s, 0) + X(s, 1) * X(s, 1) + X(s, 2) * X(s, 2);
  const auto rinv = WeylElement::inverse_radial(s);
  CHECK(rinv * x2 * rinv == C(s, 1));
}

TEST_CASE("commutator is bilinear and antisymmetric") {
  std::mt19937 rng(42);
  const auto s = holo2();
  for (int trial = 0; trial < 8; ++trial) {
    const auto a = random_polynomial(s, rng, 2, 3);
    const auto b = random_polynomial(s, rng, 2, 3);
    const auto c = random_polynomial(s, rng, 2, 3);
    CHECK(commutator(a, b) == -commutator(b, a));
    CHECK(commutator(a + b, c) == commutator(a, c) + commutator(b, c));
    const Scalar lambda = Scalar(Rational(3, 2)) + Scalar::i();
    CHECK(commutator(lambda * a, b) == lambda * commutator(a, b));
  }
}

TEST_CASE("jacobi identity on random triples") {
  std::mt19937 rng(7);
  const auto s = holo2();
  for (int trial = 0; trial < 32; ++trial) {
    const auto a = random_polynomial(s, rng, 2, 3);
    const auto b = random_polynomial(s, rng, 2, 3);
    const auto c = random_polynomial(s, rng, 2, 3);
    const auto jac = commutator(commutator(a, b), c) +
                     commutator(commutator(b, c), a) +
                     commutator(commutator(c, a), b);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("multiplication is associative on random triples") {
  std::mt19937 rng(11);
  const auto s = holo2();
  for (int trial = 0; trial < 32; ++trial) {
    const auto a = random_polynomial(s, rng, 2, 3);
    const auto b = random_polynomial(s, rng, 2, 3);
    const auto c = random_polynomial(s, rng, 2, 3);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("associativity holds in the radial ring") {
  std::mt19937 rng(13);
  const auto s = radial3();
  const auto r = WeylElement::radial(s);
  const auto rinv = WeylElement::inverse_radial(s);
  for (int trial = 0; trial < 8; ++trial) {
    const auto a = random_polynomial(s, rng, 2, 2) + r;
    const auto b = random_polynomial(s, rng, 2, 2) + rinv;
    const auto c = random_polynomial(s, rng, 1, 2);
    CHECK((a * b) * c == a * (b * c));
    const auto jac = commutator(commutator(a, b), c) +
                     commutator(commutator(b, c), a) +
                     commutator(commutator(c, a), b);
    CHECK(jac.is_zero());
  }
}

namespace {

// z = (xi + i eta)/sqrt2, zb = (xi - i eta)/sqrt2 and the matching derivative
// images, as a generator map into the phase-space signature.
GeneratorMap holo_to_phase() {
  const auto p = phase2();
  const auto xi = X(p, 0), eta = X(p, 1), dxi = Dv(p, 0), deta = Dv(p, 1);
  const Scalar is = Scalar::inv_sqrt2();
  const Scalar i = Scalar::i();
  GeneratorMap map;
  map.target = p;
  map.position_images = {is * (xi + i * eta), is * (xi - i * eta)};
  map.derivative_images = {is * (dxi - i * deta), is * (dxi + i * deta)};
  return map;
}

}  // namespace

TEST_CASE("substitute rejects non-canonical maps") {
  const auto h = holo2();
  const auto p = phase2();
  GeneratorMap bad;
  bad.target = p;
  // Missing sqrt2 normalization: [image dz, image z] = 2, not 1.
  bad.position_images = {X(p, 0) + Scalar::i() * X(p, 1),
                         X(p, 0) - Scalar::i() * X(p, 1)};
  bad.derivative_images = {Dv(p, 0) - Scalar::i() * Dv(p, 1),
                           Dv(p, 0) + Scalar::i() * Dv(p, 1)};
  CHECK_THROWS_AS(substitute(X(h, 0), bad), std::invalid_argument);
}

TEST_CASE("substitute through the holomorphic chart") {
  const auto h = holo2();
  const auto p = phase2();
  const auto map = holo_to_phase();
  CHECK(is_canonical(h, map));

  // (1/2)(z dz - zb dzb) becomes (1/2)(xi p_eta - eta p_xi) with p = -i d.
  const Scalar half(Rational(1, 2));
  const auto lhs = half * (X(h, 0) * Dv(h, 0) - X(h, 1) * Dv(h, 1));
  const Scalar mi = -Scalar::i();
  const auto p_xi = mi * Dv(p, 0), p_eta = mi * Dv(p, 1);
  const auto rhs = half * (X(p, 0) * p_eta - X(p, 1) * p_xi);
  CHECK(substitute(lhs, map) == rhs);

  // The identity map changes nothing.
  GeneratorMap ident;
  ident.target = h;
  ident.position_images = {X(h, 0), X(h, 1)};
  ident.derivative_images = {Dv(h, 0), Dv(h, 1)};
  const auto e = X(h, 0) * Dv(h, 1) + 5 * Dv(h, 0);
  CHECK(substitute(e, ident) == e);
}

TEST_CASE("substitute is an algebra homomorphism") {
  std::mt19937 rng(29);
  const auto h = holo2();
  const auto map = holo_to_phase();
  for (int trial = 0; trial < 8; ++trial) {
    const auto a = random_polynomial(h, rng, 2, 3);
    const auto b = random_polynomial(h, rng, 2, 3);
    CHECK(substitute(a * b, map) == substitute(a, map) * substitute(b, map));
    CHECK(substitute(a + b, map) == substitute(a, map) + substitute(b, map));
  }
}

TEST_CASE("apply treats elements as operators on polynomials") {
  const auto s = holo2();
  const auto z = X(s, 0), zb = X(s, 1), dz = Dv(s, 0), dzb = Dv(s, 1);
  const auto euler = z * dz + zb * dzb;
  const auto poly = z * z * zb;
  CHECK(apply(euler, poly) == 3 * poly);
  CHECK(apply(dz, C(s, 1)).is_zero());
  CHECK(apply(dz * dz, z * z) == C(s, 2));
  CHECK_THROWS_AS(apply(z, dz), std::invalid_argument);
}

TEST_CASE("adjoint conjugates coefficients and reverses order") {
  const auto s = holo2();
  const auto z = X(s, 0), zb = X(s, 1), dz = Dv(s, 0), dzb = Dv(s, 1);
  // Position adjoint: z <-> zb, d <-> -d-bar.
  GeneratorMap star;
  star.target = s;
  star.position_images = {zb, z};
  star.derivative_images = {-dzb, -dz};
  const auto n_like = z * dz;
  // (z dz)^dagger = (dz)^dagger (z)^dagger = (-dzb)(zb) = -zb dzb - 1.
  CHECK(adjoint_with(n_like, star) == -zb * dzb - C(s, 1));
  const auto h_like = z * zb + Scalar::i() * (z * dz - zb * dzb);
  CHECK(adjoint_with(adjoint_with(h_like, star), star) == h_like);
}

TEST_CASE("text serialization") {
  const auto s = radial3();
  const auto e = Scalar(Rational(1, 2)) *
                     (X(s, 0) * X(s, 1) * Dv(s, 0) * Dv(s, 2)) +
                 WeylElement::inverse_radial(s);
  CHECK(to_text(e) == "1 * r (x2)^-1 + 1/2 * x1 x2 d1 d3");
  CHECK(to_text(WeylElement(s)) == "0");
  CHECK(to_text(C(holo1(), 3)) == "3");
}

TEST_CASE("linear span solver") {
  const auto s = holo2();
  const auto a = X(s, 0) * Dv(s, 0);
  const auto b = X(s, 1) * Dv(s, 1);
  const auto target = Scalar(Rational(2, 3)) * a - Scalar::i() * b;
  const auto sol = solve_in_span({a, b}, target);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Scalar(Rational(2, 3)));
  CHECK((*sol)[1] == -Scalar::i());
  CHECK(!solve_in_span({a, b}, X(s, 0)).has_value());
  CHECK(solve_in_span({a, b}, WeylElement(s)).has_value());
}
