#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynsym/hydrogen.hpp"

using namespace dynsym;

TEST_CASE("generators have the expected operator forms") {
  const auto h = hydrogen_generators();
  const Scalar I = Scalar::i();
  const auto& sig = h.signature;
  const auto x = [&](int k) { return WeylElement::position(sig, k); };
  const auto d = [&](int k) { return WeylElement::derivative(sig, k); };
  const WeylElement r = WeylElement::radial(sig);

  CHECK(h.L[2] == -I * (x(0) * d(1) - x(1) * d(0)));
  CHECK(h.Gamma[0] == -I * (r * d(0)));
  CHECK(h.B0 - h.A0 == r);
  CHECK(h.family().generators.size() == 15);
  CHECK(h.planar_family().generators.size() == 10);
}

TEST_CASE("fifteen generators close with one fitted sign") {
  const auto rep = verify_closure(hydrogen_generators().family());
  CHECK(rep.closed);
  CHECK(rep.sign == 1);
  CHECK(rep.pairs_checked == 105);
}

TEST_CASE("radial triple closes inside its own span") {
  const auto h = hydrogen_generators();
  const Scalar I = Scalar::i();
  CHECK(commutator(h.A0, h.D) == -I * h.B0);
  CHECK(commutator(h.A0, h.B0) == -I * h.D);
  CHECK(commutator(h.B0, h.D) == -I * h.A0);

  const auto coords =
      solve_in_span({h.B0, h.A0, h.D}, commutator(h.A0, h.D));
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == -I);
  CHECK((*coords)[1] == Scalar(0));
  CHECK((*coords)[2] == Scalar(0));
}

TEST_CASE("planar subfamily closes on ten generators") {
  const auto rep = verify_closure(hydrogen_generators().planar_family());
  CHECK(rep.closed);
  CHECK(rep.sign == 1);
  CHECK(rep.pairs_checked == 45);
}

TEST_CASE("check suite passes end to end") {
  const auto records = hydrogen_checks(SuiteConfig{});
  REQUIRE(records.size() == 7);
  for (const auto& r : records) CHECK(r.status == CheckStatus::pass);
}
