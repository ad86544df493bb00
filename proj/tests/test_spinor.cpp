#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynsym/spinor.hpp"

using namespace dynsym;

TEST_CASE("gamma matrices take the block forms of the Dirac basis") {
  const auto basis = gamma_basis();
  const Scalar I = Scalar::i();

  CHECK(basis.gamma[0](0, 0) == Scalar(1));
  CHECK(basis.gamma[0](2, 2) == Scalar(-1));
  CHECK(basis.gamma[1](0, 3) == Scalar(1));
  CHECK(basis.gamma[1](2, 1) == Scalar(-1));
  CHECK(basis.gamma[2](0, 3) == -I);
  CHECK(basis.gamma[2](1, 2) == I);
  CHECK(basis.gamma5(0, 2) == -I);
  CHECK(is_zero(Matrix(basis.beta - basis.gamma[0])));
}

TEST_CASE("gamma suite passes") {
  const auto records = gamma_checks();
  REQUIRE(records.size() == 6);
  for (const auto& r : records) CHECK(r.status == CheckStatus::pass);
}

TEST_CASE("ladder representation suite passes") {
  const auto records = ladder_representation_checks(SuiteConfig{});
  REQUIRE(records.size() == 6);
  for (const auto& r : records) CHECK(r.status == CheckStatus::pass);
}

TEST_CASE("two-mode reduction matches the holomorphic generator table") {
  const auto records = majorana_checks();
  REQUIRE(records.size() == 5);
  for (const auto& r : records) CHECK(r.status == CheckStatus::pass);

  const auto& notes = records[3].convention_notes;
  CHECK(notes.find("J(-1,0) = -2 m(-1,0)") != std::string::npos);
  CHECK(notes.find("J(0,1) = 2 m(-1,1)") != std::string::npos);
}

TEST_CASE("aggregate suite") {
  const auto records = spinor_checks(SuiteConfig{});
  CHECK(records.size() == 17);
  CHECK(summarize(records).fail == 0);
}
