#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynsym/tkk.hpp"

using namespace dynsym;

namespace {

bool all_pass(const std::vector<CheckRecord>& records) {
  for (const auto& r : records)
    if (r.status != CheckStatus::pass) return false;
  return !records.empty();
}

}  // namespace

TEST_CASE("conformal generators have the expected first-order forms") {
  const auto c = conformal_realization(complex_spin_factor());
  const auto sig = c.signature;
  const Scalar I = Scalar::i();

  const auto x = [&](int mu) { return WeylElement::position(sig, mu); };
  const auto d = [&](int mu) { return WeylElement::derivative(sig, mu); };

  CHECK(c.P[2] == I * d(2));
  CHECK(c.M[0][1] == I * (x(0) * d(1) + x(1) * d(0)));
  CHECK(c.M[1][3] == I * (x(1) * d(3) - x(3) * d(1)));

  WeylElement euler(sig);
  for (int mu = 0; mu < 4; ++mu) euler = euler + x(mu) * d(mu);
  CHECK(c.D == -I * euler);
  CHECK(c.S[2][2] == -c.D);
}

TEST_CASE("triple system brackets close with closed-form coefficients") {
  CHECK(all_pass(triple_bracket_checks(complex_spin_factor())));
  CHECK(all_pass(triple_bracket_checks(real_spin_factor())));
}

TEST_CASE("conformal bracket relations hold for every generator pair") {
  const auto big = conformal_bracket_checks(complex_spin_factor());
  REQUIRE(big.size() == 1);
  CHECK(big[0].status == CheckStatus::pass);
  CHECK(big[0].description.find("105") != std::string::npos);

  const auto small = conformal_bracket_checks(real_spin_factor());
  REQUIRE(small.size() == 1);
  CHECK(small[0].status == CheckStatus::pass);
  CHECK(small[0].description.find("45") != std::string::npos);
}

TEST_CASE("grading, structure operators, and dimensional reduction") {
  CHECK(all_pass(grading_checks(complex_spin_factor())));
  CHECK(all_pass(grading_checks(real_spin_factor())));
  CHECK(all_pass(structure_operator_checks(complex_spin_factor())));
  CHECK(all_pass(structure_operator_checks(real_spin_factor())));
  CHECK(all_pass(reduction_checks()));
}

TEST_CASE("ambient matrix families") {
  const std::vector<int> idx6 = {-1, 0, 1, 2, 3, 5};
  const std::map<int, int> eta6 = {{-1, 1}, {0, 1},  {1, -1},
                                   {2, -1}, {3, -1}, {5, -1}};
  const auto fam = ambient_family(idx6, eta6);
  CHECK(fam.generators.size() == 15);

  const Matrix& L = fam.stored(-1, 0);
  CHECK(L(0, 1) == Scalar::i());
  CHECK(L(1, 0) == -Scalar::i());
  CHECK(is_zero(Matrix(fam.get(0, -1) + L)));

  const auto rep = verify_closure(fam);
  CHECK(rep.closed);
  CHECK(rep.sign == 1);
  CHECK(rep.pairs_checked == 105);

  CHECK(all_pass(ambient_checks()));
}

TEST_CASE("rational function arithmetic and partials") {
  const RatFn f = ratfn_mul(ratfn_coordinate(0), ratfn_coordinate(1));
  const std::array<Rational, 4> p = {Rational(2), Rational(1), Rational(0),
                                     Rational(0)};
  CHECK(ratfn_evaluate(f, p) == GaussianRational(2));

  const RatFn df = ratfn_partial(ratfn_mul(ratfn_coordinate(0),
                                           ratfn_coordinate(0)),
                                 0);
  CHECK(ratfn_evaluate(df, p) == GaussianRational(4));

  const RatFn inv0 = inversion_image(ratfn_coordinate(0));
  CHECK(inv0.denominator_power == 1);
  CHECK(ratfn_evaluate(inv0, p) == GaussianRational(Rational(2, 3)));

  const RatFn slope = ratfn_partial(inv0, 0);
  CHECK(ratfn_evaluate(slope, p) ==
        GaussianRational(Rational(3 - 8, 9)));

  const std::array<Rational, 4> cone = {Rational(1), Rational(1), Rational(0),
                                        Rational(0)};
  CHECK(minkowski_square(cone).is_zero());
  CHECK_THROWS_AS(ratfn_evaluate(inv0, cone), std::domain_error);
}

TEST_CASE("inversion suite and the full aggregate pass") {
  const SuiteConfig config;
  CHECK(all_pass(inversion_checks(config)));

  const auto records = tkk_checks(config);
  const auto summary = summarize(records);
  CHECK(summary.fail == 0);
  CHECK(summary.expected_fail == 0);
  CHECK(summary.pass == static_cast<int>(records.size()));
  CHECK(records.size() == 29);
}
