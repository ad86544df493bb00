#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dynsym/landau.hpp"

using namespace dynsym;

namespace {

bool all_pass(const std::vector<CheckRecord>& records) {
  for (const auto& r : records)
    if (r.status == CheckStatus::fail) return false;
  return true;
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("magnetic translation pairs") {
  const auto ops = build_phase_operators();
  const auto sig = phase_signature();
  const WeylElement i_one =
      WeylElement::constant(sig, Scalar::i());
  CHECK(commutator(ops.P_x, ops.P_y) == i_one);
  CHECK(commutator(ops.X, ops.Y) == -i_one);
  CHECK(is_zero(commutator(ops.P_x, ops.X)));
  CHECK(is_zero(commutator(ops.P_x, ops.Y)));
  CHECK(is_zero(commutator(ops.P_y, ops.X)));
  CHECK(is_zero(commutator(ops.P_y, ops.Y)));
}

TEST_CASE("ladder constructors satisfy canonical commutators") {
  const auto o = build_oscillators();
  const WeylElement unit =
      WeylElement::constant(holomorphic_signature(), Scalar(1));
  CHECK(commutator(o.a_minus, o.a_plus) == unit);
  CHECK(commutator(o.b_minus, o.b_plus) == unit);
  CHECK(is_zero(commutator(o.a_plus, o.b_minus)));
}

TEST_CASE("every presentation closes with the same global sign") {
  for (const auto p :
       {Presentation::phase, Presentation::holomorphic,
        Presentation::oscillator, Presentation::spinorial,
        Presentation::cartesian}) {
    CAPTURE(presentation_name(p));
    const auto report = verify_closure(dirac_generators(p).family());
    CHECK(report.closed);
    CHECK(report.sign == -1);
    CHECK(report.pairs_checked == 45);
  }
}

TEST_CASE("verify_so23 reports closure") {
  const auto records = verify_so23(dirac_generators(Presentation::phase));
  REQUIRE(records.size() == 1);
  CHECK(records[0].status == CheckStatus::pass);
  CHECK(records[0].convention_notes.find("s=-1") != std::string::npos);
}

TEST_CASE("presentations agree after changing variables") {
  const auto records = cross_presentation_check();
  CHECK(records.size() == 50);
  for (const auto& r : records) {
    CAPTURE(r.id);
    CHECK(r.status == CheckStatus::pass);
  }
}

TEST_CASE("hamiltonian identity suite passes") {
  SuiteConfig config;
  const auto records = hamiltonian_identities(config);
  CHECK(records.size() >= 20);
  for (const auto& r : records) {
    CAPTURE(r.id);
    CAPTURE(r.residual);
    CHECK(r.status == CheckStatus::pass);
  }
  CHECK(all_pass(records));
}

TEST_CASE("generator lookup is antisymmetric") {
  const auto g = dirac_generators(Presentation::phase);
  CHECK(g.stored(-1, 0) == g.mm10);
  CHECK(g.stored(0, -1) == -g.mm10);
  CHECK(g.stored(3, 1) == g.m31);
  CHECK(g.stored(1, 3) == -g.m31);
  CHECK(g.stored(2, 2).is_zero());
}

TEST_CASE("gauge substitution is a canonical change of variables") {
  std::string why;
  CHECK(is_canonical(phase_signature(), landau_gauge_map(), &why));
  CHECK(why.empty());
  CHECK(is_canonical(holomorphic_signature(), oscillator_to_holomorphic_map(),
                     &why));
  CHECK(is_canonical(holomorphic_signature(), holomorphic_to_phase_map(),
                     &why));
}

TEST_CASE("all generators are self-adjoint under ladder conjugation") {
  const std::string summary = oscillator_adjoint_summary();
  CHECK(count_occurrences(summary, ":hermitian") == 10);
  CHECK(summary.find("neither") == std::string::npos);
}

TEST_CASE("spectrum shows uniform Landau-level degeneracy") {
  const int cutoff = 12;
  const auto levels = landau_spectrum(cutoff);
  for (int n = 0; n < 10; ++n) {
    bool found = false;
    for (const auto& level : levels) {
      if (std::abs(level.value - (n + 0.5)) <= 1e-8) {
        found = true;
        CHECK(level.multiplicity == cutoff + 1);
      }
    }
    CAPTURE(n);
    CHECK(found);
  }
}

TEST_CASE("structure constants expand over sorted pair keys") {
  const auto fam = dirac_generators(Presentation::phase).family();
  const auto report = verify_closure(fam);
  REQUIRE(report.closed);
  const auto table = structure_constants(fam, report.sign);
  CHECK(table.size() == 45);
  const auto row = table.at({{-1, 0}, {0, 1}});
  REQUIRE(row.size() == 1);
  CHECK(row.count({-1, 1}) == 1);
}

TEST_CASE("frame construction validates physical inputs") {
  const auto frame = LandauFrame::from_gaussian(1.0e4, 9.1093837015e-28,
                                                4.80320471e-10);
  CHECK(frame.omega > 0.0);
  CHECK(frame.magnetic_length > 0.0);
  CHECK(LandauFrame::from_omega(2.5).omega == doctest::Approx(2.5));
  CHECK_THROWS_AS(LandauFrame::from_omega(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(LandauFrame::from_gaussian(0.0, 1.0, 1.0),
                  std::invalid_argument);
}
