#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "dynsym/landau.hpp"
#include "dynsym/serialize.hpp"
#include "dynsym/suites.hpp"

using namespace dynsym;
using nlohmann::json;

TEST_CASE("text report carries the summary line and statuses") {
  std::vector<CheckRecord> records;
  records.push_back(exact_check("alpha", "first identity", true, "sign s=-1"));
  records.push_back(numeric_check("beta", "second identity", 2.5e-12, 1e-10));
  records.push_back(exact_check("gamma", "third identity", false));

  const std::string text = emit_text("demo", records);
  CHECK(text.find("suite demo: 3 checks, 2 pass, 1 fail, 0 expected-fail") !=
        std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("~ sign s=-1") != std::string::npos);
  CHECK(text.find("[residual 2.500e-12]") != std::string::npos);
}

TEST_CASE("json report round-trips records and config") {
  std::vector<CheckRecord> records;
  records.push_back(exact_check("alpha", "first identity", true, "note"));
  CheckRecord x;
  x.id = "xfail";
  x.description = "documented mismatch";
  x.status = CheckStatus::expected_fail;
  records.push_back(x);

  SuiteConfig config;
  config.seed = 7;
  const std::string body = emit_json("demo", config, records);
  const json parsed = json::parse(body);
  CHECK(parsed.at("schema") == 1);
  CHECK(parsed.at("suite") == "demo");
  CHECK(parsed.at("config").at("seed") == 7);
  CHECK(parsed.at("config").at("ks_mode") == "hopf-normalized");
  REQUIRE(parsed.at("records").size() == 2);
  CHECK(parsed.at("records")[0].at("id") == "alpha");
  CHECK(parsed.at("records")[0].at("status") == "pass");
  CHECK(parsed.at("records")[0].at("residual") == 0.0);
  CHECK(parsed.at("records")[0].at("convention_notes") == "note");
  CHECK(parsed.at("records")[1].at("status") == "expected-fail");
  CHECK(parsed.at("summary").at("pass") == 1);
  CHECK(parsed.at("summary").at("fail") == 0);
  CHECK(parsed.at("summary").at("expected_fail") == 1);

  CHECK(emit_json("demo", config, records) == body);
}

TEST_CASE("scalar and element serialization use rational strings") {
  CHECK(json_rational(Rational(3)) == "3");
  CHECK(json_rational(Rational(-2, 7)) == "-2/7");
  CHECK(json_scalar(Scalar::i()) == json::array({"0", "1"}));
  CHECK(json_scalar(Scalar::inv_sqrt2()).at("sqrt2") ==
        json::array({"1/2", "0"}));

  const auto sig = phase_signature();
  const auto ops = build_phase_operators();
  const json j = json_weyl_element(ops.L_z);
  CHECK(j.at("positions") == json::array({"xi", "eta"}));
  CHECK(j.at("terms").size() == 2);
  for (const auto& term : j.at("terms")) {
    CHECK(term.at("alpha").size() == 2);
    CHECK(term.at("x2_inverse_power") == 0);
  }
}

TEST_CASE("structure table serialization lists bracket rows") {
  const auto fam = dirac_generators(Presentation::phase).family();
  const auto table = structure_constants(fam, -1);
  const json j = json_structure_table(table);
  REQUIRE(j.size() == 45);
  const auto& first = j[0];
  CHECK(first.at("bracket").size() == 2);
  for (const auto& part : first.at("terms"))
    CHECK(part.at("pair").size() == 2);
}

TEST_CASE("suite registry dispatches and rejects unknown names") {
  REQUIRE(suite_names().size() == 7);
  CHECK(is_suite_name("weyl"));
  CHECK(is_suite_name("transforms"));
  CHECK(!is_suite_name("so24"));

  const SuiteConfig config;
  const auto weyl = run_suite("weyl", config);
  REQUIRE(weyl.size() == 7);
  for (const auto& r : weyl) CHECK(r.status == CheckStatus::pass);

  CHECK_THROWS_AS(run_suite("bogus", config), std::invalid_argument);
}

TEST_CASE("per-pair closure suite honors the configured presentation") {
  SuiteConfig config;
  config.presentation = "oscillator";
  const auto records = so23_checks(config);
  REQUIRE(records.size() == 46);
  for (const auto& r : records) CHECK(r.status == CheckStatus::pass);
  CHECK(records.back().id == "so23-closure-oscillator");
  CHECK(records.back().convention_notes.find("s=-1") != std::string::npos);

  config.presentation = "nonsense";
  CHECK_THROWS_AS(so23_checks(config), std::invalid_argument);
}

TEST_CASE("landau suite aggregates closures, identities and the spectrum") {
  const SuiteConfig config;
  const auto records = landau_checks(config);
  const auto totals = summarize(records);
  CHECK(totals.fail == 0);
  CHECK(totals.expected_fail == 0);

  int closures = 0;
  bool saw_spectrum = false;
  for (const auto& r : records) {
    if (r.id.rfind("so23-closure-", 0) == 0) ++closures;
    if (r.id == "landau-spectrum") {
      saw_spectrum = true;
      CHECK(r.status == CheckStatus::pass);
      CHECK(r.residual <= 1e-8);
    }
  }
  CHECK(closures == 5);
  CHECK(saw_spectrum);
}
