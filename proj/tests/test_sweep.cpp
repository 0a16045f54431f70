#include <doctest.h>

#include <cstdlib>

#include "ysym/sweep.hpp"

using namespace ysym;

TEST_CASE("suite bounds") {
  CHECK(default_max_n("thm11") == 6);
  CHECK(default_max_n("thm12") == 7);
  CHECK(default_max_n("section4") == 7);
  CHECK_THROWS(default_max_n("nope"));
  CHECK(resolve_max_n("thm11", 3) == 3);
  ::setenv("YSYM_MAX_N", "4", 1);
  CHECK(resolve_max_n("thm11", std::nullopt) == 4);
  CHECK(resolve_max_n("thm11", 2) == 2);
  ::unsetenv("YSYM_MAX_N");
  CHECK(resolve_max_n("garnir", std::nullopt) == 6);
  CHECK_THROWS(resolve_max_n("garnir", 0));
}

TEST_CASE("filling enumeration") {
  CHECK(all_fillings(Partition({2, 1})).size() == 6);
  // For lambda = (2,1) and k = 2 the labels 1,2 form (2) or (1,1).
  CHECK(split_fillings(Partition({2, 1}), 2).size() == 4);
  for (const Filling& F : split_fillings(Partition({3, 2}), 3)) CHECK(F.split_shape(3).has_value());
}

TEST_CASE("every suite passes at a small bound") {
  for (const auto& name : suite_names()) {
    const SuiteResult r = run_suite(name, name == "dn" ? 2 : 4, 2);
    CHECK_MESSAGE(r.failures == 0, name);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("report layout") {
  SweepConfig config;
  config.max_n = 3;
  config.suites = {"idempotence", "thm11"};
  const SweepReport report = run_sweep(config);
  CHECK(report.all_pass());
  const Json j = report.to_json();
  CHECK(j.at("pass") == true);
  REQUIRE(j.at("suites").size() == 2);
  CHECK(j["suites"][0]["suite"] == "idempotence");
  CHECK(j["suites"][1].contains("integrality"));
  CHECK(j["suites"][1]["integrality"]["cases"].get<int>() > 0);
  config.suites.clear();
  CHECK_THROWS(run_sweep(config));
}
