#include "doctest.h"
#include "oat/demos.hpp"
#include "oat/errors.hpp"
#include "oat/parallel.hpp"
#include "oat/scenario.hpp"

using namespace oat;

TEST_CASE("every demo scenario runs and passes") {
  for (const auto& name : demo_names()) {
    CAPTURE(name);
    Json doc = generate_demo(name);
    Report rep = run_scenario_json(doc, 0.0);
    CHECK(rep.passed());
  }
}

TEST_CASE("unknown demo name") {
  CHECK_THROWS_AS(generate_demo("nonsense"), UnknownDemo);
}

TEST_CASE("a failing check is a report entry, not an exception") {
  // One-dimensional bundle over the two-element group with a zero fiber.
  Json identity_mat = Json::array({Json::array({1.0})});
  Json zero_mat = Json::array({Json::array({0.0})});
  Json doc = {
      {"groups", {{"g", {{"cyclic", 2}}}}},
      {"bundles",
       {{"b",
         {{"group", "g"},
          {"fibers", Json::array({Json::array({identity_mat}),
                                  Json::array({zero_mat})})}}}}},
      {"tasks", Json::array({{{"op", "verify_bundle"}, {"bundle", "b"}}})}};
  Report rep = run_scenario_json(doc, 0.0);
  CHECK(!rep.passed());  // zero fiber: not saturated
}

TEST_CASE("unresolved references are structural errors") {
  Json doc = {{"tasks",
               Json::array({{{"op", "verify_bundle"}, {"bundle", "nope"}}})}};
  CHECK_THROWS_AS(run_scenario_json(doc, 0.0), UnresolvedReference);
}

TEST_CASE("malformed documents raise a parse error") {
  CHECK_THROWS_AS(run_scenario_file("/no/such/file.json", 0.0), ParseError);
  Json doc = {{"tasks", Json::array({{{"op", "not_a_task"}}})}};
  CHECK_THROWS_AS(run_scenario_json(doc, 0.0), ParseError);
}

TEST_CASE("machine reports are byte-stable across runs and workers") {
  for (const auto& name : demo_names()) {
    CAPTURE(name);
    Json doc = generate_demo(name);
    set_parallelism(1);
    std::string first = report_to_json(run_scenario_json(doc, 0.0), 0.0).dump(2);
    std::string second =
        report_to_json(run_scenario_json(doc, 0.0), 0.0).dump(2);
    set_parallelism(4);
    std::string wide = report_to_json(run_scenario_json(doc, 0.0), 0.0).dump(2);
    set_parallelism(1);
    CHECK(first == second);
    CHECK(first == wide);
  }
}

TEST_CASE("report filtering keeps only the prefixed records") {
  Json doc = generate_demo("group_algebra_z2");
  Report rep = run_scenario_json(doc, 0.0);
  Report sub = filter_report(rep, "watatani");
  CHECK(!sub.records().empty());
  for (const auto& r : sub.records())
    CHECK(r.id.rfind("watatani", 0) == 0);
}
