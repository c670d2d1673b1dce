#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lcplab/repro.hpp"

using namespace lcplab;

TEST_CASE("every reproduction check passes") {
  for (const ReproResult& r : run_repro_checks()) {
    INFO(r.name << ": " << r.message);
    CHECK(r.pass);
  }
  CHECK(run_repro_checks().size() >= 20);
}

TEST_CASE("check names are unique and stable") {
  std::set<std::string> names;
  for (const ReproCheck& c : repro_checks()) {
    CHECK(names.insert(c.name).second);
    CHECK(!c.name.empty());
  }
  // spot-pin a few so renames are deliberate
  CHECK(names.count("worked_instance_exact_solution"));
  CHECK(names.count("e0s_not_closed_under_transpose"));
  CHECK(names.count("tilde_r0_with_positive_game_value"));
}

TEST_CASE("the harness reports failures instead of swallowing them") {
  ReproCheck doctored{"doctored",
                      [] { return std::string("deliberate mismatch"); }};
  ReproResult r = run_repro_check(doctored);
  CHECK(!r.pass);
  CHECK(r.name == "doctored");
  CHECK(r.message == "deliberate mismatch");

  ReproCheck throws{"throws", []() -> std::string {
                      throw std::runtime_error("boom");
                    }};
  ReproResult t = run_repro_check(throws);
  CHECK(!t.pass);
  CHECK(t.message.find("boom") != std::string::npos);
}
