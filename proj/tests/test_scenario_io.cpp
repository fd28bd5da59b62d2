#include "doctest.h"

#include "rcsep/errors.hpp"
#include "rcsep/scenario_io.hpp"

#include <string>

using namespace rcsep;
using scenario_io::parse_scenario;
using scenario_io::serialize_scenario;

namespace {

const char* kMinimalNiem =
    "space: niemytzki\n"
    "F:\n"
    "ball 0 0 1\n"
    "G:\n"
    "ball 4 0 1\n";

const char* kSorg =
    "# corner-adjacent boxes\n"
    "name: corner\n"
    "space: sorgenfrey 2\n"
    "stages: 6\n"
    "samples: 50\n"
    "seed: 11\n"
    "budget: 12\n"
    "F:\n"
    "box 0 0 2 2\n"
    "G:\n"
    "box 2 2 2 2\n";

}  // namespace

TEST_CASE("minimal scenario parses with defaults") {
  auto sc = parse_scenario(kMinimalNiem);
  CHECK(sc.space == region::Space::niemytzki);
  CHECK(sc.epsilon == Rational(1, 2));  // defaulted
  CHECK(sc.stages == 8);
  CHECK(sc.nF.size() == 1);
  CHECK(sc.nG.size() == 1);
  CHECK(sc.nF[0].anchor.x == Rational(0));
  CHECK(sc.nF[0].radius == Rational(1));
}

TEST_CASE("sorgenfrey scenario with options") {
  auto sc = parse_scenario(kSorg);
  CHECK(sc.space == region::Space::sorgenfrey);
  CHECK(sc.dim == 2);
  CHECK(sc.name == "corner");
  CHECK(sc.stages == 6);
  CHECK(sc.samples == 50);
  CHECK(sc.seed == 11);
  CHECK(sc.budget == 12);
  CHECK(sc.sF.size() == 1);
  CHECK(sc.sG[0].lower.coords[0] == Rational(2));
}

TEST_CASE("diagnostics name the offending line") {
  auto expect_error = [](const std::string& text, const char* needle) {
    try {
      parse_scenario(text);
      FAIL_CHECK("expected a scenario error for: " << needle);
    } catch (const ScenarioError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error(
      "space: niemytzki\nF:\nball 0 0 -1\nG:\nball 4 0 1\n", "radius must be positive");
  expect_error(
      "space: niemytzki\nF:\nball 0 0 -1\nG:\nball 4 0 1\n", "line 3");
  expect_error("space: sorgenfrey 2\nF:\nbox 0 0 0 1 1 1\nG:\nbox 4 4 1 1\n", "line 3");
  expect_error("space: niemytzki\nflavor: mint\nF:\nball 0 0 1\nG:\nball 4 0 1\n",
               "unknown key");
  expect_error("space: niemytzki\nepsilon: x/y\nF:\nball 0 0 1\nG:\nball 4 0 1\n", "line 2");
  expect_error("space: niemytzki\nF:\nball 0 0 1\nG:\nball 1 0 1\n", "not disjoint");
  expect_error("space: niemytzki\nF:\nball 0 0 1\n", "missing F: or G:");
}

TEST_CASE("serialization round-trips") {
  for (const char* text : {kMinimalNiem, kSorg}) {
    auto once = parse_scenario(text);
    auto twice = parse_scenario(serialize_scenario(once));
    CHECK(serialize_scenario(once) == serialize_scenario(twice));
  }
}
