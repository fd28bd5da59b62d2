#include "doctest.h"

#include "rcsep/errors.hpp"
#include "rcsep/harness.hpp"

using namespace rcsep;
using namespace rcsep::harness;
namespace niem = rcsep::niemytzki;
namespace sorg = rcsep::sorgenfrey;

namespace {

Scenario far_scenario() {
  Scenario sc;
  sc.name = "far";
  sc.space = region::Space::niemytzki;
  sc.nF = {niem::closed_ball(niem::Point{Rational(0), Rational(0)}, Rational(1))};
  sc.nG = {niem::closed_ball(niem::Point{Rational(4), Rational(0)}, Rational(1))};
  sc.samples = 24;
  sc.stages = 4;
  sc.seed = 42;
  sc.budget = 16;
  return sc;
}

Scenario corner_scenario() {
  Scenario sc;
  sc.name = "corner";
  sc.space = region::Space::sorgenfrey;
  sc.dim = 2;
  auto mk = [](long lx, long ly, long w) {
    return sorg::box(sorg::Point{{Rational(lx), Rational(ly)}}, {Rational(w), Rational(w)});
  };
  sc.sF = {mk(0, 0, 2)};
  sc.sG = {mk(2, 2, 2)};
  sc.samples = 24;
  sc.stages = 4;
  sc.seed = 42;
  sc.budget = 16;
  return sc;
}

}  // namespace

TEST_CASE("rng streams are reproducible and split by index") {
  Rng a = Rng::fork(42, 3);
  Rng b = Rng::fork(42, 3);
  Rng c = Rng::fork(42, 4);
  bool diverged = false;
  for (int i = 0; i < 64; ++i) {
    auto va = a.next();
    CHECK(va == b.next());
    if (va != c.next()) diverged = true;
  }
  CHECK(diverged);

  Rng r(7);
  for (int i = 0; i < 2000; ++i) {
    Rational v = r.rational(Rational(-3), Rational(7), 1u << 10);
    CHECK(v >= Rational(-3));
    CHECK(v <= Rational(7));
    CHECK(v.den() <= mpz_class(1) << 10);
  }
}

TEST_CASE("samplers are deterministic and land in their regions") {
  auto gens = far_scenario().nF;
  auto p1 = sample_points(gens, 16, 42);
  auto p2 = sample_points(gens, 16, 42);
  REQUIRE(p1.size() == 16);
  for (std::size_t i = 0; i < p1.size(); ++i) {
    CHECK(p1[i] == p2[i]);
    CHECK(niem::point_in_union(gens, p1[i]));
  }

  auto boxes = corner_scenario().sF;
  auto q1 = sample_points(boxes, 16, 43);
  auto q2 = sample_points(boxes, 16, 43);
  for (std::size_t i = 0; i < q1.size(); ++i) {
    CHECK(q1[i] == q2[i]);
    CHECK(sorg::point_in_union(boxes, q1[i]));
  }
}

TEST_CASE("filtered-set sampling rejects into the region or reports emptiness") {
  auto sc = far_scenario();
  auto fs = niem::filtered_region(sc.nF, sc.nG, Rational(1, 2));
  auto pts = sample_points(fs, 32, 7);
  for (const auto& p : pts) CHECK(niem::member(fs, p));

  // A probe radius of 10 empties the filtered set entirely.
  auto empty = niem::filtered_region(sc.nF, sc.nG, Rational(10));
  CHECK_THROWS_AS(sample_points(empty, 4, 7), SamplingError);
}

TEST_CASE("boundary-biased sampling touches boundaries") {
  auto gens = far_scenario().nF;
  Rng rng(1234);
  long on_boundary = 0;
  for (int i = 0; i < 400; ++i) {
    niem::Point p = sample_boundary_biased(gens, rng);
    const auto& b = gens[0];
    if (niem::dist2(p.vec(), b.center()) == sq(b.radius)) ++on_boundary;
  }
  CHECK(on_boundary > 100);
}

TEST_CASE("cover suites run clean at desk scale") {
  FactConfig cfg;
  cfg.space = region::Space::niemytzki;
  cfg.trials = 40;
  cfg.samples = 12;
  cfg.seed = 5;
  auto rep = run_fact_suites(cfg);
  CHECK(rep.ok());
  CHECK(rep.total_fail() == 0);

  cfg.space = region::Space::sorgenfrey;
  cfg.dim = 2;
  auto rep2 = run_fact_suites(cfg);
  CHECK(rep2.ok());
  CHECK_THROWS_AS(run_fact_suites(FactConfig{region::Space::niemytzki, 1, 0, 1, 1}),
                  std::domain_error);
}

TEST_CASE("separation suite: far pair passes and emits deterministic CSV") {
  auto sc = far_scenario();
  auto rep1 = run_separation_suite(sc);
  CHECK(rep1.ok());
  CHECK(rep1.total_fail() == 0);
  auto rep2 = run_separation_suite(sc);
  CHECK(rep1.csv_text() == rep2.csv_text());
  CHECK(!rep1.csv_rows.empty());
}

TEST_CASE("separation suite: corner boxes stay exact") {
  auto rep = run_separation_suite(corner_scenario());
  CHECK(rep.ok());
  for (const auto& [label, c] : rep.checks) {
    if (label == "exactness") {
      CHECK(c.fail == 0);
      CHECK(c.pass > 0);
    }
  }
}

TEST_CASE("scenario validation rejects malformed inputs") {
  auto sc = far_scenario();
  sc.stages = 0;
  CHECK_THROWS_AS(validate(sc), ScenarioError);
  sc = far_scenario();
  sc.epsilon = Rational(1);
  CHECK_THROWS_AS(validate(sc), ScenarioError);
  sc = far_scenario();
  sc.nG = sc.nF;
  CHECK_THROWS_AS(validate(sc), ScenarioError);
}
