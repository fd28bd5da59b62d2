#pragma once

#include "rcsep/niemytzki.hpp"
#include "rcsep/region.hpp"
#include "rcsep/sorgenfrey.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rcsep::harness {

// Deterministic generator (splitmix64). All randomness flows through this;
// standard-library distributions are avoided because their output is not
// pinned across implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  static Rng fork(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);
  long range(long lo, long hi);  // inclusive bounds
  // Uniform-ish rational in [lo, hi] with denominator <= max_den.
  Rational rational(const Rational& lo, const Rational& hi, std::uint64_t max_den = 1u << 16);

 private:
  std::uint64_t state_;
};

// ---- scenarios ----------------------------------------------------------------

struct Scenario {
  std::string name = "scenario";
  region::Space space = region::Space::niemytzki;
  std::size_t dim = 2;  // sorgenfrey only
  std::vector<niemytzki::ClosedBall> nF, nG;
  std::vector<sorgenfrey::Box> sF, sG;
  Rational epsilon = Rational(1, 2);
  long stages = 8;
  long samples = 100;
  std::uint64_t seed = 7;
  int budget = 16;
};

void validate(const Scenario& s);  // throws ScenarioError

// ---- samplers -----------------------------------------------------------------

niemytzki::Point sample_in_ball(const niemytzki::ClosedBall& b, Rng& rng);
niemytzki::Point sample_in_union(const std::vector<niemytzki::ClosedBall>& gens, Rng& rng);
// Boundary-biased: exact boundary circle points (rational parametrization),
// interior points, and points nudged just outside.
niemytzki::Point sample_boundary_biased(const std::vector<niemytzki::ClosedBall>& gens, Rng& rng);

sorgenfrey::Point sample_in_box(const sorgenfrey::Box& b, Rng& rng);
sorgenfrey::Point sample_in_union(const std::vector<sorgenfrey::Box>& gens, Rng& rng);
sorgenfrey::Point sample_boundary_biased(const std::vector<sorgenfrey::Box>& gens, Rng& rng);

// Deterministic per-index streams with exact membership rechecks.
std::vector<niemytzki::Point> sample_points(const std::vector<niemytzki::ClosedBall>& gens,
                                            long count, std::uint64_t seed);
// Boundary-biased stream restricted to actual members of the union.
std::vector<niemytzki::Point> sample_boundary_points(
    const std::vector<niemytzki::ClosedBall>& gens, long count, std::uint64_t seed);
std::vector<sorgenfrey::Point> sample_points(const std::vector<sorgenfrey::Box>& gens, long count,
                                             std::uint64_t seed);
// Rejection against the filtered-set membership; SamplingError when the
// region is (effectively) empty. Mixes axis and off-axis points when the
// axis part is nonempty.
std::vector<niemytzki::Point> sample_points(const niemytzki::FilteredSet& fs, long count,
                                            std::uint64_t seed);
std::vector<sorgenfrey::Point> sample_points(const sorgenfrey::FilteredSet& fs, long count,
                                             std::uint64_t seed);

// ---- reports ------------------------------------------------------------------

struct CheckCounts {
  long pass = 0;
  long fail = 0;
  long unknown = 0;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  double wall_ms = 0;
  std::vector<std::pair<std::string, CheckCounts>> checks;
  std::string csv_header;
  std::vector<std::string> csv_rows;
  std::map<long, long> stage_hist;

  CheckCounts& check(const std::string& label);
  long total_fail() const;
  long total_unknown() const;
  long total_queries() const;
  bool ok() const { return total_fail() == 0; }
  std::string summary() const;
  std::string csv_text() const;
};

// ---- suites -------------------------------------------------------------------

struct FactConfig {
  region::Space space = region::Space::niemytzki;
  std::size_t dim = 1;  // sorgenfrey only
  long trials = 1000;
  long samples = 100;
  std::uint64_t seed = 7;
};

// Randomized convergent-sequence cover suites. Violations are
// build-stopping: the report's "violations" check collects them.
SuiteReport run_fact_suites(const FactConfig& cfg);

// Full pipeline on one scenario: sampling, membership verdicts on both
// sides, stage coverage, disjointness, plus the gap / radius / scale checks
// matching the scenario's space.
SuiteReport run_separation_suite(const Scenario& sc);

}  // namespace rcsep::harness
