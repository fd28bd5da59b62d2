// Acceptance suite: one check per shipped guarantee, each printed as a
// single PASS/FAIL line. Every tolerance and time budget is pinned here.
// Exit status is nonzero when any criterion fails.

#include "rcsep/errors.hpp"
#include "rcsep/harness.hpp"
#include "rcsep/niemytzki.hpp"
#include "rcsep/region.hpp"
#include "rcsep/scenario_io.hpp"
#include "rcsep/sorgenfrey.hpp"
#include "rcsep/subdivision.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

namespace fs = std::filesystem;
using namespace rcsep;
namespace niem = rcsep::niemytzki;
namespace sorg = rcsep::sorgenfrey;
using harness::Rng;
using harness::Scenario;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
};

#define EXPECT(cond, msg)                                   \
  do {                                                      \
    if (!(cond)) {                                          \
      out.pass = false;                                     \
      out.note << " [" << msg << "]";                       \
    }                                                       \
  } while (0)

std::vector<Scenario> load_corpus(const char* ext) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(RCSEP_CORPUS_DIR))
    if (e.path().extension() == ext) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Scenario> out;
  for (const auto& f : files) out.push_back(scenario_io::load_scenario_file(f.string()));
  return out;
}

// ---- criterion 1: regular closedness of inputs --------------------------------

Outcome criterion_regular_closed() {
  Outcome out;
  long mismatches = 0;

  for (long trial = 0; trial < 500; ++trial) {
    Rng rng = Rng::fork(1001, trial);
    std::vector<niem::ClosedBall> gens;
    long n = rng.range(1, 4);
    for (long i = 0; i < n; ++i) {
      Rational x = rng.rational(Rational(-4), Rational(4), 1u << 8);
      Rational y = rng.below(3) == 0 ? Rational(0) : rng.rational(Rational(0), Rational(3), 1u << 8);
      Rational r = rng.rational(Rational(1, 8), Rational(2), 1u << 8);
      gens.push_back(niem::closed_ball(niem::Point{x, y}, r));
    }
    auto closure = region::regular_closure(region::generators_union(gens));
    for (long s = 0; s < 200; ++s) {
      niem::Point p = harness::sample_boundary_biased(gens, rng);
      bool a = niem::point_in_union(gens, p);
      bool b = region::member(closure, p, 4).in();
      if (a != b) ++mismatches;
    }
  }

  for (long trial = 0; trial < 500; ++trial) {
    Rng rng = Rng::fork(2002, trial);
    std::size_t d = 1 + rng.below(3);
    std::vector<sorg::Box> gens;
    long n = rng.range(1, 4);
    for (long i = 0; i < n; ++i) {
      sorg::Point lo;
      std::vector<Rational> w;
      for (std::size_t k = 0; k < d; ++k) {
        lo.coords.push_back(rng.rational(Rational(-4), Rational(4), 1u << 8));
        w.push_back(rng.rational(Rational(1, 8), Rational(2), 1u << 8));
      }
      gens.push_back(sorg::box(lo, w));
    }
    auto closure = region::regular_closure(region::generators_union(gens));
    for (long s = 0; s < 200; ++s) {
      sorg::Point p = harness::sample_boundary_biased(gens, rng);
      bool a = sorg::point_in_union(gens, p);
      bool b = region::member(closure, p, 4).in();
      if (a != b) ++mismatches;
    }
  }

  out.note << "1000 unions x 200 boundary-biased points";
  EXPECT(mismatches == 0, "pointwise mismatches: " << mismatches);
  return out;
}

// ---- criteria 2 and 3: randomized cover suites ---------------------------------

Outcome criterion_cover_niem() {
  Outcome out;
  harness::FactConfig cfg;
  cfg.space = region::Space::niemytzki;
  cfg.trials = 1000;
  cfg.samples = 100;
  cfg.seed = 314159;
  auto rep = harness::run_fact_suites(cfg);
  out.note << "trials 1000 x samples 100";
  EXPECT(rep.total_fail() == 0, "violations: " << rep.total_fail());
  return out;
}

Outcome criterion_cover_sorg() {
  Outcome out;
  long fails = 0;
  for (std::size_t d : {1u, 2u, 3u}) {
    harness::FactConfig cfg;
    cfg.space = region::Space::sorgenfrey;
    cfg.dim = d;
    cfg.trials = 334;
    cfg.samples = 100;
    cfg.seed = 271828 + d;
    fails += harness::run_fact_suites(cfg).total_fail();
  }
  out.note << "1002 trials across d in {1,2,3}";
  EXPECT(fails == 0, "violations: " << fails);
  return out;
}

// ---- criterion 4: certified Euclidean gaps --------------------------------------

Outcome criterion_gap() {
  Outcome out;
  auto corpus = load_corpus(".nsc");
  EXPECT(corpus.size() >= 12, "niemytzki corpus too small: " << corpus.size());
  long bad_pairs = 0, missing = 0;
  for (const auto& sc : corpus) {
    for (Rational alpha : {Rational(1), Rational(1, 2), Rational(1, 8)}) {
      auto delta = niem::euclid_closure_gap(sc.nF, sc.nG, alpha, 16);
      if (!delta || delta->sign() <= 0) {
        ++missing;
        continue;
      }
      auto fsr = niem::filtered_region(sc.nF, sc.nG, alpha);
      std::vector<niem::Point> fpts;
      try {
        fpts = harness::sample_points(fsr, 100, sc.seed ^ 0x11u);
      } catch (const SamplingError&) {
        continue;  // empty filtered set: the bound is vacuous
      }
      auto gpts = harness::sample_boundary_points(sc.nG, 100, sc.seed ^ 0x22u);
      const Rational d2 = sq(*delta);
      for (const auto& f : fpts)
        for (const auto& g : gpts)
          if (niem::dist2(f.vec(), g.vec()) < d2) ++bad_pairs;
    }
  }
  out.note << corpus.size() << " scenarios x 3 probe scales x 10^4 pairs";
  EXPECT(missing == 0, "gaps not certified: " << missing);
  EXPECT(bad_pairs == 0, "pairs under delta: " << bad_pairs);
  return out;
}

// ---- criterion 5: separation radii ----------------------------------------------

Outcome criterion_gamma() {
  Outcome out;
  auto corpus = load_corpus(".nsc");
  const Rational alpha(1, 2);
  long cert_fail = 0, meet_fail = 0, skipped = 0;
  for (const auto& sc : corpus) {
    auto gap = niem::euclid_closure_gap(sc.nF, sc.nG, alpha, 16);
    auto fsr = niem::filtered_region(sc.nF, sc.nG, alpha);
    std::vector<niem::Point> fpts;
    try {
      fpts = harness::sample_points(fsr, 1000, sc.seed ^ 0x33u);
    } catch (const SamplingError&) {
      ++skipped;
      continue;
    }
    // Both anchor kinds among the G queries when the side touches the axis.
    auto gpts = harness::sample_points(sc.nG, 50, sc.seed ^ 0x44u);
    {
      Rng rng = Rng::fork(sc.seed, 0x55u);
      long added = 0;
      for (int t = 0; t < 4000 && added < 10; ++t) {
        const auto& g = sc.nG[rng.below(sc.nG.size())];
        niem::Vec2 c = g.center();
        niem::Point p{rng.rational(c.x - g.radius, c.x + g.radius, 1u << 8), Rational(0)};
        if (niem::point_in_union(sc.nG, p)) {
          gpts.push_back(p);
          ++added;
        }
      }
    }

    for (Rational eps : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      const Rational ea = eps * alpha;
      for (const auto& pq : gpts) {
        niem::GammaCertificate cert;
        try {
          cert = niem::separation_gamma(sc.nF, sc.nG, alpha, eps, pq, 16, false, gap);
        } catch (const EnclosureError&) {
          ++cert_fail;
          continue;
        }
        if (cert.gamma.sign() <= 0 || !niem::check_gamma_certificate(cert, alpha, eps)) {
          ++cert_fail;
          continue;
        }
        niem::Ball open_pq = niem::ball(pq, cert.gamma);
        niem::ClosedBall closed_pq = niem::closed_ball(pq, cert.gamma);
        for (const auto& x : fpts) {
          niem::Ball probe = niem::ball(x, ea);
          if (niem::meets(probe, closed_pq) || niem::meets(probe, open_pq)) ++meet_fail;
        }
      }
    }
  }
  out.note << corpus.size() << " scenarios x 3 shrink factors x 50 G-points x 10^3 anchors"
           << (skipped ? " (skipped empty filtered sets)" : "");
  EXPECT(cert_fail == 0, "certificates failing: " << cert_fail);
  EXPECT(meet_fail == 0, "ball intersections: " << meet_fail);
  return out;
}

// ---- criterion 6: tangent-disc separation ---------------------------------------

Outcome criterion_separation_niem() {
  Outcome out;
  auto corpus = load_corpus(".nsc");
  long fails = 0, resolved = 0, unknowns = 0, side_out = 0;
  for (auto sc : corpus) {
    sc.stages = 8;
    sc.budget = 16;
    sc.samples = 60;
    auto rep = harness::run_separation_suite(sc);
    for (const auto& [label, c] : rep.checks) {
      if (label == "membership-resolved") {
        resolved += c.pass;
        unknowns += c.unknown;
      } else if (label == "own-side-never-out") {
        side_out += c.fail;
      } else {
        fails += c.fail;
      }
    }
  }
  double rate = resolved + unknowns == 0 ? 0.0 : (double)unknowns / (double)(resolved + unknowns);
  out.note << corpus.size() << " scenarios, N=8, depth 16, unknown rate "
           << (long)(rate * 1000) / 10.0 << "%";
  EXPECT(fails == 0, "failed checks: " << fails);
  EXPECT(side_out == 0, "side samples certified out: " << side_out);
  EXPECT(rate <= 0.05, "unknown rate above 5%");
  return out;
}

// ---- criterion 7: lower-limit separation ----------------------------------------

Outcome criterion_separation_sorg() {
  Outcome out;
  auto corpus = load_corpus(".ssc");
  EXPECT(corpus.size() >= 12, "sorgenfrey corpus too small: " << corpus.size());
  bool dims_seen[6] = {};
  long fails = 0;
  bool saw_corollary = false;
  for (auto sc : corpus) {
    if (sc.dim < 6) dims_seen[sc.dim] = true;
    if (sc.name == "corollary_figure") saw_corollary = true;
    sc.stages = 8;
    sc.budget = 16;
    sc.samples = 60;
    auto rep = harness::run_separation_suite(sc);
    fails += rep.total_fail();
  }
  EXPECT(dims_seen[1] && dims_seen[2] && dims_seen[3] && dims_seen[5],
         "missing a dimension in {1,2,3,5}");
  EXPECT(saw_corollary, "corner-figure scenario missing");
  out.note << corpus.size() << " scenarios, exact engine";
  EXPECT(fails == 0, "failed checks: " << fails);
  return out;
}

// ---- criterion 8: swap symmetry and determinism ---------------------------------

Outcome criterion_swap_determinism() {
  Outcome out;
  long verdict_mismatch = 0;

  {
    auto sc = scenario_io::load_scenario_file(std::string(RCSEP_CORPUS_DIR) + "/far.nsc");
    auto fwd = region::separate(sc.nF, sc.nG, sc.epsilon, 4);
    auto rev = region::separate(sc.nG, sc.nF, sc.epsilon, 4);
    auto fpts = harness::sample_points(sc.nF, 40, 7);
    auto gpts = harness::sample_points(sc.nG, 40, 8);
    auto check_point = [&](const niem::Point& p) {
      for (int budget : {4, 16}) {
        auto a = region::member(fwd.uF, p, budget);
        auto b = region::member(rev.uG, p, budget);
        if (a.kind != b.kind || a.stage != b.stage) ++verdict_mismatch;
      }
    };
    for (const auto& p : fpts) check_point(p);
    for (const auto& p : gpts) check_point(p);
  }
  {
    auto sc =
        scenario_io::load_scenario_file(std::string(RCSEP_CORPUS_DIR) + "/corollary_figure.ssc");
    auto fwd = region::separate(sc.sF, sc.sG, 4);
    auto rev = region::separate(sc.sG, sc.sF, 4);
    auto fpts = harness::sample_points(sc.sF, 40, 7);
    for (const auto& p : fpts) {
      auto a = region::member(fwd.uF, p, 16);
      auto b = region::member(rev.uG, p, 16);
      if (a.kind != b.kind || a.stage != b.stage) ++verdict_mismatch;
    }
  }
  EXPECT(verdict_mismatch == 0, "swap-verdict mismatches: " << verdict_mismatch);

  for (const char* name : {"/far.nsc", "/stress_gap.nsc", "/corollary_figure.ssc"}) {
    auto sc = scenario_io::load_scenario_file(std::string(RCSEP_CORPUS_DIR) + name);
    sc.samples = 30;
    auto r1 = harness::run_separation_suite(sc);
    auto r2 = harness::run_separation_suite(sc);
    EXPECT(r1.csv_text() == r2.csv_text(), "CSV not byte-identical for " << name);
  }
  out.note << "swap verdicts at two budgets; three scenarios re-run byte-identically";
  return out;
}

// ---- criterion 9: budget monotonicity -------------------------------------------

Outcome criterion_budget_monotone() {
  Outcome out;
  const char* names[] = {"/far.nsc", "/stress_gap.nsc", "/axis_close.nsc", "/mixed_sizes.nsc"};
  long flips = 0, unknown_regressions = 0, queries = 0;
  for (const char* name : names) {
    auto sc = scenario_io::load_scenario_file(std::string(RCSEP_CORPUS_DIR) + name);
    auto res = region::separate(sc.nF, sc.nG, sc.epsilon, 4);
    Rng rng = Rng::fork(sc.seed, 0x99u);
    Rational xlo(-3), xhi(7), yhi(5);
    for (int i = 0; i < 250; ++i) {
      niem::Point p{rng.rational(xlo, xhi, 1u << 10), rng.rational(Rational(0), yhi, 1u << 10)};
      ++queries;
      auto v4 = region::member(res.uF, p, 4);
      auto v8 = region::member(res.uF, p, 8);
      auto v16 = region::member(res.uF, p, 16);
      auto flip = [&](const region::Verdict& a, const region::Verdict& b) {
        return (a.in() && b.out()) || (a.out() && b.in());
      };
      if (flip(v4, v8) || flip(v8, v16) || flip(v4, v16)) ++flips;
      int u4 = v4.unknown(), u8 = v8.unknown(), u16 = v16.unknown();
      if (u8 > u4 || u16 > u8) ++unknown_regressions;
    }
  }
  out.note << queries << " queries at depths 4, 8, 16";
  EXPECT(flips == 0, "in/out flips: " << flips);
  EXPECT(unknown_regressions == 0, "unknown regressions: " << unknown_regressions);
  return out;
}

struct Criterion {
  int id;
  const char* label;
  double limit_s;  // 0 = no stated budget
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "regular-closedness of inputs", 30, criterion_regular_closed},
      {2, "tangent-disc cover suite", 60, criterion_cover_niem},
      {3, "base-box cover suite", 30, criterion_cover_sorg},
      {4, "certified euclidean gaps", 0, criterion_gap},
      {5, "separation radii with certificates", 300, criterion_gamma},
      {6, "tangent-disc separation pipeline", 0, criterion_separation_niem},
      {7, "lower-limit separation pipeline", 60, criterion_separation_sorg},
      {8, "swap symmetry and determinism", 0, criterion_swap_determinism},
      {9, "budget monotonicity", 0, criterion_budget_monotone},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.note << " [exception: " << e.what() << "]";
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool timed_out = c.limit_s > 0 && secs > c.limit_s;
    bool pass = out.pass && !timed_out;
    if (!pass) ++failures;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.label
              << " — " << out.note.str();
    if (timed_out) std::cout << " [over time budget " << c.limit_s << "s]";
    std::cout << " (" << (long)(secs * 10) / 10.0 << "s)\n";
    std::cout.flush();
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
