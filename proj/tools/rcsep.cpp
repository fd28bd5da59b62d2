// Command line front end: scenario ingestion, suite dispatch, CSV/SVG
// emission. Batch only; exit codes are 0 (pass), 1 (failed check),
// 2 (usage or parse error), 3 (unknown-rate breach).

#include "CLI11.hpp"

#include "rcsep/errors.hpp"
#include "rcsep/harness.hpp"
#include "rcsep/niemytzki.hpp"
#include "rcsep/region.hpp"
#include "rcsep/scenario_io.hpp"
#include "rcsep/sorgenfrey.hpp"
#include "rcsep/subdivision.hpp"
#include "rcsep/svg.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace rcsep;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknownRate = 3;

struct CommonOpts {
  std::string scenario_path;
  std::string out_dir;
  bool emit_svg = false;
  long samples = -1;
  long stages = -1;
  long trials = -1;
  int depth = -1;
  long seed = -1;
};

harness::Scenario load_with_overrides(const CommonOpts& o) {
  harness::Scenario sc = scenario_io::load_scenario_file(o.scenario_path);
  if (o.samples > 0) sc.samples = o.samples;
  if (o.stages > 0) sc.stages = o.stages;
  if (o.depth >= 0) sc.budget = o.depth;
  if (o.seed >= 0) sc.seed = (std::uint64_t)o.seed;
  return sc;
}

void write_outputs(const CommonOpts& o, const harness::Scenario& sc,
                   const harness::SuiteReport& rep) {
  if (o.out_dir.empty()) return;
  fs::create_directories(o.out_dir);
  std::ofstream csv(fs::path(o.out_dir) / (sc.name + ".csv"), std::ios::binary);
  csv << rep.csv_text();
  if (o.emit_svg) {
    std::ofstream svg_file(fs::path(o.out_dir) / (sc.name + ".svg"), std::ios::binary);
    svg_file << svg::render_scatter(sc, rep);
  }
}

double unknown_rate(const harness::SuiteReport& rep) {
  long resolved = 0, unknown = 0;
  for (const auto& [label, c] : rep.checks) {
    if (label == "membership-resolved" || label == "exactness") {
      resolved += c.pass;
      unknown += c.unknown;
    }
  }
  long total = resolved + unknown;
  return total == 0 ? 0.0 : (double)unknown / (double)total;
}

int finish(const harness::SuiteReport& rep) {
  std::cout << rep.summary();
  if (rep.total_fail() > 0) return kExitFail;
  if (unknown_rate(rep) > 0.05) return kExitUnknownRate;
  return kExitPass;
}

niemytzki::Point parse_npoint(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ScenarioError("point must be written as x,y with rational coordinates");
  return niemytzki::Point{Rational::parse(text.substr(0, comma)),
                          Rational::parse(text.substr(comma + 1))};
}

sorgenfrey::Point parse_spoint(const std::string& text) {
  sorgenfrey::Point p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string cell =
        comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    p.coords.push_back(Rational::parse(cell));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact separation engine for tangent-disc and lower-limit plane scenarios"};
  app.require_subcommand(1);

  CommonOpts opt;
  std::string point_text;
  std::string alpha_text = "1/2";
  std::string epsilon_text;
  std::string scenario_dir;
  long little_n = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_scenario) {
    if (needs_scenario)
      cmd->add_option("--scenario", opt.scenario_path, "scenario file")->required();
    cmd->add_option("--samples", opt.samples, "override sample count");
    cmd->add_option("--seed", opt.seed, "override seed");
    cmd->add_option("--depth", opt.depth, "override subdivision budget");
    cmd->add_option("--stages", opt.stages, "override stage count");
    cmd->add_option("--out", opt.out_dir, "directory for CSV (and SVG) output");
    cmd->add_flag("--svg", opt.emit_svg, "also write an SVG scatter");
  };

  auto* cmd_fact1 = app.add_subcommand("check-fact1", "randomized tangent-disc cover suite");
  cmd_fact1->add_option("--trials", opt.trials, "number of random configurations");
  add_common(cmd_fact1, false);

  auto* cmd_sf1 = app.add_subcommand("check-sf1", "randomized base-box cover suite");
  long sf1_dim = 1;
  cmd_sf1->add_option("--trials", opt.trials, "number of random configurations");
  cmd_sf1->add_option("--dim", sf1_dim, "product dimension");
  add_common(cmd_sf1, false);

  auto* cmd_gap = app.add_subcommand("gap", "certified Euclidean gap of the filtered set");
  cmd_gap->add_option("--alpha", alpha_text, "probe scale (rational)");
  add_common(cmd_gap, true);

  auto* cmd_gamma = app.add_subcommand("gamma", "separation radius around a point of G");
  cmd_gamma->add_option("--point", point_text, "query point of G, as x,y")->required();
  cmd_gamma->add_option("--alpha", alpha_text, "probe scale (rational)");
  cmd_gamma->add_option("--epsilon", epsilon_text, "shrink factor in (0,1)");
  add_common(cmd_gamma, true);

  auto* cmd_l6 = app.add_subcommand("lemma6", "scale certificate around a point of G");
  cmd_l6->add_option("--point", point_text, "query point of G, comma separated")->required();
  cmd_l6->add_option("--n", little_n, "probe stage n");
  add_common(cmd_l6, true);

  auto* cmd_sep = app.add_subcommand("separate", "build the two open sides and verify samples");
  add_common(cmd_sep, true);

  auto* cmd_suite = app.add_subcommand("suite", "run every scenario in a directory");
  cmd_suite->add_option("--scenario-dir", scenario_dir, "directory of scenario files")
      ->required();
  add_common(cmd_suite, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_fact1 || *cmd_sf1) {
      harness::FactConfig cfg;
      cfg.space = *cmd_fact1 ? region::Space::niemytzki : region::Space::sorgenfrey;
      cfg.dim = (std::size_t)std::max<long>(1, sf1_dim);
      if (opt.trials > 0) cfg.trials = opt.trials;
      if (opt.samples > 0) cfg.samples = opt.samples;
      if (opt.seed >= 0) cfg.seed = (std::uint64_t)opt.seed;
      auto rep = harness::run_fact_suites(cfg);
      return finish(rep);
    }

    if (*cmd_gap) {
      auto sc = load_with_overrides(opt);
      if (sc.space != region::Space::niemytzki)
        throw ScenarioError("gap expects a niemytzki scenario");
      Rational alpha = Rational::parse(alpha_text);
      auto delta = niemytzki::euclid_closure_gap(sc.nF, sc.nG, alpha, sc.budget);
      if (!delta) {
        std::cout << "gap: unknown (budget exhausted at depth " << sc.budget << ")\n";
        return kExitUnknownRate;
      }
      std::cout << "gap: " << delta->str() << "\n";
      return kExitPass;
    }

    if (*cmd_gamma) {
      auto sc = load_with_overrides(opt);
      if (sc.space != region::Space::niemytzki)
        throw ScenarioError("gamma expects a niemytzki scenario");
      Rational alpha = Rational::parse(alpha_text);
      Rational eps = epsilon_text.empty() ? sc.epsilon : Rational::parse(epsilon_text);
      auto pq = parse_npoint(point_text);
      auto cert = niemytzki::separation_gamma(sc.nF, sc.nG, alpha, eps, pq, sc.budget);
      std::cout << "gamma: " << cert.gamma.str() << "\n";
      std::cout << "case: " << (cert.kind == niemytzki::GammaCase::interior ? "interior" : "boundary")
                << "\n";
      std::cout << "interior_bound: " << cert.interior_bound.str() << "\n";
      if (cert.kind == niemytzki::GammaCase::boundary) {
        std::cout << "beta: " << cert.beta.str() << "\n";
        std::cout << "anchor_x: " << cert.anchor_x.str() << "\n";
        std::cout << "a_point: (" << cert.a_x.str() << ", " << cert.a_y.str() << ")\n";
        std::cout << "c_point: (" << cert.c_x.str() << ", " << cert.c_y.str() << ")\n";
        std::cout << "line: " << cert.line.a_coeff.str() << " * x + (" << cert.line.b_coeff.str()
                  << ") * y + (" << cert.line.c_coeff.str() << ") = 0\n";
        std::cout << "ac_gap_lower: " << cert.ac_gap_lower.str() << "\n";
      }
      bool ok = niemytzki::check_gamma_certificate(cert, alpha, eps);
      std::cout << "certificate: " << (ok ? "verified" : "FAILED") << "\n";
      return ok ? kExitPass : kExitFail;
    }

    if (*cmd_l6) {
      auto sc = load_with_overrides(opt);
      if (sc.space != region::Space::sorgenfrey)
        throw ScenarioError("lemma6 expects a sorgenfrey scenario");
      auto x = parse_spoint(point_text);
      auto cert = sorgenfrey::separation_scale(sc.sF, sc.sG, little_n, x);
      std::cout << "m: " << cert.m << "\n";
      std::cout << "i: " << cert.i << "\n";
      std::cout << "host_generator: " << cert.host << "\n";
      std::cout << "p: " << cert.p.str() << "\n";
      bool ok = sorgenfrey::check_scale_certificate(cert, sc.sG, little_n);
      std::cout << "certificate: " << (ok ? "verified" : "FAILED") << "\n";
      return ok ? kExitPass : kExitFail;
    }

    if (*cmd_sep) {
      auto sc = load_with_overrides(opt);
      auto rep = harness::run_separation_suite(sc);
      write_outputs(opt, sc, rep);
      return finish(rep);
    }

    if (*cmd_suite) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(scenario_dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      if (files.empty()) throw ScenarioError("no scenario files in " + scenario_dir);

      long fails = 0, resolved = 0, unknowns = 0;
      for (const auto& f : files) {
        harness::Scenario sc = scenario_io::load_scenario_file(f.string());
        if (opt.samples > 0) sc.samples = opt.samples;
        if (opt.stages > 0) sc.stages = opt.stages;
        if (opt.depth >= 0) sc.budget = opt.depth;
        if (opt.seed >= 0) sc.seed = (std::uint64_t)opt.seed;
        auto rep = harness::run_separation_suite(sc);
        write_outputs(opt, sc, rep);
        std::cout << rep.summary() << "\n";
        fails += rep.total_fail();
        for (const auto& [label, c] : rep.checks)
          if (label == "membership-resolved" || label == "exactness") {
            resolved += c.pass;
            unknowns += c.unknown;
          }
      }
      std::cout << "aggregate: " << files.size() << " scenarios, " << fails << " failures, "
                << unknowns << " unknown\n";
      if (fails > 0) return kExitFail;
      if (resolved + unknowns > 0 &&
          (double)unknowns / (double)(resolved + unknowns) > 0.05)
        return kExitUnknownRate;
      return kExitPass;
    }
  } catch (const ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
