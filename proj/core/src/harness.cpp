#include "rcsep/harness.hpp"

#include "rcsep/errors.hpp"
#include "rcsep/subdivision.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace rcsep::harness {

namespace niem = rcsep::niemytzki;
namespace sorg = rcsep::sorgenfrey;

namespace {
constexpr int kMaxRejects = 20000;

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t Rng::next() { return splitmix(state_); }

Rng Rng::fork(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
  Rng r(s);
  r.next();
  return r;
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::domain_error("rng: below(0)");
  // Rejection to kill modulo bias; deterministic across platforms.
  std::uint64_t lim = ~0ull - (~0ull % n);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= lim);
  return v % n;
}

long Rng::range(long lo, long hi) {
  if (lo > hi) throw std::domain_error("rng: empty range");
  return lo + (long)below((std::uint64_t)(hi - lo + 1));
}

Rational Rng::rational(const Rational& lo, const Rational& hi, std::uint64_t max_den) {
  if (lo > hi) throw std::domain_error("rng: empty rational range");
  for (int tries = 0; tries < 64; ++tries) {
    std::uint64_t den = 1 + below(max_den);
    mpz_class d((unsigned long)den);
    mpz_class nlo = ceil_int(lo * Rational(mpq_class(d)));
    mpz_class nhi = floor_int(hi * Rational(mpq_class(d)));
    if (nlo > nhi) continue;
    mpz_class span = nhi - nlo + 1;
    if (!span.fits_ulong_p()) {
      // Enormous span: take a bounded slice around the low end.
      span = 1u << 16;
    }
    std::uint64_t off = below(span.get_ui());
    return Rational(mpq_class(nlo + mpz_class((unsigned long)off), d));
  }
  return lo;  // degenerate range; lo is always valid
}

// ---- scenario validation -------------------------------------------------------

void validate(const Scenario& s) {
  if (s.stages < 1) throw ScenarioError("scenario: stages must be >= 1");
  if (s.samples < 1) throw ScenarioError("scenario: samples must be >= 1");
  if (s.budget < 0) throw ScenarioError("scenario: budget must be >= 0");
  if (s.space == region::Space::niemytzki) {
    if (s.epsilon.sign() <= 0 || s.epsilon >= Rational(1))
      throw ScenarioError("scenario: epsilon must lie in (0,1)");
    niem::validate_sides(s.nF, s.nG);
  } else {
    if (s.dim < 1) throw ScenarioError("scenario: dimension must be >= 1");
    sorg::validate_sides(s.sF, s.sG);
    for (const auto& b : s.sF)
      if (b.dim() != s.dim) throw ScenarioError("scenario: F generator dimension mismatch");
    for (const auto& b : s.sG)
      if (b.dim() != s.dim) throw ScenarioError("scenario: G generator dimension mismatch");
  }
}

// ---- samplers -------------------------------------------------------------------

niem::Point sample_in_ball(const niem::ClosedBall& b, Rng& rng) {
  const niem::Vec2 c = b.center();
  Rational y_lo = max(Rational(0), c.y - b.radius);
  for (int t = 0; t < kMaxRejects; ++t) {
    niem::Point p{rng.rational(c.x - b.radius, c.x + b.radius),
                  rng.rational(y_lo, c.y + b.radius)};
    if (niem::contains(b, p)) return p;
  }
  throw SamplingError("sample_in_ball: rejection budget exhausted");
}

niem::Point sample_in_union(const std::vector<niem::ClosedBall>& gens, Rng& rng) {
  if (gens.empty()) throw SamplingError("sample_in_union: no generators");
  return sample_in_ball(gens[rng.below(gens.size())], rng);
}

namespace {

// Exact rational point on the boundary circle via the half-angle map
// t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)); the sign flip covers the far arc.
niem::Point circle_point(const niem::ClosedBall& b, Rng& rng) {
  const niem::Vec2 c = b.center();
  for (int t = 0; t < kMaxRejects; ++t) {
    Rational u = rng.rational(Rational(-4), Rational(4), 1u << 10);
    Rational den = Rational(1) + sq(u);
    Rational cx = (Rational(1) - sq(u)) / den;
    Rational sx = Rational(2) * u / den;
    if (rng.below(2)) {
      cx = -cx;
      sx = -sx;
    }
    niem::Point p{c.x + b.radius * cx, c.y + b.radius * sx};
    if (p.in_space()) return p;
  }
  throw SamplingError("circle_point: rejection budget exhausted");
}

}  // namespace

niem::Point sample_boundary_biased(const std::vector<niem::ClosedBall>& gens, Rng& rng) {
  if (gens.empty()) throw SamplingError("sample_boundary_biased: no generators");
  const auto& b = gens[rng.below(gens.size())];
  switch (rng.below(4)) {
    case 0:
    case 1:
      return circle_point(b, rng);
    case 2:
      return sample_in_ball(b, rng);
    default: {
      // Just outside: push a boundary point away from the center.
      const niem::Vec2 c = b.center();
      for (int t = 0; t < kMaxRejects; ++t) {
        niem::Point p = circle_point(b, rng);
        Rational f = Rational(1) + Rational(1, 256);
        niem::Point q{c.x + (p.x - c.x) * f, c.y + (p.y - c.y) * f};
        if (q.in_space()) return q;
      }
      throw SamplingError("sample_boundary_biased: rejection budget exhausted");
    }
  }
}

sorg::Point sample_in_box(const sorg::Box& b, Rng& rng) {
  sorg::Point p;
  p.coords.reserve(b.dim());
  for (std::size_t k = 0; k < b.dim(); ++k) {
    const Rational& lo = b.lower.coords[k];
    const Rational hi = lo + b.widths[k];
    for (int t = 0;; ++t) {
      Rational v = rng.rational(lo, hi);
      if (v < hi) {
        p.coords.push_back(v);
        break;
      }
      if (t >= kMaxRejects) throw SamplingError("sample_in_box: rejection budget exhausted");
    }
  }
  return p;
}

sorg::Point sample_in_union(const std::vector<sorg::Box>& gens, Rng& rng) {
  if (gens.empty()) throw SamplingError("sample_in_union: no generators");
  return sample_in_box(gens[rng.below(gens.size())], rng);
}

sorg::Point sample_boundary_biased(const std::vector<sorg::Box>& gens, Rng& rng) {
  if (gens.empty()) throw SamplingError("sample_boundary_biased: no generators");
  const auto& b = gens[rng.below(gens.size())];
  sorg::Point p = sample_in_box(b, rng);
  // Snap a few coordinates to faces: the lower face stays inside the
  // half-open box, the upper face leaves it.
  for (std::size_t k = 0; k < b.dim(); ++k) {
    switch (rng.below(4)) {
      case 0:
        p.coords[k] = b.lower.coords[k];
        break;
      case 1:
        p.coords[k] = b.lower.coords[k] + b.widths[k];
        break;
      default:
        break;
    }
  }
  return p;
}

std::vector<niem::Point> sample_points(const std::vector<niem::ClosedBall>& gens, long count,
                                       std::uint64_t seed) {
  std::vector<niem::Point> out;
  out.reserve(count);
  for (long i = 0; i < count; ++i) {
    Rng rng = Rng::fork(seed, (std::uint64_t)i);
    niem::Point p = sample_in_union(gens, rng);
    if (!niem::point_in_union(gens, p)) throw std::logic_error("sampler produced a stray point");
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<niem::Point> sample_boundary_points(const std::vector<niem::ClosedBall>& gens,
                                                long count, std::uint64_t seed) {
  std::vector<niem::Point> out;
  out.reserve(count);
  for (long i = 0; i < count; ++i) {
    Rng rng = Rng::fork(seed, (std::uint64_t)i);
    bool found = false;
    for (int t = 0; t < kMaxRejects && !found; ++t) {
      niem::Point p = sample_boundary_biased(gens, rng);
      if (niem::point_in_union(gens, p)) {
        out.push_back(std::move(p));
        found = true;
      }
    }
    if (!found) throw SamplingError("sample_boundary_points: rejection budget exhausted");
  }
  return out;
}

std::vector<sorg::Point> sample_points(const std::vector<sorg::Box>& gens, long count,
                                       std::uint64_t seed) {
  std::vector<sorg::Point> out;
  out.reserve(count);
  for (long i = 0; i < count; ++i) {
    Rng rng = Rng::fork(seed, (std::uint64_t)i);
    sorg::Point p = sample_in_union(gens, rng);
    if (!sorg::point_in_union(gens, p)) throw std::logic_error("sampler produced a stray point");
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<niem::Point> sample_points(const niem::FilteredSet& fs, long count,
                                       std::uint64_t seed) {
  std::vector<niem::Point> out;
  out.reserve(count);
  const bool axis_available = !niem::axis_part_empty(fs);
  for (long i = 0; i < count; ++i) {
    Rng rng = Rng::fork(seed, (std::uint64_t)i);
    bool found = false;
    for (int t = 0; t < kMaxRejects && !found; ++t) {
      niem::Point p;
      if (axis_available && rng.below(4) == 0) {
        // Axis attempt: draw an abscissa inside some base chord.
        const auto& f = fs.base[rng.below(fs.base.size())];
        niem::Vec2 c = f.center();
        p = niem::Point{rng.rational(c.x - f.radius, c.x + f.radius), Rational(0)};
      } else {
        p = sample_in_union(fs.base, rng);
      }
      if (niem::member(fs, p)) {
        out.push_back(p);
        found = true;
      }
    }
    if (!found) throw SamplingError("sample_points: filtered region looks empty");
  }
  return out;
}

std::vector<sorg::Point> sample_points(const sorg::FilteredSet& fs, long count,
                                       std::uint64_t seed) {
  std::vector<sorg::Point> out;
  out.reserve(count);
  for (long i = 0; i < count; ++i) {
    Rng rng = Rng::fork(seed, (std::uint64_t)i);
    bool found = false;
    for (int t = 0; t < kMaxRejects && !found; ++t) {
      sorg::Point p = sample_in_union(fs.base, rng);
      if (sorg::member(fs, p)) {
        out.push_back(p);
        found = true;
      }
    }
    if (!found) throw SamplingError("sample_points: filtered region looks empty");
  }
  return out;
}

// ---- reports --------------------------------------------------------------------

CheckCounts& SuiteReport::check(const std::string& label) {
  for (auto& [name, counts] : checks)
    if (name == label) return counts;
  checks.emplace_back(label, CheckCounts{});
  return checks.back().second;
}

long SuiteReport::total_fail() const {
  long n = 0;
  for (const auto& [_, c] : checks) n += c.fail;
  return n;
}

long SuiteReport::total_unknown() const {
  long n = 0;
  for (const auto& [_, c] : checks) n += c.unknown;
  return n;
}

long SuiteReport::total_queries() const {
  long n = 0;
  for (const auto& [_, c] : checks) n += c.pass + c.fail + c.unknown;
  return n;
}

std::string SuiteReport::summary() const {
  std::ostringstream os;
  os << "suite: " << name << " (seed " << seed << ")\n";
  for (const auto& [label, c] : checks) {
    os << "  " << label << ": pass " << c.pass << ", fail " << c.fail;
    if (c.unknown) os << ", unknown " << c.unknown;
    os << "\n";
  }
  if (!stage_hist.empty()) {
    os << "  stage histogram:";
    for (const auto& [stage, cnt] : stage_hist) os << " " << stage << ":" << cnt;
    os << "\n";
  }
  os << "  wall: " << (long)wall_ms << " ms\n";
  os << (total_fail() == 0 ? "  RESULT: PASS" : "  RESULT: FAIL") << "\n";
  return os.str();
}

std::string SuiteReport::csv_text() const {
  std::string out = csv_header + "\n";
  for (const auto& r : csv_rows) {
    out += r;
    out += "\n";
  }
  return out;
}

// ---- fact suites ------------------------------------------------------------------

namespace {

void run_niem_fact_trial(std::uint64_t seed, long trial, long samples_per_trial,
                         SuiteReport& rep) {
  Rng rng = Rng::fork(seed, (std::uint64_t)trial);
  bool axis_base = rng.below(2) == 0;
  niem::Point x{rng.rational(Rational(-4), Rational(4)),
                axis_base ? Rational(0) : rng.rational(Rational(1, 16), Rational(4))};
  Rational alpha = rng.rational(Rational(1, 4), Rational(2));

  Rational dx = rng.rational(Rational(-1), Rational(1));
  Rational dy_lo = x.on_axis() ? Rational(0) : -min(x.y, Rational(1));
  Rational dy = rng.rational(dy_lo, Rational(1));

  // Cover index bound: samples stay within 7/8 of the half ball, so a
  // sequence point within alpha/16 of x is a witness.
  Rational l1 = dx.abs() + dy.abs();
  long len = (long)least_n_at_least(Rational(16) * l1 / alpha).get_si() + 2;
  std::vector<niem::Point> seq;
  seq.reserve(len);
  for (long k = 1; k <= len; ++k) {
    Rational inv(mpq_class(1, (unsigned long)k));
    seq.push_back(niem::Point{x.x + dx * inv, x.y + dy * inv});
  }

  const niem::Vec2 half_center = niem::Ball{x, alpha / Rational(2)}.center();
  const Rational srad = alpha / Rational(2) * Rational(7, 8);
  std::vector<niem::Point> samples;
  samples.reserve(samples_per_trial);
  for (long s = 0; s < samples_per_trial; ++s) {
    for (int t = 0; t < kMaxRejects; ++t) {
      niem::Point p{rng.rational(half_center.x - srad, half_center.x + srad),
                    rng.rational(max(Rational(0), half_center.y - srad), half_center.y + srad)};
      if (niem::dist2(p.vec(), half_center) <= sq(srad) && !(p == x) && p.in_space()) {
        samples.push_back(p);
        break;
      }
    }
  }

  auto report = niem::cover_check(x, seq, alpha, samples);
  auto& c = rep.check("cover-inclusion");
  for (long w : report.witness) {
    if (w == 0)
      ++c.fail;
    else
      ++c.pass;
  }
}

void run_sorg_fact_trial(std::uint64_t seed, long trial, long samples_per_trial, std::size_t dim,
                         SuiteReport& rep) {
  Rng rng = Rng::fork(seed, (std::uint64_t)trial);
  sorg::Point x;
  for (std::size_t k = 0; k < dim; ++k)
    x.coords.push_back(rng.rational(Rational(-4), Rational(4)));
  long n = rng.range(1, 4);

  std::vector<Rational> dir;
  for (std::size_t k = 0; k < dim; ++k) dir.push_back(rng.rational(Rational(-1), Rational(1)));

  long len = 16 * n + 2;
  std::vector<sorg::Point> seq;
  seq.reserve(len);
  for (long j = 1; j <= len; ++j) {
    sorg::Point p;
    Rational inv(mpq_class(1, (unsigned long)j));
    for (std::size_t k = 0; k < dim; ++k) p.coords.push_back(x.coords[k] + dir[k] * inv);
    seq.push_back(std::move(p));
  }

  const std::size_t c = std::min<std::size_t>(dim, (std::size_t)n);
  const Rational w = Rational(1) / Rational(n);
  std::vector<sorg::Point> samples;
  samples.reserve(samples_per_trial);
  for (long s = 0; s < samples_per_trial; ++s) {
    sorg::Point p;
    for (std::size_t k = 0; k < dim; ++k) {
      if (k < c) {
        Rational u = rng.rational(Rational(1, 16), Rational(15, 16), 1u << 10);
        p.coords.push_back(x.coords[k] + w * u);
      } else {
        p.coords.push_back(rng.rational(Rational(-8), Rational(8)));
      }
    }
    samples.push_back(std::move(p));
  }

  auto report = sorg::cover_check(x, seq, n, samples);
  auto& counts = rep.check("cover-inclusion");
  for (long wit : report.witness) {
    if (wit == 0)
      ++counts.fail;
    else
      ++counts.pass;
  }
}

}  // namespace

SuiteReport run_fact_suites(const FactConfig& cfg) {
  if (cfg.trials < 1 || cfg.samples < 1)
    throw std::domain_error("run_fact_suites: trials and samples must be >= 1");
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.seed = cfg.seed;
  rep.name = cfg.space == region::Space::niemytzki ? "fact-suite-niemytzki"
                                                   : "fact-suite-sorgenfrey";
  for (long trial = 0; trial < cfg.trials; ++trial) {
    if (cfg.space == region::Space::niemytzki)
      run_niem_fact_trial(cfg.seed, trial, cfg.samples, rep);
    else
      run_sorg_fact_trial(cfg.seed, trial, cfg.samples, cfg.dim, rep);
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

// ---- separation suite ---------------------------------------------------------------

namespace {

std::string verdict_cell(const region::Verdict& v) { return v.str(); }

void emit_row(SuiteReport& rep, long id, const std::string& coords, const char* side,
              const region::Verdict& vF, const region::Verdict& vG, const std::string& stage) {
  std::ostringstream os;
  os << id << "," << coords << "," << side << "," << verdict_cell(vF) << "," << verdict_cell(vG)
     << "," << stage << "," << std::max(vF.depth_used, vG.depth_used);
  rep.csv_rows.push_back(os.str());
}

void run_niem_separation(const Scenario& sc, SuiteReport& rep) {
  auto res = region::separate(sc.nF, sc.nG, sc.epsilon, sc.stages);

  rep.check("open-by-construction").pass +=
      (region::open_by_construction(res.uF) && region::open_by_construction(res.uG)) ? 1 : 0;
  if (!region::open_by_construction(res.uF) || !region::open_by_construction(res.uG))
    rep.check("open-by-construction").fail += 1;

  auto fsamps = sample_points(sc.nF, sc.samples, sc.seed ^ 0xF00Dull);
  auto gsamps = sample_points(sc.nG, sc.samples, sc.seed ^ 0xBEEFull);

  // Ambient box around everything.
  Rational xlo, xhi, yhi;
  bool first = true;
  auto widen = [&](const niem::ClosedBall& b) {
    niem::Vec2 c = b.center();
    if (first) {
      xlo = c.x - b.radius;
      xhi = c.x + b.radius;
      yhi = c.y + b.radius;
      first = false;
    } else {
      xlo = min(xlo, c.x - b.radius);
      xhi = max(xhi, c.x + b.radius);
      yhi = max(yhi, c.y + b.radius);
    }
  };
  for (const auto& b : sc.nF) widen(b);
  for (const auto& b : sc.nG) widen(b);

  long id = 0;
  auto evaluate_side = [&](const std::vector<niem::Point>& pts, bool is_f, const char* tag) {
    const auto& own_expr = is_f ? res.uF : res.uG;
    const auto& other_expr = is_f ? res.uG : res.uF;
    const auto& other_gens = is_f ? sc.nG : sc.nF;
    for (const auto& p : pts) {
      auto nx = niem::stage_index(other_gens, p);
      region::Verdict v_own = region::member(own_expr, p, sc.budget);
      region::Verdict v_other = region::member(other_expr, p, sc.budget);

      if (v_own.in() && v_other.in())
        ++rep.check("disjoint-verdicts").fail;
      else
        ++rep.check("disjoint-verdicts").pass;

      auto& cov = rep.check(is_f ? "coverage-F" : "coverage-G");
      if (nx && *nx <= sc.stages) {
        if (v_own.in())
          ++cov.pass;
        else
          ++cov.fail;
      }
      if (nx && nx->fits_slong_p()) ++rep.stage_hist[nx->get_si()];

      auto& sideout = rep.check("own-side-never-out");
      if (v_own.out())
        ++sideout.fail;
      else
        ++sideout.pass;

      auto& unk = rep.check("membership-resolved");
      if (v_own.unknown() || v_other.unknown())
        ++unk.unknown;
      else
        ++unk.pass;

      region::Verdict vF = is_f ? v_own : v_other;
      region::Verdict vG = is_f ? v_other : v_own;
      emit_row(rep, id++, p.x.str() + "," + p.y.str(), tag, vF, vG,
               nx ? nx->get_str() : "inf");
    }
  };
  evaluate_side(fsamps, true, "F");
  evaluate_side(gsamps, false, "G");

  long nambient = std::max<long>(sc.samples / 2, 8);
  for (long i = 0; i < nambient; ++i) {
    Rng rng = Rng::fork(sc.seed ^ 0xA3B1ull, (std::uint64_t)i);
    niem::Point p{rng.rational(xlo - Rational(1), xhi + Rational(1)),
                  rng.rational(Rational(0), yhi + Rational(1))};
    region::Verdict vF = region::member(res.uF, p, sc.budget);
    region::Verdict vG = region::member(res.uG, p, sc.budget);
    if (vF.in() && vG.in())
      ++rep.check("disjoint-verdicts").fail;
    else
      ++rep.check("disjoint-verdicts").pass;
    auto& unk = rep.check("membership-resolved");
    if (vF.unknown() || vG.unknown())
      ++unk.unknown;
    else
      ++unk.pass;
    std::string stage = vF.in() ? std::to_string(vF.stage)
                                : (vG.in() ? std::to_string(vG.stage) : "0");
    emit_row(rep, id++, p.x.str() + "," + p.y.str(), "ambient", vF, vG, stage);
  }

  // Euclidean gap at a fixed probe scale, with sampled pair distances.
  const Rational alpha(1, 2);
  auto delta = niem::euclid_closure_gap(sc.nF, sc.nG, alpha, sc.budget);
  if (!delta) {
    ++rep.check("euclid-gap").unknown;
  } else if (delta->sign() <= 0) {
    ++rep.check("euclid-gap").fail;
  } else {
    ++rep.check("euclid-gap").pass;
    auto fs = niem::filtered_region(sc.nF, sc.nG, alpha);
    try {
      auto fpts = sample_points(fs, std::min<long>(sc.samples, 64), sc.seed ^ 0x6A9ull);
      auto gpts =
          sample_boundary_points(sc.nG, std::min<long>(sc.samples, 64), sc.seed ^ 0x5B8ull);
      auto& pairchk = rep.check("gap-pairwise");
      const Rational d2 = sq(*delta);
      for (const auto& fp : fpts)
        for (const auto& gp : gpts) {
          if (niem::dist2(fp.vec(), gp.vec()) >= d2)
            ++pairchk.pass;
          else
            ++pairchk.fail;
        }
    } catch (const SamplingError&) {
      // Empty filtered set: the bound is vacuous.
      ++rep.check("gap-pairwise").pass;
    }
  }

  // Separation radii around sampled points of G.
  auto fs_half = niem::filtered_region(sc.nF, sc.nG, alpha);
  std::vector<niem::Point> falpha;
  try {
    falpha = sample_points(fs_half, std::min<long>(sc.samples, 64), sc.seed ^ 0x91Cull);
  } catch (const SamplingError&) {
    falpha.clear();
  }
  auto pqs = sample_points(sc.nG, 8, sc.seed ^ 0x77Dull);
  for (const auto& pq : pqs) {
    niem::GammaCertificate cert;
    try {
      cert = niem::separation_gamma(sc.nF, sc.nG, alpha, sc.epsilon, pq, sc.budget);
    } catch (const EnclosureError&) {
      ++rep.check("gamma-certificate").unknown;
      continue;
    }
    auto& cchk = rep.check("gamma-certificate");
    if (cert.gamma.sign() > 0 && niem::check_gamma_certificate(cert, alpha, sc.epsilon))
      ++cchk.pass;
    else
      ++cchk.fail;

    auto& dchk = rep.check("gamma-disjointness");
    niem::Ball pq_ball = niem::ball(pq, cert.gamma);
    niem::ClosedBall pq_closed = niem::closed_ball(pq, cert.gamma);
    const Rational ea = sc.epsilon * alpha;
    for (const auto& fp : falpha) {
      niem::Ball probe = niem::ball(fp, ea);
      if (!niem::meets(probe, pq_closed) && !niem::meets(probe, pq_ball))
        ++dchk.pass;
      else
        ++dchk.fail;
    }
  }
}

void run_sorg_separation(const Scenario& sc, SuiteReport& rep) {
  auto res = region::separate(sc.sF, sc.sG, sc.stages);

  if (region::open_by_construction(res.uF) && region::open_by_construction(res.uG))
    ++rep.check("open-by-construction").pass;
  else
    ++rep.check("open-by-construction").fail;

  auto fsamps = sample_points(sc.sF, sc.samples, sc.seed ^ 0xF00Dull);
  auto gsamps = sample_points(sc.sG, sc.samples, sc.seed ^ 0xBEEFull);

  std::vector<Rational> lo(sc.dim), hi(sc.dim);
  bool first = true;
  auto widen = [&](const sorg::Box& b) {
    for (std::size_t k = 0; k < sc.dim; ++k) {
      Rational l = b.lower.coords[k], h = l + b.widths[k];
      if (first) {
        lo[k] = l;
        hi[k] = h;
      } else {
        lo[k] = min(lo[k], l);
        hi[k] = max(hi[k], h);
      }
    }
    first = false;
  };
  for (const auto& b : sc.sF) widen(b);
  for (const auto& b : sc.sG) widen(b);

  auto coords_str = [](const sorg::Point& p) {
    std::string s;
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (k) s += ",";
      s += p.coords[k].str();
    }
    return s;
  };

  long id = 0;
  auto evaluate_side = [&](const std::vector<sorg::Point>& pts, bool is_f, const char* tag) {
    const auto& own_expr = is_f ? res.uF : res.uG;
    const auto& other_expr = is_f ? res.uG : res.uF;
    const auto& other_gens = is_f ? sc.sG : sc.sF;
    for (const auto& p : pts) {
      auto nx = sorg::stage_index(other_gens, p);
      region::Verdict v_own = region::member(own_expr, p, sc.budget);
      region::Verdict v_other = region::member(other_expr, p, sc.budget);

      if (v_own.in() && v_other.in())
        ++rep.check("disjoint-verdicts").fail;
      else
        ++rep.check("disjoint-verdicts").pass;

      auto& cov = rep.check(is_f ? "coverage-F" : "coverage-G");
      bool stage_match = nx && nx->fits_slong_p() && v_own.stage == nx->get_si();
      if (v_own.in() && stage_match)
        ++cov.pass;
      else
        ++cov.fail;
      if (nx && nx->fits_slong_p()) ++rep.stage_hist[nx->get_si()];

      auto& unk = rep.check("exactness");
      if (v_own.unknown() || v_other.unknown())
        ++unk.fail;  // the exact engine must never say unknown
      else
        ++unk.pass;

      region::Verdict vF = is_f ? v_own : v_other;
      region::Verdict vG = is_f ? v_other : v_own;
      emit_row(rep, id++, coords_str(p), tag, vF, vG, nx ? nx->get_str() : "inf");
    }
  };
  evaluate_side(fsamps, true, "F");
  evaluate_side(gsamps, false, "G");

  long nambient = std::max<long>(sc.samples / 2, 8);
  for (long i = 0; i < nambient; ++i) {
    Rng rng = Rng::fork(sc.seed ^ 0xA3B1ull, (std::uint64_t)i);
    sorg::Point p;
    for (std::size_t k = 0; k < sc.dim; ++k)
      p.coords.push_back(rng.rational(lo[k] - Rational(1), hi[k] + Rational(1)));
    region::Verdict vF = region::member(res.uF, p, sc.budget);
    region::Verdict vG = region::member(res.uG, p, sc.budget);
    if (vF.in() && vG.in())
      ++rep.check("disjoint-verdicts").fail;
    else
      ++rep.check("disjoint-verdicts").pass;
    auto& unk = rep.check("exactness");
    if (vF.unknown() || vG.unknown())
      ++unk.fail;
    else
      ++unk.pass;
    std::string stage = vF.in() ? std::to_string(vF.stage)
                                : (vG.in() ? std::to_string(vG.stage) : "0");
    emit_row(rep, id++, coords_str(p), "ambient", vF, vG, stage);
  }

  // Scale certificates: probe boxes of sampled G points never meet the
  // filtered F side at double scale.
  const long n = 1;
  auto fsn = sorg::filtered_region(sc.sF, sc.sG, n);
  std::vector<sorg::Point> ys;
  try {
    ys = sample_points(fsn, std::min<long>(sc.samples, 32), sc.seed ^ 0x3E7ull);
  } catch (const SamplingError&) {
    ys.clear();
  }
  auto xs = sample_points(sc.sG, std::min<long>(sc.samples, 32), sc.seed ^ 0x9C1ull);
  auto& schk = rep.check("scale-conclusion");
  for (const auto& x : xs) {
    sorg::ScaleCertificate cert = sorg::separation_scale(sc.sF, sc.sG, n, x);
    if (!sorg::check_scale_certificate(cert, sc.sG, n)) {
      ++rep.check("scale-certificate").fail;
      continue;
    }
    ++rep.check("scale-certificate").pass;
    for (const auto& y : ys) {
      if (!sorg::meets(sorg::pbox(y, 2 * n), sorg::pbox(x, cert.m)))
        ++schk.pass;
      else
        ++schk.fail;
    }
  }
}

}  // namespace

SuiteReport run_separation_suite(const Scenario& sc) {
  validate(sc);
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.name = sc.name;
  rep.seed = sc.seed;
  rep.csv_header = sc.space == region::Space::niemytzki
                       ? "sample_id,x,y,side,verdict_uF,verdict_uG,stage_n,depth_used"
                       : [&] {
                           std::string h = "sample_id";
                           for (std::size_t k = 0; k < sc.dim; ++k)
                             h += ",x" + std::to_string(k);
                           return h + ",side,verdict_uF,verdict_uG,stage_n,depth_used";
                         }();
  if (sc.space == region::Space::niemytzki)
    run_niem_separation(sc, rep);
  else
    run_sorg_separation(sc, rep);
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

}  // namespace rcsep::harness
