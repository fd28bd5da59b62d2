#include "rcsep/subdivision.hpp"

#include "rcsep/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcsep::niemytzki {

namespace {

constexpr std::size_t kFrontierCap = 120000;

struct Cell {
  Rational x0, x1, y0, y1;

  Vec2 mid() const { return {(x0 + x1) / Rational(2), (y0 + y1) / Rational(2)}; }
};

Rational min_dist2(const Cell& c, const Vec2& p) {
  Rational dx(0), dy(0);
  if (p.x < c.x0)
    dx = c.x0 - p.x;
  else if (p.x > c.x1)
    dx = p.x - c.x1;
  if (p.y < c.y0)
    dy = c.y0 - p.y;
  else if (p.y > c.y1)
    dy = p.y - c.y1;
  return sq(dx) + sq(dy);
}

Rational max_dist2(const Cell& c, const Vec2& p) {
  Rational dx = max((p.x - c.x0).abs(), (c.x1 - p.x).abs());
  Rational dy = max((p.y - c.y0).abs(), (c.y1 - p.y).abs());
  return sq(dx) + sq(dy);
}

// Cell provably holds no point of the closed relaxation of the filtered set:
// it misses every base disc, or it sits strictly inside a forbidden dilation.
bool cell_discardable(const FilteredSet& fs, const Cell& c) {
  bool hits_base = false;
  for (const auto& f : fs.base)
    if (min_dist2(c, f.center()) <= sq(f.radius)) {
      hits_base = true;
      break;
    }
  if (!hits_base) return true;
  for (const auto& d : fs.forbidden)
    if (max_dist2(c, d.c) < sq(d.r)) return true;
  return false;
}

// Exact membership of a rational point in the off-axis part (strict: y > 0)
// or in its closed relaxation (y >= 0, same closed constraints).
bool off_axis_member(const FilteredSet& fs, const Vec2& p, bool strict) {
  if (strict ? p.y.sign() <= 0 : p.y.sign() < 0) return false;
  bool in_base = false;
  for (const auto& f : fs.base)
    if (dist2(p, f.center()) <= sq(f.radius)) {
      in_base = true;
      break;
    }
  if (!in_base) return false;
  for (const auto& d : fs.forbidden)
    if (dist2(p, d.c) < sq(d.r)) return false;
  return true;
}

std::vector<Cell> initial_cells(const FilteredSet& fs) {
  std::vector<Cell> cells;
  cells.reserve(fs.base.size());
  for (const auto& f : fs.base) {
    Vec2 c = f.center();
    Rational y0 = c.y - f.radius;
    if (y0.sign() < 0) y0 = Rational(0);
    cells.push_back(Cell{c.x - f.radius, c.x + f.radius, y0, c.y + f.radius});
  }
  return cells;
}

void split(const Cell& c, std::vector<Cell>& out) {
  Rational mx = (c.x0 + c.x1) / Rational(2);
  Rational my = (c.y0 + c.y1) / Rational(2);
  out.push_back(Cell{c.x0, mx, c.y0, my});
  out.push_back(Cell{mx, c.x1, c.y0, my});
  out.push_back(Cell{c.x0, mx, my, c.y1});
  out.push_back(Cell{mx, c.x1, my, c.y1});
}

}  // namespace

Tri off_axis_meets(const FilteredSet& fs, const Vec2& q, const Rational& r, bool strict,
                   int max_depth, Vec2* witness, SearchStats* stats) {
  const Rational r2 = sq(r);
  auto target_excluded = [&](const Cell& c) {
    Rational d2 = min_dist2(c, q);
    return strict ? d2 >= r2 : d2 > r2;
  };
  auto try_point = [&](const Vec2& p) {
    if (!off_axis_member(fs, p, strict)) return false;
    Rational d2 = dist2(p, q);
    return strict ? d2 < r2 : d2 <= r2;
  };

  if (q.y.sign() >= 0 && try_point(q)) {
    if (witness) *witness = q;
    if (stats) stats->depth_used = 0;
    return Tri::yes;
  }

  std::vector<Cell> frontier;
  for (auto& c : initial_cells(fs))
    if (!cell_discardable(fs, c) && !target_excluded(c)) frontier.push_back(c);

  for (int depth = 0;; ++depth) {
    if (stats) stats->depth_used = depth;
    if (frontier.empty()) return Tri::no;
    for (const auto& c : frontier)
      if (try_point(c.mid())) {
        if (witness) *witness = c.mid();
        return Tri::yes;
      }
    if (depth >= max_depth) return Tri::unknown;
    std::vector<Cell> next;
    next.reserve(frontier.size() * 2);
    for (const auto& c : frontier) {
      std::vector<Cell> kids;
      kids.reserve(4);
      split(c, kids);
      for (auto& k : kids)
        if (!cell_discardable(fs, k) && !target_excluded(k)) next.push_back(std::move(k));
      if (next.size() > kFrontierCap) {
        if (stats) stats->truncated = true;
        return Tri::unknown;
      }
    }
    frontier = std::move(next);
  }
}

namespace {

struct AxisInterval {
  RootExpr lo;
  RootExpr hi;
};

// Base chords [cx - sqrt(R), cx + sqrt(R)], R = r^2 - cy^2 (when >= 0).
std::vector<AxisInterval> axis_chords(const FilteredSet& fs) {
  std::vector<AxisInterval> chords;
  for (const auto& f : fs.base) {
    Vec2 c = f.center();
    Rational R = sq(f.radius) - sq(c.y);
    if (R.sign() < 0) continue;
    chords.push_back({RootExpr(c.x, Rational(-1), R), RootExpr(c.x, Rational(1), R)});
  }
  return chords;
}

// Open forbidden windows (cx - sqrt(W), cx + sqrt(W)), W = rho^2 - (alpha-cy)^2,
// from the lifted-point constraint (t, alpha) outside each dilation.
std::vector<AxisInterval> axis_windows(const FilteredSet& fs) {
  std::vector<AxisInterval> win;
  for (const auto& d : fs.forbidden) {
    Rational W = sq(d.r) - sq(fs.alpha - d.c.y);
    if (W.sign() <= 0) continue;
    win.push_back({RootExpr(d.c.x, Rational(-1), W), RootExpr(d.c.x, Rational(1), W)});
  }
  return win;
}

bool in_open_window(const std::vector<AxisInterval>& win, const RootExpr& t) {
  for (const auto& w : win)
    if (sign_of_difference(t, w.lo) > 0 && sign_of_difference(t, w.hi) < 0) return true;
  return false;
}

}  // namespace

bool axis_member(const FilteredSet& fs, const Rational& t) {
  bool in_chord = false;
  for (const auto& f : fs.base) {
    Vec2 c = f.center();
    if (sq(t - c.x) + sq(c.y) <= sq(f.radius)) {
      in_chord = true;
      break;
    }
  }
  if (!in_chord) return false;
  for (const auto& d : fs.forbidden)
    if (sq(t - d.c.x) + sq(fs.alpha - d.c.y) < sq(d.r)) return false;
  return true;
}

bool axis_part_empty(const FilteredSet& fs) {
  std::optional<Rational> w;
  // Whole line: use a generous closed hull of all chords.
  bool any_chord = false;
  Rational lo(0), hi(0);
  for (const auto& f : fs.base) {
    Vec2 c = f.center();
    if (sq(f.radius) - sq(c.y) < Rational(0)) continue;
    any_chord = true;
    lo = min(lo, c.x - f.radius);
    hi = max(hi, c.x + f.radius);
  }
  if (!any_chord) return true;
  AxisQuery q{RootExpr::rational(lo - Rational(1)), RootExpr::rational(hi + Rational(1)), false};
  return !axis_meets(fs, q, &w);
}

Rational rational_between(const RootExpr& lo, const RootExpr& hi) {
  if (sign_of_difference(lo, hi) >= 0)
    throw std::domain_error("rational_between: bounds not strictly ordered");
  mpz_class prec = mpz_class(1) << 16;
  for (int round = 0; round < 64; ++round) {
    Interval a = enclose(lo, prec);
    Interval b = enclose(hi, prec);
    if (a.hi < b.lo) return (a.hi + b.lo) / Rational(2);
    prec <<= 4;
  }
  throw EnclosureError("rational_between: failed to separate ordered values");
}

bool axis_meets(const FilteredSet& fs, const AxisQuery& query, std::optional<Rational>* witness) {
  if (witness) witness->reset();
  const auto chords = axis_chords(fs);
  const auto windows = axis_windows(fs);

  for (const auto& chord : chords) {
    // Clamp the query interval to the chord; track whether each end is open.
    RootExpr lo = chord.lo;
    bool lo_open = false;
    if (sign_of_difference(query.lo, lo) > 0) {
      lo = query.lo;
      lo_open = query.strict;
    } else if (query.strict && sign_of_difference(query.lo, lo) == 0) {
      lo_open = true;
    }
    RootExpr hi = chord.hi;
    bool hi_open = false;
    if (sign_of_difference(query.hi, hi) < 0) {
      hi = query.hi;
      hi_open = query.strict;
    } else if (query.strict && sign_of_difference(query.hi, hi) == 0) {
      hi_open = true;
    }
    int span = sign_of_difference(lo, hi);
    if (span > 0) continue;

    // Feasible points form closed components whose left ends are either the
    // clamped lower bound or the right end of some forbidden window.
    std::vector<RootExpr> starts;
    starts.push_back(lo);
    for (const auto& w : windows) starts.push_back(w.hi);

    for (const auto& s : starts) {
      if (sign_of_difference(s, lo) < 0 || sign_of_difference(s, hi) > 0) continue;
      if (in_open_window(windows, s)) continue;
      bool ok_lo = !lo_open || sign_of_difference(s, lo) > 0;
      bool ok_hi = !hi_open || sign_of_difference(s, hi) < 0;
      if (ok_lo && ok_hi && !query.strict) return true;

      // Right barrier of the component starting at s.
      RootExpr barrier = hi;
      for (const auto& w : windows)
        if (sign_of_difference(w.lo, s) > 0 && sign_of_difference(w.lo, barrier) < 0)
          barrier = w.lo;

      if (ok_lo && ok_hi && query.strict) {
        if (witness) {
          if (s.is_rational())
            *witness = s.a;
          else if (sign_of_difference(s, barrier) < 0) {
            Rational t = rational_between(s, barrier);
            if (axis_member(fs, t)) *witness = t;
          }
        }
        return true;
      }
      // s itself is shut out only by an open endpoint; look just past it.
      if (sign_of_difference(s, barrier) < 0) {
        {
          Rational t = rational_between(s, barrier);
          bool in_target = (sign_of_difference(RootExpr::rational(t), query.lo) > 0 ||
                            (!query.strict &&
                             sign_of_difference(RootExpr::rational(t), query.lo) == 0)) &&
                           (sign_of_difference(RootExpr::rational(t), query.hi) < 0 ||
                            (!query.strict &&
                             sign_of_difference(RootExpr::rational(t), query.hi) == 0));
          if (in_target && axis_member(fs, t)) {
            if (witness) *witness = t;
            return true;
          }
        }
      }
    }
  }
  return false;
}

Rational sqrt_lower_bound(const Rational& d2) {
  if (d2.sign() <= 0) return Rational(0);
  return enclose(RootExpr::sqrt_of(d2), mpz_class(1) << 20).lo;
}

namespace {

// Exact axis contribution to the gap: minimize distance from the axis part
// to each target disc. The minimizer over a finite union of closed intervals
// sits at an interval endpoint or at the disc's abscissa.
std::optional<Rational> axis_gap(const FilteredSet& fs, const std::vector<ClosedBall>& G) {
  const auto chords = axis_chords(fs);
  if (chords.empty()) return std::nullopt;
  const auto windows = axis_windows(fs);

  std::vector<RootExpr> candidates;
  for (const auto& c : chords) {
    candidates.push_back(c.lo);
    candidates.push_back(c.hi);
  }
  for (const auto& w : windows) {
    candidates.push_back(w.lo);
    candidates.push_back(w.hi);
  }

  auto member_sym = [&](const RootExpr& t) {
    bool in_chord = false;
    for (const auto& c : chords)
      if (sign_of_difference(t, c.lo) >= 0 && sign_of_difference(t, c.hi) <= 0) {
        in_chord = true;
        break;
      }
    if (!in_chord) return false;
    return !in_open_window(windows, t);
  };

  bool any_member = false;
  bool failed = false;
  std::optional<Rational> bound;
  auto consider = [&](const RootExpr& t) {
    if (failed || !member_sym(t)) return;
    any_member = true;
    for (const auto& g : G) {
      Vec2 c = g.center();
      // squared distance (t - cx)^2 + cy^2 as a value in t's root field
      RootExpr shifted = t.plus(RootExpr::rational(-c.x));
      RootExpr d2 = shifted.times(shifted).plus(RootExpr::rational(sq(c.y)));
      mpz_class prec = mpz_class(1) << 20;
      Rational delta;
      bool got = false;
      for (int round = 0; round < 6; ++round) {
        Rational lo2 = enclose(d2, prec).lo;
        if (lo2.sign() > 0) {
          Rational d = sqrt_lower_bound(lo2) - g.radius;
          if (d.sign() > 0) {
            delta = d;
            got = true;
            break;
          }
        }
        prec <<= 8;
      }
      if (!got) {
        failed = true;
        return;
      }
      if (!bound || delta < *bound) bound = delta;
    }
  };

  for (const auto& g : G) consider(RootExpr::rational(g.center().x));
  for (const auto& t : candidates) consider(t);
  if (failed) return std::nullopt;       // separation failed at this precision
  if (!any_member) return std::nullopt;  // empty axis part, nothing to bound
  return bound;
}

}  // namespace

std::optional<Rational> euclid_closure_gap(const std::vector<ClosedBall>& F,
                                           const std::vector<ClosedBall>& G,
                                           const Rational& alpha, int depth) {
  FilteredSet fs = filtered_region(F, G, alpha);
  if (depth <= 0) return std::nullopt;

  std::vector<Vec2> centers;
  std::vector<Rational> radii;
  for (const auto& g : G) {
    centers.push_back(g.center());
    radii.push_back(g.radius);
  }

  auto cell_bound = [&](const Cell& c) -> std::optional<Rational> {
    std::optional<Rational> b;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      Rational d2 = min_dist2(c, centers[i]);
      Rational d = sqrt_lower_bound(d2) - radii[i];
      if (d.sign() <= 0) return std::nullopt;
      if (!b || d < *b) b = d;
    }
    return b;
  };

  std::vector<Cell> pending;
  for (auto& c : initial_cells(fs))
    if (!cell_discardable(fs, c)) pending.push_back(c);

  bool saw_cell = !pending.empty();
  std::optional<Rational> best;
  for (int level = 0; level <= depth && !pending.empty(); ++level) {
    std::vector<Cell> next;
    for (const auto& c : pending) {
      auto b = cell_bound(c);
      if (b) {
        if (!best || *b < *best) best = *b;
        continue;  // certified, no refinement needed
      }
      if (level == depth) return std::nullopt;  // budget exhausted with a bad cell
      std::vector<Cell> kids;
      split(c, kids);
      for (auto& k : kids)
        if (!cell_discardable(fs, k)) next.push_back(std::move(k));
      if (next.size() > kFrontierCap) return std::nullopt;
    }
    pending = std::move(next);
  }

  // Axis part (exact). Only contributes when the axis part is nonempty.
  bool axis_nonempty = !axis_part_empty(fs);
  if (axis_nonempty) {
    auto a = axis_gap(fs, G);
    if (!a) return std::nullopt;
    if (!best || *a < *best) best = *a;
  }

  if (!saw_cell && !axis_nonempty) return alpha;  // empty filtered set, vacuous bound
  if (!best) return alpha;                        // covered cells all discarded
  return best;
}

}  // namespace rcsep::niemytzki
