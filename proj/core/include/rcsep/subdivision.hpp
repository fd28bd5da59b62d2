#pragma once

#include "rcsep/niemytzki.hpp"
#include "rcsep/rational.hpp"
#include "rcsep/root_expr.hpp"

#include <optional>

namespace rcsep::niemytzki {

enum class Tri { yes, no, unknown };

struct SearchStats {
  int depth_used = 0;
  bool truncated = false;
};

// Certified searches against the off-axis part of a filtered set.
//
// strict = true: is there x with y > 0, x in the filtered set and
// |x - q| < r? A yes comes with an exact rational witness. strict = false:
// does the closed relaxation of the off-axis part (which contains its
// Euclidean closure) meet the closed disc around q? Both answers are decided
// by quadtree subdivision with exact cell predicates; unknown only on budget
// exhaustion.
Tri off_axis_meets(const FilteredSet& fs, const Vec2& q, const Rational& r, bool strict,
                   int max_depth, Vec2* witness, SearchStats* stats);

// The axis part {t : (t,0) in the filtered set} is an exactly representable
// closed subset of the line: base chords minus open forbidden windows, all
// endpoints of the form rational + rational*sqrt(rational). Queries against
// it are decided exactly, never unknown.
struct AxisQuery {
  RootExpr lo;
  RootExpr hi;
  bool strict = false;  // open target interval (and a rational witness is wanted)
};

bool axis_meets(const FilteredSet& fs, const AxisQuery& query, std::optional<Rational>* witness);

bool axis_member(const FilteredSet& fs, const Rational& t);
bool axis_part_empty(const FilteredSet& fs);

// Certified positive Euclidean gap between the closure of the filtered set of
// F at scale alpha and the union G. Subdivision for the off-axis part, exact
// endpoint analysis for the axis part. nullopt when the budget `depth` is
// exhausted (never a wrong bound); depth <= 0 always exhausts. Returns alpha
// when the filtered set is empty (the bound is vacuous).
std::optional<Rational> euclid_closure_gap(const std::vector<ClosedBall>& F,
                                           const std::vector<ClosedBall>& G,
                                           const Rational& alpha, int depth);

// Rational strictly between two exactly-ordered values.
Rational rational_between(const RootExpr& lo, const RootExpr& hi);

// Certified rational lower bound for sqrt(d2), d2 >= 0.
Rational sqrt_lower_bound(const Rational& d2);

}  // namespace rcsep::niemytzki
