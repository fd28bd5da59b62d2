#pragma once

#include "rcsep/rational.hpp"
#include "rcsep/root_expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rcsep::niemytzki {

// The space is the closed upper half plane. Off-axis points get clipped open
// Euclidean discs as basic neighborhoods; axis points get an open disc
// tangent from above plus the tangency point itself.

struct Vec2 {
  Rational x;
  Rational y;
};

inline Rational dist2(const Vec2& a, const Vec2& b) { return sq(a.x - b.x) + sq(a.y - b.y); }

struct Point {
  Rational x;
  Rational y;

  bool in_space() const { return y.sign() >= 0; }
  bool on_axis() const { return y.is_zero(); }
  Vec2 vec() const { return {x, y}; }
  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

// Plain Euclidean disc, used for effective discs and their dilations.
struct Disc {
  Vec2 c;
  Rational r;
};

// Basic open neighborhood. For an off-axis anchor this is the open disc
// around the anchor clipped to the half plane; for an axis anchor it is the
// anchor plus the open disc of the same radius tangent at the anchor. The
// effective center is the Euclidean disc center in both cases; it always has
// y > 0.
struct Ball {
  Point anchor;
  Rational radius;

  bool tangent() const { return anchor.on_axis(); }
  Vec2 center() const { return tangent() ? Vec2{anchor.x, radius} : anchor.vec(); }
};

// Closure of a Ball: the closed effective disc intersected with the half
// plane. The closure of a tangent ball picks up its whole boundary circle;
// the closure of a clipped disc picks up every axis point of the closed disc
// (transversal crossings and tangency points alike).
struct ClosedBall {
  Point anchor;
  Rational radius;

  bool tangent_anchor() const { return anchor.on_axis(); }
  Vec2 center() const { return tangent_anchor() ? Vec2{anchor.x, radius} : anchor.vec(); }
  Disc disc() const { return {center(), radius}; }
};

Ball ball(const Point& anchor, const Rational& radius);
ClosedBall closed_ball(const Point& anchor, const Rational& radius);
ClosedBall closure(const Ball& b);

bool contains(const Ball& b, const Point& q);
bool contains(const ClosedBall& c, const Point& q);

// Exact intersection predicates between basic sets. All three reduce to one
// squared comparison of effective centers: any common point below the axis
// reflects to a strictly closer one above it because both centers have
// y > 0, and a tangency anchor inside a closed disc forces the strict center
// inequality as well. Documented and oracle-tested.
bool meets(const Ball& a, const Ball& b);
bool meets(const Ball& a, const ClosedBall& b);
bool meets(const ClosedBall& a, const ClosedBall& b);

bool point_in_union(const std::vector<ClosedBall>& gens, const Point& p);

// Throws ScenarioError unless both sides are nonempty, every generator is
// valid, and the two unions are disjoint.
void validate_sides(const std::vector<ClosedBall>& F, const std::vector<ClosedBall>& G);

// The filtered subset of F at probe scale alpha: points of F whose basic
// ball of radius alpha misses G. Exact representation: F generators minus
// one open forbidden dilation per G generator (radius alpha + r_g around the
// effective center), applied to the point itself when y > 0 and to the
// lifted point (x, alpha) when y = 0.
struct FilteredSet {
  Rational alpha;
  std::vector<ClosedBall> base;
  std::vector<Disc> forbidden;  // dilated G discs

  bool empty_base() const { return base.empty(); }
};

FilteredSet filtered_region(const std::vector<ClosedBall>& F, const std::vector<ClosedBall>& G,
                            const Rational& alpha);

// Membership through the semialgebraic representation.
bool member(const FilteredSet& fs, const Point& p);

// Membership through the ball predicates; validates p in F and the side
// invariants. The two routes must agree everywhere.
bool member_direct(const std::vector<ClosedBall>& F, const std::vector<ClosedBall>& G,
                   const Rational& alpha, const Point& p);
// Same predicate route without re-validating the sides (for inner loops).
bool member_direct_unchecked(const std::vector<ClosedBall>& F, const std::vector<ClosedBall>& G,
                             const Rational& alpha, const Point& p);

// Least n >= 1 with ball(x, 1/n) missing every generator of G, or nullopt if
// x touches G itself. Exact integer arithmetic.
std::optional<mpz_class> stage_index(const std::vector<ClosedBall>& G, const Point& x);

// ---- separation radius around a point of G ----------------------------------

enum class GammaCase { interior, boundary };

// Line through (anchor_x, eps*alpha) and the a-point, as A*x + B*y + C = 0
// with B, C in the a-point's root field.
struct LineCoeffs {
  Rational a_coeff;
  RootExpr b_coeff;
  RootExpr c_coeff;
};

// Certificate for a radius gamma such that every basic ball of radius
// eps*alpha anchored in the filtered set misses ball(pq, gamma).
//
// interior: gamma = alpha(1-eps)/2 covers off-axis anchors.
// boundary: the filtered set may touch the axis. beta bounds the Euclidean
// gap between the filtered set and G; the a-point is the upper intersection
// of the circles C((x0,0),beta) and C((x0,alpha),alpha) with a > x0; the
// c-point is the intersection of the line through (x0, eps*alpha) and the
// a-point with C((x0,eps*alpha), eps*alpha) on the same side. The horizontal
// gap |a - c| is independent of x0, so one certificate serves every axis
// anchor; ac_gap_lower is a certified rational lower bound for it and
// 2*gamma < ac_gap_lower. The final gamma also respects the interior bound.
struct GammaCertificate {
  GammaCase kind = GammaCase::interior;
  Rational gamma;
  Rational interior_bound;

  // boundary case fields
  Rational beta;
  Rational anchor_x;  // reference abscissa, construction is translation invariant
  RootExpr a_x, a_y;
  RootExpr c_x, c_y;
  LineCoeffs line;
  Rational ac_gap_lower;
};

// Computes gamma for the point pq of G. depth drives the Euclidean-gap
// subdivision and the enclosure precision. known_gap may carry a certified
// bound from an earlier euclid_closure_gap call over the same F, G, alpha to
// skip the subdivision. Throws PreconditionError if pq is not in G,
// std::domain_error on bad parameters, EnclosureError if the requested
// precision cannot separate the gap.
GammaCertificate separation_gamma(const std::vector<ClosedBall>& F,
                                  const std::vector<ClosedBall>& G, const Rational& alpha,
                                  const Rational& epsilon, const Point& pq, int depth,
                                  bool force_interior = false,
                                  const std::optional<Rational>& known_gap = std::nullopt);

// Re-derives every stated identity and inequality of the certificate with
// exact sign computations. Returns false on any mismatch.
bool check_gamma_certificate(const GammaCertificate& cert, const Rational& alpha,
                             const Rational& epsilon);

// ---- sequence cover reports --------------------------------------------------

// For each sample in the half-radius ball around x (minus x itself), the
// least 1-based index n with sample in ball(seq[n-1], alpha); 0 marks a
// violation (no index within the supplied sequence).
struct CoverReport {
  std::vector<long> witness;
  long violations = 0;
};

CoverReport cover_check(const Point& x, const std::vector<Point>& seq, const Rational& alpha,
                        const std::vector<Point>& samples);

}  // namespace rcsep::niemytzki
