#pragma once

#include "rcsep/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rcsep::sorgenfrey {

// Finite-dimensional product of lower-limit lines. Base neighborhoods
// constrain the first min(n, d) coordinates to half-open intervals of width
// 1/n; the remaining coordinates are free. Everything here is decided with
// exact rational arithmetic and no approximation.

struct Point {
  std::vector<Rational> coords;

  std::size_t dim() const { return coords.size(); }
  std::string str() const;
  friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
};

// P(x, n): the base box anchored at x.
struct BaseBox {
  Point anchor;
  long n = 1;

  std::size_t dim() const { return anchor.dim(); }
  std::size_t constrained() const { return std::min<std::size_t>(dim(), (std::size_t)n); }
  Rational width() const { return Rational(1) / Rational(n); }
};

// Generator box: every coordinate constrained to [lower_k, lower_k+width_k).
// Clopen, hence regular closed.
struct Box {
  Point lower;
  std::vector<Rational> widths;

  std::size_t dim() const { return lower.dim(); }
};

BaseBox pbox(const Point& x, long n);
Box box(const Point& lower, const std::vector<Rational>& widths);

bool contains(const BaseBox& b, const Point& q);
bool contains(const Box& b, const Point& q);

bool meets(const BaseBox& a, const BaseBox& b);
bool meets(const BaseBox& a, const Box& b);
bool meets(const Box& a, const Box& b);

bool point_in_union(const std::vector<Box>& gens, const Point& p);

void validate_sides(const std::vector<Box>& F, const std::vector<Box>& G);

// Componentwise-open forbidden window derived from one G generator at probe
// scale n: anchors x with P(x, n) meeting that generator.
struct ForbiddenBox {
  std::vector<Rational> lo;  // g_k - 1/n
  std::vector<Rational> hi;  // g_k + s_k
};

// F_{G,n}: anchors in F whose probe box P(x, n) misses G.
struct FilteredSet {
  long n = 1;
  std::size_t dim = 0;
  std::vector<Box> base;
  std::vector<ForbiddenBox> forbidden;
};

FilteredSet filtered_region(const std::vector<Box>& F, const std::vector<Box>& G, long n);

bool member(const FilteredSet& fs, const Point& x);

bool member_direct(const std::vector<Box>& F, const std::vector<Box>& G, long n, const Point& x);
bool member_direct_unchecked(const std::vector<Box>& F, const std::vector<Box>& G, long n,
                             const Point& x);

// Least n >= 1 with P(x, n) missing every generator of G; nullopt if x lies
// in G. Closed-form integer arithmetic.
std::optional<mpz_class> stage_index(const std::vector<Box>& G, const Point& x);

// ---- scale certificate around a point of G ----------------------------------

// Witnesses that P(y, 2n) misses P(x, m) for every y in the filtered set:
// P(p, i) is a base box inside the host generator and inside P(x, 2n) with
// x_k < p_k on the constrained coordinates, and 1/m < p_k - x_k.
struct ScaleCertificate {
  Point x;
  Point p;
  long i = 0;
  long m = 0;
  std::size_t host = 0;
};

ScaleCertificate separation_scale(const std::vector<Box>& F, const std::vector<Box>& G, long n,
                                  const Point& x);

bool check_scale_certificate(const ScaleCertificate& cert, const std::vector<Box>& G, long n);

// ---- coordinate-interval queries against the filtered set -------------------

// Per-coordinate target interval with openness flags; a missing entry leaves
// the coordinate unconstrained.
struct CoordInterval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;
};

using TargetBox = std::vector<std::optional<CoordInterval>>;

// Exact: is there x in the filtered set with x_k in the target interval for
// every constrained k? Returns a rational witness.
std::optional<Point> feasible_point(const FilteredSet& fs, const TargetBox& target);

// Exact: does the Euclidean closure of the filtered set meet the closed
// target box?
bool closure_meets(const FilteredSet& fs, const TargetBox& target);

// ---- sequence cover reports --------------------------------------------------

struct CoverReport {
  std::vector<long> witness;
  long violations = 0;
};

// Samples must lie in the open Euclidean interior of P(x, n) on constrained
// coordinates. Reports the least 1-based index j with the sample in
// P(seq[j-1], n), 0 for a violation.
CoverReport cover_check(const Point& x, const std::vector<Point>& seq, long n,
                        const std::vector<Point>& samples);

}  // namespace rcsep::sorgenfrey
