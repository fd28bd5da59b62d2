#pragma once

#include "rcsep/interval.hpp"
#include "rcsep/rational.hpp"

namespace rcsep {

// The real number a + b*sqrt(d) with rational a, b and rational d >= 0.
// This is the only irrational form the geometry ever produces: coordinates of
// circle/circle and circle/line intersections, chord endpoints, and distance
// bounds. Signs are decided exactly by squaring case analysis, never by
// approximation.
struct RootExpr {
  Rational a;
  Rational b;
  Rational d;

  RootExpr() = default;
  RootExpr(Rational a_, Rational b_, Rational d_);

  static RootExpr rational(const Rational& r) { return RootExpr(r, Rational(0), Rational(0)); }
  static RootExpr sqrt_of(const Rational& d_) { return RootExpr(Rational(0), Rational(1), d_); }

  bool is_rational() const { return b.is_zero() || d.is_zero(); }

  // Same-radicand arithmetic stays inside Q(sqrt(d)).
  RootExpr plus(const Rational& r) const { return RootExpr(a + r, b, d); }
  RootExpr times(const Rational& r) const { return RootExpr(a * r, b * r, d); }
  RootExpr negate() const { return RootExpr(-a, -b, d); }
  // Product of two expressions over the same radicand. Throws if radicands
  // differ and both irrational parts are active.
  RootExpr times(const RootExpr& o) const;
  RootExpr plus(const RootExpr& o) const;

  std::string str() const;
};

// Exact sign of a + b*sqrt(d): -1, 0 or +1. Throws std::domain_error if d < 0.
int sign_of(const RootExpr& e);

// Exact sign of (e1 - e2). The radicands may differ; resolved by a second
// squaring pass whose residual root is sqrt(e1.d * e2.d).
int sign_of_difference(const RootExpr& e1, const RootExpr& e2);

inline int compare(const RootExpr& e1, const RootExpr& e2) { return sign_of_difference(e1, e2); }

// Outward-rounded enclosure of the value with width <= 1/precision.
// Scaling factors are powers of two, so enclosures are nested as the
// precision grows. Endpoint denominators are bounded by the precision times
// the radicand's denominator. Throws std::domain_error if d < 0 or
// precision < 1.
Interval enclose(const RootExpr& e, const mpz_class& precision);

}  // namespace rcsep
