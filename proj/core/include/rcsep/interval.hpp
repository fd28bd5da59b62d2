#pragma once

#include "rcsep/rational.hpp"

#include <stdexcept>

namespace rcsep {

// Closed rational interval [lo, hi]. Sums, differences and products of
// rational endpoints are exact, so the arithmetic below returns the precise
// hull of the image; enclosures of irrational values enter only through
// RootExpr::enclose, which rounds outward.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::domain_error("interval: lo > hi");
  }
  static Interval point(const Rational& r) { return Interval(r, r); }

  Rational width() const { return hi - lo; }
  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo - b.hi, a.hi - b.lo);
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
  }
  Interval operator-() const { return Interval(-hi, -lo); }
};

}  // namespace rcsep
