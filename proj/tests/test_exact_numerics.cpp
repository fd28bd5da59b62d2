#include "doctest.h"

#include "rcsep/harness.hpp"
#include "rcsep/interval.hpp"
#include "rcsep/rational.hpp"
#include "rcsep/root_expr.hpp"

using namespace rcsep;
using harness::Rng;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("3/4").str() == "3/4");
  CHECK(Rational::parse("-6/8").str() == "-3/4");
  CHECK(Rational::parse("+5").str() == "5");
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK(Rational(6, 8) == Rational(3, 4));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
}

TEST_CASE("denominator-capped rounding brackets the value") {
  Rng rng(11);
  mpz_class cap(64);
  for (int i = 0; i < 2000; ++i) {
    Rational r = rng.rational(Rational(-10), Rational(10), 1u << 14);
    Rational lo = round_down(r, cap);
    Rational hi = round_up(r, cap);
    CHECK(lo <= r);
    CHECK(r <= hi);
    CHECK(hi - lo <= Rational(2, 64));
    CHECK(lo.den() <= 64);
    CHECK(hi.den() <= 64);
  }
}

TEST_CASE("least integer helpers") {
  CHECK(least_n_with_inverse_below(Rational(1, 4)) == 5);
  CHECK(least_n_with_inverse_below(Rational(2, 9)) == 5);
  CHECK(least_n_with_inverse_below(Rational(3)) == 1);
  CHECK(least_n_at_least(Rational(7, 2)) == 4);
  CHECK(least_n_at_least(Rational(-5)) == 1);
}

TEST_CASE("sign of one-root expressions") {
  CHECK(sign_of(RootExpr(Rational(0), Rational(0), Rational(2))) == 0);
  // sqrt(2) > 1
  CHECK(sign_of(RootExpr(Rational(-1), Rational(1), Rational(2))) == 1);
  // 3 - 2 sqrt(2): compare 9 against 8
  CHECK(sign_of(RootExpr(Rational(3), Rational(-2), Rational(2))) == 1);
  CHECK(sign_of(RootExpr(Rational(-3), Rational(2), Rational(2))) == -1);
  // 2 - sqrt(4) = 0
  CHECK(sign_of(RootExpr(Rational(2), Rational(-1), Rational(4))) == 0);
  CHECK_THROWS_AS(RootExpr(Rational(0), Rational(1), Rational(-1)), std::domain_error);
}

TEST_CASE("sign agrees with rational evaluation on perfect squares") {
  Rng rng(17);
  for (int i = 0; i < 100000; ++i) {
    Rational a = rng.rational(Rational(-8), Rational(8), 1u << 8);
    Rational b = rng.rational(Rational(-8), Rational(8), 1u << 8);
    Rational root = rng.rational(Rational(0), Rational(6), 1u << 6);
    RootExpr e(a, b, sq(root));
    Rational exact = a + b * root;
    CHECK(sign_of(e) == exact.sign());
  }
}

TEST_CASE("cross-radicand comparisons") {
  // 1 + sqrt(2) > sqrt(3)
  CHECK(sign_of_difference(RootExpr(Rational(1), Rational(1), Rational(2)),
                           RootExpr(Rational(0), Rational(1), Rational(3))) == 1);
  // 2 sqrt(2) == sqrt(8)
  CHECK(sign_of_difference(RootExpr(Rational(0), Rational(2), Rational(2)),
                           RootExpr(Rational(0), Rational(1), Rational(8))) == 0);
  // sqrt(2) - (-sqrt(3)) > 0
  CHECK(sign_of_difference(RootExpr(Rational(0), Rational(1), Rational(2)),
                           RootExpr(Rational(0), Rational(-1), Rational(3))) == 1);
  // sqrt(8) - sqrt(9) < 0 across radicands
  CHECK(sign_of_difference(RootExpr(Rational(0), Rational(1), Rational(8)),
                           RootExpr(Rational(0), Rational(1), Rational(9))) == -1);
  Rng rng(23);
  for (int i = 0; i < 20000; ++i) {
    Rational a = rng.rational(Rational(-4), Rational(4), 1u << 6);
    Rational b = rng.rational(Rational(-4), Rational(4), 1u << 6);
    Rational r1 = rng.rational(Rational(0), Rational(4), 1u << 5);
    Rational r2 = rng.rational(Rational(0), Rational(4), 1u << 5);
    RootExpr e1(a, b, sq(r1));
    RootExpr e2(b, a, sq(r2));
    Rational exact = (a + b * r1) - (b + a * r2);
    CHECK(sign_of_difference(e1, e2) == exact.sign());
  }
}

TEST_CASE("enclosures contain the value and obey the width bound") {
  // exact when the radicand is a perfect square
  Interval i4 = enclose(RootExpr(Rational(0), Rational(1), Rational(4)), 10);
  CHECK(i4.lo == Rational(2));
  CHECK(i4.hi == Rational(2));

  Interval s2 = enclose(RootExpr(Rational(0), Rational(1), Rational(2)), 100);
  CHECK(s2.width() <= Rational(1, 100));
  CHECK(sq(s2.lo) <= Rational(2));
  CHECK(sq(s2.hi) >= Rational(2));

  Interval neg = enclose(RootExpr(Rational(1), Rational(-1), Rational(2)), 100);
  CHECK(neg.hi < Rational(0));
  CHECK(neg.width() <= Rational(1, 100));

  CHECK_THROWS_AS(enclose(RootExpr(Rational(0), Rational(1), Rational(2)), 0),
                  std::domain_error);
}

TEST_CASE("enclosures respect exact sign probes") {
  Rng rng(31);
  for (int i = 0; i < 10000; ++i) {
    Rational a = rng.rational(Rational(-6), Rational(6), 1u << 8);
    Rational b = rng.rational(Rational(-6), Rational(6), 1u << 8);
    Rational d = rng.rational(Rational(0), Rational(9), 1u << 8);
    RootExpr e(a, b, d);
    Interval iv = enclose(e, 1000);
    // value inside the interval, certified by exact signs
    CHECK(sign_of(e.plus(RootExpr::rational(-iv.lo))) >= 0);
    CHECK(sign_of(e.plus(RootExpr::rational(-iv.hi))) <= 0);
    Rational probe = rng.rational(Rational(-12), Rational(12), 1u << 8);
    int s = sign_of(e.plus(RootExpr::rational(-probe)));
    if (s < 0) CHECK(iv.lo < probe);
    if (s > 0) CHECK(iv.hi > probe);
  }
}

TEST_CASE("enclosures refine monotonically") {
  Rng rng(37);
  for (int i = 0; i < 2000; ++i) {
    Rational a = rng.rational(Rational(-6), Rational(6), 1u << 8);
    Rational b = rng.rational(Rational(-6), Rational(6), 1u << 8);
    Rational d = rng.rational(Rational(0), Rational(9), 1u << 8);
    RootExpr e(a, b, d);
    Interval coarse = enclose(e, 64);
    Interval fine = enclose(e, 4096);
    CHECK(coarse.contains(fine));
  }
}

TEST_CASE("interval arithmetic contains exact images") {
  Rng rng(41);
  for (int i = 0; i < 10000; ++i) {
    Rational d = rng.rational(Rational(0), Rational(7), 1u << 6);
    RootExpr e1(rng.rational(Rational(-5), Rational(5), 1u << 8),
                rng.rational(Rational(-5), Rational(5), 1u << 8), d);
    RootExpr e2(rng.rational(Rational(-5), Rational(5), 1u << 8),
                rng.rational(Rational(-5), Rational(5), 1u << 8), d);
    Interval i1 = enclose(e1, 512);
    Interval i2 = enclose(e2, 512);
    auto inside = [](const RootExpr& v, const Interval& iv) {
      return sign_of(v.plus(RootExpr::rational(-iv.lo))) >= 0 &&
             sign_of(v.plus(RootExpr::rational(-iv.hi))) <= 0;
    };
    CHECK(inside(e1.plus(e2), i1 + i2));
    CHECK(inside(e1.plus(e2.negate()), i1 - i2));
    CHECK(inside(e1.times(e2), i1 * i2));
  }
}
