#include "rcsep/root_expr.hpp"

#include <stdexcept>

namespace rcsep {

RootExpr::RootExpr(Rational a_, Rational b_, Rational d_)
    : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
  if (d.sign() < 0) throw std::domain_error("root_expr: negative radicand");
  if (b.is_zero() || d.is_zero()) {  // canonical rational form
    b = Rational(0);
    d = Rational(0);
  }
}

RootExpr RootExpr::times(const RootExpr& o) const {
  if (is_rational()) return RootExpr(a * o.a, a * o.b, o.d);
  if (o.is_rational()) return RootExpr(a * o.a, b * o.a, d);
  if (d == o.d) return RootExpr(a * o.a + b * o.b * d, a * o.b + b * o.a, d);
  // Pure roots multiply across radicands: b1 sqrt(d1) * b2 sqrt(d2).
  if (a.is_zero() && o.a.is_zero()) return RootExpr(Rational(0), b * o.b, d * o.d);
  throw std::domain_error("root_expr: product mixes radicands");
}

RootExpr RootExpr::plus(const RootExpr& o) const {
  if (is_rational()) return RootExpr(a + o.a, o.b, o.d);
  if (o.is_rational()) return RootExpr(a + o.a, b, d);
  if (d != o.d) throw std::domain_error("root_expr: sum mixes radicands");
  return RootExpr(a + o.a, b + o.b, d);
}

std::string RootExpr::str() const {
  if (is_rational()) return a.str();
  return a.str() + " + " + b.str() + "*sqrt(" + d.str() + ")";
}

int sign_of(const RootExpr& e) {
  if (e.d.sign() < 0) throw std::domain_error("sign_of: negative radicand");
  if (e.b.is_zero() || e.d.is_zero()) return e.a.sign();
  int sa = e.a.sign();
  int sb = e.b.sign();
  if (sa == 0) return sb;
  if (sa > 0 && sb > 0) return 1;
  if (sa < 0 && sb < 0) return -1;
  // Opposite signs: compare a^2 against b^2 d. Both sides of the original
  // inequality are positive after moving the root term across, so squaring
  // preserves the order.
  Rational lhs = sq(e.a);
  Rational rhs = sq(e.b) * e.d;
  int c = lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
  return sa > 0 ? c : -c;
}

namespace {

// Sign of beta*sqrt(X) - delta*sqrt(Y), all exact.
int sign_of_root_term_difference(const Rational& beta, const Rational& X,
                                 const Rational& delta, const Rational& Y) {
  int s1 = (beta.is_zero() || X.is_zero()) ? 0 : beta.sign();
  int s2 = (delta.is_zero() || Y.is_zero()) ? 0 : delta.sign();
  if (s1 == 0 && s2 == 0) return 0;
  if (s1 == 0) return -s2;
  if (s2 == 0) return s1;
  if (s1 != s2) return s1;
  Rational l = sq(beta) * X;
  Rational r = sq(delta) * Y;
  int c = l == r ? 0 : (l > r ? 1 : -1);
  return s1 > 0 ? c : -c;
}

}  // namespace

int sign_of_difference(const RootExpr& e1, const RootExpr& e2) {
  if (e1.is_rational() && e2.is_rational()) {
    Rational diff = e1.a - e2.a;
    return diff.sign();
  }
  if (e1.is_rational() || e2.is_rational() || e1.d == e2.d) {
    // Stays in a single extension.
    return sign_of(e1.plus(e2.negate()));
  }
  // General case: A + B with A = e1.a - e2.a rational and
  // B = e1.b*sqrt(e1.d) - e2.b*sqrt(e2.d).
  Rational A = e1.a - e2.a;
  int sB = sign_of_root_term_difference(e1.b, e1.d, e2.b, e2.d);
  int sA = A.sign();
  if (sB == 0) return sA;
  if (sA == 0) return sB;
  if (sA == sB) return sA;
  // A and B have opposite signs; compare magnitudes via A^2 - B^2, which
  // lives in Q(sqrt(e1.d * e2.d)).
  Rational b2 = sq(e1.b) * e1.d + sq(e2.b) * e2.d;
  RootExpr diff_sq(sq(A) - b2, Rational(2) * e1.b * e2.b, e1.d * e2.d);
  int s = sign_of(diff_sq);
  return sA > 0 ? s : -s;
}

namespace {

// Power of two >= r (at least 1).
mpz_class pow2_at_least(const Rational& r) {
  mpz_class m = 1;
  if (r.sign() <= 0) return m;
  mpz_class need = ceil_int(r);
  while (m < need) m <<= 1;
  return m;
}

}  // namespace

Interval enclose(const RootExpr& e, const mpz_class& precision) {
  if (e.d.sign() < 0) throw std::domain_error("enclose: negative radicand");
  if (precision < 1) throw std::domain_error("enclose: precision must be >= 1");
  if (e.b.is_zero() || e.d.is_zero()) return Interval::point(e.a);

  mpz_class p = e.d.num();
  mpz_class q = e.d.den();
  mpz_class t = p * q;  // sqrt(p/q) = sqrt(p*q)/q
  if (mpz_perfect_square_p(t.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    Rational root(mpq_class(s, q));
    return Interval::point(e.a + e.b * root);
  }

  // Want |b| * width(sqrt(d) enclosure) <= 1/precision with
  // width = 1/(M*q); pick M as a power of two so refinements nest.
  Rational need = Rational(mpq_class(precision)) * e.b.abs() / Rational(mpq_class(q));
  mpz_class M = pow2_at_least(need);
  mpz_class scaled = t * M * M;
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());  // floor sqrt
  Rational root_lo(mpq_class(s, M * q));
  Rational root_hi(mpq_class(s + 1, M * q));
  Rational lo = e.a + e.b * root_lo;
  Rational hi = e.a + e.b * root_hi;
  if (e.b.sign() < 0) std::swap(lo, hi);
  return Interval(lo, hi);
}

}  // namespace rcsep
