#include "rcsep/niemytzki.hpp"

#include "rcsep/errors.hpp"
#include "rcsep/subdivision.hpp"

#include <stdexcept>

namespace rcsep::niemytzki {

Ball ball(const Point& anchor, const Rational& radius) {
  if (!anchor.in_space()) throw std::domain_error("ball: anchor below the axis");
  if (radius.sign() <= 0) throw std::domain_error("ball: radius must be positive");
  return Ball{anchor, radius};
}

ClosedBall closed_ball(const Point& anchor, const Rational& radius) {
  if (!anchor.in_space()) throw std::domain_error("closed_ball: anchor below the axis");
  if (radius.sign() <= 0) throw std::domain_error("closed_ball: radius must be positive");
  return ClosedBall{anchor, radius};
}

ClosedBall closure(const Ball& b) { return ClosedBall{b.anchor, b.radius}; }

bool contains(const Ball& b, const Point& q) {
  if (!q.in_space()) return false;
  if (b.tangent() && q == b.anchor) return true;
  // The open effective disc. For a tangent ball it holds no axis point other
  // than the anchor, so no extra exclusion is needed.
  return dist2(q.vec(), b.center()) < sq(b.radius);
}

bool contains(const ClosedBall& c, const Point& q) {
  if (!q.in_space()) return false;
  return dist2(q.vec(), c.center()) <= sq(c.radius);
}

// Any point of the closed effective disc below the axis reflects across the
// axis to a strictly closer point, because every effective center has y > 0.
// So two basic sets meet iff the effective discs meet, and a tangency anchor
// inside the other closed disc already forces the strict inequality.
bool meets(const Ball& a, const Ball& b) {
  return dist2(a.center(), b.center()) < sq(a.radius + b.radius);
}

bool meets(const Ball& a, const ClosedBall& b) {
  return dist2(a.center(), b.center()) < sq(a.radius + b.radius);
}

bool meets(const ClosedBall& a, const ClosedBall& b) {
  return dist2(a.center(), b.center()) <= sq(a.radius + b.radius);
}

bool point_in_union(const std::vector<ClosedBall>& gens, const Point& p) {
  for (const auto& g : gens)
    if (contains(g, p)) return true;
  return false;
}

void validate_sides(const std::vector<ClosedBall>& F, const std::vector<ClosedBall>& G) {
  if (F.empty() || G.empty()) throw ScenarioError("scenario: F and G must be nonempty");
  for (const auto& f : F)
    for (const auto& g : G)
      if (meets(f, g)) throw ScenarioError("scenario: F and G are not disjoint");
}

FilteredSet filtered_region(const std::vector<ClosedBall>& F, const std::vector<ClosedBall>& G,
                            const Rational& alpha) {
  if (alpha.sign() <= 0) throw std::domain_error("filtered_region: alpha must be positive");
  validate_sides(F, G);
  FilteredSet fs;
  fs.alpha = alpha;
  fs.base = F;
  fs.forbidden.reserve(G.size());
  for (const auto& g : G) fs.forbidden.push_back(Disc{g.center(), alpha + g.radius});
  return fs;
}

bool member(const FilteredSet& fs, const Point& p) {
  if (!p.in_space()) return false;
  bool in_base = false;
  for (const auto& f : fs.base)
    if (dist2(p.vec(), f.center()) <= sq(f.radius)) {
      in_base = true;
      break;
    }
  if (!in_base) return false;
  const Vec2 probe = p.on_axis() ? Vec2{p.x, fs.alpha} : p.vec();
  for (const auto& d : fs.forbidden)
    if (dist2(probe, d.c) < sq(d.r)) return false;
  return true;
}

bool member_direct_unchecked(const std::vector<ClosedBall>& F, const std::vector<ClosedBall>& G,
                             const Rational& alpha, const Point& p) {
  if (!point_in_union(F, p)) throw PreconditionError("member_direct: point not in F");
  Ball probe = ball(p, alpha);
  for (const auto& g : G)
    if (meets(probe, g)) return false;
  return true;
}

bool member_direct(const std::vector<ClosedBall>& F, const std::vector<ClosedBall>& G,
                   const Rational& alpha, const Point& p) {
  if (alpha.sign() <= 0) throw std::domain_error("member_direct: alpha must be positive");
  validate_sides(F, G);
  return member_direct_unchecked(F, G, alpha, p);
}

namespace {

// Least n >= 1 with dist(x, c) >= 1/n + r, given dist2 > r^2. Monotone
// predicate, so doubling plus binary search with rational tests.
mpz_class least_stage_off_axis(const Rational& d2, const Rational& r) {
  auto ok = [&](const mpz_class& n) {
    Rational inv(mpq_class(mpz_class(1), n));
    return d2 >= sq(r + inv);
  };
  mpz_class hi = 1;
  while (!ok(hi)) hi <<= 1;
  mpz_class lo = hi / 2 + 1;
  if (hi == 1) return hi;
  while (lo < hi) {
    mpz_class mid = (lo + hi) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return hi;
}

}  // namespace

std::optional<mpz_class> stage_index(const std::vector<ClosedBall>& G, const Point& x) {
  if (!x.in_space()) throw std::domain_error("stage_index: point below the axis");
  mpz_class best = 1;
  for (const auto& g : G) {
    const Rational d2 = dist2(x.vec(), g.center());
    mpz_class n_g;
    if (x.on_axis()) {
      // Lifted probe: (x, 1/n) must stay at distance >= 1/n + r from the
      // center, which linearizes to n >= 2(r + cy) / (dist2 - r^2).
      Rational den = d2 - sq(g.radius);
      if (den.sign() <= 0) return std::nullopt;
      n_g = least_n_at_least(Rational(2) * (g.radius + g.center().y) / den);
    } else {
      if (d2 <= sq(g.radius)) return std::nullopt;
      n_g = least_stage_off_axis(d2, g.radius);
    }
    if (n_g > best) best = n_g;
  }
  return best;
}

GammaCertificate separation_gamma(const std::vector<ClosedBall>& F,
                                  const std::vector<ClosedBall>& G, const Rational& alpha,
                                  const Rational& epsilon, const Point& pq, int depth,
                                  bool force_interior, const std::optional<Rational>& known_gap) {
  if (alpha.sign() <= 0) throw std::domain_error("separation_gamma: alpha must be positive");
  if (epsilon.sign() <= 0 || epsilon >= Rational(1))
    throw std::domain_error("separation_gamma: epsilon must lie in (0,1)");
  validate_sides(F, G);
  if (!point_in_union(G, pq)) throw PreconditionError("separation_gamma: point not in G");

  GammaCertificate cert;
  cert.interior_bound = alpha * (Rational(1) - epsilon) / Rational(2);

  bool base_touches_axis = false;
  for (const auto& f : F)
    if (f.center().y <= f.radius) base_touches_axis = true;

  if (force_interior || !base_touches_axis) {
    cert.kind = GammaCase::interior;
    cert.gamma = cert.interior_bound;
    return cert;
  }

  cert.kind = GammaCase::boundary;
  std::optional<Rational> gap = known_gap;
  if (!gap) gap = euclid_closure_gap(F, G, alpha, depth);
  if (!gap) throw EnclosureError("separation_gamma: gap subdivision exhausted, raise depth");

  const Rational ea = epsilon * alpha;
  cert.beta = min(*gap, ea) / Rational(2);
  cert.anchor_x = Rational(0);

  const Rational& beta = cert.beta;
  const Rational b_y = sq(beta) / (Rational(2) * alpha);
  const Rational D = Rational(4) * sq(alpha) - sq(beta);
  cert.a_x = RootExpr(Rational(0), beta / (Rational(2) * alpha), D);
  cert.a_y = RootExpr::rational(b_y);

  // Squared length of the direction from the small circle's center to the
  // a-point; rational because the a-point lies on both defining circles.
  const Rational m = sq(beta) * (Rational(1) - epsilon) + sq(ea);
  cert.c_x = RootExpr(Rational(0), epsilon * beta / Rational(2), D / m);
  cert.c_y = RootExpr(ea, ea * (b_y - ea), Rational(1) / m);

  cert.line.a_coeff = -(b_y - ea);
  cert.line.b_coeff = cert.a_x;
  cert.line.c_coeff = cert.a_x.times(-ea);

  // Certified rational lower bound for a_x - c_x (always positive: the
  // direction length exceeds eps*alpha).
  mpz_class prec = mpz_class(1) << 16;
  Rational diff_lo;
  bool separated = false;
  for (int round = 0; round < 8; ++round) {
    Interval ia = enclose(cert.a_x, prec);
    Interval ic = enclose(cert.c_x, prec);
    diff_lo = ia.lo - ic.hi;
    if (diff_lo.sign() > 0) {
      separated = true;
      break;
    }
    prec <<= 8;
  }
  if (!separated)
    throw EnclosureError("separation_gamma: enclosure cannot separate |a-c|, raise depth");

  const mpz_class cap = mpz_class(1) << 24;
  Rational gap_lb = round_down(diff_lo, cap);
  if (gap_lb.sign() <= 0) gap_lb = diff_lo;
  cert.ac_gap_lower = gap_lb;

  Rational g_b = round_down(gap_lb / Rational(2), cap);
  if (Rational(2) * g_b >= gap_lb) g_b = g_b - Rational(mpq_class(mpz_class(1), cap));
  if (g_b.sign() <= 0) g_b = gap_lb / Rational(4);
  cert.gamma = min(g_b, cert.interior_bound);
  return cert;
}

bool check_gamma_certificate(const GammaCertificate& cert, const Rational& alpha,
                             const Rational& epsilon) {
  const Rational ea = epsilon * alpha;
  if (cert.gamma.sign() <= 0) return false;
  if (Rational(2) * cert.gamma > alpha - ea) return false;
  if (cert.kind == GammaCase::interior) return true;

  if (cert.beta.sign() <= 0 || cert.beta >= ea) return false;
  if (Rational(2) * cert.gamma >= cert.ac_gap_lower) return false;

  auto is_zero = [](const RootExpr& e) { return sign_of(e) == 0; };
  const RootExpr x0 = RootExpr::rational(cert.anchor_x);
  const RootExpr ax = cert.a_x.plus(x0.negate());  // relative to the anchor
  const RootExpr cx = cert.c_x.plus(x0.negate());

  // a-point on both defining circles.
  RootExpr on_small = ax.times(ax).plus(cert.a_y.times(cert.a_y)).plus(
      RootExpr::rational(-sq(cert.beta)));
  if (!is_zero(on_small)) return false;
  RootExpr ay_shift = cert.a_y.plus(RootExpr::rational(-alpha));
  RootExpr on_big = ax.times(ax).plus(ay_shift.times(ay_shift)).plus(
      RootExpr::rational(-sq(alpha)));
  if (!is_zero(on_big)) return false;

  // c-point on the eps*alpha circle.
  RootExpr cy_shift = cert.c_y.plus(RootExpr::rational(-ea));
  RootExpr on_eps = cx.times(cx).plus(cy_shift.times(cy_shift)).plus(
      RootExpr::rational(-sq(ea)));
  if (!is_zero(on_eps)) return false;

  // Line through (x0, eps*alpha) and the a-point, and the c-point on it.
  RootExpr at_top = cert.line.b_coeff.times(ea).plus(cert.line.c_coeff).plus(
      RootExpr::rational(cert.line.a_coeff * cert.anchor_x));
  if (!is_zero(at_top)) return false;
  RootExpr at_a = cert.a_x.times(cert.line.a_coeff)
                      .plus(cert.line.b_coeff.times(cert.a_y))
                      .plus(cert.line.c_coeff);
  if (!is_zero(at_a)) return false;
  // Collinearity of the c-point: (c_x-x0)(a_y-eps a) - (c_y-eps a)(a_x-x0) = 0.
  Rational ay_rel = cert.a_y.a - ea;  // a_y is rational-valued
  RootExpr cross = cx.times(ay_rel).plus(cy_shift.times(ax).negate());
  if (!is_zero(cross)) return false;

  // Side choices and the certified gap.
  if (sign_of(ax) <= 0 || sign_of(cx) <= 0) return false;
  RootExpr a_shifted = cert.a_x.plus(RootExpr::rational(-cert.ac_gap_lower));
  if (sign_of_difference(a_shifted, cert.c_x) < 0) return false;
  return true;
}

CoverReport cover_check(const Point& x, const std::vector<Point>& seq, const Rational& alpha,
                        const std::vector<Point>& samples) {
  if (alpha.sign() <= 0) throw std::domain_error("cover_check: alpha must be positive");
  if (!x.in_space()) throw std::domain_error("cover_check: base point below the axis");
  for (const auto& s : seq)
    if (!s.in_space()) throw PreconditionError("cover_check: sequence leaves the space");
  const Ball half = ball(x, alpha / Rational(2));
  CoverReport rep;
  rep.witness.reserve(samples.size());
  for (const auto& s : samples) {
    if (s == x) throw PreconditionError("cover_check: sample equals the excluded point");
    if (!contains(half, s))
      throw PreconditionError("cover_check: sample outside the half-radius ball");
    long found = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (contains(Ball{seq[i], alpha}, s)) {
        found = static_cast<long>(i) + 1;
        break;
      }
    }
    rep.witness.push_back(found);
    if (found == 0) ++rep.violations;
  }
  return rep;
}

}  // namespace rcsep::niemytzki
