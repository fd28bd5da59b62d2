#include "doctest.h"

#include "rcsep/errors.hpp"
#include "rcsep/harness.hpp"
#include "rcsep/region.hpp"

using namespace rcsep;
namespace niem = rcsep::niemytzki;
namespace sorg = rcsep::sorgenfrey;
using harness::Rng;
using region::Expr;
using region::Space;
using region::Verdict;
using region::VerdictKind;

namespace {

niem::Point np(long x, long y) { return niem::Point{Rational(x), Rational(y)}; }
niem::Point npq(const Rational& x, const Rational& y) { return niem::Point{x, y}; }
sorg::Point sp2(const Rational& a, const Rational& b) { return sorg::Point{{a, b}}; }

std::vector<niem::ClosedBall> far_f() { return {niem::closed_ball(np(0, 0), Rational(1))}; }
std::vector<niem::ClosedBall> far_g() { return {niem::closed_ball(np(4, 0), Rational(1))}; }

sorg::Box box2(long lx, long ly, long wx, long wy) {
  return sorg::box(sp2(Rational(lx), Rational(ly)), {Rational(wx), Rational(wy)});
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a == b) return true;
  if (a->v.index() != b->v.index()) return false;
  if (const auto* ua = std::get_if<region::UnionNode>(&a->v)) {
    const auto* ub = std::get_if<region::UnionNode>(&b->v);
    if (ua->parts.size() != ub->parts.size()) return false;
    for (std::size_t i = 0; i < ua->parts.size(); ++i)
      if (!same_tree(ua->parts[i], ub->parts[i])) return false;
    return true;
  }
  if (const auto* da = std::get_if<region::DiffNode>(&a->v)) {
    const auto* db = std::get_if<region::DiffNode>(&b->v);
    return same_tree(da->pos, db->pos) && same_tree(da->sub, db->sub);
  }
  if (const auto* ca = std::get_if<region::NClosureOuter>(&a->v)) {
    const auto* cb = std::get_if<region::NClosureOuter>(&b->v);
    return ca->fs == cb->fs && ca->radius == cb->radius;
  }
  if (const auto* ca = std::get_if<region::SClosureOuter>(&a->v)) {
    const auto* cb = std::get_if<region::SClosureOuter>(&b->v);
    return ca->fs == cb->fs && ca->param == cb->param;
  }
  if (const auto* na = std::get_if<region::NBallUnion>(&a->v)) {
    const auto* nb = std::get_if<region::NBallUnion>(&b->v);
    return na->fs == nb->fs && na->radius == nb->radius;
  }
  if (const auto* sa = std::get_if<region::SBoxUnion>(&a->v)) {
    const auto* sb = std::get_if<region::SBoxUnion>(&b->v);
    return sa->fs == sb->fs && sa->param == sb->param;
  }
  return false;
}

}  // namespace

TEST_CASE("regular closure evaluates equal to the generators") {
  // Tangent ball, a clipped crossing disc, and an axis-tangent interior disc.
  std::vector<niem::ClosedBall> gens{
      niem::closed_ball(np(0, 0), Rational(1)),
      niem::closed_ball(np(3, 1), Rational(2)),
      niem::closed_ball(np(-4, 1), Rational(1)),
  };
  Expr closure = region::regular_closure(region::generators_union(gens));
  Rng rng(4242);
  for (int i = 0; i < 4000; ++i) {
    niem::Point p = rng.below(5) == 0
                        ? npq(rng.rational(Rational(-6), Rational(6), 1u << 8), Rational(0))
                        : npq(rng.rational(Rational(-6), Rational(6), 1u << 8),
                              rng.rational(Rational(0), Rational(4), 1u << 8));
    Verdict v = region::member(closure, p, 4);
    CHECK(v.in() == niem::point_in_union(gens, p));
  }
  // The tangency anchors themselves.
  CHECK(region::member(closure, np(0, 0), 4).in());
  CHECK(region::member(closure, np(-4, 0), 4).in());
  // Crossing axis points of the clipped disc: inside, and just outside.
  CHECK(region::member(closure, np(2, 0), 4).in());
  CHECK(!region::member(closure, np(5, 0), 4).in());

  CHECK(region::is_regular_closed_input(gens));
  CHECK(!region::is_regular_closed_input(std::vector<niem::ClosedBall>{}));
}

TEST_CASE("regular closure of clopen boxes is the identity") {
  std::vector<sorg::Box> gens{box2(0, 0, 1, 1), box2(2, -1, 1, 3)};
  Expr closure = region::regular_closure(region::generators_union(gens));
  Rng rng(911);
  for (int i = 0; i < 4000; ++i) {
    sorg::Point p = sp2(rng.rational(Rational(-1), Rational(4), 1u << 8),
                        rng.rational(Rational(-2), Rational(3), 1u << 8));
    Verdict v = region::member(closure, p, 4);
    CHECK(v.in() == sorg::point_in_union(gens, p));
  }
  // Faces: lower face in, upper face out.
  CHECK(region::member(closure, sp2(Rational(0), Rational(0)), 4).in());
  CHECK(!region::member(closure, sp2(Rational(1), Rational(0)), 4).in());
  CHECK(region::is_regular_closed_input(gens));
  CHECK(!region::is_regular_closed_input(std::vector<sorg::Box>{}));
  CHECK_THROWS_AS(region::regular_closure(region::make(region::EmptyNode{})),
                  std::domain_error);
}

TEST_CASE("stage set construction and membership") {
  Expr w1 = region::build_wn(Space::niemytzki, far_f(), far_g(), Rational(1, 2), 1);
  CHECK(region::member(w1, np(0, 1), 16).in());
  CHECK(region::open_by_construction(w1));
  CHECK_THROWS_AS(region::build_wn(Space::niemytzki, far_f(), far_g(), Rational(2), 1),
                  std::domain_error);

  std::vector<sorg::Box> F{box2(0, 0, 1, 1)};
  std::vector<sorg::Box> G{box2(2, 0, 1, 1)};
  Expr sw1 = region::build_wn(Space::sorgenfrey, F, G, Rational(1, 2), 1);
  Verdict in = region::member(sw1, sp2(Rational(6, 5), Rational(3, 10)), 16);
  CHECK(in.in());
  CHECK(!region::member(sw1, sp2(Rational(3), Rational(0)), 16).in());
}

TEST_CASE("closure outer approximations") {
  Expr w1 = region::build_wn(Space::niemytzki, far_f(), far_g(), Rational(1, 2), 1);
  Expr outer = region::closure_outer(w1);
  CHECK(region::member(outer, np(4, 1), 16).out());   // the far side's center
  CHECK(region::member(outer, np(0, 1), 16).in());    // a point of the union itself
  CHECK(!region::open_by_construction(outer));

  // Sorgenfrey: closure boxes reach the closed upper-right faces.
  std::vector<sorg::Box> F{box2(0, 0, 1, 1)};
  std::vector<sorg::Box> G{box2(3, 0, 1, 1)};
  Expr sw1 = region::build_wn(Space::sorgenfrey, F, G, Rational(1, 2), 1);
  Expr souter = region::closure_outer(sw1);
  CHECK(region::member(souter, sp2(Rational(1), Rational(1)), 16).in());
  CHECK(region::member(souter, sp2(Rational(2), Rational(2)), 16).out());

  // Outer of an empty union excludes everything.
  Expr empty_outer = region::closure_outer(region::make(region::UnionNode{}));
  CHECK(region::member(empty_outer, np(0, 1), 4).out());
}

TEST_CASE("disjointified unions: structure and worked membership") {
  std::vector<Expr> Ws, Vs;
  for (long n = 1; n <= 3; ++n) {
    Ws.push_back(region::build_wn(Space::niemytzki, far_f(), far_g(), Rational(1, 2), n));
    Vs.push_back(region::build_wn(Space::niemytzki, far_g(), far_f(), Rational(1, 2), n));
  }
  auto pair = region::engelking(Ws, Vs, 3);
  CHECK(region::open_by_construction(pair.uF));
  CHECK(region::open_by_construction(pair.uG));

  auto swapped = region::engelking(Vs, Ws, 3);
  CHECK(same_tree(pair.uF, swapped.uG));
  CHECK(same_tree(pair.uG, swapped.uF));
  CHECK_THROWS_AS(region::engelking(Ws, Vs, 0), std::domain_error);

  Verdict v = region::member(pair.uF, np(0, 1), 16);
  CHECK(v.in());
  CHECK(v.stage == 1);
}

TEST_CASE("separation: far tangent pair") {
  auto res = region::separate(far_f(), far_g(), Rational(1, 2), 4);
  CHECK(region::open_by_construction(res.uF));
  CHECK(region::open_by_construction(res.uG));

  // Side samples resolve to their own side only.
  auto fpts = harness::sample_points(far_f(), 60, 99);
  auto gpts = harness::sample_points(far_g(), 60, 98);
  for (const auto& p : fpts) {
    Verdict vF = region::member(res.uF, p, 16);
    Verdict vG = region::member(res.uG, p, 16);
    CHECK(vF.in());
    CHECK(vG.out());
    CHECK(vG.reason == region::OutReason::side_exclusion);
  }
  for (const auto& p : gpts) {
    CHECK(region::member(res.uG, p, 16).in());
    CHECK(region::member(res.uF, p, 16).out());
  }

  // The G anchor is excluded from uF outright.
  CHECK(region::member(res.uF, np(4, 0), 16).out());
  CHECK_THROWS_AS(region::separate(far_f(), far_f(), Rational(1, 2), 4), ScenarioError);
}

TEST_CASE("membership budget: unknown resolves monotonically") {
  auto res = region::separate(far_f(), far_g(), Rational(1, 2), 2);
  // Just outside the F generator: a witness needs a little subdivision.
  niem::Point q = npq(Rational(1) + Rational(1, 2000), Rational(1));
  Verdict shallow = region::member(res.uF, q, 0);
  Verdict deep = region::member(res.uF, q, 16);
  CHECK(shallow.unknown());
  CHECK(deep.in());

  Rng rng(321);
  for (int i = 0; i < 150; ++i) {
    niem::Point p = npq(rng.rational(Rational(-2), Rational(6), 1u << 8),
                        rng.rational(Rational(0), Rational(3), 1u << 8));
    Verdict v0 = region::member(res.uF, p, 0);
    Verdict v4 = region::member(res.uF, p, 4);
    Verdict v16 = region::member(res.uF, p, 16);
    if (v0.in()) CHECK(!v4.out());
    if (v0.out()) CHECK(!v4.in());
    if (v4.in()) CHECK(!v16.out());
    if (v4.out()) CHECK(!v16.in());
    int u0 = v0.unknown() ? 1 : 0, u4 = v4.unknown() ? 1 : 0, u16 = v16.unknown() ? 1 : 0;
    CHECK(u4 <= u0);
    CHECK(u16 <= u4);
  }
}

TEST_CASE("separation: corner-adjacent clopen boxes") {
  std::vector<sorg::Box> F{box2(0, 0, 2, 2)};
  std::vector<sorg::Box> G{box2(2, 2, 2, 2)};
  auto res = region::separate(F, G, 4);

  auto fpts = harness::sample_points(F, 80, 77);
  auto gpts = harness::sample_points(G, 80, 76);
  for (const auto& p : fpts) {
    Verdict vF = region::member(res.uF, p, 16);
    Verdict vG = region::member(res.uG, p, 16);
    auto nx = sorg::stage_index(G, p);
    REQUIRE(nx.has_value());
    CHECK(vF.in());
    CHECK(vF.stage == nx->get_si());
    CHECK(vG.out());
    CHECK(!vF.unknown());
    CHECK(!vG.unknown());
  }
  for (const auto& p : gpts) CHECK(region::member(res.uG, p, 16).in());

  // Ambient probes stay exact.
  Rng rng(654);
  for (int i = 0; i < 120; ++i) {
    sorg::Point p = sp2(rng.rational(Rational(-1), Rational(5), 1u << 8),
                        rng.rational(Rational(-1), Rational(5), 1u << 8));
    Verdict vF = region::member(res.uF, p, 16);
    Verdict vG = region::member(res.uG, p, 16);
    CHECK(!vF.unknown());
    CHECK(!vG.unknown());
    CHECK(!(vF.in() && vG.in()));
  }
}

TEST_CASE("staged cover reaches past the truncation on the lower-limit line") {
  // F = [0,1), G starts at 1 + 1/1000. The face point q = 1 enters the
  // union only at stage 501, far beyond the four built stages.
  std::vector<sorg::Box> F{sorg::box(sorg::Point{{Rational(0)}}, {Rational(1)})};
  std::vector<sorg::Box> G{
      sorg::box(sorg::Point{{Rational(1001, 1000)}}, {Rational(1)})};
  auto res = region::separate(F, G, 4);
  sorg::Point q{{Rational(1)}};
  Verdict v = region::member(res.uF, q, 16);
  CHECK(v.in());
  CHECK(v.stage == 501);

  // And a point beyond every stage's reach is certified out.
  sorg::Point far_q{{Rational(1001, 1000)}};
  CHECK(region::member(res.uF, far_q, 16).out());  // it lies in G
  sorg::Point mid{{Rational(10)}};
  CHECK(region::member(res.uF, mid, 16).out());
  CHECK(region::member(res.uG, mid, 16).out());
}

TEST_CASE("fuzz: random disjoint tangent-disc scenarios stay sound") {
  Rng rng(2024);
  auto random_ball = [&]() {
    Rational x = rng.rational(Rational(-4), Rational(4), 1u << 6);
    Rational y = rng.below(3) == 0 ? Rational(0) : rng.rational(Rational(0), Rational(3), 1u << 6);
    Rational r = rng.rational(Rational(1, 4), Rational(3, 2), 1u << 6);
    return niem::closed_ball(niem::Point{x, y}, r);
  };
  int scenarios_run = 0;
  for (int trial = 0; trial < 200 && scenarios_run < 40; ++trial) {
    std::vector<niem::ClosedBall> F{random_ball()};
    std::vector<niem::ClosedBall> G{random_ball()};
    if (rng.below(2)) F.push_back(random_ball());
    if (rng.below(2)) G.push_back(random_ball());
    bool disjoint = true;
    for (const auto& f : F)
      for (const auto& g : G)
        if (niem::meets(f, g)) disjoint = false;
    if (!disjoint) continue;
    ++scenarios_run;
    auto res = region::separate(F, G, Rational(1, 2), 3);
    for (int i = 0; i < 12; ++i) {
      niem::Point q = npq(rng.rational(Rational(-6), Rational(6), 1u << 8),
                          rng.rational(Rational(0), Rational(5), 1u << 8));
      Verdict vF = region::member(res.uF, q, 10);
      Verdict vG = region::member(res.uG, q, 10);
      CHECK(!(vF.in() && vG.in()));
      if (niem::point_in_union(F, q)) CHECK(!vF.out());
      if (niem::point_in_union(G, q)) CHECK(!vG.out());
    }
  }
  CHECK(scenarios_run >= 20);
}

TEST_CASE("fuzz: random disjoint box scenarios stay exact") {
  Rng rng(6021);
  int scenarios_run = 0;
  for (int trial = 0; trial < 300 && scenarios_run < 40; ++trial) {
    std::size_t d = 1 + rng.below(3);
    auto random_box = [&]() {
      sorg::Point lo;
      std::vector<Rational> w;
      for (std::size_t k = 0; k < d; ++k) {
        lo.coords.push_back(rng.rational(Rational(-3), Rational(3), 1u << 6));
        w.push_back(rng.rational(Rational(1, 4), Rational(2), 1u << 6));
      }
      return sorg::box(lo, w);
    };
    std::vector<sorg::Box> F{random_box()};
    std::vector<sorg::Box> G{random_box()};
    if (rng.below(2)) F.push_back(random_box());
    bool disjoint = true;
    for (const auto& f : F)
      for (const auto& g : G)
        if (sorg::meets(f, g)) disjoint = false;
    if (!disjoint) continue;
    ++scenarios_run;
    auto res = region::separate(F, G, 3);
    for (int i = 0; i < 10; ++i) {
      sorg::Point q;
      for (std::size_t k = 0; k < d; ++k)
        q.coords.push_back(rng.rational(Rational(-4), Rational(4), 1u << 8));
      Verdict vF = region::member(res.uF, q, 10);
      Verdict vG = region::member(res.uG, q, 10);
      CHECK(!vF.unknown());
      CHECK(!vG.unknown());
      CHECK(!(vF.in() && vG.in()));
      if (sorg::point_in_union(F, q)) CHECK(vF.in());
      if (sorg::point_in_union(G, q)) CHECK(vG.in());
    }
  }
  CHECK(scenarios_run >= 20);
}

TEST_CASE("fuzz: staged box evaluation matches brute-force stage scanning") {
  // Coarse-grid scenarios keep every stage threshold below 128, so scanning
  // the stages one by one is an exhaustive oracle for the full union.
  Rng rng(31337);
  const long kScanLimit = 128;
  long compared = 0, in_seen = 0, out_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t d = 1 + rng.below(2);
    auto random_box = [&](long shift) {
      sorg::Point lo;
      std::vector<Rational> w;
      for (std::size_t k = 0; k < d; ++k) {
        lo.coords.push_back(rng.rational(Rational(shift), Rational(shift + 2), 8));
        w.push_back(rng.rational(Rational(1, 2), Rational(2), 8));
      }
      return sorg::box(lo, w);
    };
    std::vector<sorg::Box> F{random_box(0)};
    std::vector<sorg::Box> G{random_box(2)};
    if (sorg::meets(F[0], G[0])) continue;
    auto res = region::separate(F, G, 3);

    for (int qi = 0; qi < 8; ++qi) {
      sorg::Point q;
      for (std::size_t k = 0; k < d; ++k)
        q.coords.push_back(rng.rational(Rational(-1), Rational(5), 8));
      if (sorg::point_in_union(F, q) || sorg::point_in_union(G, q)) continue;

      // Brute force over the infinite union: first outer block, then the
      // first reachable stage below it.
      long blocked = kScanLimit + 1;
      for (long i = 1; i <= kScanLimit; ++i) {
        auto vf = sorg::filtered_region(G, F, i);
        sorg::TargetBox t(d);
        const std::size_t c = std::min<std::size_t>(d, (std::size_t)(2 * i));
        const Rational w = Rational(1) / Rational(2 * i);
        for (std::size_t k = 0; k < c; ++k)
          t[k] = sorg::CoordInterval{q.coords[k] - w, q.coords[k], true, true};
        if (sorg::closure_meets(vf, t)) {
          blocked = i;
          break;
        }
      }
      long expect_stage = 0;
      for (long n = 1; n < blocked && n <= kScanLimit; ++n) {
        auto wf = sorg::filtered_region(F, G, n);
        sorg::TargetBox t(d);
        const std::size_t c = std::min<std::size_t>(d, (std::size_t)(2 * n));
        const Rational w = Rational(1) / Rational(2 * n);
        for (std::size_t k = 0; k < c; ++k)
          t[k] = sorg::CoordInterval{q.coords[k] - w, q.coords[k], false, true};
        if (sorg::feasible_point(wf, t)) {
          expect_stage = n;
          break;
        }
      }

      Verdict v = region::member(res.uF, q, 16);
      ++compared;
      if (expect_stage > 0) {
        ++in_seen;
        CHECK(v.in());
        CHECK(v.stage == expect_stage);
      } else {
        ++out_seen;
        CHECK(v.out());
      }
    }
  }
  CHECK(compared > 150);
  CHECK(in_seen > 20);
  CHECK(out_seen > 20);
}

TEST_CASE("space mismatch is rejected") {
  Expr w1 = region::build_wn(Space::niemytzki, far_f(), far_g(), Rational(1, 2), 1);
  CHECK_THROWS_AS(region::member(w1, sp2(Rational(0), Rational(0)), 4), std::domain_error);
  CHECK_THROWS_AS(region::member(w1, npq(Rational(0), Rational(-1)), 4), std::domain_error);
}
