#include <benchmark/benchmark.h>

#include "rcsep/harness.hpp"
#include "rcsep/niemytzki.hpp"
#include "rcsep/region.hpp"
#include "rcsep/root_expr.hpp"
#include "rcsep/sorgenfrey.hpp"
#include "rcsep/subdivision.hpp"

using namespace rcsep;
namespace niem = rcsep::niemytzki;
namespace sorg = rcsep::sorgenfrey;

namespace {

std::vector<niem::ClosedBall> far_f() {
  return {niem::closed_ball(niem::Point{Rational(0), Rational(0)}, Rational(1))};
}
std::vector<niem::ClosedBall> far_g() {
  return {niem::closed_ball(niem::Point{Rational(4), Rational(0)}, Rational(1))};
}

void bench_sign_of(benchmark::State& state) {
  RootExpr e(Rational(3), Rational(-2), Rational(2));
  for (auto _ : state) benchmark::DoNotOptimize(sign_of(e));
}
BENCHMARK(bench_sign_of);

void bench_enclose(benchmark::State& state) {
  RootExpr e(Rational(1), Rational(5, 3), Rational(2));
  mpz_class prec = mpz_class(1) << 20;
  for (auto _ : state) benchmark::DoNotOptimize(enclose(e, prec));
}
BENCHMARK(bench_enclose);

void bench_ball_meets(benchmark::State& state) {
  niem::Ball b = niem::ball(niem::Point{Rational(0), Rational(1)}, Rational(1));
  niem::ClosedBall c = niem::closed_ball(niem::Point{Rational(3, 2), Rational(1)}, Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(niem::meets(b, c));
}
BENCHMARK(bench_ball_meets);

void bench_filter_member(benchmark::State& state) {
  auto fs = niem::filtered_region(far_f(), far_g(), Rational(1, 2));
  niem::Point p{Rational(1, 3), Rational(5, 4)};
  for (auto _ : state) benchmark::DoNotOptimize(niem::member(fs, p));
}
BENCHMARK(bench_filter_member);

void bench_member_staged(benchmark::State& state) {
  auto res = region::separate(far_f(), far_g(), Rational(1, 2), 8);
  niem::Point p{Rational(1, 3), Rational(5, 4)};
  for (auto _ : state) benchmark::DoNotOptimize(region::member(res.uF, p, 16));
}
BENCHMARK(bench_member_staged);

void bench_gap(benchmark::State& state) {
  auto F = far_f();
  auto G = far_g();
  for (auto _ : state)
    benchmark::DoNotOptimize(niem::euclid_closure_gap(F, G, Rational(1, 2), 12));
}
BENCHMARK(bench_gap);

void bench_box_feasibility(benchmark::State& state) {
  std::vector<sorg::Box> F{
      sorg::box(sorg::Point{{Rational(0), Rational(0)}}, {Rational(2), Rational(2)})};
  std::vector<sorg::Box> G{
      sorg::box(sorg::Point{{Rational(2), Rational(2)}}, {Rational(2), Rational(2)})};
  auto fs = sorg::filtered_region(F, G, 2);
  sorg::TargetBox t(2);
  t[0] = sorg::CoordInterval{Rational(1), Rational(3, 2), false, true};
  t[1] = sorg::CoordInterval{Rational(1), Rational(3, 2), false, true};
  for (auto _ : state) benchmark::DoNotOptimize(sorg::feasible_point(fs, t));
}
BENCHMARK(bench_box_feasibility);

void bench_member_sorg(benchmark::State& state) {
  std::vector<sorg::Box> F{
      sorg::box(sorg::Point{{Rational(0), Rational(0)}}, {Rational(2), Rational(2)})};
  std::vector<sorg::Box> G{
      sorg::box(sorg::Point{{Rational(2), Rational(2)}}, {Rational(2), Rational(2)})};
  auto res = region::separate(F, G, 8);
  sorg::Point q{{Rational(19, 10), Rational(19, 10)}};
  for (auto _ : state) benchmark::DoNotOptimize(region::member(res.uF, q, 16));
}
BENCHMARK(bench_member_sorg);

}  // namespace

BENCHMARK_MAIN();
