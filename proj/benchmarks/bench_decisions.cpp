#include <benchmark/benchmark.h>

#include <random>

#include "dimtrace/algebraic.hpp"
#include "dimtrace/intmat.hpp"
#include "dimtrace/laurent.hpp"
#include "dimtrace/lattice.hpp"
#include "dimtrace/simplexgood.hpp"
#include "dimtrace/simplicial.hpp"

using namespace dimtrace;

namespace {

laurent::LaurentPoly poly(std::vector<std::pair<laurent::Exponent, long>> terms) {
  laurent::LaurentPoly p(terms.front().first.size());
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

const laurent::LaurentPoly kP235 = poly({{{0, 0}, 2}, {{1, 0}, 3}, {{0, 1}, 5}});
const laurent::LaurentPoly kCircle = poly({{{2, 0}, 1}, {{1, 0}, -6}, {{0, 2}, 1}, {{0, 1}, -6}, {{0, 0}, 17}});

algebraic::IntPolynomial random_poly(std::mt19937_64& rng, long degree) {
  std::uniform_int_distribution<long> c(-50, 50);
  IntVec v(degree + 1);
  for (auto& x : v) x = c(rng);
  if (v.back() == 0) v.back() = 1;
  return algebraic::IntPolynomial(v);
}

void BM_SturmPositiveRoots(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<algebraic::IntPolynomial> ps;
  for (int i = 0; i < 64; ++i) ps.push_back(random_poly(rng, state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(algebraic::sturm_positive_root_count(ps[i++ % ps.size()]));
}
BENCHMARK(BM_SturmPositiveRoots)->DenseRange(2, 10, 4);

void BM_ClassifyTrace1d(benchmark::State& state) {
  const algebraic::IntPolynomial p{6, 1, 6};
  const auto r = algebraic::AlgebraicNumber1D::from_minpoly(algebraic::IntPolynomial{-3, 4, -2, 6});
  for (auto _ : state) benchmark::DoNotOptimize(algebraic::classify_trace_1d(p, r));
}
BENCHMARK(BM_ClassifyTrace1d);

void BM_ProductMinimalPolynomial(benchmark::State& state) {
  const auto a = algebraic::AlgebraicNumber1D::from_minpoly(algebraic::IntPolynomial{-2, 0, 0, 1});
  const auto b = algebraic::AlgebraicNumber1D::from_minpoly(algebraic::IntPolynomial{-1, -1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(algebraic::multiply(a, b, 9));
}
BENCHMARK(BM_ProductMinimalPolynomial)->Unit(benchmark::kMillisecond);

void BM_ConditionOneRationalGrid(benchmark::State& state) {
  const long side = state.range(0);
  for (auto _ : state)
    for (long m = 1; m <= side; ++m)
      for (long n = 1; n <= side; ++n)
        benchmark::DoNotOptimize(laurent::condition_one_rational(kP235, {Rational(m), Rational(n)}).holds);
  state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(BM_ConditionOneRationalGrid)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_FittingCircle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(laurent::fitting_check(kP235, {kCircle}, 64));
}
BENCHMARK(BM_FittingCircle)->Unit(benchmark::kMillisecond);

void BM_DirectSumRadicals(benchmark::State& state) {
  const auto b = lattice::RealBasis::squarefree_radicals({6, 15, 10});
  auto g = [&](RatVec r) { return lattice::EmbeddedGroup{b, {RatVec{1, 0, 0, 0}, r}}; };
  const lattice::DirectSumInstance d{{g({0, 1, 0, 0}), g({0, 0, 1, 0}), g({0, 0, 0, 1}), g({0, 1, 1, 1})}};
  for (auto _ : state) benchmark::DoNotOptimize(lattice::direct_sum_order_unit_good(d));
}
BENCHMARK(BM_DirectSumRadicals);

void BM_HermiteBasis(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> c(-20, 20);
  const std::size_t n = state.range(0);
  intmat::IntMatrix m(n + 2, IntVec(n));
  for (auto& r : m)
    for (auto& x : r) x = c(rng);
  for (auto _ : state) benchmark::DoNotOptimize(intmat::hermite_basis(m, n));
}
BENCHMARK(BM_HermiteBasis)->RangeMultiplier(2)->Range(2, 16);

void BM_SimplicialCriterion(benchmark::State& state) {
  RatVec v;
  for (long i = 0; i < state.range(0); ++i) v.emplace_back(1 + (i * 7) % 13);
  for (auto _ : state) benchmark::DoNotOptimize(simplicial::is_order_unit_good(v));
}
BENCHMARK(BM_SimplicialCriterion)->Arg(5)->Arg(50);

void BM_SimplicialLiftingOracle(benchmark::State& state) {
  const IntVec v = {1, 1, 2, 3, 5};
  for (auto _ : state) benchmark::DoNotOptimize(simplicial::interval_lifting_oracle(v, state.range(0)));
}
BENCHMARK(BM_SimplicialLiftingOracle)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SimplexDecompose(benchmark::State& state) {
  const Rational h(1, 2);
  const auto s = simplexgood::SimplexSubset::make(4, {{h, h, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(simplexgood::decompose_good_subset(s));
}
BENCHMARK(BM_SimplexDecompose);

void BM_SimplexOracleFamily(benchmark::State& state) {
  const Rational h(1, 2);
  const auto s = simplexgood::SimplexSubset::make(4, {{h, h, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(simplexgood::lifting_oracle_family(s, state.range(0), 0));
}
BENCHMARK(BM_SimplexOracleFamily)->Arg(0)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
