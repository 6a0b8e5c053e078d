// Microbenchmarks for the hot paths: the operator matvec, the two gradient
// modes, neighbourhood construction vs incremental update, and end-to-end
// search iteration throughput.

#include <benchmark/benchmark.h>

#include <random>

#include "qapfn/search.hpp"

namespace {

qapfn::instance uniform_instance(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(1, 99);
  qapfn::matrix F = qapfn::matrix::Zero(n, n);
  qapfn::matrix D = qapfn::matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      F(i, j) = F(j, i) = val(rng);
      D(i, j) = D(j, i) = val(rng);
    }
  qapfn::instance inst;
  inst.name = "uniform" + std::to_string(n);
  inst.n = n;
  inst.F = std::move(F);
  inst.D = std::move(D);
  inst.symmetry = qapfn::classify_symmetry(inst.F, inst.D);
  return inst;
}

qapfn::permutation shuffled(int n, std::uint64_t seed) {
  qapfn::permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

void bm_q_matvec(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = uniform_instance(n, 1);
  const auto op = qapfn::build_q_operator(inst, /*dense_threshold=*/0);
  const auto x = qapfn::to_binary(shuffled(n, 2));
  qapfn::vector bits = qapfn::vector::Zero(x.bits.size());
  for (std::size_t i = 0; i < static_cast<std::size_t>(x.bits.size()); ++i)
    bits[i] = x.bits[i];
  for (auto _ : state) {
    auto q = qapfn::q_matvec(op, bits);
    benchmark::DoNotOptimize(q.data());
  }
}

void bm_gradient(benchmark::State& state, qapfn::gradient_mode mode) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = uniform_instance(n, 1);
  const auto op = qapfn::build_q_operator(inst, 0);
  const auto x = qapfn::to_binary(shuffled(n, 2));
  const auto fn = qapfn::build_full_neighbourhood(x);
  for (auto _ : state) {
    auto theta = qapfn::evaluate_full_neighbourhood(x, fn, op, mode);
    benchmark::DoNotOptimize(theta.values.data());
  }
}

void bm_gradient_approx(benchmark::State& state) {
  bm_gradient(state, qapfn::gradient_mode::approximate);
}

void bm_gradient_exact(benchmark::State& state) {
  bm_gradient(state, qapfn::gradient_mode::exact);
}

void bm_neighbourhood_build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = qapfn::to_binary(shuffled(n, 2));
  for (auto _ : state) {
    auto fn = qapfn::build_full_neighbourhood(x);
    benchmark::DoNotOptimize(fn.rows.data());
  }
}

void bm_neighbourhood_update(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = qapfn::to_binary(shuffled(n, 2));
  auto fn = qapfn::build_full_neighbourhood(x);
  // bounce between a move and its inverse so the table stays valid
  const auto row = fn.rows[fn.size() / 2];
  const int f1 = row.z1, f2 = row.z2;
  const int r1 = std::min(row.z3, row.z4), r2 = std::max(row.z3, row.z4);
  bool forward = true;
  for (auto _ : state) {
    qapfn::update_full_neighbourhood(fn, forward ? f1 : r1, forward ? f2 : r2);
    forward = !forward;
    benchmark::DoNotOptimize(fn.rows.data());
  }
}

void bm_search_iterations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = uniform_instance(n, 1);
  qapfn::search_config cfg;
  cfg.heuristic.kind = qapfn::heuristic_kind::top10;
  cfg.mode = qapfn::gradient_mode::approximate;
  cfg.i_max = 1000;
  for (auto _ : state) {
    cfg.seed += 1;  // vary the walk, keep the amount of work identical
    auto res = qapfn::run_search(inst, cfg);
    benchmark::DoNotOptimize(res.f_best);
  }
  state.SetItemsProcessed(state.iterations() * cfg.i_max);
}

}  // namespace

BENCHMARK(bm_q_matvec)->Arg(12)->Arg(25)->Arg(50)->Arg(100);
BENCHMARK(bm_gradient_approx)->Arg(12)->Arg(25)->Arg(50)->Arg(100);
BENCHMARK(bm_gradient_exact)->Arg(12)->Arg(25)->Arg(50)->Arg(100);
BENCHMARK(bm_neighbourhood_build)->Arg(12)->Arg(25)->Arg(50)->Arg(100);
BENCHMARK(bm_neighbourhood_update)->Arg(12)->Arg(25)->Arg(50)->Arg(100);
BENCHMARK(bm_search_iterations)->Arg(12)->Arg(25)->Arg(50);

BENCHMARK_MAIN();
