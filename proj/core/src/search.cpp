#include "qapfn/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

namespace qapfn {

namespace {

using clock_t_ = std::chrono::steady_clock;

double ms_since(clock_t_::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_t_::now() - t0).count();
}

permutation start_permutation_for(const instance& inst, const search_config& cfg,
                                  rng_t& rng) {
  permutation p(inst.n);
  std::iota(p.begin(), p.end(), 0);
  switch (cfg.start) {
    case start_kind::identity: break;
    case start_kind::random: std::shuffle(p.begin(), p.end(), rng); break;
    case start_kind::given:
      if (static_cast<int>(cfg.start_permutation.size()) != inst.n)
        throw dimension_mismatch("run_search: start permutation length != n");
      p = cfg.start_permutation;
      break;
  }
  return p;
}

}  // namespace

bool feasibility_audit(const binary_solution& x) { return is_feasible(x); }

search_result run_search(const instance& inst, const search_config& cfg) {
  const auto wall0 = clock_t_::now();
  rng_t rng(cfg.seed);

  const q_operator Q = build_q_operator(inst);
  if (cfg.mode == gradient_mode::exact && !cfg.general_corrector &&
      !Q.inner_symmetric)
    throw mode_unsupported_for_instance(
        "run_search: exact gradient on an asymmetric instance requires the "
        "general corrector");

  binary_solution x = to_binary(start_permutation_for(inst, cfg, rng));
  full_neighbourhood fn = build_full_neighbourhood(x);

  double f = objective_binary(Q, x);
  search_result res;
  res.f_best = f;
  res.x_best = solution_assignment(Q, x);
  res.best_iteration = 0;
  res.iterations_run = cfg.i_max;
  if (cfg.trace) {
    res.trace.reserve(static_cast<std::size_t>(cfg.i_max) + 1);
    res.trace.push_back({0, f, -1, -1, -1});
  }

  // heuristic state
  const heuristic_config& h = cfg.heuristic;
  zobrist_table zob(inst.n);
  tabu_state tabu;
  tabu.capacity = h.tabu_length;
  tabu.f_best = f;
  std::uint64_t fp = zob.fingerprint(x);
  if (h.kind == heuristic_kind::tabu) tabu.remember(fp);
  double t_high = 0.0, t_low = 0.0;
  if (h.kind == heuristic_kind::sa)
    std::tie(t_high, t_low) = estimate_temperatures(inst, Q, rng, h.sa);

  double rel_error_sum = 0.0;
  long long rel_error_count = 0;

  double grad_ms = 0.0, sel_ms = 0.0, upd_ms = 0.0;

  for (long long k = 0; k < cfg.i_max; ++k) {
    auto t0 = clock_t_::now();
    const gain_decomposition gd = gain_vector(Q, x);
    gradient_vector theta = approximate_gradient(fn, gd);
    if (cfg.mode == gradient_mode::exact) {
      theta.mode = gradient_mode::exact;
      const auto corr = (cfg.general_corrector && !Q.inner_symmetric)
                            ? general_error_corrector(fn, Q)
                            : error_corrector(fn, Q);
      for (std::size_t i = 0; i < theta.values.size(); ++i)
        theta.values[i] += corr[i];
    }
    grad_ms += ms_since(t0);

    if (k < cfg.rel_error_iters && Q.inner_symmetric) {
      const auto E = error_corrector(fn, Q);
      rel_error_sum += relative_error(gd, fn, E);
      ++rel_error_count;
    }

    t0 = clock_t_::now();
    int chosen = -1;
    switch (h.kind) {
      case heuristic_kind::greedy: chosen = choose_greedy(theta, fn); break;
      case heuristic_kind::top10:
        chosen = choose_top10(theta, fn, rng, h.pool_size);
        break;
      case heuristic_kind::walkqap:
        chosen = choose_walkqap(theta, fn, rng, h.p, h.pool_size);
        break;
      case heuristic_kind::tabu:
        chosen = choose_tabu(theta, fn, tabu, f, fp, zob);
        break;
      case heuristic_kind::sa: {
        const double T = temperature_at(t_high, t_low, k, cfg.i_max);
        if (auto pick = choose_sa(theta, fn, rng, T)) chosen = *pick;
        break;
      }
    }
    sel_ms += ms_since(t0);

    flip_tuple move{-1, -1, -1, -1};
    if (chosen >= 0) {
      move = fn.rows[chosen];
      // true objective delta: the gradient entry is in half units, and in
      // approximate mode it misses the corrector of the chosen row
      double delta = theta.values[chosen];
      if (theta.mode == gradient_mode::approximate)
        delta += q_entry(Q, move.z1, move.z2) + q_entry(Q, move.z3, move.z4);
      apply_quadruple_flip_in_place(x, move);
      f += 2.0 * delta;
      fp = zob.after_flip(fp, move);

      if (f < res.f_best) {
        res.f_best = f;
        res.x_best = solution_assignment(Q, x);
        res.best_iteration = k + 1;
      }
      tabu.f_best = res.f_best;

      t0 = clock_t_::now();
      update_full_neighbourhood(fn, move.z1, move.z2);
      upd_ms += ms_since(t0);
    }

    if (cfg.audit_every > 0 && (k + 1) % cfg.audit_every == 0) {
      if (cfg.audit) {
        if (!feasibility_audit(x))
          throw infeasible_solution("run_search: audit found an infeasible state");
        const double f_full = objective_binary(Q, x);
        if (std::abs(f - f_full) > 1e-6 * std::max(1.0, std::abs(f_full)))
          throw error("run_search: incremental objective drifted past tolerance");
        f = f_full;
      } else {
        f = objective_binary(Q, x);  // bound accumulation drift
      }
    }

    if (cfg.trace) res.trace.push_back({k + 1, f, chosen, move.z1, move.z2});
  }

  res.mean_rel_error =
      rel_error_count > 0 ? rel_error_sum / static_cast<double>(rel_error_count) : 0.0;
  res.wall_time_ms = ms_since(wall0);
  res.phases.gradient_ms = grad_ms;
  res.phases.selection_ms = sel_ms;
  res.phases.neighbourhood_update_ms = upd_ms;
  res.phases.other_ms = std::max(0.0, res.wall_time_ms - grad_ms - sel_ms - upd_ms);
  return res;
}

std::pair<gap_report, std::vector<search_result>> run_trials(const instance& inst,
                                                             const search_config& cfg,
                                                             double f_star) {
  if (!std::isfinite(f_star) || f_star == 0.0)
    throw missing_best_known("run_trials: no usable best-known objective");

  const int trials = std::max(1, cfg.trials);
  std::vector<search_result> results(trials);

  auto run_one = [&](int t) {
    search_config c = cfg;
    c.seed = cfg.seed + static_cast<std::uint64_t>(t);
    c.trials = 1;
    results[t] = run_search(inst, c);
  };

  const int workers = std::clamp(cfg.threads, 1, trials);
  if (workers <= 1) {
    for (int t = 0; t < trials; ++t) run_one(t);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          const int t = next.fetch_add(1);
          if (t >= trials) return;
          try {
            run_one(t);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  gap_report report;
  report.f_star = f_star;
  report.relgap.resize(trials);
  for (int t = 0; t < trials; ++t)
    report.relgap[t] = (results[t].f_best - f_star) / f_star;
  report.relgap_min = *std::min_element(report.relgap.begin(), report.relgap.end());
  return {report, std::move(results)};
}

}  // namespace qapfn
