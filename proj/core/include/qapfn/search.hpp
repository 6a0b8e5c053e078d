#pragma once

#include "qapfn/heuristics.hpp"

namespace qapfn {

enum class start_kind { identity, random, given };

struct search_config {
  long long i_max = 100000;
  gradient_mode mode = gradient_mode::approximate;
  bool general_corrector = false;  // allow exact mode on asymmetric instances
  heuristic_config heuristic;
  start_kind start = start_kind::random;
  permutation start_permutation;  // used when start == given
  int trials = 1;
  std::uint64_t seed = 0;  // trial t runs with seed + t
  int threads = 1;         // trial-level parallelism
  bool trace = false;
  // recompute f and audit feasibility every this many iterations (0 = never);
  // audits also validate the incremental objective bookkeeping
  long long audit_every = 1 << 14;
  bool audit = false;
  // when > 0, record the mean relative gradient error over the first k iterations
  long long rel_error_iters = 0;
};

struct phase_times {
  double gradient_ms = 0.0;
  double neighbourhood_update_ms = 0.0;
  double selection_ms = 0.0;
  double other_ms = 0.0;

  double total_ms() const {
    return gradient_ms + neighbourhood_update_ms + selection_ms + other_ms;
  }
};

struct trace_entry {
  long long iteration = 0;
  double objective = 0.0;
  int accepted_row = -1;  // -1: no move this iteration (start record / SA reject)
  int z1 = -1;
  int z2 = -1;
};

struct search_result {
  double f_best = 0.0;
  permutation x_best;  // in native objective convention
  long long best_iteration = 0;
  std::vector<trace_entry> trace;  // entry 0 = start state when tracing
  double wall_time_ms = 0.0;
  phase_times phases;
  double mean_rel_error = 0.0;  // over the first rel_error_iters iterations
  long long iterations_run = 0;
};

struct gap_report {
  double f_star = 0.0;
  std::vector<double> relgap;  // per trial, (f_best - f_star)/f_star
  double relgap_min = 0.0;
};

// One trial of the full-neighbourhood local search: build the operator, then
// iterate evaluate -> choose -> flip -> track best -> update neighbourhood.
// Deterministic for a fixed (config, seed).
search_result run_search(const instance& inst, const search_config& cfg);

// config.trials independent trials, seeds config.seed + t, optionally across
// config.threads workers; results are indexed by trial regardless of
// scheduling. f_star must be finite (e.g. from a reference solution).
std::pair<gap_report, std::vector<search_result>> run_trials(const instance& inst,
                                                             const search_config& cfg,
                                                             double f_star);

// Both one-hot families intact?
bool feasibility_audit(const binary_solution& x);

}  // namespace qapfn
