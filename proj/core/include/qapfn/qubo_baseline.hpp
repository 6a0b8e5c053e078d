#pragma once

#include <optional>

#include "qapfn/solution.hpp"

namespace qapfn {

struct bitflip_record {
  double energy = 0.0;
  bool feasible = false;
};

struct bitflip_trace {
  std::vector<bitflip_record> records;
  long long feasible_count = 0;
  std::optional<double> best_feasible_objective;
};

// Single-bit-flip tabu search over the penalty energy, starting from a random
// feasible point (recorded as the first entry, so iters=0 leaves exactly one
// feasible record). Per-variable tenure; aspiration admits a tabu flip that
// improves on the best energy seen. Deltas are O(1) per candidate via the
// field vector d[v] = sum_c (Q(v,c)+Q(c,v)) x_c plus block/residue counts,
// O(n^2) maintenance per accepted flip.
bitflip_trace run_qubo_tabu_single_flip(const penalty_qubo& pq, long long iters,
                                        std::uint64_t seed, int tenure = 20);

// iters independent uniform permutations, evaluated natively; every record
// feasible.
bitflip_trace run_random_feasible(const instance& inst, long long iters,
                                  std::uint64_t seed);

long long count_feasible_visits(const bitflip_trace& trace);

}  // namespace qapfn
