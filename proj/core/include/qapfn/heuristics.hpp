#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <random>
#include <unordered_set>

#include "qapfn/gradient.hpp"

namespace qapfn {

using rng_t = std::mt19937_64;

enum class heuristic_kind { greedy, top10, walkqap, tabu, sa };

const char* to_string(heuristic_kind k);
std::optional<heuristic_kind> heuristic_from_string(const std::string& s);

struct sa_params {
  double p_initial = 0.8;  // target acceptance probability at T_high
  double p_final = 0.1;    // and at T_low
  double gamma_initial = 50.0;  // percentile picking delta_h
  double gamma_final = 5.0;     // percentile picking delta_l
  int sample_configs = 10;
  int sample_neighbours = 10;
};

struct heuristic_config {
  heuristic_kind kind = heuristic_kind::greedy;
  double p = 0.95;      // walkqap: probability of the guided (top pool) move
  int pool_size = 10;   // top10 pool
  int tabu_length = 20;
  sa_params sa;
};

// --- stateless selectors ------------------------------------------------

// argmin, lowest row index on ties.
int choose_greedy(const gradient_vector& theta, const full_neighbourhood& fn);

// uniform draw among the pool_size smallest entries (stable (value, index)
// order decides the pool).
int choose_top10(const gradient_vector& theta, const full_neighbourhood& fn,
                 rng_t& rng, int pool_size = 10);

// guided move with probability p, otherwise uniform over all rows.
int choose_walkqap(const gradient_vector& theta, const full_neighbourhood& fn,
                   rng_t& rng, double p = 0.95, int pool_size = 10);

// --- tabu ---------------------------------------------------------------

// Fixed-seed hash table over (block, residue) cells; a solution fingerprint is
// the xor over blocks of the cell of its set bit, so a swap updates in O(1).
struct zobrist_table {
  int n = 0;
  std::vector<std::uint64_t> cell;  // n*n, cell[block * n + residue]

  explicit zobrist_table(int n);
  std::uint64_t fingerprint(const binary_solution& x) const;
  // fingerprint after applying tuple t to a solution currently hashing to fp
  std::uint64_t after_flip(std::uint64_t fp, const flip_tuple& t) const;
};

struct tabu_state {
  int capacity = 20;
  double f_best = std::numeric_limits<double>::infinity();
  std::deque<std::uint64_t> fifo;
  std::unordered_multiset<std::uint64_t> members;

  bool contains(std::uint64_t fp) const { return members.count(fp) > 0; }
  void remember(std::uint64_t fp);
};

// Scan rows by ascending theta. A move whose projected objective
// f_x + 2*theta beats f_best is taken regardless of the list (aspiration);
// otherwise the best non-tabu row wins; if every row is tabu the best row is
// taken anyway. The chosen fingerprint is appended to the list.
int choose_tabu(const gradient_vector& theta, const full_neighbourhood& fn,
                tabu_state& state, double f_x, std::uint64_t fp_x,
                const zobrist_table& zob);

// --- simulated annealing --------------------------------------------------

// Pool nonzero |pairwise differences| (in the same half units as theta) from
// sample_configs random solutions x sample_neighbours random neighbours each;
// T_high = -percentile(gamma_initial)/ln(p_initial),
// T_low  = -percentile(gamma_final)/ln(p_final).
// All-zero samples degenerate to (1, 0.01).
std::pair<double, double> estimate_temperatures(const instance& inst,
                                                const q_operator& op, rng_t& rng,
                                                const sa_params& sa = {});

// temperature at which a move that worsens the objective by delta is accepted
// with probability p: solve exp(-delta/T) = p
double temperature_for(double delta, double accept_probability);

// geometric schedule T_k = T_high * (T_low/T_high)^(k/(i_max-1))
double temperature_at(double t_high, double t_low, long long k, long long i_max);

// One uniform proposal; accepted with probability min(1, exp(-theta_i/T)).
// nullopt = proposal rejected, solution unchanged this iteration.
std::optional<int> choose_sa(const gradient_vector& theta, const full_neighbourhood& fn,
                             rng_t& rng, double temperature);

}  // namespace qapfn
