#include "qapfn/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qapfn {

const char* to_string(heuristic_kind k) {
  switch (k) {
    case heuristic_kind::greedy: return "greedy";
    case heuristic_kind::top10: return "top10";
    case heuristic_kind::walkqap: return "walkqap";
    case heuristic_kind::tabu: return "tabu";
    case heuristic_kind::sa: return "sa";
  }
  return "?";
}

std::optional<heuristic_kind> heuristic_from_string(const std::string& s) {
  if (s == "greedy") return heuristic_kind::greedy;
  if (s == "top10") return heuristic_kind::top10;
  if (s == "walkqap") return heuristic_kind::walkqap;
  if (s == "tabu") return heuristic_kind::tabu;
  if (s == "sa") return heuristic_kind::sa;
  return std::nullopt;
}

namespace {

void require_rows(const gradient_vector& theta, const full_neighbourhood& fn) {
  if (theta.values.empty() || fn.rows.empty())
    throw empty_neighbourhood("heuristic: no neighbours to choose from");
  if (theta.values.size() != fn.rows.size())
    throw index_misalignment("heuristic: gradient/neighbourhood length mismatch");
}

// indices of the k smallest entries, ordered by (value, index)
std::vector<int> smallest_k(const std::vector<double>& v, int k) {
  std::vector<int> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  const auto by_value_then_index = [&](int a, int b) {
    return v[a] != v[b] ? v[a] < v[b] : a < b;
  };
  if (k < static_cast<int>(idx.size())) {
    std::partial_sort(idx.begin(), idx.begin() + k, idx.end(), by_value_then_index);
    idx.resize(k);
  } else {
    std::sort(idx.begin(), idx.end(), by_value_then_index);
  }
  return idx;
}

}  // namespace

int choose_greedy(const gradient_vector& theta, const full_neighbourhood& fn) {
  require_rows(theta, fn);
  return static_cast<int>(std::min_element(theta.values.begin(), theta.values.end()) -
                          theta.values.begin());
}

int choose_top10(const gradient_vector& theta, const full_neighbourhood& fn,
                 rng_t& rng, int pool_size) {
  require_rows(theta, fn);
  const int k = std::min<int>(std::max(pool_size, 1),
                              static_cast<int>(theta.values.size()));
  const auto pool = smallest_k(theta.values, k);
  std::uniform_int_distribution<int> pick(0, k - 1);
  return pool[pick(rng)];
}

int choose_walkqap(const gradient_vector& theta, const full_neighbourhood& fn,
                   rng_t& rng, double p, int pool_size) {
  require_rows(theta, fn);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (coin(rng) < p) return choose_top10(theta, fn, rng, pool_size);
  std::uniform_int_distribution<int> any(0, static_cast<int>(theta.values.size()) - 1);
  return any(rng);
}

zobrist_table::zobrist_table(int n_) : n(n_), cell(static_cast<std::size_t>(n_) * n_) {
  // fixed seed: fingerprints must agree across trials and processes
  rng_t gen(88172645463325252ULL);
  for (auto& c : cell) c = gen();
}

std::uint64_t zobrist_table::fingerprint(const binary_solution& x) const {
  std::uint64_t fp = 0;
  // a set bit's index is exactly block*n + residue, the cell index
  for (int pos : x.support) fp ^= cell[pos];
  return fp;
}

std::uint64_t zobrist_table::after_flip(std::uint64_t fp, const flip_tuple& t) const {
  return fp ^ cell[t.z1] ^ cell[t.z2] ^ cell[t.z3] ^ cell[t.z4];
}

void tabu_state::remember(std::uint64_t fp) {
  fifo.push_back(fp);
  members.insert(fp);
  while (static_cast<int>(fifo.size()) > capacity) {
    members.erase(members.find(fifo.front()));
    fifo.pop_front();
  }
}

int choose_tabu(const gradient_vector& theta, const full_neighbourhood& fn,
                tabu_state& state, double f_x, std::uint64_t fp_x,
                const zobrist_table& zob) {
  require_rows(theta, fn);
  const auto order =
      smallest_k(theta.values, static_cast<int>(theta.values.size()));
  int chosen = -1;
  // ascending theta: the first row can aspire past the tabu list by beating
  // the best objective seen; beyond it no projected objective can
  if (f_x + 2.0 * theta.values[order[0]] < state.f_best) {
    chosen = order[0];
  } else {
    for (int i : order) {
      if (!state.contains(zob.after_flip(fp_x, fn.rows[i]))) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) chosen = order[0];  // every move tabu: take the best anyway
  }
  state.remember(zob.after_flip(fp_x, fn.rows[chosen]));
  return chosen;
}

std::pair<double, double> estimate_temperatures(const instance& inst,
                                                const q_operator& op, rng_t& rng,
                                                const sa_params& sa) {
  const int n = inst.n;
  std::vector<double> pool;
  pool.reserve(static_cast<std::size_t>(sa.sample_configs) * sa.sample_neighbours);
  permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int c = 0; c < sa.sample_configs; ++c) {
    std::shuffle(p.begin(), p.end(), rng);
    const auto x = to_binary(p);
    for (int k = 0; k < sa.sample_neighbours; ++k) {
      int i = pick(rng), j = pick(rng);
      while (j == i) j = pick(rng);
      const auto t = make_flip_tuple(x.support[i], x.support[j], n);
      // same half units as the gradient entries the acceptance rule consumes
      const double d =
          0.5 * exact_pair_difference(op, x, t, diff_mode::general);
      if (d != 0.0) pool.push_back(std::abs(d));
    }
  }
  if (pool.empty()) return {1.0, 0.01};  // degenerate samples
  std::sort(pool.begin(), pool.end());
  const auto percentile = [&](double gamma) {
    const auto N = static_cast<double>(pool.size());
    auto idx = static_cast<long>(std::ceil(gamma / 100.0 * N)) - 1;
    idx = std::clamp<long>(idx, 0, static_cast<long>(pool.size()) - 1);
    return pool[idx];
  };
  return {temperature_for(percentile(sa.gamma_initial), sa.p_initial),
          temperature_for(percentile(sa.gamma_final), sa.p_final)};
}

double temperature_for(double delta, double accept_probability) {
  return -delta / std::log(accept_probability);
}

double temperature_at(double t_high, double t_low, long long k, long long i_max) {
  if (i_max <= 1) return t_high;
  return t_high * std::pow(t_low / t_high,
                           static_cast<double>(k) / static_cast<double>(i_max - 1));
}

std::optional<int> choose_sa(const gradient_vector& theta,
                             const full_neighbourhood& fn, rng_t& rng,
                             double temperature) {
  require_rows(theta, fn);
  std::uniform_int_distribution<int> any(0, static_cast<int>(theta.values.size()) - 1);
  const int i = any(rng);
  const double th = theta.values[i];
  if (th <= 0.0) return i;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (coin(rng) < std::exp(-th / temperature)) return i;
  return std::nullopt;
}

}  // namespace qapfn
