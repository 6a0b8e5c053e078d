#include "qapfn/qubo_baseline.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace qapfn {

namespace {

struct penalty_walker {
  const penalty_qubo& pq;
  int n;
  std::vector<std::uint8_t> bits;   // current point, length n^2
  std::vector<double> field;        // field[v] = sum_c (Q(v,c)+Q(c,v)) bits[c]
  std::vector<int> block_count;     // set bits per block
  std::vector<int> residue_count;   // set bits per residue
  int violated = 0;                 // blocks+residues whose count != 1
  double energy = 0.0;

  explicit penalty_walker(const penalty_qubo& pq_, const std::vector<std::uint8_t>& start)
      : pq(pq_), n(pq_.n), bits(start) {
    field.assign(bits.size(), 0.0);
    block_count.assign(n, 0);
    residue_count.assign(n, 0);
    for (long v = 0; v < static_cast<long>(bits.size()); ++v)
      if (bits[v]) {
        ++block_count[v / n];
        ++residue_count[v % n];
      }
    for (int b = 0; b < n; ++b) {
      if (block_count[b] != 1) ++violated;
      if (residue_count[b] != 1) ++violated;
    }
    for (long v = 0; v < static_cast<long>(bits.size()); ++v) {
      double acc = 0.0;
      for (long c = 0; c < static_cast<long>(bits.size()); ++c)
        if (bits[c]) acc += q_entry(pq.Q, v, c) + q_entry(pq.Q, c, v);
      field[v] = acc;
    }
    energy = full_energy();
  }

  double full_energy() const {
    double quad = 0.0;
    for (long r = 0; r < static_cast<long>(bits.size()); ++r)
      if (bits[r])
        for (long c = 0; c < static_cast<long>(bits.size()); ++c)
          if (bits[c]) quad += q_entry(pq.Q, r, c);
    double viol = 0.0;
    for (int b = 0; b < n; ++b) {
      viol += (block_count[b] - 1.0) * (block_count[b] - 1.0);
      viol += (residue_count[b] - 1.0) * (residue_count[b] - 1.0);
    }
    return quad + pq.lambda * viol;
  }

  bool feasible() const { return violated == 0; }

  // energy change of flipping bit v, O(1)
  double delta(long v) const {
    const double s = bits[v] ? -1.0 : 1.0;
    const int bc = block_count[v / n], rc = residue_count[v % n];
    const auto pen = [](double count, double step) {
      const double before = (count - 1.0) * (count - 1.0);
      const double after = (count + step - 1.0) * (count + step - 1.0);
      return after - before;
    };
    return s * field[v] + pq.lambda * (pen(bc, s) + pen(rc, s));
  }

  void flip(long v) {
    const double s = bits[v] ? -1.0 : 1.0;
    energy += delta(v);
    const int b = static_cast<int>(v / n), r = static_cast<int>(v % n);
    const auto bump = [&](int& count) {
      if (count != 1) --violated;
      count += static_cast<int>(s);
      if (count != 1) ++violated;
    };
    bump(block_count[b]);
    bump(residue_count[r]);
    bits[v] = bits[v] ? 0 : 1;
    for (long c = 0; c < static_cast<long>(bits.size()); ++c)
      field[c] += s * (q_entry(pq.Q, c, v) + q_entry(pq.Q, v, c));
  }
};

std::vector<std::uint8_t> random_feasible_bits(int n, std::mt19937_64& rng) {
  permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return to_binary(p).bits;
}

void record(bitflip_trace& trace, double energy, bool feasible) {
  trace.records.push_back({energy, feasible});
  if (feasible) {
    ++trace.feasible_count;
    if (!trace.best_feasible_objective || energy < *trace.best_feasible_objective)
      trace.best_feasible_objective = energy;
  }
}

}  // namespace

bitflip_trace run_qubo_tabu_single_flip(const penalty_qubo& pq, long long iters,
                                        std::uint64_t seed, int tenure) {
  std::mt19937_64 rng(seed);
  penalty_walker w(pq, random_feasible_bits(pq.n, rng));

  bitflip_trace trace;
  record(trace, w.energy, w.feasible());

  const long nn = static_cast<long>(w.bits.size());
  std::vector<long long> tabu_until(nn, -1);
  double best_energy = w.energy;

  for (long long k = 0; k < iters; ++k) {
    long best_v = -1;
    double best_delta = 0.0;
    for (long v = 0; v < nn; ++v) {
      const double d = w.delta(v);
      const bool tabu = tabu_until[v] > k;
      if (tabu && !(w.energy + d < best_energy)) continue;  // aspiration only
      if (best_v < 0 || d < best_delta) {
        best_v = v;
        best_delta = d;
      }
    }
    if (best_v < 0) {  // everything tabu and nothing aspires: flip the oldest
      best_v = static_cast<long>(std::min_element(tabu_until.begin(), tabu_until.end()) -
                                 tabu_until.begin());
    }
    w.flip(best_v);
    tabu_until[best_v] = k + 1 + tenure;
    best_energy = std::min(best_energy, w.energy);
    record(trace, w.energy, w.feasible());
  }
  return trace;
}

bitflip_trace run_random_feasible(const instance& inst, long long iters,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  permutation p(inst.n);
  std::iota(p.begin(), p.end(), 0);
  bitflip_trace trace;
  for (long long k = 0; k < iters; ++k) {
    std::shuffle(p.begin(), p.end(), rng);
    record(trace, objective(inst, p), true);
  }
  return trace;
}

long long count_feasible_visits(const bitflip_trace& trace) {
  long long count = 0;
  for (const auto& r : trace.records)
    if (r.feasible) ++count;
  return count;
}

}  // namespace qapfn
