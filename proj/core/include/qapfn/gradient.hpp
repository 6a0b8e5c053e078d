#pragma once

#include "qapfn/neighbourhood.hpp"

namespace qapfn {

// One matvec q = Qx spawns the whole gain vector:
//   g = -broadcast(q on support) + q o (1 - x)
// i.e. g[r] = -q[r] on the support and q[r] - q[support bit of r's block] off
// it. gplus keeps the off-support part (q o (1-x)) for the relative-error
// denominator, gminus the block broadcast.
struct gain_decomposition {
  vector q;
  vector gplus;
  vector gminus;
  vector g;
};

gain_decomposition gain_vector(const q_operator& op, const binary_solution& x);

enum class gradient_mode { approximate, exact };

// Per-neighbour objective deltas in half units: doubling an entry gives the
// true difference f(y_i) - f(x) in exact mode.
struct gradient_vector {
  std::vector<double> values;
  gradient_mode mode = gradient_mode::approximate;
};

// approx[i] = g[z3_i] + g[z4_i]  (= q[z3]+q[z4]-q[z1]-q[z2] by the block rule)
gradient_vector approximate_gradient(const full_neighbourhood& fn,
                                     const gain_decomposition& gd);

// E[i] = Q(z3_i, z4_i) + Q(z4_i, z3_i); with zero-diagonal factors this is the
// whole gap between the approximate and exact deltas on symmetric and
// semi-symmetric operators.
std::vector<double> error_corrector(const full_neighbourhood& fn, const q_operator& op);

// The corrector that is exact for ANY symmetric-matrix operator (all operators
// built here are): G[i] = Q(z1,z2) + Q(z3,z4) as entries of the symmetrized
// matrix. Coincides with E on symmetric/semi-symmetric instances.
std::vector<double> general_error_corrector(const full_neighbourhood& fn,
                                            const q_operator& op);

// approximate: the S34*g pass only. exact: plus the corrector; on asymmetric
// instances the classic corrector E is not exact, so exact mode requires
// general_corrector=true there (otherwise mode_unsupported_for_instance).
gradient_vector evaluate_full_neighbourhood(const binary_solution& x,
                                            const full_neighbourhood& fn,
                                            const q_operator& op, gradient_mode mode,
                                            bool general_corrector = false);

// mean over rows of E_i / max(1, gplus[z3_i] + gplus[z4_i]).
double relative_error(const gain_decomposition& gd, const full_neighbourhood& fn,
                      const std::vector<double>& E);

}  // namespace qapfn
