#include "qapfn/gradient.hpp"

namespace qapfn {

gain_decomposition gain_vector(const q_operator& op, const binary_solution& x) {
  if (x.n != op.n) throw dimension_mismatch("gain_vector: order mismatch");
  const int n = op.n;
  gain_decomposition gd;
  vector xv(n * n);
  for (long i = 0; i < static_cast<long>(x.bits.size()); ++i) xv[i] = x.bits[i];
  gd.q = q_matvec(op, xv);
  gd.gplus = vector::Zero(n * n);
  gd.gminus = vector(n * n);
  gd.g = vector(n * n);
  for (int b = 0; b < n; ++b) {
    const double support_value = gd.q[x.support[b]];
    for (int r = b * n; r < (b + 1) * n; ++r) {
      gd.gminus[r] = support_value;
      if (!x.bits[r]) gd.gplus[r] = gd.q[r];
      gd.g[r] = gd.gplus[r] - gd.gminus[r];
    }
  }
  return gd;
}

gradient_vector approximate_gradient(const full_neighbourhood& fn,
                                     const gain_decomposition& gd) {
  if (gd.g.size() != static_cast<long>(fn.n) * fn.n)
    throw index_misalignment("approximate_gradient: gain vector order mismatch");
  gradient_vector theta;
  theta.mode = gradient_mode::approximate;
  theta.values.resize(fn.rows.size());
  for (std::size_t i = 0; i < fn.rows.size(); ++i)
    theta.values[i] = gd.g[fn.rows[i].z3] + gd.g[fn.rows[i].z4];
  return theta;
}

std::vector<double> error_corrector(const full_neighbourhood& fn,
                                    const q_operator& op) {
  std::vector<double> E(fn.rows.size());
  for (std::size_t i = 0; i < fn.rows.size(); ++i)
    E[i] = q_entry(op, fn.rows[i].z3, fn.rows[i].z4) +
           q_entry(op, fn.rows[i].z4, fn.rows[i].z3);
  return E;
}

std::vector<double> general_error_corrector(const full_neighbourhood& fn,
                                            const q_operator& op) {
  std::vector<double> G(fn.rows.size());
  for (std::size_t i = 0; i < fn.rows.size(); ++i)
    G[i] = q_entry(op, fn.rows[i].z1, fn.rows[i].z2) +
           q_entry(op, fn.rows[i].z3, fn.rows[i].z4);
  return G;
}

gradient_vector evaluate_full_neighbourhood(const binary_solution& x,
                                            const full_neighbourhood& fn,
                                            const q_operator& op, gradient_mode mode,
                                            bool general_corrector) {
  const auto gd = gain_vector(op, x);
  gradient_vector theta = approximate_gradient(fn, gd);
  if (mode == gradient_mode::approximate) return theta;

  theta.mode = gradient_mode::exact;
  if (general_corrector) {
    // exact on every symmetric-matrix operator, asymmetric instances included
    if (!op.matrix_symmetric)
      throw mode_unsupported_for_instance(
          "exact gradient: operator matrix is not symmetric");
    const auto G = general_error_corrector(fn, op);
    for (std::size_t i = 0; i < theta.values.size(); ++i) theta.values[i] += G[i];
    return theta;
  }
  if (!op.inner_symmetric)
    throw mode_unsupported_for_instance(
        "exact gradient: the fast corrector needs a symmetric inner factor; "
        "enable the general corrector for asymmetric instances");
  const auto E = error_corrector(fn, op);
  for (std::size_t i = 0; i < theta.values.size(); ++i) theta.values[i] += E[i];
  return theta;
}

double relative_error(const gain_decomposition& gd, const full_neighbourhood& fn,
                      const std::vector<double>& E) {
  if (E.size() != fn.rows.size())
    throw index_misalignment("relative_error: corrector length mismatch");
  if (fn.rows.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < fn.rows.size(); ++i) {
    const double plus = gd.gplus[fn.rows[i].z3] + gd.gplus[fn.rows[i].z4];
    total += E[i] / std::max(1.0, plus);
  }
  return total / static_cast<double>(fn.rows.size());
}

}  // namespace qapfn
