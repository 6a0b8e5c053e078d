#include "qapfn/qubo.hpp"

namespace qapfn {

namespace {

matrix kron(const matrix& A, const matrix& B) {
  const long n = A.rows(), m = B.rows();
  matrix K(n * m, n * m);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      K.block(i * m, j * m, m, m) = A(i, j) * B;
  return K;
}

}  // namespace

q_operator build_q_operator(const instance& inst, int dense_threshold) {
  q_operator op;
  op.n = inst.n;
  switch (inst.symmetry) {
    case symmetry_class::symmetric:
      op.A = inst.F;
      op.B = inst.D;
      op.symmetrized = false;
      break;
    case symmetry_class::semi_symmetric_f:
      op.A = inst.D;
      op.B = inst.F;
      op.symmetrized = true;
      op.factors_swapped = true;
      break;
    case symmetry_class::semi_symmetric_d:
    case symmetry_class::asymmetric:
      op.A = inst.F;
      op.B = inst.D;
      op.symmetrized = true;
      break;
  }
  op.matrix_symmetric =
      op.symmetrized || inst.symmetry == symmetry_class::symmetric;
  op.inner_symmetric = op.B.isApprox(op.B.transpose());
  if (inst.n <= dense_threshold) {
    matrix K = kron(op.A, op.B);
    op.dense = op.symmetrized ? matrix(0.5 * (K + K.transpose())) : K;
  }
  return op;
}

vector q_matvec(const q_operator& op, const vector& x) {
  const long n = op.n;
  if (x.size() != n * n)
    throw dimension_mismatch("q_matvec: vector length != n^2");
  Eigen::Map<const matrix> X(x.data(), n, n);
  vector out(n * n);
  Eigen::Map<matrix> Y(out.data(), n, n);
  if (!op.symmetrized) {
    Y.noalias() = op.B * X * op.A.transpose();
  } else {
    Y.noalias() = 0.5 * (op.B * X * op.A.transpose());
    Y.noalias() += 0.5 * (op.B.transpose() * X * op.A);
  }
  return out;
}

double q_entry(const q_operator& op, long r, long c) {
  const long n = op.n;
  if (r < 0 || c < 0 || r >= n * n || c >= n * n)
    throw index_out_of_range("q_entry: index outside n^2 range");
  const long br = r / n, kr = r % n;
  const long bc = c / n, kc = c % n;
  const double forward = op.A(br, bc) * op.B(kr, kc);
  if (!op.symmetrized) return forward;
  return 0.5 * forward + 0.5 * op.A(bc, br) * op.B(kc, kr);
}

double q_row_dot(const q_operator& op, long r, const std::vector<int>& sigma) {
  const long n = op.n;
  const long br = r / n, kr = r % n;
  double forward = 0.0, backward = 0.0;
  for (long j = 0; j < n; ++j) forward += op.A(br, j) * op.B(kr, sigma[j]);
  if (!op.symmetrized) return forward;
  for (long j = 0; j < n; ++j) backward += op.A(j, br) * op.B(sigma[j], kr);
  return 0.5 * (forward + backward);
}

double q_col_dot(const q_operator& op, long c, const std::vector<int>& sigma) {
  const long n = op.n;
  const long bc = c / n, kc = c % n;
  double forward = 0.0, backward = 0.0;
  for (long j = 0; j < n; ++j) forward += op.A(j, bc) * op.B(sigma[j], kc);
  if (!op.symmetrized) return forward;
  for (long j = 0; j < n; ++j) backward += op.A(bc, j) * op.B(kc, sigma[j]);
  return 0.5 * (forward + backward);
}

penalty_qubo build_penalty_qubo(const instance& inst, double alpha) {
  penalty_qubo pq;
  pq.n = inst.n;
  pq.alpha = alpha;
  pq.Q.A = inst.D;
  pq.Q.B = inst.F;
  pq.Q.symmetrized = false;
  pq.Q.factors_swapped = true;
  pq.Q.n = inst.n;
  pq.Q.inner_symmetric = inst.F.isApprox(inst.F.transpose());
  pq.Q.matrix_symmetric =
      pq.Q.inner_symmetric && inst.D.isApprox(inst.D.transpose());
  pq.u = inst.D.maxCoeff() * inst.F.sum();
  pq.lambda = alpha * pq.u;
  return pq;
}

double penalty_energy(const penalty_qubo& pq, const vector& x) {
  const long n = pq.n;
  if (x.size() != n * n)
    throw dimension_mismatch("penalty_energy: vector length != n^2");
  const double quad = x.dot(q_matvec(pq.Q, x));
  Eigen::Map<const matrix> X(x.data(), n, n);
  double viol = 0.0;
  for (long j = 0; j < n; ++j) {
    const double c = X.col(j).sum() - 1.0;
    const double r = X.row(j).sum() - 1.0;
    viol += c * c + r * r;
  }
  return quad + pq.lambda * viol;
}

}  // namespace qapfn
