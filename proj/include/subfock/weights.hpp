#pragma once

#include <vector>

#include "subfock/fock.hpp"

namespace subfock {

inline constexpr double default_invariance_tol = 1e-8;

// Diagonal weight Q on H and its compressions Q_m = U_m^H Q^{⊗m} U_m.
struct WeightSystem {
  SystemPtr sys;
  std::vector<double> q;
  std::vector<Matrix> Q;
  std::vector<Matrix> Qinv;
  std::vector<Matrix> rho;
  std::vector<double> trace;
  std::vector<double> invariance;
  std::vector<double> min_rho_eigenvalue;

  const Matrix& Qm(int m) const { return Q.at(static_cast<std::size_t>(m)); }
  const Matrix& rho_m(int m) const { return rho.at(static_cast<std::size_t>(m)); }
  double tr(int m) const { return trace.at(static_cast<std::size_t>(m)); }

  // (Q^{⊗|w|})_{w,w}
  double word_weight(const Word& w) const {
    double p = 1.0;
    for (int k : w.letters()) p *= q.at(static_cast<std::size_t>(k - 1));
    return p;
  }
};

using WeightPtr = std::shared_ptr<const WeightSystem>;

// Diagonal of Q^{⊗m} in word order.
inline Eigen::VectorXd tensor_power_diagonal(const std::vector<double>& q, int m) {
  Eigen::VectorXd d = Eigen::VectorXd::Ones(1);
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXd next(d.size() * static_cast<Eigen::Index>(q.size()));
    for (Eigen::Index a = 0; a < d.size(); ++a)
      for (std::size_t k = 0; k < q.size(); ++k) next(a * static_cast<Eigen::Index>(q.size()) + static_cast<Eigen::Index>(k)) = d(a) * q[k];
    d = std::move(next);
  }
  return d;
}

// Relative residuals ‖(1 − p_m) Q^{⊗m} p_m‖ / ‖Q^{⊗m}‖ for m = 0..M.
inline std::vector<double> invariance_residuals(const SubproductSystem& sys, const std::vector<double>& q) {
  std::vector<double> out;
  for (int m = 0; m <= sys.M; ++m) {
    const Matrix& U = sys.U[static_cast<std::size_t>(m)];
    if (U.cols() == 0) {
      out.push_back(0.0);
      continue;
    }
    const Eigen::VectorXd d = tensor_power_diagonal(q, m);
    const Matrix DU = d.asDiagonal() * U;
    const Matrix E = DU - U * (U.adjoint() * DU);
    out.push_back(operator_norm(E) / d.maxCoeff());
  }
  return out;
}

inline WeightSystem build_weight(const SystemPtr& sys, std::vector<double> q, double tol = default_invariance_tol) {
  if (static_cast<int>(q.size()) != sys->n)
    throw range_error("expected " + std::to_string(sys->n) + " weights, got " + std::to_string(q.size()));
  for (double v : q)
    if (!(v > 0)) throw range_error("weights must be positive");
  WeightSystem ws;
  ws.sys = sys;
  ws.q = std::move(q);
  ws.invariance = invariance_residuals(*sys, ws.q);
  for (int m = 0; m <= sys->M; ++m)
    if (!(ws.invariance[static_cast<std::size_t>(m)] <= tol)) throw invariance_error(m, ws.invariance[static_cast<std::size_t>(m)]);
  for (int m = 0; m <= sys->M; ++m) {
    const Matrix& U = sys->U[static_cast<std::size_t>(m)];
    const Eigen::VectorXd d = tensor_power_diagonal(ws.q, m);
    Matrix Qm = U.adjoint() * d.asDiagonal() * U;
    Qm = (0.5 * (Qm + Qm.adjoint())).eval();
    const double tr = Qm.trace().real();
    ws.Q.push_back(Qm);
    ws.trace.push_back(tr);
    ws.rho.push_back(Qm / tr);
    if (Qm.rows() > 0) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(Qm);
      ws.Qinv.push_back(es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() * es.eigenvectors().adjoint());
      ws.min_rho_eigenvalue.push_back(es.eigenvalues().minCoeff() / tr);
    } else {
      ws.Qinv.push_back(Qm);
      ws.min_rho_eigenvalue.push_back(0.0);
    }
  }
  return ws;
}

inline WeightSystem uniform_weight(const SystemPtr& sys) { return build_weight(sys, std::vector<double>(static_cast<std::size_t>(sys->n), 1.0)); }

inline WeightPtr share(WeightSystem ws) { return std::make_shared<const WeightSystem>(std::move(ws)); }

// φ_m(A) = Tr(ρ^{(m)} A)
inline cplx phi(const WeightSystem& ws, int m, const Matrix& A) {
  ws.sys->require_level(m);
  const Matrix& r = ws.rho_m(m);
  if (A.rows() != r.rows() || A.cols() != r.cols()) throw range_error("phi: shape mismatch at level " + std::to_string(m));
  return (r.transpose().cwiseProduct(A)).sum();
}

// Q_m^{s} A Q_m^{-s} for real s; modular_conjugate uses s = i t.
inline Matrix modular_power_conjugate(const WeightSystem& ws, int m, const Matrix& A, cplx s) {
  ws.sys->require_level(m);
  const Matrix& Qm = ws.Qm(m);
  if (A.rows() != Qm.rows() || A.cols() != Qm.cols()) throw range_error("modular flow: shape mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> es(Qm);
  const Matrix& V = es.eigenvectors();
  Vector pos(Qm.rows()), neg(Qm.rows());
  for (Eigen::Index i = 0; i < Qm.rows(); ++i) {
    const double lg = std::log(es.eigenvalues()(i));
    pos(i) = std::exp(s * lg);
    neg(i) = std::exp(-s * lg);
  }
  return V * pos.asDiagonal() * V.adjoint() * A * V * neg.asDiagonal() * V.adjoint();
}

// σ_t(A) = Q_m^{it} A Q_m^{-it}
inline Matrix modular_conjugate(const WeightSystem& ws, int m, const Matrix& A, double t) {
  return modular_power_conjugate(ws, m, A, cplx(0.0, t));
}

}  // namespace subfock
