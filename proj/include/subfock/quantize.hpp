#pragma once

#include <cmath>
#include <vector>

#include "subfock/weights.hpp"

namespace subfock {

namespace detail {

inline void require_square(const SubproductSystem& sys, const Matrix& A, int m, const char* what) {
  sys.require_level(m);
  if (A.rows() != sys.dim(m) || A.cols() != sys.dim(m))
    throw range_error(std::string(what) + ": expected a " + std::to_string(sys.dim(m)) + "x" +
                      std::to_string(sys.dim(m)) + " matrix at level " + std::to_string(m));
}

inline void require_order(const SubproductSystem& sys, int m, int l) {
  if (m < 0 || m > l || l > sys.M)
    throw range_error("need 0 <= m <= l <= M, got m=" + std::to_string(m) + ", l=" + std::to_string(l));
}

// (A ⊗ 1_r) V and (1_r ⊗ A) V on column vectors of H^{⊗•}.
inline Matrix left_factor_times(const Matrix& A, const Matrix& V, Eigen::Index r) {
  Matrix out(A.rows() * r, V.cols());
  for (Eigen::Index c = 0; c < V.cols(); ++c) {
    Eigen::Map<const RowMajorMatrix> psi(V.col(c).data(), A.cols(), r);
    Eigen::Map<RowMajorMatrix> dst(out.col(c).data(), A.rows(), r);
    dst.noalias() = A * psi;
  }
  return out;
}

inline Matrix right_factor_times(const Matrix& A, const Matrix& V, Eigen::Index r) {
  Matrix out(r * A.rows(), V.cols());
  const Matrix At = A.transpose();
  for (Eigen::Index c = 0; c < V.cols(); ++c) {
    Eigen::Map<const RowMajorMatrix> psi(V.col(c).data(), r, A.cols());
    Eigen::Map<RowMajorMatrix> dst(out.col(c).data(), r, A.rows());
    dst.noalias() = psi * At;
  }
  return out;
}

inline Vector frame_vector(const Matrix& U, std::int64_t row) { return U.row(row).adjoint(); }

}  // namespace detail

// ι_{m,l}(A) = Σ_{|r|=l-m} R_r A R_r^*
inline Matrix iota(const SubproductSystem& sys, const Matrix& A, int m, int l) {
  detail::require_order(sys, m, l);
  detail::require_square(sys, A, m, "iota");
  Matrix out = Matrix::Zero(sys.dim(l), sys.dim(l));
  for (const Word& r : words_of_length(sys.n, l - m)) {
    const Matrix R = right_word_shift(sys, r, m);
    out.noalias() += R * A * R.adjoint();
  }
  return out;
}

// U_l^H (A ⊗ 1) U_l with A lifted through U_m.
inline Matrix iota_compressed(const SubproductSystem& sys, const Matrix& A, int m, int l) {
  detail::require_order(sys, m, l);
  detail::require_square(sys, A, m, "iota");
  const Matrix& Um = sys.U[static_cast<std::size_t>(m)];
  const Matrix& Ul = sys.U[static_cast<std::size_t>(l)];
  const Matrix lift = Um * A * Um.adjoint();
  return Ul.adjoint() * detail::left_factor_times(lift, Ul, sys.ambient(l - m));
}

// ῑ_{m,l}(A) = Σ_{|s|=l-m} S_s A S_s^*
inline Matrix iota_bar(const SubproductSystem& sys, const Matrix& A, int m, int l) {
  detail::require_order(sys, m, l);
  detail::require_square(sys, A, m, "iota_bar");
  Matrix out = Matrix::Zero(sys.dim(l), sys.dim(l));
  for (const Word& s : words_of_length(sys.n, l - m)) {
    const Matrix S = word_shift_direct(sys, s, m);
    out.noalias() += S * A * S.adjoint();
  }
  return out;
}

inline Matrix iota_bar_compressed(const SubproductSystem& sys, const Matrix& A, int m, int l) {
  detail::require_order(sys, m, l);
  detail::require_square(sys, A, m, "iota_bar");
  const Matrix& Um = sys.U[static_cast<std::size_t>(m)];
  const Matrix& Ul = sys.U[static_cast<std::size_t>(l)];
  const Matrix lift = Um * A * Um.adjoint();
  return Ul.adjoint() * detail::right_factor_times(lift, Ul, sys.ambient(l - m));
}

// Matrix of p_l (p_a ⊗ p_b) p_l seen on H_a ⊗ H_b, a + b = l: W W^H with W = (U_a ⊗ U_b)^H U_l.
inline Matrix split_projection(const SubproductSystem& sys, int a, int b) {
  detail::require_order(sys, a, a + b);
  const Matrix W = kron_adjoint_times(sys.U[static_cast<std::size_t>(a)], sys.U[static_cast<std::size_t>(b)],
                                      sys.U[static_cast<std::size_t>(a + b)]);
  return W * W.adjoint();
}

inline double isometry_prefactor(const WeightSystem& ws, int m, int l) {
  return std::sqrt(ws.tr(m) * ws.tr(l - m) / ws.tr(l));
}

// V : H_l -> H_m ⊗ H_{l-m}, ψ ↦ λ Σ_r R_r^* ψ ⊗ e_r.
inline Matrix isometry_V(const WeightSystem& ws, int m, int l) {
  const auto& sys = *ws.sys;
  detail::require_order(sys, m, l);
  const Matrix& Ur = sys.U[static_cast<std::size_t>(l - m)];
  Matrix V = Matrix::Zero(static_cast<Eigen::Index>(sys.dim(m)) * sys.dim(l - m), sys.dim(l));
  for (const Word& r : words_of_length(sys.n, l - m)) {
    const Matrix c = detail::frame_vector(Ur, word_index(r, sys.n));
    V += kron(Matrix(right_word_shift(sys, r, m).adjoint()), c, SizeCaps{INT64_MAX, INT64_MAX});
  }
  return isometry_prefactor(ws, m, l) * V;
}

inline Matrix isometry_V_direct(const WeightSystem& ws, int m, int l) {
  const auto& sys = *ws.sys;
  detail::require_order(sys, m, l);
  return isometry_prefactor(ws, m, l) *
         kron_adjoint_times(sys.U[static_cast<std::size_t>(m)], sys.U[static_cast<std::size_t>(l - m)], sys.U[static_cast<std::size_t>(l)]);
}

// V̄ : H_l -> H_{l-m} ⊗ H_m, ψ ↦ λ Σ_r e_r ⊗ S_r^* ψ.
inline Matrix isometry_Vbar(const WeightSystem& ws, int m, int l) {
  const auto& sys = *ws.sys;
  detail::require_order(sys, m, l);
  const Matrix& Ur = sys.U[static_cast<std::size_t>(l - m)];
  Matrix V = Matrix::Zero(static_cast<Eigen::Index>(sys.dim(l - m)) * sys.dim(m), sys.dim(l));
  for (const Word& r : words_of_length(sys.n, l - m)) {
    const Matrix c = detail::frame_vector(Ur, word_index(r, sys.n));
    V += kron(c, Matrix(word_shift_direct(sys, r, m).adjoint()), SizeCaps{INT64_MAX, INT64_MAX});
  }
  return isometry_prefactor(ws, m, l) * V;
}

inline Matrix isometry_Vbar_direct(const WeightSystem& ws, int m, int l) {
  const auto& sys = *ws.sys;
  detail::require_order(sys, m, l);
  return isometry_prefactor(ws, m, l) *
         kron_adjoint_times(sys.U[static_cast<std::size_t>(l - m)], sys.U[static_cast<std::size_t>(m)], sys.U[static_cast<std::size_t>(l)]);
}

// Adjoint for the inner products weighted by ρ_l and ρ_a ⊗ ρ_b.
inline Matrix weighted_adjoint(const WeightSystem& ws, const Matrix& V, int a, int b) {
  const Matrix rho_ab = kron(ws.rho_m(a), ws.rho_m(b), SizeCaps{INT64_MAX, INT64_MAX});
  return ws.Qinv[static_cast<std::size_t>(a + b)] * ws.tr(a + b) * V.adjoint() * rho_ab;
}

// j_{l,m}(A) = (Tr Q_m / Tr Q_l) Σ_{|r|=l-m} q_r R_r^* A R_r
inline Matrix jmath(const WeightSystem& ws, const Matrix& A, int l, int m) {
  const auto& sys = *ws.sys;
  detail::require_order(sys, m, l);
  detail::require_square(sys, A, l, "jmath");
  Matrix out = Matrix::Zero(sys.dim(m), sys.dim(m));
  for (const Word& r : words_of_length(sys.n, l - m)) {
    const Matrix R = right_word_shift(sys, r, m);
    out.noalias() += ws.word_weight(r) * (R.adjoint() * A * R);
  }
  return (ws.tr(m) / ws.tr(l)) * out;
}

// (id ⊗ φ_{l-m})(V A V^H), Euclidean adjoint of V.
inline Matrix jmath_partial_trace(const WeightSystem& ws, const Matrix& A, int l, int m) {
  const auto& sys = *ws.sys;
  detail::require_order(sys, m, l);
  detail::require_square(sys, A, l, "jmath");
  const Matrix V = isometry_V_direct(ws, m, l);
  const Matrix X = V * A * V.adjoint();
  const Eigen::Index dm = sys.dim(m), dr = sys.dim(l - m);
  const Matrix& rho = ws.rho_m(l - m);
  Matrix out = Matrix::Zero(dm, dm);
  for (Eigen::Index i = 0; i < dm; ++i)
    for (Eigen::Index j = 0; j < dm; ++j)
      out(i, j) = (X.block(i * dr, j * dr, dr, dr).cwiseProduct(rho.transpose())).sum();
  return out;
}

inline Matrix jmath_bar(const WeightSystem& ws, const Matrix& A, int l, int m) {
  const auto& sys = *ws.sys;
  detail::require_order(sys, m, l);
  detail::require_square(sys, A, l, "jmath_bar");
  Matrix out = Matrix::Zero(sys.dim(m), sys.dim(m));
  for (const Word& s : words_of_length(sys.n, l - m)) {
    const Matrix S = word_shift_direct(sys, s, m);
    out.noalias() += ws.word_weight(s) * (S.adjoint() * A * S);
  }
  return (ws.tr(m) / ws.tr(l)) * out;
}

// (φ_{l-m} ⊗ id)(V̄ A V̄^H)
inline Matrix jmath_bar_partial_trace(const WeightSystem& ws, const Matrix& A, int l, int m) {
  const auto& sys = *ws.sys;
  detail::require_order(sys, m, l);
  detail::require_square(sys, A, l, "jmath_bar");
  const Matrix V = isometry_Vbar_direct(ws, m, l);
  const Matrix X = V * A * V.adjoint();
  const Eigen::Index dm = sys.dim(m), dr = sys.dim(l - m);
  const Matrix& rho = ws.rho_m(l - m);
  Matrix out = Matrix::Zero(dm, dm);
  for (Eigen::Index a = 0; a < dr; ++a)
    for (Eigen::Index b = 0; b < dr; ++b) out += rho(b, a) * X.block(a * dm, b * dm, dm, dm);
  return out;
}

// ι^{(k)}_{m,l}(X) = Σ_{|r|=l-m} R_r X R_r^* for X : H_m -> H_{m+k}.
inline Matrix graded_iota(const SubproductSystem& sys, const Matrix& X, int m, int l, int k) {
  detail::require_order(sys, m, l);
  if (m + k < 0 || l + k > sys.M) throw range_error("graded_iota: level range leaves 0..M");
  if (X.rows() != sys.dim(m + k) || X.cols() != sys.dim(m)) throw range_error("graded_iota: shape mismatch");
  Matrix out = Matrix::Zero(sys.dim(l + k), sys.dim(l));
  for (const Word& r : words_of_length(sys.n, l - m))
    out.noalias() += right_word_shift(sys, r, m + k) * X * right_word_shift(sys, r, m).adjoint();
  return out;
}

// ς^{(m,k)}(X): blocks ι^{(k)}_{m,l}(X) on every admissible level l >= m.
inline GradedOperator graded_symbol(const SystemPtr& sys, const Matrix& X, int m, int k) {
  GradedOperator out(sys, k);
  for (int l = m; l + k <= sys->M && l <= sys->M; ++l) out.set_block(l, graded_iota(*sys, X, m, l, k));
  return out;
}

// Same pairing-adjoint for degree-k blocks: X : H_l -> H_{l+k} to H_m -> H_{m+k}.
inline Matrix graded_jmath(const WeightSystem& ws, const Matrix& X, int l, int m, int k) {
  const auto& sys = *ws.sys;
  detail::require_order(sys, m, l);
  if (m + k < 0 || l + k > sys.M) throw range_error("graded_jmath: level range leaves 0..M");
  if (X.rows() != sys.dim(l + k) || X.cols() != sys.dim(l)) throw range_error("graded_jmath: shape mismatch");
  Matrix out = Matrix::Zero(sys.dim(m + k), sys.dim(m));
  for (const Word& r : words_of_length(sys.n, l - m))
    out.noalias() += ws.word_weight(r) * (right_word_shift(sys, r, m + k).adjoint() * X * right_word_shift(sys, r, m));
  return (ws.tr(m) / ws.tr(l)) * out;
}

namespace detail {

// [S_{w_1}|_{H_p}, ..., S_{w_N}|_{H_p}] over all words of length m, side by side.
inline Matrix stacked_word_shifts(const SubproductSystem& sys, int m, int p) {
  const int dp = sys.dim(p);
  const auto words = words_of_length(sys.n, m);
  Matrix out(sys.dim(m + p), static_cast<Eigen::Index>(words.size()) * dp);
  for (std::size_t i = 0; i < words.size(); ++i)
    out.middleCols(static_cast<Eigen::Index>(i) * dp, dp) = word_shift_direct(sys, words[i], p);
  return out;
}

}  // namespace detail

// ς^{(m)}(A) = Σ A_{j,k} S_j S_k^* with frame coefficients A_{j,k} = (U_m A U_m^H)_{j,k}.
inline GradedOperator covariant_symbol(const SystemPtr& sys, const Matrix& A, int m) {
  detail::require_square(*sys, A, m, "covariant_symbol");
  const Matrix& Um = sys->U[static_cast<std::size_t>(m)];
  const Matrix C = Um * A * Um.adjoint();
  GradedOperator out(sys, 0, "cov");
  for (int l = m; l <= sys->M; ++l) {
    const Matrix W = detail::stacked_word_shifts(*sys, m, l - m);
    const Matrix CI = kron(C, Matrix::Identity(sys->dim(l - m), sys->dim(l - m)), SizeCaps{INT64_MAX, INT64_MAX});
    out.set_block(l, W * CI * W.adjoint());
  }
  return out;
}

struct LimitValue {
  std::vector<std::pair<int, cplx>> levels;
  cplx value = 0;
  bool exact = false;
};

inline constexpr double constancy_tol = 1e-10;

// Per-level values φ_l(X_l); the top value stands in for ω_Q.
inline LimitValue limit_state(const WeightSystem& ws, const GradedOperator& X) {
  if (X.degree() != 0) throw range_error("limit_state needs a degree-0 sequence");
  if (X.empty()) throw range_error("limit_state: empty sequence");
  LimitValue out;
  for (const auto& [l, B] : X.blocks()) out.levels.emplace_back(l, phi(ws, l, B));
  out.value = out.levels.back().second;
  const std::size_t n = out.levels.size();
  if (n >= 3) {
    out.exact = true;
    for (std::size_t i = n - 3; i < n; ++i)
      if (std::abs(out.levels[i].second - out.value) > constancy_tol * std::max(1.0, std::abs(out.value))) out.exact = false;
  }
  return out;
}

namespace detail {

inline int contravariant_eval_level(const SubproductSystem& sys, const ShiftPolynomial& f, int m) {
  const int k = f.degree();
  const int required = 2 * m + f.creation_degree() + std::max(k, 0);
  if (sys.M < required) throw headroom_error("contravariant symbol at level " + std::to_string(m), required);
  return sys.M - std::max(k, 0);
}

inline void require_symbol_input(const ShiftPolynomial& f) {
  if (f.degree() == 0 && !f.is_non_raising())
    throw range_error("contravariant symbol needs normally ordered factors; got '" + f.str() + "'");
}

}  // namespace detail

// ς̆_k^{(m)}(f) : H_m -> H_{m+k} for f of degree k, by the sum formula
// Tr(Q_m) Σ q_j^{-1} ω_Q(Z_j Z_κ^* f) S_κ S_j^*|_{H_m} with ω_Q read at the top level.
inline Matrix contravariant_symbol(const WeightSystem& ws, const ShiftPolynomial& f, int m) {
  const auto& sys = *ws.sys;
  sys.require_level(m);
  detail::require_symbol_input(f);
  const int k = f.degree();
  if (m + k < 0) throw range_error("contravariant symbol: level m + degree is negative");
  const int L = detail::contravariant_eval_level(sys, f, m);
  const GradedOperator rep = representative(ws.sys, f);
  if (!rep.has_block(L)) throw headroom_error("representative of '" + f.str() + "' undefined at level " + std::to_string(L), sys.M + 1);
  const Matrix G = rep.block(L) * ws.rho_m(L);
  const Matrix Wj = detail::stacked_word_shifts(sys, m, L - m);       // H_{L-m} -> H_L
  const Matrix Wk = detail::stacked_word_shifts(sys, m + k, L - m);   // H_{L-m} -> H_{L+k}
  const Matrix P = Wk.adjoint() * G * Wj;
  const Eigen::Index dp = sys.dim(L - m);
  const auto wj = words_of_length(sys.n, m);
  const auto wk = words_of_length(sys.n, m + k);
  // C(κ, j) = ω(Z_j Z_κ^* f) / q_j
  Matrix C(static_cast<Eigen::Index>(wk.size()), static_cast<Eigen::Index>(wj.size()));
  for (std::size_t a = 0; a < wk.size(); ++a)
    for (std::size_t b = 0; b < wj.size(); ++b)
      C(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          P.block(static_cast<Eigen::Index>(a) * dp, static_cast<Eigen::Index>(b) * dp, dp, dp).trace() / ws.word_weight(wj[b]);
  const Matrix& Um = sys.U[static_cast<std::size_t>(m)];
  const Matrix& Umk = sys.U[static_cast<std::size_t>(m + k)];
  return ws.tr(m) * (Umk.adjoint() * C * Um);
}

// Second route: j^{(k)}_{L,m}(f_L).
inline Matrix contravariant_symbol_projective(const WeightSystem& ws, const ShiftPolynomial& f, int m) {
  const auto& sys = *ws.sys;
  sys.require_level(m);
  detail::require_symbol_input(f);
  const int L = detail::contravariant_eval_level(sys, f, m);
  const GradedOperator rep = representative(ws.sys, f);
  return graded_jmath(ws, rep.block(L), L, m, f.degree());
}

// The sequence m ↦ ς̆^{(m)}(f) over every level with enough headroom.
inline GradedOperator contravariant_sequence(const WeightSystem& ws, const ShiftPolynomial& f) {
  GradedOperator out(ws.sys, f.degree(), "contra(" + f.str() + ")");
  for (int m = std::max(0, -f.degree());; ++m) {
    try {
      out.set_block(m, contravariant_symbol(ws, f, m));
    } catch (const headroom_error&) {
      break;
    }
  }
  if (out.empty()) throw headroom_error("no level admits a contravariant symbol", 2 + f.creation_degree());
  return out;
}

struct BerezinResult {
  GradedOperator transform;
  GradedOperator difference;
  std::vector<std::pair<int, double>> level_norms;
  double tail_norm = 0;
};

inline constexpr int default_window = 3;

// β^{(m)}(f) = ς^{(m)}(ς̆^{(m)}(f)) compared with the representative of f.
inline BerezinResult berezin_transform(const WeightSystem& ws, const ShiftPolynomial& f, int m, int window = default_window) {
  if (f.degree() != 0) throw range_error("Berezin transform needs a degree-0 element");
  const Matrix contra = contravariant_symbol(ws, f, m);
  GradedOperator beta = covariant_symbol(ws.sys, contra, m);
  GradedOperator diff = subtract(beta, representative(ws.sys, f));
  BerezinResult out{beta, diff, level_norms(diff), 0.0};
  const std::size_t n = out.level_norms.size();
  for (std::size_t i = n > static_cast<std::size_t>(window) ? n - static_cast<std::size_t>(window) : 0; i < n; ++i)
    out.tail_norm = std::max(out.tail_norm, out.level_norms[i].second);
  return out;
}

}  // namespace subfock
