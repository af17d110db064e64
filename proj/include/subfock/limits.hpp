#pragma once

#include <vector>

#include "subfock/quantize.hpp"

namespace subfock {

// Degree-0 sequences (X_m) reuse GradedOperator.
using SequenceElement = GradedOperator;

struct NormProfile {
  double value = 0;
  std::vector<std::pair<int, double>> profile;
};

// Max of ‖X_m‖ over the top `window` levels, with the whole profile.
inline NormProfile asymptotic_norm(const SequenceElement& X, int window = default_window) {
  if (X.empty()) throw range_error("asymptotic_norm: empty sequence");
  if (window < 1) throw range_error("asymptotic_norm: window must be positive");
  NormProfile out{0.0, level_norms(X)};
  const std::size_t n = out.profile.size();
  for (std::size_t i = n > static_cast<std::size_t>(window) ? n - static_cast<std::size_t>(window) : 0; i < n; ++i)
    out.value = std::max(out.value, out.profile[i].second);
  return out;
}

// ‖ι_{r,l}(ι_{m,r}(A) ι_{m,r}(B)) − ι_{m,l}(A) ι_{m,l}(B)‖
inline double asymptotic_mult_gap(const SubproductSystem& sys, const Matrix& A, const Matrix& B, int m, int r, int l) {
  if (!(m <= r && r <= l)) throw range_error("asymptotic_mult_gap: need m <= r <= l");
  const Matrix left = iota(sys, Matrix(iota(sys, A, m, r) * iota(sys, B, m, r)), r, l);
  return operator_norm(left - iota(sys, A, m, l) * iota(sys, B, m, l));
}

// (Φ X)_m = j_{m+1,m}(X_{m+1}); the top level drops out.
inline SequenceElement markov_apply(const WeightSystem& ws, const SequenceElement& X) {
  if (X.degree() != 0) throw range_error("Markov operator needs a degree-0 sequence");
  SequenceElement out(ws.sys, 0, X.label().empty() ? "" : "Phi(" + X.label() + ")");
  for (const auto& [m, B] : X.blocks())
    if (X.has_block(m + 1)) out.set_block(m, jmath(ws, X.block(m + 1), m + 1, m));
  if (out.empty()) throw range_error("Markov operator: fewer than two consecutive levels");
  return out;
}

inline SequenceElement markov_power(const WeightSystem& ws, SequenceElement X, int r) {
  for (int i = 0; i < r; ++i) X = markov_apply(ws, X);
  return X;
}

// Φ^r(XY) with the pointwise product.
inline SequenceElement choi_effros_product(const WeightSystem& ws, const SequenceElement& X, const SequenceElement& Y, int r) {
  if (X.degree() != 0 || Y.degree() != 0) throw range_error("Choi-Effros product needs degree-0 sequences");
  if (r < 0) throw range_error("Choi-Effros product: r must be non-negative");
  const SequenceElement XY = compose(X, Y);
  if (XY.max_level() - XY.min_level() < r) throw range_error("Choi-Effros product: not enough levels for r");
  return markov_power(ws, XY, r);
}

// m ↦ j_{L,m}(f_L) on every level 0..L, L the top level of the representative.
// Agrees with ς̆^{(m)}(f) wherever the latter has headroom, and is Φ-fixed.
inline SequenceElement projective_sequence(const WeightSystem& ws, const ShiftPolynomial& f) {
  if (f.degree() != 0) throw range_error("projective sequence needs a degree-0 element");
  detail::require_symbol_input(f);
  const GradedOperator rep = representative(ws.sys, f);
  const int L = rep.max_level();
  SequenceElement out(ws.sys, 0, "proj(" + f.str() + ")");
  for (int m = 0; m <= L; ++m) out.set_block(m, jmath(ws, rep.block(L), L, m));
  return out;
}

// Projective-limit product at level m, read at the top level: j_{L,m}(X_L Y_L).
inline Matrix projective_product(const WeightSystem& ws, const SequenceElement& X, const SequenceElement& Y, int m) {
  const SequenceElement XY = compose(X, Y);
  const int L = XY.max_level();
  return jmath(ws, XY.block(L), L, m);
}

struct ChoiEffrosRow {
  int r;
  double residual;
};

// ‖Φ^r(XY)_m − j_{L,m}(X_L Y_L)‖ for r = 1..L-m-1.
inline std::vector<ChoiEffrosRow> choi_effros_profile(const WeightSystem& ws, const SequenceElement& X, const SequenceElement& Y, int m) {
  const SequenceElement XY = compose(X, Y);
  const int L = XY.max_level();
  if (m < XY.min_level() || m > L - 2) throw range_error("Choi-Effros profile: level m needs two levels of headroom");
  const Matrix ref = jmath(ws, XY.block(L), L, m);
  std::vector<ChoiEffrosRow> out;
  for (int r = 1; r <= L - m - 1; ++r)
    out.push_back({r, operator_norm(jmath(ws, XY.block(m + r), m + r, m) - ref)});
  return out;
}

struct SequenceInfo {
  bool iota_constant = false;
  bool j_constant = false;
};

inline SequenceInfo detect_constancy(const WeightSystem& ws, const SequenceElement& X, double tol = 1e-10) {
  if (X.degree() != 0) throw range_error("constancy detection needs a degree-0 sequence");
  SequenceInfo info{true, true};
  const int lo = X.min_level(), hi = X.max_level();
  if (hi - lo < 1) return {false, false};
  for (int l = lo + 1; l <= hi; ++l) {
    if (!X.has_block(l) || !X.has_block(l - 1)) return {false, false};
    const double scale = std::max(1.0, operator_norm(X.block(l)));
    if (operator_norm(iota(*ws.sys, X.block(l - 1), l - 1, l) - X.block(l)) > tol * scale) info.iota_constant = false;
    if (operator_norm(jmath(ws, X.block(l), l, l - 1) - X.block(l - 1)) > tol * scale) info.j_constant = false;
  }
  return info;
}

struct StrictRow {
  int m;
  double rieffel;
  double von_neumann;
  double dirac;
};

// Rieffel, von Neumann and Dirac profiles of ς̆^{(m)} for m in [m_lo, m_hi].
inline std::vector<StrictRow> strict_quantization_report(const WeightSystem& ws, const ShiftPolynomial& f,
                                                         const ShiftPolynomial& g, int m_lo, int m_hi) {
  std::vector<StrictRow> out;
  const ShiftPolynomial fg = f * g;
  for (int m = m_lo; m <= m_hi; ++m) {
    const Matrix Tf = contravariant_symbol(ws, f, m);
    const Matrix Tg = contravariant_symbol(ws, g, m);
    const Matrix Tfg = contravariant_symbol(ws, fg, m);
    out.push_back({m, operator_norm(Tf), operator_norm(Tfg - Tf * Tg), m * operator_norm(Tf * Tg - Tg * Tf)});
  }
  return out;
}

// Largest m with M >= 2m + (creation degree of fg).
inline int strict_max_level(const SubproductSystem& sys, const ShiftPolynomial& f, const ShiftPolynomial& g) {
  return (sys.M - (f * g).creation_degree()) / 2;
}

// ‖[S_i, S_j]|_{H_m}‖ (H_m -> H_{m+2}) or ‖[S_i, S_j^*]|_{H_m}‖.
inline double shift_commutator_norm(const SubproductSystem& sys, int i, int j, int m, bool with_adjoint) {
  if (!with_adjoint) {
    if (m + 2 > sys.M) throw range_error("[S_i,S_j] needs level m+2 <= M");
    return operator_norm(shift_block(sys, i, m + 1) * shift_block(sys, j, m) -
                         shift_block(sys, j, m + 1) * shift_block(sys, i, m));
  }
  if (m + 1 > sys.M) throw range_error("[S_i,S_j^*] needs level m+1 <= M");
  Matrix X = -shift_block(sys, j, m).adjoint() * shift_block(sys, i, m);
  if (m > 0) X += shift_block(sys, i, m - 1) * shift_block(sys, j, m - 1).adjoint();
  return operator_norm(X);
}

struct ArvesonRow {
  int m;
  double commutator;        // max_{i<j} ‖[S_i,S_j]|_{H_m}‖
  double cross_commutator;  // max_{i,j} ‖[S_i,S_j^*]|_{H_m}‖
};

struct ArvesonReport {
  bool applies = false;
  std::vector<ArvesonRow> rows;
};

inline constexpr double commutative_tol = 1e-12;

inline ArvesonReport arveson_report(const SubproductSystem& sys) {
  ArvesonReport rep;
  rep.applies = sys.commutative || symmetry_residual(sys) <= commutative_tol;
  for (int m = 0; m + 2 <= sys.M; ++m) {
    ArvesonRow row{m, 0.0, 0.0};
    for (int i = 1; i <= sys.n; ++i)
      for (int j = 1; j <= sys.n; ++j) {
        if (i < j) row.commutator = std::max(row.commutator, shift_commutator_norm(sys, i, j, m, false));
        row.cross_commutator = std::max(row.cross_commutator, shift_commutator_norm(sys, i, j, m, true));
      }
    rep.rows.push_back(row);
  }
  return rep;
}

// ‖Σ_r q_r^{-1} S_r^* S_r|_{H_m} − q_1^{-1} 1‖
inline double qsphere_residual(const WeightSystem& ws, int m) {
  const auto& sys = *ws.sys;
  if (m < 0 || m + 1 > sys.M) throw range_error("qsphere residual needs level m+1 <= M");
  Matrix X = -Matrix::Identity(sys.dim(m), sys.dim(m)) / ws.q[0];
  for (int r = 1; r <= sys.n; ++r) {
    const Matrix S = shift_block(sys, r, m);
    X += (S.adjoint() * S) / ws.q[static_cast<std::size_t>(r - 1)];
  }
  return operator_norm(X);
}

struct SpanReport {
  Eigen::Index rank = 0;
  Eigen::Index dimension = 0;
};

// Rank of span{S_j S_k^*|_{H_m} : |j| = |k| <= m} inside B(H_m).
inline SpanReport normal_order_span_report(const SubproductSystem& sys, int m, double tol = default_rank_tol) {
  if (m < 0 || 2 * m > sys.M) throw range_error("normal-order span report needs 2m <= M");
  const Eigen::Index d = sys.dim(m);
  std::vector<Matrix> ops;
  for (int p = 0; p <= m; ++p) {
    const Matrix W = detail::stacked_word_shifts(sys, p, m - p);
    const Eigen::Index dp = sys.dim(m - p);
    const Eigen::Index N = dp == 0 ? 0 : W.cols() / dp;
    for (Eigen::Index a = 0; a < N; ++a)
      for (Eigen::Index b = 0; b < N; ++b) ops.push_back(W.middleCols(a * dp, dp) * W.middleCols(b * dp, dp).adjoint());
  }
  Matrix stack(d * d, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t i = 0; i < ops.size(); ++i) stack.col(static_cast<Eigen::Index>(i)) = ops[i].reshaped();
  return {numerical_rank(stack, tol), d * d};
}

}  // namespace subfock
