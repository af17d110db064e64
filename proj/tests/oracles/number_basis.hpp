#pragma once

// Closed-form model of the symmetric two-variable system with Q = 1.
// Level m has basis |a> (a = number of letters 1, 0 <= a <= m); the shifts
// act by S_1|a> = sqrt((a+1)/(m+1)) |a+1>, S_2|a> = sqrt((m-a+1)/(m+1)) |a>.
// Nothing here touches the library; it is the reference the tests compare to.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

using Mat = Eigen::MatrixXd;

inline Mat shift(int k, int m) {
  Mat S = Mat::Zero(m + 2, m + 1);
  for (int a = 0; a <= m; ++a) {
    if (k == 1) S(a + 1, a) = std::sqrt((a + 1.0) / (m + 1.0));
    else S(a, a) = std::sqrt((m - a + 1.0) / (m + 1.0));
  }
  return S;
}

inline double norm(const Mat& A) {
  if (A.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Mat>(A).singularValues()(0);
}

// ι_{m,m+1}(A) = Σ_k S_k A S_k^T (right and left shifts coincide here).
inline Mat iota_step(const Mat& A, int m) { return shift(1, m) * A * shift(1, m).transpose() + shift(2, m) * A * shift(2, m).transpose(); }

inline Mat iota(Mat A, int m, int l) {
  for (int r = m; r < l; ++r) A = iota_step(A, r);
  return A;
}

// j_{m+1,m}(A) = (Tr Q_m / Tr Q_{m+1}) Σ_k S_k^T A S_k with Tr Q_m = m + 1.
inline Mat j_step(const Mat& A, int m) {
  return (m + 1.0) / (m + 2.0) * (shift(1, m).transpose() * A * shift(1, m) + shift(2, m).transpose() * A * shift(2, m));
}

inline Mat jmath(Mat A, int l, int m) {
  for (int r = l - 1; r >= m; --r) A = j_step(A, r);
  return A;
}

// Z_k Z_k^* at level l.
inline Mat number_projection(int k, int l) {
  if (l == 0) return Mat::Zero(1, 1);
  return shift(k, l - 1) * shift(k, l - 1).transpose();
}

// Contravariant symbol of a degree-0 element read at the top level L.
inline Mat contravariant(const Mat& fL, int L, int m) { return jmath(fL, L, m); }

// Tail of ‖ι_{m,l}(ς̆^{(m)}(f)) − f_l‖ over the top three levels, f = Z_k Z_k^*.
inline double berezin_difference(int k, int m, int M) {
  const Mat T = contravariant(number_projection(k, M), M, m);
  double out = 0;
  for (int l = std::max(m, M - 2); l <= M; ++l) out = std::max(out, norm(iota(T, m, l) - number_projection(k, l)));
  return out;
}

// ‖ς̆(fg) − ς̆(f)ς̆(g)‖ for f = Z_1Z_1^*, g = Z_2Z_2^*.
inline double von_neumann_gap(int m, int M) {
  const Mat f = number_projection(1, M), g = number_projection(2, M);
  return norm(contravariant(f * g, M, m) - contravariant(f, M, m) * contravariant(g, M, m));
}

// ‖[S_1, S_2^*]|_{H_m}‖
inline double cross_commutator(int m) {
  Mat X = -shift(2, m).transpose() * shift(1, m);
  if (m > 0) X += shift(1, m - 1) * shift(2, m - 1).transpose();
  return norm(X);
}

// ‖Σ_k S_k^* S_k|_{H_m} − 1‖
inline double qsphere(int m) {
  const Mat X = shift(1, m).transpose() * shift(1, m) + shift(2, m).transpose() * shift(2, m) - Mat::Identity(m + 1, m + 1);
  return norm(X);
}

// ‖j_{m+r,m}(X_{m+r} Y_{m+r}) − j_{L,m}(X_L Y_L)‖ with X_l = j_{L,l}(f_L), Y_l = j_{L,l}(g_L).
inline std::vector<double> choi_effros(const Mat& fL, const Mat& gL, int L, int m) {
  const Mat ref = jmath(fL * gL, L, m);
  std::vector<double> out;
  for (int r = 1; r <= L - m - 1; ++r) {
    const int l = m + r;
    out.push_back(norm(jmath(jmath(fL, L, l) * jmath(gL, L, l), l, m) - ref));
  }
  return out;
}

// Binomial coefficient as a double, exact in the tested range.
inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
