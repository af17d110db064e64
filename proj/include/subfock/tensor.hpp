#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <compare>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "subfock/error.hpp"

namespace subfock {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowMajorMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr double default_rank_tol = 1e-10;

struct SizeCaps {
  std::int64_t hard = 8192;
  std::int64_t warn = 2048;
};

// A word in the letters 1..n; e_w is the basis vector of H^{⊗|w|}.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters) : letters_(letters) {}
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  Word operator+(const Word& other) const {
    std::vector<int> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(out));
  }

  Word sorted() const {
    std::vector<int> out = letters_;
    std::sort(out.begin(), out.end());
    return Word(std::move(out));
  }

  Word reversed() const { return Word(std::vector<int>(letters_.rbegin(), letters_.rend())); }

  std::string str() const {
    std::string s;
    for (int k : letters_) {
      if (!s.empty()) s += ',';
      s += std::to_string(k);
    }
    return "(" + s + ")";
  }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<int> letters_;
};

// n^m, throwing when the result leaves the 64-bit range.
inline std::int64_t ipow(std::int64_t n, int m) {
  if (m < 0) throw range_error("negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < m; ++i) {
    if (n != 0 && r > INT64_MAX / n) throw capacity_error("dimension overflow");
    r *= n;
  }
  return r;
}

inline std::int64_t word_index(const Word& w, int n) {
  std::int64_t idx = 0;
  for (int k : w.letters()) {
    if (k < 1 || k > n)
      throw range_error("letter " + std::to_string(k) + " outside 1.." + std::to_string(n));
    idx = idx * n + (k - 1);
  }
  return idx;
}

inline Word word_from_index(std::int64_t idx, int n, int m) {
  if (idx < 0 || idx >= ipow(n, m)) throw range_error("word index out of range");
  std::vector<int> letters(m);
  for (int i = m - 1; i >= 0; --i) {
    letters[i] = static_cast<int>(idx % n) + 1;
    idx /= n;
  }
  return Word(std::move(letters));
}

// All words of length m in index order.
inline std::vector<Word> words_of_length(int n, int m) {
  const std::int64_t count = ipow(n, m);
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out.push_back(word_from_index(i, n, m));
  return out;
}

// Sorted words of length m, one per multiset of letters, in lexicographic order.
inline std::vector<Word> sorted_words(int n, int m) {
  std::vector<Word> out;
  std::vector<int> cur(m, 1);
  if (m == 0) return {Word{}};
  while (true) {
    out.emplace_back(cur);
    int i = m - 1;
    while (i >= 0 && cur[i] == n) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < m; ++j) cur[j] = cur[i];
  }
  return out;
}

inline Matrix kron(const Matrix& A, const Matrix& B, const SizeCaps& caps = {}) {
  const std::int64_t rows = static_cast<std::int64_t>(A.rows()) * B.rows();
  const std::int64_t cols = static_cast<std::int64_t>(A.cols()) * B.cols();
  if (rows > caps.hard || cols > caps.hard)
    throw capacity_error("kron result " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " exceeds cap " + std::to_string(caps.hard));
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

inline Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

// (A ⊗ B)^H V without forming the Kronecker product; each column of V is
// read as a row-major rows(A) x rows(B) array.
inline Matrix kron_adjoint_times(const Matrix& A, const Matrix& B, const Matrix& V) {
  if (V.rows() != A.rows() * B.rows()) throw range_error("kron_adjoint_times: shape mismatch");
  Matrix out(A.cols() * B.cols(), V.cols());
  const Matrix Ah = A.adjoint();
  const Matrix Bc = B.conjugate();
  for (Eigen::Index c = 0; c < V.cols(); ++c) {
    Eigen::Map<const RowMajorMatrix> psi(V.col(c).data(), A.rows(), B.rows());
    Eigen::Map<RowMajorMatrix> dst(out.col(c).data(), A.cols(), B.cols());
    dst.noalias() = Ah * psi * Bc;
  }
  return out;
}

// (A ⊗ B) V, same conventions.
inline Matrix kron_times(const Matrix& A, const Matrix& B, const Matrix& V) {
  if (V.rows() != A.cols() * B.cols()) throw range_error("kron_times: shape mismatch");
  Matrix out(A.rows() * B.rows(), V.cols());
  const Matrix Bt = B.transpose();
  for (Eigen::Index c = 0; c < V.cols(); ++c) {
    Eigen::Map<const RowMajorMatrix> psi(V.col(c).data(), A.cols(), B.cols());
    Eigen::Map<RowMajorMatrix> dst(out.col(c).data(), A.rows(), B.rows());
    dst.noalias() = A * psi * Bt;
  }
  return out;
}

inline double operator_norm(const Matrix& A) {
  if (A.size() == 0) return 0.0;
  if (A.rows() == 1 || A.cols() == 1) return A.norm();
  Eigen::BDCSVD<Matrix> svd(A);
  return svd.singularValues()(0);
}

// Operator norm of a Hermitian matrix via its spectrum.
inline double hermitian_norm(const Matrix& H) {
  if (H.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// Orthonormal basis of {x : K x ≈ 0}; singular values at or below
// tol * max(sigma_max, floor) count as zero. Jacobi SVD: the divide-and-conquer
// variant loses the right singular vectors of large zero clusters.
inline Matrix null_space(const Matrix& K, double tol, double floor = 0.0) {
  if (!(tol > 0)) throw range_error("tolerance must be positive");
  const Eigen::Index c = K.cols();
  if (c == 0) return Matrix(0, 0);
  if (K.rows() == 0) return Matrix::Identity(c, c);
  Eigen::JacobiSVD<Matrix> svd(K, K.rows() >= c ? Eigen::ComputeThinV : Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double thr = tol * std::max(s(0), floor);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > thr) ++rank;
  return svd.matrixV().rightCols(c - rank);
}

// Orthonormal basis of the orthogonal complement of span(spanning).
inline Matrix orthonormal_complement(const std::vector<Vector>& spanning, Eigen::Index ambient_dim,
                                     double tol = default_rank_tol) {
  if (!(tol > 0)) throw range_error("tolerance must be positive");
  if (spanning.empty()) return Matrix::Identity(ambient_dim, ambient_dim);
  Matrix S(ambient_dim, static_cast<Eigen::Index>(spanning.size()));
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    if (spanning[i].size() != ambient_dim) throw range_error("spanning vector has wrong length");
    S.col(static_cast<Eigen::Index>(i)) = spanning[i];
  }
  return null_space(S.adjoint(), tol);
}

// Numerical rank at threshold tol * sigma_max.
inline Eigen::Index numerical_rank(const Matrix& A, double tol = default_rank_tol) {
  if (A.size() == 0) return 0;
  Eigen::BDCSVD<Matrix> svd(A);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > tol * s(0)) ++r;
  return r;
}

// Orbit average over letter permutations: the symmetrizer on H^{⊗m}.
inline Vector symmetrize(const Vector& v, int n, int m) {
  if (v.size() != ipow(n, m)) throw range_error("symmetrize: length mismatch");
  std::vector<std::pair<Word, std::int64_t>> keyed;
  keyed.reserve(static_cast<std::size_t>(v.size()));
  for (std::int64_t i = 0; i < v.size(); ++i) keyed.emplace_back(word_from_index(i, n, m).sorted(), i);
  std::sort(keyed.begin(), keyed.end());
  Vector out(v.size());
  for (std::size_t a = 0; a < keyed.size();) {
    std::size_t b = a;
    cplx sum = 0;
    while (b < keyed.size() && keyed[b].first == keyed[a].first) sum += v(keyed[b++].second);
    sum /= static_cast<double>(b - a);
    for (std::size_t c = a; c < b; ++c) out(keyed[c].second) = sum;
    a = b;
  }
  return out;
}

// Seeded Gaussian matrices for property checks.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

  Matrix matrix(Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> nd;
    Matrix A(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) A(i, j) = cplx(nd(eng_), nd(eng_));
    return A;
  }

  // Normalized to unit operator norm.
  Matrix unit_matrix(Eigen::Index rows, Eigen::Index cols) {
    Matrix A = matrix(rows, cols);
    const double s = operator_norm(A);
    return s > 0 ? Matrix(A / s) : A;
  }

  Matrix unitary(Eigen::Index n) {
    Eigen::HouseholderQR<Matrix> qr(matrix(n, n));
    return qr.householderQ();
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace subfock
