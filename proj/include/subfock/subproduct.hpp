#pragma once

#include <memory>
#include <string>
#include <vector>

#include "subfock/polynomial.hpp"

namespace subfock {

// H_0..H_M given by isometries U_m : H_m -> H^{⊗m} (n^m x d_m).
struct SubproductSystem {
  int n = 1;
  int M = 0;
  std::vector<Matrix> U;
  std::string provenance;
  bool commutative = false;
  bool above_warn_size = false;

  int dim(int m) const { return static_cast<int>(U.at(static_cast<std::size_t>(m)).cols()); }
  std::int64_t ambient(int m) const { return ipow(n, m); }

  std::vector<int> dims() const {
    std::vector<int> d;
    for (int m = 0; m <= M; ++m) d.push_back(dim(m));
    return d;
  }

  // p_m as an n^m x n^m matrix; for checks at small sizes.
  Matrix projection(int m) const { return U.at(static_cast<std::size_t>(m)) * U.at(static_cast<std::size_t>(m)).adjoint(); }

  void require_level(int m) const {
    if (m < 0 || m > M)
      throw range_error("level " + std::to_string(m) + " outside 0.." + std::to_string(M));
  }
};

using SystemPtr = std::shared_ptr<const SubproductSystem>;

struct BuildOptions {
  double tol = default_rank_tol;
  SizeCaps caps{};
  bool validate = true;
};

namespace detail {

inline void check_size(int n, int M, const SizeCaps& caps, SubproductSystem& sys) {
  if (n < 1) throw range_error("n must be positive");
  if (M < 0) throw range_error("M must be non-negative");
  std::int64_t top = 0;
  try {
    top = ipow(n, M);
  } catch (const capacity_error&) {
    throw capacity_error("n^M overflows");
  }
  if (top > caps.hard)
    throw capacity_error("n^M = " + std::to_string(top) + " exceeds cap " + std::to_string(caps.hard));
  sys.n = n;
  sys.M = M;
  sys.above_warn_size = top > caps.warn;
}

}  // namespace detail

struct ValidationEntry {
  int m, l;
  double residual;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;
  double tol = default_rank_tol;
  double max_residual = 0;
  bool passed = true;
};

// Residuals ‖p_l (p_m ⊗ p_{l-m}) p_l − p_l‖ over all splits 0 <= m <= l <= M.
inline ValidationReport validate(const SubproductSystem& sys, double tol = default_rank_tol) {
  ValidationReport rep;
  rep.tol = tol;
  for (int l = 0; l <= sys.M; ++l) {
    const Matrix& Ul = sys.U[static_cast<std::size_t>(l)];
    for (int m = 0; m <= l; ++m) {
      double r = 0;
      if (Ul.cols() > 0) {
        const Matrix W = kron_adjoint_times(sys.U[static_cast<std::size_t>(m)], sys.U[static_cast<std::size_t>(l - m)], Ul);
        const Matrix G = W.adjoint() * W - Matrix::Identity(Ul.cols(), Ul.cols());
        r = hermitian_norm(G);
      }
      rep.entries.push_back({m, l, r});
      rep.max_residual = std::max(rep.max_residual, r);
      if (!(r <= tol)) rep.passed = false;
    }
  }
  return rep;
}

inline void require_valid(const SubproductSystem& sys, double tol = default_rank_tol) {
  const auto rep = validate(sys, tol);
  if (rep.passed) return;
  for (const auto& e : rep.entries)
    if (!(e.residual <= tol)) throw validation_error(e.m, e.l, e.residual);
}

inline SubproductSystem build_full(int n, int M, const SizeCaps& caps = {}) {
  SubproductSystem sys;
  detail::check_size(n, M, caps, sys);
  for (int m = 0; m <= M; ++m) {
    const auto d = ipow(n, m);
    sys.U.push_back(Matrix::Identity(d, d));
  }
  sys.provenance = "full";
  return sys;
}

inline SubproductSystem build_symmetric(int n, int M, const SizeCaps& caps = {}) {
  SubproductSystem sys;
  detail::check_size(n, M, caps, sys);
  for (int m = 0; m <= M; ++m) {
    const auto classes = sorted_words(n, m);
    Matrix U = Matrix::Zero(ipow(n, m), static_cast<Eigen::Index>(classes.size()));
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::vector<int> letters = classes[c].letters();
      std::vector<std::int64_t> orbit;
      do {
        orbit.push_back(word_index(Word(letters), n));
      } while (std::next_permutation(letters.begin(), letters.end()));
      const double a = 1.0 / std::sqrt(static_cast<double>(orbit.size()));
      for (auto idx : orbit) U(idx, static_cast<Eigen::Index>(c)) = a;
    }
    sys.U.push_back(std::move(U));
  }
  sys.provenance = "symmetric";
  sys.commutative = true;
  return sys;
}

// H_m = (H ⊗ H_{m-1}) ∩ (H_{m-1} ⊗ H) ∩ (degree-m generators)^⊥, built level by level.
// In commutative mode the antisymmetric 2-tensors join the generators.
inline SubproductSystem build_from_ideal(const Ideal& ideal, int M, const BuildOptions& opt = {}) {
  const int n = ideal.n;
  const bool comm = ideal.mode == PolyMode::commutative;
  std::vector<std::vector<Vector>> gens_at(static_cast<std::size_t>(std::max(M, 2)) + 1);
  bool any = false;
  for (const auto& g : ideal.generators) {
    if (g.n != n || g.mode != ideal.mode) throw range_error("generator does not match ideal n/mode");
    if (g.terms.empty()) continue;
    if (g.degree == 0) throw range_error("ideal contains a constant; H_0 must be C");
    any = true;
    if (g.degree > M) continue;
    Vector v = evaluate_on_basis(g);
    gens_at[static_cast<std::size_t>(g.degree)].push_back(v / v.norm());
  }
  const std::string tag = "ideal(" + (ideal.source.empty() ? std::string("inline") : ideal.source) + ")";
  if (!any) {
    SubproductSystem sys = comm ? build_symmetric(n, M, opt.caps) : build_full(n, M, opt.caps);
    sys.provenance = tag;
    return sys;
  }
  if (comm) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Vector v = Vector::Zero(n * n);
        v(word_index(Word{i, j}, n)) = 1.0 / std::sqrt(2.0);
        v(word_index(Word{j, i}, n)) = -1.0 / std::sqrt(2.0);
        gens_at[2].push_back(v);
      }
  }

  SubproductSystem sys;
  detail::check_size(n, M, opt.caps, sys);
  sys.U.push_back(Matrix::Identity(1, 1));
  const Matrix In = Matrix::Identity(n, n);
  for (int m = 1; m <= M; ++m) {
    const Matrix& Uprev = sys.U.back();
    const Eigen::Index cols = n * Uprev.cols();
    if (cols == 0) {
      sys.U.push_back(Matrix(ipow(n, m), 0));
      continue;
    }
    const Matrix B = kron(In, Uprev, SizeCaps{INT64_MAX, INT64_MAX});
    const auto& G = gens_at[static_cast<std::size_t>(m)];
    const Eigen::Index grow = static_cast<Eigen::Index>(G.size());
    const Eigen::Index lrow = m >= 2 ? B.rows() : 0;
    Matrix K(lrow + grow, cols);
    if (m >= 2) K.topRows(lrow) = B - kron_times(Uprev, In, kron_adjoint_times(Uprev, In, B));
    for (Eigen::Index g = 0; g < grow; ++g) K.row(lrow + g) = G[static_cast<std::size_t>(g)].adjoint() * B;
    const Matrix N = null_space(K, opt.tol, 1.0);
    sys.U.push_back(N.cols() > 0 ? Matrix(B * N) : Matrix(ipow(n, m), 0));
  }
  sys.provenance = tag;
  sys.commutative = comm;
  if (opt.validate) require_valid(sys, opt.tol);
  return sys;
}

// Exhaustive route: orthogonal complement of the ideal span at each degree
// (within the symmetric tensors in commutative mode).
inline Matrix complement_of_ideal(const Ideal& ideal, int m, double tol = default_rank_tol) {
  auto span = ideal_degree_span(ideal.generators, m);
  if (ideal.mode == PolyMode::commutative && m >= 2)
    for (const auto& c : ideal_degree_span(commutator_generators(ideal.n), m)) span.push_back(c);
  return orthonormal_complement(span, ipow(ideal.n, m), tol);
}

// Re-extracted ideal component: orthonormal basis of H^{⊗m} ⊖ H_m.
inline Matrix ideal_component(const SubproductSystem& sys, int m, double tol = default_rank_tol) {
  sys.require_level(m);
  const Matrix& U = sys.U[static_cast<std::size_t>(m)];
  std::vector<Vector> cols;
  for (Eigen::Index c = 0; c < U.cols(); ++c) cols.emplace_back(U.col(c));
  return orthonormal_complement(cols, sys.ambient(m), tol);
}

// max_m ‖(I − P_sym) U_m‖; zero for commutative systems.
inline double symmetry_residual(const SubproductSystem& sys) {
  double r = 0;
  for (int m = 2; m <= sys.M; ++m) {
    const Matrix& U = sys.U[static_cast<std::size_t>(m)];
    for (Eigen::Index c = 0; c < U.cols(); ++c) {
      const Vector v = U.col(c);
      r = std::max(r, (v - symmetrize(v, sys.n, m)).norm());
    }
  }
  return r;
}

struct NamedParams {
  int n = 2;
  int M = 4;
  double q = 1.0;
  std::vector<std::string> monomials;
  PolyMode mode = PolyMode::free_algebra;
  BuildOptions build{};
};

inline Ideal quantum_plane_ideal(int n, double q) {
  Ideal I{n, PolyMode::free_algebra, {}, "quantum_plane(q=" + detail::format_double(q) + ")"};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      HomPoly p{n, 2, PolyMode::free_algebra, {}};
      p.terms[Word{i, j}] = 1.0;
      p.terms[Word{j, i}] = -q;
      I.generators.push_back(std::move(p));
    }
  return I;
}

inline SubproductSystem named_system(const std::string& name, const NamedParams& p) {
  if (name == "full") return build_full(p.n, p.M, p.build.caps);
  if (name == "symmetric") return build_symmetric(p.n, p.M, p.build.caps);
  if (name == "quantum_plane") {
    auto sys = build_from_ideal(quantum_plane_ideal(p.n, p.q), p.M, p.build);
    sys.provenance = "quantum_plane(q=" + detail::format_double(p.q) + ")";
    return sys;
  }
  if (name == "monomial") {
    if (p.monomials.empty()) throw range_error("monomial system needs at least one monomial");
    auto ideal = make_ideal(p.n, p.mode, p.monomials);
    std::string src;
    for (const auto& g : ideal.generators) src += (src.empty() ? "" : ",") + print_poly(g);
    ideal.source = "monomial{" + src + "}";
    auto sys = build_from_ideal(ideal, p.M, p.build);
    sys.provenance = ideal.source + (p.mode == PolyMode::commutative ? ",commutative" : "");
    return sys;
  }
  throw range_error("unknown system '" + name + "'");
}

inline SystemPtr share(SubproductSystem sys) { return std::make_shared<const SubproductSystem>(std::move(sys)); }

}  // namespace subfock
