#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "subfock/subproduct.hpp"

namespace subfock {

namespace detail {

inline void require_letter(const SubproductSystem& sys, int k) {
  if (k < 1 || k > sys.n) throw range_error("letter " + std::to_string(k) + " outside 1.." + std::to_string(sys.n));
}

inline void require_step(const SubproductSystem& sys, int m, int p) {
  if (m < 0 || m + p > sys.M)
    throw range_error("level range " + std::to_string(m) + ".." + std::to_string(m + p) + " outside 0.." +
                      std::to_string(sys.M));
}

}  // namespace detail

// S_w : H_m -> H_{m+|w|}, U_{m+|w|}^H (e_w ⊗ U_m).
inline Matrix word_shift_direct(const SubproductSystem& sys, const Word& w, int m) {
  const int p = static_cast<int>(w.size());
  detail::require_step(sys, m, p);
  const Matrix& Ut = sys.U[static_cast<std::size_t>(m + p)];
  const Matrix& Um = sys.U[static_cast<std::size_t>(m)];
  const std::int64_t block = sys.ambient(m);
  return Ut.middleRows(word_index(w, sys.n) * block, block).adjoint() * Um;
}

inline Matrix shift_block(const SubproductSystem& sys, int k, int m) {
  detail::require_letter(sys, k);
  return word_shift_direct(sys, Word{k}, m);
}

// ψ ↦ p_{m+|w|}(ψ ⊗ e_w), i.e. U_{m+|w|}^H (U_m ⊗ e_w).
inline Matrix right_word_shift(const SubproductSystem& sys, const Word& w, int m) {
  const int p = static_cast<int>(w.size());
  detail::require_step(sys, m, p);
  const Matrix& Ut = sys.U[static_cast<std::size_t>(m + p)];
  const Matrix& Um = sys.U[static_cast<std::size_t>(m)];
  const std::int64_t stride = sys.ambient(p);
  const std::int64_t offset = word_index(w, sys.n);
  Matrix rows(Um.rows(), Ut.cols());
  for (Eigen::Index i = 0; i < Um.rows(); ++i) rows.row(i) = Ut.row(i * stride + offset);
  return rows.adjoint() * Um;
}

inline Matrix right_shift_block(const SubproductSystem& sys, int k, int m) {
  detail::require_letter(sys, k);
  return right_word_shift(sys, Word{k}, m);
}

// S_{w_1} ⋯ S_{w_p} restricted to H_m, as a product of single shifts.
inline Matrix word_shift(const SubproductSystem& sys, const Word& w, int m) {
  const int p = static_cast<int>(w.size());
  detail::require_step(sys, m, p);
  Matrix X = Matrix::Identity(sys.dim(m), sys.dim(m));
  for (int i = p - 1, lvl = m; i >= 0; --i, ++lvl) X = shift_block(sys, w[static_cast<std::size_t>(i)], lvl) * X;
  return X;
}

// Degree-k family of blocks X_m : H_m -> H_{m+k}.
class GradedOperator {
 public:
  GradedOperator(SystemPtr sys, int degree, std::string label = {})
      : sys_(std::move(sys)), degree_(degree), label_(std::move(label)) {
    if (!sys_) throw range_error("graded operator needs a system");
  }

  const SystemPtr& system() const { return sys_; }
  int degree() const { return degree_; }
  const std::string& label() const { return label_; }
  void set_label(std::string s) { label_ = std::move(s); }

  void set_block(int m, Matrix X) {
    if (m < 0 || m > sys_->M || m + degree_ < 0 || m + degree_ > sys_->M)
      throw range_error("block level " + std::to_string(m) + " outside the range of a degree-" +
                        std::to_string(degree_) + " operator");
    if (X.rows() != sys_->dim(m + degree_) || X.cols() != sys_->dim(m))
      throw range_error("block shape mismatch at level " + std::to_string(m));
    blocks_[m] = std::move(X);
  }

  bool has_block(int m) const { return blocks_.count(m) > 0; }
  const Matrix& block(int m) const {
    auto it = blocks_.find(m);
    if (it == blocks_.end()) throw range_error("no block at level " + std::to_string(m));
    return it->second;
  }
  const std::map<int, Matrix>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }
  int min_level() const { return empty() ? -1 : blocks_.begin()->first; }
  int max_level() const { return empty() ? -1 : blocks_.rbegin()->first; }
  std::vector<int> levels() const {
    std::vector<int> out;
    for (const auto& kv : blocks_) out.push_back(kv.first);
    return out;
  }

 private:
  SystemPtr sys_;
  int degree_;
  std::string label_;
  std::map<int, Matrix> blocks_;
};

namespace detail {

inline void same_system(const GradedOperator& X, const GradedOperator& Y) {
  if (X.system() != Y.system()) throw range_error("operators live on different systems");
}

}  // namespace detail

// X ∘ Y on every level where both blocks exist.
inline GradedOperator compose(const GradedOperator& X, const GradedOperator& Y) {
  detail::same_system(X, Y);
  GradedOperator out(X.system(), X.degree() + Y.degree());
  for (const auto& [m, B] : Y.blocks())
    if (X.has_block(m + Y.degree())) out.set_block(m, X.block(m + Y.degree()) * B);
  if (out.empty()) throw range_error("compose: level ranges do not chain");
  return out;
}

inline GradedOperator adjoint(const GradedOperator& X) {
  GradedOperator out(X.system(), -X.degree(), X.label().empty() ? "" : X.label() + "*");
  for (const auto& [m, B] : X.blocks()) out.set_block(m + X.degree(), B.adjoint());
  return out;
}

inline GradedOperator add(const GradedOperator& X, const GradedOperator& Y) {
  detail::same_system(X, Y);
  if (X.degree() != Y.degree()) throw range_error("add: degree mismatch");
  GradedOperator out(X.system(), X.degree());
  for (const auto& [m, B] : X.blocks())
    if (Y.has_block(m)) out.set_block(m, B + Y.block(m));
  if (out.empty()) throw range_error("add: disjoint level ranges");
  return out;
}

inline GradedOperator scale(const GradedOperator& X, cplx c) {
  GradedOperator out(X.system(), X.degree(), X.label());
  for (const auto& [m, B] : X.blocks()) out.set_block(m, c * B);
  return out;
}

inline GradedOperator subtract(const GradedOperator& X, const GradedOperator& Y) { return add(X, scale(Y, -1.0)); }

inline std::vector<std::pair<int, double>> level_norms(const GradedOperator& X) {
  std::vector<std::pair<int, double>> out;
  for (const auto& [m, B] : X.blocks()) out.emplace_back(m, operator_norm(B));
  return out;
}

// max_m ‖X_m‖ over the stored levels.
inline double sup_norm(const GradedOperator& X) {
  double r = 0;
  for (const auto& [m, B] : X.blocks()) r = std::max(r, operator_norm(B));
  return r;
}

inline GradedOperator identity_operator(const SystemPtr& sys) {
  GradedOperator out(sys, 0, "1");
  for (int m = 0; m <= sys->M; ++m) out.set_block(m, Matrix::Identity(sys->dim(m), sys->dim(m)));
  return out;
}

inline GradedOperator vacuum_projection(const SystemPtr& sys) {
  GradedOperator out(sys, 0, "|Ω><Ω|");
  for (int m = 0; m <= sys->M; ++m) out.set_block(m, Matrix::Zero(sys->dim(m), sys->dim(m)));
  out.set_block(0, Matrix::Identity(1, 1));
  return out;
}

inline GradedOperator shift_operator(const SystemPtr& sys, int k) {
  GradedOperator out(sys, 1, "S" + std::to_string(k));
  for (int m = 0; m < sys->M; ++m) out.set_block(m, shift_block(*sys, k, m));
  return out;
}

inline GradedOperator right_shift_operator(const SystemPtr& sys, int k) {
  GradedOperator out(sys, 1, "R" + std::to_string(k));
  for (int m = 0; m < sys->M; ++m) out.set_block(m, right_shift_block(*sys, k, m));
  return out;
}

struct RowSumResidual {
  double left = 0;
  double right = 0;
};

// ‖Σ_{|r|=m} S_r S_r^* |_{H_l} − 1‖ and the same for right shifts.
inline RowSumResidual row_sum_residual(const SubproductSystem& sys, int m, int l) {
  if (m < 0 || m > l || l > sys.M) throw range_error("row_sum_residual: need 0 <= m <= l <= M");
  const int d = sys.dim(l);
  Matrix L = Matrix::Zero(d, d), R = Matrix::Zero(d, d);
  for (const Word& r : words_of_length(sys.n, m)) {
    const Matrix S = word_shift_direct(sys, r, l - m);
    const Matrix T = right_word_shift(sys, r, l - m);
    L += S * S.adjoint();
    R += T * T.adjoint();
  }
  const Matrix I = Matrix::Identity(d, d);
  return {hermitian_norm(L - I), hermitian_norm(R - I)};
}

inline cplx vacuum_expectation(const GradedOperator& X) {
  if (X.degree() != 0) throw range_error("vacuum expectation needs a degree-0 operator");
  // Products ending in an annihilator carry no level-0 block: they kill Ω.
  if (!X.has_block(0)) {
    if (X.empty()) throw range_error("vacuum expectation of an empty operator");
    return 0.0;
  }
  return X.block(0)(0, 0);
}

inline nlohmann::json to_json(const GradedOperator& X) {
  nlohmann::json levels = nlohmann::json::object();
  for (const auto& [m, B] : X.blocks()) {
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(2 * B.size()));
    for (Eigen::Index i = 0; i < B.rows(); ++i)
      for (Eigen::Index j = 0; j < B.cols(); ++j) {
        entries.push_back(B(i, j).real());
        entries.push_back(B(i, j).imag());
      }
    levels[std::to_string(m)] = {{"rows", B.rows()}, {"cols", B.cols()}, {"entries", entries}};
  }
  return {{"degree", X.degree()}, {"levels", levels}};
}

inline GradedOperator graded_from_json(const SystemPtr& sys, const nlohmann::json& j) {
  try {
    GradedOperator out(sys, j.at("degree").get<int>());
    for (const auto& [key, v] : j.at("levels").items()) {
      const auto rows = v.at("rows").get<Eigen::Index>(), cols = v.at("cols").get<Eigen::Index>();
      const auto entries = v.at("entries").get<std::vector<double>>();
      if (static_cast<Eigen::Index>(entries.size()) != 2 * rows * cols) throw parse_error("entry count mismatch");
      Matrix B(rows, cols);
      for (Eigen::Index i = 0, t = 0; i < rows; ++i)
        for (Eigen::Index c = 0; c < cols; ++c, t += 2) B(i, c) = cplx(entries[static_cast<std::size_t>(t)], entries[static_cast<std::size_t>(t + 1)]);
      out.set_block(std::stoi(key), std::move(B));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("operator dump: ") + e.what());
  }
}

// Words in the shifts S_k (Z_k) and their adjoints S_k^* (Zd_k).
struct ShiftLetter {
  int index;
  bool adjoint;
  auto operator<=>(const ShiftLetter&) const = default;
};

struct ShiftTerm {
  cplx coef;
  std::vector<ShiftLetter> letters;
};

class ShiftPolynomial {
 public:
  ShiftPolynomial() = default;
  explicit ShiftPolynomial(std::vector<ShiftTerm> terms) : terms_(std::move(terms)) { canonicalize(); }

  static ShiftPolynomial constant(cplx c) { return ShiftPolynomial({{c, {}}}); }
  // c Z_j Z_k^*
  static ShiftPolynomial monomial(cplx c, const Word& j, const Word& k) {
    ShiftTerm t{c, {}};
    for (int a : j.letters()) t.letters.push_back({a, false});
    for (int b : k.letters()) t.letters.push_back({b, true});
    return ShiftPolynomial({t});
  }

  const std::vector<ShiftTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  static int term_degree(const ShiftTerm& t) {
    int d = 0;
    for (const auto& l : t.letters) d += l.adjoint ? -1 : 1;
    return d;
  }

  // Gauge degree; throws for inhomogeneous sums.
  int degree() const {
    if (terms_.empty()) return 0;
    const int d = term_degree(terms_.front());
    for (const auto& t : terms_)
      if (term_degree(t) != d) throw range_error("shift polynomial is not gauge-homogeneous");
    return d;
  }

  bool is_normally_ordered() const {
    for (const auto& t : terms_)
      for (std::size_t i = 1; i < t.letters.size(); ++i)
        if (t.letters[i - 1].adjoint && !t.letters[i].adjoint) return false;
    return true;
  }

  // Largest number of creation letters in a term.
  int creation_degree() const {
    int d = 0;
    for (const auto& t : terms_) {
      int c = 0;
      for (const auto& l : t.letters) c += l.adjoint ? 0 : 1;
      d = std::max(d, c);
    }
    return d;
  }

  // Read right to left, the level never climbs above the starting level.
  bool is_non_raising() const {
    for (const auto& t : terms_) {
      int lvl = 0;
      for (auto it = t.letters.rbegin(); it != t.letters.rend(); ++it) {
        lvl += it->adjoint ? -1 : 1;
        if (lvl > 0) return false;
      }
    }
    return true;
  }

  ShiftPolynomial operator*(const ShiftPolynomial& o) const {
    std::vector<ShiftTerm> out;
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) {
        ShiftTerm t{a.coef * b.coef, a.letters};
        t.letters.insert(t.letters.end(), b.letters.begin(), b.letters.end());
        out.push_back(std::move(t));
      }
    return ShiftPolynomial(std::move(out));
  }

  ShiftPolynomial operator+(const ShiftPolynomial& o) const {
    std::vector<ShiftTerm> out = terms_;
    out.insert(out.end(), o.terms_.begin(), o.terms_.end());
    return ShiftPolynomial(std::move(out));
  }

  ShiftPolynomial operator-(const ShiftPolynomial& o) const { return *this + o.scaled(-1.0); }

  ShiftPolynomial scaled(cplx c) const {
    std::vector<ShiftTerm> out = terms_;
    for (auto& t : out) t.coef *= c;
    return ShiftPolynomial(std::move(out));
  }

  // Formal adjoint.
  ShiftPolynomial adjoint() const {
    std::vector<ShiftTerm> out;
    for (const auto& t : terms_) {
      ShiftTerm a{std::conj(t.coef), {}};
      for (auto it = t.letters.rbegin(); it != t.letters.rend(); ++it) a.letters.push_back({it->index, !it->adjoint});
      out.push_back(std::move(a));
    }
    return ShiftPolynomial(std::move(out));
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + detail::format_double(t.coef.real()) + (t.coef.imag() < 0 ? "-" : "+") +
           detail::format_double(std::abs(t.coef.imag())) + "i)";
      if (t.letters.empty()) continue;
      s += " * ";
      bool prev_adj = t.letters.front().adjoint;
      for (const auto& l : t.letters) {
        if (l.adjoint != prev_adj) s += " * ";
        s += (l.adjoint ? "Zd" : "Z") + std::to_string(l.index);
        prev_adj = l.adjoint;
      }
    }
    return s;
  }

 private:
  void canonicalize() {
    std::map<std::vector<ShiftLetter>, cplx> acc;
    for (const auto& t : terms_) acc[t.letters] += t.coef;
    terms_.clear();
    for (auto& [letters, c] : acc)
      if (c != cplx(0.0)) terms_.push_back({c, letters});
  }

  std::vector<ShiftTerm> terms_;
};

// Grammar: sum of terms "c * Z1Z2 * Zd1Zd2"; factors may also be separated by '*'.
inline ShiftPolynomial parse_shift_polynomial(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw parse_error(what + " at position " + std::to_string(pos) + " in '" + std::string(text) + "'");
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::vector<ShiftTerm> terms;
  skip();
  if (pos >= text.size()) fail("empty element");
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1.0 : 1.0;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    ShiftTerm t{sign, {}};
    bool any = false;
    while (true) {
      skip();
      if (pos < text.size() && text[pos] == 'Z') {
        ++pos;
        bool adj = false;
        if (pos < text.size() && text[pos] == 'd') {
          adj = true;
          ++pos;
        }
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected letter index");
        t.letters.push_back({std::stoi(std::string(text.substr(start, pos - start))), adj});
        any = true;
      } else if (pos < text.size() &&
                 (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' || text[pos] == '(' ||
                  text[pos] == 'i')) {
        // reuse the polynomial coefficient grammar
        std::size_t end = pos;
        int depth = 0;
        while (end < text.size() && (depth > 0 || (text[end] != '*' && text[end] != '+' && text[end] != '-' &&
                                                   !std::isspace(static_cast<unsigned char>(text[end]))) ||
                                     (end > pos && (text[end] == '+' || text[end] == '-') &&
                                      (text[end - 1] == 'e' || text[end - 1] == 'E')))) {
          if (text[end] == '(') ++depth;
          if (text[end] == ')') --depth;
          ++end;
        }
        const auto coef = parse_poly(text.substr(pos, end - pos), 1, PolyMode::free_algebra);
        t.coef *= coef.terms.empty() ? cplx(0.0) : coef.terms.begin()->second;
        pos = end;
        any = true;
      } else {
        fail("expected factor");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == 'Z') continue;
      break;
    }
    if (!any) fail("empty term");
    terms.push_back(std::move(t));
  }
  return ShiftPolynomial(std::move(terms));
}

inline void require_letters(const SubproductSystem& sys, const ShiftPolynomial& f) {
  for (const auto& t : f.terms())
    for (const auto& l : t.letters) detail::require_letter(sys, l.index);
}

// Fock representative of f: blocks at every level where all intermediate
// levels stay within 0..M (words that hit the vacuum with S^* vanish there).
inline GradedOperator representative(const SystemPtr& sys, const ShiftPolynomial& f) {
  require_letters(*sys, f);
  const int k = f.degree();
  GradedOperator out(sys, k, f.str());
  for (int m = std::max(0, -k); m <= sys->M && m + k <= sys->M; ++m) {
    Matrix acc = Matrix::Zero(sys->dim(m + k), sys->dim(m));
    bool defined = true;
    for (const auto& t : f.terms()) {
      int lvl = m;
      bool vanished = false;
      Matrix X = Matrix::Identity(sys->dim(m), sys->dim(m));
      for (auto it = t.letters.rbegin(); it != t.letters.rend(); ++it) {
        if (it->adjoint) {
          if (lvl == 0) {
            vanished = true;
            break;
          }
          X = shift_block(*sys, it->index, lvl - 1).adjoint() * X;
          --lvl;
        } else {
          if (lvl + 1 > sys->M) {
            defined = false;
            break;
          }
          X = shift_block(*sys, it->index, lvl) * X;
          ++lvl;
        }
      }
      if (!defined) break;
      if (!vanished) acc += t.coef * X;
    }
    if (defined) out.set_block(m, std::move(acc));
  }
  return out;
}

}  // namespace subfock
