#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>
#include <toml++/toml.hpp>

#include "subfock/tensor.hpp"

namespace subfock {

enum class PolyMode { free_algebra, commutative };

inline std::string to_string(PolyMode mode) {
  return mode == PolyMode::free_algebra ? "free" : "commutative";
}

inline PolyMode parse_mode(std::string_view s) {
  if (s == "free") return PolyMode::free_algebra;
  if (s == "commutative") return PolyMode::commutative;
  throw parse_error("unknown polynomial mode '" + std::string(s) + "'");
}

// Homogeneous polynomial; commutative terms are keyed by sorted words.
struct HomPoly {
  int n = 1;
  int degree = 0;
  PolyMode mode = PolyMode::free_algebra;
  std::map<Word, cplx> terms;

  bool operator==(const HomPoly&) const = default;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, int n, PolyMode mode) : s_(text), n_(n), mode_(mode) {}

  HomPoly run() {
    HomPoly p;
    p.n = n_;
    p.mode = mode_;
    std::optional<int> degree;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1.0 : 1.0;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, word] = term();
      if (mode_ == PolyMode::commutative) word = word.sorted();
      const int d = static_cast<int>(word.size());
      if (degree && *degree != d) throw parse_error("non-homogeneous polynomial: degrees " +
                                                    std::to_string(*degree) + " and " + std::to_string(d));
      degree = d;
      p.terms[word] += sign * coef;
      skip();
    }
    p.degree = *degree;
    std::erase_if(p.terms, [](const auto& kv) { return kv.second == cplx(0.0); });
    return p;
  }

 private:
  std::pair<cplx, Word> term() {
    cplx coef = 1.0;
    bool have_coef = false;
    if (peek() == '(' || peek() == 'i' || std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      coef = coefficient();
      have_coef = true;
      skip();
      if (at_end() || peek() != '*') return {coef, Word{}};
      get();
      skip();
    }
    std::vector<int> letters;
    while (true) {
      if (peek() != 'z') fail(have_coef || !letters.empty() ? "expected factor z<k>" : "expected term");
      get();
      const int k = integer();
      if (k < 1 || k > n_)
        throw parse_error("variable index " + std::to_string(k) + " outside 1.." + std::to_string(n_));
      int power = 1;
      skip();
      if (peek() == '^') {
        get();
        skip();
        power = integer();
        skip();
      }
      letters.insert(letters.end(), power, k);
      if (peek() != '*') break;
      get();
      skip();
    }
    return {coef, Word(std::move(letters))};
  }

  cplx coefficient() {
    if (peek() == '(') {
      get();
      skip();
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') sign = get() == '-' ? -1.0 : 1.0;
      skip();
      cplx a = sign * real_or_imag();
      skip();
      if (peek() == '+' || peek() == '-') {
        const double s2 = get() == '-' ? -1.0 : 1.0;
        skip();
        a += s2 * real_or_imag();
        skip();
      }
      if (get() != ')') fail("expected ')'");
      return a;
    }
    return real_or_imag();
  }

  cplx real_or_imag() {
    if (peek() == 'i') {
      get();
      return cplx(0, 1);
    }
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == 'e' ||
                         peek() == 'E' ||
                         ((peek() == '+' || peek() == '-') && pos_ > start &&
                          (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E'))))
      ++pos_;
    if (pos_ == start) fail("expected number");
    const std::string num(s_.substr(start, pos_ - start));
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(num, &used);
    } catch (const std::exception&) {
      fail("bad number '" + num + "'");
    }
    if (used != num.size()) fail("bad number '" + num + "'");
    if (!at_end() && peek() == 'i') {
      get();
      return cplx(0, v);
    }
    return cplx(v, 0);
  }

  int integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int n_;
  PolyMode mode_;
};

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline HomPoly parse_poly(std::string_view text, int n, PolyMode mode) {
  if (n < 1) throw range_error("variable count must be positive");
  return detail::PolyParser(text, n, mode).run();
}

inline std::string print_poly(const HomPoly& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms) {
    std::string coef;
    bool negative = false;
    if (c.imag() == 0.0) {
      negative = c.real() < 0;
      coef = detail::format_double(std::abs(c.real()));
    } else {
      coef = "(" + detail::format_double(c.real()) + (c.imag() < 0 ? "-" : "+") +
             detail::format_double(std::abs(c.imag())) + "i)";
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coef;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      if (p.mode == PolyMode::commutative)
        while (j < w.size() && w[j] == w[i]) ++j;
      else
        j = i + 1;
      out += "*z" + std::to_string(w[i]);
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
  }
  return out;
}

// Free mode: Σ f_w e_w. Commutative mode: each monomial maps to the average of its word orbit.
inline Vector evaluate_on_basis(const HomPoly& f) {
  Vector v = Vector::Zero(ipow(f.n, f.degree));
  for (const auto& [w, c] : f.terms) {
    if (f.mode == PolyMode::free_algebra) {
      v(word_index(w, f.n)) += c;
      continue;
    }
    std::vector<int> letters = w.sorted().letters();
    std::vector<std::int64_t> orbit;
    do {
      orbit.push_back(word_index(Word(letters), f.n));
    } while (std::next_permutation(letters.begin(), letters.end()));
    for (auto idx : orbit) v(idx) += c / static_cast<double>(orbit.size());
  }
  return v;
}

// Vectors spanning {f(e) : f in the degree-m part of the ideal generated by `generators`}.
inline std::vector<Vector> ideal_degree_span(const std::vector<HomPoly>& generators, int m) {
  std::vector<Vector> out;
  if (generators.empty()) return out;
  const int n = generators.front().n;
  const PolyMode mode = generators.front().mode;
  for (const auto& g : generators)
    if (g.n != n || g.mode != mode) throw range_error("generators mix variable counts or modes");
  for (const auto& g : generators) {
    if (g.degree > m) continue;
    const int rest = m - g.degree;
    if (mode == PolyMode::free_algebra) {
      const Vector vg = evaluate_on_basis(g);
      for (int a = 0; a <= rest; ++a) {
        const int b = rest - a;
        const std::int64_t na = ipow(n, a), nb = ipow(n, b);
        for (std::int64_t x = 0; x < na; ++x)
          for (std::int64_t y = 0; y < nb; ++y) {
            Vector v = Vector::Zero(na * vg.size() * nb);
            for (Eigen::Index i = 0; i < vg.size(); ++i) v((x * vg.size() + i) * nb + y) = vg(i);
            out.push_back(std::move(v));
          }
      }
    } else {
      for (const Word& x : sorted_words(n, rest)) {
        HomPoly prod{n, m, mode, {}};
        for (const auto& [w, c] : g.terms) prod.terms[(x + w).sorted()] += c;
        out.push_back(evaluate_on_basis(prod));
      }
    }
  }
  return out;
}

// z_i z_j - z_j z_i for i < j, as free polynomials.
inline std::vector<HomPoly> commutator_generators(int n) {
  std::vector<HomPoly> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      HomPoly p{n, 2, PolyMode::free_algebra, {}};
      p.terms[Word{i, j}] = 1.0;
      p.terms[Word{j, i}] = -1.0;
      out.push_back(std::move(p));
    }
  return out;
}

struct Ideal {
  int n = 1;
  PolyMode mode = PolyMode::free_algebra;
  std::vector<HomPoly> generators;
  std::string source;
};

inline Ideal make_ideal(int n, PolyMode mode, const std::vector<std::string>& generators, std::string source = {}) {
  Ideal I{n, mode, {}, std::move(source)};
  for (const auto& g : generators) I.generators.push_back(parse_poly(g, n, mode));
  return I;
}

// Ideal description in TOML or JSON: n, mode, generators.
inline Ideal parse_ideal_text(const std::string& text, bool json, std::string source = {}) {
  int n = 0;
  std::string mode = "free";
  std::vector<std::string> gens;
  if (json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      n = j.at("n").get<int>();
      if (j.contains("mode")) mode = j.at("mode").get<std::string>();
      gens = j.at("generators").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw parse_error("ideal file: " + std::string(e.what()));
    }
  } else {
    toml::table t;
    try {
      t = toml::parse(text);
    } catch (const toml::parse_error& e) {
      throw parse_error("ideal file: " + std::string(e.description()));
    }
    auto nv = t["n"].value<int64_t>();
    if (!nv) throw parse_error("ideal file: missing integer field 'n'");
    n = static_cast<int>(*nv);
    if (auto mv = t["mode"].value<std::string>()) mode = *mv;
    auto* arr = t["generators"].as_array();
    if (!arr) throw parse_error("ideal file: missing array field 'generators'");
    for (auto& el : *arr) {
      auto s = el.value<std::string>();
      if (!s) throw parse_error("ideal file: generators must be strings");
      gens.push_back(*s);
    }
  }
  if (n < 1) throw parse_error("ideal file: n must be positive");
  return make_ideal(n, parse_mode(mode), gens, std::move(source));
}

inline Ideal load_ideal_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open ideal file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal_text(ss.str(), path.extension() == ".json", path.filename().string());
}

}  // namespace subfock
