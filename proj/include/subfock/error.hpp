#pragma once

#include <stdexcept>
#include <string>

namespace subfock {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed polynomial text, ideal file or config.
struct parse_error : error {
  using error::error;
};

// Level, letter, shape or degree outside the admissible range.
struct range_error : error {
  using error::error;
};

struct capacity_error : error {
  using error::error;
};

// Subproduct law violated at the split (m, l).
struct validation_error : error {
  validation_error(int m_, int l_, double residual_)
      : error("subproduct law violated at m=" + std::to_string(m_) + ", l=" + std::to_string(l_) +
              " (residual " + std::to_string(residual_) + ")"),
        m(m_), l(l_), residual(residual_) {}
  int m, l;
  double residual;
};

// Weight matrix does not preserve H_m.
struct invariance_error : error {
  invariance_error(int m_, double residual_)
      : error("weights do not preserve H_" + std::to_string(m_) + " (relative residual " +
              std::to_string(residual_) + ")"),
        m(m_), residual(residual_) {}
  int m;
  double residual;
};

// Truncation level too small to evaluate a limit quantity.
struct headroom_error : error {
  headroom_error(const std::string& what, int required)
      : error(what + " (needs M >= " + std::to_string(required) + ")"), required_M(required) {}
  int required_M;
};

}  // namespace subfock
