// Berezin difference profile and a contravariant symbol on the symmetric plane.

#include <cstdio>

#include "subfock/quantize.hpp"

int main() {
  using namespace subfock;
  NamedParams p;
  p.n = 2;
  p.M = 9;
  const WeightSystem ws = uniform_weight(share(named_system("symmetric", p)));
  const char* text = "Z1*Zd1";
  const ShiftPolynomial f = parse_shift_polynomial(text);

  std::printf("m,difference_norm\n");
  for (int m = 1; 2 * m + f.creation_degree() <= p.M; ++m) std::printf("%d,%.10g\n", m, berezin_transform(ws, f, m).tail_norm);

  const Matrix T = contravariant_symbol(ws, f, 2);
  std::printf("\nsymbol of %s at level 2 (diagonal):\n", text);
  for (Eigen::Index i = 0; i < T.rows(); ++i) std::printf("  %.6f\n", T(i, i).real());
}
