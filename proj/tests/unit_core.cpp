#include <catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <string>

#include "oracles/number_basis.hpp"
#include "subfock/fock.hpp"

using namespace subfock;

namespace {

Matrix diag(std::initializer_list<cplx> d) {
  Vector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (cplx x : d) v(i++) = x;
  return v.asDiagonal();
}

Vector basis(Eigen::Index n, Eigen::Index i) {
  Vector v = Vector::Zero(n);
  v(i) = 1;
  return v;
}

double proj_distance(const Matrix& U, const Matrix& V) { return operator_norm(U * U.adjoint() - V * V.adjoint()); }

SystemPtr qplane(double q, int M) {
  NamedParams p;
  p.n = 2;
  p.M = M;
  p.q = q;
  return share(named_system("quantum_plane", p));
}

}  // namespace

// ---- tensor core ----

TEST_CASE("word index examples", "[tensor]") {
  CHECK(word_index(Word{1}, 2) == 0);
  CHECK(word_index(Word{2, 1}, 2) == 2);
  CHECK(word_index(Word{1, 2, 1}, 3) == 3);
  CHECK(word_index(Word{}, 4) == 0);
  CHECK_THROWS_AS(word_index(Word{3}, 2), range_error);
  CHECK_THROWS_AS(word_index(Word{0}, 2), range_error);
}

TEST_CASE("word index is a bijection per length", "[tensor]") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 6; ++m) {
      const auto words = words_of_length(n, m);
      REQUIRE(static_cast<std::int64_t>(words.size()) == ipow(n, m));
      for (std::size_t i = 0; i < words.size(); ++i) {
        REQUIRE(word_index(words[i], n) == static_cast<std::int64_t>(i));
        REQUIRE(word_from_index(static_cast<std::int64_t>(i), n, m) == words[i]);
      }
    }
}

TEST_CASE("word concatenation is associative with the empty word as unit", "[tensor]") {
  const Word a{1, 2}, b{2}, c{1, 1, 3};
  CHECK((a + b) + c == a + (b + c));
  CHECK(a + Word{} == a);
  CHECK(Word{} + a == a);
  CHECK(word_index(a + b, 3) == word_index(a, 3) * 3 + word_index(b, 3));
}

TEST_CASE("kron examples", "[tensor]") {
  CHECK(kron(Matrix(Matrix::Identity(2, 2)), Matrix(Matrix::Identity(2, 2))).isApprox(Matrix::Identity(4, 4)));
  RandomSource rng(1);
  const Matrix A = rng.matrix(3, 2);
  CHECK(kron(A, Matrix::Identity(1, 1)) == A);
  CHECK(kron(diag({2.0, 3.0}), diag({5.0, 7.0})) == diag({10.0, 14.0, 15.0, 21.0}));
  CHECK_THROWS_AS(kron(Matrix(Matrix::Identity(100, 100)), Matrix(Matrix::Identity(100, 100))), capacity_error);
}

TEST_CASE("kron is associative and matches word order", "[tensor]") {
  RandomSource rng(2);
  const Matrix A = rng.matrix(2, 3), B = rng.matrix(3, 2), C = rng.matrix(2, 2);
  CHECK(operator_norm(kron(kron(A, B), C) - kron(A, kron(B, C))) <= 1e-14);
  // (e_v ⊗ e_w) sits at index(v + w).
  const Vector e = kron(Vector(basis(3, 1)), Vector(basis(3, 2)));
  CHECK(e(word_index(Word{2, 3}, 3)) == cplx(1.0));
  const Matrix V = rng.matrix(6, 4);
  CHECK(operator_norm(kron_adjoint_times(A, B, V) - kron(A, B).adjoint() * V) <= 1e-13);
  const Matrix Wv = rng.matrix(6, 2);
  CHECK(operator_norm(kron_times(A, B, Wv) - kron(A, B) * Wv) <= 1e-13);
}

TEST_CASE("orthonormal complement examples", "[tensor]") {
  const Matrix O1 = orthonormal_complement({basis(2, 0)}, 2);
  REQUIRE(O1.cols() == 1);
  CHECK(std::abs(std::abs(O1(1, 0)) - 1.0) <= 1e-14);

  const Matrix O2 = orthonormal_complement({}, 3);
  CHECK(operator_norm(O2.adjoint() * O2 - Matrix::Identity(3, 3)) <= 1e-14);
  CHECK(O2.cols() == 3);

  Vector anti = Vector::Zero(4);
  anti(1) = 1.0 / std::sqrt(2.0);
  anti(2) = -1.0 / std::sqrt(2.0);
  const Matrix O3 = orthonormal_complement({anti}, 4);
  REQUIRE(O3.cols() == 3);
  // Brute-force symmetrizer: (1 + swap)/2 on C^2 ⊗ C^2.
  Matrix swap = Matrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) swap(b * 2 + a, a * 2 + b) = 1;
  const Matrix Psym = (Matrix::Identity(4, 4) + swap) / 2.0;
  CHECK(operator_norm(O3 * O3.adjoint() - Psym) <= 1e-12);
  CHECK_THROWS_AS(orthonormal_complement({anti}, 4, 0.0), range_error);
  CHECK_THROWS_AS(orthonormal_complement({basis(3, 0)}, 4), range_error);
}

TEST_CASE("orthonormal complement properties on random spans", "[tensor]") {
  RandomSource rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = rng.integer(2, 12), k = rng.integer(0, dim);
    std::vector<Vector> span;
    for (int i = 0; i < k; ++i) span.push_back(rng.matrix(dim, 1).col(0));
    // A dependent vector must not change the count.
    if (k >= 2) span.push_back(span[0] + cplx(0, 2) * span[1]);
    const Matrix O = orthonormal_complement(span, dim);
    CHECK(O.cols() == dim - k);
    if (O.cols() == 0) continue;
    CHECK(operator_norm(O.adjoint() * O - Matrix::Identity(O.cols(), O.cols())) <= 1e-12);
    Matrix S(dim, static_cast<Eigen::Index>(span.size()));
    for (std::size_t i = 0; i < span.size(); ++i) S.col(static_cast<Eigen::Index>(i)) = span[i] / span[i].norm();
    if (!span.empty()) CHECK(operator_norm(S.adjoint() * O) <= 10 * default_rank_tol);
  }
}

TEST_CASE("operator norm examples and unitary invariance", "[tensor]") {
  CHECK(operator_norm(Matrix::Identity(5, 5)) == Catch::Approx(1.0).epsilon(1e-14));
  CHECK(operator_norm(Matrix::Zero(3, 4)) == 0.0);
  CHECK(operator_norm(diag({3.0, cplx(0, -4)})) == Catch::Approx(4.0).epsilon(1e-14));
  RandomSource rng(4);
  for (int t = 0; t < 5; ++t) {
    const Matrix A = rng.matrix(6, 6), U = rng.unitary(6), V = rng.unitary(6);
    CHECK(std::abs(operator_norm(U * A * V) - operator_norm(A)) <= 1e-9 * operator_norm(A));
  }
}

// ---- polynomials ----

TEST_CASE("polynomial parsing", "[poly]") {
  const HomPoly p = parse_poly("z1*z2 - 0.5*z2*z1", 2, PolyMode::free_algebra);
  CHECK(p.degree == 2);
  REQUIRE(p.terms.size() == 2);
  CHECK(p.terms.at(Word{1, 2}) == cplx(1.0));
  CHECK(p.terms.at(Word{2, 1}) == cplx(-0.5));

  const HomPoly c = parse_poly("z1^2*z2", 2, PolyMode::commutative);
  CHECK(c.degree == 3);
  REQUIRE(c.terms.size() == 1);
  CHECK(c.terms.at(Word{1, 1, 2}) == cplx(1.0));

  // Commutative words are stored sorted and merged.
  const HomPoly m = parse_poly("z2*z1 + z1*z2", 2, PolyMode::commutative);
  REQUIRE(m.terms.size() == 1);
  CHECK(m.terms.at(Word{1, 2}) == cplx(2.0));

  const HomPoly im = parse_poly("2i*z1 + (1-0.5i)*z2 - i*z1", 2, PolyMode::free_algebra);
  CHECK(im.terms.at(Word{1}) == cplx(0, 1));
  CHECK(im.terms.at(Word{2}) == cplx(1, -0.5));

  CHECK_THROWS_AS(parse_poly("z1 + z1*z2", 2, PolyMode::free_algebra), parse_error);
  CHECK_THROWS_AS(parse_poly("z3*z1", 2, PolyMode::free_algebra), parse_error);
  CHECK_THROWS_AS(parse_poly("z1 **", 2, PolyMode::free_algebra), parse_error);
  CHECK_THROWS_AS(parse_poly("", 2, PolyMode::free_algebra), parse_error);
}

TEST_CASE("print then parse is the identity on canonical forms", "[poly]") {
  const std::pair<const char*, PolyMode> inputs[] = {
      {"z1*z2 - 0.5*z2*z1", PolyMode::free_algebra},
      {"(0.25+3i)*z1*z1*z2 - z2*z2*z2 + 1e-3*z2*z1*z2", PolyMode::free_algebra},
      {"z1^2*z2 + 7*z2^3", PolyMode::commutative},
      {"-i*z3^2 + z1*z2", PolyMode::commutative},
  };
  for (const auto& [text, mode] : inputs) {
    const HomPoly p = parse_poly(text, 3, mode);
    const HomPoly again = parse_poly(print_poly(p), 3, mode);
    CHECK(again.terms == p.terms);
    CHECK(print_poly(again) == print_poly(p));
  }
}

TEST_CASE("evaluation on the basis", "[poly]") {
  const Vector a = evaluate_on_basis(parse_poly("z1*z2", 2, PolyMode::free_algebra));
  CHECK(a == basis(4, word_index(Word{1, 2}, 2)));
  const Vector b = evaluate_on_basis(parse_poly("z1*z2 - z2*z1", 2, PolyMode::free_algebra));
  CHECK(b == basis(4, 1) - basis(4, 2));
  // Commutative: orbit average, computed here by hand.
  const Vector c = evaluate_on_basis(parse_poly("z1*z2", 2, PolyMode::commutative));
  CHECK((c - (basis(4, 1) + basis(4, 2)) / 2.0).norm() <= 1e-15);
}

TEST_CASE("ideal degree span examples", "[poly]") {
  const Ideal qp = make_ideal(2, PolyMode::free_algebra, {"z1*z2 - 0.5*z2*z1"});
  const auto span2 = ideal_degree_span(qp.generators, 2);
  REQUIRE(span2.size() == 1);
  Vector expect = basis(4, 1) - 0.5 * basis(4, 2);
  CHECK((span2[0] - expect).norm() <= 1e-15);

  CHECK(ideal_degree_span({}, 3).empty());
  CHECK(ideal_degree_span(qp.generators, 1).empty());

  const Ideal z1sq = make_ideal(2, PolyMode::commutative, {"z1^2"});
  const auto span3 = ideal_degree_span(z1sq.generators, 3);
  CHECK(span3.size() == 2);
  // Rank inside the 4-dimensional symmetric cube: sym(z1^3), sym(z1^2 z2).
  Matrix S(8, static_cast<Eigen::Index>(span3.size()));
  for (std::size_t i = 0; i < span3.size(); ++i) S.col(static_cast<Eigen::Index>(i)) = span3[i];
  CHECK(numerical_rank(S) == 2);
  CHECK(complement_of_ideal(z1sq, 3).cols() == 2);
}

TEST_CASE("ideal spans are two-sided", "[poly]") {
  const std::vector<std::pair<int, std::vector<std::string>>> ideals = {
      {2, {"z1*z2 - 0.3*z2*z1"}},
      {2, {"z1*z1"}},
      {3, {"z1*z2 - z2*z1", "z3*z3 + 2*z1*z2"}},
  };
  for (const auto& [n, gens] : ideals) {
    const Ideal I = make_ideal(n, PolyMode::free_algebra, gens);
    for (int m = 2; m + 1 <= 5 && ipow(n, m + 1) <= 243; ++m) {
      const Matrix C = complement_of_ideal(I, m + 1);  // orthogonal complement of the degree-(m+1) span
      for (const auto& v : ideal_degree_span(I.generators, m))
        for (int k = 0; k < n; ++k) {
          const Vector e = basis(n, k);
          CHECK((C.adjoint() * kron(e, v)).norm() <= 1e-10 * v.norm());
          CHECK((C.adjoint() * kron(v, e)).norm() <= 1e-10 * v.norm());
        }
    }
  }
}

TEST_CASE("commutative spans are symmetric tensors", "[poly]") {
  const Ideal I = make_ideal(3, PolyMode::commutative, {"z1^2 - z2*z3", "z1*z2*z3"});
  for (int m = 2; m <= 4; ++m)
    for (const auto& v : ideal_degree_span(I.generators, m)) CHECK((v - symmetrize(v, 3, m)).norm() <= 1e-12);
}

TEST_CASE("ideal files", "[poly]") {
  const Ideal t = parse_ideal_text("n = 2\nmode = \"free\"\ngenerators = [\"z1*z2 - 0.5*z2*z1\"]\n", false);
  CHECK(t.n == 2);
  CHECK(t.generators.size() == 1);
  const Ideal j = parse_ideal_text(R"({"n": 2, "mode": "commutative", "generators": ["z1^2"]})", true);
  CHECK(j.mode == PolyMode::commutative);
  CHECK_THROWS_AS(parse_ideal_text("n = 2\ngenerators = [\"z1 +\"]\n", false), parse_error);
  CHECK_THROWS_AS(parse_ideal_text("n = \ngenerators = []", false), parse_error);
  CHECK_THROWS_AS(parse_ideal_text(R"({"generators": []})", true), parse_error);
  CHECK_THROWS_AS(parse_ideal_text("n = 2\nmode = \"weird\"\ngenerators = []\n", false), parse_error);
  CHECK_THROWS_AS(load_ideal_file("/nonexistent/ideal.toml"), parse_error);
}

// ---- subproduct systems ----

TEST_CASE("full and symmetric dimensions", "[subproduct]") {
  CHECK(build_full(2, 3).dims() == std::vector<int>{1, 2, 4, 8});
  CHECK(build_full(1, 4).dims() == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(build_full(3, 2).dims() == std::vector<int>{1, 3, 9});
  CHECK(build_symmetric(2, 3).dims() == std::vector<int>{1, 2, 3, 4});
  CHECK(build_symmetric(3, 3).dims() == std::vector<int>{1, 3, 6, 10});
  CHECK_THROWS_AS(build_full(2, 14), capacity_error);
  CHECK_NOTHROW(build_full(2, 14, SizeCaps{1 << 14, 1 << 12}));
  CHECK(build_full(2, 12).above_warn_size);
}

TEST_CASE("symmetric U_2 spans the symmetric 2-tensors", "[subproduct]") {
  const auto sys = build_symmetric(2, 2);
  Matrix expect(4, 3);
  expect << 1, 0, 0, 0, 1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0), 0, 0, 0, 1;
  CHECK(proj_distance(sys.U[2], expect) <= 1e-12);
  CHECK(operator_norm(sys.U[2].adjoint() * sys.U[2] - Matrix::Identity(3, 3)) <= 1e-12);
}

TEST_CASE("builders satisfy the subproduct law", "[subproduct]") {
  std::vector<SubproductSystem> systems;
  systems.push_back(build_full(2, 4));
  systems.push_back(build_symmetric(3, 4));
  systems.push_back(*qplane(0.5, 5));
  systems.push_back(build_from_ideal(make_ideal(3, PolyMode::commutative, {"z1^2"}), 4));
  for (const auto& s : systems) {
    const auto rep = validate(s);
    CHECK(rep.passed);
    CHECK(rep.max_residual <= 1e-10);
    CHECK(s.U[0].rows() == 1);
    CHECK(s.U[0](0, 0) == cplx(1.0));
  }
  CHECK(validate(build_full(2, 4)).max_residual == 0.0);
}

TEST_CASE("validation detects a violating family", "[subproduct]") {
  SubproductSystem bad;
  bad.n = 2;
  bad.M = 2;
  bad.U = {Matrix::Identity(1, 1), Matrix(basis(2, 0)), Matrix::Identity(4, 4)};
  const auto rep = validate(bad);
  CHECK_FALSE(rep.passed);
  CHECK(rep.max_residual > 0.1);
  CHECK_THROWS_AS(require_valid(bad), validation_error);
}

TEST_CASE("ideal systems against the exhaustive complement", "[subproduct]") {
  const auto sys = qplane(0.5, 4);
  CHECK(sys->dims() == std::vector<int>{1, 2, 3, 4, 5});
  const Ideal I = quantum_plane_ideal(2, 0.5);
  for (int m = 0; m <= 4; ++m) CHECK(proj_distance(sys->U[static_cast<std::size_t>(m)], complement_of_ideal(I, m)) <= 1e-10);

  const auto zero = build_from_ideal(Ideal{2, PolyMode::free_algebra, {}, "zero"}, 3);
  const auto full = build_full(2, 3);
  for (int m = 0; m <= 3; ++m) CHECK(proj_distance(zero.U[static_cast<std::size_t>(m)], full.U[static_cast<std::size_t>(m)]) <= 1e-12);

  const auto everything = build_from_ideal(make_ideal(2, PolyMode::free_algebra, {"z1*z1", "z1*z2", "z2*z1", "z2*z2"}), 4);
  CHECK(everything.dims() == std::vector<int>{1, 2, 0, 0, 0});

  const Ideal c = make_ideal(3, PolyMode::commutative, {"z1^2 - z2*z3"});
  const auto cs = build_from_ideal(c, 4);
  for (int m = 0; m <= 4; ++m) CHECK(proj_distance(cs.U[static_cast<std::size_t>(m)], complement_of_ideal(c, m)) <= 1e-10);
}

TEST_CASE("named systems", "[subproduct]") {
  const auto q1 = qplane(1.0, 4);
  const auto sym = build_symmetric(2, 4);
  for (int m = 0; m <= 4; ++m) CHECK(proj_distance(q1->U[static_cast<std::size_t>(m)], sym.U[static_cast<std::size_t>(m)]) <= 1e-10);

  NamedParams p;
  p.n = 2;
  p.M = 3;
  p.monomials = {"z1*z1"};
  const auto mono = named_system("monomial", p);
  // Count words avoiding the factor 11.
  std::vector<int> expect;
  for (int m = 0; m <= 3; ++m) {
    int count = 0;
    for (const Word& w : words_of_length(2, m)) {
      bool ok = true;
      for (std::size_t i = 1; i < w.size(); ++i) ok = ok && !(w[i - 1] == 1 && w[i] == 1);
      count += ok;
    }
    expect.push_back(count);
  }
  CHECK(expect == std::vector<int>{1, 2, 3, 5});
  CHECK(mono.dims() == expect);
  CHECK(named_system("full", p).dims() == build_full(2, 3).dims());
  CHECK_THROWS_AS(named_system("banana", p), range_error);
}

TEST_CASE("commutative systems live in the symmetric tensors", "[subproduct]") {
  const auto s = build_from_ideal(make_ideal(2, PolyMode::commutative, {"z1^2"}), 5);
  CHECK(s.commutative);
  CHECK(symmetry_residual(s) <= 1e-12);
  CHECK(s.dims() == std::vector<int>{1, 2, 2, 2, 2, 2});
  CHECK(symmetry_residual(build_symmetric(3, 4)) <= 1e-12);
  CHECK(symmetry_residual(*qplane(0.5, 3)) > 0.01);
}

TEST_CASE("re-extracted ideal component matches the ideal span", "[subproduct]") {
  const std::vector<Ideal> ideals = {quantum_plane_ideal(2, 0.3), make_ideal(2, PolyMode::free_algebra, {"z1*z2*z1"}),
                                     make_ideal(3, PolyMode::free_algebra, {"z1*z2 - z2*z1"})};
  for (const auto& I : ideals) {
    const auto sys = build_from_ideal(I, 4);
    for (int m = 0; m <= 4; ++m) {
      const Matrix K = ideal_component(sys, m);
      const auto span = ideal_degree_span(I.generators, m);
      CHECK(K.cols() == (span.empty() ? 0 : [&] {
              Matrix S(sys.ambient(m), static_cast<Eigen::Index>(span.size()));
              for (std::size_t i = 0; i < span.size(); ++i) S.col(static_cast<Eigen::Index>(i)) = span[i];
              return numerical_rank(S);
            }()));
      for (const auto& v : span) CHECK((v - K * (K.adjoint() * v)).norm() <= 1e-10 * v.norm());
    }
  }
}

// ---- Fock space ----

TEST_CASE("shift blocks", "[fock]") {
  const auto sym = share(build_symmetric(2, 3));
  Matrix expect(3, 2);
  expect << 1, 0, 0, 1 / std::sqrt(2.0), 0, 0;
  CHECK(operator_norm(shift_block(*sym, 1, 1) - expect) <= 1e-12);
  CHECK(operator_norm(shift_block(*sym, 1, 0) - Matrix(basis(2, 0))) <= 1e-15);
  const auto full = share(build_full(2, 3));
  for (int k = 1; k <= 2; ++k)
    for (int m = 0; m < 3; ++m) {
      const Matrix S = shift_block(*full, k, m), R = right_shift_block(*full, k, m);
      CHECK(operator_norm(S.adjoint() * S - Matrix::Identity(S.cols(), S.cols())) <= 1e-15);
      CHECK(operator_norm(R.adjoint() * R - Matrix::Identity(R.cols(), R.cols())) <= 1e-15);
      // S_k lands in the e_k ⊗ · block, R_k in the · ⊗ e_k block.
      for (Eigen::Index c = 0; c < S.cols(); ++c) {
        CHECK(std::abs(S(word_index(Word{k} + word_from_index(c, 2, m), 2), c) - 1.0) <= 1e-15);
        CHECK(std::abs(R(word_index(word_from_index(c, 2, m) + Word{k}, 2), c) - 1.0) <= 1e-15);
      }
    }
  CHECK_THROWS_AS(shift_block(*sym, 1, 3), range_error);
  CHECK_THROWS_AS(shift_block(*sym, 3, 0), range_error);
}

TEST_CASE("right shifts", "[fock]") {
  const auto sym = share(build_symmetric(2, 4));
  for (int k = 1; k <= 2; ++k)
    for (int m = 0; m < 4; ++m) CHECK(operator_norm(right_shift_block(*sym, k, m) - shift_block(*sym, k, m)) <= 1e-12);
  const auto qp = qplane(0.5, 3);
  CHECK((right_shift_block(*qp, 1, 1) - shift_block(*qp, 1, 1)).cwiseAbs().maxCoeff() > 0.01);
}

TEST_CASE("symmetric shifts match the number-basis model", "[fock][oracle]") {
  const auto sym = share(build_symmetric(2, 6));
  for (int m = 0; m < 6; ++m)
    for (int k = 1; k <= 2; ++k) {
      const Matrix S = shift_block(*sym, k, m);
      const auto sv = Eigen::JacobiSVD<Matrix>(S).singularValues();
      const auto ov = Eigen::JacobiSVD<oracle::Mat>(oracle::shift(k, m)).singularValues();
      CHECK((sv - ov.cast<cplx>()).norm() <= 1e-12);
    }
}

TEST_CASE("word shifts", "[fock]") {
  const auto sym = share(build_symmetric(2, 4));
  CHECK(word_shift(*sym, Word{}, 2) == Matrix::Identity(3, 3));
  Vector expect = Vector::Zero(3);
  expect(1) = 1 / std::sqrt(2.0);
  CHECK((word_shift(*sym, Word{1, 2}, 0).col(0) - expect).norm() <= 1e-12);

  const auto full = share(build_full(2, 4));
  const Matrix E = word_shift(*full, Word{2, 1}, 1);
  for (Eigen::Index c = 0; c < 2; ++c) CHECK(std::abs(E(word_index(Word{2, 1} + word_from_index(c, 2, 1), 2), c) - 1.0) <= 1e-15);

  std::vector<SystemPtr> systems = {full, sym, qplane(0.5, 5), share(build_from_ideal(make_ideal(2, PolyMode::free_algebra, {"z1*z1"}), 5))};
  for (const auto& s : systems)
    for (int p = 0; p <= 3; ++p)
      for (int m = 0; m + p <= s->M && m <= s->M - 3; ++m)
        for (const Word& w : words_of_length(s->n, p)) CHECK(operator_norm(word_shift(*s, w, m) - word_shift_direct(*s, w, m)) <= 1e-12);
}

TEST_CASE("graded operator algebra", "[fock]") {
  const auto sys = qplane(0.5, 4);
  RandomSource rng(5);
  GradedOperator X(sys, 1, "X");
  for (int m = 0; m < 4; ++m) X.set_block(m, rng.matrix(sys->dim(m + 1), sys->dim(m)));
  const GradedOperator XX = adjoint(adjoint(X));
  for (int m = 0; m < 4; ++m) CHECK(XX.block(m) == X.block(m));
  CHECK(adjoint(X).degree() == -1);
  const GradedOperator one = identity_operator(sys);
  const GradedOperator XI = compose(X, one);
  for (int m = 0; m < 4; ++m) CHECK(XI.block(m) == X.block(m));
  CHECK(compose(adjoint(X), X).degree() == 0);
  CHECK(compose(X, X).degree() == 2);
  CHECK_THROWS_AS(add(X, one), range_error);
  CHECK_THROWS_AS(X.set_block(4, Matrix::Zero(1, 5)), range_error);
  CHECK_THROWS_AS(X.set_block(1, Matrix::Zero(2, 2)), range_error);

  const auto full = share(build_full(2, 4));
  for (const auto& [m, v] : level_norms(shift_operator(full, 2))) CHECK(std::abs(v - 1.0) <= 1e-14);

  const GradedOperator back = graded_from_json(sys, to_json(X));
  CHECK(back.degree() == 1);
  for (int m = 0; m < 4; ++m) CHECK(back.block(m) == X.block(m));
}

TEST_CASE("row sums", "[fock]") {
  const auto sym = build_symmetric(2, 4);
  CHECK(row_sum_residual(sym, 1, 2).left <= 1e-12);
  CHECK(row_sum_residual(build_full(2, 3), 1, 3).left <= 1e-12);
  for (int l = 0; l <= 3; ++l) {
    CHECK(row_sum_residual(sym, l, l).left <= 1e-12);
    CHECK(row_sum_residual(sym, l, l).right <= 1e-12);
  }
  const auto qp = qplane(0.3, 5);
  for (int l = 0; l < 5; ++l)
    for (int m = 0; m <= l; ++m) {
      CHECK(row_sum_residual(*qp, m, l).left <= 1e-10);
      CHECK(row_sum_residual(*qp, m, l).right <= 1e-10);
    }
}

TEST_CASE("vacuum expectation", "[fock]") {
  const auto sys = share(build_symmetric(2, 3));
  CHECK(vacuum_expectation(identity_operator(sys)) == cplx(1.0));
  CHECK(vacuum_expectation(vacuum_projection(sys)) == cplx(1.0));
  const GradedOperator S1 = shift_operator(sys, 1);
  CHECK(std::abs(vacuum_expectation(compose(S1, adjoint(S1)))) == 0.0);
  CHECK_THROWS_AS(vacuum_expectation(S1), range_error);
}

TEST_CASE("left and right shifts commute", "[fock]") {
  for (const auto& s : {qplane(0.5, 5), share(build_full(2, 4)), share(build_from_ideal(make_ideal(2, PolyMode::free_algebra, {"z1*z2*z1"}), 5))})
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) {
        const GradedOperator a = compose(shift_operator(s, j), right_shift_operator(s, k));
        const GradedOperator b = compose(right_shift_operator(s, k), shift_operator(s, j));
        CHECK(sup_norm(subtract(a, b)) <= 1e-12);
      }
}

TEST_CASE("shifts sum to one minus the vacuum below the top level", "[fock]") {
  const auto s = qplane(0.5, 5);
  for (int m = 1; m < 5; ++m) {
    Matrix X = -Matrix::Identity(s->dim(m), s->dim(m));
    for (int k = 1; k <= 2; ++k) X += shift_block(*s, k, m - 1) * shift_block(*s, k, m - 1).adjoint();
    CHECK(operator_norm(X) <= 1e-12);
  }
}

TEST_CASE("shift polynomials", "[fock]") {
  const ShiftPolynomial f = parse_shift_polynomial("2 * Z1Z2 * Zd1Zd2 - 0.5i * Z1 * Zd2");
  CHECK(f.degree() == 0);
  CHECK(f.is_normally_ordered());
  CHECK(f.creation_degree() == 2);
  CHECK(parse_shift_polynomial(f.str()).str() == f.str());
  CHECK_FALSE(parse_shift_polynomial("Zd1*Z1").is_normally_ordered());
  CHECK(parse_shift_polynomial("Z1*Z2").degree() == 2);
  CHECK(parse_shift_polynomial("Z1*Z2").adjoint().degree() == -2);
  CHECK_THROWS_AS(parse_shift_polynomial("Z1 + Z1Z2").degree(), range_error);
  CHECK_THROWS_AS(parse_shift_polynomial("Q1"), parse_error);

  const auto sys = qplane(0.5, 3);
  const GradedOperator rep = representative(sys, parse_shift_polynomial("Z1*Zd1"));
  CHECK(rep.min_level() == 0);
  CHECK(rep.max_level() == 3);
  CHECK(operator_norm(rep.block(0)) == 0.0);
  CHECK(operator_norm(rep.block(2) - shift_block(*sys, 1, 1) * shift_block(*sys, 1, 1).adjoint()) <= 1e-15);
}
