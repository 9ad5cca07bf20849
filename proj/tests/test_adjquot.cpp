#include "doctest.h"
#include "oracles.hpp"

#include "cyhit/adjquot.hpp"
#include "cyhit/linalg.hpp"

#include <algorithm>

using namespace cyhit;

namespace {

// dim of {X in gl(n) : vX = Xv} from the Kronecker form I (x) v - v^T (x) I, minus the scalars
Eigen::Index sl_centralizer_oracle(const RatMatrix& v) {
  const Eigen::Index n = v.rows();
  RatMatrix k = RatMatrix::Zero(n * n, n * n);
  // X flattened row-major: (vX - Xv)_{ij} = sum_k v_ik X_kj - X_ik v_kj
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index q = 0; q < n; ++q) {
        k(i * n + j, q * n + j) += v(i, q);
        k(i * n + j, i * n + q) -= v(q, j);
      }
  return n * n - rank(k) - 1;
}

// chi straight from the interpolated characteristic polynomial
std::vector<Rational> chi_oracle_sl(const RatMatrix& m) {
  const RatPoly p = oracle::char_poly_by_interpolation(m);
  std::vector<Rational> out;
  for (int k = static_cast<int>(m.rows()) - 2; k >= 0; --k) out.push_back(p.coeff(k));
  return out;
}

ClassicalLieElement random_element(const ClassicalAlgebra& g, Rng& rng) {
  return ClassicalLieElement(g, g.from_coordinates(random_vector(rng, g.dimension())));
}

RatMatrix diag(std::initializer_list<long> d) {
  RatMatrix m = RatMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (long x : d) m(i, i) = x, ++i;
  return m;
}

const ClassicalAlgebra sl2 = make_algebra(AlgebraKind::SL, 2);

}  // namespace

TEST_CASE("algebras") {
  CHECK(ClassicalAlgebra::parse("sl3").name() == "sl(3)");
  CHECK(ClassicalAlgebra::parse("sp(4)").kind == AlgebraKind::SP);
  CHECK_THROWS_AS(ClassicalAlgebra::parse("gl3"), std::invalid_argument);
  CHECK_THROWS_AS(make_algebra(AlgebraKind::SP, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_algebra(AlgebraKind::SO, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_algebra(AlgebraKind::SL, 1), std::invalid_argument);

  struct Expect {
    const char* name;
    int dim, rank;
  };
  for (const auto& e : {Expect{"sl2", 3, 1}, Expect{"sl4", 15, 3}, Expect{"so3", 3, 1}, Expect{"so5", 10, 2},
                        Expect{"so6", 15, 3}, Expect{"sp2", 3, 1}, Expect{"sp4", 10, 2}, Expect{"sp6", 21, 3}}) {
    CAPTURE(e.name);
    const auto g = ClassicalAlgebra::parse(e.name);
    CHECK(g.dimension() == e.dim);
    CHECK(g.rank() == e.rank);
    for (const auto& b : g.basis()) CHECK(g.contains(b));
    Rng rng(3);
    const RatVector c = random_vector(rng, g.dimension());
    CHECK(g.coordinates(g.from_coordinates(c)) == c);
  }

  CHECK_THROWS_AS(ClassicalLieElement(sl2, RatMatrix::Identity(2, 2)), std::invalid_argument);
  const auto so3 = make_algebra(AlgebraKind::SO, 3);
  CHECK_THROWS_AS(ClassicalLieElement(so3, diag({1, -1, 0})), std::invalid_argument);
}

TEST_CASE("ad matrices represent the bracket") {
  Rng rng(11);
  for (const char* name : {"sl3", "so4", "sp4"}) {
    const auto g = ClassicalAlgebra::parse(name);
    const auto v = random_element(g, rng), w = random_element(g, rng);
    CHECK(RatVector(ad_matrix(v) * g.coordinates(w.matrix())) == g.coordinates(bracket(v.matrix(), w.matrix())));
  }
}

TEST_CASE("chi examples") {
  CHECK(chi(ClassicalLieElement(sl2, diag({3, -3}))) == std::vector<Rational>{-9});
  for (const char* name : {"sl2", "sl4", "so5", "so4", "sp4"}) {
    const auto g = ClassicalAlgebra::parse(name);
    const auto c = chi(ClassicalLieElement(g, RatMatrix::Zero(g.size, g.size)));
    CHECK(static_cast<int>(c.size()) == g.rank());
    CHECK(std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; }));
  }
  // so(4), blocks 2 and 5: det(M - z) = (z^2 + 4)(z^2 + 25)
  RatMatrix m = RatMatrix::Zero(4, 4);
  m(0, 1) = 2, m(1, 0) = -2, m(2, 3) = 5, m(3, 2) = -5;
  const auto so4 = make_algebra(AlgebraKind::SO, 4);
  CHECK(chi(ClassicalLieElement(so4, m)) == std::vector<Rational>{29, 10});
  CHECK(pfaffian(m) == 10);

  Rng rng(5);
  for (int n = 2; n <= 5; ++n) {
    const auto g = make_algebra(AlgebraKind::SL, n);
    for (int k = 0; k < 5; ++k) {
      const auto v = random_element(g, rng);
      CHECK(chi(v) == chi_oracle_sl(v.matrix()));
    }
  }
}

TEST_CASE("chi is conjugation invariant") {
  Rng rng(2024);
  for (const char* name : {"sl2", "sl3", "sl4", "so3", "so4", "sp2", "sp4"}) {
    CAPTURE(name);
    const auto g = ClassicalAlgebra::parse(name);
    bool all = true;
    for (int k = 0; k < 25; ++k) {
      const auto v = random_element(g, rng);
      const RatMatrix a = random_group_element(g, rng);
      const RatMatrix conj = a * v.matrix() * inverse(a);
      CHECK(g.contains(conj));
      all = all && chi(ClassicalLieElement(g, conj)) == chi(v);
    }
    CHECK(all);
  }
}

TEST_CASE("chi sees only the semisimple part") {
  Rng rng(9);
  const auto sl4 = make_algebra(AlgebraKind::SL, 4);
  for (int k = 0; k < 10; ++k) {
    const Rational a = random_rational(rng), b = random_rational(rng);
    RatMatrix s = RatMatrix::Zero(4, 4);
    s(0, 0) = a, s(1, 1) = a, s(2, 2) = b, s(3, 3) = -2 * a - b;
    RatMatrix nil = RatMatrix::Zero(4, 4);
    nil(0, 1) = random_nonzero_rational(rng);
    REQUIRE(bracket(s, nil).isZero());
    const RatMatrix g = random_invertible(rng, 4);
    const RatMatrix gi = inverse(g);
    const ClassicalLieElement vs(sl4, g * s * gi), v(sl4, g * (s + nil) * gi);
    CHECK(chi(v) == chi(vs));
    CHECK_FALSE(is_regular(vs));  // eigenvalue a is repeated
  }
}

TEST_CASE("regularity") {
  RatMatrix e = RatMatrix::Zero(2, 2);
  e(0, 1) = 1;
  CHECK(is_regular(ClassicalLieElement(sl2, e)));
  CHECK(centralizer_dimension(ClassicalLieElement(sl2, e)) == 1);
  CHECK_FALSE(is_regular(ClassicalLieElement(sl2, RatMatrix::Zero(2, 2))));
  CHECK(centralizer_dimension(ClassicalLieElement(sl2, RatMatrix::Zero(2, 2))) == 3);

  for (int n = 2; n <= 6; ++n) {
    const auto reg = sl2_triple_regular(n);
    CHECK(is_regular(reg.x));
    CHECK(centralizer_dimension(reg.x) == sl_centralizer_oracle(reg.x.matrix()));
  }
  for (int n = 3; n <= 5; ++n) {
    const auto sub = sl2_triple_subregular(n);
    CHECK_FALSE(is_regular(sub.x));
    CHECK(centralizer_dimension(sub.x) == (n - 1) + 2);
    CHECK(sl_centralizer_oracle(sub.x.matrix()) == (n - 1) + 2);
  }
  // regular semisimple in so and sp
  CHECK(is_regular(ClassicalLieElement(make_algebra(AlgebraKind::SP, 4), diag({1, 2, -1, -2}))));
  RatMatrix m = RatMatrix::Zero(4, 4);
  m(0, 1) = 2, m(1, 0) = -2, m(2, 3) = 5, m(3, 2) = -5;
  CHECK(is_regular(ClassicalLieElement(make_algebra(AlgebraKind::SO, 4), m)));
  m(2, 3) = 2, m(3, 2) = -2;
  CHECK_FALSE(is_regular(ClassicalLieElement(make_algebra(AlgebraKind::SO, 4), m)));
}

TEST_CASE("sl2 triples") {
  for (int n = 2; n <= 6; ++n) CHECK(sl2_triple_regular(n).brackets_hold());
  for (int n = 3; n <= 6; ++n) {
    const auto t = sl2_triple_subregular(n);
    CHECK(t.brackets_hold());
    CHECK(bracket(t.h.matrix(), t.x.matrix()) == RatMatrix(2 * t.x.matrix()));
  }
  CHECK_THROWS_AS(sl2_triple_subregular(2), std::invalid_argument);
  const auto t3 = sl2_triple_regular(3);
  CHECK(t3.h.matrix() == diag({2, 0, -2}));
}

TEST_CASE("Kostant section") {
  const auto s2 = kostant_section(2, {Rational(-7)});
  RatMatrix expect(2, 2);
  expect << 0, 1, 7, 0;
  CHECK(s2.matrix() == expect);
  CHECK(determinant(s2.matrix()) == -7);

  for (int n = 2; n <= 5; ++n) {
    const std::vector<Rational> zero(static_cast<std::size_t>(n - 1), Rational(0));
    CHECK(kostant_section(n, zero).matrix() == sl2_triple_regular(n).x.matrix());
  }
  CHECK_THROWS_AS(kostant_section(3, {Rational(1)}), std::invalid_argument);

  Rng rng(17);
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const auto y = sl2_triple_regular(n).y.matrix();
    bool round_trip = true, regular = true, on_slice = true;
    for (int k = 0; k < 100; ++k) {
      std::vector<Rational> b;
      for (int i = 0; i < n - 1; ++i) b.push_back(random_rational(rng));
      const auto s = kostant_section(n, b);
      round_trip = round_trip && chi_oracle_sl(s.matrix()) == b;
      regular = regular && is_regular(s);
      const RatMatrix d = s.matrix() - sl2_triple_regular(n).x.matrix();
      on_slice = on_slice && bracket(d, y).isZero();
    }
    CHECK(round_trip);
    CHECK(regular);
    CHECK(on_slice);
  }
}

TEST_CASE("Slodowy slices") {
  CHECK(slodowy_slice(sl2_triple_regular(2)).directions.size() == 1);
  CHECK(slice_weights(sl2_triple_regular(2)) == std::vector<int>{-2});
  CHECK(slice_weights(sl2_triple_regular(3)) == std::vector<int>{-2, -4});

  for (int n = 3; n <= 5; ++n) {
    const auto tr = sl2_triple_subregular(n);
    const auto s = slodowy_slice(tr);
    CHECK(static_cast<int>(s.directions.size()) == (n - 1) + 2);
    for (const auto& d : s.directions) CHECK(bracket(d.matrix(), tr.y.matrix()).isZero());
    for (std::size_t k = 0; k < s.directions.size(); ++k)
      CHECK(bracket(tr.h.matrix(), s.directions[k].matrix()) == RatMatrix(s.weights[k] * s.directions[k].matrix()));
    for (int w : slice_weights(tr)) CHECK(w <= 0);
  }
  CHECK(slice_weights(sl2_triple_subregular(3)) == std::vector<int>{0, -1, -1, -2});
}

TEST_CASE("subregular fiber of sl(3)") {
  const auto v = subregular_fiber_singularity(3, 20, 0);
  CHECK(v.chi_vanishes_at_origin);
  CHECK(v.jacobian_rank_at_origin < 2);
  REQUIRE(v.samples.size() >= 20);
  CHECK(v.samples_on_fiber);
  for (auto r : v.jacobian_ranks_at_samples) CHECK(r == 2);
  CHECK(v.singular_exactly_at_origin());

  // independent recheck of the samples: chi of the slice point is zero, and they are off the origin
  const auto slice = slodowy_slice(sl2_triple_subregular(3));
  for (const auto& c : v.samples) {
    const auto p = slice.point(c);
    CHECK(chi_oracle_sl(p.matrix()) == std::vector<Rational>{0, 0});
    CHECK(std::any_of(c.begin(), c.end(), [](const Rational& x) { return x != 0; }));
    CHECK(rank(slice_jacobian(slice, c)) == 2);
  }
  CHECK_THROWS_AS(subregular_fiber_singularity(4), std::invalid_argument);
}
