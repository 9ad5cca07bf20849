#include "doctest.h"

#include "cyhit/linalg.hpp"
#include "cyhit/random.hpp"
#include "cyhit/singular.hpp"

using namespace cyhit;

namespace {

const auto& names = surface_variables();

// Sylvester matrix of p and p' written out by hand for a monic quartic with no odd terms,
// so the oracle does not share code with resultant().
Rational sylvester_oracle(const Rational& a1, const Rational& a2) {
  // p = z^4 + a1 z^2 + a2, p' = 4 z^3 + 2 a1 z
  const Rational p[5] = {1, 0, a1, 0, a2};
  const Rational q[4] = {4, 0, 2 * a1, 0};
  RatMatrix s = RatMatrix::Zero(7, 7);
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 5; ++k) s(r, r + k) = p[k];
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) s(3 + r, r + k) = q[k];
  return determinant(s);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const MPoly u = MPoly::variable(3, 0), v = MPoly::variable(3, 1), w = MPoly::variable(3, 2);
  const MPoly f = u.pow(3) - v * w;
  CHECK(f.str(names) == "u^3 - v*w");
  CHECK(f.total_degree() == 3);
  CHECK(f.order() == 2);
  CHECK(f({Rational(2), Rational(1), Rational(8)}) == 0);
  CHECK(f.partial(0) == Rational(3) * u.pow(2));
  CHECK(f.partial(1) == -w);
  CHECK((f - f).is_zero());
  CHECK_THROWS_AS(MPoly::variable(3, 3), std::out_of_range);
  CHECK_THROWS_AS(f + MPoly::variable(2, 0), std::invalid_argument);
  // (u, v, w) -> (-u, w, v)
  CHECK(f.substitute({-u, w, v}) == -u.pow(3) - v * w);
}

TEST_CASE("ADE equations") {
  CHECK(ade_equation({Family::A, 2}).str(names) == "u^3 - v*w");
  CHECK(ade_equation({Family::A, 3}).str(names) == "u^4 - v*w");
  CHECK(ade_equation({Family::D, 4}) == MPoly::monomial(1, {3, 0, 0}) + MPoly::monomial(1, {1, 2, 0}) + MPoly::monomial(1, {0, 0, 2}));
  CHECK(ade_equation({Family::E, 7}).str(names) == "u^3*v + v^3 + w^2");
  CHECK_THROWS_AS(ade_equation({Family::B, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ade_equation({Family::G, 2}), std::invalid_argument);

  std::vector<DynkinType> ade;
  for (int n = 1; n <= 6; ++n) ade.push_back({Family::A, n});
  for (int n = 4; n <= 6; ++n) ade.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) ade.push_back({Family::E, n});
  for (const auto& t : ade) {
    CAPTURE(t.name());
    const MPoly f = ade_equation(t);
    CHECK(f.order() >= 2);
    const auto v = isolated_singularity_sampled(f);
    CHECK(v.singular_at_origin);
    CHECK(v.points_checked == 3 * (125 - 1));
    CHECK(v.isolated());
  }
  // a non-isolated example is caught: u^2 is singular along the whole plane u = 0
  CHECK_FALSE(isolated_singularity_sampled(MPoly::monomial(1, {2, 0, 0})).isolated());
}

TEST_CASE("B2 family") {
  const auto fam = b2_family();
  CHECK(fam.parameter_count() == 2);
  CHECK(fam.symmetry_invariant());
  CHECK(b2_family(0, 0) == ade_equation({Family::A, 3}));
  CHECK(b2_family(-5, 4).str(names) == "u^4 - 5*u^2 - v*w + 4");

  Rng rng(50);
  const MPoly u = MPoly::variable(3, 0), v = MPoly::variable(3, 1), w = MPoly::variable(3, 2);
  for (int k = 0; k < 50; ++k) {
    const MPoly f = b2_family(random_rational(rng), random_rational(rng));
    CHECK(f.substitute({-u, w, v}) == f);
  }
  // a family with an odd term is not invariant
  DeformationFamily broken = fam;
  broken.total += MPoly::variable(5, 0);
  CHECK_FALSE(broken.symmetry_invariant());
}

TEST_CASE("discriminant") {
  CHECK(family_discriminant(0, 0) == 0);
  CHECK(family_discriminant(0, 1) != 0);
  CHECK(family_discriminant(0, 1) == sylvester_oracle(0, 1));

  // closed form from the Sylvester oracle at a few points, then pinned:
  // res(p, p') = 16 a2 (a1^2 - 4 a2)^2
  auto closed = [](const Rational& a1, const Rational& a2) { return 16 * a2 * (a1 * a1 - 4 * a2) * (a1 * a1 - 4 * a2); };
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const Rational a1 = random_rational(rng), a2 = random_rational(rng);
    CHECK(sylvester_oracle(a1, a2) == closed(a1, a2));
  }

  // 21 x 21 grid a = -5, -9/2, ..., 5
  int zeros = 0;
  for (int i = 0; i < 21; ++i)
    for (int j = 0; j < 21; ++j) {
      const Rational a1(i - 10, 2), a2(j - 10, 2);
      const Rational d = family_discriminant(a1, a2);
      CHECK((d == 0) == (closed(a1, a2) == 0));
      CHECK(d == closed(a1, a2));
      const FiberFlag f = fiber_flag(a1, a2);
      CHECK(f.smooth == (d != 0));
      CHECK((f.common_factor.degree() > 0) == !f.smooth);
      if (d == 0) ++zeros;
    }
  // a2 = 0 row plus the points a1^2 = 4 a2 (a1 = 2s, a2 = s^2 on the grid)
  CHECK(zeros == 21 + 4);
}

TEST_CASE("fiber flags and profiles") {
  const auto origin = fiber_flag(0, 0);
  CHECK_FALSE(origin.smooth);
  REQUIRE(origin.singular_point);
  CHECK(*origin.singular_point == std::array<Rational, 3>{0, 0, 0});

  // a2 = 0, a1 != 0: double root at u = 0
  const auto f = fiber_flag(3, 0);
  CHECK_FALSE(f.smooth);
  REQUIRE(f.singular_point);
  const auto [pu, pv, pw] = *f.singular_point;
  const MPoly surface = b2_family(3, 0);
  const std::vector<Rational> pt{pu, pv, pw};
  CHECK(surface(pt) == 0);
  for (int k = 0; k < 3; ++k) CHECK(surface.partial(k)(pt) == 0);

  // (u^2 - 2)^2: singular at irrational points, no rational witness
  const auto irr = fiber_flag(-4, 4);
  CHECK_FALSE(irr.smooth);
  CHECK_FALSE(irr.singular_point);

  // (u^2 - 1)^2: singular at u = +-1
  const auto one = fiber_flag(-2, 1);
  REQUIRE(one.singular_point);
  CHECK(abs((*one.singular_point)[0]) == 1);

  const auto prof = fiber_profile({{0, 0}, {0, 0}, {1, 0}, {-7, 0}, {0, 1}, {1, 1}});
  REQUIRE(prof.size() == 6);
  CHECK_FALSE(prof[0].smooth);
  CHECK_FALSE(prof[1].smooth);
  CHECK_FALSE(prof[2].smooth);
  CHECK_FALSE(prof[3].smooth);
  CHECK(prof[4].smooth);
  CHECK(prof[5].smooth);
  CHECK(prof[5].common_factor == RatPoly::constant(1));
}
