#include "doctest.h"

#include "cyhit/hitchin.hpp"
#include "cyhit/weyl.hpp"

using namespace cyhit;

namespace {

std::vector<DynkinType> all_types(int k) {
  std::vector<DynkinType> ts;
  for (int n = 1; n <= k; ++n) ts.push_back({Family::A, n});
  for (int n = 2; n <= k; ++n) ts.push_back({Family::B, n});
  for (int n = 2; n <= k; ++n) ts.push_back({Family::C, n});
  for (int n = 3; n <= k; ++n) ts.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) ts.push_back({Family::E, n});
  ts.push_back({Family::F, 4});
  ts.push_back({Family::G, 2});
  return ts;
}

}  // namespace

TEST_CASE("genus precondition") {
  CHECK_THROWS_AS(CurveParams(1), std::invalid_argument);
  CHECK_THROWS_AS(CurveParams(0), std::invalid_argument);
  CHECK(CurveParams(2).genus == 2);
}

TEST_CASE("base dimension") {
  CHECK(base_dim({Family::A, 1}, CurveParams(2)) == 3);
  CHECK(base_dim({Family::A, 2}, CurveParams(2)) == 8);
  for (const auto& t : all_types(8))
    for (int g = 2; g <= 5; ++g) {
      CAPTURE(t.name());
      // (g - 1)(rank + |roots|)
      const std::uint64_t expect = static_cast<std::uint64_t>(g - 1) *
                                   (static_cast<std::uint64_t>(t.rank) + classical_root_count(t));
      CHECK(base_dim(t, CurveParams(g)) == expect);
      const auto d = hitchin_dims(t, CurveParams(g));
      CHECK(d.total_dim == 2 * d.base_dim);
      CHECK(integrable_dimension_check(t, CurveParams(g)).ok());
    }
}

TEST_CASE("cameral genus") {
  CHECK(cameral_genus({Family::A, 1}, CurveParams(2)) == 5);
  CHECK(cameral_genus({Family::A, 2}, CurveParams(2)) == 25);
  for (int g = 2; g <= 10; ++g) {
    // double cover branched at the 4g - 4 zeros of a quadratic differential
    const std::uint64_t rh = 2 * (g - 1) + (4 * g - 4) / 2 + 1;
    CHECK(cameral_genus({Family::A, 1}, CurveParams(g)) == rh);
    CHECK(cameral_genus({Family::A, 1}, CurveParams(g)) == static_cast<std::uint64_t>(4 * g - 3));
    CHECK(cameral_genus({Family::A, 1}, CurveParams(g)) == spectral_genus_A(1, CurveParams(g)));
  }
  for (const auto& t : all_types(6))
    for (int g = 2; g <= 5; ++g) {
      const std::uint64_t w = order(t);
      const std::uint64_t rhs = w * static_cast<std::uint64_t>(2 * g - 2) * (2 + classical_root_count(t));
      CHECK(rhs % 4 == 0);  // |W|(2g-2)(1 + |roots|/2) is even
      CHECK(2 * cameral_genus(t, CurveParams(g)) - 2 == rhs / 2);
    }
}

TEST_CASE("spectral genus and fiber dimension in type A") {
  CHECK(spectral_genus_A(1, CurveParams(2)) == 5);
  CHECK(spectral_genus_A(2, CurveParams(2)) == 10);
  CHECK(spectral_genus_A(1, CurveParams(3)) == 9);
  for (int n = 1; n <= 6; ++n)
    for (int g = 2; g <= 5; ++g) {
      const DynkinType t{Family::A, n};
      const auto v = integrable_dimension_check(t, CurveParams(g));
      REQUIRE(v.fiber_matches_base.has_value());
      CHECK(*v.fiber_matches_base);
      CHECK(*v.dims.fiber_dim == v.dims.base_dim);
      CHECK(spectral_genus_A(n, CurveParams(g)) - static_cast<std::uint64_t>(g) == base_dim(t, CurveParams(g)));
    }
  const auto a3 = hitchin_dims({Family::A, 3}, CurveParams(3));
  CHECK(a3.base_dim == 30);
  CHECK(*a3.spectral_genus == 33);

  const auto b3 = integrable_dimension_check({Family::B, 3}, CurveParams(2));
  CHECK_FALSE(b3.fiber_matches_base.has_value());
  CHECK_FALSE(b3.dims.spectral_genus.has_value());
}
