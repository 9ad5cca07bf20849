#include "doctest.h"

#include "cyhit/rootsys.hpp"
#include "cyhit/weyl.hpp"

#include <numeric>
#include <set>

using namespace cyhit;

namespace {

std::vector<DynkinType> all_types(int max_classical_rank) {
  std::vector<DynkinType> ts;
  for (int n = 1; n <= max_classical_rank; ++n) ts.push_back({Family::A, n});
  for (int n = 2; n <= max_classical_rank; ++n) ts.push_back({Family::B, n});
  for (int n = 2; n <= max_classical_rank; ++n) ts.push_back({Family::C, n});
  for (int n = 3; n <= max_classical_rank; ++n) ts.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) ts.push_back({Family::E, n});
  ts.push_back({Family::F, 4});
  ts.push_back({Family::G, 2});
  return ts;
}

// textbook root counts, written out independently of the library table
std::size_t expected_roots(const DynkinType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * n + n;
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * n - 2 * n;
    case Family::E: return t.rank == 6 ? 72 : t.rank == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

// plain Euclidean reflection
RatVector euclid_reflect(const RatVector& a, const RatVector& v) { return v - (2 * a.dot(v) / a.dot(a)) * a; }

RatMatrix mat2(long a, long b, long c, long d) {
  RatMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("parse and validate") {
  CHECK(DynkinType::parse("E8") == DynkinType{Family::E, 8});
  CHECK(DynkinType::parse("g2") == DynkinType{Family::G, 2});
  CHECK(DynkinType::parse("A12").rank == 12);
  CHECK_THROWS_AS(DynkinType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType::parse("D2"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType::parse("F3"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType::parse("H3"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType::parse("A"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType::parse("A0"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build({Family::G, 3}), std::invalid_argument);
  CHECK(DynkinType{Family::C, 5}.name() == "C5");
}

TEST_CASE("small examples") {
  CHECK(RootSystem::build({Family::A, 2}).roots().size() == 6);
  CHECK(RootSystem::build({Family::B, 2}).roots().size() == 8);

  const RootSystem g2 = RootSystem::build({Family::G, 2});
  REQUIRE(g2.roots().size() == 12);
  std::set<Rational> norms;
  for (const auto& a : g2.roots()) norms.insert(a.dot(a));
  REQUIRE(norms.size() == 2);
  CHECK(*norms.rbegin() / *norms.begin() == 3);

  CHECK(cartan_matrix(RootSystem::build({Family::A, 2})) == mat2(2, -1, -1, 2));
  // row convention <alpha_i, alpha_j^vee>: B2 has alpha_1 long, alpha_2 short
  CHECK(cartan_matrix(RootSystem::build({Family::B, 2})) == mat2(2, -2, -1, 2));
  const RatMatrix cg = cartan_matrix(g2);
  CHECK(cg(0, 1) * cg(1, 0) == 3);
}

TEST_CASE("closure, counts and crystallographic pairings for every type") {
  for (const auto& t : all_types(8)) {
    CAPTURE(t.name());
    const RootSystem r = RootSystem::build(t);
    CHECK(r.roots().size() == expected_roots(t));
    CHECK(r.roots().size() == classical_root_count(t));
    CHECK(r.positive_roots().size() * 2 == r.roots().size());
    CHECK(lie_algebra_dimension(t) == r.roots().size() + static_cast<std::size_t>(t.rank));

    const std::set<RatVector, VectorLess> set(r.roots().begin(), r.roots().end());
    CHECK(set.size() == r.roots().size());
    bool closed = true, crystallographic = true;
    for (const auto& a : r.roots()) {
      if (!set.count(RatVector(-a))) closed = false;
      if (r.pairing(a, a) != 2) crystallographic = false;
      for (const auto& b : r.roots()) {
        const Rational p = r.pairing(b, a);
        if (!is_integer(p) || p < -3 || p > 3) crystallographic = false;
        if (!set.count(euclid_reflect(a, b))) closed = false;
      }
    }
    CHECK(closed);
    CHECK(crystallographic);

    const RatMatrix cm = cartan_matrix(r);
    for (Eigen::Index i = 0; i < cm.rows(); ++i) CHECK(cm(i, i) == 2);
  }
}

TEST_CASE("positive roots have simple coordinates of one sign") {
  for (const auto& t : all_types(5)) {
    CAPTURE(t.name());
    const RootSystem r = RootSystem::build(t);
    for (const auto& a : r.positive_roots()) {
      const RatVector c = r.simple_coordinates(a);
      bool ok = true;
      for (const auto& x : c) ok = ok && is_integer(x) && x >= 0;
      CHECK(ok);
    }
  }
}

TEST_CASE("highest root height is the Coxeter number minus one") {
  // Coxeter numbers: A_n n+1, B_n and C_n 2n, D_n 2n-2, E 12/18/30, F4 12, G2 6
  auto coxeter = [](const DynkinType& t) {
    switch (t.family) {
      case Family::A: return t.rank + 1;
      case Family::B:
      case Family::C: return 2 * t.rank;
      case Family::D: return 2 * t.rank - 2;
      case Family::E: return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
      case Family::F: return 12;
      case Family::G: return 6;
    }
    return 0;
  };
  for (const auto& t : all_types(7)) {
    CAPTURE(t.name());
    const RootSystem r = RootSystem::build(t);
    Rational best = 0;
    for (const auto& a : r.positive_roots()) best = std::max(best, r.simple_coordinates(a).sum());
    CHECK(best == coxeter(t) - 1);
    CHECK(degrees(t).back() == coxeter(t));
  }
}

TEST_CASE("fundamental weights are dual to the coroots") {
  for (const auto& t : all_types(6)) {
    CAPTURE(t.name());
    const RootSystem r = RootSystem::build(t);
    const auto w = fundamental_weights(r);
    REQUIRE(static_cast<int>(w.size()) == t.rank);
    for (int i = 0; i < t.rank; ++i) {
      CHECK(r.in_root_span(w[static_cast<std::size_t>(i)]));
      CHECK(r.is_dominant(w[static_cast<std::size_t>(i)]));
      for (int j = 0; j < t.rank; ++j)
        CHECK(r.pairing(w[static_cast<std::size_t>(i)], r.simple_roots()[static_cast<std::size_t>(j)]) == (i == j ? 1 : 0));
    }
  }

  // A_n: omega_1 is the class of e_1, i.e. e_1 minus the centre
  const RootSystem a3 = RootSystem::build({Family::A, 3});
  RatVector e1 = RatVector::Zero(4);
  e1[0] = 1;
  const RatVector centred = e1 - RatVector::Constant(4, Rational(1, 4));
  CHECK(fundamental_weights(a3)[0] == centred);

  const RootSystem b2 = RootSystem::build({Family::B, 2});
  CHECK(orbit(b2, fundamental_weights(b2)[1]).size() == 4);
}

TEST_CASE("degree tables") {
  CHECK(degrees({Family::A, 1}) == std::vector<int>{2});
  CHECK(degrees({Family::B, 2}) == std::vector<int>{2, 4});
  CHECK(degrees({Family::G, 2}) == std::vector<int>{2, 6});
  CHECK(exponents({Family::A, 1}) == std::vector<int>{1});
  CHECK(exponents({Family::B, 2}) == std::vector<int>{1, 3});
  CHECK(exponents({Family::E, 8}) == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});

  for (const auto& t : all_types(8)) {
    CAPTURE(t.name());
    const auto d = degrees(t);
    const int sum_minus_one = std::accumulate(d.begin(), d.end(), 0) - t.rank;
    CHECK(static_cast<std::size_t>(sum_minus_one) == classical_root_count(t) / 2);
    std::size_t two_d = 0;
    for (int x : d) two_d += static_cast<std::size_t>(2 * x - 1);
    CHECK(two_d == lie_algebra_dimension(t));
  }
  // product of degrees against enumeration, rank <= 4
  for (const auto& t : all_types(4)) {
    if (t.rank > 4) continue;
    CAPTURE(t.name());
    const auto d = degrees(t);
    const std::uint64_t prod = std::accumulate(d.begin(), d.end(), std::uint64_t{1}, std::multiplies<>());
    CHECK(enumerate(RootSystem::build(t)).size() == prod);
  }
}

TEST_CASE("classification of Cartan matrices") {
  for (const auto& t : all_types(7)) {
    CAPTURE(t.name());
    const RatMatrix c = cartan_matrix(t);
    CHECK(cartan_equivalent(c, t));
    const auto cls = classify_cartan(c);
    REQUIRE(cls.size() == 1);
    if (t == DynkinType{Family::D, 3}) CHECK(cls[0] == DynkinType{Family::A, 3});
    else if (t == DynkinType{Family::C, 2}) CHECK(cls[0] == DynkinType{Family::B, 2});
    else CHECK(cls[0] == t);
  }
  CHECK_FALSE(cartan_equivalent(cartan_matrix({Family::B, 3}), {Family::C, 3}));

  // A1 x A2 as a block matrix, nodes scrambled
  RatMatrix m = RatMatrix::Zero(3, 3);
  m << 2, 0, -1, 0, 2, 0, -1, 0, 2;
  const auto parts = classify_cartan(m);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == DynkinType{Family::A, 2});
  CHECK(parts[1] == DynkinType{Family::A, 1});
  CHECK(diagram_components(m) == std::vector<std::vector<int>>{{0, 2}, {1}});

  // affine A1 is not of finite type
  CHECK_THROWS(classify_cartan(mat2(2, -2, -2, 2)));
}
