#include "doctest.h"

#include "cyhit/swdiff.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace cyhit;

namespace {

const Cycle kLeft{BranchPoint::MinusOne, BranchPoint::U};
const Cycle kRight{BranchPoint::PlusOne, BranchPoint::U};

// 2 * int_0^1 dx / sqrt(x - x^3): the real half-period of y^2 = x^3 - x, by tanh-sinh
double lemniscatic_oracle() {
  boost::math::quadrature::tanh_sinh<double> ts;
  // xc is the signed distance to the nearer endpoint, which keeps x and 1 - x accurate there
  auto f = [](double x, double xc) {
    const double left = xc < 0 ? -xc : x, right = xc > 0 ? xc : 1 - x;
    return 1.0 / std::sqrt(left * right * (1 + x));
  };
  return 2.0 * ts.integrate(f, 0.0, 1.0, 1e-14);
}

// the same integral in closed form: Gamma(1/4)^2 / sqrt(2 pi)
double lemniscatic_closed_form() { return std::pow(std::tgamma(0.25), 2) / std::sqrt(2 * std::numbers::pi); }

// Moduli in |u| < 0.8 with |u -+ 1| > 0.2.
std::vector<Complex> random_moduli(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-0.8, 0.8);
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < count) {
    const Complex u(d(rng), d(rng));
    if (std::abs(u) < 0.8 && std::abs(u - 1.0) > 0.2 && std::abs(u + 1.0) > 0.2 && std::abs(u.imag()) > 1e-3)
      out.push_back(u);
  }
  return out;
}

}  // namespace

TEST_CASE("Gauss-Legendre rule") {
  const auto& [xs, ws] = gauss_legendre(5);
  double sum = 0, x4 = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sum += ws[k];
    x4 += ws[k] * std::pow(xs[k], 8);
  }
  CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(x4 == doctest::Approx(2.0 / 9.0).epsilon(1e-13));  // exact up to degree 9
  CHECK(std::is_sorted(xs.begin(), xs.end()));
  CHECK(&gauss_legendre(5) == &gauss_legendre(5));
}

TEST_CASE("probe validation") {
  CHECK_THROWS_AS(period_omega({Complex(1.0, 0.0), kLeft}), std::invalid_argument);
  CHECK_THROWS_AS(period_omega({Complex(-1.0 + 1e-9, 0.0), kRight}), std::invalid_argument);
  CHECK_THROWS_AS(period_omega({Complex(0.3, 0.1), {BranchPoint::U, BranchPoint::U}}), std::invalid_argument);
  // u = 0 lies on the segment [-1, 1]
  CHECK_THROWS_AS(period_omega({Complex(0.0, 0.0), {BranchPoint::MinusOne, BranchPoint::PlusOne}}), std::invalid_argument);
  CHECK_NOTHROW(period_omega({Complex(0.0, 0.5), {BranchPoint::MinusOne, BranchPoint::PlusOne}}));
  CHECK(kLeft.name() == "[-1, u]");
  CHECK(standard_cycles().size() == 2);
}

TEST_CASE("period at u = 0 against an independent quadrature") {
  const double oracle = lemniscatic_oracle();
  CHECK(oracle == doctest::Approx(lemniscatic_closed_form()).epsilon(1e-12));
  const auto left = period_omega({Complex(0.0), kLeft});
  const auto right = period_omega({Complex(0.0), kRight});
  CHECK(std::abs(left.value) == doctest::Approx(oracle).epsilon(1e-10));
  CHECK(std::abs(right.value) == doctest::Approx(oracle).epsilon(1e-10));
  CHECK(left.estimated_error >= 0);
  CHECK(left.estimated_error < 1e-10);
  // on [-1, 0] the cubic is positive, on [0, 1] negative
  CHECK(std::abs(left.value.imag()) < 1e-10 * oracle);
  CHECK(std::abs(right.value.real()) < 1e-10 * oracle);

  const auto sw = period_sw({Complex(0.0), kLeft});
  CHECK(std::isfinite(sw.value.real()));
  CHECK(std::isfinite(sw.value.imag()));
}

TEST_CASE("real moduli: one real and one imaginary period") {
  for (double u : {-0.6, -0.2, 0.4, 0.7}) {
    CAPTURE(u);
    const Complex a = period_omega({Complex(u), kLeft}).value;
    const Complex b = period_omega({Complex(u), kRight}).value;
    CHECK(std::abs(a.imag()) < 1e-8 * std::abs(a));
    CHECK(std::abs(b.real()) < 1e-8 * std::abs(b));
  }
}

TEST_CASE("orientation reversal negates both periods") {
  for (const Complex u : {Complex(0.3, 0.1), Complex(-0.5, 0.4), Complex(0.0)}) {
    for (const Cycle& c : standard_cycles()) {
      const Complex o = period_omega({u, c}).value, orev = period_omega({u, c.reversed()}).value;
      const Complex s = period_sw({u, c}).value, srev = period_sw({u, c.reversed()}).value;
      CHECK(std::abs(o + orev) < 1e-14 * std::abs(o));
      CHECK(std::abs(s + srev) < 1e-14 * std::abs(s));
    }
  }
}

TEST_CASE("the two forms have different periods") {
  const Complex u(0.3, 0.1);
  CHECK(std::abs(std::abs(period_sw({u, kLeft}).value) - std::abs(period_omega({u, kLeft}).value)) > 1e-3);
}

TEST_CASE("midpoint refinement converges monotonically") {
  // the theta-integrand is smooth and even about +-pi/2, so the midpoint rule converges
  // geometrically; errors are compared until they reach the rounding floor
  constexpr double floor = 1e-13;
  for (const Complex u : random_moduli(5, 42)) {
    CAPTURE(u);
    const Complex ref = period_omega({u, kLeft, kDefaultNodes, Quadrature::GaussLegendre}).value;
    double previous = 1e300;
    for (int n : {2, 4, 8, 16}) {
      const double err = std::abs(period_omega({u, kLeft, n, Quadrature::Midpoint}).value - ref);
      if (previous > floor) CHECK(err * 3 < previous);
      previous = err;
    }
  }
}

TEST_CASE("period lattice is nondegenerate") {
  auto ms = random_moduli(10, 7);
  ms.push_back(Complex(0.0));
  ms.push_back(Complex(0.5));
  for (const Complex u : ms) {
    const Complex ratio = period_omega({u, kLeft}).value / period_omega({u, kRight}).value;
    CHECK(std::abs(ratio.imag()) > 1e-6);
  }
}

TEST_CASE("derivative identity") {
  const auto v = sw_derivative_check(Complex(0.3, 0.1), 1e-4, 1e-6);
  CHECK(v.holds);
  REQUIRE(v.cycles.size() == 2);
  CHECK(v.max_residual() < 1e-6);

  CHECK(sw_derivative_check(Complex(0.0), 1e-4, 1e-6).holds);

  for (const Complex u : random_moduli(10, 2026)) {
    CAPTURE(u);
    const auto r = sw_derivative_check(u, 1e-4, 1e-6);
    CHECK(r.holds);
  }

  // coarse quadrature cannot meet 1e-14; the failure is the precision floor
  const auto coarse = sw_derivative_check(Complex(0.3, 0.1), 1e-4, 1e-14, 16);
  CHECK_FALSE(coarse.holds);
  CHECK(coarse.max_residual() > 1e-14);

  CHECK_THROWS_AS(sw_derivative_check(Complex(0.3, 0.1), 0.0), std::invalid_argument);
}

TEST_CASE("residue at infinity vanishes") {
  CHECK(std::abs(residue_at_infinity(Complex(0.0), 10.0)) < 1e-6);
  CHECK(std::abs(residue_at_infinity(Complex(0.3, 0.1), 10.0)) < 1e-6);
  CHECK(std::abs(residue_at_infinity(Complex(0.3, 0.1), 20.0)) < 1e-6);
  CHECK_THROWS_AS(residue_at_infinity(Complex(0.0), 1.5), std::invalid_argument);
  CHECK_THROWS_AS(residue_at_infinity(Complex(0.0), 10.0, 8), std::invalid_argument);
}
