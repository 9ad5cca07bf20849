#include "cyhit/swdiff.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace cyhit {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex position(BranchPoint b, Complex u) {
  switch (b) {
    case BranchPoint::MinusOne: return -1.0;
    case BranchPoint::PlusOne: return 1.0;
    case BranchPoint::U: return u;
  }
  return 0.0;
}

BranchPoint third(BranchPoint a, BranchPoint b) {
  return static_cast<BranchPoint>(3 - static_cast<int>(a) - static_cast<int>(b));
}

double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  const double t = std::clamp(std::real((p - a) * std::conj(d)) / std::norm(d), 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

Complex nearest_root(Complex z, Complex previous) {
  const Complex s = std::sqrt(z);
  return std::abs(s - previous) <= std::abs(s + previous) ? s : -s;
}

// Integral over theta of weight(x) / (i w) for the canonical orientation.
template <typename Weight>
Complex segment_integral(const PeriodProbe& p, int nodes, Weight weight) {
  BranchPoint lo = p.cycle.from, hi = p.cycle.to;
  if (static_cast<int>(lo) > static_cast<int>(hi)) std::swap(lo, hi);
  const Complex a = position(lo, p.u), b = position(hi, p.u), c = position(third(lo, hi), p.u);
  const Complex m = 0.5 * (a + b), h = 0.5 * (b - a);
  const double half_pi = 0.5 * std::numbers::pi;

  Complex w = std::sqrt(a - c);
  Complex sum = 0.0;
  auto eval = [&](double theta) {
    const Complex x = m + h * std::sin(theta);
    w = nearest_root(x - c, w);
    return weight(x) / (kI * w);
  };
  if (p.scheme == Quadrature::GaussLegendre) {
    const auto& [xs, ws] = gauss_legendre(nodes);
    for (std::size_t k = 0; k < xs.size(); ++k) sum += ws[k] * eval(half_pi * xs[k]);
    sum *= half_pi;
  } else {
    const double step = std::numbers::pi / nodes;
    for (int k = 0; k < nodes; ++k) sum += eval(-half_pi + (k + 0.5) * step);
    sum *= step;
  }
  return p.cycle.from == lo ? sum : -sum;
}

template <typename Weight>
PeriodValue period(const PeriodProbe& p, Weight weight) {
  p.validate();
  const Complex full = 2.0 * segment_integral(p, p.nodes, weight);
  const Complex half = 2.0 * segment_integral(p, std::max(1, p.nodes / 2), weight);
  return {full, std::abs(full - half)};
}

}  // namespace

std::string Cycle::name() const {
  auto label = [](BranchPoint b) {
    switch (b) {
      case BranchPoint::MinusOne: return "-1";
      case BranchPoint::PlusOne: return "1";
      case BranchPoint::U: return "u";
    }
    return "?";
  };
  return std::string("[") + label(from) + ", " + label(to) + "]";
}

void PeriodProbe::validate() const {
  if (std::abs(u - 1.0) < kModulusExclusion || std::abs(u + 1.0) < kModulusExclusion) {
    throw std::invalid_argument("modulus u must stay away from +-1 (the curve degenerates)");
  }
  if (cycle.from == cycle.to) throw std::invalid_argument("cycle endpoints must be distinct branch points");
  const Complex a = position(cycle.from, u), b = position(cycle.to, u);
  if (std::abs(a - b) < kMinCycleLength) throw std::invalid_argument("cycle endpoints closer than 1e-6: degenerate cycle");
  const Complex c = position(third(cycle.from, cycle.to), u);
  if (distance_to_segment(c, a, b) < kMinCycleLength) {
    throw std::invalid_argument("third branch point lies on the cycle segment " + cycle.name());
  }
  if (nodes < 2) throw std::invalid_argument("quadrature needs at least 2 nodes");
}

PeriodValue period_omega(const PeriodProbe& probe) {
  return period(probe, [](Complex) { return Complex(1.0); });
}

PeriodValue period_sw(const PeriodProbe& probe) {
  const Complex u = probe.u;
  return period(probe, [u](Complex x) { return x - u; });
}

std::vector<Cycle> standard_cycles() {
  return {{BranchPoint::MinusOne, BranchPoint::U}, {BranchPoint::PlusOne, BranchPoint::U}};
}

double SwVerdict::max_residual() const {
  double r = 0;
  for (const auto& c : cycles) r = std::max(r, c.residual);
  return r;
}

SwVerdict sw_derivative_check(Complex u, double h, double tol, int nodes) {
  if (!(h > 0)) throw std::invalid_argument("finite-difference step must be positive");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  SwVerdict v;
  v.tolerance = tol;
  v.holds = true;
  for (const Cycle& cyc : standard_cycles()) {
    auto sw = [&](Complex at) { return period_sw({at, cyc, nodes, Quadrature::GaussLegendre}).value; };
    CycleResidual r;
    r.cycle = cyc;
    r.finite_difference = (sw(u + h) - sw(u - h)) / (2.0 * h);
    r.half_omega = 0.5 * period_omega({u, cyc, nodes, Quadrature::GaussLegendre}).value;
    r.residual = std::abs(r.finite_difference + r.half_omega);
    v.holds = v.holds && r.residual < tol;
    v.cycles.push_back(r);
  }
  return v;
}

Complex residue_at_infinity(Complex u, double radius, int steps) {
  if (!(radius > std::max(1.0, std::abs(u)) + 1.0)) throw std::invalid_argument("radius must exceed max(1, |u|) + 1");
  if (steps < 16) throw std::invalid_argument("residue_at_infinity: too few steps");
  const double step = 4.0 * std::numbers::pi / steps;
  auto y2 = [u](Complex x) { return (x - 1.0) * (x + 1.0) * (x - u); };
  const Complex y0 = std::sqrt(y2(radius));
  Complex y = y0, sum = 0.0;
  for (int k = 0; k < steps; ++k) {
    const Complex x = std::polar(radius, k * step);
    y = nearest_root(y2(x), y);
    sum += (x - u) / y * (kI * x);
  }
  // after 4 pi the root must return to its start
  const Complex closing = nearest_root(y2(radius), y);
  if (std::abs(closing - y0) > 1e-8 * std::abs(y0)) throw std::runtime_error("residue_at_infinity: branch tracking failed to close");
  return sum * step * 0.5 / (2.0 * std::numbers::pi * kI);
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");

  std::vector<double> xs(static_cast<std::size_t>(n)), ws(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1 - x * x) * dp * dp);
    xs[static_cast<std::size_t>(i)] = -x;
    xs[static_cast<std::size_t>(n - 1 - i)] = x;
    ws[static_cast<std::size_t>(i)] = w;
    ws[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return cache.emplace(n, std::make_pair(std::move(xs), std::move(ws))).first->second;
}

}  // namespace cyhit
