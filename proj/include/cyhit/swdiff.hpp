// Periods of omega_u = dx/y and lambda = (x - u) dx/y on the Seiberg-Witten curve
// y^2 = (x - 1)(x + 1)(x - u), and the identity d/du lambda = -omega_u / 2.
//
// A cycle is the double cover of the straight segment between two branch points.
// On the segment x = m + h sin(theta), theta in [-pi/2, pi/2], with m the midpoint
// and h the half-length, y = i h cos(theta) w(theta) where w^2 = x - c and c is the
// third branch point. Then dx/y = dtheta / (i w), with no endpoint singularity.
// w starts at the principal root at the lower-indexed endpoint and is continued by
// nearest-value selection, so the branch is independent of the cycle orientation
// and of small moves of u.
#pragma once

#include <complex>
#include <string>
#include <vector>

namespace cyhit {

using Complex = std::complex<double>;

enum class BranchPoint { MinusOne = 0, PlusOne = 1, U = 2 };

struct Cycle {
  BranchPoint from = BranchPoint::MinusOne;
  BranchPoint to = BranchPoint::U;

  Cycle reversed() const { return {to, from}; }
  std::string name() const;
};

enum class Quadrature { GaussLegendre, Midpoint };

inline constexpr int kDefaultNodes = 2048;
inline constexpr double kModulusExclusion = 1e-8;  // |u -+ 1| below this is rejected
inline constexpr double kMinCycleLength = 1e-6;    // branch points closer than this are rejected

struct PeriodProbe {
  Complex u;
  Cycle cycle;
  int nodes = kDefaultNodes;
  Quadrature scheme = Quadrature::GaussLegendre;

  /// Throws std::invalid_argument for excluded moduli, degenerate cycles, or a
  /// third branch point lying on the segment.
  void validate() const;
};

struct PeriodValue {
  Complex value;
  double estimated_error = 0;  // |I(n) - I(n/2)|
};

PeriodValue period_omega(const PeriodProbe& probe);
PeriodValue period_sw(const PeriodProbe& probe);

/// The two cycles used for derivative checks: segments [-1, u] and [1, u].
std::vector<Cycle> standard_cycles();

struct CycleResidual {
  Cycle cycle;
  Complex finite_difference;  // (P_sw(u + h) - P_sw(u - h)) / 2h
  Complex half_omega;         // P_omega(u) / 2
  double residual = 0;        // |finite_difference + half_omega|
};

struct SwVerdict {
  bool holds = false;
  double tolerance = 0;
  std::vector<CycleResidual> cycles;

  double max_residual() const;
};

SwVerdict sw_derivative_check(Complex u, double h = 1e-4, double tol = 1e-6, int nodes = kDefaultNodes);

/// (1 / 2 pi i) * loop integral of (x - u) dx / y over |x| = R, taken over
/// theta in [0, 4 pi] on the double cover and halved. Requires R > max(1, |u|) + 1.
/// Throws std::runtime_error if the continued root does not close up.
Complex residue_at_infinity(Complex u, double radius, int steps = 4096);

/// Gauss-Legendre nodes and weights on [-1, 1], ascending, cached per n.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

}  // namespace cyhit
