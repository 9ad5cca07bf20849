// Orbit polynomials P_lambda(t, z) = prod_{mu in W.lambda} (mu(t) - z), weight
// systems of the standard and adjoint representations, and the criterion for the
// map from the partial cameral quotient onto the lambda-spectral curve to be an
// isomorphism.
//
// Orbit polynomials are only ever evaluated at a fixed Cartan point t, giving a
// polynomial in z; they are never expanded symbolically in t.
#pragma once

#include "cyhit/polynomial.hpp"
#include "cyhit/rootsys.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyhit {

enum class RepKind { Standard, Adjoint };

RepKind parse_rep(std::string_view name);
std::string rep_name(RepKind rep);

struct WeightMultiplicity {
  RatVector weight;
  int multiplicity = 1;
};

struct WeightSystem {
  DynkinType algebra_type;
  RepKind rep = RepKind::Standard;
  std::vector<WeightMultiplicity> weights;

  int dimension() const;
};

/// P_lambda(t, z) as a polynomial in z; mu(t) is the ambient pairing (mu, t).
RatPoly orbit_poly_eval(const RootSystem& r, const RatVector& lambda, const RatVector& t);

/// Standard weights (classical types only) or adjoint weights (any type), in the
/// ambient coordinates of RootSystem::build(t).
WeightSystem weight_system(const DynkinType& t, RepKind rep);

/// Expected dimension: n+1, 2n+1, 2n, 2n for standard A/B/C/D; dim g for adjoint.
int representation_dimension(const DynkinType& t, RepKind rep);

struct DecompositionVerdict {
  bool equal = false;
  RatPoly char_poly;      // det(rho(t) - z id)
  RatPoly orbit_product;  // prod over dominant lambda of P_lambda(t, z)^{m_lambda}
  std::vector<WeightMultiplicity> dominant_factors;
};

/// Compares the characteristic polynomial of rho(cartan) with the product of
/// orbit polynomials over dominant weights. cartan must lie in the root span.
DecompositionVerdict decompose_char_poly(const DynkinType& t, RepKind rep, const RatVector& cartan);

struct IsoVerdict {
  bool holds = false;     // every lambda - mu is a rational multiple of a root
  bool integral = false;  // ... and every such multiple is an integer
};

/// Orbit scan: lambda - mu parallel to a root (or zero) for every mu in W.lambda.
/// lambda must be dominant and nonzero.
IsoVerdict iso_criterion_detail(const RootSystem& r, const RatVector& lambda);
inline bool iso_criterion(const RootSystem& r, const RatVector& lambda) {
  return iso_criterion_detail(r, lambda).holds;
}

/// Same criterion evaluated literally over every w in W (requires |W| <= cap).
bool iso_criterion_enumerated(const RootSystem& r, const RatVector& lambda, std::uint64_t cap = 10'000);

/// Nonzero rational c with v = c * alpha for some root alpha, if any.
std::optional<std::pair<Rational, RatVector>> root_multiple(const RootSystem& r, const RatVector& v);

struct Table1Row {
  DynkinType type;
  std::vector<int> passing;           // 1-based indices i of fundamental weights omega_i
  std::vector<int> passing_integral;  // subset whose multiples are all integral
};

std::vector<Table1Row> table1_report(const std::vector<DynkinType>& types);

/// A1..AK, B3..BK, C3..CK, D4..DK and G2.
std::vector<DynkinType> table1_families(int max_rank);

/// Published rows: A_n {1, n}, B_n and C_n (n >= 3) {1, 2}, D_n none, G2 {1, 2}.
std::vector<int> table1_published_row(const DynkinType& t);

/// (|W|, dim rho): degrees of the cameral and the spectral cover.
std::pair<std::uint64_t, int> covering_degrees(const DynkinType& t, RepKind rep);

}  // namespace cyhit
