// Dimension and genus bookkeeping for Hitchin systems on a curve of genus g >= 2.
#pragma once

#include "cyhit/rootsys.hpp"

#include <cstdint>
#include <optional>

namespace cyhit {

struct CurveParams {
  int genus = 2;

  /// Throws std::invalid_argument unless genus >= 2.
  explicit CurveParams(int g);
};

struct HitchinDims {
  std::uint64_t base_dim = 0;
  std::uint64_t total_dim = 0;  // 2 * base_dim
  std::uint64_t cameral_genus = 0;
  std::optional<std::uint64_t> spectral_genus;  // type A only
  std::optional<std::uint64_t> fiber_dim;       // type A only: spectral_genus - g
};

/// sum_i h0(K^{d_i}) = sum_i (2 d_i - 1)(g - 1) by Riemann-Roch.
std::uint64_t base_dim(const DynkinType& t, const CurveParams& c);

/// Genus of the cameral cover: degree |W|, simple ramification over the
/// |roots| (2g - 2) zeros of the pulled-back discriminant, |W|/2 ramification
/// points of index 2 over each.
std::uint64_t cameral_genus(const DynkinType& t, const CurveParams& c);

/// Genus of the (n+1)-sheeted spectral cover for SL(n+1): 1 + (n+1)^2 (g - 1).
std::uint64_t spectral_genus_A(int n, const CurveParams& c);

HitchinDims hitchin_dims(const DynkinType& t, const CurveParams& c);

struct DimensionVerdict {
  bool base_matches_algebra = false;         // base_dim == (g-1) dim g
  std::optional<bool> fiber_matches_base;    // type A: spectral_genus - g == base_dim
  HitchinDims dims;

  bool ok() const { return base_matches_algebra && fiber_matches_base.value_or(true); }
};

DimensionVerdict integrable_dimension_check(const DynkinType& t, const CurveParams& c);

}  // namespace cyhit
