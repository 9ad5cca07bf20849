#include "cyhit/hitchin.hpp"

#include "cyhit/weyl.hpp"

#include <stdexcept>
#include <string>

namespace cyhit {

CurveParams::CurveParams(int g) : genus(g) {
  if (g < 2) throw std::invalid_argument("curve genus must be >= 2, got " + std::to_string(g));
}

std::uint64_t base_dim(const DynkinType& t, const CurveParams& c) {
  std::uint64_t sum = 0;
  for (int d : degrees(t)) sum += static_cast<std::uint64_t>(2 * d - 1);
  return sum * static_cast<std::uint64_t>(c.genus - 1);
}

std::uint64_t cameral_genus(const DynkinType& t, const CurveParams& c) {
  const std::uint64_t w = order(t);
  const std::uint64_t k = 2 * static_cast<std::uint64_t>(c.genus) - 2;  // deg K_C
  const std::uint64_t roots = classical_root_count(t);
  // 2g' - 2 = |W| (2g - 2) + (|W| / 2) |R| (2g - 2); |W| is even for every type
  const std::uint64_t rhs = w * k + (w / 2) * roots * k;
  if (rhs % 2 != 0) throw std::logic_error("cameral_genus: odd Riemann-Hurwitz total");
  return rhs / 2 + 1;
}

std::uint64_t spectral_genus_A(int n, const CurveParams& c) {
  if (n < 1) throw std::invalid_argument("spectral_genus_A: need n >= 1");
  const auto m = static_cast<std::uint64_t>(n + 1);
  return 1 + m * m * static_cast<std::uint64_t>(c.genus - 1);
}

HitchinDims hitchin_dims(const DynkinType& t, const CurveParams& c) {
  HitchinDims d;
  d.base_dim = base_dim(t, c);
  d.total_dim = 2 * d.base_dim;
  d.cameral_genus = cameral_genus(t, c);
  if (t.family == Family::A) {
    d.spectral_genus = spectral_genus_A(t.rank, c);
    d.fiber_dim = *d.spectral_genus - static_cast<std::uint64_t>(c.genus);
  }
  return d;
}

DimensionVerdict integrable_dimension_check(const DynkinType& t, const CurveParams& c) {
  DimensionVerdict v;
  v.dims = hitchin_dims(t, c);
  v.base_matches_algebra = v.dims.base_dim == static_cast<std::uint64_t>(c.genus - 1) * lie_algebra_dimension(t);
  if (v.dims.fiber_dim) v.fiber_matches_base = *v.dims.fiber_dim == v.dims.base_dim;
  return v;
}

}  // namespace cyhit
