#include "cyhit/spectral.hpp"

#include "cyhit/linalg.hpp"
#include "cyhit/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cyhit {

namespace {

RatVector unit(Eigen::Index dim, Eigen::Index i) {
  RatVector v = RatVector::Zero(dim);
  v[i] = 1;
  return v;
}

}  // namespace

RepKind parse_rep(std::string_view name) {
  if (name == "standard" || name == "std") return RepKind::Standard;
  if (name == "adjoint" || name == "adj") return RepKind::Adjoint;
  throw std::invalid_argument("unknown representation '" + std::string(name) + "' (expected standard or adjoint)");
}

std::string rep_name(RepKind rep) { return rep == RepKind::Standard ? "standard" : "adjoint"; }

int WeightSystem::dimension() const {
  int d = 0;
  for (const auto& w : weights) d += w.multiplicity;
  return d;
}

RatPoly orbit_poly_eval(const RootSystem& r, const RatVector& lambda, const RatVector& t) {
  RatPoly p = RatPoly::constant(1);
  for (const auto& mu : orbit(r, lambda)) p *= RatPoly::linear_factor(r.inner(mu, t));
  return p;
}

int representation_dimension(const DynkinType& t, RepKind rep) {
  validate(t);
  if (rep == RepKind::Adjoint) return static_cast<int>(lie_algebra_dimension(t));
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2 * t.rank + 1;
    case Family::C:
    case Family::D: return 2 * t.rank;
    default: throw std::invalid_argument("no standard representation for type " + t.name());
  }
}

WeightSystem weight_system(const DynkinType& t, RepKind rep) {
  validate(t);
  WeightSystem ws{t, rep, {}};
  if (rep == RepKind::Adjoint) {
    const RootSystem r = RootSystem::build(t);
    for (const auto& a : r.roots()) ws.weights.push_back({a, 1});
    ws.weights.push_back({RatVector::Zero(r.ambient_dim()), t.rank});
    return ws;
  }
  const int n = t.rank;
  switch (t.family) {
    case Family::A: {
      // classes of e_i, represented by their projections to the sum-zero hyperplane
      const RatVector centre = RatVector::Constant(n + 1, Rational(1, n + 1));
      for (int i = 0; i <= n; ++i) ws.weights.push_back({unit(n + 1, i) - centre, 1});
      break;
    }
    case Family::B:
      for (int i = 0; i < n; ++i) ws.weights.push_back({unit(n, i), 1});
      for (int i = 0; i < n; ++i) ws.weights.push_back({-unit(n, i), 1});
      ws.weights.push_back({RatVector::Zero(n), 1});
      break;
    case Family::C:
    case Family::D:
      for (int i = 0; i < n; ++i) ws.weights.push_back({unit(n, i), 1});
      for (int i = 0; i < n; ++i) ws.weights.push_back({-unit(n, i), 1});
      break;
    default: throw std::invalid_argument("no standard representation for type " + t.name());
  }
  return ws;
}

DecompositionVerdict decompose_char_poly(const DynkinType& t, RepKind rep, const RatVector& cartan) {
  const RootSystem r = RootSystem::build(t);
  if (!r.in_root_span(cartan)) {
    throw std::invalid_argument("decompose_char_poly: Cartan point " + to_string(cartan) + " is outside the root span");
  }
  const WeightSystem ws = weight_system(t, rep);

  const int dim = ws.dimension();
  RatMatrix rho = RatMatrix::Zero(dim, dim);
  int k = 0;
  for (const auto& w : ws.weights) {
    const Rational value = r.inner(w.weight, cartan);
    for (int m = 0; m < w.multiplicity; ++m, ++k) rho(k, k) = value;
  }

  DecompositionVerdict v;
  v.char_poly = char_poly(rho);
  v.orbit_product = RatPoly::constant(1);
  for (const auto& w : ws.weights) {
    if (!r.is_dominant(w.weight)) continue;
    v.dominant_factors.push_back(w);
    v.orbit_product *= orbit_poly_eval(r, w.weight, cartan).pow(static_cast<unsigned>(w.multiplicity));
  }
  v.equal = v.char_poly == v.orbit_product;
  return v;
}

std::optional<std::pair<Rational, RatVector>> root_multiple(const RootSystem& r, const RatVector& v) {
  if (is_zero(v)) return std::nullopt;
  for (const auto& a : r.positive_roots()) {
    Eigen::Index i = 0;
    while (a[i] == 0) ++i;
    const Rational c = v[i] / a[i];
    if (c != 0 && v == c * a) return std::make_pair(c, a);
  }
  return std::nullopt;
}

IsoVerdict iso_criterion_detail(const RootSystem& r, const RatVector& lambda) {
  if (is_zero(lambda)) throw std::invalid_argument("iso_criterion: lambda must be nonzero");
  if (!r.is_dominant(lambda)) throw std::invalid_argument("iso_criterion: lambda must be dominant");
  IsoVerdict verdict{true, true};
  for (const auto& mu : orbit(r, lambda)) {
    const RatVector diff = lambda - mu;
    if (is_zero(diff)) continue;
    const auto m = root_multiple(r, diff);
    if (!m) return {false, false};
    if (!is_integer(m->first)) verdict.integral = false;
  }
  return verdict;
}

bool iso_criterion_enumerated(const RootSystem& r, const RatVector& lambda, std::uint64_t cap) {
  for (const auto& w : enumerate(r, cap)) {
    const RatVector diff = lambda - w.matrix * lambda;
    if (!is_zero(diff) && !root_multiple(r, diff)) return false;
  }
  return true;
}

std::vector<Table1Row> table1_report(const std::vector<DynkinType>& types) {
  std::vector<Table1Row> rows;
  for (const auto& t : types) {
    const RootSystem r = RootSystem::build(t);
    const auto omegas = fundamental_weights(r);
    Table1Row row{t, {}, {}};
    for (std::size_t i = 0; i < omegas.size(); ++i) {
      const auto v = iso_criterion_detail(r, omegas[i]);
      if (v.holds) row.passing.push_back(static_cast<int>(i) + 1);
      if (v.holds && v.integral) row.passing_integral.push_back(static_cast<int>(i) + 1);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<DynkinType> table1_families(int max_rank) {
  std::vector<DynkinType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

std::vector<int> table1_published_row(const DynkinType& t) {
  switch (t.family) {
    case Family::A: return t.rank == 1 ? std::vector<int>{1} : std::vector<int>{1, t.rank};
    case Family::B:
    case Family::C: return {1, 2};
    case Family::D: return {};
    case Family::G: return {1, 2};
    default: throw std::invalid_argument("no published row for type " + t.name());
  }
}

std::pair<std::uint64_t, int> covering_degrees(const DynkinType& t, RepKind rep) {
  return {order(t), representation_dimension(t, rep)};
}

}  // namespace cyhit
