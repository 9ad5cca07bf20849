// Irreducible root systems of types A-G in exact rational realizations.
//
// Simple roots follow Bourbaki numbering. Cartan entries use the row
// convention A(i, j) = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
#pragma once

#include "cyhit/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cyhit {

enum class Family { A, B, C, D, E, F, G };

struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  /// Parses "A3", "E8", "g2" and similar.
  static DynkinType parse(std::string_view text);
  std::string name() const;
  bool simply_laced() const { return family == Family::A || family == Family::D || family == Family::E; }

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// Throws std::invalid_argument for inadmissible family/rank combinations.
void validate(const DynkinType& t);
bool is_admissible(const DynkinType& t);

/// Number of roots: n(n+1), 2n^2, 2n(n-1), 72, 126, 240, 48, 12.
std::size_t classical_root_count(const DynkinType& t);
/// rank + number of roots.
std::size_t lie_algebra_dimension(const DynkinType& t);

/// Degrees of the basic invariants, ascending.
std::vector<int> degrees(const DynkinType& t);
/// Degrees minus one.
std::vector<int> exponents(const DynkinType& t);

/// Bourbaki simple roots in the ambient space of the standard realization.
std::vector<RatVector> standard_simple_roots(const DynkinType& t);

class RootSystem {
 public:
  static RootSystem build(const DynkinType& t);

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank; }
  Eigen::Index ambient_dim() const { return ambient_dim_; }
  /// Positive roots ordered by height, then their negatives in the same order.
  const std::vector<RatVector>& roots() const& { return roots_; }
  // by value on temporaries, so `for (auto& a : RootSystem::build(t).roots())` is safe
  std::vector<RatVector> roots() && { return std::move(roots_); }
  std::vector<RatVector> positive_roots() const;
  const std::vector<RatVector>& simple_roots() const& { return simple_; }
  std::vector<RatVector> simple_roots() && { return std::move(simple_); }
  const RatMatrix& bilinear_form() const { return form_; }

  Rational inner(const RatVector& a, const RatVector& b) const { return a.dot(form_ * b); }
  /// <v, alpha^vee> = 2 (v, alpha) / (alpha, alpha)
  Rational pairing(const RatVector& v, const RatVector& alpha) const {
    return Rational(2) * inner(v, alpha) / inner(alpha, alpha);
  }

  bool is_root(const RatVector& v) const { return index_.count(v) != 0; }
  /// Coordinates in the simple-root basis; throws if v is outside the root span.
  RatVector simple_coordinates(const RatVector& v) const;
  bool in_root_span(const RatVector& v) const;
  /// Dominant means <v, alpha_i> >= 0 for every simple root.
  bool is_dominant(const RatVector& v) const;

 private:
  DynkinType type_;
  Eigen::Index ambient_dim_ = 0;
  std::vector<RatVector> simple_;
  std::vector<RatVector> roots_;
  RatMatrix form_;
  RatMatrix simple_matrix_;       // ambient x rank
  RatMatrix coordinate_solver_;   // (S^T G S)^{-1} S^T G
  std::unordered_map<RatVector, std::size_t, VectorHash, VectorEqual> index_;
};

/// Cartan matrix of an ordered simple system under a bilinear form.
RatMatrix cartan_matrix(const std::vector<RatVector>& simple, const RatMatrix& form);
RatMatrix cartan_matrix(const RootSystem& r);
RatMatrix cartan_matrix(const DynkinType& t);

/// Weights omega_i in the root span with <omega_i, alpha_j^vee> = delta_ij.
std::vector<RatVector> fundamental_weights(const RootSystem& r);

/// Permutation p with a(i, j) == b(p[i], p[j]), if one exists.
std::optional<std::vector<int>> match_cartan(const RatMatrix& a, const RatMatrix& b);

/// True if the Cartan matrix equals that of t up to simultaneous permutation.
bool cartan_equivalent(const RatMatrix& cartan, const DynkinType& t);

/// Types of the connected components of a Cartan matrix, one per component in
/// order of the lowest node index. Prefers A over D for D3 and B over C for C2.
/// Throws if some component is not of finite type.
std::vector<DynkinType> classify_cartan(const RatMatrix& cartan);

/// Node sets of the connected components of the diagram.
std::vector<std::vector<int>> diagram_components(const RatMatrix& cartan);

}  // namespace cyhit
