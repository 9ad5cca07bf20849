// Dynkin diagram automorphisms, folding of simply-laced root systems, and the
// McKay correspondence data attached to each irreducible diagram.
#pragma once

#include "cyhit/rootsys.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyhit {

struct DiagramAutomorphism {
  std::vector<int> node_permutation;  // node i maps to node_permutation[i]
  int order = 1;

  bool is_identity() const { return order == 1; }
  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;
};

/// Raised when a group contains an automorphism sending some node to a neighbor.
class NotDynkinError : public std::invalid_argument {
 public:
  NotDynkinError(int node, int image);
  std::pair<int, int> violating_pair() const { return pair_; }

 private:
  std::pair<int, int> pair_;
};

/// Every permutation of the nodes preserving the Cartan matrix.
std::vector<DiagramAutomorphism> graph_automorphisms(const DynkinType& t);

/// Graph automorphisms with <alpha_{tau(i)}, alpha_i> = 0 whenever tau(i) != i.
std::vector<DiagramAutomorphism> dynkin_automorphisms(const DynkinType& t);

/// Named subgroup of the Dynkin automorphisms: "1", "Z2", "Z3" or "S3".
/// For D4, Z2 is the swap of nodes 3 and 4 (so that D4/Z2 continues the
/// D_{k+1} -> C_k series); for D_n it is the swap of the two fork nodes.
std::vector<DiagramAutomorphism> named_subgroup(const DynkinType& t, std::string_view name);

struct FoldingResult {
  DynkinType source;
  std::size_t group_order = 1;
  std::vector<RatVector> folded_roots;   // orbit sums alpha_O, ambient coordinates
  std::vector<RatVector> folded_simple;  // orbit sums of simple roots
  RatMatrix folded_cartan;               // row convention <beta_i, beta_j^vee>
  DynkinType folded_type;
};

/// Folds an ADE system by a subgroup of its Dynkin automorphisms. The orbit sums
/// are formed with an element of maximal order; every maximal-order element is
/// tried and the resulting root sets must agree (std::logic_error otherwise).
FoldingResult fold(const DynkinType& t, const std::vector<DiagramAutomorphism>& group);

/// The node permutation of tau extended to a linear map of the ambient space
/// (identity on the orthogonal complement of the root span).
RatMatrix ambient_action(const RootSystem& r, const DiagramAutomorphism& tau);

/// Checks s_{alpha_O} = prod_{alpha' in O(alpha)} s_{alpha'} on the fixed subspace.
bool verify_reflection_formula(const DynkinType& t, const std::vector<DiagramAutomorphism>& group,
                               const RatVector& alpha);

struct McKayDatum {
  DynkinType delta;
  DynkinType delta_h;
  std::uint64_t symmetry_order = 1;     // |C| = |Gamma'/Gamma|
  std::uint64_t gamma_order = 1;        // |Gamma|
  std::uint64_t gamma_prime_order = 1;  // |Gamma'|
  std::string gamma_name;               // e.g. "cyclic", "binary dihedral"
};

McKayDatum mckay_datum(const DynkinType& t);

struct McKayGraph {
  int nodes = 0;
  Eigen::MatrixXi adjacency;  // multiplicity of chi_j in V (x) chi_i

  /// Connected, every node of total degree 2: the affine A_{n-1} cycle.
  bool is_cycle() const;
};

/// Characters of Z/n joined by tensoring with the representation diag(zeta, zeta^-1).
McKayGraph cyclic_mckay_graph(int n);

}  // namespace cyhit
