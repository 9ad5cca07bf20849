// Classical matrix Lie algebras sl(n), so(n), sp(2m): the adjoint quotient chi,
// centralizer dimensions, sl2-triples, Kostant sections and Slodowy slices.
//
// Fixed bases (ad-matrices are taken with respect to these):
//   sl(n):  E_ij (i != j, row-major), then E_ii - E_{i+1,i+1}
//   so(n):  E_ij - E_ji for i < j (antisymmetric realization)
//   sp(2m): [[A, B], [C, -A^T]] with B, C symmetric, form J = [[0, I], [-I, 0]];
//           A-blocks E_ij, then B-blocks E_ij + E_ji (i <= j), then C-blocks likewise
#pragma once

#include "cyhit/random.hpp"
#include "cyhit/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cyhit {

enum class AlgebraKind { SL, SO, SP };

struct ClassicalAlgebra {
  AlgebraKind kind = AlgebraKind::SL;
  int size = 2;  // matrix size: n for sl(n) and so(n), 2m for sp(2m)

  /// "sl3", "so5", "sp4" (also with parentheses, e.g. "sl(3)").
  static ClassicalAlgebra parse(std::string_view text);
  std::string name() const;

  int rank() const;
  int dimension() const;
  const std::vector<RatMatrix>& basis() const;
  bool contains(const RatMatrix& m) const;
  /// Coordinates of an algebra element in the fixed basis.
  RatVector coordinates(const RatMatrix& m) const;
  RatMatrix from_coordinates(const RatVector& c) const;
  /// J for sp, identity otherwise.
  RatMatrix form() const;

 private:
  friend ClassicalAlgebra make_algebra(AlgebraKind kind, int size);
  std::vector<RatMatrix> basis_;
  RatMatrix left_inverse_;  // (B^T B)^{-1} B^T on flattened matrices
};

/// Throws std::invalid_argument for sl(n < 2), so(n < 3), sp of odd size.
ClassicalAlgebra make_algebra(AlgebraKind kind, int size);

class ClassicalLieElement {
 public:
  /// Throws std::invalid_argument if the matrix violates the algebra's constraint.
  ClassicalLieElement(ClassicalAlgebra algebra, RatMatrix matrix);

  const ClassicalAlgebra& algebra() const { return algebra_; }
  const RatMatrix& matrix() const { return matrix_; }

 private:
  ClassicalAlgebra algebra_;
  RatMatrix matrix_;
};

inline RatMatrix bracket(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

/// Matrix of ad(v) on the fixed basis (dimension x dimension).
RatMatrix ad_matrix(const ClassicalLieElement& v);
Eigen::Index centralizer_dimension(const ClassicalLieElement& v);

/// Adjoint quotient coordinates from det(v - z id):
///   sl(n):    coefficients of z^{n-2}, ..., z^0
///   so(2m+1): coefficients of z^{2m-1}, z^{2m-3}, ..., z^1
///   sp(2m):   coefficients of z^{2m-2}, z^{2m-4}, ..., z^0
///   so(2m):   coefficients of z^{2m-2}, ..., z^2, then Pf(v) in place of z^0
/// Coefficients that must vanish by symmetry are checked (std::logic_error).
std::vector<Rational> chi(const ClassicalLieElement& v);

/// dim ker ad(v) == rank.
bool is_regular(const ClassicalLieElement& v);

/// Random group element g with g v g^{-1} in the same algebra: unit-triangular
/// products for sl, Cayley transforms (1 + X)(1 - X)^{-1} for so and sp.
RatMatrix random_group_element(const ClassicalAlgebra& g, Rng& rng);

struct Sl2Triple {
  ClassicalLieElement x, y, h;

  /// [h,x] = 2x, [h,y] = -2y, [x,y] = h, exactly.
  bool brackets_hold() const;
};

/// Principal triple in sl(n): x = sum E_{i,i+1}, y = sum i(n-i) E_{i+1,i},
/// h = diag(n-1, n-3, ..., 1-n).
Sl2Triple sl2_triple_regular(int n);

/// Triple in sl(n) for the Jordan type (n-1, 1), n >= 3: the principal triple of
/// sl(n-1) on the first block, zero on the last coordinate.
Sl2Triple sl2_triple_subregular(int n);

/// Element of the Kostant slice x + ker ad(y) of the principal triple with
/// chi = b. b has n-1 entries; solved degree by degree, since the degree-d
/// invariant is affine in the coefficient of y^{d-1} and ignores higher ones.
ClassicalLieElement kostant_section(int n, const std::vector<Rational>& b);

struct SlodowySlice {
  ClassicalLieElement base;                   // the nilpotent x
  std::vector<ClassicalLieElement> directions;  // basis of ker ad(y), ad(h)-eigenvectors
  std::vector<int> weights;                   // ad(h) eigenvalue of each direction

  ClassicalLieElement point(const std::vector<Rational>& coords) const;
};

SlodowySlice slodowy_slice(const Sl2Triple& triple);

/// Eigenvalues of ad(h) on ker ad(y), descending.
std::vector<int> slice_weights(const Sl2Triple& triple);

struct FiberSingularityVerdict {
  Eigen::Index jacobian_rank_at_origin = 0;
  std::vector<Eigen::Index> jacobian_ranks_at_samples;
  std::vector<std::vector<Rational>> samples;  // slice coordinates of fiber points
  bool chi_vanishes_at_origin = false;
  bool samples_on_fiber = false;

  bool singular_exactly_at_origin() const;
};

/// Jacobian (invariants x slice coordinates) of chi restricted to a slice, exact.
RatMatrix slice_jacobian(const SlodowySlice& slice, const std::vector<Rational>& coords);

/// Checks the fiber over 0 of chi restricted to the subregular slice of sl(3):
/// the Jacobian has rank < 2 at the slice origin and rank 2 at random rational
/// fiber points away from it.
FiberSingularityVerdict subregular_fiber_singularity(int n = 3, int samples = 20, std::uint64_t seed = 0);

}  // namespace cyhit
