// ADE surface singularities, the B2 deformation family u^4 + a1 u^2 + a2 - vw with
// its Z/2 action, and the discriminant of that family.
#pragma once

#include "cyhit/polynomial.hpp"
#include "cyhit/rational.hpp"
#include "cyhit/rootsys.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyhit {

/// Sparse multivariate polynomial with rational coefficients in a fixed number of
/// variables. Terms are keyed by exponent vectors.
class MPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MPoly(int nvars = 0) : nvars_(nvars) {}
  static MPoly constant(int nvars, const Rational& c);
  /// The k-th coordinate function.
  static MPoly variable(int nvars, int k);
  static MPoly monomial(const Rational& c, Exponents e);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  /// Smallest total degree of a term (-1 for zero).
  int order() const;

  Rational operator()(const std::vector<Rational>& point) const;
  MPoly partial(int k) const;
  /// Replace variable k by images[k]; all images share one variable count.
  MPoly substitute(const std::vector<MPoly>& images) const;
  MPoly pow(unsigned e) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& c, MPoly a);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  /// Terms in decreasing lexicographic exponent order, e.g. "u^4 - v*w".
  std::string str(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  int nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

/// Names "u", "v", "w" used for every surface polynomial here.
const std::vector<std::string>& surface_variables();

/// A_n: u^{n+1} - vw; D_n: u^{n-1} + u v^2 + w^2; E6: u^4 + v^3 + w^2;
/// E7: u^3 v + v^3 + w^2; E8: u^5 + v^3 + w^2. Throws for non-ADE types.
MPoly ade_equation(const DynkinType& t);

struct DeformationFamily {
  MPoly total;                          // in (u, v, w, a_1, ..., a_k)
  std::vector<std::string> parameters;  // names of a_1, ..., a_k
  std::vector<MPoly> symmetry;          // images of (u, v, w) in (u, v, w)

  int parameter_count() const { return static_cast<int>(parameters.size()); }
  /// Surface polynomial in (u, v, w) at fixed parameter values.
  MPoly fiber(const std::vector<Rational>& params) const;
  /// The symmetry fixes the total polynomial, as an identity in all variables.
  bool symmetry_invariant() const;
};

/// u^4 + a1 u^2 + a2 - vw with the action (u, v, w) -> (-u, w, v).
DeformationFamily b2_family();
/// Fiber of b2_family at (a1, a2).
MPoly b2_family(const Rational& a1, const Rational& a2);

/// p(u) = u^4 + a1 u^2 + a2.
RatPoly b2_quartic(const Rational& a1, const Rational& a2);

/// res(p, p') for the quartic above; zero iff the affine fiber is singular
/// (the Jacobian forces v = w = 0 and a multiple root of p).
Rational family_discriminant(const Rational& a1, const Rational& a2);

struct FiberFlag {
  Rational a1, a2;
  bool smooth = false;
  Rational discriminant;
  RatPoly common_factor;  // monic gcd(p, p'); constant 1 when smooth
  /// (u, 0, 0) with u a rational multiple root of p, when one exists.
  std::optional<std::array<Rational, 3>> singular_point;
};

FiberFlag fiber_flag(const Rational& a1, const Rational& a2);
std::vector<FiberFlag> fiber_profile(const std::vector<std::pair<Rational, Rational>>& samples);

struct IsolationVerdict {
  bool singular_at_origin = false;   // f(0) = 0 and every first partial vanishes at 0
  std::vector<std::array<Rational, 3>> other_singular_points;  // on the sampled grid
  int points_checked = 0;

  bool isolated() const { return singular_at_origin && other_singular_points.empty(); }
};

/// Checks the origin and the punctured grid {0, +-1/8, +-1/4}^3 \ {0}, and the
/// same grid scaled by 1/2 and 1/4, for further singular points of f = 0.
IsolationVerdict isolated_singularity_sampled(const MPoly& f);

}  // namespace cyhit
