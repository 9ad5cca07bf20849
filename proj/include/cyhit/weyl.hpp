// Weyl group actions on the ambient space of a RootSystem.
#pragma once

#include "cyhit/rootsys.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cyhit {

struct WeylElement {
  RatMatrix matrix;                      // acts on ambient column vectors
  std::optional<std::vector<int>> word;  // simple reflection indices, left to right
};

struct ParabolicSubgroup {
  std::vector<int> generators;           // J, 0-based simple root indices
  std::vector<DynkinType> components;    // type of the sub-diagram on J
  std::uint64_t order = 1;
};

/// Thrown by enumerate() when |W| exceeds the caller's cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// s_alpha(v) = v - <v, alpha^vee> alpha. alpha must be a root of r.
RatVector reflect(const RootSystem& r, const RatVector& alpha, const RatVector& v);
RatMatrix reflection_matrix(const RootSystem& r, const RatVector& alpha);

/// W-orbit by breadth-first closure under simple reflections, starting with lambda.
std::vector<RatVector> orbit(const RootSystem& r, const RatVector& lambda);

/// The unique dominant element of the orbit of v.
RatVector dominant_representative(const RootSystem& r, const RatVector& v);

/// Stabilizer W_J of a dominant weight, J = { i : <lambda, alpha_i> = 0 }.
ParabolicSubgroup stabilizer_face(const RootSystem& r, const RatVector& lambda);

/// |W_J| from the types of the sub-diagram on J (product of degrees per component).
std::uint64_t parabolic_order(const RootSystem& r, const std::vector<int>& generators);

std::uint64_t order(const DynkinType& t);
inline std::uint64_t order(const RootSystem& r) { return order(r.type()); }

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// All elements of W, breadth-first by right multiplication with simple
/// reflections. Throws CapExceeded if |W| > cap; E7 and E8 are always refused.
std::vector<WeylElement> enumerate(const RootSystem& r, std::uint64_t cap = kDefaultEnumerationCap);

/// Checks that w maps the root set onto itself.
bool permutes_roots(const RootSystem& r, const RatMatrix& w);

}  // namespace cyhit
