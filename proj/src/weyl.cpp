#include "cyhit/weyl.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace cyhit {

RatVector reflect(const RootSystem& r, const RatVector& alpha, const RatVector& v) {
  if (!r.is_root(alpha)) throw std::invalid_argument("reflect: " + to_string(alpha) + " is not a root");
  return v - r.pairing(v, alpha) * alpha;
}

RatMatrix reflection_matrix(const RootSystem& r, const RatVector& alpha) {
  if (!r.is_root(alpha)) throw std::invalid_argument("reflection_matrix: " + to_string(alpha) + " is not a root");
  const auto n = r.ambient_dim();
  const RatVector g_alpha = r.bilinear_form() * alpha;
  return RatMatrix::Identity(n, n) - (Rational(2) / r.inner(alpha, alpha)) * alpha * g_alpha.transpose();
}

std::vector<RatVector> orbit(const RootSystem& r, const RatVector& lambda) {
  std::unordered_set<RatVector, VectorHash, VectorEqual> seen{lambda};
  std::vector<RatVector> out{lambda};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& a : r.simple_roots()) {
      RatVector w = out[head] - r.pairing(out[head], a) * a;
      if (seen.insert(w).second) out.push_back(std::move(w));
    }
  }
  return out;
}

RatVector dominant_representative(const RootSystem& r, const RatVector& v) {
  RatVector w = v;
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& a : r.simple_roots()) {
      if (r.inner(w, a) < 0) {
        w -= r.pairing(w, a) * a;
        moved = true;
      }
    }
  }
  return w;
}

std::uint64_t order(const DynkinType& t) {
  std::uint64_t o = 1;
  for (int d : degrees(t)) o *= static_cast<std::uint64_t>(d);
  return o;
}

std::uint64_t parabolic_order(const RootSystem& r, const std::vector<int>& generators) {
  if (generators.empty()) return 1;
  std::vector<RatVector> sub;
  for (int j : generators) {
    if (j < 0 || j >= r.rank()) throw std::out_of_range("parabolic_order: simple root index out of range");
    sub.push_back(r.simple_roots()[static_cast<std::size_t>(j)]);
  }
  std::uint64_t o = 1;
  for (const auto& t : classify_cartan(cartan_matrix(sub, r.bilinear_form()))) o *= order(t);
  return o;
}

ParabolicSubgroup stabilizer_face(const RootSystem& r, const RatVector& lambda) {
  if (!r.is_dominant(lambda)) {
    throw std::invalid_argument("stabilizer_face: " + to_string(lambda) + " is not dominant");
  }
  ParabolicSubgroup p;
  for (int i = 0; i < r.rank(); ++i) {
    if (r.inner(lambda, r.simple_roots()[static_cast<std::size_t>(i)]) == 0) p.generators.push_back(i);
  }
  if (!p.generators.empty()) {
    std::vector<RatVector> sub;
    for (int j : p.generators) sub.push_back(r.simple_roots()[static_cast<std::size_t>(j)]);
    p.components = classify_cartan(cartan_matrix(sub, r.bilinear_form()));
  }
  p.order = parabolic_order(r, p.generators);
  return p;
}

std::vector<WeylElement> enumerate(const RootSystem& r, std::uint64_t cap) {
  const auto& t = r.type();
  if (t.family == Family::E && t.rank >= 7) {
    throw CapExceeded("enumerate: refusing to enumerate W(" + t.name() + "); use orbit-based criteria");
  }
  const std::uint64_t expected = order(r);
  if (expected > cap) {
    throw CapExceeded("enumerate: |W(" + t.name() + ")| = " + std::to_string(expected) + " exceeds cap " +
                      std::to_string(cap));
  }

  // rho has trivial stabilizer, so an element is determined by its image of rho.
  RatVector rho = RatVector::Zero(r.ambient_dim());
  for (const auto& w : fundamental_weights(r)) rho += w;

  std::vector<RatMatrix> simple;
  for (const auto& a : r.simple_roots()) simple.push_back(reflection_matrix(r, a));

  const auto n = r.ambient_dim();
  std::vector<WeylElement> out;
  out.push_back({RatMatrix::Identity(n, n), std::vector<int>{}});
  std::unordered_set<RatVector, VectorHash, VectorEqual> seen{rho};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t i = 0; i < simple.size(); ++i) {
      RatMatrix m = out[head].matrix * simple[i];
      if (!seen.insert(m * rho).second) continue;
      auto word = *out[head].word;
      word.push_back(static_cast<int>(i));
      out.push_back({std::move(m), std::move(word)});
    }
  }
  return out;
}

bool permutes_roots(const RootSystem& r, const RatMatrix& w) {
  std::unordered_set<RatVector, VectorHash, VectorEqual> image;
  for (const auto& a : r.roots()) {
    RatVector b = w * a;
    if (!r.is_root(b)) return false;
    image.insert(std::move(b));
  }
  return image.size() == r.roots().size();
}

}  // namespace cyhit
