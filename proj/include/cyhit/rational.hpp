// Exact rational scalar and the dense Eigen types built on it.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace cyhit {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
/// Expression templates are off so the type behaves like a plain value inside Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

}  // namespace cyhit

namespace Eigen {

template <>
struct NumTraits<cyhit::Rational> : GenericNumTraits<cyhit::Rational> {
  using Real = cyhit::Rational;
  using NonInteger = cyhit::Rational;
  using Literal = cyhit::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  // Exact arithmetic: no rounding tolerance anywhere.
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(0); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace cyhit {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Boost's two-argument constructor mishandles a negative denominator, so the sign
/// is moved to the numerator first.
inline Rational make_rational(long num, long den = 1) { return den < 0 ? Rational(-num, -den) : Rational(num, den); }

inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << ')';
  return os.str();
}

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline bool is_zero(const RatVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

/// Strict lexicographic order on equal-length rational vectors.
struct VectorLess {
  bool operator()(const RatVector& a, const RatVector& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

/// Hash over the reduced numerator/denominator pairs.
struct VectorHash {
  std::size_t operator()(const RatVector& v) const {
    std::size_t h = static_cast<std::size_t>(v.size());
    for (const auto& x : v) {
      const std::size_t n = boost::multiprecision::hash_value(boost::multiprecision::numerator(x));
      const std::size_t d = boost::multiprecision::hash_value(boost::multiprecision::denominator(x));
      h ^= n + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= d + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct VectorEqual {
  bool operator()(const RatVector& a, const RatVector& b) const {
    return a.size() == b.size() && a == b;
  }
};

/// Standard dot product; the ambient bilinear form of every realization here.
inline Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace cyhit
