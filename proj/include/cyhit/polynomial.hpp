// Dense univariate polynomials over an exact field.
#pragma once

#include "cyhit/rational.hpp"

#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyhit {

/// Coefficients indexed by degree; the zero polynomial has no coefficients and
/// every other polynomial has a nonzero leading coefficient.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
  /// c * z^k
  static Polynomial monomial(const Scalar& c, int k) {
    std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }
  /// (root - z), the linear factor used throughout for eigenvalue products.
  static Polynomial linear_factor(const Scalar& root) { return Polynomial({root, Scalar(-1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(k)]
                                                            : Scalar(0);
  }
  const Scalar& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Scalar operator()(const Scalar& z) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Scalar> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Scalar(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Scalar& s, Polynomial p) {
    for (auto& c : p.coeffs_) c *= s;
    p.trim();
    return p;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(Scalar(1)), base = *this;
    while (e) {
      if (e & 1U) r *= base;
      base *= base;
      e >>= 1U;
    }
    return r;
  }

  /// Euclidean division over a field: *this = q * d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial r = *this;
    if (r.degree() < d.degree()) return {Polynomial{}, r};
    std::vector<Scalar> q(static_cast<std::size_t>(r.degree() - d.degree() + 1), Scalar(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const int shift = r.degree() - d.degree();
      const Scalar c = r.leading() / d.leading();
      q[static_cast<std::size_t>(shift)] = c;
      r -= monomial(c, shift) * d;
    }
    return {Polynomial(std::move(q)), r};
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return (Scalar(1) / leading()) * *this;
  }

  std::string str(const std::string& var = "z") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << '-';
      const Scalar a = c < 0 ? Scalar(-c) : c;
      if (k == 0 || a != 1) os << a;
      if (k > 0) {
        if (a != 1) os << '*';
        os << var;
        if (k > 1) os << '^' << k;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using RatPoly = Polynomial<Rational>;

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Polynomial<Scalar>& p) {
  return os << p.str();
}

/// Monic greatest common divisor (zero if both inputs are zero).
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace cyhit
