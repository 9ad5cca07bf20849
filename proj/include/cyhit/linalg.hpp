// Exact dense linear algebra over a field: elimination, kernels, determinants,
// characteristic polynomials, Pfaffians and resultants.
//
// Everything here is written against Eigen::MatrixBase so it accepts any dense
// expression; the scalar only needs exact field arithmetic (Rational in practice).
#pragma once

#include "cyhit/polynomial.hpp"
#include "cyhit/rational.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <utility>
#include <vector>

namespace cyhit {

namespace detail {

template <typename Scalar>
struct EchelonForm {
  Matrix<Scalar> reduced;               // reduced row echelon form
  std::vector<Eigen::Index> pivot_cols;  // one per nonzero row
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
template <typename Derived>
EchelonForm<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  EchelonForm<Scalar> out{m.eval(), {}};
  auto& a = out.reduced;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == Scalar(0)) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant. Each division is exact.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  Scalar sign(1), prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      a.row(p).swap(a.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Rank by fraction-free elimination.
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Scalar prev(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    a.row(p).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = Scalar(0);
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

/// Basis of the right kernel, one vector per free column of the echelon form.
template <typename Derived>
std::vector<Vector<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = detail::reduced_row_echelon(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vector<Scalar>> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Zero(cols);
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      v[ech.pivot_cols[r]] = -ech.reduced(static_cast<Eigen::Index>(r), f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const Eigen::Index n = m.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug << m, Matrix<Scalar>::Identity(n, n);
  const auto ech = detail::reduced_row_echelon(aug);
  if (static_cast<Eigen::Index>(ech.pivot_cols.size()) < n || ech.pivot_cols[static_cast<std::size_t>(n - 1)] >= n) {
    throw std::domain_error("inverse: matrix is singular");
  }
  return ech.reduced.rightCols(n);
}

/// Exact solution of A x = b. Throws if the system is inconsistent; free
/// variables are set to zero.
template <typename DA, typename DB>
Vector<typename DA::Scalar> solve(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto ech = detail::reduced_row_echelon(aug);
  Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    const Eigen::Index c = ech.pivot_cols[r];
    if (c == a.cols()) throw std::domain_error("solve: inconsistent linear system");
    x[c] = ech.reduced(static_cast<Eigen::Index>(r), a.cols());
  }
  return x;
}

/// det(M - z*id) as a polynomial in z, via the Faddeev-LeVerrier recurrence
/// (only exact divisions by small integers).
template <typename Derived>
Polynomial<typename Derived::Scalar> char_poly(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix is not square");
  const Eigen::Index n = m.rows();
  const Matrix<Scalar> a = m;
  // c[k] is the coefficient of z^k in det(z*id - M).
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Matrix<Scalar> mk = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = a * mk;
    for (Eigen::Index i = 0; i < n; ++i) mk(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const Matrix<Scalar> amk = a * mk;
    Scalar tr(0);
    for (Eigen::Index i = 0; i < n; ++i) tr += amk(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / Scalar(static_cast<long>(k));
  }
  if (n % 2 == 1) {
    for (auto& x : c) x = -x;
  }
  return Polynomial<Scalar>(std::move(c));
}

namespace detail {

template <typename Scalar>
Scalar pfaffian_rec(const Matrix<Scalar>& a, std::vector<Eigen::Index>& idx) {
  if (idx.empty()) return Scalar(1);
  const Eigen::Index first = idx.front();
  Scalar total(0);
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const Scalar& entry = a(first, idx[j]);
    if (entry == Scalar(0)) continue;
    std::vector<Eigen::Index> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (k != j) rest.push_back(idx[k]);
    }
    const Scalar sub = pfaffian_rec(a, rest);
    // column j of the remaining list carries sign (-1)^(j+1)
    if (j % 2 == 1) total += entry * sub;
    else total -= entry * sub;
  }
  return total;
}

}  // namespace detail

/// Pfaffian by recursive expansion along the first row. Intended for the small
/// sizes (<= 8) met in practice.
template <typename Derived>
typename Derived::Scalar pfaffian(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian: matrix is not square");
  if (m.rows() % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
  const Matrix<Scalar> a = m;
  if (a != Matrix<Scalar>(-a.transpose())) throw std::invalid_argument("pfaffian: matrix is not antisymmetric");
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) idx[static_cast<std::size_t>(i)] = i;
  return detail::pfaffian_rec(a, idx);
}

/// Sylvester matrix of p (degree m) and q (degree n): n shifted rows of p
/// followed by m shifted rows of q, leading coefficients first.
template <typename Scalar>
Matrix<Scalar> sylvester_matrix(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("sylvester_matrix: zero polynomial");
  const int m = p.degree(), n = q.degree();
  const int size = m + n;
  Matrix<Scalar> s = Matrix<Scalar>::Zero(size, size);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = p.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = q.coeff(n - k);
  return s;
}

/// Resultant as the Sylvester determinant; res(p, q) = lc(p)^n lc(q)^m prod(a_i - b_j).
template <typename Scalar>
Scalar resultant(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
  if (p.degree() == 0 && q.degree() == 0) return Scalar(1);
  return determinant(sylvester_matrix(p, q));
}

}  // namespace cyhit
