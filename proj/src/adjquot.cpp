#include "cyhit/adjquot.hpp"

#include "cyhit/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <stdexcept>

namespace cyhit {

namespace {

RatMatrix elementary(int n, int i, int j) {
  RatMatrix e = RatMatrix::Zero(n, n);
  e(i, j) = 1;
  return e;
}

RatVector flatten(const RatMatrix& m) {
  RatVector v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

std::vector<RatMatrix> build_basis(AlgebraKind kind, int n) {
  std::vector<RatMatrix> b;
  switch (kind) {
    case AlgebraKind::SL:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) b.push_back(elementary(n, i, j));
      for (int i = 0; i + 1 < n; ++i) b.push_back(elementary(n, i, i) - elementary(n, i + 1, i + 1));
      break;
    case AlgebraKind::SO:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.push_back(elementary(n, i, j) - elementary(n, j, i));
      break;
    case AlgebraKind::SP: {
      const int m = n / 2;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b.push_back(elementary(n, i, j) - elementary(n, m + j, m + i));
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
          RatMatrix e = elementary(n, i, m + j);
          if (i != j) e += elementary(n, j, m + i);
          b.push_back(e);
        }
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
          RatMatrix e = elementary(n, m + i, j);
          if (i != j) e += elementary(n, m + j, i);
          b.push_back(e);
        }
      break;
    }
  }
  return b;
}

RatMatrix identity(Eigen::Index n) { return RatMatrix::Identity(n, n); }

// p(c) as a polynomial in one variable through deg+1 sample points
RatPoly lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  RatPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPoly term = RatPoly::constant(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term = Rational(1 / (xs[i] - xs[j])) * (term * RatPoly{-xs[j], Rational(1)});
    }
    out = out + term;
  }
  return out;
}

}  // namespace

ClassicalAlgebra make_algebra(AlgebraKind kind, int size) {
  if (kind == AlgebraKind::SL && size < 2) throw std::invalid_argument("sl(n) needs n >= 2");
  if (kind == AlgebraKind::SO && size < 3) throw std::invalid_argument("so(n) needs n >= 3");
  if (kind == AlgebraKind::SP && (size < 2 || size % 2 != 0)) throw std::invalid_argument("sp(n) needs even n >= 2");
  ClassicalAlgebra g;
  g.kind = kind;
  g.size = size;
  g.basis_ = build_basis(kind, size);
  RatMatrix b(static_cast<Eigen::Index>(size) * size, static_cast<Eigen::Index>(g.basis_.size()));
  for (std::size_t k = 0; k < g.basis_.size(); ++k) b.col(static_cast<Eigen::Index>(k)) = flatten(g.basis_[k]);
  const RatMatrix bt = b.transpose();
  g.left_inverse_ = inverse(RatMatrix(bt * b)) * bt;
  return g;
}

ClassicalAlgebra ClassicalAlgebra::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  AlgebraKind kind;
  if (s.rfind("sl", 0) == 0) kind = AlgebraKind::SL;
  else if (s.rfind("so", 0) == 0) kind = AlgebraKind::SO;
  else if (s.rfind("sp", 0) == 0) kind = AlgebraKind::SP;
  else throw std::invalid_argument("unknown algebra '" + std::string(text) + "' (expected slN, soN or spN)");
  const std::string digits = s.substr(2);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("bad algebra size in '" + std::string(text) + "'");
  return make_algebra(kind, std::stoi(digits));
}

std::string ClassicalAlgebra::name() const {
  const char* prefix = kind == AlgebraKind::SL ? "sl" : kind == AlgebraKind::SO ? "so" : "sp";
  return std::string(prefix) + "(" + std::to_string(size) + ")";
}

int ClassicalAlgebra::rank() const {
  switch (kind) {
    case AlgebraKind::SL: return size - 1;
    case AlgebraKind::SO:
    case AlgebraKind::SP: return size / 2;
  }
  return 0;
}

int ClassicalAlgebra::dimension() const { return static_cast<int>(basis_.size()); }

const std::vector<RatMatrix>& ClassicalAlgebra::basis() const { return basis_; }

RatMatrix ClassicalAlgebra::form() const {
  if (kind != AlgebraKind::SP) return identity(size);
  const int m = size / 2;
  RatMatrix j = RatMatrix::Zero(size, size);
  for (int i = 0; i < m; ++i) {
    j(i, m + i) = 1;
    j(m + i, i) = -1;
  }
  return j;
}

bool ClassicalAlgebra::contains(const RatMatrix& m) const {
  if (m.rows() != size || m.cols() != size) return false;
  switch (kind) {
    case AlgebraKind::SL: return m.trace() == 0;
    case AlgebraKind::SO: return m.transpose() == -m;
    case AlgebraKind::SP: {
      const RatMatrix j = form();
      return RatMatrix(m.transpose() * j + j * m).isZero();
    }
  }
  return false;
}

RatVector ClassicalAlgebra::coordinates(const RatMatrix& m) const {
  if (!contains(m)) throw std::invalid_argument("matrix is not in " + name());
  return left_inverse_ * flatten(m);
}

RatMatrix ClassicalAlgebra::from_coordinates(const RatVector& c) const {
  if (c.size() != dimension()) throw std::invalid_argument("coordinate vector has wrong length for " + name());
  RatMatrix m = RatMatrix::Zero(size, size);
  for (int k = 0; k < dimension(); ++k) m += c[k] * basis_[static_cast<std::size_t>(k)];
  return m;
}

ClassicalLieElement::ClassicalLieElement(ClassicalAlgebra algebra, RatMatrix matrix)
    : algebra_(std::move(algebra)), matrix_(std::move(matrix)) {
  if (!algebra_.contains(matrix_)) throw std::invalid_argument("matrix violates the constraint of " + algebra_.name());
}

RatMatrix ad_matrix(const ClassicalLieElement& v) {
  const auto& g = v.algebra();
  RatMatrix ad(g.dimension(), g.dimension());
  for (int k = 0; k < g.dimension(); ++k) {
    ad.col(k) = g.coordinates(bracket(v.matrix(), g.basis()[static_cast<std::size_t>(k)]));
  }
  return ad;
}

Eigen::Index centralizer_dimension(const ClassicalLieElement& v) {
  const RatMatrix ad = ad_matrix(v);
  return ad.cols() - rank(ad);
}

bool is_regular(const ClassicalLieElement& v) { return centralizer_dimension(v) == v.algebra().rank(); }

std::vector<Rational> chi(const ClassicalLieElement& v) {
  const auto& g = v.algebra();
  const RatPoly p = char_poly(v.matrix());
  const int n = g.size;
  std::vector<Rational> out;
  auto require_zero = [&](int power) {
    if (p.coeff(power) != 0) {
      throw std::logic_error("chi: coefficient of z^" + std::to_string(power) + " should vanish in " + g.name());
    }
  };
  switch (g.kind) {
    case AlgebraKind::SL:
      for (int k = n - 2; k >= 0; --k) out.push_back(p.coeff(k));
      break;
    case AlgebraKind::SO:
      if (n % 2 == 1) {
        for (int k = n - 2; k >= 0; k -= 2) {
          out.push_back(p.coeff(k));
          require_zero(k - 1);
        }
      } else {
        for (int k = n - 1; k >= 1; k -= 2) require_zero(k);
        for (int k = n - 2; k >= 2; k -= 2) out.push_back(p.coeff(k));
        out.push_back(pfaffian(v.matrix()));
      }
      break;
    case AlgebraKind::SP:
      for (int k = n - 1; k >= 1; k -= 2) require_zero(k);
      for (int k = n - 2; k >= 0; k -= 2) out.push_back(p.coeff(k));
      break;
  }
  return out;
}

RatMatrix random_group_element(const ClassicalAlgebra& g, Rng& rng) {
  if (g.kind == AlgebraKind::SL) return random_invertible(rng, g.size);
  const RatMatrix id = identity(g.size);
  for (;;) {
    RatVector c(g.dimension());
    for (int k = 0; k < g.dimension(); ++k) c[k] = random_rational(rng, 2, 3);
    const RatMatrix x = g.from_coordinates(c);
    const RatMatrix minus = id - x;
    if (determinant(minus) == 0) continue;
    return RatMatrix((id + x) * inverse(minus));
  }
}

bool Sl2Triple::brackets_hold() const {
  const RatMatrix& xm = x.matrix();
  const RatMatrix& ym = y.matrix();
  const RatMatrix& hm = h.matrix();
  return bracket(hm, xm) == Rational(2) * xm && bracket(hm, ym) == Rational(-2) * ym && bracket(xm, ym) == hm;
}

namespace {

// principal triple of sl(k) placed in the top-left corner of an n x n matrix
Sl2Triple principal_block(int n, int k) {
  const ClassicalAlgebra g = make_algebra(AlgebraKind::SL, n);
  RatMatrix x = RatMatrix::Zero(n, n), y = RatMatrix::Zero(n, n), h = RatMatrix::Zero(n, n);
  for (int i = 0; i + 1 < k; ++i) {
    x(i, i + 1) = 1;
    y(i + 1, i) = (i + 1) * (k - i - 1);
  }
  for (int i = 0; i < k; ++i) h(i, i) = k - 1 - 2 * i;
  Sl2Triple t{ClassicalLieElement(g, x), ClassicalLieElement(g, y), ClassicalLieElement(g, h)};
  if (!t.brackets_hold()) throw std::logic_error("principal triple fails the bracket relations");
  return t;
}

}  // namespace

Sl2Triple sl2_triple_regular(int n) {
  if (n < 2) throw std::invalid_argument("sl2_triple_regular: need n >= 2");
  return principal_block(n, n);
}

Sl2Triple sl2_triple_subregular(int n) {
  if (n < 3) throw std::invalid_argument("sl2_triple_subregular: need n >= 3, got " + std::to_string(n));
  return principal_block(n, n - 1);
}

ClassicalLieElement kostant_section(int n, const std::vector<Rational>& b) {
  if (n < 2) throw std::invalid_argument("kostant_section: need n >= 2");
  if (static_cast<int>(b.size()) != n - 1) {
    throw std::invalid_argument("kostant_section: expected " + std::to_string(n - 1) + " coordinates, got " +
                                std::to_string(b.size()));
  }
  const Sl2Triple tr = sl2_triple_regular(n);
  const ClassicalAlgebra& g = tr.x.algebra();
  std::vector<RatMatrix> ypow(static_cast<std::size_t>(n));  // ypow[k] = y^k
  ypow[0] = identity(n);
  for (int k = 1; k < n; ++k) ypow[static_cast<std::size_t>(k)] = ypow[static_cast<std::size_t>(k) - 1] * tr.y.matrix();

  std::vector<Rational> a(static_cast<std::size_t>(n), Rational(0));
  auto point = [&] {
    RatMatrix m = tr.x.matrix();
    for (int k = 1; k < n; ++k) m += a[static_cast<std::size_t>(k)] * ypow[static_cast<std::size_t>(k)];
    return m;
  };
  // b[d-2] is the coefficient of z^{n-d}; it depends on a_1..a_{d-1} only, affinely on a_{d-1}
  for (int d = 2; d <= n; ++d) {
    auto& ad = a[static_cast<std::size_t>(d) - 1];
    ad = 0;
    const Rational c0 = char_poly(point()).coeff(n - d);
    ad = 1;
    const Rational slope = char_poly(point()).coeff(n - d) - c0;
    if (slope == 0) throw std::logic_error("kostant_section: degenerate slope at degree " + std::to_string(d));
    ad = (b[static_cast<std::size_t>(d) - 2] - c0) / slope;
  }
  ClassicalLieElement v(g, point());
  if (chi(v) != b) throw std::logic_error("kostant_section: round trip failed");
  return v;
}

ClassicalLieElement SlodowySlice::point(const std::vector<Rational>& coords) const {
  if (coords.size() != directions.size()) throw std::invalid_argument("slice point: wrong number of coordinates");
  RatMatrix m = base.matrix();
  for (std::size_t k = 0; k < coords.size(); ++k) m += coords[k] * directions[k].matrix();
  return ClassicalLieElement(base.algebra(), m);
}

SlodowySlice slodowy_slice(const Sl2Triple& tr) {
  if (!tr.brackets_hold()) throw std::invalid_argument("slodowy_slice: not an sl2-triple");
  const ClassicalAlgebra& g = tr.x.algebra();
  const auto kernel = kernel_basis(ad_matrix(tr.y));
  const auto k = static_cast<Eigen::Index>(kernel.size());

  // ad(h) restricted to ker ad(y), in the kernel basis
  RatMatrix kb(g.dimension(), k);
  for (Eigen::Index j = 0; j < k; ++j) kb.col(j) = kernel[static_cast<std::size_t>(j)];
  const RatMatrix adh = ad_matrix(tr.h);
  RatMatrix restricted(k, k);
  for (Eigen::Index j = 0; j < k; ++j) restricted.col(j) = solve(kb, RatVector(adh * kb.col(j)));

  SlodowySlice s{tr.x, {}, {}};
  const int bound = 2 * g.size;
  for (int w = bound; w >= -bound; --w) {
    const RatMatrix shifted = restricted - Rational(w) * identity(k);
    for (const auto& e : kernel_basis(shifted)) {
      s.directions.emplace_back(g, g.from_coordinates(RatVector(kb * e)));
      s.weights.push_back(w);
    }
  }
  if (static_cast<Eigen::Index>(s.directions.size()) != k) {
    throw std::logic_error("slodowy_slice: ad(h) is not diagonalizable with integer eigenvalues on ker ad(y)");
  }
  for (const auto& d : s.directions) {
    if (!bracket(d.matrix(), tr.y.matrix()).isZero()) throw std::logic_error("slodowy_slice: direction does not commute with y");
  }
  return s;
}

std::vector<int> slice_weights(const Sl2Triple& triple) {
  std::vector<int> w = slodowy_slice(triple).weights;
  for (int x : w)
    if (x > 0) throw std::logic_error("slice_weights: positive weight on ker ad(y)");
  return w;
}

RatMatrix slice_jacobian(const SlodowySlice& slice, const std::vector<Rational>& coords) {
  const int n = slice.base.algebra().size;
  const auto vars = static_cast<Eigen::Index>(coords.size());
  const auto eqs = static_cast<Eigen::Index>(chi(slice.point(coords)).size());
  RatMatrix jac(eqs, vars);
  // each invariant has degree <= n in each coordinate: interpolate through n+1 shifts
  for (Eigen::Index k = 0; k < vars; ++k) {
    std::vector<Rational> xs;
    std::vector<std::vector<Rational>> values;
    for (int s = 0; s <= n; ++s) {
      auto c = coords;
      c[static_cast<std::size_t>(k)] += s;
      xs.push_back(c[static_cast<std::size_t>(k)]);
      values.push_back(chi(slice.point(c)));
    }
    for (Eigen::Index e = 0; e < eqs; ++e) {
      std::vector<Rational> ys;
      for (const auto& v : values) ys.push_back(v[static_cast<std::size_t>(e)]);
      jac(e, k) = lagrange(xs, ys).derivative()(coords[static_cast<std::size_t>(k)]);
    }
  }
  return jac;
}

bool FiberSingularityVerdict::singular_exactly_at_origin() const {
  if (!chi_vanishes_at_origin || !samples_on_fiber || samples.empty()) return false;
  const auto full = static_cast<Eigen::Index>(2);
  return jacobian_rank_at_origin < full &&
         std::all_of(jacobian_ranks_at_samples.begin(), jacobian_ranks_at_samples.end(),
                     [&](Eigen::Index r) { return r == full; });
}

namespace {

// values of f at c_i = 0, 1, 2, 3; returns (f(0), slope) if f is affine with nonzero slope
std::optional<std::pair<Rational, Rational>> affine_in(const std::function<Rational(const Rational&)>& f) {
  const Rational f0 = f(0), f1 = f(1), f2 = f(2), f3 = f(3);
  const Rational slope = f1 - f0;
  if (slope == 0 || f2 - f1 != slope || f3 - f2 != slope) return std::nullopt;
  return std::make_pair(f0, slope);
}

}  // namespace

FiberSingularityVerdict subregular_fiber_singularity(int n, int samples, std::uint64_t seed) {
  if (n != 3) throw std::invalid_argument("subregular_fiber_singularity: only n = 3 is supported");
  const SlodowySlice slice = slodowy_slice(sl2_triple_subregular(n));
  const std::size_t dim = slice.directions.size();
  const std::vector<Rational> origin(dim, Rational(0));

  FiberSingularityVerdict v;
  const auto chi0 = chi(slice.point(origin));
  v.chi_vanishes_at_origin = std::all_of(chi0.begin(), chi0.end(), [](const Rational& c) { return c == 0; });
  v.jacobian_rank_at_origin = rank(slice_jacobian(slice, origin));

  // Fiber points: fix all coordinates but (i, j) at random, solve the degree-2
  // equation for c_i (affine in c_i, free of c_j), then the degree-3 one for c_j.
  Rng rng(seed);
  auto eq = [&](std::vector<Rational> c, std::size_t e) { return chi(slice.point(c))[e]; };
  v.samples_on_fiber = true;
  int attempts = 0;
  while (static_cast<int>(v.samples.size()) < samples) {
    if (++attempts > 100 * samples) throw std::runtime_error("subregular_fiber_singularity: sampler found no fiber points");
    std::vector<Rational> c(dim);
    for (auto& x : c) x = random_nonzero_rational(rng);
    bool found = false;
    for (std::size_t i = 0; i < dim && !found; ++i) {
      for (std::size_t j = 0; j < dim && !found; ++j) {
        if (i == j) continue;
        auto trial = c;
        const auto a0 = affine_in([&](const Rational& t) { auto d = trial; d[i] = t; return eq(d, 0); });
        if (!a0) continue;
        {
          auto shifted = trial;
          shifted[j] += 1;
          if (eq(shifted, 0) != eq(trial, 0)) continue;
        }
        trial[i] = -a0->first / a0->second;
        const auto a1 = affine_in([&](const Rational& t) { auto d = trial; d[j] = t; return eq(d, 1); });
        if (!a1) continue;
        trial[j] = -a1->first / a1->second;
        if (trial == origin) continue;
        const auto value = chi(slice.point(trial));
        if (value[0] != 0 || value[1] != 0) {
          v.samples_on_fiber = false;
          continue;
        }
        v.samples.push_back(trial);
        v.jacobian_ranks_at_samples.push_back(rank(slice_jacobian(slice, trial)));
        found = true;
      }
    }
  }
  return v;
}

}  // namespace cyhit
