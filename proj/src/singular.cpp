#include "cyhit/singular.hpp"

#include "cyhit/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyhit {

MPoly MPoly::constant(int nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int k) {
  if (k < 0 || k >= nvars) throw std::out_of_range("MPoly::variable: index out of range");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(k)] = 1;
  return monomial(1, std::move(e));
}

MPoly MPoly::monomial(const Rational& c, Exponents e) {
  MPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int MPoly::order() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (d < 0 || s < d) d = s;
  }
  return d;
}

Rational MPoly::operator()(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("MPoly: point has wrong dimension");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int i = 0; i < e[k]; ++i) t *= point[k];
    acc += t;
  }
  return acc;
}

MPoly MPoly::partial(int k) const {
  MPoly d(nvars_);
  for (const auto& [e, c] : terms_) {
    const int p = e[static_cast<std::size_t>(k)];
    if (p == 0) continue;
    Exponents f = e;
    --f[static_cast<std::size_t>(k)];
    d.add_term(f, c * p);
  }
  return d;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(nvars_, 1), base = *this;
  while (e) {
    if (e & 1U) r = r * base;
    base = base * base;
    e >>= 1U;
  }
  return r;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("MPoly::substitute: need one image per variable");
  const int target = images.empty() ? 0 : images.front().nvars();
  MPoly out(target);
  for (const auto& [e, c] : terms_) {
    MPoly t = constant(target, c);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] > 0) t = t * images[k].pow(static_cast<unsigned>(e[k]));
    out += t;
  }
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator-(MPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MPoly: variable count mismatch");
  MPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponents e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly operator*(const Rational& c, MPoly a) {
  if (c == 0) return MPoly(a.nvars_);
  for (auto& [e, x] : a.terms_) x *= c;
  return a;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) < nvars_) throw std::invalid_argument("MPoly::str: not enough variable names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    const Rational a = c < 0 ? Rational(-c) : c;
    bool need_star = false;
    if (constant_term || a != 1) {
      os << a;
      need_star = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (need_star) os << '*';
      os << names[k];
      if (e[k] > 1) os << '^' << e[k];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

const std::vector<std::string>& surface_variables() {
  static const std::vector<std::string> names{"u", "v", "w"};
  return names;
}

namespace {

MPoly uvw(int au, int av, int aw, long c = 1) { return MPoly::monomial(Rational(c), {au, av, aw}); }

}  // namespace

MPoly ade_equation(const DynkinType& t) {
  validate(t);
  switch (t.family) {
    case Family::A: return uvw(t.rank + 1, 0, 0) - uvw(0, 1, 1);
    case Family::D: return uvw(t.rank - 1, 0, 0) + uvw(1, 2, 0) + uvw(0, 0, 2);
    case Family::E:
      if (t.rank == 6) return uvw(4, 0, 0) + uvw(0, 3, 0) + uvw(0, 0, 2);
      if (t.rank == 7) return uvw(3, 1, 0) + uvw(0, 3, 0) + uvw(0, 0, 2);
      return uvw(5, 0, 0) + uvw(0, 3, 0) + uvw(0, 0, 2);
    default: throw std::invalid_argument("ade_equation: " + t.name() + " is not of type A, D or E");
  }
}

MPoly DeformationFamily::fiber(const std::vector<Rational>& params) const {
  if (static_cast<int>(params.size()) != parameter_count()) throw std::invalid_argument("fiber: wrong number of parameters");
  std::vector<MPoly> images;
  for (int k = 0; k < 3; ++k) images.push_back(MPoly::variable(3, k));
  for (const auto& a : params) images.push_back(MPoly::constant(3, a));
  return total.substitute(images);
}

bool DeformationFamily::symmetry_invariant() const {
  const int n = total.nvars();
  std::vector<MPoly> images;
  for (const auto& s : symmetry) {
    // lift an image in (u, v, w) to the full variable set
    std::vector<MPoly> lift;
    for (int k = 0; k < 3; ++k) lift.push_back(MPoly::variable(n, k));
    images.push_back(s.substitute(lift));
  }
  for (int k = 3; k < n; ++k) images.push_back(MPoly::variable(n, k));
  return total.substitute(images) == total;
}

DeformationFamily b2_family() {
  auto var = [](int k) { return MPoly::variable(5, k); };
  DeformationFamily f;
  f.total = var(0).pow(4) + var(3) * var(0).pow(2) + var(4) - var(1) * var(2);
  f.parameters = {"a1", "a2"};
  f.symmetry = {-MPoly::variable(3, 0), MPoly::variable(3, 2), MPoly::variable(3, 1)};
  return f;
}

MPoly b2_family(const Rational& a1, const Rational& a2) { return b2_family().fiber({a1, a2}); }

RatPoly b2_quartic(const Rational& a1, const Rational& a2) { return RatPoly{a2, Rational(0), a1, Rational(0), Rational(1)}; }

Rational family_discriminant(const Rational& a1, const Rational& a2) {
  const RatPoly p = b2_quartic(a1, a2);
  return resultant(p, p.derivative());
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  const Integer sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

std::optional<Rational> rational_root(const RatPoly& g) {
  if (g.degree() == 1) return -g.coeff(0) / g.coeff(1);
  if (g.degree() == 2) {
    const Rational a = g.coeff(2), b = g.coeff(1), c = g.coeff(0);
    if (auto s = rational_sqrt(b * b - 4 * a * c)) return (-b + *s) / (2 * a);
  }
  return std::nullopt;
}

}  // namespace

FiberFlag fiber_flag(const Rational& a1, const Rational& a2) {
  FiberFlag f;
  f.a1 = a1;
  f.a2 = a2;
  f.discriminant = family_discriminant(a1, a2);
  f.smooth = f.discriminant != 0;
  const RatPoly p = b2_quartic(a1, a2);
  f.common_factor = gcd(p, p.derivative());
  if ((f.common_factor.degree() > 0) == f.smooth) throw std::logic_error("fiber_flag: resultant and gcd disagree");
  if (!f.smooth) {
    // squarefree part: at most two distinct multiple roots for a quartic
    const RatPoly g = f.common_factor.divmod(gcd(f.common_factor, f.common_factor.derivative())).first;
    if (auto r = rational_root(g)) f.singular_point = std::array<Rational, 3>{*r, Rational(0), Rational(0)};
  }
  return f;
}

std::vector<FiberFlag> fiber_profile(const std::vector<std::pair<Rational, Rational>>& samples) {
  std::vector<FiberFlag> out;
  out.reserve(samples.size());
  for (const auto& [a1, a2] : samples) out.push_back(fiber_flag(a1, a2));
  return out;
}

IsolationVerdict isolated_singularity_sampled(const MPoly& f) {
  if (f.nvars() != 3) throw std::invalid_argument("isolated_singularity_sampled: need a polynomial in (u, v, w)");
  const std::array<MPoly, 3> grad{f.partial(0), f.partial(1), f.partial(2)};
  auto singular_at = [&](const std::vector<Rational>& p) {
    return f(p) == 0 && grad[0](p) == 0 && grad[1](p) == 0 && grad[2](p) == 0;
  };
  IsolationVerdict v;
  v.singular_at_origin = singular_at({0, 0, 0});
  const std::vector<Rational> base{Rational(-1, 4), Rational(-1, 8), Rational(0), Rational(1, 8), Rational(1, 4)};
  for (const Rational& scale : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
    for (const auto& x : base)
      for (const auto& y : base)
        for (const auto& z : base) {
          if (x == 0 && y == 0 && z == 0) continue;
          const std::vector<Rational> p{scale * x, scale * y, scale * z};
          ++v.points_checked;
          if (singular_at(p)) v.other_singular_points.push_back({p[0], p[1], p[2]});
        }
  }
  return v;
}

}  // namespace cyhit
