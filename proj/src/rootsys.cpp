#include "cyhit/rootsys.hpp"

#include "cyhit/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cyhit {

namespace {

RatVector unit(Eigen::Index dim, Eigen::Index i) {
  RatVector v = RatVector::Zero(dim);
  v[i] = 1;
  return v;
}

RatVector from_ints(std::initializer_list<long> xs, long den = 1) {
  RatVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v[i++] = Rational(x, den);
  return v;
}

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

}  // namespace

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("cannot parse Dynkin type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G') throw std::invalid_argument("unknown Dynkin family in '" + std::string(text) + "'");
  int rank = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("cannot parse Dynkin type '" + std::string(text) + "'");
    }
    rank = rank * 10 + (c - '0');
    if (rank > 1000) throw std::invalid_argument("Dynkin rank too large in '" + std::string(text) + "'");
  }
  DynkinType t{static_cast<Family>(letter - 'A'), rank};
  validate(t);
  return t;
}

std::string DynkinType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

bool is_admissible(const DynkinType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B:
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 3;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

void validate(const DynkinType& t) {
  if (!is_admissible(t)) {
    throw std::invalid_argument("inadmissible Dynkin type " + std::string(1, family_letter(t.family)) +
                                std::to_string(t.rank));
  }
}

std::size_t classical_root_count(const DynkinType& t) {
  validate(t);
  const auto n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

std::size_t lie_algebra_dimension(const DynkinType& t) {
  return static_cast<std::size_t>(t.rank) + classical_root_count(t);
}

std::vector<int> degrees(const DynkinType& t) {
  validate(t);
  const int n = t.rank;
  std::vector<int> d;
  switch (t.family) {
    case Family::A:
      for (int k = 2; k <= n + 1; ++k) d.push_back(k);
      break;
    case Family::B:
    case Family::C:
      for (int k = 1; k <= n; ++k) d.push_back(2 * k);
      break;
    case Family::D:
      for (int k = 1; k < n; ++k) d.push_back(2 * k);
      d.push_back(n);
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::G: d = {2, 6}; break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<int> exponents(const DynkinType& t) {
  auto d = degrees(t);
  for (auto& x : d) --x;
  return d;
}

std::vector<RatVector> standard_simple_roots(const DynkinType& t) {
  validate(t);
  const int n = t.rank;
  std::vector<RatVector> s;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) s.push_back(unit(n + 1, i) - unit(n + 1, i + 1));
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) s.push_back(unit(n, i) - unit(n, i + 1));
      s.push_back(unit(n, n - 1));
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) s.push_back(unit(n, i) - unit(n, i + 1));
      s.push_back(Rational(2) * unit(n, n - 1));
      break;
    case Family::D:
      for (int i = 0; i + 1 < n; ++i) s.push_back(unit(n, i) - unit(n, i + 1));
      s.push_back(unit(n, n - 2) + unit(n, n - 1));
      break;
    case Family::E: {
      const std::vector<RatVector> e8 = {
          from_ints({1, -1, -1, -1, -1, -1, -1, 1}, 2),
          from_ints({1, 1, 0, 0, 0, 0, 0, 0}),
          from_ints({-1, 1, 0, 0, 0, 0, 0, 0}),
          from_ints({0, -1, 1, 0, 0, 0, 0, 0}),
          from_ints({0, 0, -1, 1, 0, 0, 0, 0}),
          from_ints({0, 0, 0, -1, 1, 0, 0, 0}),
          from_ints({0, 0, 0, 0, -1, 1, 0, 0}),
          from_ints({0, 0, 0, 0, 0, -1, 1, 0}),
      };
      s.assign(e8.begin(), e8.begin() + n);
      break;
    }
    case Family::F:
      s = {from_ints({0, 1, -1, 0}), from_ints({0, 0, 1, -1}), from_ints({0, 0, 0, 1}),
           from_ints({1, -1, -1, -1}, 2)};
      break;
    case Family::G:
      s = {from_ints({1, -1, 0}), from_ints({-2, 1, 1})};
      break;
  }
  return s;
}

RootSystem RootSystem::build(const DynkinType& t) {
  RootSystem r;
  r.type_ = t;
  r.simple_ = standard_simple_roots(t);
  r.ambient_dim_ = r.simple_.front().size();
  r.form_ = RatMatrix::Identity(r.ambient_dim_, r.ambient_dim_);

  r.simple_matrix_.resize(r.ambient_dim_, t.rank);
  for (int i = 0; i < t.rank; ++i) r.simple_matrix_.col(i) = r.simple_[static_cast<std::size_t>(i)];
  const RatMatrix gram = r.simple_matrix_.transpose() * r.form_ * r.simple_matrix_;
  r.coordinate_solver_ = inverse(gram) * r.simple_matrix_.transpose() * r.form_;

  // Close the simple roots under the simple reflections.
  std::unordered_map<RatVector, std::size_t, VectorHash, VectorEqual> seen;
  std::vector<RatVector> found;
  std::deque<RatVector> queue;
  for (const auto& a : r.simple_) {
    if (seen.emplace(a, found.size()).second) {
      found.push_back(a);
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    const RatVector v = queue.front();
    queue.pop_front();
    for (const auto& a : r.simple_) {
      RatVector w = v - r.pairing(v, a) * a;
      if (seen.emplace(w, found.size()).second) {
        found.push_back(w);
        queue.push_back(std::move(w));
      }
    }
  }

  struct Keyed {
    RatVector root;
    RatVector coords;
    Rational height;
  };
  std::vector<Keyed> positive;
  for (const auto& v : found) {
    RatVector c = r.coordinate_solver_ * v;
    if (c.sum() > 0) positive.push_back({v, c, c.sum()});
  }
  std::sort(positive.begin(), positive.end(), [](const Keyed& a, const Keyed& b) {
    if (a.height != b.height) return a.height < b.height;
    return VectorLess{}(b.coords, a.coords);
  });
  for (const auto& k : positive) r.roots_.push_back(k.root);
  for (const auto& k : positive) r.roots_.push_back(-k.root);
  for (std::size_t i = 0; i < r.roots_.size(); ++i) r.index_.emplace(r.roots_[i], i);
  return r;
}

std::vector<RatVector> RootSystem::positive_roots() const {
  return {roots_.begin(), roots_.begin() + static_cast<std::ptrdiff_t>(roots_.size() / 2)};
}

bool RootSystem::in_root_span(const RatVector& v) const {
  if (v.size() != ambient_dim_) return false;
  return simple_matrix_ * (coordinate_solver_ * v) == v;
}

RatVector RootSystem::simple_coordinates(const RatVector& v) const {
  if (!in_root_span(v)) throw std::invalid_argument("vector " + to_string(v) + " is not in the root span");
  return coordinate_solver_ * v;
}

bool RootSystem::is_dominant(const RatVector& v) const {
  return std::all_of(simple_.begin(), simple_.end(), [&](const RatVector& a) { return inner(v, a) >= 0; });
}

RatMatrix cartan_matrix(const std::vector<RatVector>& simple, const RatMatrix& form) {
  const auto n = static_cast<Eigen::Index>(simple.size());
  RatMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& ai = simple[static_cast<std::size_t>(i)];
      const auto& aj = simple[static_cast<std::size_t>(j)];
      a(i, j) = Rational(2) * ai.dot(form * aj) / aj.dot(form * aj);
    }
  }
  return a;
}

RatMatrix cartan_matrix(const RootSystem& r) { return cartan_matrix(r.simple_roots(), r.bilinear_form()); }

RatMatrix cartan_matrix(const DynkinType& t) {
  const auto s = standard_simple_roots(t);
  return cartan_matrix(s, RatMatrix::Identity(s.front().size(), s.front().size()));
}

std::vector<RatVector> fundamental_weights(const RootSystem& r) {
  const RatMatrix inv = inverse(cartan_matrix(r));
  std::vector<RatVector> w;
  for (int i = 0; i < r.rank(); ++i) {
    RatVector omega = RatVector::Zero(r.ambient_dim());
    for (int k = 0; k < r.rank(); ++k) omega += inv(i, k) * r.simple_roots()[static_cast<std::size_t>(k)];
    w.push_back(std::move(omega));
  }
  return w;
}

std::optional<std::vector<int>> match_cartan(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != a.rows() || b.cols() != b.rows()) return std::nullopt;
  const int n = static_cast<int>(a.rows());

  // Visit nodes of a in breadth-first order so adjacency constraints prune early.
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (placed[static_cast<std::size_t>(start)]) continue;
    std::deque<int> q{start};
    placed[static_cast<std::size_t>(start)] = true;
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      order.push_back(v);
      for (int w = 0; w < n; ++w) {
        if (!placed[static_cast<std::size_t>(w)] && a(v, w) != 0) {
          placed[static_cast<std::size_t>(w)] = true;
          q.push_back(w);
        }
      }
    }
  }

  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == n) return true;
    const int i = order[static_cast<std::size_t>(depth)];
    for (int cand = 0; cand < n; ++cand) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      bool ok = a(i, i) == b(cand, cand);
      for (int d = 0; ok && d < depth; ++d) {
        const int j = order[static_cast<std::size_t>(d)];
        const int pj = perm[static_cast<std::size_t>(j)];
        ok = a(i, j) == b(cand, pj) && a(j, i) == b(pj, cand);
      }
      if (!ok) continue;
      perm[static_cast<std::size_t>(i)] = cand;
      used[static_cast<std::size_t>(cand)] = true;
      if (extend(depth + 1)) return true;
      used[static_cast<std::size_t>(cand)] = false;
    }
    perm[static_cast<std::size_t>(i)] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return perm;
}

bool cartan_equivalent(const RatMatrix& cartan, const DynkinType& t) {
  if (!is_admissible(t) || cartan.rows() != t.rank) return false;
  return match_cartan(cartan, cartan_matrix(t)).has_value();
}

std::vector<std::vector<int>> diagram_components(const RatMatrix& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> nodes;
    std::deque<int> q{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      nodes.push_back(v);
      for (int w = 0; w < n; ++w) {
        if (comp[static_cast<std::size_t>(w)] < 0 && (cartan(v, w) != 0 || cartan(w, v) != 0)) {
          comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
          q.push_back(w);
        }
      }
    }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(std::move(nodes));
  }
  return out;
}

std::vector<DynkinType> classify_cartan(const RatMatrix& cartan) {
  std::vector<DynkinType> types;
  for (const auto& nodes : diagram_components(cartan)) {
    const auto k = static_cast<Eigen::Index>(nodes.size());
    RatMatrix sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = cartan(nodes[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(j)]);
    std::optional<DynkinType> found;
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
      const DynkinType cand{f, static_cast<int>(k)};
      if (cartan_equivalent(sub, cand)) {
        found = cand;
        break;
      }
    }
    if (!found) throw std::domain_error("Cartan matrix component is not of finite type");
    types.push_back(*found);
  }
  return types;
}

}  // namespace cyhit
