#include "cyhit/folding.hpp"

#include "cyhit/linalg.hpp"
#include "cyhit/weyl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

namespace cyhit {

namespace {

int permutation_order(const std::vector<int>& p) {
  std::vector<int> cur(p.size());
  std::iota(cur.begin(), cur.end(), 0);
  for (int k = 1;; ++k) {
    for (auto& x : cur) x = p[static_cast<std::size_t>(x)];
    bool id = true;
    for (std::size_t i = 0; i < cur.size(); ++i) id = id && cur[i] == static_cast<int>(i);
    if (id) return k;
  }
}

DiagramAutomorphism make_automorphism(std::vector<int> p) {
  const int ord = permutation_order(p);
  return {std::move(p), ord};
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  // (a o b)(i) = a(b(i))
  std::vector<int> c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

std::vector<DiagramAutomorphism> closure(const std::vector<std::vector<int>>& gens, std::size_t n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> out{id};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      auto c = compose(g, out[head]);
      if (seen.insert(c).second) out.push_back(std::move(c));
    }
  }
  std::vector<DiagramAutomorphism> group;
  for (auto& p : out) group.push_back(make_automorphism(std::move(p)));
  return group;
}

void check_dynkin(const RatMatrix& cartan, const DiagramAutomorphism& tau) {
  for (int i = 0; i < static_cast<int>(tau.node_permutation.size()); ++i) {
    const int j = tau.node_permutation[static_cast<std::size_t>(i)];
    if (j != i && cartan(i, j) != 0) throw NotDynkinError(i, j);
  }
}

std::vector<RatVector> tau_orbit(const RatMatrix& action, const RatVector& alpha) {
  std::vector<RatVector> orb{alpha};
  RatVector next = action * alpha;
  while (next != alpha) {
    orb.push_back(next);
    next = action * next;
  }
  return orb;
}

RatVector orbit_sum(const RatMatrix& action, const RatVector& alpha) {
  RatVector s = RatVector::Zero(alpha.size());
  for (const auto& v : tau_orbit(action, alpha)) s += v;
  return s;
}

std::vector<RatVector> folded_root_set(const RootSystem& r, const RatMatrix& action) {
  std::unordered_set<RatVector, VectorHash, VectorEqual> seen;
  std::vector<RatVector> out;
  for (const auto& a : r.roots()) {
    RatVector s = orbit_sum(action, a);
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

void validate_group(const DynkinType& t, const RatMatrix& cartan, const std::vector<DiagramAutomorphism>& group) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::set<std::vector<int>> elements;
  for (const auto& g : group) {
    if (g.node_permutation.size() != n) throw std::invalid_argument("fold: automorphism has wrong size");
    // must preserve the Cartan matrix
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (cartan(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) !=
            cartan(g.node_permutation[i], g.node_permutation[j])) {
          throw std::invalid_argument("fold: permutation is not a diagram automorphism");
        }
    check_dynkin(cartan, g);
    elements.insert(g.node_permutation);
  }
  for (const auto& a : group)
    for (const auto& b : group)
      if (!elements.count(compose(a.node_permutation, b.node_permutation))) {
        throw std::invalid_argument("fold: automorphisms do not form a group");
      }
}

}  // namespace

NotDynkinError::NotDynkinError(int node, int image)
    : std::invalid_argument("not a Dynkin automorphism: node " + std::to_string(node + 1) +
                            " is adjacent to its image " + std::to_string(image + 1)),
      pair_(node, image) {}

std::vector<DiagramAutomorphism> graph_automorphisms(const DynkinType& t) {
  const RatMatrix a = cartan_matrix(t);
  const int n = t.rank;
  std::vector<DiagramAutomorphism> out;
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(int)> extend = [&](int i) {
    if (i == n) {
      out.push_back(make_automorphism(perm));
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      bool ok = true;
      for (int j = 0; ok && j < i; ++j) {
        const int pj = perm[static_cast<std::size_t>(j)];
        ok = a(i, j) == a(c, pj) && a(j, i) == a(pj, c);
      }
      if (!ok) continue;
      perm[static_cast<std::size_t>(i)] = c;
      used[static_cast<std::size_t>(c)] = true;
      extend(i + 1);
      used[static_cast<std::size_t>(c)] = false;
    }
  };
  extend(0);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.order != y.order) return x.order < y.order;
    return x.node_permutation < y.node_permutation;
  });
  return out;
}

std::vector<DiagramAutomorphism> dynkin_automorphisms(const DynkinType& t) {
  const RatMatrix a = cartan_matrix(t);
  std::vector<DiagramAutomorphism> out;
  for (auto& g : graph_automorphisms(t)) {
    try {
      check_dynkin(a, g);
      out.push_back(std::move(g));
    } catch (const NotDynkinError&) {
    }
  }
  return out;
}

std::vector<DiagramAutomorphism> named_subgroup(const DynkinType& t, std::string_view name) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  if (name == "1") return {make_automorphism(id)};

  const auto all = dynkin_automorphisms(t);
  auto pick = [&](int ord) -> std::vector<int> {
    if (t.family == Family::D && ord == 2) {
      std::vector<int> swap = id;
      std::swap(swap[n - 2], swap[n - 1]);
      for (const auto& g : all)
        if (g.node_permutation == swap) return swap;
    }
    for (const auto& g : all)
      if (g.order == ord) return g.node_permutation;
    throw std::invalid_argument("no Dynkin automorphism of order " + std::to_string(ord) + " on " + t.name());
  };

  if (name == "Z2") return closure({pick(2)}, n);
  if (name == "Z3") return closure({pick(3)}, n);
  if (name == "S3") {
    auto group = closure({pick(2), pick(3)}, n);
    if (group.size() != 6) throw std::invalid_argument("no S3 of Dynkin automorphisms on " + t.name());
    return group;
  }
  throw std::invalid_argument("unknown automorphism group '" + std::string(name) + "' (expected 1, Z2, Z3 or S3)");
}

RatMatrix ambient_action(const RootSystem& r, const DiagramAutomorphism& tau) {
  const auto n = r.ambient_dim();
  const int k = r.rank();
  RatMatrix s(n, k), s_image(n, k);
  for (int i = 0; i < k; ++i) {
    s.col(i) = r.simple_roots()[static_cast<std::size_t>(i)];
    s_image.col(i) = r.simple_roots()[static_cast<std::size_t>(tau.node_permutation[static_cast<std::size_t>(i)])];
  }
  const RatMatrix coords = inverse(RatMatrix(s.transpose() * s)) * s.transpose();
  return s_image * coords + (RatMatrix::Identity(n, n) - s * coords);
}

FoldingResult fold(const DynkinType& t, const std::vector<DiagramAutomorphism>& group) {
  if (!t.simply_laced()) throw std::invalid_argument("fold: " + t.name() + " is not simply laced");
  const RootSystem r = RootSystem::build(t);
  const RatMatrix cartan = cartan_matrix(r);
  std::vector<DiagramAutomorphism> g = group;
  if (g.empty()) g = named_subgroup(t, "1");
  validate_group(t, cartan, g);

  int max_order = 1;
  for (const auto& x : g) max_order = std::max(max_order, x.order);
  std::vector<const DiagramAutomorphism*> maximal;
  for (const auto& x : g)
    if (x.order == max_order) maximal.push_back(&x);

  const DiagramAutomorphism& tau = *maximal.front();
  const RatMatrix action = ambient_action(r, tau);

  FoldingResult res;
  res.source = t;
  res.group_order = g.size();
  res.folded_roots = folded_root_set(r, action);

  const std::set<RatVector, VectorLess> reference(res.folded_roots.begin(), res.folded_roots.end());
  for (std::size_t m = 1; m < maximal.size(); ++m) {
    const auto other = folded_root_set(r, ambient_action(r, *maximal[m]));
    if (std::set<RatVector, VectorLess>(other.begin(), other.end()) != reference) {
      throw std::logic_error("fold: folded root set depends on the choice of maximal-order element");
    }
  }

  std::vector<bool> done(static_cast<std::size_t>(t.rank), false);
  for (int i = 0; i < t.rank; ++i) {
    if (done[static_cast<std::size_t>(i)]) continue;
    RatVector beta = RatVector::Zero(r.ambient_dim());
    int j = i;
    do {
      done[static_cast<std::size_t>(j)] = true;
      beta += r.simple_roots()[static_cast<std::size_t>(j)];
      j = tau.node_permutation[static_cast<std::size_t>(j)];
    } while (j != i);
    res.folded_simple.push_back(std::move(beta));
  }
  res.folded_cartan = cartan_matrix(res.folded_simple, r.bilinear_form());
  const auto types = classify_cartan(res.folded_cartan);
  if (types.size() != 1) throw std::logic_error("fold: folded diagram is not connected");
  res.folded_type = types.front();
  return res;
}

bool verify_reflection_formula(const DynkinType& t, const std::vector<DiagramAutomorphism>& group,
                               const RatVector& alpha) {
  const RootSystem r = RootSystem::build(t);
  if (!r.is_root(alpha)) throw std::invalid_argument("verify_reflection_formula: not a root");
  const FoldingResult folded = fold(t, group);

  const DiagramAutomorphism* tau = &group.front();
  for (const auto& x : group)
    if (x.order > tau->order) tau = &x;
  const RatMatrix action = ambient_action(r, *tau);

  const auto orb = tau_orbit(action, alpha);
  const auto n = r.ambient_dim();
  RatMatrix product = RatMatrix::Identity(n, n);
  RatVector alpha_o = RatVector::Zero(n);
  for (const auto& a : orb) {
    product = product * reflection_matrix(r, a);
    alpha_o += a;
  }
  const Rational norm = r.inner(alpha_o, alpha_o);
  for (const auto& b : folded.folded_simple) {
    const RatVector lhs = product * b;
    const RatVector rhs = b - (Rational(2) * r.inner(b, alpha_o) / norm) * alpha_o;
    if (lhs != rhs) return false;
  }
  return true;
}

McKayDatum mckay_datum(const DynkinType& t) {
  validate(t);
  const int n = t.rank;
  McKayDatum d;
  d.delta = t;
  auto simply_laced = [](const DynkinType& h, McKayDatum& out) {
    switch (h.family) {
      case Family::A:
        out.gamma_order = static_cast<std::uint64_t>(h.rank + 1);
        out.gamma_name = "cyclic";
        break;
      case Family::D:
        out.gamma_order = static_cast<std::uint64_t>(4 * (h.rank - 2));
        out.gamma_name = "binary dihedral";
        break;
      case Family::E:
        out.gamma_order = h.rank == 6 ? 24 : h.rank == 7 ? 48 : 120;
        out.gamma_name = h.rank == 6 ? "binary tetrahedral" : h.rank == 7 ? "binary octahedral" : "binary icosahedral";
        break;
      default: break;
    }
  };
  switch (t.family) {
    case Family::A:
    case Family::D:
    case Family::E:
      d.delta_h = t;
      d.symmetry_order = 1;
      break;
    case Family::B:
      d.delta_h = {Family::A, 2 * n - 1};
      d.symmetry_order = 2;
      break;
    case Family::C:
      // C2 = B2 comes from A3; otherwise C_k from D_{k+1}
      d.delta_h = n == 2 ? DynkinType{Family::A, 3} : DynkinType{Family::D, n + 1};
      d.symmetry_order = 2;
      break;
    case Family::F:
      d.delta_h = {Family::E, 6};
      d.symmetry_order = 2;
      break;
    case Family::G:
      d.delta_h = {Family::D, 4};
      d.symmetry_order = 6;
      break;
  }
  simply_laced(d.delta_h, d);
  d.gamma_prime_order = d.gamma_order * d.symmetry_order;
  return d;
}

bool McKayGraph::is_cycle() const {
  if (nodes < 2 || adjacency.rows() != nodes || adjacency.cols() != nodes) return false;
  if (adjacency != adjacency.transpose()) return false;
  for (int i = 0; i < nodes; ++i) {
    if (adjacency(i, i) != 0 || adjacency.row(i).sum() != 2) return false;
  }
  std::vector<bool> seen(static_cast<std::size_t>(nodes), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w = 0; w < nodes; ++w) {
      if (adjacency(v, w) > 0 && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return count == nodes;
}

McKayGraph cyclic_mckay_graph(int n) {
  if (n < 2) throw std::invalid_argument("cyclic_mckay_graph: need n >= 2");
  McKayGraph g;
  g.nodes = n;
  g.adjacency = Eigen::MatrixXi::Zero(n, n);
  // chi_k (x) (chi_1 + chi_{-1}) = chi_{k+1} + chi_{k-1}
  for (int k = 0; k < n; ++k) {
    g.adjacency(k, (k + 1) % n) += 1;
    g.adjacency(k, (k + n - 1) % n) += 1;
  }
  return g;
}

}  // namespace cyhit
