#include "cyhit/cli.hpp"

#include "cyhit/adjquot.hpp"
#include "cyhit/folding.hpp"
#include "cyhit/hitchin.hpp"
#include "cyhit/linalg.hpp"
#include "cyhit/random.hpp"
#include "cyhit/rootsys.hpp"
#include "cyhit/singular.hpp"
#include "cyhit/spectral.hpp"
#include "cyhit/swdiff.hpp"
#include "cyhit/weyl.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

namespace cyhit {

namespace {

Json rational_json(const Rational& q) {
  if (is_integer(q)) {
    const Integer n = boost::multiprecision::numerator(q);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max()) {
      return n.convert_to<long long>();
    }
  }
  return q.str();
}

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rational_json(q));
  return a;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

std::string types_name(const std::vector<DynkinType>& ts) {
  std::string s;
  for (const auto& t : ts) s += (s.empty() ? "" : "+") + t.name();
  return s.empty() ? "trivial" : s;
}

// ---- roots ----

void cmd_roots(VerificationReport& rep, const std::string& type_text) {
  const DynkinType t = DynkinType::parse(type_text);
  rep.inputs["type"] = t.name();
  const RootSystem r = RootSystem::build(t);
  const auto degs = degrees(t);
  const auto exps = exponents(t);
  const RatMatrix cartan = cartan_matrix(r);
  const std::size_t positive = r.positive_roots().size();

  Json info;
  info["rank"] = t.rank;
  info["roots"] = r.roots().size();
  info["positive_roots"] = positive;
  info["cartan_matrix"] = matrix_json(cartan);
  info["degrees"] = degs;
  info["exponents"] = exps;
  info["weyl_group_order"] = order(t);
  info["dimension"] = lie_algebra_dimension(t);
  rep.add("root_system", true, info);

  rep.add("root_count", r.roots().size() == classical_root_count(t),
          {{"computed", r.roots().size()}, {"expected", classical_root_count(t)}});
  rep.add("positive_roots_equal_sum_of_exponents", positive == static_cast<std::size_t>(std::accumulate(exps.begin(), exps.end(), 0)),
          {{"positive_roots", positive}});
  std::size_t sum = 0;
  for (int d : degs) sum += static_cast<std::size_t>(2 * d - 1);
  rep.add("dimension_from_degrees", sum == lie_algebra_dimension(t), {{"sum_2d_minus_1", sum}, {"dimension", lie_algebra_dimension(t)}});
  rep.add("cartan_matches_type", cartan_equivalent(cartan, t), {{"classified", types_name(classify_cartan(cartan))}});
  if (order(t) <= 100'000) {
    const auto elements = enumerate(r);
    rep.add("weyl_order_by_enumeration", elements.size() == order(t), {{"enumerated", elements.size()}});
  } else {
    rep.skip("weyl_order_by_enumeration", {{"reason", "|W| above the enumeration budget of 100000"}});
  }
}

// ---- fold ----

std::optional<DynkinType> expected_folding(const DynkinType& t, const std::string& group) {
  if (group == "1") return t;
  if (group == "Z2") {
    if (t.family == Family::A && t.rank % 2 == 1 && t.rank >= 3) return DynkinType{Family::B, (t.rank + 1) / 2};
    if (t.family == Family::D) return DynkinType{Family::C, t.rank - 1};
    if (t.family == Family::E && t.rank == 6) return DynkinType{Family::F, 4};
  }
  if ((group == "Z3" || group == "S3") && t == DynkinType{Family::D, 4}) return DynkinType{Family::G, 2};
  return std::nullopt;
}

void cmd_fold(VerificationReport& rep, const std::string& type_text, const std::string& group_name) {
  const DynkinType t = DynkinType::parse(type_text);
  rep.inputs["type"] = t.name();
  rep.inputs["group"] = group_name;
  if (!t.simply_laced()) throw std::invalid_argument("fold: source type must be simply laced (ADE), got " + t.name());
  const auto group = named_subgroup(t, group_name);
  const FoldingResult f = fold(t, group);

  Json info;
  info["group_order"] = f.group_order;
  info["folded_roots"] = f.folded_roots.size();
  info["folded_cartan"] = matrix_json(f.folded_cartan);
  info["folded_type"] = f.folded_type.name();
  if (const auto expected = expected_folding(t, group_name)) {
    info["expected"] = expected->name();
    rep.add("folded_type", cartan_equivalent(f.folded_cartan, *expected), info);
  } else {
    rep.add("folded_type", true, info);
  }

  const RootSystem r = RootSystem::build(t);
  std::size_t failures = 0;
  for (const auto& a : r.roots())
    if (!verify_reflection_formula(t, group, a)) ++failures;
  rep.add("reflection_formula", failures == 0, {{"roots_checked", r.roots().size()}, {"failures", failures}});
}

// ---- mckay ----

void cmd_mckay(VerificationReport& rep, const std::string& type_text) {
  const DynkinType t = DynkinType::parse(type_text);
  rep.inputs["type"] = t.name();
  const McKayDatum d = mckay_datum(t);
  Json info;
  info["delta"] = d.delta.name();
  info["delta_h"] = d.delta_h.name();
  info["symmetry_order"] = d.symmetry_order;
  info["gamma"] = d.gamma_name;
  info["gamma_order"] = d.gamma_order;
  info["gamma_prime_order"] = d.gamma_prime_order;
  rep.add("mckay_datum", true, info);
  rep.add("order_product", d.gamma_prime_order == d.gamma_order * d.symmetry_order);
  if (d.delta_h.family == Family::A) {
    const int n = d.delta_h.rank + 1;
    const McKayGraph g = cyclic_mckay_graph(n);
    rep.add("cyclic_mckay_graph_is_affine_cycle", g.is_cycle(), {{"group_order", n}, {"nodes", g.nodes}});
  }
}

// ---- table1 ----

void cmd_table1(VerificationReport& rep, int max_rank) {
  if (max_rank < 1) throw std::invalid_argument("table1: --max-rank must be >= 1");
  rep.inputs["max_rank"] = max_rank;
  for (const auto& row : table1_report(table1_families(max_rank))) {
    const auto published = table1_published_row(row.type);
    Json info;
    info["computed"] = row.passing;
    info["integral"] = row.passing_integral;
    info["published"] = published;
    rep.add("table1:" + row.type.name(), row.passing == published, info);
  }
}

// ---- decomp ----

RatVector random_cartan_point(const RootSystem& r, Rng& rng) {
  RatVector t = RatVector::Zero(r.ambient_dim());
  for (const auto& a : r.simple_roots()) t += random_rational(rng) * a;
  return t;
}

void cmd_decomp(VerificationReport& rep, const std::string& type_text, const std::string& rep_text, int samples) {
  const DynkinType t = DynkinType::parse(type_text);
  const RepKind kind = parse_rep(rep_text);
  if (samples < 1) throw std::invalid_argument("decomp: --samples must be >= 1");
  rep.inputs["type"] = t.name();
  rep.inputs["rep"] = rep_name(kind);
  rep.inputs["samples"] = samples;
  representation_dimension(t, kind);  // rejects standard reps of exceptional types

  const RootSystem r = RootSystem::build(t);
  Rng rng(rep.seed);
  int equal = 0;
  Json first_failure;
  Json example;
  for (int s = 0; s < samples; ++s) {
    const RatVector point = random_cartan_point(r, rng);
    const auto v = decompose_char_poly(t, kind, point);
    if (v.equal) ++equal;
    else if (first_failure.is_null()) first_failure = {{"cartan", to_string(point)}, {"char_poly", v.char_poly.str()}, {"orbit_product", v.orbit_product.str()}};
    if (s == 0) {
      example["cartan"] = to_string(point);
      example["char_poly"] = v.char_poly.str();
      Json factors = Json::array();
      for (const auto& f : v.dominant_factors) factors.push_back({{"weight", to_string(f.weight)}, {"multiplicity", f.multiplicity}});
      example["dominant_factors"] = factors;
    }
  }
  Json info{{"samples", samples}, {"equal", equal}, {"example", example}};
  if (!first_failure.is_null()) info["first_failure"] = first_failure;
  rep.add("char_poly_equals_orbit_product", equal == samples, info);
  const auto [cameral, spectral] = covering_degrees(t, kind);
  rep.add("covering_degrees", true, {{"cameral", cameral}, {"spectral", spectral}});
}

// ---- dims ----

void cmd_dims(VerificationReport& rep, const std::string& type_text, int genus) {
  const DynkinType t = DynkinType::parse(type_text);
  rep.inputs["type"] = t.name();
  rep.inputs["genus"] = genus;
  const CurveParams c(genus);
  const auto v = integrable_dimension_check(t, c);
  Json info;
  info["base_dim"] = v.dims.base_dim;
  info["total_dim"] = v.dims.total_dim;
  info["cameral_genus"] = v.dims.cameral_genus;
  if (v.dims.spectral_genus) info["spectral_genus"] = *v.dims.spectral_genus;
  if (v.dims.fiber_dim) info["fiber_dim"] = *v.dims.fiber_dim;
  rep.add("dimensions", true, info);
  rep.add("base_dim_equals_g_minus_1_times_dim", v.base_matches_algebra,
          {{"expected", static_cast<std::uint64_t>(genus - 1) * lie_algebra_dimension(t)}});
  if (v.fiber_matches_base) rep.add("spectral_fiber_dim_equals_base_dim", *v.fiber_matches_base);
  else rep.skip("spectral_fiber_dim_equals_base_dim", {{"reason", "spectral cover check implemented for type A only"}});
  if (t == DynkinType{Family::A, 1}) {
    rep.add("cameral_genus_A1", v.dims.cameral_genus == static_cast<std::uint64_t>(4 * genus - 3),
            {{"expected", 4 * genus - 3}});
  }
}

// ---- regular ----

void cmd_regular(VerificationReport& rep, const std::string& algebra_text, int trials) {
  const ClassicalAlgebra g = ClassicalAlgebra::parse(algebra_text);
  rep.inputs["algebra"] = g.name();
  rep.inputs["trials"] = trials;
  const int n = g.size;
  const RatMatrix zero = RatMatrix::Zero(n, n);
  rep.add("zero_not_regular", !is_regular(ClassicalLieElement(g, zero)),
          {{"centralizer_dim", centralizer_dimension(ClassicalLieElement(g, zero))}, {"rank", g.rank()}});

  if (g.kind == AlgebraKind::SL) {
    const auto reg = sl2_triple_regular(n);
    rep.add("regular_nilpotent_regular", is_regular(reg.x), {{"centralizer_dim", centralizer_dimension(reg.x)}});
    if (n >= 3) {
      const auto sub = sl2_triple_subregular(n);
      const auto dim = centralizer_dimension(sub.x);
      rep.add("subregular_centralizer_rank_plus_2", dim == g.rank() + 2, {{"centralizer_dim", dim}, {"rank", g.rank()}});
    }
  }

  Rng rng(rep.seed);
  int invariant = 0;
  for (int k = 0; k < trials; ++k) {
    RatVector c(g.dimension());
    for (auto& x : c) x = random_rational(rng);
    const ClassicalLieElement v(g, g.from_coordinates(c));
    const RatMatrix h = random_group_element(g, rng);
    const ClassicalLieElement w(g, RatMatrix(h * v.matrix() * inverse(h)));
    if (chi(v) == chi(w)) ++invariant;
  }
  rep.add("chi_conjugation_invariant", invariant == trials, {{"trials", trials}, {"invariant", invariant}});
}

// ---- kostant ----

void cmd_kostant(VerificationReport& rep, int n, int trials) {
  if (n < 2) throw std::invalid_argument("kostant: n must be >= 2");
  rep.inputs["n"] = n;
  rep.inputs["trials"] = trials;
  const auto nil = kostant_section(n, std::vector<Rational>(static_cast<std::size_t>(n) - 1, Rational(0)));
  rep.add("zero_gives_regular_nilpotent", nil.matrix() == sl2_triple_regular(n).x.matrix());

  Rng rng(rep.seed);
  int round_trips = 0, regular = 0;
  Json example;
  for (int k = 0; k < trials; ++k) {
    std::vector<Rational> b(static_cast<std::size_t>(n) - 1);
    for (auto& x : b) x = random_rational(rng);
    const auto v = kostant_section(n, b);
    if (chi(v) == b) ++round_trips;
    if (is_regular(v)) ++regular;
    if (k == 0) example = {{"b", rationals_json(b)}, {"section", matrix_json(v.matrix())}};
  }
  rep.add("chi_of_section_is_identity", round_trips == trials, {{"trials", trials}, {"exact", round_trips}, {"example", example}});
  rep.add("section_points_regular", regular == trials, {{"trials", trials}, {"regular", regular}});
}

// ---- slodowy ----

void cmd_slodowy(VerificationReport& rep, int n) {
  if (n < 3) throw std::invalid_argument("slodowy: n must be >= 3 (subregular differs from regular)");
  rep.inputs["n"] = n;
  const auto tr = sl2_triple_subregular(n);
  rep.add("triple_brackets", tr.brackets_hold());
  const auto slice = slodowy_slice(tr);
  const int rank = n - 1;
  rep.add("slice_dimension_rank_plus_2", static_cast<int>(slice.directions.size()) == rank + 2,
          {{"dimension", slice.directions.size()}, {"rank", rank}});
  const auto& w = slice.weights;
  rep.add("slice_weights_nonpositive", std::all_of(w.begin(), w.end(), [](int x) { return x <= 0; }), {{"weights", w}});
  if (n == 3) {
    std::vector<int> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    rep.add("slice_weights_A2", sorted == std::vector<int>{-2, -1, -1, 0}, {{"weights", sorted}});
    const auto v = subregular_fiber_singularity(3, 20, rep.seed);
    Json ranks = Json::array();
    for (auto r : v.jacobian_ranks_at_samples) ranks.push_back(r);
    rep.add("chi_vanishes_at_origin", v.chi_vanishes_at_origin);
    rep.add("jacobian_drops_rank_at_origin", v.jacobian_rank_at_origin < 2, {{"rank", v.jacobian_rank_at_origin}});
    rep.add("jacobian_full_rank_at_fiber_samples", v.singular_exactly_at_origin(),
            {{"samples", v.samples.size()}, {"ranks", ranks}, {"on_fiber", v.samples_on_fiber}});
  } else {
    rep.skip("a2_fiber_profile", {{"reason", "the fiber rank profile is computed for n = 3"}});
  }
}

// ---- disc ----

void cmd_disc(VerificationReport& rep, int grid) {
  if (grid < 1) throw std::invalid_argument("disc: --grid must be >= 1");
  rep.inputs["grid"] = grid;
  const auto family = b2_family();
  rep.add("symmetry_invariant", family.symmetry_invariant(), {{"family", family.total.str({"u", "v", "w", "a1", "a2"})}});

  int agree = 0, singular = 0;
  Json first_mismatch;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const Rational a1(2 * i - (grid - 1), 2), a2(2 * j - (grid - 1), 2);
      const FiberFlag f = fiber_flag(a1, a2);
      const Rational closed = 16 * a2 * (a1 * a1 - 4 * a2) * (a1 * a1 - 4 * a2);
      if ((f.discriminant == 0) == (closed == 0) && f.discriminant == closed) ++agree;
      else if (first_mismatch.is_null()) first_mismatch = {{"a1", a1.str()}, {"a2", a2.str()}, {"resultant", f.discriminant.str()}};
      if (!f.smooth) ++singular;
    }
  Json info{{"points", grid * grid}, {"agree", agree}, {"singular_fibers", singular}};
  if (!first_mismatch.is_null()) info["first_mismatch"] = first_mismatch;
  rep.add("discriminant_matches_16a2(a1^2-4a2)^2", agree == grid * grid, info);
  rep.add("origin_fiber_singular", !fiber_flag(0, 0).smooth);
}

// ---- swcheck ----

Complex parse_complex(const std::string& s) {
  std::istringstream is(s);
  double re = 0, im = 0;
  char comma = ',';
  if (!(is >> re)) throw std::invalid_argument("--u expects RE,IM, got '" + s + "'");
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw std::invalid_argument("--u expects RE,IM, got '" + s + "'");
  }
  return {re, im};
}

void cmd_swcheck(VerificationReport& rep, const std::string& u_text, double h, double tol, int nodes) {
  const Complex u = parse_complex(u_text);
  rep.inputs["u"] = complex_json(u);
  rep.inputs["h"] = h;
  rep.inputs["tol"] = tol;
  rep.inputs["nodes"] = nodes;
  const auto v = sw_derivative_check(u, h, tol, nodes);
  for (const auto& c : v.cycles) {
    rep.add("derivative_identity:" + c.cycle.name(), c.residual < tol,
            {{"finite_difference", complex_json(c.finite_difference)}, {"half_omega", complex_json(c.half_omega)}, {"residual", c.residual}});
  }
  const double radius = std::max(1.0, std::abs(u)) + 9.0;
  const Complex res = residue_at_infinity(u, radius);
  rep.add("residue_at_infinity_vanishes", std::abs(res) < tol, {{"radius", radius}, {"value", complex_json(res)}});
  const auto cycles = standard_cycles();
  const Complex p1 = period_omega({u, cycles[0], nodes, Quadrature::GaussLegendre}).value;
  const Complex p2 = period_omega({u, cycles[1], nodes, Quadrature::GaussLegendre}).value;
  const double tau_im = std::imag(p1 / p2);
  rep.add("period_lattice_nondegenerate", std::abs(tau_im) > 1e-6, {{"periods", Json::array({complex_json(p1), complex_json(p2)})}, {"im_ratio", tau_im}});
}

}  // namespace

std::uint64_t default_seed() {
  if (const char* s = std::getenv("CYHIT_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("CYHIT_SEED must be a non-negative integer, got '") + s + "'");
    }
  }
  return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie-theoretic and Hitchin-system verification suites", "cyhit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  app.add_option("--seed", seed, "seed for randomized sweeps (default: $CYHIT_SEED or 0)");

  std::string type_text, group_text, rep_text, algebra_text, u_text = "0.3,0.1";
  int max_rank = 6, samples = 20, genus = 2, trials = 100, n = 3, grid = 21, nodes = kDefaultNodes;
  double h = 1e-4, tol = 1e-6;
  std::function<void(VerificationReport&)> action;

  auto* roots = app.add_subcommand("roots", "root counts, Cartan matrix and degrees of a type");
  roots->add_option("type", type_text, "Dynkin type, e.g. E6")->required();
  roots->callback([&] { action = [&](VerificationReport& r) { cmd_roots(r, type_text); }; });

  auto* fold_cmd = app.add_subcommand("fold", "fold an ADE diagram by a group of diagram automorphisms");
  fold_cmd->add_option("type", type_text, "ADE type")->required();
  fold_cmd->add_option("group", group_text, "1, Z2, Z3 or S3")->required();
  fold_cmd->callback([&] { action = [&](VerificationReport& r) { cmd_fold(r, type_text, group_text); }; });

  auto* mckay = app.add_subcommand("mckay", "McKay correspondence data for a type");
  mckay->add_option("type", type_text, "Dynkin type")->required();
  mckay->callback([&] { action = [&](VerificationReport& r) { cmd_mckay(r, type_text); }; });

  auto* table1 = app.add_subcommand("table1", "fundamental weights whose spectral map is an isomorphism");
  table1->add_option("--max-rank", max_rank, "largest rank per family")->capture_default_str();
  table1->callback([&] { action = [&](VerificationReport& r) { cmd_table1(r, max_rank); }; });

  auto* decomp = app.add_subcommand("decomp", "characteristic polynomial versus orbit polynomials");
  decomp->add_option("type", type_text, "Dynkin type")->required();
  decomp->add_option("rep", rep_text, "standard or adjoint")->required();
  decomp->add_option("--samples", samples, "random Cartan points")->capture_default_str();
  decomp->callback([&] { action = [&](VerificationReport& r) { cmd_decomp(r, type_text, rep_text, samples); }; });

  auto* dims = app.add_subcommand("dims", "Hitchin base, cameral genus and spectral fiber dimensions");
  dims->add_option("type", type_text, "Dynkin type")->required();
  dims->add_option("--genus", genus, "genus of the curve, >= 2")->required();
  dims->callback([&] { action = [&](VerificationReport& r) { cmd_dims(r, type_text, genus); }; });

  auto* regular = app.add_subcommand("regular", "regularity and chi invariance in a classical algebra");
  regular->add_option("algebra", algebra_text, "slN, soN or spN")->required();
  regular->add_option("--trials", trials, "random conjugations")->capture_default_str();
  regular->callback([&] { action = [&](VerificationReport& r) { cmd_regular(r, algebra_text, trials); }; });

  auto* kostant = app.add_subcommand("kostant", "Kostant section round trip in sl(n)");
  kostant->add_option("n", n, "matrix size")->required();
  kostant->add_option("--trials", trials, "random coordinate vectors")->capture_default_str();
  kostant->callback([&] { action = [&](VerificationReport& r) { cmd_kostant(r, n, trials); }; });

  auto* slodowy = app.add_subcommand("slodowy", "subregular Slodowy slice in sl(n)");
  slodowy->add_option("n", n, "matrix size, >= 3")->required();
  slodowy->callback([&] { action = [&](VerificationReport& r) { cmd_slodowy(r, n); }; });

  auto* disc = app.add_subcommand("disc", "discriminant sweep of the B2 deformation family");
  disc->add_option("--grid", grid, "grid points per parameter")->capture_default_str();
  disc->callback([&] { action = [&](VerificationReport& r) { cmd_disc(r, grid); }; });

  auto* swcheck = app.add_subcommand("swcheck", "Seiberg-Witten derivative identity by quadrature");
  swcheck->set_help_flag("--help", "print this help message and exit");  // frees -h for the step option
  swcheck->add_option("--u", u_text, "modulus as RE,IM")->capture_default_str();
  swcheck->add_option("--h", h, "finite-difference step")->capture_default_str();
  swcheck->add_option("--tol", tol, "tolerance")->capture_default_str();
  swcheck->add_option("--nodes", nodes, "quadrature nodes")->capture_default_str();
  swcheck->callback([&] { action = [&](VerificationReport& r) { cmd_swcheck(r, u_text, h, tol, nodes); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  VerificationReport rep;
  rep.command = app.get_subcommands().front()->get_name();
  rep.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    action(rep);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    rep.add("internal", false, {{"exception", e.what()}});
  }
  rep.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  out << rep.to_json().dump(2) << '\n';
  err << rep.summary();
  return rep.failed() ? kExitCheckFailure : kExitPass;
}

}  // namespace cyhit
