#include <map>

#include "suite_util.hpp"

namespace sylow {

using detail::field_label;
using nlohmann::json;

namespace {

bool invariant_under(const std::vector<Matrix>& gens, const MultiPoly& f) {
  for (const auto& g : gens)
    if (act(g, f) != f) return false;
  return true;
}

// Rank of a dense matrix over F (rows are vectors), by row reduction.
std::size_t dense_rank(const Field& F, std::vector<std::vector<Elem>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Elem inv = F.inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = F.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Elem f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = F.sub(rows[r][k], F.mul(f, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

// Coefficient vector of a homogeneous degree-delta form in x_1, x_2: index a for x_1^a x_2^(delta-a).
std::vector<Elem> coeff_vector(const MultiPoly& f, int delta) {
  std::vector<Elem> v(delta + 1, 0);
  for (const auto& t : f.terms()) v[t.m.e[0]] = t.c;
  return v;
}

// Compares, degree by degree, the invariant dimension of <g> on F[X,Y] with the span of the
// products u^i v^k (deg u = 1, deg v = 2) and checks u, v are invariant.
bool sigma2_identity(const FieldPtr& ctx, const Matrix& g, const MultiPoly& u, const MultiPoly& v, int max_degree) {
  if (act(g, u) != u || act(g, v) != v) return false;
  const Field& F = *ctx;
  for (int delta = 0; delta <= max_degree; ++delta) {
    std::vector<std::vector<Elem>> moved;
    for (int a = 0; a <= delta; ++a) {
      const MultiPoly m = MultiPoly::monomial(ctx, 2, {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(delta - a)});
      moved.push_back(coeff_vector(act(g, m) - m, delta));
    }
    const std::size_t inv_dim = delta + 1 - dense_rank(F, moved);
    std::vector<std::vector<Elem>> prods;
    for (int k = 0; 2 * k <= delta; ++k)
      prods.push_back(coeff_vector(u.pow(delta - 2 * k) * v.pow(k), delta));
    if (dense_rank(F, prods) != prods.size() || prods.size() != inv_dim) return false;
  }
  return true;
}

std::string expected_action(const GroupSpec& spec, std::size_t idx) {
  const std::size_t m = spec.m;
  if (spec.family == Family::OPlus) return idx == m - 1 || idx == m ? "swap" : "fix";
  return idx == m ? "shear" : "fix";
}

}  // namespace

bool sigma2_swap_identity(const FieldPtr& ctx, int max_degree) {
  const MultiPoly X = MultiPoly::var(ctx, 2, 1), Y = MultiPoly::var(ctx, 2, 2);
  return sigma2_identity(ctx, Matrix::from_ints(ctx, {{0, 1}, {1, 0}}), X + Y, X * Y, max_degree);
}

bool sigma2_shear_identity(const FieldPtr& ctx, int max_degree) {
  const MultiPoly X = MultiPoly::var(ctx, 2, 1), Y = MultiPoly::var(ctx, 2, 2);
  return sigma2_identity(ctx, Matrix::from_ints(ctx, {{1, 0}, {1, 1}}), X, Y * Y + X * Y, max_degree);
}

Certificate certificate_field_generation(const GroupSpec& spec) {
  Certificate c;
  c.spec = spec;
  const GeneratorList gl = field_generators(spec);
  const auto g1 = generators(spec, false);
  const auto full = generators(spec, true);
  const auto [t, d] = family_shape(spec);

  c.degree_product = 1;
  for (int j = 1; j <= spec.n; ++j) {
    const MultiPoly& phi = gl.cc_phis[j - 1];
    PhiRecord r;
    r.label = gl.cc_labels[j - 1];
    r.j = j;
    r.in_Rj = !phi.is_zero() && phi.max_var() <= j;
    r.invariant = invariant_under(g1, phi);
    r.degree = phi.is_zero() ? 0 : phi.degree_in(j);
    r.bound = j <= t + d ? expected_norm_degree(spec, j) : minimal_degree_bound(spec, j - t - d);
    r.bound_met = r.degree == r.bound;
    c.degree_product *= r.degree;
    c.records.push_back(r);
  }
  c.order = group_order(spec);
  const BigInt g1_order = spec.has_descent() ? BigInt(c.order / 2) : c.order;
  c.degree_product_ok = c.degree_product == g1_order;

  c.theorem_labels = gl.labels;
  c.theorem_invariant = true;
  for (const auto& phi : gl.phis) c.theorem_invariant = c.theorem_invariant && invariant_under(full, phi);

  bool descent_ok = true;
  if (spec.has_descent()) {
    const Matrix L = descent_generator(spec);
    const std::size_t m = spec.m;
    for (std::size_t i = 0; i < gl.g1_phis.size(); ++i) {
      DescentRecord r;
      r.label = gl.g1_labels[i];
      r.expected = expected_action(spec, i);
      const MultiPoly img = act(L, gl.g1_phis[i]);
      if (r.expected == "fix") r.ok = img == gl.g1_phis[i];
      else if (r.expected == "swap") r.ok = img == gl.g1_phis[i == m - 1 ? m : m - 1];
      else r.ok = img == gl.g1_phis[m] + gl.g1_phis[m + 1];
      descent_ok = descent_ok && r.ok;
      c.descent.push_back(r);
    }
    c.sigma2_ok = spec.family == Family::OPlus ? sigma2_swap_identity(spec.field, 8)
                                               : sigma2_shear_identity(spec.field, 8);
    c.literal_labels = gl.literal_labels;
    c.literal_invariant = true;
    for (const auto& phi : gl.literal_phis) c.literal_invariant = c.literal_invariant && invariant_under(full, phi);
  }

  bool records_ok = true;
  for (const auto& r : c.records) records_ok = records_ok && r.ok();
  c.verdict = records_ok && static_cast<int>(gl.phis.size()) == spec.n && c.degree_product_ok &&
              c.theorem_invariant && descent_ok && c.sigma2_ok;
  return c;
}

json Certificate::to_json() const {
  json j = {{"spec", spec_json(spec)}, {"verdict", verdict ? "pass" : "fail"}};
  json recs = json::array();
  for (const auto& r : records)
    recs.push_back({{"label", r.label}, {"j", r.j}, {"in_Rj", r.in_Rj}, {"invariant", r.invariant},
                    {"degree", r.degree}, {"bound", r.bound}, {"bound_met", r.bound_met}});
  j["records"] = recs;
  j["theorem_list"] = theorem_labels;
  j["theorem_invariant"] = theorem_invariant;
  j["degree_product"] = degree_product.str();
  j["order"] = order.str();
  j["degree_product_ok"] = degree_product_ok;
  if (!descent.empty()) {
    json ds = json::array();
    for (const auto& r : descent) ds.push_back({{"label", r.label}, {"expected", r.expected}, {"ok", r.ok}});
    j["descent"] = ds;
    j["sigma2_ok"] = sigma2_ok;
    j["literal_list"] = literal_labels;
    j["literal_invariant"] = literal_invariant;
  }
  return j;
}

Report certificate_suite(const GroupSpec& spec) {
  Report rep;
  const json params = spec_json(spec);
  Certificate c;
  rep.run("certificate.build", params, [&]() -> std::optional<json> {
    c = certificate_field_generation(spec);
    return std::nullopt;
  });
  if (rep.ok() == false) return rep;
  for (const auto& r : c.records) {
    json p = params;
    p["phi"] = r.label;
    p["j"] = r.j;
    rep.run("certificate.phi", p, [&]() -> std::optional<json> {
      if (r.ok()) return std::nullopt;
      return json{{"in_Rj", r.in_Rj}, {"invariant", r.invariant}, {"degree", r.degree}, {"bound", r.bound}};
    });
  }
  rep.run("certificate.degree_product", params, [&]() -> std::optional<json> {
    if (c.degree_product_ok) return std::nullopt;
    return json{{"product", c.degree_product.str()}, {"order", c.order.str()}};
  });
  rep.run("certificate.theorem_list", params, [&]() -> std::optional<json> {
    if (c.theorem_invariant && static_cast<int>(c.theorem_labels.size()) == spec.n) return std::nullopt;
    return json{{"labels", c.theorem_labels}, {"invariant", c.theorem_invariant}};
  });
  if (spec.has_descent()) {
    for (const auto& r : c.descent) {
      json p = params;
      p["phi"] = r.label;
      p["expected"] = r.expected;
      rep.run("certificate.descent", p, [&]() -> std::optional<json> {
        if (r.ok) return std::nullopt;
        return json{{"label", r.label}, {"expected", r.expected}};
      });
    }
    rep.run("certificate.sigma2", params, [&]() -> std::optional<json> {
      if (c.sigma2_ok) return std::nullopt;
      return json{{"identity", spec.family == Family::OPlus ? "swap" : "shear"}};
    });
  }
  rep.run("certificate.verdict", params, [&]() -> std::optional<json> {
    if (c.verdict) return std::nullopt;
    return c.to_json();
  });
  return rep;
}

// ---- worked examples at n = 8, q = 2 ----

namespace {

// sum_{i=1..4} x_{9-i}^e x_i + x_{9-i} x_i^e (e > 1), or the bilinear sum at e = 1.
MultiPoly display_h(const FieldPtr& K, std::uint32_t e) {
  std::vector<Term> terms;
  for (int i = 1; i <= 4; ++i) {
    Term a{}, b{};
    a.m.e[8 - i] = e;
    a.m.e[i - 1] = 1;
    a.c = 1;
    b.m.e[8 - i] = 1;
    b.m.e[i - 1] = e;
    b.c = 1;
    terms.push_back(a);
    if (e != 1) terms.push_back(b);
  }
  return MultiPoly::from_terms(K, 8, std::move(terms));
}

std::optional<json> list_matches(const std::vector<std::string>& got, const std::vector<std::string>& want) {
  if (got == want) return std::nullopt;
  return json{{"expected", want}, {"got", got}};
}

}  // namespace

Report examples_suite() {
  Report rep;
  {
    const GroupSpec spec = make_spec(Family::GuEven, 4, 2);
    const json params = spec_json(spec);
    const FieldPtr& K = spec.field;
    const std::uint64_t q = 2;
    const GeneratorList gl = field_generators(spec);
    const auto gens = generators(spec, true);
    rep.run("examples.gu8.list", params, [&] {
      return list_matches(gl.labels, {"x_1", "N(x_2)", "N(x_3)", "N(x_4)", "N(x_5)", "h_1", "h_2", "h_3"});
    });
    for (int k = 1; k <= 3; ++k) {
      json p = params;
      p["k"] = k;
      rep.run("examples.gu8.h_display", p, [&]() -> std::optional<json> {
        const MultiPoly want = display_h(K, static_cast<std::uint32_t>(ipow(q, 2 * k - 1)));
        if (gl.phis[4 + k] != want) return poly_witness(want, gl.phis[4 + k]);
        if (!invariant_under(gens, want)) return json{{"invariant", false}};
        return std::nullopt;
      });
    }
    rep.run("examples.gu8.norm_degrees", params, [&]() -> std::optional<json> {
      // H = {S : S + conj(S)^T = 0} is the kernel of the restriction to x_1..x_5.
      const BigInt h = count_S_exhaustive(spec, Matrix(K, spec.l, spec.nblk));
      BigInt prod = 1;
      std::vector<std::uint64_t> degs;
      for (int j = 1; j <= 5; ++j) {
        degs.push_back(gl.norms[j - 1].degree_in(j));
        prod *= degs.back();
      }
      if (prod * h == group_order(spec) && degs == std::vector<std::uint64_t>{1, 4, 16, 64, 128}) return std::nullopt;
      return json{{"degrees", degs}, {"H", h.str()}, {"order", group_order(spec).str()}};
    });
    rep.run("examples.gu8.psi_degrees", params, [&]() -> std::optional<json> {
      std::vector<std::uint64_t> got;
      const MultiPoly h1 = gl.phis[5];
      for (int k = 1; k <= 3; ++k) {
        const MultiPoly f = psi_map(K, 3 - k, 8)(h1);
        if (f.max_var() > 5 + k || !invariant_under(gens, f)) return json{{"k", k}, {"in_R_or_invariant", false}};
        got.push_back(f.degree_in(5 + k));
      }
      if (got == std::vector<std::uint64_t>{32, 8, 2}) return std::nullopt;
      return json{{"degrees", got}};
    });
    rep.run("examples.gu8.Lk_orbits", params, [&]() -> std::optional<json> {
      for (int k = 1; k <= 3; ++k) {
        const auto lg = detail::hpm_generators(K, true, HSign::Minus, 3, 2, k, false);
        const std::uint64_t deg = orbit_product(K, 8, lg, 5 + k).degree_in(5 + k);
        if (deg != ipow(q, 7 - 2 * k)) return json{{"k", k}, {"degree", deg}};
      }
      return std::nullopt;
    });
    rep.run("examples.gu8.certificate", params, [&]() -> std::optional<json> {
      const Certificate c = certificate_field_generation(spec);
      if (c.verdict) return std::nullopt;
      return c.to_json();
    });
  }
  {
    const GroupSpec spec = make_spec(Family::OPlus, 4, 2);
    const json params = spec_json(spec);
    const FieldPtr& K = spec.field;
    const GeneratorList gl = field_generators(spec);
    const auto gens = generators(spec, true);
    rep.run("examples.oplus8.list", params, [&] {
      return list_matches(gl.labels, {"x_1", "N(x_2)", "N(x_3)", "N(x_4)+N(x_5)", "N(x_4)*N(x_5)", "h_1", "h_2",
                                      "h_3"});
    });
    for (int k = 1; k <= 3; ++k) {
      json p = params;
      p["k"] = k;
      rep.run("examples.oplus8.h_display", p, [&]() -> std::optional<json> {
        const MultiPoly want = display_h(K, static_cast<std::uint32_t>(ipow(2, k - 1)));
        if (gl.phis[4 + k] != want) return poly_witness(want, gl.phis[4 + k]);
        if (!invariant_under(gens, want)) return json{{"invariant", false}};
        return std::nullopt;
      });
    }
    rep.run("examples.oplus8.F_identity", params, [&]() -> std::optional<json> {
      const auto fs = fblk_solutions(spec);
      if (fs.size() == 1 && fs[0].is_identity()) return std::nullopt;
      return json{{"count", fs.size()}};
    });
    rep.run("examples.oplus8.L", params, [&]() -> std::optional<json> {
      const Matrix L = descent_generator(spec);
      Matrix want = Matrix::identity(K, 8);
      want.at(3, 3) = want.at(4, 4) = 0;
      want.at(3, 4) = want.at(4, 3) = 1;
      if (L != want) return json{{"L", L.to_json_string()}};
      if (!(L * L).is_identity() || !is_member(spec, L)) return json{{"order_2_member", false}};
      const Matrix Li = L.inverse();
      for (const auto& g : generators(spec, false))
        if (!is_member(spec, L * g * Li)) return json{{"normalises", false}};
      return std::nullopt;
    });
    rep.run("examples.oplus8.certificate", params, [&]() -> std::optional<json> {
      const Certificate c = certificate_field_generation(spec);
      std::map<std::string, std::string> want = {{"x_1", "fix"},    {"N(x_2)", "fix"}, {"N(x_3)", "fix"},
                                                 {"N(x_4)", "swap"}, {"N(x_5)", "swap"}, {"h_1", "fix"},
                                                 {"h_2", "fix"},    {"h_3", "fix"}};
      std::map<std::string, std::string> got;
      for (const auto& r : c.descent) got[r.label] = r.expected;
      if (c.verdict && got == want) return std::nullopt;
      return c.to_json();
    });
  }
  return rep;
}

}  // namespace sylow
