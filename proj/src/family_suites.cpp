#include <cmath>
#include <map>

#include "suite_util.hpp"
#include "sylow/steenrod.hpp"

namespace sylow {

using detail::expect_eq;
using detail::field_label;
using nlohmann::json;

namespace {

struct Fam {
  FieldPtr F;
  int n;
  FamilyKind kind;
  int j = 1;
  Elem lambda = 0;

  // Out-of-range indices give 0, matching the conventions Omega_{s<0} = Gamma_{s<0} = Lambda_{s<=0} = 0.
  MultiPoly operator()(int s) const {
    if (s < 0 || (kind == FamilyKind::Lambda && s < 1)) return MultiPoly(F, n);
    return family_poly(F, n, {kind, s, j, lambda});
  }
  std::string name(int s) const { return family_label({kind, s, j, lambda}, *F); }
};

// The lambda values exercised: 0, 1 and the quadratic-form parameter a (taken in F_q for Lambda).
std::vector<Elem> lambdas(const Field& F, bool subfield) {
  std::vector<Elem> out{0, 1};
  const Elem a = irreducible_quadratic_a(F, subfield);
  if (a != 0 && a != 1) out.push_back(a);
  return out;
}

json fam_params(const Fam& f, int s, const std::string& extra = "") {
  json p = {{"field", field_label(*f.F)}, {"n", f.n}, {"poly", f.name(s)}};
  if (!extra.empty()) p["item"] = extra;
  return p;
}

std::vector<Fam> families_for(const FieldPtr& F, int n) {
  std::vector<Fam> out;
  out.push_back({F, n, FamilyKind::Omega, 1, 0});
  out.push_back({F, n, FamilyKind::Omega, -1, 0});
  for (Elem l : lambdas(*F, false)) out.push_back({F, n, FamilyKind::Gamma, 1, l});
  if (F->is_quadratic_extension())
    for (Elem l : lambdas(*F, true)) out.push_back({F, n, FamilyKind::Lambda, 1, l});
  return out;
}

// Nonzero Steenrod components P^i(f) predicted by the table, keyed by i.
std::map<std::uint64_t, MultiPoly> steenrod_table(const Fam& f, int s) {
  const Field& F = *f.F;
  const Elem two = F.from_int(2);
  std::map<std::uint64_t, MultiPoly> e;
  e.emplace(0, f(s));
  if (f.kind == FamilyKind::Lambda) {
    const std::uint64_t q = F.sub_size(), q2 = q * q;
    const std::uint64_t Q = ipow(q, 2 * s - 1);
    // At s = 1: P^1 = Lambda_1^q. For s >= 2 the first component is Lambda_{s-1}^{q^2}.
    e.emplace(1, s == 1 ? f(1).pow(q) : f(s - 1).pow(q2));
    e.emplace(Q, f(s + 1));
    e.emplace(Q + 1, f(s).pow(q2));
    return e;
  }
  const std::uint64_t r = F.size();
  if (f.kind == FamilyKind::Omega && f.j == -1 && s == 0) return {};  // Omega_{0,-1} = 0
  if (s == 0) {
    e.emplace(1, f(1));
    e.emplace(2, f(0).pow(r));
    return e;
  }
  const std::uint64_t rs = ipow(r, s);
  if (s == 1 && f.j == 1) e.emplace(1, f(0).pow(r).scaled(two));
  else e.emplace(1, f(s - 1).pow(r));
  e.emplace(rs, f(s + 1));
  e.emplace(rs + 1, f(s).pow(r));
  return e;
}

// P^bullet(f) by the P(-1) identity list.
MultiPoly pbullet_table(const Fam& f, int s) {
  const Field& F = *f.F;
  const Elem two = F.from_int(2);
  if (f.kind == FamilyKind::Lambda) {
    const std::uint64_t q = F.sub_size(), q2 = q * q;
    const MultiPoly third = s == 1 ? f(1).pow(q) : f(s - 1).pow(q2);
    return f(s).pow(q2) - f(s + 1) - third + f(s);
  }
  const std::uint64_t r = F.size();
  if (s == 0) return f(0).pow(r) - f(1) + f(0);
  if (s == 1 && f.j == 1) return f(1).pow(r) - f(2) - f(0).pow(r).scaled(two) + f(1);
  return f(s).pow(r) - f(s + 1) - f(s - 1).pow(r) + f(s);
}

}  // namespace

Report steenrod_suite(const FieldPtr& F, std::uint64_t seed) {
  Report rep;
  const std::uint64_t r = F->size();
  for (int n : {4, 6}) {
    for (const Fam& f : families_for(F, n)) {
      const int s0 = f.kind == FamilyKind::Lambda ? 1 : 0;
      for (int s = s0; s <= 2; ++s) {
        if (f.kind == FamilyKind::Omega && f.j == -1 && s == 0) continue;
        rep.run("steenrod.table", fam_params(f, s), [&]() -> std::optional<json> {
          const MultiPoly src = f(s);
          const SteenrodExpansion ex = steenrod_expand(src, r);
          auto expected = steenrod_table(f, s);
          std::uint64_t top = ex.components.size();
          for (const auto& [i, _] : expected) top = std::max<std::uint64_t>(top, i + 1);
          for (std::uint64_t i = 0; i < top; ++i) {
            const MultiPoly got = ex.op(i);
            auto it = expected.find(i);
            const MultiPoly want = it == expected.end() ? MultiPoly(F, n) : it->second;
            if (got != want) {
              json w = poly_witness(want, got);
              w["i"] = i;
              return w;
            }
          }
          return std::nullopt;
        });
        rep.run("steenrod.pbullet", fam_params(f, s), [&]() -> std::optional<json> {
          const MultiPoly got = p_bullet(f(s), r);
          if (auto w = expect_eq(pbullet_table(f, s), got)) return w;
          // Alternating sum of the components.
          const SteenrodExpansion ex = steenrod_expand(f(s), r);
          MultiPoly alt(F, n);
          for (std::size_t i = 0; i < ex.components.size(); ++i)
            alt = i % 2 ? alt - ex.components[i] : alt + ex.components[i];
          return expect_eq(alt, got);
        });
      }
    }
  }

  std::mt19937_64 rng(seed ^ (F->size() * 0x9e3779b97f4a7c15ull));
  const json pp = {{"field", field_label(*F)}, {"n", 3}, {"samples", 12}};
  rep.run("steenrod.cartan", pp, [&]() -> std::optional<json> {
    for (int t = 0; t < 12; ++t) {
      const MultiPoly f = detail::random_poly(F, 3, 3, 3, 4, rng);
      const MultiPoly g = detail::random_poly(F, 3, 3, 3, 4, rng);
      const auto ef = steenrod_expand(f, r), eg = steenrod_expand(g, r), efg = steenrod_expand(f * g, r);
      const std::size_t top = ef.components.size() + eg.components.size();
      for (std::size_t i = 0; i < top; ++i) {
        MultiPoly sum(F, 3);
        for (std::size_t a = 0; a <= i; ++a) sum += ef.op(a) * eg.op(i - a);
        if (sum != efg.op(i)) return json{{"f", f.to_string()}, {"g", g.to_string()}, {"i", i}};
      }
    }
    return std::nullopt;
  });
  rep.run("steenrod.pbullet_alternating", pp, [&]() -> std::optional<json> {
    for (int t = 0; t < 12; ++t) {
      const MultiPoly f = detail::random_poly(F, 3, 3, 3, 5, rng);
      const auto ex = steenrod_expand(f, r);
      MultiPoly alt(F, 3);
      for (std::size_t i = 0; i < ex.components.size(); ++i)
        alt = i % 2 ? alt - ex.components[i] : alt + ex.components[i];
      if (alt != p_bullet(f, r)) return json{{"f", f.to_string()}};
    }
    return std::nullopt;
  });
  rep.run("steenrod.equivariance", pp, [&]() -> std::optional<json> {
    for (int t = 0; t < 12; ++t) {
      const MultiPoly f = detail::random_poly(F, 3, 3, 3, 4, rng);
      const Matrix M = detail::random_invertible(F, 3, rng);
      const auto ex = steenrod_expand(f, r);
      const auto exm = steenrod_expand(act(M, f), r);
      for (std::size_t i = 0; i < std::max(ex.components.size(), exm.components.size()); ++i)
        if (act(M, ex.op(i)) != exm.op(i))
          return json{{"f", f.to_string()}, {"M", M.to_json_string()}, {"i", i}};
    }
    return std::nullopt;
  });
  return rep;
}

Report psi_suite(const FieldPtr& F, std::uint64_t seed) {
  Report rep;
  const Field& K = *F;
  const std::uint64_t r = K.size();
  std::mt19937_64 rng(seed ^ (r * 0xc2b2ae3d27d4eb4full));
  for (int n : {4, 6}) {
    for (int l = 0; l <= 2; ++l) {
      const json p = {{"field", field_label(K)}, {"n", n}, {"l", l}};
      const PsiMap psi = psi_map(F, l, n);
      rep.run("psi.kills", p, [&]() -> std::optional<json> {
        for (int k = 1; k <= l; ++k)
          if (!psi(MultiPoly::var(F, n, k)).is_zero()) return json{{"k", k}};
        return std::nullopt;
      });
      rep.run("psi.orbit_product", p, [&]() -> std::optional<json> {
        const MultiPoly want = orbit_product(F, n, unitriangular_generators(F, n), l + 1);
        return expect_eq(want, psi(MultiPoly::var(F, n, l + 1)));
      });
      if (l == 0) {
        rep.run("psi.identity", p, [&]() -> std::optional<json> {
          for (int i = 1; i <= n; ++i)
            if (psi.map.images[i - 1] != MultiPoly::var(F, n, i)) return json{{"i", i}};
          return std::nullopt;
        });
        continue;
      }
      const PsiMap prev = psi_map(F, l - 1, n);
      const MultiPoly T = prev(MultiPoly::var(F, n, l));
      rep.run("psi.linear_recursion", p, [&]() -> std::optional<json> {
        for (int t = 0; t < 6; ++t) {
          std::vector<Elem> c(n);
          for (auto& x : c) x = detail::random_elem(K, rng);
          const MultiPoly f = linear_form(F, c);
          const MultiPoly want = prev(f).pow(r) - T.pow(r - 1) * prev(f);
          if (auto w = expect_eq(want, psi(f))) return w;
        }
        return std::nullopt;
      });
      rep.run("psi.equivariance", p, [&]() -> std::optional<json> {
        for (int t = 0; t < 4; ++t) {
          const MultiPoly f = detail::random_poly(F, n, n, 2, 3, rng);
          const Matrix g = detail::random_unitriangular(F, n, rng);
          if (act(g, psi(f)) != psi(act(g, f))) return json{{"f", f.to_string()}, {"g", g.to_json_string()}};
        }
        return std::nullopt;
      });
      if (l + 1 <= n && std::pow(static_cast<double>(r), l) <= 256)
        rep.run("psi.additive_recursion", p, [&]() -> std::optional<json> {
          if (additive_poly_recursion_check(F, l, n)) return std::nullopt;
          return json{{"message", "recursion differs from the brute product"}};
        });

      // The recursions for psi_l on the three families, with T = psi_{l-1}(x_l).
      for (const Fam& f : families_for(F, n)) {
        const int s0 = f.kind == FamilyKind::Lambda ? 1 : 0;
        for (int s = s0; s <= 2; ++s) {
          if (f.kind == FamilyKind::Omega && f.j == -1 && s == 0) continue;
          json pf = fam_params(f, s);
          pf["l"] = l;
          rep.run("psi.family_recursion", pf, [&]() -> std::optional<json> {
            const Elem two = K.from_int(2);
            auto P = [&](int idx) { return prev(f(idx)); };
            MultiPoly want(F, n);
            if (f.kind == FamilyKind::Lambda) {
              const std::uint64_t q = K.sub_size(), q2 = q * q;
              if (s == 1)
                want = P(1).pow(q2) - T.pow(q2 - 1) * P(2) - T.pow(q * q2 - q) * P(1).pow(q) +
                       T.pow(q * q2 + q2 - q - 1) * P(1);
              else {
                const std::uint64_t Q = ipow(q, 2 * s - 1);
                want = P(s).pow(q2) - T.pow(q2 - 1) * P(s + 1) - T.pow(Q * (q2 - 1)) * P(s - 1).pow(q2) +
                       T.pow((Q + 1) * (q2 - 1)) * P(s);
              }
            } else if (s == 0) {
              want = P(0).pow(r) - T.pow(r - 1) * P(1) + T.pow(2 * (r - 1)) * P(0);
            } else if (s == 1 && f.j == 1) {
              want = P(1).pow(r) - T.pow(r - 1) * P(2) - (T.pow(r * (r - 1)) * P(0).pow(r)).scaled(two) +
                     T.pow((r + 1) * (r - 1)) * P(1);
            } else {
              const std::uint64_t rs = ipow(r, s);
              want = P(s).pow(r) - T.pow(r - 1) * P(s + 1) - T.pow(rs * (r - 1)) * P(s - 1).pow(r) +
                     T.pow((rs + 1) * (r - 1)) * P(s);
            }
            return expect_eq(want, psi(f(s)));
          });
        }
      }
    }
  }

  // Dickson coefficients: c_0 = x_1^{q-1} for n = 1, GL-invariance, and agreement with the recursion.
  const int max_dn = r <= 4 ? 3 : 2;
  for (int dn = 1; dn <= max_dn; ++dn) {
    const json p = {{"field", field_label(K)}, {"n", dn}};
    rep.run("psi.dickson", p, [&]() -> std::optional<json> {
      const auto c = dickson_coeffs(F, dn);
      if (dn == 1) {
        const MultiPoly want = MultiPoly::var(F, 1, 1).pow(r - 1);
        if (c[0] != want) return poly_witness(want, c[0]);
      }
      for (int t = 0; t < 4; ++t) {
        const Matrix M = detail::random_invertible(F, dn, rng);
        for (int i = 0; i < dn; ++i)
          if (act(M, c[i]) != c[i]) return json{{"i", i}, {"M", M.to_json_string()}};
      }
      // X^{q^n} + sum (-1)^{n-i} c_i X^{q^i} against the recursion for F_{n,q}(x_{n+1}).
      MultiPoly X = MultiPoly::var(F, dn + 1, dn + 1);
      MultiPoly rebuilt = X.pow(ipow(r, dn));
      for (int i = 0; i < dn; ++i) {
        const MultiPoly ci = c[i].extended(dn + 1) * X.pow(ipow(r, i));
        rebuilt = (dn - i) % 2 ? rebuilt - ci : rebuilt + ci;
      }
      return expect_eq(psi_map(F, dn, dn + 1)(X), rebuilt);
    });
  }
  return rep;
}

Report degree_table_suite(const FieldPtr& F) {
  Report rep;
  const Field& K = *F;
  const std::uint64_t r = K.size();
  for (int n : {4, 6}) {
    const int m = n / 2;
    for (int l = 0; l <= std::min(2, m - 1); ++l) {
      const PsiMap psi = psi_map(F, l, n);
      const int v = n - l;
      for (const Fam& f : families_for(F, n)) {
        const int s0 = f.kind == FamilyKind::Lambda ? 1 : 0;
        for (int s = s0; s <= 2; ++s) {
          if (f.kind == FamilyKind::Omega && f.j == -1 && s == 0) continue;
          json p = fam_params(f, s);
          p["l"] = l;
          p["variable"] = v;
          // The lambda term sits on the variable read at l = m - 1 and raises its degree there.
          if (f.kind != FamilyKind::Omega && f.lambda != 0 && l == m - 1) {
            rep.skip("degrees.table", p, "lambda term sits on x_{n-l} at l = m-1; the table covers lambda = 0 there");
            continue;
          }
          std::uint64_t want;
          if (f.kind == FamilyKind::Lambda) want = ipow(K.sub_size(), 2 * l + 2 * s - 1);
          else want = ipow(r, l + s);
          rep.run("degrees.table", p, [&]() -> std::optional<json> {
            const MultiPoly img = psi(f(s));
            if (img.max_var() > n - l) return json{{"max_var", img.max_var()}};
            const std::uint64_t got = img.degree_in(v);
            if (got == want) return std::nullopt;
            return json{{"expected", want}, {"got", got}};
          });
        }
      }
    }
  }
  return rep;
}

MultiPoly apply_h_mutation(const MultiPoly& h, const HMutation& mut) {
  if (mut.kind == HMutationKind::None || h.is_zero()) return h;
  std::vector<Term> terms = h.terms();
  Term& t = terms[static_cast<std::size_t>(mut.term) % terms.size()];
  if (mut.kind == HMutationKind::SignFlip) {
    t.c = h.field().neg(t.c);
  } else {
    int i = 0;
    while (t.m.e[i] == 0) ++i;
    const int to = i + 1 < h.nvars() ? i + 1 : i - 1;
    t.m.e[to] += t.m.e[i];
    t.m.e[i] = 0;
  }
  return MultiPoly::from_terms(h.ctx(), h.nvars(), std::move(terms));
}

Report invariance_suite(const GroupSpec& spec, const HMutation& hmut) {
  Report rep;
  const json params = spec_json(spec);
  const auto gens = generators(spec, true);
  const auto [t, d] = family_shape(spec);
  std::vector<MultiPoly> hs;
  for (int k = 1; k <= std::max(t, 1); ++k) {
    MultiPoly h = h_k(spec, k);
    if (hmut.kind != HMutationKind::None && hmut.k == k) h = apply_h_mutation(h, hmut);
    hs.push_back(h);
  }
  for (int k = 1; k <= std::max(t, 1); ++k) {
    json p = params;
    p["k"] = k;
    p["h"] = family_label(h_params(spec, k), *spec.field);
    rep.run("invariance.h_k", p, [&]() -> std::optional<json> {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const MultiPoly img = act(gens[g], hs[k - 1]);
        if (img != hs[k - 1]) {
          json w = poly_witness(hs[k - 1], img);
          w["generator"] = g;
          w["matrix"] = gens[g].to_json_string();
          return w;
        }
      }
      return std::nullopt;
    });
  }
  for (int k = 2; k <= t; ++k) {
    json p = params;
    p["k"] = k;
    p["index"] = h_chain_index(spec, k);
    rep.run("invariance.steenrod_chain", p, [&]() -> std::optional<json> {
      return expect_eq(hs[k - 1], steenrod_op(hs[k - 2], h_chain_index(spec, k), spec.r()));
    });
  }
  const GeneratorList gl = field_generators(spec);
  rep.run("invariance.theorem_list", params, [&]() -> std::optional<json> {
    if (static_cast<int>(gl.phis.size()) != spec.n) return json{{"length", gl.phis.size()}};
    for (std::size_t i = 0; i < gl.phis.size(); ++i)
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (act(gens[g], gl.phis[i]) != gl.phis[i]) return json{{"phi", gl.labels[i]}, {"generator", g}};
    return std::nullopt;
  });
  return rep;
}

}  // namespace sylow
