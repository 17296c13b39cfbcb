#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include <omp.h>

#include "sylow/caps.hpp"
#include "sylow/verify.hpp"

namespace sylow {

namespace {

using SparseCol = std::vector<std::pair<std::uint32_t, Elem>>;

void monomials_of_degree(int j, std::uint64_t deg, std::vector<Monomial>& out) {
  Monomial m;
  std::function<void(int, std::uint64_t)> rec = [&](int i, std::uint64_t left) {
    if (i == j - 1) {
      m.e[i] = static_cast<std::uint32_t>(left);
      out.push_back(m);
      return;
    }
    for (std::uint64_t a = 0; a <= left; ++a) {
      m.e[i] = static_cast<std::uint32_t>(a);
      rec(i + 1, left - a);
    }
    m.e[i] = 0;
  };
  rec(0, deg);
}

SparseCol build_column(const FieldPtr& ctx, const std::vector<Matrix>& gj, const Monomial& m, int j,
                       const std::unordered_map<Monomial, std::uint32_t, MonomialHash>& index) {
  const auto dim = static_cast<std::uint32_t>(index.size());
  std::vector<std::uint32_t> exps(m.e.begin(), m.e.begin() + j);
  const MultiPoly mono = MultiPoly::monomial(ctx, j, exps);
  SparseCol col;
  for (std::size_t g = 0; g < gj.size(); ++g) {
    const MultiPoly d = act(gj[g], mono) - mono;
    for (const auto& t : d.terms()) col.emplace_back(static_cast<std::uint32_t>(g) * dim + index.at(t.m), t.c);
  }
  std::sort(col.begin(), col.end());
  return col;
}

// Returns true when `col` is dependent on the basis; otherwise adds it.
bool reduce_insert(const Field& F, std::map<std::uint32_t, SparseCol>& basis, const SparseCol& col) {
  std::map<std::uint32_t, Elem> v(col.begin(), col.end());
  while (!v.empty()) {
    auto [row, c] = *v.begin();
    auto it = basis.find(row);
    if (it == basis.end()) {
      const Elem inv = F.inv(c);
      SparseCol norm;
      for (auto [r, x] : v) norm.emplace_back(r, F.mul(x, inv));
      basis.emplace(row, std::move(norm));
      return false;
    }
    for (auto [r, x] : it->second) {
      Elem& y = v[r];
      y = F.sub(y, F.mul(c, x));
      if (y == 0) v.erase(r);
    }
  }
  return true;
}

OracleResult oracle_impl(const FieldPtr& ctx, const std::vector<Matrix>& gens, int j, std::uint64_t D, bool parallel) {
  if (j < 1) throw Error(Errc::OutOfRange, "j must be positive");
  OracleResult res;
  res.D = D;
  if (j == 1) {
    res.min_degree = 1;
    return res;
  }
  std::vector<Matrix> gj;
  for (const auto& g : gens) gj.push_back(g.block(0, 0, j, j));
  const Field& F = *ctx;
  std::uint64_t best = ~0ull;
  for (std::uint64_t deg = 1; deg <= D; ++deg) {
    std::vector<Monomial> monos;
    monomials_of_degree(j, deg, monos);
    if (monos.size() > caps().dimension)
      throw Error(Errc::DimensionCapExceeded, "graded piece of dimension " + std::to_string(monos.size()));
    res.largest_piece = std::max(res.largest_piece, monos.size());
    std::stable_sort(monos.begin(), monos.end(),
                     [j](const Monomial& a, const Monomial& b) { return a.e[j - 1] < b.e[j - 1]; });
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], static_cast<std::uint32_t>(i));
    std::size_t limit = monos.size();
    while (limit > 0 && monos[limit - 1].e[j - 1] >= best) --limit;
    std::vector<SparseCol> cols(limit);
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8) if (!omp_in_parallel() && limit > 64)
      for (std::size_t i = 0; i < limit; ++i) cols[i] = build_column(ctx, gj, monos[i], j, index);
    } else {
      for (std::size_t i = 0; i < limit; ++i) cols[i] = build_column(ctx, gj, monos[i], j, index);
    }
    std::map<std::uint32_t, SparseCol> basis;
    for (std::size_t i = 0; i < limit; ++i) {
      const std::uint64_t e = monos[i].e[j - 1];
      if (reduce_insert(F, basis, cols[i]) && e >= 1) {
        best = std::min(best, e);
        break;
      }
    }
  }
  if (best != ~0ull) res.min_degree = best;
  return res;
}

}  // namespace

OracleResult oracle_min_degree(const FieldPtr& ctx, const std::vector<Matrix>& gens, int j, std::uint64_t D) {
  return oracle_impl(ctx, gens, j, D, true);
}

OracleResult oracle_min_degree_serial(const FieldPtr& ctx, const std::vector<Matrix>& gens, int j, std::uint64_t D) {
  return oracle_impl(ctx, gens, j, D, false);
}

Report oracle_suite(const GroupSpec& spec) {
  Report rep;
  const auto [t, d] = family_shape(spec);
  const nlohmann::json params = spec_json(spec);
  if (t == 0) {
    rep.skip("oracle.min_degree", params, "no h-range for this rank");
    return rep;
  }
  const GeneratorList gl = field_generators(spec);
  const auto gens = generators(spec, false);
  for (int k = 1; k <= t; ++k) {
    const int j = t + d + k;
    const MultiPoly& phi = gl.cc_phis[j - 1];
    const std::uint64_t D = phi.total_degree();
    nlohmann::json p = params;
    p["j"] = j;
    p["D"] = D;
    const std::uint64_t bound = minimal_degree_bound(spec, k);
    // The graded piece at degree D in j variables decides feasibility.
    long double dim = 1;
    for (int i = 1; i < j; ++i) dim = dim * (D + i) / i;
    if (dim > static_cast<long double>(caps().dimension)) {
      rep.skip("oracle.min_degree", p, "graded piece above the dimension cap");
      continue;
    }
    rep.run("oracle.min_degree", p, [&]() -> std::optional<nlohmann::json> {
      const OracleResult r = oracle_min_degree(spec.field, gens, j, D);
      if (r.min_degree && *r.min_degree == bound && phi.degree_in(j) == bound) return std::nullopt;
      nlohmann::json w = {{"bound", bound}, {"phi_degree", phi.degree_in(j)}, {"largest_piece", r.largest_piece}};
      w["oracle"] = r.min_degree ? nlohmann::json(*r.min_degree) : nlohmann::json("none <= D");
      return w;
    });
  }
  return rep;
}

}  // namespace sylow
