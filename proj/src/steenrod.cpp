#include "sylow/steenrod.hpp"

#include <map>

#include "sylow/caps.hpp"

namespace sylow {

MultiPoly SteenrodExpansion::op(std::uint64_t i) const {
  if (i < components.size()) return components[i];
  return MultiPoly(source.ctx(), source.nvars());
}

SteenrodExpansion steenrod_expand(const MultiPoly& f, std::uint64_t r) {
  const int n = f.nvars();
  if (n + 1 > kMaxVars) throw Error(Errc::DimensionMismatch, "no room for the auxiliary variable");
  const FieldPtr& ctx = f.ctx();
  const int z = n;  // zero-based index of the auxiliary variable
  AlgebraMap map;
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint32_t> e(n + 1, 0);
    e[i - 1] = 1;
    MultiPoly x = MultiPoly::monomial(ctx, n + 1, e);
    e[i - 1] = static_cast<std::uint32_t>(r);
    e[z] = 1;
    map.images.push_back(x + MultiPoly::monomial(ctx, n + 1, e));
  }
  MultiPoly big = substitute(f.extended(n), map);
  if (big.size() > caps().expansion) throw Error(Errc::ExpansionTooLarge, "Steenrod expansion above cap");

  std::map<std::uint32_t, std::vector<Term>> by_power;
  for (const auto& t : big.terms()) {
    Term u = t;
    std::uint32_t k = u.m.e[z];
    u.m.e[z] = 0;
    by_power[k].push_back(u);
  }
  SteenrodExpansion out;
  out.source = f;
  out.r = r;
  std::uint32_t top = by_power.empty() ? 0 : by_power.rbegin()->first;
  out.components.assign(top + 1, MultiPoly(ctx, n));
  for (auto& [k, terms] : by_power) out.components[k] = MultiPoly::from_terms(ctx, n, std::move(terms));
  if (out.components.empty()) out.components.push_back(MultiPoly(ctx, n));
  return out;
}

MultiPoly steenrod_op(const MultiPoly& f, std::uint64_t i, std::uint64_t r) {
  return steenrod_expand(f, r).op(i);
}

MultiPoly p_bullet(const MultiPoly& f, std::uint64_t r) {
  const int n = f.nvars();
  AlgebraMap map;
  for (int i = 1; i <= n; ++i) {
    MultiPoly x = MultiPoly::var(f.ctx(), n, i);
    map.images.push_back(x - x.pow(r));
  }
  return substitute(f, map);
}

}  // namespace sylow
