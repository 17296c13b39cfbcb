#include <omp.h>

#include <algorithm>
#include <unordered_map>

#include "sylow/caps.hpp"
#include "sylow/poly.hpp"

namespace sylow {

namespace {

using Acc = std::unordered_map<Monomial, Elem, MonomialHash>;

void check_exponents(const MultiPoly& f, const MultiPoly& g) {
  std::array<std::uint64_t, kMaxVars> mf{}, mg{};
  for (const auto& t : f.terms())
    for (int v = 0; v < kMaxVars; ++v) mf[v] = std::max<std::uint64_t>(mf[v], t.m.e[v]);
  for (const auto& t : g.terms())
    for (int v = 0; v < kMaxVars; ++v) mg[v] = std::max<std::uint64_t>(mg[v], t.m.e[v]);
  for (int v = 0; v < kMaxVars; ++v)
    if (mf[v] + mg[v] > caps().exponent) throw Error(Errc::ExponentOverflow, "exponent above cap in product");
}

void accumulate(const Field& F, const std::vector<Term>& a, std::size_t lo, std::size_t hi,
                const std::vector<Term>& b, Acc& acc) {
  for (std::size_t i = lo; i < hi; ++i) {
    const Term& s = a[i];
    for (const Term& t : b) {
      Monomial m;
      for (int v = 0; v < kMaxVars; ++v) m.e[v] = s.m.e[v] + t.m.e[v];
      Elem& slot = acc[m];
      slot = F.add(slot, F.mul(s.c, t.c));
    }
  }
}

std::vector<Term> collect(const Acc& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  return out;
}

}  // namespace

MultiPoly mul_serial(const MultiPoly& f, const MultiPoly& g) {
  f.check_compatible(g);
  if (f.is_zero() || g.is_zero()) return MultiPoly(f.ctx(), f.nvars());
  check_exponents(f, g);
  Acc acc;
  acc.reserve(std::min<std::size_t>(f.size() * g.size(), 1u << 22));
  accumulate(f.field(), f.terms(), 0, f.size(), g.terms(), acc);
  return MultiPoly::from_terms(f.ctx(), f.nvars(), collect(acc));
}

// Splits the outer factor across threads; each thread owns a private
// accumulator and the partial results are merged by the canonicalizing sort.
MultiPoly mul_parallel(const MultiPoly& f, const MultiPoly& g) {
  f.check_compatible(g);
  if (f.is_zero() || g.is_zero()) return MultiPoly(f.ctx(), f.nvars());
  check_exponents(f, g);
  const auto& a = f.size() >= g.size() ? f.terms() : g.terms();
  const auto& b = f.size() >= g.size() ? g.terms() : f.terms();
  int threads = omp_in_parallel() ? 1 : omp_get_max_threads();
  if (threads <= 1 || a.size() < 2) return mul_serial(f, g);
  std::vector<std::vector<Term>> parts(threads);
  const Field& F = f.field();
#pragma omp parallel num_threads(threads)
  {
    int t = omp_get_thread_num();
    std::size_t lo = a.size() * t / threads, hi = a.size() * (t + 1) / threads;
    Acc acc;
    accumulate(F, a, lo, hi, b, acc);
    parts[t] = collect(acc);
  }
  std::vector<Term> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return MultiPoly::from_terms(f.ctx(), f.nvars(), std::move(all));
}

}  // namespace sylow
