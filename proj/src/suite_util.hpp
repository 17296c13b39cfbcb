#pragma once

#include <random>

#include "sylow/verify.hpp"

namespace sylow::detail {

inline Elem random_elem(const Field& F, std::mt19937_64& rng) {
  return static_cast<Elem>(rng() % F.size());
}

// Random polynomial in x_1..x_nv (inside a ring of n variables) of total degree <= maxdeg.
inline MultiPoly random_poly(const FieldPtr& ctx, int n, int nv, int maxdeg, int nterms, std::mt19937_64& rng) {
  std::vector<Term> terms;
  for (int t = 0; t < nterms; ++t) {
    Term term{};
    int left = static_cast<int>(rng() % (maxdeg + 1));
    for (int i = 0; i < nv && left > 0; ++i) {
      const int e = i == nv - 1 ? left : static_cast<int>(rng() % (left + 1));
      term.m.e[i] = static_cast<std::uint32_t>(e);
      left -= e;
    }
    term.c = random_elem(*ctx, rng);
    terms.push_back(term);
  }
  return MultiPoly::from_terms(ctx, n, std::move(terms));
}

inline Matrix random_unitriangular(const FieldPtr& ctx, int n, std::mt19937_64& rng) {
  Matrix M = Matrix::identity(ctx, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) M.at(i, j) = random_elem(*ctx, rng);
  return M;
}

inline Matrix random_invertible(const FieldPtr& ctx, int n, std::mt19937_64& rng) {
  while (true) {
    Matrix M(ctx, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M.at(i, j) = random_elem(*ctx, rng);
    if (M.det() != 0) return M;
  }
}

inline std::optional<nlohmann::json> expect_eq(const MultiPoly& expected, const MultiPoly& got) {
  if (expected == got) return std::nullopt;
  return poly_witness(expected, got);
}

// Generators of L_k^{+-}: I_t / I_d / I_t with C^{(k)} in the lower-left t x t block, where
// c_{i,j} = +-conj(c_{t-j+1,t-i+1}) and the first k-1 rows of C (with their partners) vanish. `quadratic` selects the
// conjugation of F_{q^2}; `zero_antidiag` forces the antidiagonal of C to 0.
std::vector<Matrix> hpm_generators(const FieldPtr& F, bool quadratic, HSign sign, int t, int d, int k,
                                   bool zero_antidiag);

inline std::string field_label(const Field& F) { return "GF(" + std::to_string(F.size()) + ")"; }

}  // namespace sylow::detail
