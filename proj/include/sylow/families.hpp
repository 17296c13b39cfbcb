#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sylow/groups.hpp"
#include "sylow/poly.hpp"

namespace sylow {

// x_i -> F_{l,r}(x_i) with r = |ctx|, built by the recursion
// psi_l(x) = psi_{l-1}(x)^r - psi_{l-1}(x_l)^{r-1} psi_{l-1}(x).
struct PsiMap {
  int l = 0;
  std::uint64_t r = 0;
  AlgebraMap map;

  MultiPoly operator()(const MultiPoly& f) const { return substitute(f, map); }
};

PsiMap psi_map(const FieldPtr& ctx, int l, int n);

// prod over u in span_F(x_1..x_l) of (x_v - u), in a ring with n variables.
MultiPoly subspace_product(const FieldPtr& ctx, int n, int l, int v);
// F_{l,r}(X) by the recursion against the brute product, with X = x_{l+1}.
bool additive_poly_recursion_check(const FieldPtr& ctx, int l, int n);
// c_0..c_{n-1} with F_{n,q}(X) = X^{q^n} + sum (-1)^{n-i} c_i X^{q^i}, read off the brute product.
std::vector<MultiPoly> dickson_coeffs(const FieldPtr& ctx, int n);

enum class FamilyKind { Omega, Gamma, Lambda };

struct FamilyParams {
  FamilyKind kind = FamilyKind::Omega;
  int s = 0;
  int j = 1;       // Omega only: +1 or -1
  Elem lambda = 0;  // Gamma and Lambda
};

std::string family_label(const FamilyParams& fp, const Field& F);
// Omega and Gamma use r = |ctx|; Lambda needs ctx = F_{q^2} and uses q.
// Omega pairs x_{n-i+1} with x_i for i <= floor(n/2). Gamma puts its two square
// terms on x_c, x_{c+1} with c = ceil(n/2); Lambda puts its extra term on x_{floor(n/2)+1}.
MultiPoly family_poly(const FieldPtr& ctx, int n, const FamilyParams& fp);

struct FamilyShape {
  int t = 0;
  int d = 0;
};
FamilyShape family_shape(const GroupSpec& spec);

FamilyParams h_params(const GroupSpec& spec, int k);
MultiPoly h_k(const GroupSpec& spec, int k);
// i with h_k = P^i(h_{k-1}) in the r-Steenrod algebra of the acting field; k >= 2.
std::uint64_t h_chain_index(const GroupSpec& spec, int k);

struct Orbit {
  std::vector<std::vector<Elem>> members;  // coefficient vectors, members[0] = x_i
  bool affine = false;                     // members - x_i is an F_p-subspace
  std::vector<std::vector<Elem>> basis;    // F_p-basis of that subspace when affine
};

Orbit orbit_of(const FieldPtr& ctx, int n, const std::vector<Matrix>& gens, int i);
// Product of the distinct orbit members, by the additive recursion when the
// orbit is an affine F_p-subspace and by a balanced product otherwise.
MultiPoly orbit_product(const FieldPtr& ctx, int n, const std::vector<Matrix>& gens, int i);
MultiPoly orbit_product_direct(const FieldPtr& ctx, int n, const Orbit& orbit);
MultiPoly orbit_product_additive(const FieldPtr& ctx, int n, const Orbit& orbit);
// True when every generator maps the orbit into itself.
bool orbit_closed(const std::vector<Matrix>& gens, const Orbit& orbit);

struct GeneratorList {
  GroupSpec spec;
  std::vector<MultiPoly> phis;  // the theorem list, length n
  std::vector<std::string> labels;
  std::vector<std::string> h_defs;
  // phi_j = N(x_j) for j <= t+d and psi_{t-k}(h_1) for j = t+d+k.
  std::vector<MultiPoly> cc_phis;
  std::vector<std::string> cc_labels;
  // Even-char O+/O-: the theorem list for G1 before descent.
  std::vector<MultiPoly> g1_phis;
  std::vector<std::string> g1_labels;
  // Even-char O+/O-: an alternative rendering of the list, kept for the report.
  std::vector<MultiPoly> literal_phis;
  std::vector<std::string> literal_labels;
  std::vector<MultiPoly> norms;  // N(x_1)..N(x_{t+d}) under G1
};

GeneratorList field_generators(const GroupSpec& spec);

std::uint64_t ipow(std::uint64_t b, std::uint64_t e);
// Degree of N(x_j), j <= t+d, from the closed forms.
std::uint64_t expected_norm_degree(const GroupSpec& spec, int j);

enum class HSign { Plus, Minus };
// Degree of the orbit product of x_{t+d+k} under the H-subgroup, for
// F = F_{q^2} (quadratic) or F_q.
std::uint64_t h_subgroup_bound(HSign sign, bool quadratic, bool odd, bool zero_antidiag, std::uint64_t q, int t,
                               int k);
std::uint64_t minimal_degree_bound(const GroupSpec& spec, int k);

}  // namespace sylow
