#include <set>

#include "suite_util.hpp"
#include "sylow/caps.hpp"

namespace sylow {

using detail::field_label;
using nlohmann::json;

namespace detail {

namespace {

Elem bar_of(const Field& F, bool quadratic, Elem a) { return quadratic ? F.conj(a) : a; }

// Values allowed at an antidiagonal position: c = +-conj(c).
std::vector<Elem> antidiag_values(const Field& F, bool quadratic, HSign sign) {
  std::vector<Elem> out;
  for (Elem c = 0; c < F.size(); ++c) {
    const Elem b = bar_of(F, quadratic, c);
    if (sign == HSign::Plus ? c == b : c == F.neg(b)) out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<Matrix> hpm_generators(const FieldPtr& K, bool quadratic, HSign sign, int t, int d, int k,
                                   bool zero_antidiag) {
  const Field& F = *K;
  const int n = 2 * t + d;
  std::vector<Elem> all(F.size());
  for (Elem c = 0; c < F.size(); ++c) all[c] = c;
  const auto full_basis = fp_basis(F, all);
  const auto anti_basis = zero_antidiag ? std::vector<Elem>{} : fp_basis(F, antidiag_values(F, quadratic, sign));
  std::vector<Matrix> gens;
  auto push = [&](int i, int j, Elem v, int pi, int pj, Elem pv) {
    // C^{(k)} stays in H: a pair with one entry in the zeroed rows vanishes entirely.
    if (i < k - 1 || pi < k - 1 || v == 0) return;
    Matrix C(K, t, t);
    C.at(i, j) = v;
    C.at(pi, pj) = pv;
    Matrix M = Matrix::identity(K, n);
    M.set_block(t + d, 0, C);
    if (std::find(gens.begin(), gens.end(), M) == gens.end()) gens.push_back(M);
  };
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      const int pi = t - 1 - j, pj = t - 1 - i;
      if (pi == i && pj == j) {
        for (Elem b : anti_basis) push(i, j, b, i, j, b);
      } else if (std::make_pair(i, j) < std::make_pair(pi, pj)) {
        for (Elem b : full_basis) {
          const Elem pb = bar_of(F, quadratic, b);
          push(i, j, b, pi, pj, sign == HSign::Plus ? pb : F.neg(pb));
        }
      }
    }
  return gens;
}

}  // namespace detail

namespace {

struct NormCase {
  FieldPtr F;
  bool quadratic;
  HSign sign;
  bool zero_antidiag;
};

json case_params(const NormCase& c, int t, int d, int k) {
  return {{"field", field_label(*c.F)}, {"over", c.quadratic ? "F_{q^2}" : "F_q"},
          {"sign", c.sign == HSign::Plus ? "+" : "-"}, {"zero_antidiag", c.zero_antidiag},
          {"t", t}, {"d", d}, {"k", k}};
}

// Closed form of the orbit product of x = x_{t+d+k} under L_k, in terms of psi = F_{t-k,r}.
MultiPoly closed_form(const NormCase& c, int t, int d, int k) {
  const int n = 2 * t + d;
  const PsiMap psi = psi_map(c.F, t - k, n);
  const MultiPoly X = psi(MultiPoly::var(c.F, n, t + d + k));
  const MultiPoly Z = psi(MultiPoly::var(c.F, n, t - k + 1));
  const std::uint64_t q = c.quadratic ? c.F->sub_size() : c.F->size();
  const bool odd = c.F->p() != 2;
  if (!c.quadratic && c.sign == HSign::Minus && (odd || c.zero_antidiag)) return X;
  if (!c.quadratic && c.zero_antidiag) return X;
  const MultiPoly tail = Z.pow(q - 1) * X;
  if (c.quadratic && c.sign == HSign::Minus) return X.pow(q) + tail;
  return X.pow(q) - tail;
}

}  // namespace

Report norm_suite() {
  Report rep;
  // Orbit products of x_i over x_i + span_{F_{q^2}}(x_1..x_{l-1}) + a x_l, a in F_q or in the trace kernel.
  for (int qq : {4, 9}) {
    const auto [p, e] = prime_power(qq);
    const FieldPtr K = Field::make(p, e);
    const std::uint64_t q = K->sub_size();
    for (int l = 1; l <= 2; ++l) {
      const int n = l + 2;
      for (int item = 1; item <= 2; ++item)
        for (int i = l + 1; i <= n; ++i) {
          json params = {{"field", field_label(*K)}, {"l", l}, {"i", i}, {"item", item}};
          rep.run("norms.closed_form", params, [&]() -> std::optional<json> {
            std::vector<Elem> last;
            if (item == 1) {
              for (Elem a = 0; a < K->size(); ++a)
                if (K->in_subfield(a)) last.push_back(a);
            } else {
              last = K->trace_kernel();
            }
            MultiPoly brute = MultiPoly::constant(K, n, 1);
            const std::uint64_t prefix = ipow(K->size(), l - 1);
            for (std::uint64_t code = 0; code < prefix; ++code) {
              std::vector<Elem> c(n, 0);
              std::uint64_t v = code;
              for (int j = 0; j < l - 1; ++j, v /= K->size()) c[j] = static_cast<Elem>(v % K->size());
              c[i - 1] = 1;
              for (Elem a : last) {
                c[l - 1] = a;
                brute *= linear_form(K, c);
              }
            }
            const PsiMap psi = psi_map(K, l - 1, n);
            const MultiPoly X = psi(MultiPoly::var(K, n, i)), Z = psi(MultiPoly::var(K, n, l));
            const MultiPoly tail = Z.pow(q - 1) * X;
            const MultiPoly closed = item == 1 ? X.pow(q) - tail : X.pow(q) + tail;
            if (closed.degree_in(i) != ipow(q, 2 * l - 1)) return json{{"degree", closed.degree_in(i)}};
            return detail::expect_eq(brute, closed);
          });
        }
    }
  }

  // L_k orbit products: degree formula, image order, closed form.
  std::vector<NormCase> cases;
  for (int qq : {4, 9}) {
    const auto [p, e] = prime_power(qq);
    const FieldPtr K = Field::make(p, e);
    cases.push_back({K, true, HSign::Plus, false});
    cases.push_back({K, true, HSign::Minus, false});
  }
  for (int qq : {2, 3, 4}) {
    const auto [p, e] = prime_power(qq);
    const FieldPtr K = Field::make(p, e);
    cases.push_back({K, false, HSign::Plus, false});
    cases.push_back({K, false, HSign::Minus, false});
    if (p == 2) cases.push_back({K, false, HSign::Minus, true});
  }
  for (const auto& c : cases)
    for (int t = 1; t <= 3; ++t)
      for (int d = 1; d <= 2; ++d)
        for (int k = 1; k <= t; ++k) {
          const std::uint64_t q = c.quadratic ? c.F->sub_size() : c.F->size();
          const std::uint64_t bound =
              h_subgroup_bound(c.sign, c.quadratic, c.F->p() != 2, c.zero_antidiag, q, t, k);
          if (bound > caps().orbit) {
            rep.skip("norms.Lk_orbit", case_params(c, t, d, k), "orbit above the orbit cap");
            continue;
          }
          rep.run("norms.Lk_orbit", case_params(c, t, d, k), [&]() -> std::optional<json> {
            const int n = 2 * t + d, j = t + d + k;
            const auto gens = detail::hpm_generators(c.F, c.quadratic, c.sign, t, d, k, c.zero_antidiag);
            std::vector<Matrix> blocks;
            for (const auto& g : gens) blocks.push_back(g.block(0, 0, j, j));
            const std::size_t image = blocks.empty() ? 1 : closure(c.F, j, blocks, caps().enumeration).size();
            const MultiPoly N = orbit_product(c.F, n, gens, j);
            const std::uint64_t deg = N.degree_in(j);
            if (deg != bound || image != bound)
              return json{{"degree", deg}, {"image_order", image}, {"bound", bound}};
            return detail::expect_eq(closed_form(c, t, d, k), N);
          });
        }
  return rep;
}

Report cpm_scan_suite() {
  Report rep;
  struct ScanCase {
    int q;
    bool quadratic;
  };
  for (const ScanCase sc : {ScanCase{2, false}, ScanCase{3, false}, ScanCase{4, false}, ScanCase{4, true}}) {
    const auto [p, e] = prime_power(sc.q);
    const FieldPtr K = Field::make(p, e);
    const Field& F = *K;
    const std::uint64_t r = F.size();
    for (HSign sign : {HSign::Plus, HSign::Minus})
      for (int t = 1; t <= 3; ++t) {
        json params = {{"field", field_label(F)}, {"over", sc.quadratic ? "F_{q^2}" : "F_q"},
                       {"sign", sign == HSign::Plus ? "+" : "-"}, {"t", t}};
        rep.run("cpm.scan", params, [&]() -> std::optional<json> {
          const int cells = t * t;
          std::uint64_t total = ipow(r, cells), count = 0;
          std::vector<std::set<Elem>> seen(cells);
          std::vector<Elem> c(cells);
          for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t v = code;
            for (int x = 0; x < cells; ++x, v /= r) c[x] = static_cast<Elem>(v % r);
            bool ok = true;
            for (int i = 0; i < t && ok; ++i)
              for (int j = 0; j < t && ok; ++j) {
                const Elem b = sc.quadratic ? F.conj(c[(t - 1 - j) * t + (t - 1 - i)]) : c[(t - 1 - j) * t + (t - 1 - i)];
                ok = c[i * t + j] == (sign == HSign::Plus ? b : F.neg(b));
              }
            if (!ok) continue;
            ++count;
            for (int x = 0; x < cells; ++x) seen[x].insert(c[x]);
          }
          // Expected value sets: off the antidiagonal everything; on it F_q / trace kernel / {0} / all.
          std::set<Elem> all, anti;
          for (Elem a = 0; a < r; ++a) all.insert(a);
          if (sc.quadratic) {
            for (Elem a = 0; a < r; ++a)
              if (sign == HSign::Plus ? F.in_subfield(a) : F.add(a, F.conj(a)) == 0) anti.insert(a);
          } else if (sign == HSign::Plus || p == 2) {
            anti = all;
          } else {
            anti = {0};
          }
          for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) {
              const auto& want = i + j == t - 1 ? anti : all;
              if (seen[i * t + j] != want)
                return json{{"position", {i + 1, j + 1}}, {"values", seen[i * t + j]}, {"expected", want}};
            }
          const std::uint64_t want_count = ipow(r, t * (t - 1) / 2) * ipow(anti.size(), t);
          if (count != want_count) return json{{"count", count}, {"expected", want_count}};
          return std::nullopt;
        });
      }
  }
  return rep;
}

}  // namespace sylow
