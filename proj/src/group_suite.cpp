#include <unordered_set>

#include "suite_util.hpp"
#include "sylow/caps.hpp"

namespace sylow {

using nlohmann::json;

namespace {

ElementParams random_params(const GroupSpec& spec, const std::vector<Matrix>& fset, std::mt19937_64& rng) {
  ElementParams p = ElementParams::trivial(spec);
  const Field& F = *spec.field;
  p.A = detail::random_unitriangular(spec.field, spec.nblk, rng);
  for (int i = 0; i < spec.l; ++i)
    for (int j = 0; j < spec.nblk; ++j) p.B.at(i, j) = detail::random_elem(F, rng);
  p.F = fset[rng() % fset.size()];
  for (int i = 0; i < spec.nblk; ++i)
    for (int j = 0; j < i; ++j) p.S_lower.at(i, j) = detail::random_elem(F, rng);
  const auto dv = diag_values(spec);
  for (auto& x : p.diag_free) x = dv[rng() % dv.size()];
  return p;
}

// Form check written out directly: M^T X conj(M) = X, and Q o M = Q when there is a quadratic form.
std::optional<json> form_witness(const GroupSpec& spec, const FormData& form, const Matrix& M) {
  if (M.transpose() * form.X * M.bar(spec.hermitian) != form.X) return json{{"matrix", M.to_json_string()}, {"form", "X"}};
  if (form.Q && act(M, *form.Q) != *form.Q) return json{{"matrix", M.to_json_string()}, {"form", "Q"}};
  return std::nullopt;
}

}  // namespace

Report group_suite(const GroupSpec& spec, std::uint64_t seed, FormulaMutation mut) {
  Report rep;
  const json params = spec_json(spec);
  std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dull + spec.n * 131 + spec.q);
  const FormData form = form_of(spec);
  const BigInt order = group_order(spec);

  rep.run("group.order_formula", params, [&]() -> std::optional<json> {
    if (parameter_count(spec) == order) return std::nullopt;
    return json{{"group_order", order.str()}, {"parameter_count", parameter_count(spec).str()}};
  });
  rep.run("group.sylow", params, [&]() -> std::optional<json> {
    const BigInt c = classical_order(spec);
    if (p_part(c, spec.p) == order) return std::nullopt;
    return json{{"group_order", order.str()}, {"classical_order", c.str()}, {"p_part", p_part(c, spec.p).str()}};
  });

  const auto gens = generators(spec, true, mut);
  rep.run("group.generators_members", params, [&]() -> std::optional<json> {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (!is_member(spec, gens[g])) return json{{"generator", g}, {"matrix", gens[g].to_json_string()}};
      if (auto w = form_witness(spec, form, gens[g])) return w;
    }
    return std::nullopt;
  });
  const auto fset = fblk_solutions(spec);
  rep.run("group.random_elements", params, [&]() -> std::optional<json> {
    for (int t = 0; t < 40; ++t) {
      const Matrix M = element(spec, random_params(spec, fset, rng), mut);
      if (!M.is_lower_unitriangular() || !is_member(spec, M)) return json{{"matrix", M.to_json_string()}};
      if (auto w = form_witness(spec, form, M)) return w;
    }
    return std::nullopt;
  });

  if (spec.has_descent()) {
    rep.run("group.normalizer", params, [&]() -> std::optional<json> {
      const Matrix L = descent_generator(spec);
      if (!(L * L).is_identity()) return json{{"message", "descent generator is not an involution"}};
      if (auto w = form_witness(spec, form, L)) return w;
      for (const auto& g : generators(spec, false, mut)) {
        const Matrix c = L * g * L.inverse();
        if (!c.is_lower_unitriangular() || !is_member(spec, c)) return json{{"conjugate", c.to_json_string()}};
      }
      return std::nullopt;
    });
  }

  if (order <= BigInt(caps().enumeration) && mut == FormulaMutation::None) {
    std::vector<Matrix> elems;
    rep.run("group.enumeration", params, [&]() -> std::optional<json> {
      elems = enumerate_group(spec, caps().enumeration);
      std::unordered_set<Matrix, MatrixHash> distinct(elems.begin(), elems.end());
      if (BigInt(elems.size()) != order || distinct.size() != elems.size())
        return json{{"enumerated", elems.size()}, {"distinct", distinct.size()}, {"group_order", order.str()}};
      if (enumerate_group_serial(spec, caps().enumeration) != elems)
        return json{{"message", "parallel enumeration differs from the serial one"}};
      return std::nullopt;
    });
    rep.run("group.forms", params, [&]() -> std::optional<json> {
      for (const auto& M : elems) {
        if (auto w = form_witness(spec, form, M)) return w;
        if (!is_member(spec, M)) return json{{"matrix", M.to_json_string()}, {"message", "is_member rejects"}};
      }
      return std::nullopt;
    });
    rep.run("group.closed", params, [&]() -> std::optional<json> {
      std::unordered_set<Matrix, MatrixHash> set(elems.begin(), elems.end());
      const std::size_t N = elems.size();
      const bool all_pairs = N * N <= 1u << 20;
      const std::size_t trials = all_pairs ? N * N : 20000;
      for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t a = all_pairs ? t / N : rng() % N, b = all_pairs ? t % N : rng() % N;
        const Matrix prod = elems[a] * elems[b];
        if (!set.count(prod)) return json{{"a", elems[a].to_json_string()}, {"b", elems[b].to_json_string()}};
      }
      return std::nullopt;
    });
    rep.run("group.closure", params, [&]() -> std::optional<json> {
      const auto cl = closure(spec.field, spec.n, gens, caps().enumeration);
      std::unordered_set<Matrix, MatrixHash> a(cl.begin(), cl.end()), b(elems.begin(), elems.end());
      if (a == b) return std::nullopt;
      return json{{"closure", cl.size()}, {"enumerated", elems.size()}};
    });
  } else if (mut == FormulaMutation::None) {
    rep.skip("group.enumeration", params, "group order above the enumeration cap");
  }

  const bool small_field = spec.r() <= 4;
  if (spec.nblk >= 1 && spec.nblk <= 2 && small_field) {
    rep.run("group.chi_b", params, [&]() -> std::optional<json> {
      for (int t = 0; t < 6; ++t) {
        Matrix B(spec.field, spec.l, spec.nblk);
        if (t > 0)
          for (int i = 0; i < spec.l; ++i)
            for (int j = 0; j < spec.nblk; ++j) B.at(i, j) = detail::random_elem(*spec.field, rng);
        const BigInt a = count_S_solutions(spec, B), b = count_S_exhaustive(spec, B);
        if (a != b) return json{{"B", B.to_json_string()}, {"formula", a.str()}, {"exhaustive", b.str()}};
      }
      return std::nullopt;
    });
  }
  return rep;
}

Report structure_suite(std::uint64_t seed) {
  Report rep;
  std::mt19937_64 rng(seed);
  for (int e : {1, 2}) {
    const FieldPtr F = Field::make(2, e);
    const Field& K = *F;
    for (int n = 1; n <= 3; ++n) {
      const json p = {{"field", detail::field_label(K)}, {"size", n}};
      rep.run("group.symmetric_upper_decomposition", p, [&]() -> std::optional<json> {
        const std::uint64_t total = ipow(K.size(), n * n);
        std::unordered_set<std::uint64_t> seen_pairs;
        auto code = [&](const Matrix& M) {
          std::uint64_t c = 0;
          for (Elem x : M.data()) c = c * K.size() + x;
          return c;
        };
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          std::uint64_t v = idx;
          Matrix S(F, n, n);
          for (int i = 0; i < n * n; ++i, v /= K.size()) S.at(i / n, i % n) = static_cast<Elem>(v % K.size());
          auto [Sp, C] = decompose_symmetric_upper(S);
          if (Sp + C != S || Sp.transpose() != Sp) return json{{"S", S.to_json_string()}};
          for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j)
              if (C.at(i, j) != 0) return json{{"S", S.to_json_string()}, {"C", C.to_json_string()}};
          seen_pairs.insert(code(Sp) * total + code(C));
        }
        // Symmetric times strictly upper has |F|^{n^2} pairs, so injectivity of S -> (S', C) gives uniqueness.
        if (seen_pairs.size() != total) return json{{"distinct_pairs", seen_pairs.size()}, {"matrices", total}};
        return std::nullopt;
      });
    }
  }
  // The quadratic identities behind the even-characteristic diagonal constraints.
  for (auto [pp, e] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    const FieldPtr F = Field::make(pp, e);
    const Field& K = *F;
    for (int n = 1; n <= 3; ++n) {
      const json p = {{"field", detail::field_label(K)}, {"size", n}};
      rep.run("group.quadratic_identities", p, [&]() -> std::optional<json> {
        const int nv = n + 2;
        auto a = [&](int i) { return MultiPoly::var(F, nv, i + 1); };
        const MultiPoly y1 = MultiPoly::var(F, nv, n + 1), y2 = MultiPoly::var(F, nv, n + 2);
        for (int t = 0; t < 8; ++t) {
          Matrix B(F, 2, n), S(F, n, n);
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < n; ++j) B.at(i, j) = detail::random_elem(K, rng);
          const Matrix rhs = B.transpose() * Matrix::antidiag(F, 2) * B;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) S.at(i, j) = detail::random_elem(K, rng);
          for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) S.at(i, j) = K.sub(rhs.at(i, j), S.at(j, i));
            S.at(i, i) = detail::random_elem(K, rng);
          }
          MultiPoly xsx(F, nv), lhs_i(F, nv);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) xsx += (a(i) * a(j)).scaled(S.at(i, j));
          for (int i = 0; i < n; ++i) {
            lhs_i += (a(i) * a(i)).scaled(S.at(i, i));
            for (int j = i + 1; j < n; ++j) lhs_i += (a(i) * a(j)).scaled(K.add(S.at(i, j), S.at(j, i)));
          }
          if (xsx != lhs_i) return poly_witness(lhs_i, xsx);
          if (K.p() != 2) continue;
          // S + S^T = B^T J2 B holds off the diagonal; in characteristic 2 the diagonal of B^T J2 B is 0.
          MultiPoly z1 = y1, z2 = y2, xbjy(F, nv), xcx(F, nv), diag(F, nv);
          for (int i = 0; i < n; ++i) {
            z1 += a(i).scaled(B.at(0, i));
            z2 += a(i).scaled(B.at(1, i));
            xbjy += a(i) * (y2.scaled(B.at(0, i)) + y1.scaled(B.at(1, i)));
            diag += (a(i) * a(i)).scaled(K.mul(B.at(0, i), B.at(1, i)));
            for (int j = i + 1; j < n; ++j) xcx += (a(i) * a(j)).scaled(K.add(S.at(i, j), S.at(j, i)));
          }
          const MultiPoly want = y1 * y2 + xbjy + xcx + diag;
          if (z1 * z2 != want) return poly_witness(want, z1 * z2);
        }
        return std::nullopt;
      });
    }
  }
  return rep;
}

}  // namespace sylow
