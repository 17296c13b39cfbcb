#include "sylow/families.hpp"

#include <set>

#include "sylow/caps.hpp"

namespace sylow {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

PsiMap psi_map(const FieldPtr& ctx, int l, int n) {
  if (l < 0 || l > n) throw Error(Errc::OutOfRange, "psi level outside 0..n");
  PsiMap psi;
  psi.l = l;
  psi.r = ctx->size();
  psi.map = identity_map(ctx, n);
  for (int level = 1; level <= l; ++level) {
    MultiPoly T = psi.map.images[level - 1].pow(psi.r - 1);
    for (auto& im : psi.map.images) im = im.pow(psi.r) - T * im;
  }
  return psi;
}

namespace {

MultiPoly balanced_product(std::vector<MultiPoly> v, const FieldPtr& ctx, int n) {
  if (v.empty()) return MultiPoly::constant(ctx, n, 1);
  while (v.size() > 1) {
    std::vector<MultiPoly> next;
    for (std::size_t i = 0; i + 1 < v.size(); i += 2) next.push_back(v[i] * v[i + 1]);
    if (v.size() % 2) next.push_back(v.back());
    v = std::move(next);
  }
  return v[0];
}

}  // namespace

MultiPoly subspace_product(const FieldPtr& ctx, int n, int l, int v) {
  const Field& F = *ctx;
  long double count = 1;
  for (int i = 0; i < l; ++i) count *= F.size();
  if (count > static_cast<long double>(caps().orbit)) throw Error(Errc::ExpansionTooLarge, "span too large for a direct product");
  std::vector<MultiPoly> factors;
  std::vector<Elem> coef(l, 0);
  MultiPoly X = MultiPoly::var(ctx, n, v);
  while (true) {
    std::vector<Elem> lin(n, 0);
    for (int i = 0; i < l; ++i) lin[i] = F.neg(coef[i]);
    factors.push_back(X + linear_form(ctx, lin));
    int k = 0;
    while (k < l && ++coef[k] == F.size()) coef[k++] = 0;
    if (k == l) break;
  }
  return balanced_product(std::move(factors), ctx, n);
}

bool additive_poly_recursion_check(const FieldPtr& ctx, int l, int n) {
  if (l < 1 || l + 1 > n) throw Error(Errc::OutOfRange, "need 1 <= l < n");
  PsiMap psi = psi_map(ctx, l, n);
  PsiMap prev = psi_map(ctx, l - 1, n);
  MultiPoly X = MultiPoly::var(ctx, n, l + 1);
  MultiPoly rec = prev(X).pow(psi.r) - prev.map.images[l - 1].pow(psi.r - 1) * prev(X);
  MultiPoly brute = subspace_product(ctx, n, l, l + 1);
  return rec == brute && psi(X) == brute;
}

std::vector<MultiPoly> dickson_coeffs(const FieldPtr& ctx, int n) {
  const std::uint64_t q = ctx->size();
  MultiPoly prod = subspace_product(ctx, n + 1, n, n + 1);
  std::vector<MultiPoly> out;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t qi = ipow(q, i);
    std::vector<Term> terms;
    for (const auto& t : prod.terms())
      if (t.m.e[n] == qi) {
        Term u = t;
        u.m.e[n] = 0;
        terms.push_back(u);
      }
    MultiPoly c = MultiPoly::from_terms(ctx, n, std::move(terms));
    out.push_back((n - i) % 2 ? -c : c);
  }
  return out;
}

std::string family_label(const FamilyParams& fp, const Field& F) {
  switch (fp.kind) {
    case FamilyKind::Omega: return "Omega(" + std::to_string(fp.s) + "," + std::to_string(fp.j) + ")";
    case FamilyKind::Gamma: return "Gamma(" + std::to_string(fp.s) + "," + F.to_string(fp.lambda) + ")";
    case FamilyKind::Lambda: return "Lambda(" + std::to_string(fp.s) + "," + F.to_string(fp.lambda) + ")";
  }
  return "?";
}

namespace {

MultiPoly mono2(const FieldPtr& ctx, int n, int a, std::uint64_t ea, int b, std::uint64_t eb, Elem c) {
  std::vector<std::uint32_t> e(n, 0);
  e[a - 1] += static_cast<std::uint32_t>(ea);
  e[b - 1] += static_cast<std::uint32_t>(eb);
  return MultiPoly::monomial(ctx, n, e, c);
}

MultiPoly omega(const FieldPtr& ctx, int n, int s, int j) {
  const std::uint64_t R = ipow(ctx->size(), s);
  MultiPoly out(ctx, n);
  if (s == 0) {
    if (j == -1) return out;
    for (int i = 1; i <= n / 2; ++i) out += mono2(ctx, n, n - i + 1, 1, i, 1, 1);
    return out;
  }
  Elem jj = ctx->from_int(j);
  for (int i = 1; i <= n / 2; ++i) {
    out += mono2(ctx, n, n - i + 1, R, i, 1, 1);
    out += mono2(ctx, n, n - i + 1, 1, i, R, jj);
  }
  return out;
}

}  // namespace

MultiPoly family_poly(const FieldPtr& ctx, int n, const FamilyParams& fp) {
  const Field& F = *ctx;
  if (fp.s < 0) throw Error(Errc::OutOfRange, "negative family index");
  switch (fp.kind) {
    case FamilyKind::Omega:
      if (fp.j != 1 && fp.j != -1) throw Error(Errc::OutOfRange, "j must be +1 or -1");
      return omega(ctx, n, fp.s, fp.j);
    case FamilyKind::Gamma: {
      const int c = (n + 1) / 2;
      if (c + 1 > n) throw Error(Errc::OutOfRange, "Gamma needs at least two variables");
      MultiPoly out = omega(ctx, n, fp.s, 1);
      if (fp.s == 0) return out + mono2(ctx, n, c, 2, c, 0, 1) + mono2(ctx, n, c + 1, 2, c + 1, 0, fp.lambda);
      const std::uint64_t R = ipow(F.size(), fp.s) + 1;
      const Elem two = F.from_int(2);
      return out + mono2(ctx, n, c, R, c, 0, two) + mono2(ctx, n, c + 1, R, c + 1, 0, F.mul(two, fp.lambda));
    }
    case FamilyKind::Lambda: {
      if (!F.is_quadratic_extension())
        throw Error(Errc::LambdaRequiresQuadraticExtension, "Lambda is defined over F_{q^2}");
      if (fp.s < 1) throw Error(Errc::OutOfRange, "Lambda needs s >= 1");
      const int m = n / 2;
      if (m + 1 > n) throw Error(Errc::OutOfRange, "Lambda needs at least two variables");
      const std::uint64_t Q = ipow(F.sub_size(), 2 * fp.s - 1);
      MultiPoly out(ctx, n);
      for (int i = 1; i <= m; ++i) {
        out += mono2(ctx, n, n - i + 1, Q, i, 1, 1);
        out += mono2(ctx, n, n - i + 1, 1, i, Q, 1);
      }
      return out + mono2(ctx, n, m + 1, Q + 1, m + 1, 0, fp.lambda);
    }
  }
  return MultiPoly(ctx, n);
}

FamilyShape family_shape(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::GuEven: return {spec.m - 1, 2};
    case Family::GuOdd: return {spec.m, 1};
    case Family::Sp: return {spec.m - 1, 2};
    case Family::OPlus: return {spec.m - 1, 2};
    case Family::OMinus: return {spec.m, 2};
    case Family::OOdd: return {spec.m, 1};
  }
  return {};
}

FamilyParams h_params(const GroupSpec& spec, int k) {
  if (k < 1 || k > spec.n) throw Error(Errc::OutOfRange, "h_k needs 1 <= k <= n");
  switch (spec.family) {
    case Family::GuEven: return {FamilyKind::Lambda, k, 1, 0};
    case Family::GuOdd: return {FamilyKind::Lambda, k, 1, 1};
    case Family::Sp: return {FamilyKind::Omega, k, -1, 0};
    case Family::OPlus: return {FamilyKind::Omega, k - 1, 1, 0};
    case Family::OMinus: return {FamilyKind::Gamma, k - 1, 1, *form_of(spec).a};
    case Family::OOdd: return {FamilyKind::Gamma, k - 1, 1, 0};
  }
  return {};
}

MultiPoly h_k(const GroupSpec& spec, int k) { return family_poly(spec.field, spec.n, h_params(spec, k)); }

std::uint64_t h_chain_index(const GroupSpec& spec, int k) {
  if (k < 2) throw Error(Errc::OutOfRange, "the chain starts at k = 2");
  const std::uint64_t q = spec.q;
  switch (spec.family) {
    case Family::GuEven:
    case Family::GuOdd: return ipow(q, 2 * k - 3);
    case Family::Sp: return ipow(q, k - 1);
    default: return ipow(q, k - 2);
  }
}

namespace {

std::vector<Elem> vsub(const Field& F, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.sub(a[i], b[i]);
  return out;
}

std::vector<Elem> vadd(const Field& F, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.add(a[i], b[i]);
  return out;
}

}  // namespace

Orbit orbit_of(const FieldPtr& ctx, int n, const std::vector<Matrix>& gens, int i) {
  const Field& F = *ctx;
  std::vector<Matrix> all = gens;
  for (const auto& g : gens) all.push_back(g.inverse());
  Orbit orb;
  std::vector<Elem> start(n, 0);
  start[i - 1] = 1;
  std::set<std::vector<Elem>> seen{start};
  orb.members.push_back(start);
  for (std::size_t head = 0; head < orb.members.size(); ++head) {
    for (const auto& g : all) {
      auto img = act_linear(g, orb.members[head]);
      if (seen.insert(img).second) {
        if (orb.members.size() >= caps().orbit) throw Error(Errc::OrbitCapExceeded, "orbit above the cap");
        orb.members.push_back(std::move(img));
      }
    }
  }
  // Affine test: the differences form an F_p-subspace.
  std::set<std::vector<Elem>> diffs;
  for (const auto& v : orb.members) diffs.insert(vsub(F, v, start));
  std::set<std::vector<Elem>> span{std::vector<Elem>(n, 0)};
  for (const auto& d : diffs) {
    if (span.count(d)) continue;
    orb.basis.push_back(d);
    std::vector<std::vector<Elem>> grown;
    for (const auto& s : span) {
      std::vector<Elem> cur = s;
      for (int k = 1; k < F.p(); ++k) {
        cur = vadd(F, cur, d);
        grown.push_back(cur);
      }
    }
    span.insert(grown.begin(), grown.end());
    if (span.size() > diffs.size()) break;
  }
  orb.affine = span == diffs;
  if (!orb.affine) orb.basis.clear();
  return orb;
}

MultiPoly orbit_product_direct(const FieldPtr& ctx, int n, const Orbit& orbit) {
  std::vector<MultiPoly> factors;
  for (const auto& v : orbit.members) factors.push_back(linear_form(ctx, v));
  return balanced_product(std::move(factors), ctx, n);
}

MultiPoly orbit_product_additive(const FieldPtr& ctx, int n, const Orbit& orbit) {
  if (!orbit.affine) throw Error(Errc::InvalidSpec, "orbit is not an affine subspace");
  const std::uint64_t p = ctx->p();
  std::vector<MultiPoly> tracked;
  for (const auto& w : orbit.basis) tracked.push_back(linear_form(ctx, w));
  MultiPoly target = linear_form(ctx, orbit.members[0]);
  for (std::size_t k = 0; k < tracked.size(); ++k) {
    MultiPoly factor = tracked[k].pow(p - 1);
    auto step = [&](const MultiPoly& u) { return u.pow(p) - factor * u; };
    for (std::size_t j = k + 1; j < tracked.size(); ++j) tracked[j] = step(tracked[j]);
    target = step(target);
  }
  return target.extended(n);
}

MultiPoly orbit_product(const FieldPtr& ctx, int n, const std::vector<Matrix>& gens, int i) {
  Orbit orb = orbit_of(ctx, n, gens, i);
  if (orb.affine) return orbit_product_additive(ctx, n, orb);
  return orbit_product_direct(ctx, n, orb);
}

bool orbit_closed(const std::vector<Matrix>& gens, const Orbit& orbit) {
  std::set<std::vector<Elem>> members(orbit.members.begin(), orbit.members.end());
  for (const auto& g : gens)
    for (const auto& v : orbit.members)
      if (!members.count(act_linear(g, v))) return false;
  return true;
}

GeneratorList field_generators(const GroupSpec& spec) {
  const FieldPtr& K = spec.field;
  const int n = spec.n;
  const auto [t, d] = family_shape(spec);
  GeneratorList gl;
  gl.spec = spec;
  auto g1 = generators(spec, false);
  for (int j = 1; j <= t + d; ++j) gl.norms.push_back(orbit_product(K, n, g1, j));
  std::vector<MultiPoly> hs;
  for (int k = 1; k <= t; ++k) {
    hs.push_back(h_k(spec, k));
    gl.h_defs.push_back("h_" + std::to_string(k) + " = " + family_label(h_params(spec, k), *K));
  }
  auto nlabel = [](int j) { return j == 1 ? std::string("x_1") : "N(x_" + std::to_string(j) + ")"; };

  for (int j = 1; j <= t + d; ++j) {
    gl.cc_phis.push_back(gl.norms[j - 1]);
    gl.cc_labels.push_back(nlabel(j));
  }
  if (t >= 1) {
    const MultiPoly h1 = h_k(spec, 1);
    for (int k = 1; k <= t; ++k) {
      PsiMap psi = psi_map(K, t - k, n);
      gl.cc_phis.push_back(psi(h1));
      gl.cc_labels.push_back("psi_" + std::to_string(t - k) + "(h_1)");
    }
  }

  auto append_h = [&](std::vector<MultiPoly>& v, std::vector<std::string>& lab) {
    for (int k = 1; k <= t; ++k) {
      v.push_back(hs[k - 1]);
      lab.push_back("h_" + std::to_string(k));
    }
  };

  if (!spec.has_descent()) {
    for (int j = 1; j <= t + d; ++j) {
      gl.phis.push_back(gl.norms[j - 1]);
      gl.labels.push_back(nlabel(j));
    }
    append_h(gl.phis, gl.labels);
    return gl;
  }

  for (int j = 1; j <= t + d; ++j) {
    gl.g1_phis.push_back(gl.norms[j - 1]);
    gl.g1_labels.push_back(nlabel(j));
  }
  append_h(gl.g1_phis, gl.g1_labels);

  const int m = spec.m;
  if (spec.family == Family::OPlus) {
    // t = m-1: norms of x_1..x_{m-1}, then the symmetric functions of the swapped pair.
    const MultiPoly& X = gl.norms[m - 1];
    const MultiPoly& Y = gl.norms[m];
    for (int j = 1; j <= m - 1; ++j) {
      gl.phis.push_back(gl.norms[j - 1]);
      gl.labels.push_back(nlabel(j));
    }
    gl.phis.push_back(X + Y);
    gl.labels.push_back("N(x_" + std::to_string(m) + ")+N(x_" + std::to_string(m + 1) + ")");
    gl.phis.push_back(X * Y);
    gl.labels.push_back("N(x_" + std::to_string(m) + ")*N(x_" + std::to_string(m + 1) + ")");
    append_h(gl.phis, gl.labels);
    // Alternative rendering that keeps N(x_m) as well, giving n+1 entries.
    for (int j = 1; j <= m; ++j) {
      gl.literal_phis.push_back(gl.norms[j - 1]);
      gl.literal_labels.push_back(nlabel(j));
    }
    gl.literal_phis.push_back(X + Y);
    gl.literal_labels.push_back(gl.labels[m - 1]);
    gl.literal_phis.push_back(X * Y);
    gl.literal_labels.push_back(gl.labels[m]);
    append_h(gl.literal_phis, gl.literal_labels);
  } else {
    // O-minus, t = m: L1 sends N(x_{m+1}) to N(x_{m+1}) + N(x_{m+2}) and fixes N(x_{m+2}).
    const MultiPoly& Y = gl.norms[m];
    const MultiPoly& X = gl.norms[m + 1];
    const std::string ys = "N(x_" + std::to_string(m + 1) + ")", xs = "N(x_" + std::to_string(m + 2) + ")";
    for (int j = 1; j <= m; ++j) {
      gl.phis.push_back(gl.norms[j - 1]);
      gl.labels.push_back(nlabel(j));
    }
    gl.phis.push_back(Y * Y + X * Y);
    gl.labels.push_back(ys + "^2+" + ys + "*" + xs);
    gl.phis.push_back(X);
    gl.labels.push_back(xs);
    append_h(gl.phis, gl.labels);
    // Alternative list with N(x_{m+1})^2 + N(x_m) N(x_{m+1}); not L1-invariant, kept for the report.
    for (int j = 1; j <= m; ++j) {
      gl.literal_phis.push_back(gl.norms[j - 1]);
      gl.literal_labels.push_back(nlabel(j));
    }
    gl.literal_phis.push_back(Y * Y + gl.norms[m - 1] * Y);
    gl.literal_labels.push_back(ys + "^2+N(x_" + std::to_string(m) + ")*" + ys);
    gl.literal_phis.push_back(X);
    gl.literal_labels.push_back(xs);
    append_h(gl.literal_phis, gl.literal_labels);
  }
  return gl;
}

std::uint64_t expected_norm_degree(const GroupSpec& spec, int j) {
  const std::uint64_t q = spec.q;
  const int m = spec.m;
  switch (spec.family) {
    case Family::GuEven:
      if (j <= m) return ipow(q, 2 * (j - 1));
      if (j == m + 1) return ipow(q, 2 * m - 1);
      break;
    case Family::GuOdd:
      if (j <= m + 1) return ipow(q, 2 * (j - 1));
      break;
    case Family::Sp:
    case Family::OOdd:
      if (j <= m + 1) return ipow(q, j - 1);
      break;
    case Family::OPlus:
      if (j <= m) return ipow(q, j - 1);
      if (j == m + 1) return ipow(q, m - 1);
      break;
    case Family::OMinus:
      if (j <= m + 1) return ipow(q, j - 1);
      if (j == m + 2) return ipow(q, m);
      break;
  }
  throw Error(Errc::OutOfRange, "j beyond the norm range");
}

std::uint64_t h_subgroup_bound(HSign sign, bool quadratic, bool odd, bool zero_antidiag, std::uint64_t q, int t,
                               int k) {
  if (k < 1 || k > t) throw Error(Errc::OutOfRange, "k outside 1..t");
  if (quadratic) return ipow(q, 2 * (t - k) + 1);
  if (sign == HSign::Plus) return ipow(q, t - k + 1);
  if (odd || zero_antidiag) return ipow(q, t - k);
  return ipow(q, t - k + 1);
}

std::uint64_t minimal_degree_bound(const GroupSpec& spec, int k) {
  const auto [t, d] = family_shape(spec);
  const HSign sign = spec.family == Family::Sp ? HSign::Plus : HSign::Minus;
  // In even characteristic the orthogonal X1 antidiagonal constraint forces
  // zero antidiagonal entries.
  const bool zero_antidiag = spec.orthogonal() && !spec.odd_char();
  return h_subgroup_bound(sign, spec.hermitian, spec.odd_char(), zero_antidiag, spec.q, t, k);
}

}  // namespace sylow
