#include "sylow/groups.hpp"

#include <algorithm>
#include <unordered_set>

#include "sylow/caps.hpp"

namespace sylow {

const char* family_name(Family f) {
  switch (f) {
    case Family::GuEven: return "gu-even";
    case Family::GuOdd: return "gu-odd";
    case Family::Sp: return "sp";
    case Family::OPlus: return "o-plus";
    case Family::OMinus: return "o-minus";
    case Family::OOdd: return "o-odd";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : all_families())
    if (s == family_name(f)) return f;
  throw Error(Errc::ConfigInvalid, "unknown family: " + s);
}

std::vector<Family> all_families() {
  return {Family::GuEven, Family::GuOdd, Family::Sp, Family::OPlus, Family::OMinus, Family::OOdd};
}

bool GroupSpec::orthogonal() const {
  return family == Family::OPlus || family == Family::OMinus || family == Family::OOdd;
}

bool GroupSpec::has_descent() const {
  return p == 2 && (family == Family::OPlus || family == Family::OMinus);
}

std::string GroupSpec::label() const {
  return std::string(family_name(family)) + "(m=" + std::to_string(m) + ",q=" + std::to_string(q) + ")";
}

GroupSpec make_spec(Family family, int m, int q) {
  if (m < 1) throw Error(Errc::InvalidSpec, "m must be at least 1");
  auto [p, e] = prime_power(q);
  GroupSpec s;
  s.family = family;
  s.m = m;
  s.q = q;
  s.p = p;
  s.e = e;
  switch (family) {
    case Family::GuEven: s.n = 2 * m; s.nblk = m - 1; s.l = 2; s.eps = 1; s.hermitian = true; break;
    case Family::GuOdd: s.n = 2 * m + 1; s.nblk = m; s.l = 1; s.eps = 1; s.hermitian = true; break;
    case Family::Sp: s.n = 2 * m; s.nblk = m - 1; s.l = 2; s.eps = -1; break;
    case Family::OPlus: s.n = 2 * m; s.nblk = m - 1; s.l = 2; s.eps = 1; break;
    case Family::OMinus: s.n = 2 * m + 2; s.nblk = m; s.l = 2; s.eps = 1; break;
    case Family::OOdd: s.n = 2 * m + 1; s.nblk = m; s.l = 1; s.eps = 1; break;
  }
  if (s.n > kMaxVars - 2) throw Error(Errc::InvalidSpec, "matrix size too large for this build");
  s.field = Field::make(p, s.hermitian ? 2 * e : e);
  return s;
}

Elem irreducible_quadratic_a(const Field& F, bool subfield) {
  for (Elem a = 0; a < F.size(); ++a) {
    if (subfield && !F.in_subfield(a)) continue;
    bool root = false;
    for (Elem x = 0; x < F.size() && !root; ++x) {
      if (subfield && !F.in_subfield(x)) continue;
      root = F.add(F.add(F.mul(x, x), x), a) == 0;
    }
    if (!root) return a;
  }
  throw Error(Errc::InvalidSpec, "no irreducible quadratic X^2+X+a");
}

FormData form_of(const GroupSpec& spec) {
  const FieldPtr& K = spec.field;
  const Field& F = *K;
  FormData fd;
  fd.X1 = Matrix::antidiag(K, spec.nblk);
  switch (spec.family) {
    case Family::GuEven:
    case Family::OPlus:
      fd.X2 = Matrix::antidiag(K, 2);
      break;
    case Family::GuOdd:
      fd.X2 = Matrix::identity(K, 1);
      break;
    case Family::Sp:
      fd.X2 = Matrix::from_ints(K, {{0, 1}, {-1, 0}});
      break;
    case Family::OOdd:
      fd.X2 = Matrix::from_ints(K, {{spec.odd_char() ? 2 : 0}});
      break;
    case Family::OMinus: {
      Elem a = irreducible_quadratic_a(F);
      fd.a = a;
      if (spec.odd_char()) {
        fd.X2 = Matrix(K, 2, 2);
        fd.X2.at(0, 0) = F.from_int(2);
        fd.X2.at(0, 1) = 1;
        fd.X2.at(1, 0) = 1;
        fd.X2.at(1, 1) = F.add(a, a);
      } else {
        fd.X2 = Matrix::antidiag(K, 2);
      }
      break;
    }
  }
  const int n = spec.n, nb = spec.nblk, l = spec.l;
  fd.X = Matrix(K, n, n);
  fd.X.set_block(0, nb + l, fd.X1);
  fd.X.set_block(nb, nb, fd.X2);
  fd.X.set_block(nb + l, 0, fd.X1.bar(spec.hermitian).transpose().scaled(F.from_int(spec.eps)));

  if (spec.orthogonal()) {
    const int m = spec.m;
    MultiPoly Q(K, n);
    for (int i = 1; i <= m; ++i) Q += MultiPoly::var(K, n, n - i + 1) * MultiPoly::var(K, n, i);
    if (spec.family == Family::OOdd) {
      MultiPoly z = MultiPoly::var(K, n, m + 1);
      Q += z * z;
    } else if (spec.family == Family::OMinus) {
      MultiPoly z1 = MultiPoly::var(K, n, m + 1), z2 = MultiPoly::var(K, n, m + 2);
      Q += z1 * z1 + z1 * z2 + (z2 * z2).scaled(*fd.a);
    }
    fd.Q = Q;
  }
  return fd;
}

ElementParams ElementParams::trivial(const GroupSpec& spec) {
  ElementParams p;
  p.A = Matrix::identity(spec.field, spec.nblk);
  p.B = Matrix(spec.field, spec.l, spec.nblk);
  p.F = Matrix::identity(spec.field, spec.l);
  p.S_lower = Matrix(spec.field, spec.nblk, spec.nblk);
  if (diag_kind(spec) != DiagKind::Forced) p.diag_free.assign(spec.nblk, 0);
  return p;
}

DiagKind diag_kind(const GroupSpec& spec) {
  if (spec.hermitian) return DiagKind::TraceKernel;
  if (spec.orthogonal()) return DiagKind::Forced;
  if (spec.eps == -1 || !spec.odd_char()) return DiagKind::Free;
  return DiagKind::Forced;
}

std::vector<Elem> diag_values(const GroupSpec& spec) {
  switch (diag_kind(spec)) {
    case DiagKind::Forced: return {};
    case DiagKind::TraceKernel: return spec.field->trace_kernel();
    case DiagKind::Free: {
      std::vector<Elem> all(spec.r());
      for (Elem a = 0; a < spec.r(); ++a) all[a] = a;
      return all;
    }
  }
  return {};
}

const char* mutation_name(FormulaMutation m) {
  switch (m) {
    case FormulaMutation::None: return "none";
    case FormulaMutation::DSign: return "D-sign";
    case FormulaMutation::DDropBar: return "D-drop-bar";
    case FormulaMutation::EDropInverse: return "E-drop-inverse";
    case FormulaMutation::EDropTranspose: return "E-drop-transpose";
    case FormulaMutation::CDropBar: return "C-drop-bar";
    case FormulaMutation::CDropTranspose: return "C-drop-transpose";
    case FormulaMutation::SFlipEps: return "S-flip-eps";
  }
  return "?";
}

std::vector<FormulaMutation> all_mutations() {
  return {FormulaMutation::DSign,         FormulaMutation::DDropBar,     FormulaMutation::EDropInverse,
          FormulaMutation::EDropTranspose, FormulaMutation::CDropBar,    FormulaMutation::CDropTranspose,
          FormulaMutation::SFlipEps};
}

Matrix complete_S(const GroupSpec& spec, const FormData& form, const Matrix& B, const Matrix& S_lower,
                  const std::vector<Elem>& diag_free, FormulaMutation mut) {
  const Field& F = *spec.field;
  const bool h = spec.hermitian;
  const int nb = spec.nblk;
  Matrix Y = -(B.transpose() * form.X2 * B.bar(h));
  Elem eps = F.from_int(mut == FormulaMutation::SFlipEps ? -spec.eps : spec.eps);
  auto cj = [&](Elem a) { return h ? F.conj(a) : a; };
  Matrix S(spec.field, nb, nb);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < i; ++j) S.at(i, j) = S_lower.at(i, j);
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) S.at(i, j) = F.sub(Y.at(i, j), F.mul(eps, cj(S.at(j, i))));

  DiagKind kind = diag_kind(spec);
  if (kind != DiagKind::Forced && static_cast<int>(diag_free.size()) != nb)
    throw Error(Errc::InconsistentParams, "one free diagonal value per slot expected");
  if (kind == DiagKind::Forced && !diag_free.empty())
    throw Error(Errc::InconsistentParams, "this family has no free diagonal");
  for (int i = 0; i < nb; ++i) {
    Elem y = Y.at(i, i);
    switch (kind) {
      case DiagKind::TraceKernel: {
        Elem k = diag_free[i];
        if (F.add(k, F.conj(k)) != 0) throw Error(Errc::InconsistentParams, "diagonal summand outside the trace kernel");
        S.at(i, i) = F.add(F.mul(F.half_trace_unit(), y), k);
        break;
      }
      case DiagKind::Free:
        if (y != 0) throw Error(Errc::HypothesisHViolated, "diagonal of B^T X2 B is not zero");
        S.at(i, i) = diag_free[i];
        break;
      case DiagKind::Forced:
        if (spec.odd_char()) {
          S.at(i, i) = F.div(y, F.from_int(2));
        } else {
          if (y != 0) throw Error(Errc::HypothesisHViolated, "diagonal of B^T X2 B is not zero");
          Elem b1 = B.at(0, i);
          Elem b2 = spec.l > 1 ? B.at(1, i) : 0;
          if (spec.family == Family::OPlus) {
            S.at(i, i) = F.mul(b1, b2);
          } else if (spec.family == Family::OMinus) {
            S.at(i, i) = F.add(F.add(F.mul(b1, b1), F.mul(b1, b2)), F.mul(*form.a, F.mul(b2, b2)));
          } else {
            S.at(i, i) = F.mul(b1, b1);
          }
        }
        break;
    }
  }
  return S;
}

Matrix element(const GroupSpec& spec, const ElementParams& params, FormulaMutation mut) {
  const int nb = spec.nblk, l = spec.l;
  if (params.A.rows() != nb || params.B.rows() != l || params.B.cols() != nb || params.F.rows() != l)
    throw Error(Errc::InconsistentParams, "parameter block shapes");
  if (!params.A.is_lower_unitriangular()) throw Error(Errc::InconsistentParams, "A is not unitriangular");
  auto fset = fblk_solutions(spec);
  if (std::find(fset.begin(), fset.end(), params.F) == fset.end())
    throw Error(Errc::InconsistentParams, "F block outside the solution set");
  return assemble(spec, form_of(spec), params, mut);
}

Matrix assemble(const GroupSpec& spec, const FormData& form, const ElementParams& params, FormulaMutation mut) {
  const int nb = spec.nblk, l = spec.l, n = spec.n;
  const bool h = spec.hermitian;
  const FieldPtr& K = spec.field;
  Matrix S = complete_S(spec, form, params.B, params.S_lower, params.diag_free, mut);

  Matrix X1b = form.X1.bar(h);
  Matrix Abar = params.A.bar(h);
  Matrix AinvT = Abar.inverse().transpose();
  Matrix left = X1b * AinvT;
  Matrix C, D, E;
  switch (mut) {
    case FormulaMutation::CDropBar: C = left * S; break;
    case FormulaMutation::CDropTranspose: C = X1b * Abar.inverse() * S.bar(h); break;
    default: C = left * S.bar(h); break;
  }
  Matrix Bpart = mut == FormulaMutation::DDropBar ? params.B : params.B.bar(h);
  D = left * Bpart.transpose() * form.X2.bar(h) * params.F;
  if (mut != FormulaMutation::DSign) D = -D;
  switch (mut) {
    case FormulaMutation::EDropInverse: E = X1b * Abar.transpose() * X1b; break;
    case FormulaMutation::EDropTranspose: E = X1b * Abar.inverse() * X1b; break;
    default: E = left * X1b; break;
  }
  Matrix N(K, n, n);
  N.set_block(0, 0, params.A);
  N.set_block(nb, 0, params.B);
  N.set_block(nb, nb, params.F);
  N.set_block(nb + l, 0, C);
  N.set_block(nb + l, nb, D);
  N.set_block(nb + l, nb + l, E);
  return N;
}

namespace {

bool preserves_middle_form(const GroupSpec& spec, const FormData& form, const Matrix& Fb) {
  if (!spec.orthogonal() || spec.odd_char()) return true;
  const FieldPtr& K = spec.field;
  const int l = spec.l;
  MultiPoly Qm(K, l);
  if (spec.family == Family::OPlus) {
    Qm = MultiPoly::var(K, 2, 1) * MultiPoly::var(K, 2, 2);
  } else if (spec.family == Family::OMinus) {
    MultiPoly z1 = MultiPoly::var(K, 2, 1), z2 = MultiPoly::var(K, 2, 2);
    Qm = z1 * z1 + z1 * z2 + (z2 * z2).scaled(*form.a);
  } else {
    MultiPoly z = MultiPoly::var(K, 1, 1);
    Qm = z * z;
  }
  return act(Fb, Qm) == Qm;
}

}  // namespace

std::vector<Matrix> fblk_form_solutions(const GroupSpec& spec) {
  FormData form = form_of(spec);
  const bool h = spec.hermitian;
  std::vector<Matrix> out;
  if (spec.l == 1) {
    out.push_back(Matrix::identity(spec.field, 1));
    return out;
  }
  for (Elem c = 0; c < spec.r(); ++c) {
    Matrix Fb = Matrix::identity(spec.field, 2);
    Fb.at(1, 0) = c;
    if (Fb.transpose() * form.X2 * Fb.bar(h) == form.X2 && preserves_middle_form(spec, form, Fb))
      out.push_back(Fb);
  }
  return out;
}

std::vector<Matrix> fblk_solutions(const GroupSpec& spec) {
  if (spec.has_descent()) return {Matrix::identity(spec.field, spec.l)};
  return fblk_form_solutions(spec);
}

Matrix descent_generator(const GroupSpec& spec) {
  if (!spec.has_descent()) throw Error(Errc::InvalidSpec, "no descent generator for " + spec.label());
  const FieldPtr& K = spec.field;
  Matrix mid = spec.family == Family::OPlus ? Matrix::antidiag(K, 2) : Matrix::from_ints(K, {{1, 1}, {0, 1}});
  return Matrix::direct_sum({Matrix::identity(K, spec.nblk), mid, Matrix::identity(K, spec.nblk)});
}

bool is_member(const GroupSpec& spec, const Matrix& M0) {
  if (M0.rows() != spec.n || M0.cols() != spec.n) throw Error(Errc::DimensionMismatch, "matrix size");
  Matrix M = M0;
  if (spec.has_descent() && !M.is_lower_unitriangular()) M = descent_generator(spec) * M;
  if (!M.is_lower_unitriangular()) return false;
  Matrix Fb = M.block(spec.nblk, spec.nblk, spec.l, spec.l);
  auto fset = fblk_solutions(spec);
  if (std::find(fset.begin(), fset.end(), Fb) == fset.end()) return false;
  FormData form = form_of(spec);
  if (M.transpose() * form.X * M.bar(spec.hermitian) != form.X) return false;
  if (form.Q && act(M, *form.Q) != *form.Q) return false;
  return true;
}

std::vector<Elem> fp_basis(const Field& F, const std::vector<Elem>& subgroup) {
  std::vector<Elem> basis;
  std::unordered_set<Elem> span{0};
  for (Elem a : subgroup) {
    if (span.count(a)) continue;
    basis.push_back(a);
    std::vector<Elem> grown;
    for (Elem s : span)
      for (int k = 0; k < F.p(); ++k) grown.push_back(F.add(s, F.mul(F.from_int(k), a)));
    span.insert(grown.begin(), grown.end());
  }
  return basis;
}

namespace {

std::vector<Elem> field_basis(const Field& F) {
  std::vector<Elem> b;
  Elem w = 1;
  for (int k = 0; k < F.s(); ++k, w *= F.p()) b.push_back(w);
  return b;
}

}  // namespace

std::vector<Matrix> unitriangular_generators(const FieldPtr& K, int n) {
  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      for (Elem b : field_basis(*K)) {
        Matrix g = Matrix::identity(K, n);
        g.at(i, j) = b;
        gens.push_back(g);
      }
  return gens;
}

std::vector<Matrix> generators(const GroupSpec& spec, bool include_descent, FormulaMutation mut) {
  const Field& F = *spec.field;
  const int nb = spec.nblk, l = spec.l;
  const auto basis = field_basis(F);
  std::vector<Matrix> gens;
  auto emit = [&](const ElementParams& p) { gens.push_back(element(spec, p, mut)); };

  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < i; ++j)
      for (Elem b : basis) {
        auto p = ElementParams::trivial(spec);
        p.A.at(i, j) = b;
        emit(p);
      }
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < nb; ++j)
      for (Elem b : basis) {
        auto p = ElementParams::trivial(spec);
        p.B.at(i, j) = b;
        emit(p);
      }
  if (l == 2) {
    std::vector<Elem> cs;
    for (const auto& Fb : fblk_solutions(spec)) cs.push_back(Fb.at(1, 0));
    for (Elem b : fp_basis(F, cs)) {
      auto p = ElementParams::trivial(spec);
      p.F.at(1, 0) = b;
      emit(p);
    }
  }
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < i; ++j)
      for (Elem b : basis) {
        auto p = ElementParams::trivial(spec);
        p.S_lower.at(i, j) = b;
        emit(p);
      }
  auto dv = diag_values(spec);
  if (!dv.empty()) {
    auto db = fp_basis(F, dv);
    for (int i = 0; i < nb; ++i)
      for (Elem b : db) {
        auto p = ElementParams::trivial(spec);
        p.diag_free[i] = b;
        emit(p);
      }
  }
  if (include_descent && spec.has_descent()) gens.push_back(descent_generator(spec));
  return gens;
}

BigInt group_order(const GroupSpec& spec) {
  BigInt q = spec.q;
  const int m = spec.m;
  BigInt base;
  switch (spec.family) {
    case Family::GuEven: base = boost::multiprecision::pow(q, 2 * m * m - m); break;
    case Family::GuOdd: base = boost::multiprecision::pow(q, 2 * m * m + m); break;
    case Family::Sp: base = boost::multiprecision::pow(q, m * m); break;
    case Family::OPlus: base = boost::multiprecision::pow(q, m * (m - 1)); break;
    case Family::OMinus: base = boost::multiprecision::pow(q, m * (m + 1)); break;
    case Family::OOdd: base = boost::multiprecision::pow(q, m * m); break;
  }
  return spec.has_descent() ? 2 * base : base;
}

BigInt parameter_count(const GroupSpec& spec) {
  BigInt r = spec.r();
  const int nb = spec.nblk;
  BigInt c = boost::multiprecision::pow(r, nb * (nb - 1) / 2);      // A
  c *= boost::multiprecision::pow(r, spec.l * nb);                  // B
  c *= fblk_solutions(spec).size();                                 // F
  c *= boost::multiprecision::pow(r, nb * (nb - 1) / 2);            // strictly lower S
  auto dv = diag_values(spec);
  if (!dv.empty()) c *= boost::multiprecision::pow(BigInt(dv.size()), nb);
  return spec.has_descent() ? 2 * c : c;
}

BigInt classical_order(const GroupSpec& spec) {
  using boost::multiprecision::pow;
  BigInt q = spec.q;
  const int m = spec.m;
  BigInt out = 1;
  switch (spec.family) {
    case Family::GuEven:
    case Family::GuOdd: {
      const int n = spec.n;
      out = pow(q, n * (n - 1) / 2);
      for (int i = 1; i <= n; ++i) out *= BigInt(pow(q, i)) + (i % 2 == 0 ? -1 : 1);
      break;
    }
    case Family::Sp:
      out = pow(q, m * m);
      for (int i = 1; i <= m; ++i) out *= pow(q, 2 * i) - 1;
      break;
    case Family::OPlus:
      out = 2 * pow(q, m * (m - 1)) * (pow(q, m) - 1);
      for (int i = 1; i <= m - 1; ++i) out *= pow(q, 2 * i) - 1;
      break;
    case Family::OMinus:
      out = 2 * pow(q, m * (m + 1)) * (pow(q, m + 1) + 1);
      for (int i = 1; i <= m; ++i) out *= pow(q, 2 * i) - 1;
      break;
    case Family::OOdd:
      out = (spec.odd_char() ? 2 : 1) * pow(q, m * m);
      for (int i = 1; i <= m; ++i) out *= pow(q, 2 * i) - 1;
      break;
  }
  return out;
}

BigInt p_part(BigInt v, int p) {
  BigInt out = 1;
  while (v != 0 && v % p == 0) {
    v /= p;
    out *= p;
  }
  return out;
}

BigInt count_S_solutions(const GroupSpec& spec, const Matrix& B) {
  using boost::multiprecision::pow;
  FormData form = form_of(spec);
  Matrix Y = -(B.transpose() * form.X2 * B.bar(spec.hermitian));
  const int nb = spec.nblk;
  BigInt q = spec.q;
  if (spec.hermitian) return pow(q, nb * (nb - 1)) * pow(q, nb);
  if (!spec.odd_char())
    for (int i = 0; i < nb; ++i)
      if (Y.at(i, i) != 0) throw Error(Errc::HypothesisHViolated, "diagonal of B^T X2 B is not zero");
  if (spec.odd_char() && spec.eps == 1) return pow(q, nb * (nb - 1) / 2);
  return pow(q, nb * (nb - 1) / 2) * pow(q, nb);
}

BigInt count_S_exhaustive(const GroupSpec& spec, const Matrix& B) {
  const Field& F = *spec.field;
  FormData form = form_of(spec);
  const bool h = spec.hermitian;
  Matrix Y = -(B.transpose() * form.X2 * B.bar(h));
  const int nb = spec.nblk;
  const Elem eps = F.from_int(spec.eps);
  long double total = 1;
  for (int i = 0; i < nb * nb; ++i) total *= spec.r();
  if (total > static_cast<long double>(caps().enumeration) * 64)
    throw Error(Errc::CapExceeded, "too many candidate S matrices");
  std::uint64_t count = 0;
  std::vector<Elem> s(nb * nb, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < nb && ok; ++i)
      for (int j = 0; j < nb && ok; ++j) {
        Elem sji = s[j * nb + i];
        ok = F.add(s[i * nb + j], F.mul(eps, h ? F.conj(sji) : sji)) == Y.at(i, j);
      }
    if (ok) ++count;
    int k = 0;
    while (k < nb * nb && ++s[k] == spec.r()) s[k++] = 0;
    if (k == nb * nb) break;
  }
  return count;
}

std::pair<Matrix, Matrix> decompose_symmetric_upper(const Matrix& S) {
  const Field& F = S.field();
  const int n = S.rows();
  Matrix Sp(S.ctx(), n, n), C(S.ctx(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Sp.at(i, j) = i >= j ? S.at(i, j) : S.at(j, i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) C.at(i, j) = F.sub(S.at(i, j), S.at(j, i));
  return {Sp, C};
}

}  // namespace sylow
