#include "sylow/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "sylow/caps.hpp"

namespace sylow {

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

namespace {

void sort_desc(std::vector<Term>& t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return grevlex_greater(a.m, b.m); });
}

}  // namespace

MultiPoly::MultiPoly(FieldPtr ctx, int n) : ctx_(std::move(ctx)), n_(n) {
  if (n < 0 || n > kMaxVars) throw Error(Errc::DimensionMismatch, "variable count out of range");
}

MultiPoly MultiPoly::constant(FieldPtr ctx, int n, Elem c) {
  MultiPoly f(std::move(ctx), n);
  if (c != 0) f.terms_.push_back({Monomial{}, c});
  return f;
}

MultiPoly MultiPoly::var(FieldPtr ctx, int n, int i) {
  if (i < 1 || i > n) throw Error(Errc::DimensionMismatch, "variable index out of range");
  MultiPoly f(std::move(ctx), n);
  Monomial m;
  m.e[i - 1] = 1;
  f.terms_.push_back({m, 1});
  return f;
}

MultiPoly MultiPoly::monomial(FieldPtr ctx, int n, const std::vector<std::uint32_t>& exps, Elem c) {
  if (static_cast<int>(exps.size()) > n) throw Error(Errc::DimensionMismatch, "too many exponents");
  MultiPoly f(std::move(ctx), n);
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.e[i] = exps[i];
  if (c != 0) f.terms_.push_back({m, c});
  return f;
}

MultiPoly MultiPoly::from_terms(FieldPtr ctx, int n, std::vector<Term> terms) {
  MultiPoly f(ctx, n);
  sort_desc(terms);
  const Field& F = *ctx;
  for (const auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().m == t.m) {
      f.terms_.back().c = F.add(f.terms_.back().c, t.c);
      if (f.terms_.back().c == 0) f.terms_.pop_back();
    } else if (t.c != 0) {
      f.terms_.push_back(t);
    }
  }
  return f;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!ctx_ || !o.ctx_ || !same_field(*ctx_, *o.ctx_) || n_ != o.n_)
    throw Error(Errc::ContextMismatch, "polynomials over different rings");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  const Field& F = *ctx_;
  MultiPoly out(ctx_, n_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = o.terms_[j];
    if (a.m == b.m) {
      Elem c = F.add(a.c, b.c);
      if (c != 0) out.terms_.push_back({a.m, c});
      ++i;
      ++j;
    } else if (grevlex_greater(a.m, b.m)) {
      out.terms_.push_back(a);
      ++i;
    } else {
      out.terms_.push_back(b);
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& t : out.terms_) t.c = ctx_->neg(t.c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  if (terms_.size() * o.terms_.size() >= 20000) return mul_parallel(*this, o);
  return mul_serial(*this, o);
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

MultiPoly MultiPoly::scaled(Elem c) const {
  MultiPoly out(ctx_, n_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.c = ctx_->mul(t.c, c);
  return out;
}

MultiPoly MultiPoly::frobenius_power(unsigned k) const {
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < k; ++i) scale *= static_cast<std::uint64_t>(ctx_->p());
  MultiPoly out(*this);
  for (auto& t : out.terms_) {
    for (int v = 0; v < kMaxVars; ++v) {
      std::uint64_t e = t.m.e[v] * scale;
      if (e > caps().exponent) throw Error(Errc::ExponentOverflow, "exponent above cap in Frobenius power");
      t.m.e[v] = static_cast<std::uint32_t>(e);
    }
    t.c = ctx_->frobenius(t.c, k);
  }
  // Scaling all exponents by the same factor preserves grevlex order.
  return out;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
  MultiPoly result = constant(ctx_, n_, 1);
  if (e == 0) return result;
  if (terms_.size() == 1) {
    const Term& t = terms_[0];
    Monomial m;
    for (int v = 0; v < kMaxVars; ++v) {
      std::uint64_t x = static_cast<std::uint64_t>(t.m.e[v]) * e;
      if (x > caps().exponent) throw Error(Errc::ExponentOverflow, "exponent above cap in power");
      m.e[v] = static_cast<std::uint32_t>(x);
    }
    MultiPoly out(ctx_, n_);
    out.terms_.push_back({m, ctx_->pow(t.c, e)});
    return out;
  }
  const std::uint64_t p = static_cast<std::uint64_t>(ctx_->p());
  unsigned k = 0;
  bool first = true;
  while (e > 0) {
    std::uint64_t d = e % p;
    e /= p;
    if (d > 0) {
      MultiPoly base = frobenius_power(k);
      for (std::uint64_t i = 0; i < d; ++i) {
        if (first) {
          result = base;
          first = false;
        } else {
          result = result * base;
        }
      }
    }
    ++k;
  }
  return result;
}

std::uint64_t MultiPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

std::uint32_t MultiPoly::degree_in(int i) const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "degree of the zero polynomial");
  if (i < 1 || i > n_) throw Error(Errc::DimensionMismatch, "variable index out of range");
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.e[i - 1]);
  return d;
}

int MultiPoly::max_var() const {
  int mv = 0;
  for (const auto& t : terms_)
    for (int v = n_; v > mv; --v)
      if (t.m.e[v - 1] != 0) {
        mv = v;
        break;
      }
  return mv;
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.m.degree() != terms_.front().m.degree()) return false;
  return true;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading monomial of the zero polynomial");
  return terms_.front().m;
}

Elem MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of the zero polynomial");
  return terms_.front().c;
}

Elem MultiPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grevlex_greater(t.m, x); });
  if (it != terms_.end() && it->m == m) return it->c;
  return 0;
}

MultiPoly MultiPoly::extended(int n2) const {
  if (n2 < n_) throw Error(Errc::DimensionMismatch, "cannot shrink the ring");
  MultiPoly out(*this);
  out.n_ = n2;
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << ctx_->to_string(t.c);
    for (int v = 0; v < n_; ++v) {
      if (t.m.e[v] == 0) continue;
      os << "*x" << (v + 1);
      if (t.m.e[v] != 1) os << '^' << t.m.e[v];
    }
  }
  return os.str();
}

nlohmann::json MultiPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : terms_) {
    nlohmann::json ex = nlohmann::json::array();
    for (int v = 0; v < n_; ++v) ex.push_back(t.m.e[v]);
    arr.push_back({ex, ctx_->coeffs(t.c)});
  }
  return arr;
}

AlgebraMap identity_map(const FieldPtr& ctx, int n) {
  AlgebraMap m;
  for (int i = 1; i <= n; ++i) m.images.push_back(MultiPoly::var(ctx, n, i));
  return m;
}

MultiPoly substitute(const MultiPoly& f, const AlgebraMap& map) {
  if (static_cast<int>(map.images.size()) != f.nvars())
    throw Error(Errc::DimensionMismatch, "map arity differs from the variable count");
  if (map.images.empty()) return f;
  const FieldPtr& ctx = map.images[0].ctx();
  const int n2 = map.images[0].nvars();
  for (const auto& im : map.images)
    if (!same_field(im.field(), *ctx) || im.nvars() != n2 || !same_field(im.field(), f.field()))
      throw Error(Errc::ContextMismatch, "map images over different rings");
  const Field& F = *ctx;
  const int n = f.nvars();

  // Images that are a plain variable x_k are folded into a monomial shift.
  std::vector<int> plain(n, -1);
  for (int i = 0; i < n; ++i) {
    const auto& t = map.images[i].terms();
    if (t.size() == 1 && t[0].c == 1 && t[0].m.degree() == 1)
      for (int k = 0; k < n2; ++k)
        if (t[0].m.e[k] == 1) plain[i] = k;
  }

  struct PowKey {
    int var;
    std::uint32_t e;
    bool operator==(const PowKey& o) const { return var == o.var && e == o.e; }
  };
  struct PowHash {
    std::size_t operator()(const PowKey& k) const { return std::hash<std::uint64_t>()((std::uint64_t(k.e) << 8) | k.var); }
  };
  std::unordered_map<PowKey, MultiPoly, PowHash> cache;
  auto power = [&](int v, std::uint32_t e) -> const MultiPoly& {
    PowKey key{v, e};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, map.images[v].pow(e)).first->second;
  };

  std::unordered_map<Monomial, Elem, MonomialHash> acc;
  acc.reserve(f.size() * 2);
  for (const auto& t : f.terms()) {
    Monomial shift;
    MultiPoly prod;
    bool have = false;
    bool zero = false;
    for (int v = 0; v < n && !zero; ++v) {
      std::uint32_t e = t.m.e[v];
      if (e == 0) continue;
      if (plain[v] >= 0) {
        std::uint64_t x = std::uint64_t(shift.e[plain[v]]) + e;
        if (x > caps().exponent) throw Error(Errc::ExponentOverflow, "exponent above cap in substitution");
        shift.e[plain[v]] = static_cast<std::uint32_t>(x);
        continue;
      }
      const MultiPoly& pw = power(v, e);
      if (pw.is_zero()) {
        zero = true;
        break;
      }
      prod = have ? prod * pw : pw;
      have = true;
    }
    if (zero) continue;
    if (!have) {
      Elem& slot = acc[shift];
      slot = F.add(slot, t.c);
      continue;
    }
    for (const auto& u : prod.terms()) {
      Monomial m = u.m;
      for (int k = 0; k < n2; ++k) {
        std::uint64_t x = std::uint64_t(m.e[k]) + shift.e[k];
        if (x > caps().exponent) throw Error(Errc::ExponentOverflow, "exponent above cap in substitution");
        m.e[k] = static_cast<std::uint32_t>(x);
      }
      Elem& slot = acc[m];
      slot = F.add(slot, F.mul(u.c, t.c));
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, c});
  return MultiPoly::from_terms(ctx, n2, std::move(terms));
}

MultiPoly linear_form(const FieldPtr& ctx, const std::vector<Elem>& c) {
  int n = static_cast<int>(c.size());
  std::vector<Term> terms;
  for (int j = 0; j < n; ++j)
    if (c[j] != 0) {
      Monomial m;
      m.e[j] = 1;
      terms.push_back({m, c[j]});
    }
  return MultiPoly::from_terms(ctx, n, std::move(terms));
}

MultiPoly act(const Matrix& M, const MultiPoly& f) {
  if (M.rows() != f.nvars() || M.cols() != f.nvars())
    throw Error(Errc::DimensionMismatch, "matrix size differs from the variable count");
  AlgebraMap map;
  int n = f.nvars();
  for (int i = 0; i < n; ++i) {
    std::vector<Elem> row(n);
    for (int j = 0; j < n; ++j) row[j] = M.at(i, j);
    map.images.push_back(linear_form(M.ctx(), row));
  }
  return substitute(f, map);
}

std::vector<Elem> act_linear(const Matrix& M, const std::vector<Elem>& c) {
  const Field& F = M.field();
  int n = M.rows();
  std::vector<Elem> out(n, 0);
  for (int i = 0; i < n; ++i) {
    if (c[i] == 0) continue;
    for (int j = 0; j < n; ++j) out[j] = F.add(out[j], F.mul(c[i], M.at(i, j)));
  }
  return out;
}

}  // namespace sylow
