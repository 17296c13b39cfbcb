#include "sylow/field.hpp"

#include <algorithm>
#include <sstream>

#include "sylow/caps.hpp"

namespace sylow {

namespace {

using Upoly = std::vector<int>;  // low degree first, no trailing zeros (except the zero poly = {})

void trim(Upoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  int r = 1;
  for (int e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Remainder of a modulo b over GF(p); b nonzero.
Upoly upoly_mod(Upoly a, const Upoly& b, int p) {
  trim(a);
  int lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    int c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of idx,
// with c_0 as the most significant digit (low-degree-first lexicographic order).
Upoly monic_from_index(std::uint64_t idx, int d, int p) {
  Upoly f(d + 1, 0);
  f[d] = 1;
  for (int i = d - 1; i >= 0; --i) {
    f[i] = static_cast<int>(idx % p);
    idx /= p;
  }
  return f;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool irreducible(const Upoly& f, int p) {
  int s = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= s / 2; ++d) {
    std::uint64_t count = ipow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (upoly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> prime_power(long long q) {
  if (q < 2) throw Error(Errc::NotPrime, "q=" + std::to_string(q) + " is not a prime power");
  long long p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  long long t = q;
  while (t % p == 0) {
    t /= p;
    ++e;
  }
  if (t != 1) throw Error(Errc::NotPrime, "q=" + std::to_string(q) + " is not a prime power");
  return {static_cast<int>(p), e};
}

FieldPtr Field::make(int p, int s) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, "p=" + std::to_string(p) + " is not prime");
  if (s < 1) throw Error(Errc::InvalidSpec, "extension degree must be positive");
  long double card = 1;
  for (int i = 0; i < s; ++i) card *= p;
  if (card > static_cast<long double>(caps().field))
    throw Error(Errc::CardinalityCapExceeded,
                std::to_string(p) + "^" + std::to_string(s) + " exceeds the field cap");
  std::uint64_t count = ipow(p, s);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Upoly f = monic_from_index(idx, s, p);
    if (s == 1 || irreducible(f, p)) {
      return FieldPtr(new Field(p, s, f));
    }
  }
  throw Error(Errc::InvalidSpec, "no irreducible polynomial found");
}

Field::Field(int p, int s, std::vector<int> modulus)
    : p_(p), s_(s), r_(static_cast<std::uint32_t>(ipow(p, s))), modulus_(std::move(modulus)) {
  if (s_ == 1) modulus_ = {0, 1};  // x: the prime field is GF(p)[t]/(t)
  neg_.resize(r_);
  for (Elem a = 0; a < r_; ++a) {
    auto c = coeffs(a);
    for (auto& x : c) x = (p_ - x) % p_;
    neg_[a] = from_coeffs(c);
  }
  if (p_ != 2 && r_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(r_) * r_);
    for (Elem a = 0; a < r_; ++a)
      for (Elem b = 0; b < r_; ++b) add_table_[a * r_ + b] = add_slow(a, b);
  }
  // Primitive element by search, then log/exp tables.
  Elem g = 0;
  for (Elem cand = (r_ == 2 ? 1 : 2); cand < r_ && g == 0; ++cand) {
    Elem x = cand;
    std::uint32_t order = 1;
    while (x != 1) {
      x = mul_slow(x, cand);
      ++order;
    }
    if (order == r_ - 1) g = cand;
  }
  if (r_ == 2) g = 1;
  exp_.resize(2 * static_cast<std::size_t>(r_));
  log_.assign(r_, 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i + 1 < r_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul_slow(x, g);
  }
  for (std::uint32_t i = r_ - 1; i < 2 * r_; ++i) exp_[i] = exp_[i - (r_ - 1)];
  frob_.resize(r_);
  for (Elem a = 0; a < r_; ++a) frob_[a] = pow(a, p_);
}

Elem Field::from_int(long long v) const {
  long long m = v % p_;
  if (m < 0) m += p_;
  return static_cast<Elem>(m);
}

Elem Field::from_coeffs(const std::vector<int>& c) const {
  Elem code = 0;
  Elem w = 1;
  for (int i = 0; i < s_; ++i) {
    int ci = i < static_cast<int>(c.size()) ? ((c[i] % p_) + p_) % p_ : 0;
    code += static_cast<Elem>(ci) * w;
    w *= p_;
  }
  return code;
}

std::vector<int> Field::coeffs(Elem a) const {
  std::vector<int> c(s_);
  for (int i = 0; i < s_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return c;
}

Elem Field::add_slow(Elem a, Elem b) const {
  Elem code = 0;
  Elem w = 1;
  for (int i = 0; i < s_; ++i) {
    code += static_cast<Elem>((a % p_ + b % p_) % p_) * w;
    a /= p_;
    b /= p_;
    w *= p_;
  }
  return code;
}

Elem Field::mul_slow(Elem a, Elem b) const {
  auto ca = coeffs(a), cb = coeffs(b);
  Upoly prod(2 * s_, 0);
  for (int i = 0; i < s_; ++i)
    for (int j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  return from_coeffs(upoly_mod(prod, modulus_, p_));
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return exp_[(r_ - 1 - log_[a]) % (r_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (exp_.empty()) {
    Elem r = 1;
    for (; e > 0; e >>= 1, a = mul_slow(a, a))
      if (e & 1) r = mul_slow(r, a);
    return r;
  }
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (r_ - 1))) % (r_ - 1)];
}

Elem Field::frobenius(Elem a, unsigned k) const {
  k %= static_cast<unsigned>(s_);
  while (k-- > 0) a = frob_[a];
  return a;
}

Elem Field::conj(Elem a) const {
  if (s_ % 2 != 0) throw Error(Errc::NotAQuadraticExtension, "conjugation needs even extension degree");
  return frobenius(a, static_cast<unsigned>(s_ / 2));
}

std::uint32_t Field::sub_size() const {
  if (s_ % 2 != 0) throw Error(Errc::NotAQuadraticExtension, "no quadratic subfield");
  return static_cast<std::uint32_t>(ipow(p_, s_ / 2));
}

std::vector<Elem> Field::trace_kernel() const {
  if (s_ % 2 != 0) throw Error(Errc::NotAQuadraticExtension, "trace kernel needs even extension degree");
  std::vector<Elem> out;
  for (Elem a = 0; a < r_; ++a)
    if (add(a, conj(a)) == 0) out.push_back(a);
  return out;
}

Elem Field::trace_kernel_basis() const {
  for (Elem c = 0; c < r_; ++c)
    if (conj(c) != c) return sub(c, conj(c));
  throw Error(Errc::NotAQuadraticExtension, "no element outside the subfield");
}

Elem Field::half_trace_unit() const {
  for (Elem c = 0; c < r_; ++c)
    if (add(c, conj(c)) == 1) return c;
  throw Error(Errc::NotAQuadraticExtension, "trace map is not onto");
}

std::string Field::to_json_string(Elem a) const {
  std::ostringstream os;
  os << '[';
  auto c = coeffs(a);
  for (int i = 0; i < s_; ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

std::string Field::to_string(Elem a) const {
  if (s_ == 1) return std::to_string(a);
  return to_json_string(a);
}

bool same_field(const Field& a, const Field& b) {
  return &a == &b || (a.p() == b.p() && a.s() == b.s());
}

namespace {

const Field& checked(const FieldElement& a, const FieldElement& b) {
  if (!a.ctx || !b.ctx || !same_field(*a.ctx, *b.ctx))
    throw Error(Errc::FieldMismatch, "operands belong to different fields");
  return *a.ctx;
}

}  // namespace

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithKind kind) {
  const Field& F = checked(a, b);
  switch (kind) {
    case ArithKind::Add: return {a.ctx, F.add(a.v, b.v)};
    case ArithKind::Sub: return {a.ctx, F.sub(a.v, b.v)};
    case ArithKind::Mul: return {a.ctx, F.mul(a.v, b.v)};
    case ArithKind::Div: return {a.ctx, F.div(a.v, b.v)};
  }
  return {};
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return arith(*this, o, ArithKind::Add); }
FieldElement FieldElement::operator-(const FieldElement& o) const { return arith(*this, o, ArithKind::Sub); }
FieldElement FieldElement::operator*(const FieldElement& o) const { return arith(*this, o, ArithKind::Mul); }
FieldElement FieldElement::operator/(const FieldElement& o) const { return arith(*this, o, ArithKind::Div); }
bool FieldElement::operator==(const FieldElement& o) const {
  return ctx && o.ctx && same_field(*ctx, *o.ctx) && v == o.v;
}

FieldElement frobenius(const FieldElement& a, unsigned k) { return {a.ctx, a.ctx->frobenius(a.v, k)}; }
FieldElement conjugate(const FieldElement& a) { return {a.ctx, a.ctx->conj(a.v)}; }

std::vector<FieldElement> trace_kernel(const FieldPtr& ctx) {
  std::vector<FieldElement> out;
  for (Elem a : ctx->trace_kernel()) out.push_back({ctx, a});
  return out;
}

}  // namespace sylow
