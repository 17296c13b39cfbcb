#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sylow/errors.hpp"

namespace sylow {

// An element of GF(p^s), encoded as sum c_i p^i over its power-basis coordinates
// c_0, ..., c_{s-1}. Code 0 is zero and code 1 is one.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static FieldPtr make(int p, int s);

  int p() const { return p_; }
  int s() const { return s_; }
  std::uint32_t size() const { return r_; }
  // Modulus coefficients, low degree first, monic of length s+1.
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  // Image of an integer in the prime field.
  Elem from_int(long long v) const;
  // Element with the given coordinates (low degree first); missing entries are zero.
  Elem from_coeffs(const std::vector<int>& c) const;
  std::vector<int> coeffs(Elem a) const;
  // The class of t in GF(p)[t]/(modulus), i.e. the power-basis generator.
  Elem gen() const { return s_ > 1 ? static_cast<Elem>(p_) : 1; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * r_ + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  // a^(p^k).
  Elem frobenius(Elem a, unsigned k) const;
  bool is_quadratic_extension() const { return s_ % 2 == 0; }
  // a^q with q = p^(s/2). Throws NotAQuadraticExtension for odd s.
  Elem conj(Elem a) const;
  // Cardinality q of the subfield fixed by conj.
  std::uint32_t sub_size() const;
  bool in_subfield(Elem a) const { return conj(a) == a; }
  // All a with a + conj(a) = 0, sorted by code.
  std::vector<Elem> trace_kernel() const;
  // c - conj(c) for the smallest c (by code) outside the subfield.
  Elem trace_kernel_basis() const;
  // Smallest c (by code) with c + conj(c) = 1.
  Elem half_trace_unit() const;

  bool is_prime_field() const { return s_ == 1; }
  std::string to_json_string(Elem a) const;
  std::string to_string(Elem a) const;

 private:
  Field(int p, int s, std::vector<int> modulus);
  Elem add_slow(Elem a, Elem b) const;
  Elem mul_slow(Elem a, Elem b) const;

  int p_;
  int s_;
  std::uint32_t r_;
  std::vector<int> modulus_;
  std::vector<Elem> add_table_;
  std::vector<Elem> neg_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> frob_;
};

bool same_field(const Field& a, const Field& b);
bool is_prime(long long n);
// Returns (p, e) with q = p^e, or throws NotPrime if q is not a prime power.
std::pair<int, int> prime_power(long long q);

// Checked element wrapper for the public arithmetic surface.
struct FieldElement {
  FieldPtr ctx;
  Elem v = 0;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  bool operator==(const FieldElement& o) const;
};

enum class ArithKind { Add, Sub, Mul, Div };
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithKind kind);
FieldElement frobenius(const FieldElement& a, unsigned k);
FieldElement conjugate(const FieldElement& a);
std::vector<FieldElement> trace_kernel(const FieldPtr& ctx);

}  // namespace sylow
