#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sylow/field.hpp"
#include "sylow/matrix.hpp"

namespace sylow {

// Enough for n = 8 plus the auxiliary variables used by the Steenrod and
// quadratic-form computations.
inline constexpr int kMaxVars = 12;

struct Monomial {
  std::array<std::uint32_t, kMaxVars> e{};

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto x : m.e) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Graded reverse lexicographic order with x_1 < x_2 < ... < x_n:
// a > b iff deg a > deg b, or the degrees agree and the first nonzero entry of
// a - b (scanning from x_1) is negative.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  Elem c;
  bool operator==(const Term& o) const { return m == o.m && c == o.c; }
};

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(FieldPtr ctx, int n);

  static MultiPoly constant(FieldPtr ctx, int n, Elem c);
  // Variable x_i, 1-based.
  static MultiPoly var(FieldPtr ctx, int n, int i);
  static MultiPoly monomial(FieldPtr ctx, int n, const std::vector<std::uint32_t>& exps, Elem c = 1);
  // Canonicalizes arbitrary (possibly repeated, possibly zero) terms.
  static MultiPoly from_terms(FieldPtr ctx, int n, std::vector<Term> terms);

  const FieldPtr& ctx() const { return ctx_; }
  const Field& field() const { return *ctx_; }
  int nvars() const { return n_; }
  // Terms in decreasing grevlex order.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly scaled(Elem c) const;
  // f^e, using (sum c m)^p = sum c^p m^p on the base-p digits of e.
  MultiPoly pow(std::uint64_t e) const;
  // f^(p^k).
  MultiPoly frobenius_power(unsigned k) const;

  std::uint64_t total_degree() const;
  // Max exponent of x_i (1-based). Throws ZeroPolynomial on 0.
  std::uint32_t degree_in(int i) const;
  // Largest variable index that occurs, 0 for constants.
  int max_var() const;
  bool is_homogeneous() const;
  const Monomial& leading_monomial() const;
  Elem leading_coeff() const;
  Elem coeff(const Monomial& m) const;

  // Same polynomial viewed in a ring with more variables.
  MultiPoly extended(int n2) const;

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  friend MultiPoly mul_serial(const MultiPoly&, const MultiPoly&);
  friend MultiPoly mul_parallel(const MultiPoly&, const MultiPoly&);
  void check_compatible(const MultiPoly& o) const;

  FieldPtr ctx_;
  int n_ = 0;
  std::vector<Term> terms_;
};

// Reference product and the OpenMP product; operator* dispatches on size.
MultiPoly mul_serial(const MultiPoly& f, const MultiPoly& g);
MultiPoly mul_parallel(const MultiPoly& f, const MultiPoly& g);

struct AlgebraMap {
  std::vector<MultiPoly> images;
};

AlgebraMap identity_map(const FieldPtr& ctx, int n);
MultiPoly substitute(const MultiPoly& f, const AlgebraMap& map);
// f∘M: x_i -> sum_j M[i][j] x_j. act(M1, act(M2, f)) = act(M2*M1, f).
MultiPoly act(const Matrix& M, const MultiPoly& f);
// Image of the linear form sum_j c_j x_j under act(M, .): coefficient vector M^T c.
std::vector<Elem> act_linear(const Matrix& M, const std::vector<Elem>& c);
MultiPoly linear_form(const FieldPtr& ctx, const std::vector<Elem>& c);

}  // namespace sylow
