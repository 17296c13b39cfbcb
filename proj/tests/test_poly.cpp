#include <gtest/gtest.h>

#include <random>

#include "sylow/families.hpp"
#include "sylow/poly.hpp"

using namespace sylow;

namespace {

// Independent grevlex comparator for x_1 < ... < x_n: degree first, then the smallest variable
// decides and the smaller exponent there wins.
bool grevlex_ref(const Monomial& a, const Monomial& b, int n) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (int i = 0; i < n; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

Monomial random_monomial(std::mt19937_64& rng, int n, int maxe) {
  Monomial m;
  for (int i = 0; i < n; ++i) m.e[i] = rng() % (maxe + 1);
  return m;
}

MultiPoly random_poly(const FieldPtr& F, int n, int terms, int maxe, std::mt19937_64& rng) {
  std::vector<Term> t;
  for (int i = 0; i < terms; ++i) t.push_back({random_monomial(rng, n, maxe), static_cast<Elem>(rng() % F->size())});
  return MultiPoly::from_terms(F, n, t);
}

MultiPoly X(const FieldPtr& F, int n, int i) { return MultiPoly::var(F, n, i); }

}  // namespace

TEST(Poly, GrevlexMatchesReference) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 20000; ++it) {
    const int n = 1 + rng() % 8;
    const Monomial a = random_monomial(rng, n, 3), b = random_monomial(rng, n, 3);
    ASSERT_EQ(grevlex_greater(a, b), grevlex_ref(a, b, n));
  }
}

TEST(Poly, LeadingMonomialExamples) {
  const FieldPtr F = Field::make(2, 1);
  const MultiPoly f = X(F, 3, 2) * X(F, 3, 2) + X(F, 3, 1) * X(F, 3, 3);
  EXPECT_EQ(f.leading_monomial(), (X(F, 3, 2) * X(F, 3, 2)).leading_monomial());
  const MultiPoly g = X(F, 3, 3) * X(F, 3, 3) + X(F, 3, 1) * X(F, 3, 2) * X(F, 3, 3);
  EXPECT_EQ(g.leading_monomial().degree(), 3u);
  // Every pair of degree-2 monomials in 3 variables against the reference.
  std::vector<Monomial> deg2;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Monomial m;
      m.e[i] += 1;
      m.e[j] += 1;
      deg2.push_back(m);
    }
  for (const auto& a : deg2)
    for (const auto& b : deg2) EXPECT_EQ(grevlex_greater(a, b), grevlex_ref(a, b, 3));
}

TEST(Poly, SpecExamples) {
  const FieldPtr F2 = Field::make(2, 1), F3 = Field::make(3, 1);
  EXPECT_EQ((X(F2, 2, 1) + X(F2, 2, 2)).pow(2), X(F2, 2, 1).pow(2) + X(F2, 2, 2).pow(2));
  EXPECT_EQ((X(F3, 2, 1) + X(F3, 2, 2)) * (X(F3, 2, 1) - X(F3, 2, 2)), X(F3, 2, 1).pow(2) - X(F3, 2, 2).pow(2));
  const MultiPoly h = X(F3, 2, 1).pow(3) * X(F3, 2, 2) + X(F3, 2, 2).pow(5);
  EXPECT_EQ(h.degree_in(2), 5u);
  EXPECT_EQ(MultiPoly::constant(F3, 2, 2).degree_in(1), 0u);
  EXPECT_THROW(MultiPoly(F3, 2).degree_in(1), Error);
  // x_2^2 under x_2 -> x_2 + x_1 over GF(2).
  AlgebraMap map = identity_map(F2, 2);
  map.images[1] = X(F2, 2, 2) + X(F2, 2, 1);
  EXPECT_EQ(substitute(X(F2, 2, 2).pow(2), map), X(F2, 2, 2).pow(2) + X(F2, 2, 1).pow(2));
  const Matrix J = Matrix::antidiag(F2, 2);
  EXPECT_EQ(act(J, X(F2, 2, 1) * X(F2, 2, 2)), X(F2, 2, 1) * X(F2, 2, 2));
}

TEST(Poly, RingAxiomsRandom) {
  std::mt19937_64 rng(11);
  for (auto [p, s] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    const FieldPtr F = Field::make(p, s);
    for (int it = 0; it < 60; ++it) {
      const MultiPoly a = random_poly(F, 4, 6, 3, rng), b = random_poly(F, 4, 6, 3, rng),
                      c = random_poly(F, 4, 6, 3, rng);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a - a, MultiPoly(F, 4));
      ASSERT_EQ(a.pow(3), a * a * a);
      ASSERT_EQ(a.frobenius_power(1), a.pow(p));
    }
  }
}

TEST(Poly, ParallelProductMatchesSerial) {
  std::mt19937_64 rng(13);
  for (auto [p, s] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const FieldPtr F = Field::make(p, s);
    for (int it = 0; it < 20; ++it) {
      const MultiPoly a = random_poly(F, 6, 200, 6, rng), b = random_poly(F, 6, 150, 6, rng);
      ASSERT_EQ(mul_parallel(a, b), mul_serial(a, b));
    }
  }
}

TEST(Poly, ActionComposition) {
  std::mt19937_64 rng(17);
  const FieldPtr F = Field::make(3, 1);
  for (int it = 0; it < 30; ++it) {
    Matrix A(F, 3, 3), B(F, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        A.at(i, j) = rng() % 3;
        B.at(i, j) = rng() % 3;
      }
    const MultiPoly f = random_poly(F, 3, 5, 3, rng);
    ASSERT_EQ(act(A, act(B, f)), act(B * A, f));
    ASSERT_EQ(act(Matrix::identity(F, 3), f), f);
  }
}

TEST(Poly, Errors) {
  const FieldPtr F2 = Field::make(2, 1), F3 = Field::make(3, 1);
  try {
    (void)(X(F2, 2, 1) + X(F3, 2, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ContextMismatch);
  }
  EXPECT_THROW(MultiPoly::var(F2, 2, 3), Error);
}

TEST(Poly, PsiExamples) {
  for (int q : {2, 3}) {
    const FieldPtr F = Field::make(q, 1);
    const PsiMap psi = psi_map(F, 1, 2);
    EXPECT_TRUE(psi(X(F, 2, 1)).is_zero());
    const MultiPoly want = X(F, 2, 2).pow(q) - X(F, 2, 1).pow(q - 1) * X(F, 2, 2);
    EXPECT_EQ(psi(X(F, 2, 2)), want);
    EXPECT_EQ(want.degree_in(2), static_cast<std::uint32_t>(q));
    EXPECT_EQ(psi_map(F, 0, 2)(X(F, 2, 2)), X(F, 2, 2));
  }
}
