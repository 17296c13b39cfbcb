#include <gtest/gtest.h>

#include <random>

#include "sylow/families.hpp"
#include "sylow/steenrod.hpp"

using namespace sylow;

namespace {

MultiPoly X(const FieldPtr& F, int n, int i) { return MultiPoly::var(F, n, i); }

MultiPoly random_homogeneous(const FieldPtr& F, int n, int deg, int terms, std::mt19937_64& rng) {
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) {
    Term term{};
    for (int d = 0; d < deg; ++d) term.m.e[rng() % n] += 1;
    term.c = static_cast<Elem>(rng() % F->size());
    t.push_back(term);
  }
  return MultiPoly::from_terms(F, n, t);
}

}  // namespace

TEST(Steenrod, Variable) {
  for (int r : {2, 3, 4}) {
    const auto [p, e] = prime_power(r);
    const FieldPtr F = Field::make(p, e);
    const auto ex = steenrod_expand(X(F, 3, 2), r);
    ASSERT_EQ(ex.components.size(), 2u);
    EXPECT_EQ(ex.op(0), X(F, 3, 2));
    EXPECT_EQ(ex.op(1), X(F, 3, 2).pow(r));
    EXPECT_TRUE(ex.op(2).is_zero());
    const auto c = steenrod_expand(MultiPoly::constant(F, 3, 1), r);
    EXPECT_TRUE(c.op(1).is_zero());
  }
}

TEST(Steenrod, OmegaExample) {
  const FieldPtr F = Field::make(3, 1);
  const MultiPoly w0 = family_poly(F, 4, {FamilyKind::Omega, 0, 1, 0});
  const MultiPoly w1 = family_poly(F, 4, {FamilyKind::Omega, 1, 1, 0});
  EXPECT_EQ(w0, X(F, 4, 4) * X(F, 4, 1) + X(F, 4, 3) * X(F, 4, 2));
  EXPECT_EQ(steenrod_op(w0, 1, 3), w1);
  EXPECT_EQ(steenrod_op(w0, 2, 3), w0.pow(3));
  EXPECT_EQ(p_bullet(w0, 3), w0.pow(3) - w1 + w0);
  const FieldPtr F2 = Field::make(2, 1);
  EXPECT_EQ(p_bullet(X(F2, 1, 1), 2), X(F2, 1, 1) + X(F2, 1, 1).pow(2));
}

// Homogeneity, top component P^d(f) = f^r, Cartan formula and P^bullet = sum (-1)^i P^i.
TEST(Steenrod, PropertiesRandom) {
  std::mt19937_64 rng(23);
  for (int r : {2, 3, 4}) {
    const auto [p, e] = prime_power(r);
    const FieldPtr F = Field::make(p, e);
    for (int it = 0; it < 25; ++it) {
      const int d1 = 1 + rng() % 3, d2 = 1 + rng() % 3;
      const MultiPoly f = random_homogeneous(F, 3, d1, 4, rng), g = random_homogeneous(F, 3, d2, 4, rng);
      if (f.is_zero() || g.is_zero()) continue;
      const auto ef = steenrod_expand(f, r), eg = steenrod_expand(g, r), efg = steenrod_expand(f * g, r);
      for (std::size_t i = 0; i < ef.components.size(); ++i) {
        const MultiPoly& c = ef.components[i];
        if (!c.is_zero()) {
          ASSERT_TRUE(c.is_homogeneous());
          ASSERT_EQ(c.total_degree(), d1 + i * (r - 1));
        }
      }
      ASSERT_EQ(ef.op(d1), f.pow(r));
      ASSERT_TRUE(ef.op(d1 + 1).is_zero());
      for (int k = 0; k <= d1 + d2; ++k) {
        MultiPoly sum(F, 3);
        for (int i = 0; i <= k; ++i) sum += ef.op(i) * eg.op(k - i);
        ASSERT_EQ(efg.op(k), sum);
      }
      MultiPoly alt(F, 3);
      for (int i = 0; i <= d1; ++i) alt += (i % 2 ? -ef.op(i) : ef.op(i));
      ASSERT_EQ(p_bullet(f, r), alt);
    }
  }
}

TEST(Steenrod, CommutesWithLinearAction) {
  std::mt19937_64 rng(29);
  const FieldPtr F = Field::make(2, 2);
  for (int it = 0; it < 20; ++it) {
    Matrix M(F, 3, 3);
    for (auto i = 0; i < 3; ++i)
      for (auto j = 0; j < 3; ++j) M.at(i, j) = rng() % 4;
    const MultiPoly f = random_homogeneous(F, 3, 2, 4, rng);
    for (int i = 0; i <= 2; ++i) ASSERT_EQ(steenrod_op(act(M, f), i, 4), act(M, steenrod_op(f, i, 4)));
  }
}
