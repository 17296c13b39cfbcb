#include <gtest/gtest.h>

#include "sylow/families.hpp"
#include "sylow/verify.hpp"

using namespace sylow;

namespace {

MultiPoly X(const FieldPtr& F, int n, int i) { return MultiPoly::var(F, n, i); }

}  // namespace

TEST(Families, Definitions) {
  const FieldPtr F = Field::make(3, 1);
  EXPECT_TRUE(family_poly(F, 4, {FamilyKind::Omega, 0, -1, 0}).is_zero());
  EXPECT_EQ(family_poly(F, 4, {FamilyKind::Omega, 0, 1, 0}), X(F, 4, 4) * X(F, 4, 1) + X(F, 4, 3) * X(F, 4, 2));
  // Gamma_{s,lambda} = Omega_{s,1} in characteristic 2 for s >= 1.
  const FieldPtr F4 = Field::make(2, 2);
  for (int s = 1; s <= 2; ++s)
    EXPECT_EQ(family_poly(F4, 5, {FamilyKind::Gamma, s, 1, 1}), family_poly(F4, 5, {FamilyKind::Omega, s, 1, 0}));
  EXPECT_THROW(family_poly(Field::make(3, 1), 4, {FamilyKind::Lambda, 1, 1, 0}), Error);
}

TEST(Families, HExamples) {
  const GroupSpec sp = make_spec(Family::Sp, 2, 3);
  const FieldPtr& F = sp.field;
  MultiPoly want(F, 4);
  for (int i = 1; i <= 2; ++i)
    want += X(F, 4, 5 - i).pow(3) * X(F, 4, i) - X(F, 4, 5 - i) * X(F, 4, i).pow(3);
  EXPECT_EQ(h_k(sp, 1), want);
  const GroupSpec op = make_spec(Family::OPlus, 3, 3);
  MultiPoly w(op.field, 6);
  for (int i = 1; i <= 3; ++i) w += X(op.field, 6, 7 - i) * X(op.field, 6, i);
  EXPECT_EQ(h_k(op, 1), w);
}

TEST(Families, SubspaceProductAndDickson) {
  const FieldPtr F2 = Field::make(2, 1);
  EXPECT_EQ(subspace_product(F2, 2, 1, 2), X(F2, 2, 2).pow(2) + X(F2, 2, 1) * X(F2, 2, 2));
  for (auto [p, s, l] : {std::tuple{2, 1, 1}, {2, 1, 2}, {3, 1, 1}, {2, 2, 2}})
    EXPECT_TRUE(additive_poly_recursion_check(Field::make(p, s), l, l + 1));
  for (int q : {2, 3}) {
    const FieldPtr F = Field::make(q, 1);
    EXPECT_EQ(dickson_coeffs(F, 1)[0], X(F, 1, 1).pow(q - 1));
  }
  const auto c = dickson_coeffs(F2, 2);
  const Matrix M = Matrix::from_ints(F2, {{1, 1}, {1, 0}});
  for (const auto& ci : c) EXPECT_EQ(act(M, ci), ci);
}

TEST(Families, OrbitProducts) {
  for (int q : {2, 3}) {
    const FieldPtr F = Field::make(q, 1);
    const auto gens = unitriangular_generators(F, 2);
    EXPECT_EQ(orbit_product(F, 2, gens, 1), X(F, 2, 1));
    EXPECT_EQ(orbit_product(F, 2, gens, 2), X(F, 2, 2).pow(q) - X(F, 2, 1).pow(q - 1) * X(F, 2, 2));
  }
  const GroupSpec gu = make_spec(Family::GuEven, 3, 2);
  const auto gens = generators(gu, false);
  const Orbit o = orbit_of(gu.field, gu.n, gens, 3);
  EXPECT_EQ(orbit_product_direct(gu.field, gu.n, o), orbit_product_additive(gu.field, gu.n, o));
  EXPECT_EQ(orbit_product(gu.field, gu.n, gens, 3).degree_in(3), expected_norm_degree(gu, 3));
}

TEST(Families, GeneratorLists) {
  const GeneratorList gu = field_generators(make_spec(Family::GuEven, 4, 2));
  EXPECT_EQ(gu.labels, (std::vector<std::string>{"x_1", "N(x_2)", "N(x_3)", "N(x_4)", "N(x_5)", "h_1", "h_2", "h_3"}));
  for (Family f : all_families())
    for (int m : {1, 2, 3})
      for (int q : {2, 3}) {
        const GroupSpec spec = make_spec(f, m, q);
        EXPECT_EQ(static_cast<int>(field_generators(spec).phis.size()), spec.n) << spec.label();
      }
}

TEST(Families, MinimalDegreeBounds) {
  const GroupSpec gu = make_spec(Family::GuEven, 4, 2);
  EXPECT_EQ(minimal_degree_bound(gu, 1), 32u);
  EXPECT_EQ(minimal_degree_bound(gu, 2), 8u);
  EXPECT_EQ(minimal_degree_bound(gu, 3), 2u);
  for (int m : {2, 3}) {
    const GroupSpec sp = make_spec(Family::Sp, m, 3);
    for (int k = 1; k <= m - 1; ++k) EXPECT_EQ(minimal_degree_bound(sp, k), ipow(3, m - k));
    const GroupSpec op = make_spec(Family::OPlus, m, 3);
    for (int k = 1; k <= m - 1; ++k) EXPECT_EQ(minimal_degree_bound(op, k), ipow(3, m - 1 - k));
  }
}

TEST(Oracle, SmallExamples) {
  const FieldPtr F = Field::make(2, 1);
  const auto gens = unitriangular_generators(F, 2);
  EXPECT_EQ(*oracle_min_degree(F, gens, 2, 2).min_degree, 2u);
  EXPECT_EQ(*oracle_min_degree(F, gens, 1, 1).min_degree, 1u);
  EXPECT_FALSE(oracle_min_degree(F, gens, 2, 1).min_degree.has_value());
}

TEST(Oracle, ParallelMatchesSerialAndBound) {
  for (auto [f, m, q] : {std::tuple{Family::GuEven, 2, 2}, {Family::Sp, 2, 2}, {Family::OOdd, 2, 2}}) {
    const GroupSpec spec = make_spec(f, m, q);
    const auto gens = generators(spec, false);
    const auto [t, d] = family_shape(spec);
    const GeneratorList gl = field_generators(spec);
    for (int k = 1; k <= t; ++k) {
      const int j = t + d + k;
      const std::uint64_t D = gl.cc_phis[j - 1].total_degree();
      const auto a = oracle_min_degree(spec.field, gens, j, D), b = oracle_min_degree_serial(spec.field, gens, j, D);
      EXPECT_EQ(a.min_degree, b.min_degree);
      EXPECT_EQ(a.largest_piece, b.largest_piece);
      ASSERT_TRUE(a.min_degree.has_value());
      EXPECT_EQ(*a.min_degree, minimal_degree_bound(spec, k)) << spec.label();
    }
  }
}

TEST(Oracle, DimensionCap) {
  const FieldPtr F = Field::make(2, 1);
  const auto gens = unitriangular_generators(F, 8);
  try {
    oracle_min_degree(F, gens, 8, 40);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionCapExceeded);
  }
}
