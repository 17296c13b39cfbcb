#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sylow/caps.hpp"
#include "sylow/groups.hpp"

using namespace sylow;

namespace {

struct OrderCase {
  Family f;
  int m, q;
  unsigned long long order;
};

// Orders stated for the Sylow subgroups; the O-plus odd value is the p-part q^{m(m-1)}.
const OrderCase kOrders[] = {
    {Family::GuEven, 1, 2, 2},   {Family::GuEven, 2, 2, 64},  {Family::GuEven, 1, 3, 3},
    {Family::GuOdd, 1, 2, 8},    {Family::Sp, 2, 3, 81},      {Family::OPlus, 2, 3, 9},
    {Family::OPlus, 3, 2, 128},  {Family::OMinus, 2, 2, 128}, {Family::OOdd, 2, 2, 16},
    {Family::OOdd, 2, 3, 81},    {Family::Sp, 1, 3, 3},
};

}  // namespace

TEST(Groups, EnumeratedOrders) {
  for (const auto& c : kOrders) {
    const GroupSpec spec = make_spec(c.f, c.m, c.q);
    EXPECT_EQ(group_order(spec), BigInt(c.order)) << spec.label();
    const auto all = enumerate_group(spec, caps().enumeration);
    EXPECT_EQ(all.size(), c.order) << spec.label();
    std::set<std::vector<Elem>> distinct;
    for (const auto& M : all) distinct.insert(M.data());
    EXPECT_EQ(distinct.size(), all.size());
  }
}

TEST(Groups, ParallelEnumerationMatchesSerial) {
  for (const auto& c : kOrders) {
    const GroupSpec spec = make_spec(c.f, c.m, c.q);
    const auto a = enumerate_group(spec, caps().enumeration), b = enumerate_group_serial(spec, caps().enumeration);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i], b[i]) << spec.label();
  }
}

TEST(Groups, SylowProperty) {
  for (const auto& c : kOrders) {
    const GroupSpec spec = make_spec(c.f, c.m, c.q);
    EXPECT_EQ(group_order(spec), p_part(classical_order(spec), spec.p)) << spec.label();
  }
  // |GU(4,4)| = 2^6 * 3 * 3 * 9 * 15.
  EXPECT_EQ(classical_order(make_spec(Family::GuEven, 2, 2)), BigInt(64 * 3 * 3 * 9 * 15));
  EXPECT_EQ(classical_order(make_spec(Family::Sp, 2, 3)), BigInt(81 * 8 * 80));
  EXPECT_EQ(classical_order(make_spec(Family::OOdd, 2, 3)), BigInt(2 * 81 * 8 * 80));
}

TEST(Groups, GeneratorsAndClosure) {
  const GroupSpec gu = make_spec(Family::GuEven, 2, 2);
  const auto gens = generators(gu);
  EXPECT_EQ(gens.size(), 6u);
  EXPECT_EQ(closure(gu.field, gu.n, gens, caps().enumeration).size(), 64u);
  const GroupSpec op = make_spec(Family::OPlus, 2, 2);
  const auto og = generators(op);
  EXPECT_NE(std::find(og.begin(), og.end(), descent_generator(op)), og.end());
  EXPECT_TRUE(is_member(op, descent_generator(op)));
  EXPECT_EQ(closure(op.field, op.n, og, caps().enumeration).size(), group_order(op));
}

TEST(Groups, Membership) {
  for (const auto& c : kOrders) {
    const GroupSpec spec = make_spec(c.f, c.m, c.q);
    EXPECT_TRUE(is_member(spec, Matrix::identity(spec.field, spec.n)));
    const FormData form = form_of(spec);
    for (const auto& g : generators(spec)) {
      EXPECT_TRUE(is_member(spec, g));
      const Matrix Mb = g.bar(spec.hermitian);
      EXPECT_EQ(g.transpose() * form.X * Mb, form.X);
      if (form.Q) {
        EXPECT_EQ(act(g, *form.Q), *form.Q);
      }
    }
  }
  // Perturbing one entry below the diagonal of a valid element breaks the form.
  const GroupSpec spec = make_spec(Family::Sp, 2, 3);
  Matrix g = generators(spec)[0];
  g.at(spec.n - 1, 0) = spec.field->add(g.at(spec.n - 1, 0), 1);
  g.at(spec.n - 2, 0) = spec.field->add(g.at(spec.n - 2, 0), 1);
  EXPECT_FALSE(is_member(spec, g));
}

TEST(Groups, FormsAndParameters) {
  const GroupSpec o = make_spec(Family::OPlus, 2, 2);
  const FormData f = form_of(o);
  ASSERT_TRUE(f.Q.has_value());
  const FieldPtr& F = o.field;
  auto x = [&](int i) { return MultiPoly::var(F, 4, i); };
  EXPECT_EQ(*f.Q, x(4) * x(1) + x(3) * x(2));
  EXPECT_EQ(irreducible_quadratic_a(*Field::make(2, 1)), 1u);
  const GroupSpec sp = make_spec(Family::Sp, 2, 3);
  const FormData fs = form_of(sp);
  EXPECT_EQ(fs.X2, Matrix::from_ints(sp.field, {{0, 1}, {-1, 0}}));
  EXPECT_TRUE(element(sp, ElementParams::trivial(sp)).is_identity());
}

TEST(Groups, ChiCountsMatchExhaustive) {
  std::mt19937_64 rng(31);
  for (auto [f, q] : {std::pair{Family::GuEven, 2}, {Family::Sp, 3}, {Family::OOdd, 3}, {Family::OPlus, 2},
                      {Family::OMinus, 2}, {Family::Sp, 4}, {Family::OOdd, 4}}) {
    for (int m : {2, 3}) {
      const GroupSpec spec = make_spec(f, m, q);
      if (spec.nblk > 2 || spec.nblk == 0) continue;
      for (int it = 0; it < 5; ++it) {
        Matrix B(spec.field, spec.l, spec.nblk);
        for (int i = 0; i < spec.l; ++i)
          for (int j = 0; j < spec.nblk; ++j) B.at(i, j) = rng() % spec.field->size();
        ASSERT_EQ(count_S_solutions(spec, B), count_S_exhaustive(spec, B)) << spec.label();
      }
    }
  }
}

TEST(Groups, Errors) {
  EXPECT_THROW(make_spec(Family::Sp, 0, 3), Error);
  EXPECT_THROW(make_spec(Family::Sp, 2, 6), Error);
  EXPECT_THROW(parse_family("gu"), Error);
  EXPECT_THROW(descent_generator(make_spec(Family::Sp, 2, 3)), Error);
  const GroupSpec big = make_spec(Family::GuEven, 3, 2);
  try {
    enumerate_group(big, 16);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CapExceeded);
  }
}
