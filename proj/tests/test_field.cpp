#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "sylow/field.hpp"

using namespace sylow;

namespace {

struct PS {
  int p, s;
};

const PS kFields[] = {{2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}};

}  // namespace

TEST(Field, AxiomsExhaustive) {
  for (auto [p, s] : kFields) {
    const FieldPtr F = Field::make(p, s);
    const Elem r = F->size();
    ASSERT_EQ(r, static_cast<Elem>(std::pow(p, s)));
    for (Elem a = 0; a < r; ++a) {
      EXPECT_EQ(F->add(a, F->neg(a)), 0u);
      EXPECT_EQ(F->mul(a, 1), a);
      if (a) {
        EXPECT_EQ(F->mul(a, F->inv(a)), 1u);
      }
      for (Elem b = 0; b < r; ++b) {
        EXPECT_EQ(F->add(a, b), F->add(b, a));
        EXPECT_EQ(F->mul(a, b), F->mul(b, a));
        for (Elem c = 0; c < r; c += (r > 9 ? 3 : 1)) {
          EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
          EXPECT_EQ(F->mul(a, F->mul(b, c)), F->mul(F->mul(a, b), c));
          EXPECT_EQ(F->add(a, F->add(b, c)), F->add(F->add(a, b), c));
        }
      }
    }
  }
}

TEST(Field, Moduli) {
  EXPECT_EQ(Field::make(2, 2)->modulus(), (std::vector<int>{1, 1, 1}));
  // Smallest monic irreducible quadratic over GF(3) in the lexicographic order is t^2 + 1.
  EXPECT_EQ(Field::make(3, 2)->modulus(), (std::vector<int>{1, 0, 1}));
}

// The modulus has no root (enough for degree <= 3) and every nonzero element satisfies a^(r-1) = 1.
TEST(Field, ModulusRootFreeAndFermat) {
  for (auto [p, s] : kFields) {
    const FieldPtr F = Field::make(p, s);
    const auto& mod = F->modulus();
    if (s >= 2 && s <= 3)
      for (int x = 0; x < p; ++x) {
        long long v = 0, xp = 1;
        for (int c : mod) {
          v += c * xp;
          xp *= x;
        }
        EXPECT_NE(v % p, 0) << "root " << x;
      }
    for (Elem a = 1; a < F->size(); ++a) EXPECT_EQ(F->pow(a, F->size() - 1), 1u);
  }
}

TEST(Field, SmallExamples) {
  const FieldPtr F2 = Field::make(2, 1);
  EXPECT_EQ(F2->add(1, 1), 0u);
  const FieldPtr F4 = Field::make(2, 2);
  const Elem t = F4->gen();
  EXPECT_EQ(F4->mul(t, t), F4->add(t, 1));
  EXPECT_EQ(F4->frobenius(t, 1), F4->add(t, 1));
  EXPECT_EQ(F4->conj(t), F4->add(t, 1));
  EXPECT_EQ(F4->frobenius(t, 0), t);
  EXPECT_EQ(F2->frobenius(1, 5), 1u);
  EXPECT_EQ(F4->trace_kernel(), (std::vector<Elem>{0, 1}));
  const FieldPtr F9 = Field::make(3, 2);
  EXPECT_EQ(F9->trace_kernel().size(), 3u);
  for (Elem a = 0; a < 9; ++a) EXPECT_EQ(F9->conj(F9->conj(a)), a);
  EXPECT_EQ(F9->sub_size(), 3u);
}

TEST(Field, SubfieldAndTrace) {
  for (auto [p, s] : kFields) {
    const FieldPtr F = Field::make(p, s);
    if (!F->is_quadratic_extension()) {
      EXPECT_THROW(F->conj(1), Error);
      continue;
    }
    const Elem q = F->sub_size();
    std::size_t fixed = 0;
    for (Elem a = 0; a < F->size(); ++a) fixed += F->in_subfield(a);
    EXPECT_EQ(fixed, q);
    EXPECT_EQ(F->trace_kernel().size(), q);
    const Elem c = F->half_trace_unit();
    EXPECT_EQ(F->add(c, F->conj(c)), 1u);
  }
}

TEST(Field, Errors) {
  EXPECT_THROW(Field::make(4, 1), Error);
  EXPECT_THROW(prime_power(12), Error);
  EXPECT_EQ(prime_power(9), (std::pair<int, int>{3, 2}));
  try {
    Field::make(2, 40);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CardinalityCapExceeded);
  }
  const FieldPtr F = Field::make(3, 1);
  try {
    F->inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
  const FieldElement a{F, 1}, b{Field::make(5, 1), 1};
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldMismatch);
  }
}
