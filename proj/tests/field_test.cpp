#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "permpoly/field.hpp"

namespace permpoly {
namespace {

using testing::prime_powers;

TEST(FindIrreducible, SmallestQuadraticOverF2) {
  EXPECT_EQ(find_irreducible(2, 2), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(FindIrreducible, LinearIsX) { EXPECT_EQ(find_irreducible(3, 1), (std::vector<std::uint32_t>{0, 1})); }

TEST(FindIrreducible, SmallestQuadraticOverF3) {
  EXPECT_EQ(find_irreducible(3, 2), (std::vector<std::uint32_t>{1, 0, 1}));
}

// The chosen modulus is the first monic polynomial, in base-p order, that
// is not a product of two lower-degree monics.
TEST(FindIrreducible, MatchesExhaustiveFactorTable) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
    const auto reducible = testing::reducible_monics(p, n);
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < n; ++i) count *= p;
    std::vector<std::uint32_t> expected;
    for (std::uint64_t v = 0; v < count; ++v) {
      auto cand = testing::monic_from_index(v, p, n);
      if (!reducible.contains(cand)) {
        expected = cand;
        break;
      }
    }
    EXPECT_EQ(find_irreducible(p, n), expected) << "p=" << p << " n=" << n;
    for (std::uint64_t v = 0; v < count; ++v) {
      auto cand = testing::monic_from_index(v, p, n);
      EXPECT_EQ(is_irreducible(p, cand), !reducible.contains(cand));
    }
  }
}

TEST(FieldArithmetic, PrimeFieldExamples) {
  const Field f5 = Field::of_order(5);
  EXPECT_EQ(f5.element(2) * f5.element(3), f5.element(1));
  EXPECT_EQ(inverse(f5.element(2)), f5.element(3));
  EXPECT_EQ(inverse(f5.element(4)), f5.element(4));
  EXPECT_EQ(pow(f5.element(2), 3), f5.element(3));
  EXPECT_EQ(pow(f5.element(0), 3), f5.zero());
  EXPECT_EQ(pow(f5.element(0), 0), f5.one());
}

TEST(FieldArithmetic, F4OmegaSquared) {
  const Field f4 = Field::of_order(4);
  ASSERT_EQ(f4.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  const auto omega = f4.element(2);
  EXPECT_EQ(omega * omega, f4.element(3));
  EXPECT_EQ(pow(omega, 2), f4.element(3));
}

TEST(FieldArithmetic, IdentitiesInEveryField) {
  for (auto q : prime_powers(2, 64)) {
    const Field f = Field::of_order(q);
    EXPECT_EQ(inverse(f.one()), f.one());
    for (const auto& x : f.enumerate()) EXPECT_EQ(x * f.one(), x);
  }
}

TEST(FieldArithmetic, MixedFieldsThrow) {
  const Field f5 = Field::of_order(5);
  const Field f7 = Field::of_order(7);
  EXPECT_THROW(f5.one() + f7.one(), std::invalid_argument);
  EXPECT_THROW(f5.one() * f7.one(), std::invalid_argument);
  EXPECT_THROW(f5.one() - f7.one(), std::invalid_argument);
  // Same spec built twice is the same field.
  EXPECT_NO_THROW(f5.one() + Field::of_order(5).one());
}

TEST(FieldArithmetic, ZeroHasNoInverse) {
  const Field f9 = Field::of_order(9);
  EXPECT_THROW(inverse(f9.zero()), std::domain_error);
}

TEST(FieldConstruction, Validation) {
  EXPECT_THROW(Field::make(4, 1), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 0), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 21), std::invalid_argument);
  EXPECT_THROW(Field::of_order(6), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 2, {1, 0, 1}), std::invalid_argument);  // (x+1)^2
  EXPECT_THROW(Field::make(2, 2, {1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Field::make(3, 2, {2, 0, 2}), std::invalid_argument);  // not monic
  EXPECT_THROW(Field::make(3, 2, {1, 1}), std::invalid_argument);
  EXPECT_NO_THROW(Field::make(2, 20));
}

TEST(FieldConstruction, ExplicitModulus) {
  // x^2 + x + 2 is irreducible over F_3 but not the default.
  const Field f = Field::make(3, 2, {2, 1, 1});
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{2, 1, 1}));
  EXPECT_FALSE(f == Field::of_order(9));
  // x * x = -x - 2 = 2x + 1 -> index 1 + 2*3 = 7.
  EXPECT_EQ(f.mul(3, 3), 7u);
}

TEST(FieldConstruction, PrimeFieldIgnoresModulus) {
  const Field f = Field::make(7, 1, {3, 1});
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(f, Field::of_order(7));
}

TEST(Enumerate, CanonicalOrder) {
  const Field f5 = Field::of_order(5);
  const auto elems = f5.enumerate();
  ASSERT_EQ(elems.size(), 5u);
  for (ElementIndex i = 0; i < 5; ++i) EXPECT_EQ(elems[i].index(), i);

  const Field f4 = Field::of_order(4);
  EXPECT_EQ(f4.enumerate()[2].coefficients(), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(f4.enumerate()[3].coefficients(), (std::vector<std::uint32_t>{1, 1}));

  const Field f9 = Field::of_order(9);
  EXPECT_EQ(f9.enumerate().size(), 9u);
  EXPECT_EQ(f9.element(5).coefficients(), (std::vector<std::uint32_t>{2, 1}));
}

TEST(Enumerate, BijectionOntoIndices) {
  for (auto q : prime_powers(2, 256)) {
    const Field f = Field::of_order(q);
    const auto elems = f.enumerate();
    ASSERT_EQ(elems.size(), q);
    for (ElementIndex i = 0; i < q; ++i) {
      EXPECT_EQ(elems[i].index(), i);
      EXPECT_EQ(f.from_coefficients(elems[i].coefficients()), i);
    }
  }
}

TEST(Enumerate, ZeroAndOneIndices) {
  for (auto q : prime_powers(2, 64)) {
    const Field f = Field::of_order(q);
    EXPECT_TRUE(f.zero().is_zero());
    EXPECT_TRUE(f.one().is_one());
    for (const auto& x : f.enumerate()) EXPECT_EQ(x + f.zero(), x);
  }
}

TEST(FieldProperties, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (auto q : prime_powers(2, 1024)) {
    const Field f = Field::of_order(q);
    std::uniform_int_distribution<ElementIndex> pick(0, q - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = f.element(pick(rng)), b = f.element(pick(rng)), c = f.element(pick(rng));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, f.zero());
      EXPECT_EQ(a + (-a), f.zero());
    }
  }
}

TEST(FieldProperties, LogTablesAgreeWithSchoolbook) {
  for (auto q : prime_powers(2, 64)) {
    const Field f = Field::of_order(q);
    for (ElementIndex x = 0; x < q; ++x)
      for (ElementIndex y = 0; y < q; ++y) ASSERT_EQ(f.mul(x, y), f.mul_schoolbook(x, y)) << f.name();
  }
}

TEST(FieldProperties, InverseIsPowerAndMatchesEuclid) {
  for (auto q : prime_powers(2, 64)) {
    const Field f = Field::of_order(q);
    for (ElementIndex x = 1; x < q; ++x) {
      EXPECT_EQ(f.inv(x), f.pow(x, q - 2));
      EXPECT_EQ(f.inv(x), testing::euclid_inverse(f, x)) << f.name() << " x=" << x;
      EXPECT_EQ(f.mul(x, f.inv(x)), 1u);
    }
  }
}

TEST(FieldProperties, FrobeniusIterateFixesEverything) {
  for (auto q : prime_powers(2, 64)) {
    const Field f = Field::of_order(q);
    for (ElementIndex x = 0; x < q; ++x) EXPECT_EQ(f.pow(x, q), x) << f.name();
  }
}

TEST(FieldProperties, PrimitiveElementGeneratesGroup) {
  for (auto q : prime_powers(3, 256)) {
    const Field f = Field::of_order(q);
    std::vector<bool> seen(q, false);
    ElementIndex acc = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      EXPECT_FALSE(seen[acc]);
      seen[acc] = true;
      acc = f.mul_schoolbook(acc, f.primitive_element());
    }
    EXPECT_EQ(acc, 1u);
  }
}

}  // namespace
}  // namespace permpoly
