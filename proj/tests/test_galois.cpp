#include <gtest/gtest.h>

#include <set>

#include "streamcode/galois.hpp"

using namespace sc;

namespace {

// Schoolbook carry-less product reduced by the modulus, bit by bit.
std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned m) {
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < 32; ++i)
    if ((b >> i) & 1) acc ^= std::uint64_t{a} << i;
  for (int bit = 63; bit >= static_cast<int>(m); --bit)
    if ((acc >> bit) & 1) acc ^= std::uint64_t{modulus} << (bit - static_cast<int>(m));
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

TEST(Galois, SpecArithmetic) {
  auto gf8 = Field::of_order(8);
  auto gf7 = Field::of_order(7);
  auto gf2 = Field::of_order(2);
  EXPECT_EQ(gf8->add(3, 5), 6u);
  EXPECT_EQ(gf7->add(3, 5), 1u);
  EXPECT_EQ(gf2->add(1, 1), 0u);
  EXPECT_EQ(gf2->mul(1, 1), 1u);
  EXPECT_EQ(gf8->mul(2, 4), 3u);
  EXPECT_EQ(gf7->mul(3, 5), 1u);
  EXPECT_EQ(gf7->inv(3), 5u);
  for (auto f : {gf2, gf7, gf8}) EXPECT_EQ(f->inv(1), 1u);
}

TEST(Galois, DefaultModuli) {
  EXPECT_EQ(Field::default_modulus(3), 0b1011u);   // x^3+x+1
  EXPECT_EQ(Field::default_modulus(2), 0b111u);    // x^2+x+1
  EXPECT_EQ(Field::default_modulus(4), 0b10011u);  // x^4+x+1
  EXPECT_EQ(Field::default_modulus(8), 0x11Bu);    // x^8+x^4+x^3+x+1
  EXPECT_FALSE(Field::is_irreducible_gf2(0b101));  // (x+1)^2
  EXPECT_TRUE(Field::is_irreducible_gf2(0b1101));
}

TEST(Galois, TablesMatchPolynomialProduct) {
  for (unsigned m : {2u, 3u, 4u, 5u, 8u}) {
    auto f = Field::binary_extension(m);
    const std::uint32_t q = 1u << m;
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) ASSERT_EQ(f->mul(a, b), poly_mul(a, b, f->modulus(), m)) << m;
  }
  // non-default modulus
  auto f = Field::binary_extension(3, 0b1101);
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) ASSERT_EQ(f->mul(a, b), poly_mul(a, b, 0b1101, 3));
}

TEST(Galois, PrimeFieldMatchesModularArithmetic) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 251u}) {
    auto f = Field::prime(p);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        ASSERT_EQ(f->add(a, b), (a + b) % p);
        ASSERT_EQ(f->sub(a, b), (a + p - b) % p);
        ASSERT_EQ(f->mul(a, b), (a * b) % p);
      }
  }
}

TEST(Galois, AxiomsForSmallFields) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 11u, 13u, 16u}) {
    auto f = Field::of_order(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      if (f->characteristic() == 2) EXPECT_EQ(f->add(a, a), 0u);
      EXPECT_EQ(f->add(a, f->neg(a)), 0u);
      if (a) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
      for (std::uint32_t b = 0; b < q; ++b) {
        ASSERT_EQ(f->add(a, b), f->add(b, a));
        ASSERT_EQ(f->mul(a, b), f->mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
          ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
          ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
    // unique inverses
    for (std::uint32_t a = 1; a < q; ++a) {
      int count = 0;
      for (std::uint32_t b = 1; b < q; ++b) count += f->mul(a, b) == 1;
      EXPECT_EQ(count, 1);
    }
  }
}

TEST(Galois, MultiplicativeGroupIsCyclic) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 11u, 13u, 16u}) {
    auto f = Field::of_order(q);
    bool generator = false;
    for (std::uint32_t a = 1; a < q; ++a) {
      // order by repeated multiplication
      std::uint32_t x = a;
      std::uint32_t order = 1;
      while (x != 1) {
        x = f->mul(x, a);
        ++order;
      }
      EXPECT_EQ(f->element_order(a), order);
      EXPECT_EQ((q - 1) % order, 0u);
      generator = generator || order == q - 1;
    }
    EXPECT_TRUE(generator) << q;
    EXPECT_EQ(f->element_order(f->primitive_element()), q - 1);
  }
}

TEST(Galois, LargestExtension) {
  auto f = Field::binary_extension(16);
  EXPECT_EQ(f->order(), 65536u);
  for (std::uint32_t a : {1u, 2u, 3u, 1234u, 65535u}) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
  EXPECT_EQ(f->mul(0x8000, 2), poly_mul(0x8000, 2, f->modulus(), 16));
}

TEST(Galois, Enumerate) {
  auto gf2 = enumerate(Field::of_order(2));
  ASSERT_EQ(gf2.size(), 2u);
  EXPECT_EQ(gf2[0].value(), 0u);
  EXPECT_EQ(gf2[1].value(), 1u);
  auto gf4 = enumerate(Field::of_order(4));
  for (std::uint32_t i = 0; i < 4; ++i) EXPECT_EQ(gf4[i].value(), i);
  std::set<std::uint32_t> seen;
  for (const auto& e : enumerate(Field::of_order(8))) seen.insert(e.value());
  EXPECT_EQ(seen.size(), 8u);
}

TEST(Galois, ElementOperatorsAndErrors) {
  auto gf8 = Field::of_order(8);
  auto gf7 = Field::of_order(7);
  FieldElement a(gf8, 2), b(gf8, 4);
  EXPECT_EQ((a * b).value(), 3u);
  EXPECT_EQ((a + b).value(), 6u);
  EXPECT_EQ((a / a).value(), 1u);
  EXPECT_EQ(mul(a, b), a * b);
  EXPECT_EQ(inv(FieldElement(gf7, 3)).value(), 5u);
  EXPECT_THROW(FieldElement(gf8, 2) + FieldElement(gf7, 2), FieldMismatch);
  EXPECT_THROW(inv(FieldElement(gf8, 0)), std::domain_error);
  EXPECT_THROW(FieldElement(gf8, 8), std::out_of_range);
  EXPECT_THROW(Field::of_order(6), std::invalid_argument);
  EXPECT_THROW(Field::binary_extension(3, 0b101), std::invalid_argument);
  EXPECT_THROW(Field::prime(257), std::invalid_argument);
  // independently built copies are the same field
  EXPECT_TRUE(same_field(*Field::of_order(8), *Field::binary_extension(3)));
  EXPECT_FALSE(same_field(*Field::of_order(8), *Field::binary_extension(3, 0b1101)));
}
