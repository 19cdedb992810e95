#include <gtest/gtest.h>

#include <set>

#include "ffhyper/error.hpp"
#include "ffhyper/field.hpp"
#include "oracle_fixtures.hpp"

namespace ffhyper {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(Field, PrimeField) {
  const auto F = Field::create(5);
  EXPECT_EQ(F->q(), 5u);
  EXPECT_TRUE(F->is_prime());
  EXPECT_EQ(F->elements().size(), 5u);
}

TEST(Field, F9UsesLexLeastModulus) {
  const auto F = Field::create(3, 2);
  EXPECT_EQ(F->q(), 9u);
  const std::vector<std::uint32_t> want(std::begin(fixtures::kF9Modulus), std::end(fixtures::kF9Modulus));
  std::vector<std::uint32_t> got = F->modulus();
  got.resize(want.size());
  EXPECT_EQ(got, want);
  const auto els = F->elements();
  ASSERT_EQ(els.size(), 9u);
  EXPECT_EQ(els.front(), F->zero());
}

TEST(Field, ElementsOfF3) {
  const auto els = Field::create(3)->elements();
  EXPECT_EQ(els, (std::vector<Elem>{Elem{0}, Elem{1}, Elem{2}}));
}

TEST(Field, Errors) {
  EXPECT_EQ(code_of([] { Field::create(2); }), ErrorCode::NotOddPrime);
  EXPECT_EQ(code_of([] { Field::create(9); }), ErrorCode::NotOddPrime);
  EXPECT_EQ(code_of([] { Field::create(3, 2, std::vector<std::uint32_t>{2, 0, 1}); }), ErrorCode::ReducibleModulus);
  EXPECT_EQ(code_of([] { Field::create(3, 20); }), ErrorCode::FieldTooLarge);
  EXPECT_EQ(code_of([] { Field::create(5)->inv(Elem{0}); }), ErrorCode::InvalidArgument);
}

TEST(Field, ParseSpecs) {
  EXPECT_EQ(Field::parse("7")->q(), 7u);
  EXPECT_EQ(Field::parse("3^2")->q(), 9u);
  EXPECT_EQ(Field::parse("5^2")->q(), 25u);
  EXPECT_THROW(Field::parse("banana"), Error);
}

TEST(Field, QuadCharExamples) {
  const auto F5 = Field::create(5);
  EXPECT_EQ(F5->quad_char(Elem{0}), 0);
  EXPECT_EQ(F5->quad_char(Elem{0}, CharVariant::tilde), 1);
  const auto F7 = Field::create(7);
  EXPECT_EQ(F7->quad_char(Elem{3}), -1);
  EXPECT_TRUE(F5->is_square(Elem{0}));
  EXPECT_TRUE(F5->is_square(Elem{4}));
  EXPECT_FALSE(F7->is_square(Elem{5}));
}

class FieldProperties : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FieldProperties, CharacterHalvesNonzero) {
  const auto [p, n] = GetParam();
  const auto F = Field::create(p, n);
  std::set<std::uint32_t> squares;
  for (const auto x : F->elements()) squares.insert(F->mul(x, x).code);
  int plus = 0, minus = 0;
  for (std::uint32_t x = 1; x < F->q(); ++x) {
    const int c = F->quad_char(Elem{x});
    EXPECT_EQ(c == 1, squares.count(x) == 1);
    plus += c == 1;
    minus += c == -1;
  }
  EXPECT_EQ(plus, static_cast<int>((F->q() - 1) / 2));
  EXPECT_EQ(minus, plus);
}

TEST_P(FieldProperties, InversesAndFrobeniusRoot) {
  const auto [p, n] = GetParam();
  const auto F = Field::create(p, n);
  for (std::uint32_t x = 1; x < F->q(); ++x) {
    EXPECT_EQ(F->mul(Elem{x}, F->inv(Elem{x})), F->one());
    EXPECT_EQ(F->pow(F->pth_root(Elem{x}), p), Elem{x});
  }
}

TEST_P(FieldProperties, FormatRoundTripsThroughCoefficients) {
  const auto [p, n] = GetParam();
  const auto F = Field::create(p, n);
  for (const auto x : F->elements()) EXPECT_EQ(F->from_coeffs(F->coeffs(x)), x);
}

INSTANTIATE_TEST_SUITE_P(Small, FieldProperties,
                         ::testing::Values(std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{3u, 2u},
                                           std::pair{5u, 2u}, std::pair{3u, 3u}, std::pair{7u, 2u},
                                           std::pair{13u, 1u}));

TEST(Field, ExtensionEmbeddingIsHomomorphism) {
  const auto F = Field::create(3, 2);
  const auto emb = make_extension(F, 2);
  EXPECT_EQ(emb.ext->q(), 81u);
  for (const auto a : F->elements()) {
    for (const auto b : F->elements()) {
      EXPECT_EQ(emb(F->add(a, b)), emb.ext->add(emb(a), emb(b)));
      EXPECT_EQ(emb(F->mul(a, b)), emb.ext->mul(emb(a), emb(b)));
    }
  }
}

}  // namespace
}  // namespace ffhyper
