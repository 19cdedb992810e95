#include <gtest/gtest.h>

#include "ffhyper/bounds.hpp"
#include "ffhyper/error.hpp"
#include "ffhyper/parse.hpp"
#include "oracle_fixtures.hpp"

namespace ffhyper {
namespace {

namespace fx = fixtures;

TEST(Weil, Examples) {
  const auto F13 = Field::create(13);
  const auto w = weil_check(UniPoly::from_ints(F13, {1, 0, 1}), F13->one());
  EXPECT_EQ(w.sum, fx::kWeilX2Plus1F13);
  EXPECT_EQ(w.s, 2u);
  EXPECT_TRUE(w.applicable);
  EXPECT_TRUE(w.pass());

  EXPECT_FALSE(weil_check(UniPoly::from_ints(F13, {0, 0, 1}), F13->one()).applicable);

  for (std::uint32_t q : {5u, 7u, 13u}) {
    const auto F = Field::create(q);
    const auto lin = weil_check(UniPoly::from_ints(F, {0, 1}), F->one());
    EXPECT_EQ(lin.sum, 0);
    EXPECT_EQ(lin.s, 1u);
    EXPECT_TRUE(lin.pass());
  }
}

TEST(Weil, Errors) {
  const auto F = Field::create(7);
  EXPECT_THROW(weil_check(UniPoly::from_ints(F, {1, 2}), F->zero()), Error);
  EXPECT_THROW(weil_check(UniPoly::from_ints(F, {1, 2}), F->one()), Error);
  EXPECT_THROW(weil_check(UniPoly::from_ints(F, {3}), F->one()), Error);
}

TEST(Weil, RepeatedRootsUseDistinctCount) {
  const auto F = Field::create(13);
  // (x-1)^2 (x-2): s = 2 distinct roots
  const auto g = UniPoly::from_ints(F, {-1, 1}) * UniPoly::from_ints(F, {-1, 1}) * UniPoly::from_ints(F, {-2, 1});
  const auto w = weil_check(g, Elem{2});
  EXPECT_EQ(w.s, 2u);
  EXPECT_TRUE(w.pass());
}

TEST(ExceptionalX, Diagonal) {
  for (auto [q, want] : {std::pair{5u, fx::kXDiagonalF5}, std::pair{7u, fx::kXDiagonalF7},
                         std::pair{13u, fx::kXDiagonalF13}}) {
    const auto x = enumerate_X(parse_poly(Field::create(q), "x1^2+x2^2+x3^2"), true);
    EXPECT_EQ(static_cast<std::int64_t>(x.size()), want) << q;
    EXPECT_TRUE(x.pass());
    EXPECT_EQ(x.y_count + x.z_count, x.size());
  }
  const auto x7 = enumerate_X(parse_poly(Field::create(7), "x1^2+x2^2+x3^2"));
  ASSERT_EQ(x7.size(), 1u);
  EXPECT_EQ(x7.members[0], (std::vector<Elem>{Elem{0}, Elem{0}}));
}

TEST(ExceptionalX, XyPlus1) {
  const auto x = enumerate_X(parse_poly(Field::create(5), "x1*x2+1"));
  EXPECT_EQ(static_cast<std::int64_t>(x.size()), fx::kXXyPlus1F5);
  EXPECT_EQ(x.constant_members, 1u);
  EXPECT_EQ(x.members[0], std::vector<Elem>{Elem{0}});
}

TEST(ExceptionalX, RequireAdmissibleRejectsVanishing) {
  // x1x2+x2x3+x3x1 at (0,0) is identically zero in x1
  EXPECT_THROW(enumerate_X(parse_poly(Field::create(5), "x1*x2+x2*x3+x3*x1"), true), Error);
}

TEST(ExceptionalB, XyPlus1) {
  const auto b = enumerate_B(parse_poly(Field::create(5), "x1*x2+1"));
  EXPECT_EQ(static_cast<std::int64_t>(b.size()), fx::kBXyPlus1F5);
  for (const auto& m : b.members) EXPECT_EQ(m[0], m[1]);
  EXPECT_TRUE(b.pass());
}

TEST(Slavov, Examples) {
  for (std::uint32_t q : {7u, 13u, 29u}) {
    const auto F = Field::create(q);
    const std::vector<MultiPoly> one{parse_poly(F, "x1")};
    const auto r = slavov_count(one, true);
    EXPECT_EQ(r.report.observed, BigInt((q - 1) / 2));
    EXPECT_EQ(r.report.predicted_main, Rational(q, 2));
  }
  for (const auto& e : fx::kSlavovXXPlus1) {
    const auto F = Field::create(e.q);
    const std::vector<MultiPoly> two{parse_poly(F, "x1"), parse_poly(F, "x1+1")};
    const auto r = slavov_count(two, true);
    EXPECT_EQ(r.report.observed, e.value);
    EXPECT_EQ(r.report.predicted_main, Rational(e.q, 4));
    EXPECT_TRUE(r.condition_holds());
  }
  const auto F = Field::create(13);
  const std::vector<MultiPoly> bad{parse_poly(F, "x1"), parse_poly(F, "4*x1")};
  const auto r = slavov_count(bad, true);
  EXPECT_FALSE(r.condition_holds());
  ASSERT_EQ(r.failing_subsets.size(), 1u);
  EXPECT_EQ(r.failing_subsets[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(slavov_count(std::vector<MultiPoly>{}, true), Error);
}

TEST(Envelope, MainTerms) {
  EXPECT_EQ(predict_envelope(101, 3, 2, 2).main, Rational(BigInt(101) * 101 * 101, 48));
  EXPECT_EQ(predict_envelope(13, 2, 2, 2).main, Rational(169, 4));
  EXPECT_EQ(predict_envelope(13, 3, 3, 3).main, Rational(2197, 12));
  double prev = 1e300;
  for (std::uint64_t q : {101ull, 1009ull, 10007ull, 100003ull}) {
    const auto e = predict_envelope(q, 3, 2, 2);
    const double ratio = e.err / static_cast<double>(e.main);
    EXPECT_LT(ratio, prev);
    prev = ratio;
  }
}

TEST(Crosscheck, Fixture) {
  const auto y = Hypergraph::build(parse_poly(Field::create(7), "x1*x2+1"));
  const auto c = tuple_count_crosscheck(y, 2);
  EXPECT_EQ(c.N, fx::kCrossN_XyPlus1F7M2);
  EXPECT_EQ(c.S, fx::kCrossS_XyPlus1F7M2);
  EXPECT_TRUE(c.pass());
}

TEST(Crosscheck, BoundAcrossSmallFields) {
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
    const auto y = Hypergraph::build(parse_poly(Field::create(q), "x1*x2+1"));
    for (std::size_t m : {2u, 3u, 4u}) EXPECT_TRUE(tuple_count_crosscheck(y, m).pass()) << q << " " << m;
  }
}

TEST(SubsetFamily, Size) {
  const auto fam = subset_family(parse_poly(Field::create(5), "x1*x2+1"), 4);
  EXPECT_EQ(fam.size(), 6u);
  for (const auto& f : fam) EXPECT_EQ(f.nvars(), 4u);
}

}  // namespace
}  // namespace ffhyper
