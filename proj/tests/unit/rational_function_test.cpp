#include "graphmag/rational_function.hpp"

#include <gtest/gtest.h>

#include <random>

#include "graphmag/errors.hpp"

namespace graphmag {
namespace {

RationalFunction rf(Polynomial n, Polynomial d) { return {std::move(n), std::move(d)}; }

TEST(RationalFunction, CanonicalForm) {
  auto f = rf({6, -12}, Polynomial({1, 1}) * Polynomial({1, 0, -4}));
  EXPECT_EQ(f.numerator(), Polynomial({6}));
  EXPECT_EQ(f.denominator(), Polynomial({1, 3, 2}));

  auto g = rf({-2}, {-1, -4});
  EXPECT_EQ(g.numerator(), Polynomial({2}));
  EXPECT_EQ(g.denominator(), Polynomial({1, 4}));

  // Joint integer content is removed; the denominator's own content may remain.
  auto h = rf({2}, {4, 4});
  EXPECT_EQ(h.numerator(), Polynomial({1}));
  EXPECT_EQ(h.denominator(), Polynomial({2, 2}));

  // Lowest nonzero denominator coefficient positive.
  auto k = rf({1}, {0, -1, 1});
  EXPECT_EQ(k.denominator(), Polynomial({0, 1, -1}));
  EXPECT_EQ(k.numerator(), Polynomial({-1}));
}

TEST(RationalFunction, ZeroIsZeroOverOne) {
  auto z = rf({}, {5, 7});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.denominator(), Polynomial({1}));
  EXPECT_EQ(z, RationalFunction{});
}

TEST(RationalFunction, ZeroDenominatorThrows) { EXPECT_THROW(rf({1}, {}), DomainError); }

TEST(RationalFunction, ProductOfK2AndK3) {
  EXPECT_EQ(rf({2}, {1, 1}) * rf({3}, {1, 2}), rf({6}, {1, 3, 2}));
}

TEST(RationalFunction, TwoTrianglesMinusEdge) {
  auto c3 = rf({3}, {1, 2});
  auto c2 = rf({2}, {1, 1});
  EXPECT_EQ(c3 + c3 - c2, rf({4, 2}, {1, 3, 2}));
}

TEST(RationalFunction, SelfDifferenceIsZero) {
  auto x = rf({6, 8, -2}, {1, 4, 5, 2});
  EXPECT_EQ(x - x, RationalFunction{});
}

TEST(RationalFunction, DivisionByZeroThrows) { EXPECT_THROW(rf({1}, {1, 1}) / RationalFunction{}, DomainError); }

TEST(RationalFunction, EvaluatePoleThrows) {
  EXPECT_EQ(rf({6}, {1, 4}).evaluate(1), Rational(6, 5));
  EXPECT_THROW(rf({1}, {1, -1}).evaluate(1), PoleError);
  // The removable singularity of n(q-1)/(q^2-1) is gone after canonicalization.
  EXPECT_EQ(rf({-2, 2}, {-1, 0, 1}).evaluate(1), Rational(1));
}

TEST(RationalFunction, Rendering) {
  EXPECT_EQ(rf({6}, {1, 4}).to_string(), "6/(1+4q)");
  EXPECT_EQ(rf({4, -2}, {1, 2, -1}).to_string(), "(4-2q)/(1+2q-q^2)");
  EXPECT_EQ(RationalFunction(5).to_string(), "5");
  EXPECT_EQ(rf({1}, {2}).to_string(), "1/2");
}

RationalFunction random_rf(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-6, 6);
  std::uniform_int_distribution<int> deg(0, 3);
  auto poly = [&] {
    std::vector<Integer> v(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : v) x = c(rng);
    return Polynomial(std::move(v));
  };
  Polynomial d = poly();
  while (d.is_zero()) d = poly();
  return {poly(), d};
}

TEST(RationalFunctionProperty, CanonicalizationIdempotentAndFieldLaws) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    RationalFunction a = random_rf(rng);
    RationalFunction b = random_rf(rng);
    RationalFunction c = random_rf(rng);
    EXPECT_EQ(RationalFunction(a.numerator(), a.denominator()), a);
    // The same value in a scaled, non-canonical presentation.
    Polynomial s({3, -1, 2});
    EXPECT_EQ(RationalFunction(a.numerator() * s, a.denominator() * s), a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

}  // namespace
}  // namespace graphmag
