#include "graphmag/series.hpp"

#include <gtest/gtest.h>

#include <random>

#include "graphmag/errors.hpp"

namespace graphmag {
namespace {

// Geometric-series oracle for c / (1 + a q): c * (-a)^k.
TruncatedSeries geometric(long c, long a, std::size_t order) {
  TruncatedSeries s(order);
  Integer term = c;
  for (std::size_t k = 0; k <= order; ++k) {
    s[k] = term;
    term *= -a;
  }
  return s;
}

TEST(SeriesFromRational, W) {
  RationalFunction w(Polynomial{6}, Polynomial{1, 4});
  EXPECT_EQ(series_from_rational(w, 3), TruncatedSeries(3, {6, -24, 96, -384}));
  EXPECT_EQ(series_from_rational(w, 3), geometric(6, 4, 3));
}

TEST(SeriesFromRational, Petersen) {
  RationalFunction p(Polynomial{10}, Polynomial{1, 3, 6});
  EXPECT_EQ(series_from_rational(p, 4), TruncatedSeries(4, {10, -30, 30, 90, -450}));
}

TEST(SeriesFromRational, CompleteGraph) {
  RationalFunction k3(Polynomial{3}, Polynomial{1, 2});
  EXPECT_EQ(series_from_rational(k3, 2), TruncatedSeries(2, {3, -6, 12}));
}

TEST(SeriesFromRational, NegativeUnitConstantTerm) {
  // 1/(-1+q) is canonicalized with the denominator negated, but a raw -1 also works.
  RationalFunction f(Polynomial{1}, Polynomial{-1, 0, 1});
  EXPECT_EQ(series_from_rational(f, 4), TruncatedSeries(4, {-1, 0, -1, 0, -1}));
}

TEST(SeriesFromRational, NonUnitConstantTermThrows) {
  RationalFunction f(Polynomial{1}, Polynomial{2, 1});
  EXPECT_THROW(series_from_rational(f, 3), NotIntegerInvertibleError);
  RationalFunction g(Polynomial{1}, Polynomial{0, 1});
  EXPECT_THROW(series_from_rational(g, 3), NotIntegerInvertibleError);
}

TEST(TruncatedSeries, Arithmetic) {
  EXPECT_EQ(TruncatedSeries(2, {1, 1, 0}) + TruncatedSeries(2, {0, -1, 2}), TruncatedSeries(2, {1, 0, 2}));
  EXPECT_EQ(TruncatedSeries(1, {1, 1}) * TruncatedSeries(1, {1, -1}), TruncatedSeries(1, {1, 0}));
  EXPECT_EQ(TruncatedSeries(1, {2, -4}) * Integer(3), TruncatedSeries(1, {6, -12}));
}

TEST(TruncatedSeries, MixedOrdersTruncateToMinimum) {
  auto s = TruncatedSeries(3, {1, 2, 3, 4}) + TruncatedSeries(1, {1, 1});
  EXPECT_EQ(s.order(), 1u);
  EXPECT_EQ(s, TruncatedSeries(1, {2, 3}));
  auto p = TruncatedSeries(3, {1, 1, 1, 1}) * TruncatedSeries(2, {1, 1, 1});
  EXPECT_EQ(p, TruncatedSeries(2, {1, 2, 3}));
}

TEST(SeriesProperty, DenominatorTimesSeriesIsNumerator) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> c(-9, 9);
  std::uniform_int_distribution<int> deg(0, 4);
  for (int i = 0; i < 300; ++i) {
    std::vector<Integer> den(static_cast<std::size_t>(deg(rng) + 1));
    std::vector<Integer> num(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : den) x = c(rng);
    for (auto& x : num) x = c(rng);
    den[0] = (i % 2) ? 1 : -1;
    RationalFunction f{Polynomial(num), Polynomial(den)};
    const std::size_t order = 12;
    auto s = series_from_rational(f, order);
    auto back = TruncatedSeries::from_polynomial(f.denominator(), order) * s;
    EXPECT_EQ(back, TruncatedSeries::from_polynomial(f.numerator(), order)) << f;
  }
}

}  // namespace
}  // namespace graphmag
