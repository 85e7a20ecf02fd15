#include <gtest/gtest.h>

#include "credal/exchangeability.hpp"
#include "oracles.hpp"
#include "random_models.hpp"

using namespace credal;

namespace {

CategorySpace abc() { return CategorySpace({"a", "b", "c"}); }
CategorySpace ab() { return CategorySpace({"a", "b"}); }

}  // namespace

TEST(Muhy, HandExamples) {
  auto d = Domain::tuples(ab(), 2);
  // f = indicator of (a,b); atom of {a:1,b:1} = {(a,b),(b,a)}.
  auto f = Gamble::indicator(d, d.index_of_tuple(std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(muhy(f, CountVector(ab(), {1, 1})), make_rational(1, 2));
  EXPECT_EQ(muhy(f, CountVector(ab(), {2, 0})), 0);
  EXPECT_THROW(muhy(f, CountVector(ab(), {2, 1})), DomainMismatchError);
}

TEST(Muhy, MatchesOracleAndGambleForm) {
  testing_support::Generator gen(41);
  for (unsigned n = 1; n <= 4; ++n) {
    auto d = Domain::tuples(abc(), n);
    for (int trial = 0; trial < 5; ++trial) {
      auto f = gen.gamble(d);
      auto g = muhy_gamble(f);
      ASSERT_TRUE(g.domain().is_counts());
      for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& c = g.domain().counts_at(i);
        EXPECT_EQ(g[i], oracle::muhy(f.values(), 3, c));
        EXPECT_EQ(g[i], muhy(f, CountVector(abc(), c)));
      }
    }
  }
}

TEST(Muhy, PermutationInvariantAndLinear) {
  testing_support::Generator gen(43);
  auto d = Domain::tuples(abc(), 3);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = gen.gamble(d), g = gen.gamble(d);
    auto base = muhy_gamble(f);
    for (const auto& pi : Permutation::all(3)) EXPECT_EQ(muhy_gamble(permute(f, pi)), base);
    auto lambda = gen.rational();
    EXPECT_EQ(muhy_gamble(f * lambda + g), base * lambda + muhy_gamble(g));
  }
}

TEST(CountDistribution, PushesForward) {
  auto d = Domain::tuples(ab(), 2);
  CredalLowerPrevision model({LinearPrevision::point_mass(d, d.index_of_tuple(std::vector<std::size_t>{0, 1}))});
  auto q = count_distribution(model);
  ASSERT_EQ(q.vertices().size(), 1u);
  const auto& cd = q.domain();
  EXPECT_EQ(q.vertices()[0][cd.index_of_counts(std::vector<unsigned>{1, 1})], 1);
  auto map = count_index_map(d, cd);
  EXPECT_EQ(map.size(), 4u);
}

TEST(ExchangeableFromCount, RoundTripsAndIsExchangeable) {
  testing_support::Generator gen(47);
  for (unsigned n = 1; n <= 4; ++n) {
    auto cd = Domain::counts(abc(), n);
    auto Q = gen.credal(cd, 3);
    auto P = exchangeable_from_count(Q);
    EXPECT_TRUE(is_exchangeable(P).exchangeable);
    auto back = count_distribution(P);
    EXPECT_EQ(back, Q);
    // Lower previsions of tuple gambles factor through muhy.
    for (int trial = 0; trial < 10; ++trial) {
      auto f = gen.gamble(P.domain());
      EXPECT_EQ(evaluate_lower(P, f), evaluate_lower(Q, muhy_gamble(f)));
    }
  }
}

TEST(IsExchangeable, FindsWitness) {
  auto d = Domain::tuples(ab(), 2);
  auto ab_idx = d.index_of_tuple(std::vector<std::size_t>{0, 1});
  CredalLowerPrevision model({LinearPrevision::uniform(d), LinearPrevision::point_mass(d, ab_idx)});
  auto report = is_exchangeable(model);
  EXPECT_FALSE(report.exchangeable);
  ASSERT_TRUE(report.witness);
  EXPECT_EQ(report.witness->vertex_index, 1u);
  EXPECT_EQ(report.witness->position, 0u);
  const auto& p = model.vertices()[1];
  auto z = d.tuple_at(report.witness->point);
  std::swap(z[0], z[1]);
  EXPECT_NE(p[report.witness->point], p[d.index_of_tuple(z)]);
}

TEST(IsExchangeable, IgnoresNonExtremeAsymmetricVertex) {
  // The mixture of (a,b) and (b,a) point masses is exchangeable... but each
  // point mass alone is not; a symmetric interior vertex never matters.
  auto d = Domain::tuples(ab(), 2);
  std::vector<Rational> sym{Rational(0), make_rational(1, 2), make_rational(1, 2), Rational(0)};
  std::vector<Rational> lean{Rational(0), make_rational(1, 4), make_rational(3, 4), Rational(0)};
  std::vector<Rational> lean2{Rational(0), make_rational(3, 4), make_rational(1, 4), Rational(0)};
  CredalLowerPrevision inner({LinearPrevision(d, sym), LinearPrevision(d, lean), LinearPrevision(d, lean2)});
  EXPECT_FALSE(is_exchangeable(inner).exchangeable);
  CredalLowerPrevision ok({LinearPrevision(d, sym), LinearPrevision::uniform(d)});
  EXPECT_TRUE(is_exchangeable(ok).exchangeable);
}

TEST(IsExchangeable, IidModelsAreExchangeable) {
  auto d = Domain::tuples(abc(), 3);
  std::vector<Rational> theta{make_rational(1, 6), make_rational(1, 3), make_rational(1, 2)};
  auto p = Gamble::tabulate(d, [&](std::size_t i) {
    Rational prod = 1;
    for (auto e : d.tuple_at(i)) prod *= theta[e];
    return prod;
  });
  CredalLowerPrevision model({LinearPrevision(d, p.values())});
  EXPECT_TRUE(is_exchangeable(model).exchangeable);
}

TEST(Marginal, SumsOutTrailingCoordinates) {
  auto d = Domain::tuples(ab(), 2);
  std::vector<Rational> m{make_rational(1, 10), make_rational(2, 10), make_rational(3, 10), make_rational(4, 10)};
  auto mar = marginal(CredalLowerPrevision({LinearPrevision(d, m)}), 1);
  EXPECT_EQ(mar.vertices()[0].mass(), (std::vector<Rational>{make_rational(3, 10), make_rational(7, 10)}));
  EXPECT_THROW(marginal(CredalLowerPrevision({LinearPrevision(d, m)}), 3), ValidationError);
  EXPECT_THROW(marginal(CredalLowerPrevision({LinearPrevision(d, m)}), 0), ValidationError);
}

TEST(Marginal, AgreesWithCylindricalExtension) {
  testing_support::Generator gen(53);
  auto d = Domain::tuples(abc(), 3);
  auto P = gen.credal(d, 3);
  for (unsigned n = 1; n <= 3; ++n) {
    auto mar = marginal(P, n);
    for (int trial = 0; trial < 10; ++trial) {
      auto f = gen.gamble(mar.domain());
      EXPECT_EQ(evaluate_lower(mar, f), evaluate_lower(P, cylindrical_extension(f, 3 - n)));
    }
  }
}
