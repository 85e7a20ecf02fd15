#include <gtest/gtest.h>

#include "credal/bernstein.hpp"
#include "oracles.hpp"
#include "random_models.hpp"

using namespace credal;

namespace {

CategorySpace ab() { return CategorySpace({"a", "b"}); }
CategorySpace abc() { return CategorySpace({"a", "b", "c"}); }

SimplexPoint pt(const CategorySpace& s, std::vector<Rational> c) { return SimplexPoint(s, std::move(c)); }

BernsteinPoly poly2(unsigned degree, std::vector<Rational> coeffs) {
  return BernsteinPoly(Gamble(Domain::counts(ab(), degree), std::move(coeffs)));
}

std::vector<Rational> rs(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rational> out;
  for (auto [p, q] : xs) out.push_back(make_rational(p, q));
  return out;
}

MonomialForm theta_a_theta_b() { return MonomialForm(ab(), {{{1, 1}, Rational(1)}}); }

}  // namespace

TEST(SimplexPoint, Validation) {
  EXPECT_THROW(pt(ab(), rs({{1, 2}, {1, 3}})), ValidationError);
  EXPECT_THROW(pt(ab(), rs({{3, 2}, {-1, 2}})), ValidationError);
  EXPECT_THROW(pt(ab(), rs({{1, 1}})), ValidationError);
  EXPECT_EQ(SimplexPoint::vertex(ab(), 1).coords(), rs({{0, 1}, {1, 1}}));
}

TEST(Basis, PartitionOfUnityAndOracle) {
  testing_support::Generator gen(61);
  for (unsigned n = 0; n <= 5; ++n) {
    auto d = Domain::counts(abc(), n);
    for (int trial = 0; trial < 5; ++trial) {
      auto theta = gen.simplex_point(abc());
      Rational total = 0;
      for (std::size_t i = 0; i < d.size(); ++i) total += basis_eval(d.counts_at(i), theta);
      EXPECT_EQ(total, 1);
    }
  }
  auto theta = pt(ab(), rs({{1, 3}, {2, 3}}));
  EXPECT_EQ(basis_eval(CountVector(ab(), {1, 1}), theta), make_rational(4, 9));
}

TEST(Eval, MatchesOracle) {
  testing_support::Generator gen(67);
  for (unsigned n = 1; n <= 5; ++n) {
    auto p = gen.poly(abc(), n);
    std::vector<oracle::Counts> points(p.coefficients().domain().lattice().points());
    for (int trial = 0; trial < 5; ++trial) {
      auto theta = gen.simplex_point(abc());
      EXPECT_EQ(eval(p, theta), oracle::bernstein_eval(points, p.coefficients().values(), theta.coords()));
    }
  }
}

TEST(Mn, MatchesIidOracleAndFactorsThroughCounts) {
  testing_support::Generator gen(71);
  for (unsigned n = 1; n <= 4; ++n) {
    auto d = Domain::tuples(abc(), n);
    auto f = gen.gamble(d);
    auto theta = gen.simplex_point(abc());
    EXPECT_EQ(mn(f, theta), oracle::iid_expectation(f.values(), theta.coords(), n));
    auto g = gen.gamble(Domain::counts(abc(), n));
    EXPECT_EQ(comn(g, theta), eval(BernsteinPoly(g), theta));
  }
}

TEST(Elevate, HandExamples) {
  auto p = poly2(1, rs({{1, 1}, {0, 1}}));
  EXPECT_EQ(elevate(p, 1).coefficients().values(), rs({{1, 1}, {1, 2}, {0, 1}}));
  auto q = poly2(2, rs({{0, 1}, {1, 2}, {0, 1}}));
  EXPECT_EQ(elevate(q, 2).coefficients().values(), rs({{0, 1}, {1, 4}, {1, 3}, {1, 4}, {0, 1}}));
  EXPECT_EQ(elevate(q, 0).coefficients(), q.coefficients());
  EXPECT_THROW(elevate_to(q, 1), DegreeError);
}

TEST(Elevate, PreservesPolynomial) {
  testing_support::Generator gen(73);
  for (unsigned n = 1; n <= 4; ++n) {
    auto p = gen.poly(abc(), n);
    for (unsigned k = 1; k <= 2; ++k) {
      auto e = elevate(p, k);
      EXPECT_EQ(e.degree(), n + k);
      for (int trial = 0; trial < 5; ++trial) {
        auto theta = gen.simplex_point(abc());
        EXPECT_EQ(eval(e, theta), eval(p, theta));
      }
    }
    EXPECT_EQ(elevate(elevate(p, 1), 1).coefficients(), elevate(p, 2).coefficients());
    EXPECT_TRUE(elevate(p, 2) == p);
  }
}

TEST(Elevate, ConstantStaysConstant) {
  auto c = BernsteinPoly::constant(abc(), 2, make_rational(5, 3));
  auto e = elevate(c, 3);
  for (const auto& v : e.coefficients().values()) EXPECT_EQ(v, make_rational(5, 3));
}

TEST(Arithmetic, SumAndScaleAcrossDegrees) {
  testing_support::Generator gen(79);
  auto p = gen.poly(ab(), 2), q = gen.poly(ab(), 3);
  auto theta = gen.simplex_point(ab());
  EXPECT_EQ(eval(p + q, theta), eval(p, theta) + eval(q, theta));
  EXPECT_EQ(eval(p * make_rational(-2, 3), theta), make_rational(-2, 3) * eval(p, theta));
}

TEST(FromMonomials, ProductOfCoordinates) {
  auto b = from_monomials(theta_a_theta_b(), 2);
  EXPECT_EQ(b.coefficients().values(), rs({{0, 1}, {1, 2}, {0, 1}}));
  EXPECT_THROW(from_monomials(theta_a_theta_b(), 1), DegreeError);
  // Coefficient at degree 6 for counts (3,3): 3*3 / (6*5) = 3/10.
  auto b6 = from_monomials(theta_a_theta_b(), 6);
  EXPECT_EQ(b6.coefficient(std::vector<unsigned>{3, 3}), make_rational(3, 10));
}

TEST(FromMonomials, AgreesWithDirectEvaluation) {
  testing_support::Generator gen(83);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<MonomialTerm> terms;
    for (int t = 0; t < 4; ++t) {
      std::vector<unsigned> e{static_cast<unsigned>(gen.integer(0, 2)), static_cast<unsigned>(gen.integer(0, 1)),
                              static_cast<unsigned>(gen.integer(0, 1))};
      terms.push_back({e, gen.rational()});
    }
    MonomialForm q(abc(), terms);
    for (unsigned n = q.total_degree(); n <= q.total_degree() + 2; ++n) {
      if (n == 0) continue;
      auto b = from_monomials(q, n);
      for (int k = 0; k < 5; ++k) {
        auto theta = gen.simplex_point(abc());
        EXPECT_EQ(eval(b, theta), q.evaluate(theta));
      }
    }
  }
}

TEST(Bounds, EncloseRangeAndTighten) {
  auto q = theta_a_theta_b();
  Rational previous_max = 1;
  for (unsigned n = 2; n <= 12; n += 2) {
    auto b = bounds(from_monomials(q, n));
    EXPECT_LE(b.lower, 0);
    EXPECT_GE(b.upper, make_rational(1, 4));
    EXPECT_LT(b.upper, previous_max);
    // Brute-force maximum of the coefficients h(i) = i(n-i)/(n(n-1)).
    Rational brute = 0;
    for (unsigned i = 0; i <= n; ++i) {
      Rational c(i * (n - i), n * (n - 1));
      c.canonicalize();
      if (c > brute) brute = c;
    }
    EXPECT_EQ(b.upper, brute);
    previous_max = b.upper;
  }
  EXPECT_EQ(bounds(from_monomials(q, 2)).upper, make_rational(1, 2));
  EXPECT_EQ(bounds(from_monomials(q, 4)).upper, make_rational(1, 3));
}

TEST(Bounds, ContainValuesOnGrid) {
  testing_support::Generator gen(89);
  auto p = gen.poly(abc(), 3);
  auto b = bounds(p);
  for (const auto& theta : simplex_grid(abc(), 6)) {
    auto v = eval(p, theta);
    EXPECT_LE(b.lower, v);
    EXPECT_LE(v, b.upper);
  }
}

TEST(Approximant, ReproducesAffineFunctions) {
  SimplexFunction h = [](const SimplexPoint& t) -> Rational { return 2 * t[0] - t[1] + make_rational(1, 3); };
  auto p = bernstein_approximant(h, abc(), 3);
  EXPECT_EQ(grid_gap(p, h, simplex_grid(abc(), 5)), 0);
  EXPECT_THROW(bernstein_approximant(h, abc(), 0), DegreeError);
}

TEST(Approximant, SquareHasExactGap) {
  SimplexFunction h = [](const SimplexPoint& t) -> Rational { return t[0] * t[0]; };
  auto theta = pt(ab(), rs({{1, 3}, {2, 3}}));
  for (unsigned n = 1; n <= 10; ++n) {
    auto p = bernstein_approximant(h, ab(), n);
    // theta_a^2 + theta_a theta_b / n
    EXPECT_EQ(eval(p, theta) - h(theta), make_rational(2, 9 * static_cast<long>(n)));
  }
}

TEST(Grid, SizeAndPoints) {
  auto g = simplex_grid(abc(), 4);
  EXPECT_EQ(g.size(), 15u);
  EXPECT_EQ(g.front().coords(), rs({{1, 1}, {0, 1}, {0, 1}}));
}
