#include <gtest/gtest.h>

#include "credal/lp.hpp"

using namespace credal;
using namespace credal::lp;

namespace {
std::vector<Rational> row(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}
}  // namespace

TEST(Simplex, SolvesSmallProgram) {
  // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6  -> optimum at (8/5, 6/5), value -14/5.
  LinearProgram p(2);
  p.set_objective(row({-1, -1}));
  p.add_constraint(row({1, 2}), Relation::LessEqual, 4);
  p.add_constraint(row({3, 1}), Relation::LessEqual, 6);
  auto r = minimize(p);
  ASSERT_EQ(r.status, Status::Optimal);
  EXPECT_EQ(r.value, make_rational(-14, 5));
  EXPECT_EQ(r.point[0], make_rational(8, 5));
  EXPECT_EQ(r.point[1], make_rational(6, 5));
}

TEST(Simplex, DetectsInfeasibility) {
  LinearProgram p(1);
  p.add_constraint(row({1}), Relation::GreaterEqual, 2);
  p.add_constraint(row({1}), Relation::LessEqual, 1);
  EXPECT_EQ(minimize(p).status, Status::Infeasible);
}

TEST(Simplex, DetectsUnboundedness) {
  LinearProgram p(2);
  p.set_objective(row({-1, 0}));
  p.add_constraint(row({1, -1}), Relation::LessEqual, 1);
  EXPECT_EQ(minimize(p).status, Status::Unbounded);
}

TEST(Simplex, HandlesRedundantEqualitiesAndNegativeRhs) {
  LinearProgram p(3);
  p.set_objective(row({1, 2, 3}));
  p.add_constraint(row({1, 1, 1}), Relation::Equal, 1);
  p.add_constraint(row({2, 2, 2}), Relation::Equal, 2);
  p.add_constraint(row({-1, 0, 0}), Relation::LessEqual, -1);  // x >= 1
  auto r = minimize(p);
  ASSERT_EQ(r.status, Status::Optimal);
  EXPECT_EQ(r.value, 1);
}

TEST(Simplex, DegenerateCyclingExampleTerminates) {
  // Beale's classic cycling example; Bland's rule must terminate.
  LinearProgram p(4);
  p.set_objective({make_rational(-3, 4), Rational(150), make_rational(-1, 50), Rational(6)});
  p.add_constraint({make_rational(1, 4), Rational(-60), make_rational(-1, 25), Rational(9)},
                   Relation::LessEqual, 0);
  p.add_constraint({make_rational(1, 2), Rational(-90), make_rational(-1, 50), Rational(3)},
                   Relation::LessEqual, 0);
  p.add_constraint(row({0, 0, 1, 0}), Relation::LessEqual, 1);
  auto r = minimize(p);
  ASSERT_EQ(r.status, Status::Optimal);
  EXPECT_EQ(r.value, make_rational(-1, 20));
}

TEST(Hull, MembershipAndSeparation) {
  std::vector<std::vector<Rational>> gens{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  std::vector<Rational> mid{make_rational(1, 3), make_rational(2, 3)};
  std::vector<Rational> out{Rational(1), Rational(1)};
  EXPECT_TRUE(in_convex_hull(gens, mid));
  EXPECT_FALSE(in_convex_hull(gens, out));
  EXPECT_TRUE(separating_direction(gens, mid).empty());
  auto h = separating_direction(gens, out);
  ASSERT_EQ(h.size(), 2u);
  Rational at_point = h[0] * out[0] + h[1] * out[1];
  for (const auto& g : gens) EXPECT_LT(at_point, h[0] * g[0] + h[1] * g[1]);
}
