#pragma once

// Exact rational linear programming: dense two-phase simplex with Bland's
// anti-cycling rule. All decision variables are non-negative.

#include <cstddef>
#include <span>
#include <vector>

#include "credal/rational.hpp"

namespace credal::lp {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation;
  Rational rhs;
};

/// minimize objective . x  subject to constraints, x >= 0.
class LinearProgram {
public:
  explicit LinearProgram(std::size_t variables);

  std::size_t variables() const noexcept { return variables_; }
  void set_objective(std::vector<Rational> costs);
  void add_constraint(std::vector<Rational> coeffs, Relation relation, Rational rhs);

  const std::vector<Rational>& objective() const noexcept { return objective_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }

private:
  std::size_t variables_;
  std::vector<Rational> objective_;
  std::vector<Constraint> constraints_;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational value;                // optimal objective value (Optimal only)
  std::vector<Rational> point;   // an optimal vertex (Optimal only)
};

Result minimize(const LinearProgram& program);

/// True iff point is a convex combination of the generators.
bool in_convex_hull(std::span<const std::vector<Rational>> generators,
                    std::span<const Rational> point);

/// A direction h with h.point < min_j h.generator_j and |h_i| <= 1, or an
/// empty vector when point lies in the convex hull.
std::vector<Rational> separating_direction(std::span<const std::vector<Rational>> generators,
                                           std::span<const Rational> point);

}  // namespace credal::lp
