#include "credal/lp.hpp"

#include "credal/errors.hpp"

namespace credal::lp {

LinearProgram::LinearProgram(std::size_t variables)
    : variables_(variables), objective_(variables, Rational(0)) {}

void LinearProgram::set_objective(std::vector<Rational> costs) {
  if (costs.size() != variables_) throw ValidationError("objective length mismatch");
  objective_ = std::move(costs);
}

void LinearProgram::add_constraint(std::vector<Rational> coeffs, Relation relation, Rational rhs) {
  if (coeffs.size() != variables_) throw ValidationError("constraint length mismatch");
  constraints_.push_back({std::move(coeffs), relation, std::move(rhs)});
}

namespace {

class Tableau {
public:
  explicit Tableau(const LinearProgram& program) : originals_(program.variables()) {
    const auto& rows = program.constraints();
    std::size_t slacks = 0, artificials = 0;
    for (const auto& c : rows) {
      bool flip = c.rhs < 0;
      Relation rel = c.relation;
      if (flip && rel != Relation::Equal)
        rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
      if (rel != Relation::Equal) ++slacks;
      if (rel != Relation::LessEqual) ++artificials;
    }
    first_artificial_ = originals_ + slacks;
    columns_ = first_artificial_ + artificials;
    rhs_ = columns_;

    std::size_t next_slack = originals_, next_artificial = first_artificial_;
    for (const auto& c : rows) {
      std::vector<Rational> row(columns_ + 1, Rational(0));
      bool flip = c.rhs < 0;
      Relation rel = c.relation;
      if (flip && rel != Relation::Equal)
        rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
      for (std::size_t j = 0; j < originals_; ++j) row[j] = flip ? Rational(-c.coeffs[j]) : c.coeffs[j];
      row[rhs_] = flip ? Rational(-c.rhs) : c.rhs;
      std::size_t basic;
      if (rel == Relation::LessEqual) {
        row[next_slack] = 1;
        basic = next_slack++;
      } else {
        if (rel == Relation::GreaterEqual) row[next_slack++] = -1;
        row[next_artificial] = 1;
        basic = next_artificial++;
      }
      rows_.push_back(std::move(row));
      basis_.push_back(basic);
    }
  }

  // Returns false when the constraints are infeasible.
  bool phase_one() {
    std::vector<Rational> costs(columns_, Rational(0));
    for (std::size_t j = first_artificial_; j < columns_; ++j) costs[j] = 1;
    load_costs(costs);
    run(columns_);
    if (-reduced_[rhs_] > 0) return false;
    expel_artificials();
    return true;
  }

  // Returns false when unbounded.
  bool phase_two(const std::vector<Rational>& objective) {
    std::vector<Rational> costs(columns_, Rational(0));
    for (std::size_t j = 0; j < originals_; ++j) costs[j] = objective[j];
    load_costs(costs);
    return run(first_artificial_);
  }

  Rational value() const { return -reduced_[rhs_]; }

  std::vector<Rational> point() const {
    std::vector<Rational> x(originals_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < originals_) x[basis_[i]] = rows_[i][rhs_];
    return x;
  }

private:
  void load_costs(const std::vector<Rational>& costs) {
    reduced_.assign(columns_ + 1, Rational(0));
    for (std::size_t j = 0; j < columns_; ++j) reduced_[j] = costs[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = costs[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= columns_; ++j)
        if (rows_[i][j] != 0) reduced_[j] -= cb * rows_[i][j];
    }
  }

  // Bland's rule: lowest-index improving column, lowest-index basic variable
  // among ratio-test ties. `limit` excludes columns at or beyond it.
  bool run(std::size_t limit) {
    for (;;) {
      std::size_t entering = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (reduced_[j] < 0) {
          entering = j;
          break;
        }
      if (entering == limit) return true;

      std::size_t leaving = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][entering] <= 0) continue;
        Rational ratio = rows_[i][rhs_] / rows_[i][entering];
        if (leaving == rows_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == rows_.size()) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows_[r][c];
    for (auto& v : rows_[r])
      if (v != 0) v /= p;
    auto eliminate = [&](std::vector<Rational>& row) {
      Rational factor = row[c];
      if (factor == 0) return;
      for (std::size_t j = 0; j <= columns_; ++j)
        if (rows_[r][j] != 0) row[j] -= factor * rows_[r][j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) eliminate(rows_[i]);
    eliminate(reduced_);
    basis_[r] = c;
  }

  void expel_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial_;
      for (std::size_t j = 0; j < first_artificial_; ++j)
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      if (col < first_artificial_) {
        pivot(i, col);
        ++i;
      } else {
        // Redundant equality: the row is a combination of the others.
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t originals_;
  std::size_t first_artificial_ = 0;
  std::size_t columns_ = 0;
  std::size_t rhs_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
};

}  // namespace

Result minimize(const LinearProgram& program) {
  Tableau tableau(program);
  Result result;
  if (!tableau.phase_one()) {
    result.status = Status::Infeasible;
    return result;
  }
  if (!tableau.phase_two(program.objective())) {
    result.status = Status::Unbounded;
    return result;
  }
  result.status = Status::Optimal;
  result.value = tableau.value();
  result.point = tableau.point();
  return result;
}

bool in_convex_hull(std::span<const std::vector<Rational>> generators,
                    std::span<const Rational> point) {
  if (generators.empty()) return false;
  LinearProgram program(generators.size());
  for (std::size_t d = 0; d < point.size(); ++d) {
    std::vector<Rational> row(generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j) row[j] = generators[j].at(d);
    program.add_constraint(std::move(row), Relation::Equal, point[d]);
  }
  program.add_constraint(std::vector<Rational>(generators.size(), Rational(1)), Relation::Equal,
                         Rational(1));
  return minimize(program).status == Status::Optimal;
}

std::vector<Rational> separating_direction(std::span<const std::vector<Rational>> generators,
                                           std::span<const Rational> point) {
  // Variables: h+ (d), h- (d), t+ , t-. Maximise t subject to
  // (g_j - point).h >= t and 0 <= h+, h- <= 1.
  const std::size_t d = point.size();
  const std::size_t vars = 2 * d + 2;
  LinearProgram program(vars);
  std::vector<Rational> costs(vars, Rational(0));
  costs[2 * d] = -1;
  costs[2 * d + 1] = 1;
  program.set_objective(std::move(costs));
  for (const auto& g : generators) {
    std::vector<Rational> row(vars, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      Rational diff = g.at(i) - point[i];
      row[i] = diff;
      row[d + i] = -diff;
    }
    row[2 * d] = -1;
    row[2 * d + 1] = 1;
    program.add_constraint(std::move(row), Relation::GreaterEqual, Rational(0));
  }
  for (std::size_t i = 0; i < 2 * d; ++i) {
    std::vector<Rational> row(vars, Rational(0));
    row[i] = 1;
    program.add_constraint(std::move(row), Relation::LessEqual, Rational(1));
  }
  auto result = minimize(program);
  if (result.status != Status::Optimal || result.value >= 0) return {};
  std::vector<Rational> h(d);
  for (std::size_t i = 0; i < d; ++i) h[i] = result.point[i] - result.point[d + i];
  return h;
}

}  // namespace credal::lp
