#pragma once

// Representation of exchangeable sequences by a lower prevision on
// polynomials over the simplex, and the time-consistent count families it
// generates.

#include <optional>
#include <span>
#include <vector>

#include "credal/bernstein.hpp"
#include "credal/expression.hpp"
#include "credal/previsions.hpp"

namespace credal {

struct WeightedPoint {
  SimplexPoint point;
  Rational weight;

  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

/// Finitely supported distribution over chances theta.
class SimplexDistribution {
public:
  /// Throws ValidationError unless weights are >= 0, sum to 1 and points are distinct.
  explicit SimplexDistribution(std::vector<WeightedPoint> support);
  static SimplexDistribution point_mass(SimplexPoint theta);

  const CategorySpace& space() const noexcept { return support_.front().point.space(); }
  const std::vector<WeightedPoint>& support() const noexcept { return support_; }

  /// sum_j w_j p(theta_j).
  Rational expectation(const BernsteinPoly& p) const;

  friend bool operator==(const SimplexDistribution&, const SimplexDistribution&) = default;

private:
  std::vector<WeightedPoint> support_;
};

/// Lower envelope of finitely many simplex distributions.
class SimplexLowerPrevision {
public:
  explicit SimplexLowerPrevision(std::vector<SimplexDistribution> vertices);

  const CategorySpace& space() const noexcept { return vertices_.front().space(); }
  const std::vector<SimplexDistribution>& vertices() const noexcept { return vertices_; }

  friend bool operator==(const SimplexLowerPrevision&, const SimplexLowerPrevision&) = default;

private:
  std::vector<SimplexDistribution> vertices_;
};

Rational r_eval(const SimplexLowerPrevision& r, const BernsteinPoly& p);

struct FamilyLevel {
  CredalLowerPrevision tuples;  // on X^n
  CredalLowerPrevision counts;  // on N^n
};

/// The n-th member of the exchangeable family generated by r.
FamilyLevel family_from_r(const SimplexLowerPrevision& r, unsigned n,
                          std::size_t cap = kDefaultEnumerationCap);

/// Count models Q^1 .. Q^H on a common category space.
class CountFamily {
public:
  explicit CountFamily(std::vector<CredalLowerPrevision> levels);
  static CountFamily from_representation(const SimplexLowerPrevision& r, unsigned horizon,
                                         std::size_t cap = kDefaultEnumerationCap);

  unsigned horizon() const noexcept { return static_cast<unsigned>(levels_.size()); }
  const CategorySpace& space() const noexcept { return levels_.front().domain().space(); }
  /// Q^n, 1 <= n <= horizon.
  const CredalLowerPrevision& level(unsigned n) const;
  const std::vector<CredalLowerPrevision>& levels() const noexcept { return levels_; }

private:
  std::vector<CredalLowerPrevision> levels_;
};

/// Image of a count mass function on N^{n+k} on N^n under sampling n of the
/// n+k draws without replacement.
LinearPrevision push_down(const LinearPrevision& upper_level, const Domain& target);

/// Q^n(b_p^n) for every n from max(deg p, 1) to the horizon.
std::vector<Rational> r_from_family_levels(const CountFamily& family, const BernsteinPoly& p);

/// The common value of r_from_family_levels. Throws DegreeError when deg p
/// exceeds the horizon and InconsistentFamilyError when levels disagree.
Rational r_from_family(const CountFamily& family, const BernsteinPoly& p);

struct ConsistencyWitness {
  unsigned level;        // n
  unsigned upper_level;  // n + k
  Gamble gamble;         // h on N^n
  Rational level_value;  // lower Q^n(h)
  Rational pushed_value; // lower envelope of pushed-down Q^{n+k} vertices at h
};

struct ConsistencyReport {
  bool consistent = false;
  std::optional<ConsistencyWitness> witness;
};

ConsistencyReport check_time_consistency(const CountFamily& family);

/// Lower prevision of h(F_n), F_n the frequency vector after n draws.
Rational frequency_prevision(const SimplexLowerPrevision& r, const Expression& h, unsigned n);

struct ConvergenceRow {
  unsigned n;
  Rational value;
  std::optional<Rational> reference;  // r_eval(r, h) when h is a polynomial
  std::optional<Rational> gap;        // value - reference
};

std::vector<ConvergenceRow> convergence_table(const SimplexLowerPrevision& r, const Expression& h,
                                              std::span<const unsigned> ns);

/// Lower prevision of a cylinder gamble f on X^m under the generated sequence
/// model; equals P^m(f) because the family is time consistent.
Rational natural_extension_cylinder(const SimplexLowerPrevision& r, const Gamble& f);
Rational natural_extension_cylinder(const CountFamily& family, const Gamble& f);

}  // namespace credal
