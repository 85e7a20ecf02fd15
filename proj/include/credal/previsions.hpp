#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "credal/gambles.hpp"
#include "credal/rational.hpp"

namespace credal {

/// Expectation functional given by a probability mass function on a domain.
class LinearPrevision {
public:
  /// Throws ValidationError on a negative mass or when the masses do not sum to 1.
  LinearPrevision(Domain domain, std::vector<Rational> mass);

  static LinearPrevision point_mass(Domain domain, std::size_t index);
  static LinearPrevision uniform(Domain domain);

  const Domain& domain() const noexcept { return domain_; }
  const std::vector<Rational>& mass() const noexcept { return mass_; }
  const Rational& operator[](std::size_t index) const { return mass_[index]; }

  friend bool operator==(const LinearPrevision&, const LinearPrevision&) = default;

private:
  Domain domain_;
  std::vector<Rational> mass_;
};

Rational evaluate_linear(const LinearPrevision& p, const Gamble& f);

/// Lower envelope of a finite, non-empty set of linear previsions.
class CredalLowerPrevision {
public:
  explicit CredalLowerPrevision(std::vector<LinearPrevision> vertices);

  const Domain& domain() const noexcept { return vertices_.front().domain(); }
  const std::vector<LinearPrevision>& vertices() const noexcept { return vertices_; }

  friend bool operator==(const CredalLowerPrevision&, const CredalLowerPrevision&) = default;

private:
  std::vector<LinearPrevision> vertices_;
};

Rational evaluate_lower(const CredalLowerPrevision& lower, const Gamble& f);
Rational evaluate_upper(const CredalLowerPrevision& lower, const Gamble& f);

/// Drops every vertex that is a convex combination of the remaining ones.
/// Among duplicates the first occurrence is kept.
CredalLowerPrevision extreme_points(const CredalLowerPrevision& lower);
/// Indices (ascending) of the vertices extreme_points keeps.
std::vector<std::size_t> extreme_point_indices(const CredalLowerPrevision& lower);

/// True iff both vertex lists span the same convex hull.
bool same_hull(const CredalLowerPrevision& a, const CredalLowerPrevision& b);

struct Assessment {
  Gamble gamble;
  Rational lower_bound;
};

/// Lower-prevision assessments P(f_i) >= mu_i on one domain.
class AssessmentSet {
public:
  explicit AssessmentSet(Domain domain, std::vector<Assessment> items = {});

  const Domain& domain() const noexcept { return domain_; }
  const std::vector<Assessment>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  void add(Gamble gamble, Rational lower_bound);

private:
  Domain domain_;
  std::vector<Assessment> items_;
};

bool avoids_sure_loss(const AssessmentSet& assessments);

/// Minimum of P(f) over all mass functions dominating the assessments.
/// Throws SureLossError when there are none.
Rational natural_extension(const AssessmentSet& assessments, const Gamble& f);

struct CoherenceCorrection {
  std::size_t index;
  Rational assessed;
  Rational extended;
};

struct CoherenceReport {
  bool avoids_sure_loss = false;
  bool coherent = false;
  /// Assessments whose natural extension exceeds the assessed bound.
  std::vector<CoherenceCorrection> corrections;
};

CoherenceReport check_coherence(const AssessmentSet& assessments);

struct AuditCase {
  Gamble f;
  Gamble g;
  Rational scale;  // lambda >= 0
};

struct AxiomCheck {
  std::size_t case_index;
  std::string axiom;  // "P1", "P2", "P3", "monotone", "sandwich"
  bool passed;
};

struct AxiomAudit {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
};

/// Checks accepting sure gains, non-negative homogeneity, superadditivity,
/// monotonicity and the inf/sup sandwich on each case. Monotonicity is tested
/// on (min(f,g), f), which is always an ordered pair, and on (f, g) when f <= g.
AxiomAudit axiom_audit(const CredalLowerPrevision& lower, std::span<const AuditCase> cases);

}  // namespace credal
