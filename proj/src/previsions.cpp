#include "credal/previsions.hpp"

#include <algorithm>

#include "credal/lp.hpp"

namespace credal {

LinearPrevision::LinearPrevision(Domain domain, std::vector<Rational> mass)
    : domain_(std::move(domain)), mass_(std::move(mass)) {
  if (mass_.size() != domain_.size())
    throw DomainMismatchError("mass function has " + std::to_string(mass_.size()) +
                              " entries but the domain has " + std::to_string(domain_.size()));
  Rational total = 0;
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    if (mass_[i] < 0)
      throw ValidationError("negative mass " + to_string(mass_[i]) + " at " +
                            domain_.point_label(i));
    total += mass_[i];
  }
  if (total != 1) throw ValidationError("masses sum to " + to_string(total) + ", not 1");
}

LinearPrevision LinearPrevision::point_mass(Domain domain, std::size_t index) {
  std::vector<Rational> mass(domain.size(), Rational(0));
  mass.at(index) = 1;
  return LinearPrevision(std::move(domain), std::move(mass));
}

LinearPrevision LinearPrevision::uniform(Domain domain) {
  Rational share(1, domain.size());
  auto n = domain.size();
  return LinearPrevision(std::move(domain), std::vector<Rational>(n, share));
}

Rational evaluate_linear(const LinearPrevision& p, const Gamble& f) {
  require_same_domain(p.domain(), f.domain(), "linear prevision");
  Rational sum = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (p[i] != 0) sum += p[i] * f[i];
  return sum;
}

CredalLowerPrevision::CredalLowerPrevision(std::vector<LinearPrevision> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw ValidationError("credal set needs at least one vertex");
  for (const auto& v : vertices_) require_same_domain(vertices_.front().domain(), v.domain(), "credal set");
}

Rational evaluate_lower(const CredalLowerPrevision& lower, const Gamble& f) {
  Rational best = evaluate_linear(lower.vertices().front(), f);
  for (std::size_t i = 1; i < lower.vertices().size(); ++i)
    best = std::min(best, evaluate_linear(lower.vertices()[i], f));
  return best;
}

Rational evaluate_upper(const CredalLowerPrevision& lower, const Gamble& f) {
  return -evaluate_lower(lower, -f);
}

namespace {

std::vector<std::vector<Rational>> masses_of(const CredalLowerPrevision& lower) {
  std::vector<std::vector<Rational>> out;
  out.reserve(lower.vertices().size());
  for (const auto& v : lower.vertices()) out.push_back(v.mass());
  return out;
}

}  // namespace

std::vector<std::size_t> extreme_point_indices(const CredalLowerPrevision& lower) {
  std::vector<std::size_t> kept(lower.vertices().size());
  for (std::size_t i = 0; i < kept.size(); ++i) kept[i] = i;
  for (std::size_t pos = kept.size(); pos-- > 0;) {
    if (kept.size() == 1) break;
    std::vector<std::vector<Rational>> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != pos) others.push_back(lower.vertices()[kept[j]].mass());
    if (lp::in_convex_hull(others, lower.vertices()[kept[pos]].mass()))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return kept;
}

CredalLowerPrevision extreme_points(const CredalLowerPrevision& lower) {
  std::vector<LinearPrevision> kept;
  for (auto i : extreme_point_indices(lower)) kept.push_back(lower.vertices()[i]);
  return CredalLowerPrevision(std::move(kept));
}

bool same_hull(const CredalLowerPrevision& a, const CredalLowerPrevision& b) {
  require_same_domain(a.domain(), b.domain(), "hull comparison");
  auto ga = masses_of(a), gb = masses_of(b);
  for (const auto& v : ga)
    if (!lp::in_convex_hull(gb, v)) return false;
  for (const auto& v : gb)
    if (!lp::in_convex_hull(ga, v)) return false;
  return true;
}

AssessmentSet::AssessmentSet(Domain domain, std::vector<Assessment> items)
    : domain_(std::move(domain)) {
  for (auto& a : items) add(std::move(a.gamble), std::move(a.lower_bound));
}

void AssessmentSet::add(Gamble gamble, Rational lower_bound) {
  require_same_domain(domain_, gamble.domain(), "assessment");
  items_.push_back({std::move(gamble), std::move(lower_bound)});
}

namespace {

lp::LinearProgram dominating_set_program(const AssessmentSet& assessments) {
  const std::size_t n = assessments.domain().size();
  lp::LinearProgram program(n);
  program.add_constraint(std::vector<Rational>(n, Rational(1)), lp::Relation::Equal, Rational(1));
  for (const auto& a : assessments.items())
    program.add_constraint(a.gamble.values(), lp::Relation::GreaterEqual, a.lower_bound);
  return program;
}

}  // namespace

bool avoids_sure_loss(const AssessmentSet& assessments) {
  return lp::minimize(dominating_set_program(assessments)).status == lp::Status::Optimal;
}

Rational natural_extension(const AssessmentSet& assessments, const Gamble& f) {
  require_same_domain(assessments.domain(), f.domain(), "natural extension");
  auto program = dominating_set_program(assessments);
  program.set_objective(f.values());
  auto result = lp::minimize(program);
  if (result.status == lp::Status::Infeasible)
    throw SureLossError("assessments incur sure loss: no dominating linear prevision");
  // Bounded: the feasible set lies in the probability simplex.
  return result.value;
}

CoherenceReport check_coherence(const AssessmentSet& assessments) {
  CoherenceReport report;
  report.avoids_sure_loss = avoids_sure_loss(assessments);
  if (!report.avoids_sure_loss) return report;
  for (std::size_t i = 0; i < assessments.size(); ++i) {
    const auto& a = assessments.items()[i];
    Rational extended = natural_extension(assessments, a.gamble);
    if (extended != a.lower_bound) report.corrections.push_back({i, a.lower_bound, extended});
  }
  report.coherent = report.corrections.empty();
  return report;
}

bool AxiomAudit::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

AxiomAudit axiom_audit(const CredalLowerPrevision& lower, std::span<const AuditCase> cases) {
  AxiomAudit audit;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& [f, g, scale] = cases[i];
    if (scale < 0) throw ValidationError("homogeneity scale must be non-negative");
    Rational lf = evaluate_lower(lower, f);
    Rational lg = evaluate_lower(lower, g);
    Rational uf = evaluate_upper(lower, f);
    audit.checks.push_back({i, "P1", lf >= f.min()});
    audit.checks.push_back({i, "P2", evaluate_lower(lower, f * scale) == scale * lf});
    audit.checks.push_back({i, "P3", evaluate_lower(lower, f + g) >= lf + lg});
    bool monotone = evaluate_lower(lower, f.pointwise_min(g)) <= lf;
    if (f.dominated_by(g)) monotone = monotone && lf <= lg;
    audit.checks.push_back({i, "monotone", monotone});
    audit.checks.push_back({i, "sandwich", f.min() <= lf && lf <= uf && uf <= f.max()});
  }
  return audit;
}

}  // namespace credal
