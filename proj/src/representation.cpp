#include "credal/representation.hpp"

#include <algorithm>

#include "credal/exchangeability.hpp"
#include "credal/lp.hpp"

namespace credal {

SimplexDistribution::SimplexDistribution(std::vector<WeightedPoint> support)
    : support_(std::move(support)) {
  if (support_.empty()) throw ValidationError("simplex distribution needs a non-empty support");
  Rational total = 0;
  for (std::size_t j = 0; j < support_.size(); ++j) {
    const auto& s = support_[j];
    if (!(s.point.space() == support_.front().point.space()))
      throw DomainMismatchError("simplex distribution mixes category spaces");
    if (s.weight < 0) throw ValidationError("negative weight " + to_string(s.weight));
    for (std::size_t i = 0; i < j; ++i)
      if (support_[i].point == s.point) throw ValidationError("repeated support point");
    total += s.weight;
  }
  if (total != 1) throw ValidationError("weights sum to " + to_string(total) + ", not 1");
}

SimplexDistribution SimplexDistribution::point_mass(SimplexPoint theta) {
  return SimplexDistribution({WeightedPoint{std::move(theta), Rational(1)}});
}

Rational SimplexDistribution::expectation(const BernsteinPoly& p) const {
  Rational sum = 0;
  for (const auto& s : support_)
    if (s.weight != 0) sum += s.weight * eval(p, s.point);
  return sum;
}

SimplexLowerPrevision::SimplexLowerPrevision(std::vector<SimplexDistribution> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw ValidationError("simplex lower prevision needs at least one vertex");
  for (const auto& v : vertices_)
    if (!(v.space() == vertices_.front().space()))
      throw DomainMismatchError("simplex lower prevision mixes category spaces");
}

Rational r_eval(const SimplexLowerPrevision& r, const BernsteinPoly& p) {
  if (!(r.space() == p.space())) throw DomainMismatchError("r_eval: category spaces differ");
  Rational best = r.vertices().front().expectation(p);
  for (std::size_t i = 1; i < r.vertices().size(); ++i)
    best = std::min(best, r.vertices()[i].expectation(p));
  return best;
}

FamilyLevel family_from_r(const SimplexLowerPrevision& r, unsigned n, std::size_t cap) {
  if (n < 1) throw ValidationError("family members start at n = 1");
  auto counts = Domain::counts(r.space(), n, cap);
  std::vector<LinearPrevision> vertices;
  for (const auto& dist : r.vertices()) {
    std::vector<Rational> q(counts.size(), Rational(0));
    for (std::size_t i = 0; i < counts.size(); ++i)
      for (const auto& s : dist.support())
        if (s.weight != 0) q[i] += s.weight * basis_eval(counts.counts_at(i), s.point);
    vertices.emplace_back(counts, std::move(q));
  }
  CredalLowerPrevision count_model(std::move(vertices));
  auto tuple_model = exchangeable_from_count(count_model, cap);
  return FamilyLevel{std::move(tuple_model), std::move(count_model)};
}

CountFamily::CountFamily(std::vector<CredalLowerPrevision> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw ValidationError("count family needs horizon >= 1");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& dom = levels_[i].domain();
    if (!dom.is_counts() || dom.length() != i + 1)
      throw ValidationError("family level " + std::to_string(i + 1) + " must live on N^" +
                            std::to_string(i + 1) + ", got " + dom.describe());
    if (!(dom.space() == levels_.front().domain().space()))
      throw DomainMismatchError("family levels use different category spaces");
  }
}

CountFamily CountFamily::from_representation(const SimplexLowerPrevision& r, unsigned horizon,
                                             std::size_t cap) {
  std::vector<CredalLowerPrevision> levels;
  for (unsigned n = 1; n <= horizon; ++n) levels.push_back(family_from_r(r, n, cap).counts);
  return CountFamily(std::move(levels));
}

const CredalLowerPrevision& CountFamily::level(unsigned n) const {
  if (n < 1 || n > levels_.size())
    throw DegreeError("level " + std::to_string(n) + " outside horizon " +
                      std::to_string(levels_.size()));
  return levels_[n - 1];
}

LinearPrevision push_down(const LinearPrevision& upper_level, const Domain& target) {
  const auto& source = upper_level.domain();
  if (!source.is_counts() || !target.is_counts() || !(source.space() == target.space()) ||
      target.length() > source.length())
    throw DomainMismatchError("push_down from " + source.describe() + " to " + target.describe());
  Factorials fact;
  const std::size_t cats = source.space().size();
  std::vector<unsigned> rest(cats);
  std::vector<Rational> mass(target.size(), Rational(0));
  for (std::size_t s = 0; s < source.size(); ++s) {
    if (upper_level[s] == 0) continue;
    const auto& big = source.counts_at(s);
    Integer nu_big = fact.multinomial(big);
    for (std::size_t t = 0; t < target.size(); ++t) {
      const auto& small = target.counts_at(t);
      bool below = true;
      for (std::size_t x = 0; x < cats && below; ++x) {
        if (small[x] > big[x]) below = false;
        else rest[x] = big[x] - small[x];
      }
      if (!below) continue;
      mass[t] += upper_level[s] * ratio(fact.multinomial(rest) * fact.multinomial(small), nu_big);
    }
  }
  return LinearPrevision(target, std::move(mass));
}

std::vector<Rational> r_from_family_levels(const CountFamily& family, const BernsteinPoly& p) {
  if (!(family.space() == p.space())) throw DomainMismatchError("family and polynomial spaces differ");
  if (p.degree() > family.horizon())
    throw DegreeError("polynomial degree " + std::to_string(p.degree()) + " exceeds horizon " +
                      std::to_string(family.horizon()));
  std::vector<Rational> values;
  for (unsigned n = std::max(p.degree(), 1u); n <= family.horizon(); ++n)
    values.push_back(evaluate_lower(family.level(n), elevate_to(p, n).coefficients()));
  return values;
}

Rational r_from_family(const CountFamily& family, const BernsteinPoly& p) {
  auto values = r_from_family_levels(family, p);
  for (const auto& v : values)
    if (v != values.front())
      throw InconsistentFamilyError("family levels disagree on the polynomial: " +
                                    to_string(values.front()) + " vs " + to_string(v));
  return values.front();
}

namespace {

std::optional<ConsistencyWitness> compare_levels(const CredalLowerPrevision& level,
                                                 const CredalLowerPrevision& pushed,
                                                 unsigned n, unsigned upper) {
  if (same_hull(level, pushed)) return std::nullopt;
  const auto& dom = level.domain();
  auto differs = [&](const Gamble& h) -> std::optional<ConsistencyWitness> {
    Rational a = evaluate_lower(level, h), b = evaluate_lower(pushed, h);
    if (a == b) return std::nullopt;
    return ConsistencyWitness{n, upper, h, a, b};
  };
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto h = Gamble::indicator(dom, i);
    if (auto w = differs(h)) return w;
    if (auto w = differs(-h)) return w;
  }
  // No indicator separates: fall back to a separating hyperplane.
  auto masses = [](const CredalLowerPrevision& c) {
    std::vector<std::vector<Rational>> out;
    for (const auto& v : c.vertices()) out.push_back(v.mass());
    return out;
  };
  auto ga = masses(level), gb = masses(pushed);
  for (const auto& v : ga) {
    auto h = lp::separating_direction(gb, v);
    if (!h.empty())
      if (auto w = differs(Gamble(dom, h))) return w;
  }
  for (const auto& v : gb) {
    auto h = lp::separating_direction(ga, v);
    if (!h.empty())
      if (auto w = differs(Gamble(dom, h))) return w;
  }
  throw Error("hulls differ but no separating gamble was found");
}

}  // namespace

ConsistencyReport check_time_consistency(const CountFamily& family) {
  ConsistencyReport report;
  for (unsigned n = 1; n < family.horizon(); ++n) {
    const auto& level = family.level(n);
    for (unsigned upper = n + 1; upper <= family.horizon(); ++upper) {
      std::vector<LinearPrevision> pushed;
      for (const auto& v : family.level(upper).vertices())
        pushed.push_back(push_down(v, level.domain()));
      if (auto w = compare_levels(level, CredalLowerPrevision(std::move(pushed)), n, upper)) {
        report.witness = std::move(w);
        return report;
      }
    }
  }
  report.consistent = true;
  return report;
}

Rational frequency_prevision(const SimplexLowerPrevision& r, const Expression& h, unsigned n) {
  if (!(r.space() == h.space())) throw DomainMismatchError("expression and model spaces differ");
  return r_eval(r, bernstein_approximant(h, n));
}

std::vector<ConvergenceRow> convergence_table(const SimplexLowerPrevision& r, const Expression& h,
                                              std::span<const unsigned> ns) {
  std::optional<Rational> reference;
  if (auto q = h.as_polynomial()) reference = r_eval(r, from_monomials(*q, q->total_degree()));
  std::vector<ConvergenceRow> rows;
  for (auto n : ns) {
    ConvergenceRow row{n, frequency_prevision(r, h, n), reference, std::nullopt};
    if (reference) row.gap = row.value - *reference;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

void require_cylinder(const Gamble& f) {
  if (!f.domain().is_tuples())
    throw ValidationError("natural extension on sequences needs a cylinder gamble on X^m; "
                          "non-cylinder input is unsupported");
}

}  // namespace

Rational natural_extension_cylinder(const SimplexLowerPrevision& r, const Gamble& f) {
  require_cylinder(f);
  if (!(r.space() == f.domain().space())) throw DomainMismatchError("gamble and model spaces differ");
  std::optional<Rational> best;
  for (const auto& dist : r.vertices()) {
    Rational v = 0;
    for (const auto& s : dist.support())
      if (s.weight != 0) v += s.weight * mn(f, s.point);
    if (!best || v < *best) best = v;
  }
  return *best;
}

Rational natural_extension_cylinder(const CountFamily& family, const Gamble& f) {
  require_cylinder(f);
  return evaluate_lower(family.level(f.domain().length()), muhy_gamble(f));
}

}  // namespace credal
