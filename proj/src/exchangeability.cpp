#include "credal/exchangeability.hpp"

namespace credal {
namespace {

void require_tuples(const Domain& d, const char* what) {
  if (!d.is_tuples()) throw DomainMismatchError(std::string(what) + " needs a tuple-space model");
}

void require_counts(const Domain& d, const char* what) {
  if (!d.is_counts()) throw DomainMismatchError(std::string(what) + " needs a count-space model");
}

}  // namespace

std::vector<std::size_t> count_index_map(const Domain& tuples, const Domain& counts) {
  require_tuples(tuples, "count map");
  require_counts(counts, "count map");
  if (!(tuples.space() == counts.space()) || tuples.length() != counts.length())
    throw DomainMismatchError("count map: X^" + std::to_string(tuples.length()) + " vs N^" +
                              std::to_string(counts.length()));
  std::vector<std::size_t> out(tuples.size());
  std::vector<unsigned> c(tuples.space().size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    std::fill(c.begin(), c.end(), 0u);
    for (auto e : tuples.tuple_at(i)) ++c[e];
    out[i] = counts.index_of_counts(c);
  }
  return out;
}

Rational muhy(const Gamble& f, const CountVector& m, std::size_t cap) {
  const auto& dom = f.domain();
  require_tuples(dom, "muhy");
  if (!(m.space() == dom.space()) || m.total() != dom.length())
    throw DomainMismatchError("muhy: count vector total " + std::to_string(m.total()) +
                              " does not match X^" + std::to_string(dom.length()));
  Rational sum = 0;
  auto members = atom(m, cap);
  for (const auto& z : members) sum += f[dom.index_of_tuple(z.entries())];
  return sum / Rational(static_cast<unsigned long>(members.size()));
}

Gamble muhy_gamble(const Gamble& f, std::size_t cap) {
  const auto& dom = f.domain();
  require_tuples(dom, "muhy");
  auto counts = Domain::counts(dom.space(), dom.length(), cap);
  auto map = count_index_map(dom, counts);
  std::vector<Rational> sums(counts.size(), Rational(0));
  for (std::size_t i = 0; i < dom.size(); ++i) sums[map[i]] += f[i];
  for (std::size_t j = 0; j < counts.size(); ++j) sums[j] /= Rational(nu(counts.counts_at(j)));
  return Gamble(std::move(counts), std::move(sums));
}

CredalLowerPrevision count_distribution(const CredalLowerPrevision& tuple_model, std::size_t cap) {
  const auto& dom = tuple_model.domain();
  require_tuples(dom, "count distribution");
  auto counts = Domain::counts(dom.space(), dom.length(), cap);
  auto map = count_index_map(dom, counts);
  std::vector<LinearPrevision> vertices;
  for (const auto& p : tuple_model.vertices()) {
    std::vector<Rational> q(counts.size(), Rational(0));
    for (std::size_t i = 0; i < dom.size(); ++i) q[map[i]] += p[i];
    vertices.emplace_back(counts, std::move(q));
  }
  return CredalLowerPrevision(std::move(vertices));
}

CredalLowerPrevision exchangeable_from_count(const CredalLowerPrevision& count_model, std::size_t cap) {
  const auto& counts = count_model.domain();
  require_counts(counts, "exchangeable model");
  auto tuples = Domain::tuples(counts.space(), counts.length(), cap);
  auto map = count_index_map(tuples, counts);
  std::vector<Rational> atom_size(counts.size());
  for (std::size_t j = 0; j < counts.size(); ++j) atom_size[j] = Rational(nu(counts.counts_at(j)));
  std::vector<LinearPrevision> vertices;
  for (const auto& q : count_model.vertices()) {
    std::vector<Rational> p(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i) p[i] = q[map[i]] / atom_size[map[i]];
    vertices.emplace_back(tuples, std::move(p));
  }
  return CredalLowerPrevision(std::move(vertices));
}

ExchangeabilityReport is_exchangeable(const CredalLowerPrevision& tuple_model) {
  const auto& dom = tuple_model.domain();
  require_tuples(dom, "exchangeability check");
  ExchangeabilityReport report;
  for (auto v : extreme_point_indices(tuple_model)) {
    const auto& p = tuple_model.vertices()[v];
    for (std::size_t i = 0; i < dom.size(); ++i) {
      auto z = dom.tuple_at(i);
      for (std::size_t k = 0; k + 1 < z.size(); ++k) {
        if (z[k] == z[k + 1]) continue;
        std::swap(z[k], z[k + 1]);
        bool differs = p[dom.index_of_tuple(z)] != p[i];
        std::swap(z[k], z[k + 1]);
        if (differs) {
          report.witness = ExchangeabilityWitness{v, k, i};
          return report;
        }
      }
    }
  }
  report.exchangeable = true;
  return report;
}

CredalLowerPrevision marginal(const CredalLowerPrevision& tuple_model, unsigned length) {
  const auto& dom = tuple_model.domain();
  require_tuples(dom, "marginal");
  if (length < 1 || length > dom.length())
    throw ValidationError("marginal on X^" + std::to_string(length) + " of a model on X^" +
                          std::to_string(dom.length()));
  auto narrow = Domain::tuples(dom.space(), length);
  const std::size_t block = dom.size() / narrow.size();
  std::vector<LinearPrevision> vertices;
  for (const auto& p : tuple_model.vertices()) {
    std::vector<Rational> mass(narrow.size(), Rational(0));
    for (std::size_t i = 0; i < dom.size(); ++i) mass[i / block] += p[i];
    vertices.emplace_back(narrow, std::move(mass));
  }
  return CredalLowerPrevision(std::move(vertices));
}

}  // namespace credal
