#include "credal/bernstein.hpp"

#include <algorithm>
#include <numeric>

#include "credal/exchangeability.hpp"

namespace credal {

SimplexPoint::SimplexPoint(CategorySpace space, std::vector<Rational> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
  if (coords_.size() != space_.size())
    throw ValidationError("simplex point has " + std::to_string(coords_.size()) +
                          " coordinates, space has " + std::to_string(space_.size()));
  Rational total = 0;
  for (std::size_t x = 0; x < coords_.size(); ++x) {
    if (coords_[x] < 0)
      throw ValidationError("negative coordinate theta." + space_.label(x));
    total += coords_[x];
  }
  if (total != 1) throw ValidationError("simplex coordinates sum to " + to_string(total) + ", not 1");
}

SimplexPoint SimplexPoint::vertex(CategorySpace space, std::size_t category) {
  std::vector<Rational> coords(space.size(), Rational(0));
  coords.at(category) = 1;
  return SimplexPoint(std::move(space), std::move(coords));
}

Rational power(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

Rational basis_eval(std::span<const unsigned> counts, const SimplexPoint& theta) {
  if (counts.size() != theta.coords().size())
    throw DomainMismatchError("basis polynomial and simplex point have different spaces");
  Rational value(nu(counts));
  for (std::size_t x = 0; x < counts.size(); ++x) {
    if (counts[x] == 0) continue;
    if (theta[x] == 0) return Rational(0);
    value *= power(theta[x], counts[x]);
  }
  return value;
}

Rational basis_eval(const CountVector& m, const SimplexPoint& theta) {
  if (!(m.space() == theta.space()))
    throw DomainMismatchError("basis polynomial and simplex point have different spaces");
  return basis_eval(std::span<const unsigned>(m.counts()), theta);
}

BernsteinPoly::BernsteinPoly(Gamble coefficients) : coeffs_(std::move(coefficients)) {
  if (!coeffs_.domain().is_counts())
    throw DomainMismatchError("Bernstein coefficients must live on a count space");
}

BernsteinPoly BernsteinPoly::constant(CategorySpace space, unsigned degree, const Rational& c) {
  return BernsteinPoly(Gamble::constant(Domain::counts(std::move(space), degree), c));
}

const Rational& BernsteinPoly::coefficient(std::span<const unsigned> counts) const {
  return coeffs_[coeffs_.domain().index_of_counts(counts)];
}

BernsteinPoly BernsteinPoly::operator+(const BernsteinPoly& other) const {
  unsigned d = std::max(degree(), other.degree());
  return BernsteinPoly(elevate_to(*this, d).coeffs_ + elevate_to(other, d).coeffs_);
}

BernsteinPoly BernsteinPoly::operator*(const Rational& scale) const {
  return BernsteinPoly(coeffs_ * scale);
}

bool operator==(const BernsteinPoly& a, const BernsteinPoly& b) {
  if (!(a.space() == b.space())) return false;
  unsigned d = std::max(a.degree(), b.degree());
  return elevate_to(a, d).coeffs_.values() == elevate_to(b, d).coeffs_.values();
}

Rational comn(const Gamble& g, const SimplexPoint& theta) {
  const auto& dom = g.domain();
  if (!dom.is_counts()) throw DomainMismatchError("comn needs a count-space gamble");
  if (!(dom.space() == theta.space()))
    throw DomainMismatchError("comn: gamble and simplex point have different spaces");
  Rational sum = 0;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (g[i] == 0) continue;
    sum += g[i] * basis_eval(dom.counts_at(i), theta);
  }
  return sum;
}

Rational eval(const BernsteinPoly& p, const SimplexPoint& theta) {
  return comn(p.coefficients(), theta);
}

Rational mn(const Gamble& f, const SimplexPoint& theta) {
  const auto& dom = f.domain();
  if (!dom.is_tuples()) throw DomainMismatchError("mn needs a tuple-space gamble");
  if (!(dom.space() == theta.space()))
    throw DomainMismatchError("mn: gamble and simplex point have different spaces");
  Rational sum = 0;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (f[i] == 0) continue;
    Rational mass = 1;
    for (auto e : dom.tuple_at(i)) mass *= theta[e];
    sum += f[i] * mass;
  }
  return sum;
}

BernsteinPoly elevate(const BernsteinPoly& p, unsigned k) {
  if (k == 0) return p;
  const auto& low = p.coefficients().domain();
  auto high = Domain::counts(p.space(), p.degree() + k);
  Factorials fact;
  const std::size_t cats = p.space().size();
  std::vector<Integer> nu_low(low.size());
  for (std::size_t j = 0; j < low.size(); ++j) nu_low[j] = fact.multinomial(low.counts_at(j));

  std::vector<unsigned> rest(cats);
  std::vector<Rational> out(high.size(), Rational(0));
  for (std::size_t i = 0; i < high.size(); ++i) {
    const auto& mu = high.counts_at(i);
    Integer nu_mu = fact.multinomial(mu);
    Rational sum = 0;
    for (std::size_t j = 0; j < low.size(); ++j) {
      const auto& m = low.counts_at(j);
      bool below = true;
      for (std::size_t x = 0; x < cats && below; ++x) {
        if (m[x] > mu[x]) below = false;
        else rest[x] = mu[x] - m[x];
      }
      if (!below || p.coefficients()[j] == 0) continue;
      sum += Rational(nu_low[j] * fact.multinomial(rest)) * p.coefficients()[j];
    }
    out[i] = sum / Rational(nu_mu);
  }
  return BernsteinPoly(Gamble(std::move(high), std::move(out)));
}

BernsteinPoly elevate_to(const BernsteinPoly& p, unsigned degree) {
  if (degree < p.degree())
    throw DegreeError("cannot lower degree " + std::to_string(p.degree()) + " to " +
                      std::to_string(degree));
  return elevate(p, degree - p.degree());
}

MonomialForm::MonomialForm(CategorySpace space, std::vector<MonomialTerm> terms)
    : space_(std::move(space)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.exponents.size() != space_.size())
      throw ValidationError("monomial exponent vector has " + std::to_string(t.exponents.size()) +
                            " entries, space has " + std::to_string(space_.size()));
}

unsigned MonomialForm::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_)
    d = std::max(d, std::accumulate(t.exponents.begin(), t.exponents.end(), 0u));
  return d;
}

Rational MonomialForm::evaluate(const SimplexPoint& theta) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t x = 0; x < t.exponents.size(); ++x) v *= power(theta[x], t.exponents[x]);
    sum += v;
  }
  return sum;
}

BernsteinPoly from_monomials(const MonomialForm& q, unsigned degree) {
  if (degree < q.total_degree())
    throw DegreeError("degree " + std::to_string(degree) + " is below the total degree " +
                      std::to_string(q.total_degree()));
  auto dom = Domain::counts(q.space(), degree);
  Factorials fact;
  const std::size_t cats = q.space().size();
  std::vector<Rational> coeffs(dom.size(), Rational(0));
  std::vector<unsigned> rest(cats);
  for (const auto& term : q.terms()) {
    if (term.coefficient == 0) continue;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      const auto& m = dom.counts_at(i);
      bool above = true;
      for (std::size_t x = 0; x < cats && above; ++x) {
        if (m[x] < term.exponents[x]) above = false;
        else rest[x] = m[x] - term.exponents[x];
      }
      if (!above) continue;
      coeffs[i] += term.coefficient * ratio(fact.multinomial(rest), fact.multinomial(m));
    }
  }
  return BernsteinPoly(Gamble(std::move(dom), std::move(coeffs)));
}

Enclosure bounds(const BernsteinPoly& p) {
  return {p.coefficients().min(), p.coefficients().max()};
}

BernsteinPoly bernstein_approximant(const SimplexFunction& h, const CategorySpace& space,
                                    unsigned degree) {
  if (degree == 0) throw DegreeError("approximant degree must be at least 1");
  auto dom = Domain::counts(space, degree);
  std::vector<Rational> coeffs;
  coeffs.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    std::vector<Rational> theta;
    for (auto c : dom.counts_at(i)) theta.push_back(ratio(c, degree));
    coeffs.push_back(h(SimplexPoint(space, std::move(theta))));
  }
  return BernsteinPoly(Gamble(std::move(dom), std::move(coeffs)));
}

std::vector<SimplexPoint> simplex_grid(const CategorySpace& space, unsigned resolution) {
  if (resolution == 0) throw ValidationError("grid resolution must be positive");
  std::vector<SimplexPoint> grid;
  for (const auto& m : compositions(space.size(), resolution)) {
    std::vector<Rational> theta;
    for (auto c : m) {
      theta.push_back(ratio(c, resolution));
    }
    grid.emplace_back(space, std::move(theta));
  }
  return grid;
}

Rational grid_gap(const BernsteinPoly& p, const SimplexFunction& h,
                  std::span<const SimplexPoint> grid) {
  Rational worst = 0;
  for (const auto& theta : grid) worst = std::max(worst, Rational(abs(eval(p, theta) - h(theta))));
  return worst;
}

}  // namespace credal
