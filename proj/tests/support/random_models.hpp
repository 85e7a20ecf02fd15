#pragma once

// Seeded generators for exact random instances.

#include <random>
#include <vector>

#include "credal/bernstein.hpp"
#include "credal/previsions.hpp"
#include "credal/representation.hpp"

namespace testing_support {

using credal::Rational;

class Generator {
public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// p/q with |p| <= 12, 1 <= q <= 7.
  Rational rational(int bound = 12, int max_den = 7) {
    Rational r(integer(-bound, bound), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  Rational nonnegative(int bound = 12, int max_den = 7) {
    Rational r(integer(0, bound), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  /// Random mass vector with small integer weights; zero entries allowed.
  std::vector<Rational> mass(std::size_t n, bool allow_zero = true) {
    std::vector<int> w(n);
    int total = 0;
    for (auto& x : w) {
      x = integer(allow_zero ? 0 : 1, 9);
      total += x;
    }
    if (total == 0) {
      w[static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1))] = 1;
      total = 1;
    }
    std::vector<Rational> out;
    for (auto x : w) {
      Rational r(x, total);
      r.canonicalize();
      out.push_back(r);
    }
    return out;
  }

  credal::Gamble gamble(const credal::Domain& dom) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < dom.size(); ++i) v.push_back(rational());
    return credal::Gamble(dom, std::move(v));
  }

  credal::SimplexPoint simplex_point(const credal::CategorySpace& space) {
    return credal::SimplexPoint(space, mass(space.size()));
  }

  credal::CredalLowerPrevision credal(const credal::Domain& dom, std::size_t vertices) {
    std::vector<credal::LinearPrevision> vs;
    for (std::size_t i = 0; i < vertices; ++i) vs.emplace_back(dom, mass(dom.size()));
    return credal::CredalLowerPrevision(std::move(vs));
  }

  credal::BernsteinPoly poly(const credal::CategorySpace& space, unsigned degree) {
    return credal::BernsteinPoly(gamble(credal::Domain::counts(space, degree)));
  }

  /// Distribution over up to `points` distinct random chances.
  credal::SimplexDistribution simplex_distribution(const credal::CategorySpace& space, std::size_t points) {
    std::vector<credal::WeightedPoint> support;
    auto weights = mass(points, false);
    for (std::size_t j = 0; j < points; ++j) {
      auto theta = simplex_point(space);
      bool repeated = false;
      for (auto& s : support)
        if (s.point == theta) {
          s.weight += weights[j];
          repeated = true;
        }
      if (!repeated) support.push_back({theta, weights[j]});
    }
    return credal::SimplexDistribution(std::move(support));
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace testing_support
