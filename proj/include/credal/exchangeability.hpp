#pragma once

// Finite exchangeability: sampling without replacement from an urn of known
// size and unknown composition.

#include <optional>
#include <vector>

#include "credal/previsions.hpp"

namespace credal {

/// Average of f over the invariant atom of m (multiple hypergeometric prevision).
Rational muhy(const Gamble& f, const CountVector& m, std::size_t cap = kDefaultEnumerationCap);

/// The count-space gamble m -> muhy(f, m), built in one pass over X^N.
Gamble muhy_gamble(const Gamble& f, std::size_t cap = kDefaultEnumerationCap);

/// For each tuple index of `tuples`, the index of its count vector in `counts`.
std::vector<std::size_t> count_index_map(const Domain& tuples, const Domain& counts);

/// Pushes every vertex forward through the counting map T^N.
CredalLowerPrevision count_distribution(const CredalLowerPrevision& tuple_model,
                                        std::size_t cap = kDefaultEnumerationCap);

/// Spreads each count vertex q uniformly over atoms: p(z) = q(T(z)) / nu(T(z)).
CredalLowerPrevision exchangeable_from_count(const CredalLowerPrevision& count_model,
                                             std::size_t cap = kDefaultEnumerationCap);

struct ExchangeabilityWitness {
  std::size_t vertex_index;  // index into the input vertex list
  std::size_t position;      // the transposition swaps positions position, position+1 (0-based)
  std::size_t point;         // tuple index z with p(z) != p(swapped z)
};

struct ExchangeabilityReport {
  bool exchangeable = false;
  std::optional<ExchangeabilityWitness> witness;
};

/// Checks every extreme point for invariance under adjacent transpositions.
ExchangeabilityReport is_exchangeable(const CredalLowerPrevision& tuple_model);

/// Vertex-wise X^n marginal of a model on X^N, 1 <= n <= N.
CredalLowerPrevision marginal(const CredalLowerPrevision& tuple_model, unsigned length);

}  // namespace credal
