#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "credal/combinatorics.hpp"
#include "credal/rational.hpp"

namespace credal {

enum class DomainKind { Tuples, Counts };

/// Finite possibility space: either X^N (tuples) or N^N (count vectors), with
/// a fixed canonical enumeration. Tuples are enumerated in mixed-radix order
/// with the first coordinate most significant; counts follow CountLattice.
class Domain {
public:
  static Domain tuples(CategorySpace space, unsigned length,
                       std::size_t cap = kDefaultEnumerationCap);
  static Domain counts(CategorySpace space, unsigned total,
                       std::size_t cap = kDefaultEnumerationCap);

  DomainKind kind() const noexcept { return kind_; }
  bool is_tuples() const noexcept { return kind_ == DomainKind::Tuples; }
  bool is_counts() const noexcept { return kind_ == DomainKind::Counts; }
  const CategorySpace& space() const noexcept { return space_; }
  /// N: tuple length or count total.
  unsigned length() const noexcept { return length_; }
  std::size_t size() const noexcept { return size_; }

  // Tuple-space addressing.
  std::vector<std::size_t> tuple_at(std::size_t index) const;
  std::size_t index_of_tuple(std::span<const std::size_t> entries) const;
  Tuple tuple(std::size_t index) const { return Tuple(space_, tuple_at(index)); }

  // Count-space addressing.
  const std::vector<unsigned>& counts_at(std::size_t index) const;
  std::size_t index_of_counts(std::span<const unsigned> counts) const;
  const CountLattice& lattice() const;

  /// Human-readable point label, e.g. "(a,b)" or "{a:1,b:1}".
  std::string point_label(std::size_t index) const;
  std::string describe() const;

  friend bool operator==(const Domain& a, const Domain& b) {
    return a.kind_ == b.kind_ && a.length_ == b.length_ && a.space_ == b.space_;
  }

private:
  Domain(DomainKind kind, CategorySpace space, unsigned length, std::size_t size,
         std::shared_ptr<const CountLattice> lattice);

  DomainKind kind_;
  CategorySpace space_;
  unsigned length_;
  std::size_t size_;
  std::shared_ptr<const CountLattice> lattice_;
};

/// Throws DomainMismatchError unless a == b.
void require_same_domain(const Domain& a, const Domain& b, const char* what);

/// Rational-valued map on a finite domain, stored densely in canonical order.
class Gamble {
public:
  Gamble(Domain domain, std::vector<Rational> values);

  static Gamble constant(Domain domain, const Rational& c);
  static Gamble indicator(Domain domain, std::size_t index);
  static Gamble tabulate(Domain domain, const std::function<Rational(std::size_t)>& fn);

  const Domain& domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](std::size_t index) const { return values_[index]; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  Rational min() const;
  Rational max() const;
  /// Pointwise f <= g.
  bool dominated_by(const Gamble& other) const;

  Gamble operator-() const;
  Gamble operator+(const Gamble& other) const;
  Gamble operator-(const Gamble& other) const;
  Gamble operator*(const Rational& scale) const;
  Gamble pointwise_min(const Gamble& other) const;
  Gamble pointwise_max(const Gamble& other) const;

  friend bool operator==(const Gamble& a, const Gamble& b) {
    return a.domain_ == b.domain_ && a.values_ == b.values_;
  }

private:
  Domain domain_;
  std::vector<Rational> values_;
};

/// A bijection of positions {0..N-1}; images[k] is the position read into k.
class Permutation {
public:
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t length);
  /// Swaps positions i and j.
  static Permutation transposition(std::size_t length, std::size_t i, std::size_t j);
  /// Accepts 1-based images, as written in the usual cycle-free notation.
  static Permutation from_one_based(std::span<const std::size_t> images);

  std::size_t length() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t k) const { return images_.at(k); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  /// The permutation k -> second(first(k)). With this convention
  /// permute(permute(f, first), second) == permute(f, then(first, second)).
  static Permutation then(const Permutation& first, const Permutation& second);

  static std::vector<Permutation> all(std::size_t length);

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::size_t> images_;
};

/// (pi f)(z) = f(z_pi(1), ..., z_pi(N)).
Gamble permute(const Gamble& f, const Permutation& pi);

/// Extends f on X^n to X^{n+k} by ignoring the trailing k coordinates.
Gamble cylindrical_extension(const Gamble& f, unsigned extra,
                             std::size_t cap = kDefaultEnumerationCap);

/// Gamble on X^n whose value at x is the minimum of f over all completions of x.
Gamble lower_projection(const Gamble& f, unsigned length);

}  // namespace credal
