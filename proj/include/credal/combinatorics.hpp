#pragma once

// Count vectors, invariant atoms and multinomial coefficients over a finite
// category space.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "credal/errors.hpp"
#include "credal/rational.hpp"

namespace credal {

/// Ordered, non-empty set of distinct category labels. Copies share storage.
class CategorySpace {
public:
  explicit CategorySpace(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_->size(); }
  const std::string& label(std::size_t index) const { return labels_->at(index); }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }

  /// Throws InvalidCategoryError when the label is not a member.
  std::size_t index_of(std::string_view label) const;
  bool contains(std::string_view label) const;

  friend bool operator==(const CategorySpace& a, const CategorySpace& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Occurrence counts per category; the total is the sequence length N.
class CountVector {
public:
  CountVector(CategorySpace space, std::vector<unsigned> counts);

  const CategorySpace& space() const noexcept { return space_; }
  const std::vector<unsigned>& counts() const noexcept { return counts_; }
  unsigned operator[](std::size_t category) const { return counts_.at(category); }
  unsigned total() const noexcept { return total_; }

  friend bool operator==(const CountVector& a, const CountVector& b) {
    return a.space_ == b.space_ && a.counts_ == b.counts_;
  }

private:
  CategorySpace space_;
  std::vector<unsigned> counts_;
  unsigned total_ = 0;
};

/// A length-N sequence of categories, stored as category indices.
class Tuple {
public:
  Tuple(CategorySpace space, std::vector<std::size_t> entries);
  /// Builds from labels; throws InvalidCategoryError on unknown labels.
  static Tuple from_labels(CategorySpace space, std::span<const std::string> labels);

  const CategorySpace& space() const noexcept { return space_; }
  const std::vector<std::size_t>& entries() const noexcept { return entries_; }
  std::size_t length() const noexcept { return entries_.size(); }
  std::vector<std::string> labels() const;

  friend bool operator==(const Tuple& a, const Tuple& b) {
    return a.space_ == b.space_ && a.entries_ == b.entries_;
  }

private:
  CategorySpace space_;
  std::vector<std::size_t> entries_;
};

CountVector count_vector(const Tuple& z);

/// Every count vector with the given total, in reverse-lexicographic order of
/// the count lists: (N,0,..,0) first and (0,..,0,N) last.
std::vector<CountVector> enumerate_count_vectors(const CategorySpace& space, unsigned total);

/// All distinct tuples whose count vector is m, in lexicographic order of
/// category indices. Throws CapacityError when nu(m) exceeds the cap.
std::vector<Tuple> atom(const CountVector& m, std::size_t cap = kDefaultEnumerationCap);

/// Multinomial coefficient N! / prod(m_x!): the number of tuples in atom(m).
Integer nu(const CountVector& m);
Integer nu(std::span<const unsigned> counts);

Integer binomial(unsigned n, unsigned k);

/// Number of count vectors with |X| = categories and the given total.
Integer count_vector_total(std::size_t categories, unsigned total);

/// Raw compositions of `total` into `parts` non-negative integers, in the same
/// reverse-lexicographic order as enumerate_count_vectors.
std::vector<std::vector<unsigned>> compositions(std::size_t parts, unsigned total);

/// Dense index over all count vectors of one total. Shared by count-space
/// domains so lookups are O(|X|).
class CountLattice {
public:
  CountLattice(std::size_t categories, unsigned total);

  std::size_t size() const noexcept { return points_.size(); }
  unsigned total() const noexcept { return total_; }
  const std::vector<unsigned>& at(std::size_t index) const { return points_.at(index); }
  const std::vector<std::vector<unsigned>>& points() const noexcept { return points_; }
  /// Throws ValidationError when the counts do not belong to this lattice.
  std::size_t index_of(std::span<const unsigned> counts) const;

private:
  struct Hash {
    std::size_t operator()(const std::vector<unsigned>& v) const noexcept;
  };
  unsigned total_;
  std::vector<std::vector<unsigned>> points_;
  std::unordered_map<std::vector<unsigned>, std::size_t, Hash> index_;
};

/// Exact factorial table, grown on demand. Not thread-safe; keep one per call.
class Factorials {
public:
  const Integer& operator()(unsigned n);
  Integer multinomial(std::span<const unsigned> counts);

private:
  std::vector<Integer> table_{Integer(1)};
};

}  // namespace credal
