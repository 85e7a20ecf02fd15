#include "credal/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace credal {

CategorySpace::CategorySpace(std::vector<std::string> labels) {
  if (labels.empty()) throw ValidationError("category space must be non-empty");
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw ValidationError("category labels must be non-empty");
    if (!seen.insert(l).second) throw ValidationError("duplicate category '" + l + "'");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::size_t CategorySpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_->size(); ++i)
    if ((*labels_)[i] == label) return i;
  throw InvalidCategoryError("unknown category '" + std::string(label) + "'");
}

bool CategorySpace::contains(std::string_view label) const {
  return std::find(labels_->begin(), labels_->end(), label) != labels_->end();
}

CountVector::CountVector(CategorySpace space, std::vector<unsigned> counts)
    : space_(std::move(space)), counts_(std::move(counts)) {
  if (counts_.size() != space_.size())
    throw ValidationError("count vector has " + std::to_string(counts_.size()) +
                          " entries, space has " + std::to_string(space_.size()));
  total_ = std::accumulate(counts_.begin(), counts_.end(), 0u);
}

Tuple::Tuple(CategorySpace space, std::vector<std::size_t> entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
  for (auto e : entries_)
    if (e >= space_.size())
      throw InvalidCategoryError("category index " + std::to_string(e) + " out of range");
}

Tuple Tuple::from_labels(CategorySpace space, std::span<const std::string> labels) {
  std::vector<std::size_t> entries;
  entries.reserve(labels.size());
  for (const auto& l : labels) entries.push_back(space.index_of(l));
  return Tuple(std::move(space), std::move(entries));
}

std::vector<std::string> Tuple::labels() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (auto e : entries_) out.push_back(space_.label(e));
  return out;
}

CountVector count_vector(const Tuple& z) {
  std::vector<unsigned> counts(z.space().size(), 0);
  for (auto e : z.entries()) ++counts[e];
  return CountVector(z.space(), std::move(counts));
}

namespace {

void compose_into(std::size_t parts, unsigned remaining, std::vector<unsigned>& prefix,
                  std::vector<std::vector<unsigned>>& out) {
  if (prefix.size() + 1 == parts) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned head = remaining + 1; head-- > 0;) {
    prefix.push_back(head);
    compose_into(parts, remaining - head, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<unsigned>> compositions(std::size_t parts, unsigned total) {
  std::vector<std::vector<unsigned>> out;
  if (parts == 0) return out;
  std::vector<unsigned> prefix;
  prefix.reserve(parts);
  compose_into(parts, total, prefix, out);
  return out;
}

std::vector<CountVector> enumerate_count_vectors(const CategorySpace& space, unsigned total) {
  std::vector<CountVector> out;
  for (auto& c : compositions(space.size(), total)) out.emplace_back(space, std::move(c));
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer count_vector_total(std::size_t categories, unsigned total) {
  return binomial(total + static_cast<unsigned>(categories) - 1,
                  static_cast<unsigned>(categories) - 1);
}

Integer nu(std::span<const unsigned> counts) {
  // Product of binomials: C(m1, m1) C(m1+m2, m2) ... avoids large factorials.
  Integer result(1);
  unsigned running = 0;
  for (auto c : counts) {
    running += c;
    result *= binomial(running, c);
  }
  return result;
}

Integer nu(const CountVector& m) { return nu(std::span<const unsigned>(m.counts())); }

std::vector<Tuple> atom(const CountVector& m, std::size_t cap) {
  Integer size = nu(m);
  if (size > cap)
    throw CapacityError("atom of size " + size.get_str() + " is too large", cap);
  std::vector<std::size_t> entries;
  entries.reserve(m.total());
  for (std::size_t x = 0; x < m.counts().size(); ++x)
    entries.insert(entries.end(), m[x], x);
  std::vector<Tuple> out;
  out.reserve(size.get_ui());
  do {
    out.emplace_back(m.space(), entries);
  } while (std::next_permutation(entries.begin(), entries.end()));
  return out;
}

std::size_t CountLattice::Hash::operator()(const std::vector<unsigned>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : v) h = (h ^ x) * 1099511628211ull;
  return h;
}

CountLattice::CountLattice(std::size_t categories, unsigned total)
    : total_(total), points_(compositions(categories, total)) {
  index_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i], i);
}

std::size_t CountLattice::index_of(std::span<const unsigned> counts) const {
  std::vector<unsigned> key(counts.begin(), counts.end());
  auto it = index_.find(key);
  if (it == index_.end()) throw ValidationError("count vector not in lattice of total " +
                                                std::to_string(total_));
  return it->second;
}

const Integer& Factorials::operator()(unsigned n) {
  while (table_.size() <= n) table_.push_back(table_.back() * static_cast<unsigned long>(table_.size()));
  return table_[n];
}

Integer Factorials::multinomial(std::span<const unsigned> counts) {
  unsigned total = 0;
  for (auto c : counts) total += c;
  Integer denom(1);
  for (auto c : counts) denom *= (*this)(c);
  return (*this)(total) / denom;
}

}  // namespace credal
