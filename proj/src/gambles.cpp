#include "credal/gambles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace credal {

Domain::Domain(DomainKind kind, CategorySpace space, unsigned length, std::size_t size,
               std::shared_ptr<const CountLattice> lattice)
    : kind_(kind), space_(std::move(space)), length_(length), size_(size),
      lattice_(std::move(lattice)) {}

Domain Domain::tuples(CategorySpace space, unsigned length, std::size_t cap) {
  Integer size;
  mpz_ui_pow_ui(size.get_mpz_t(), space.size(), length);
  if (size > cap)
    throw CapacityError("tuple space of size " + size.get_str() + " is too large", cap);
  return Domain(DomainKind::Tuples, std::move(space), length, size.get_ui(), nullptr);
}

Domain Domain::counts(CategorySpace space, unsigned total, std::size_t cap) {
  Integer size = count_vector_total(space.size(), total);
  if (size > cap)
    throw CapacityError("count space of size " + size.get_str() + " is too large", cap);
  auto lattice = std::make_shared<const CountLattice>(space.size(), total);
  auto n = lattice->size();
  return Domain(DomainKind::Counts, std::move(space), total, n, std::move(lattice));
}

std::vector<std::size_t> Domain::tuple_at(std::size_t index) const {
  if (!is_tuples()) throw DomainMismatchError("tuple access on a count-space domain");
  const std::size_t base = space_.size();
  std::vector<std::size_t> entries(length_);
  for (std::size_t k = length_; k-- > 0;) {
    entries[k] = index % base;
    index /= base;
  }
  return entries;
}

std::size_t Domain::index_of_tuple(std::span<const std::size_t> entries) const {
  if (!is_tuples()) throw DomainMismatchError("tuple access on a count-space domain");
  if (entries.size() != length_)
    throw DomainMismatchError("tuple of length " + std::to_string(entries.size()) +
                              " on X^" + std::to_string(length_));
  std::size_t index = 0;
  for (auto e : entries) {
    if (e >= space_.size()) throw InvalidCategoryError("category index out of range");
    index = index * space_.size() + e;
  }
  return index;
}

const CountLattice& Domain::lattice() const {
  if (!is_counts()) throw DomainMismatchError("count access on a tuple-space domain");
  return *lattice_;
}

const std::vector<unsigned>& Domain::counts_at(std::size_t index) const {
  return lattice().at(index);
}

std::size_t Domain::index_of_counts(std::span<const unsigned> counts) const {
  if (counts.size() != space_.size())
    throw DomainMismatchError("count vector length does not match the category space");
  return lattice().index_of(counts);
}

std::string Domain::point_label(std::size_t index) const {
  std::ostringstream os;
  if (is_tuples()) {
    auto entries = tuple_at(index);
    os << '(';
    for (std::size_t k = 0; k < entries.size(); ++k)
      os << (k ? "," : "") << space_.label(entries[k]);
    os << ')';
  } else {
    const auto& c = counts_at(index);
    os << '{';
    for (std::size_t x = 0; x < c.size(); ++x)
      os << (x ? "," : "") << space_.label(x) << ':' << c[x];
    os << '}';
  }
  return os.str();
}

std::string Domain::describe() const {
  return std::string(is_tuples() ? "X^" : "N^") + std::to_string(length_);
}

void require_same_domain(const Domain& a, const Domain& b, const char* what) {
  if (!(a == b))
    throw DomainMismatchError(std::string(what) + ": domains differ (" + a.describe() + " vs " +
                              b.describe() + ")");
}

Gamble::Gamble(Domain domain, std::vector<Rational> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.size())
    throw DomainMismatchError("gamble has " + std::to_string(values_.size()) +
                              " values but its domain has " + std::to_string(domain_.size()) +
                              " points");
}

Gamble Gamble::constant(Domain domain, const Rational& c) {
  auto n = domain.size();
  return Gamble(std::move(domain), std::vector<Rational>(n, c));
}

Gamble Gamble::indicator(Domain domain, std::size_t index) {
  std::vector<Rational> v(domain.size(), Rational(0));
  v.at(index) = 1;
  return Gamble(std::move(domain), std::move(v));
}

Gamble Gamble::tabulate(Domain domain, const std::function<Rational(std::size_t)>& fn) {
  std::vector<Rational> v;
  v.reserve(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) v.push_back(fn(i));
  return Gamble(std::move(domain), std::move(v));
}

Rational Gamble::min() const { return *std::min_element(values_.begin(), values_.end()); }
Rational Gamble::max() const { return *std::max_element(values_.begin(), values_.end()); }

bool Gamble::dominated_by(const Gamble& other) const {
  require_same_domain(domain_, other.domain_, "dominance");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] > other.values_[i]) return false;
  return true;
}

Gamble Gamble::operator-() const {
  std::vector<Rational> v(values_.size());
  std::transform(values_.begin(), values_.end(), v.begin(), [](const Rational& a) { return Rational(-a); });
  return Gamble(domain_, std::move(v));
}

Gamble Gamble::operator+(const Gamble& other) const {
  require_same_domain(domain_, other.domain_, "gamble sum");
  std::vector<Rational> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] + other.values_[i];
  return Gamble(domain_, std::move(v));
}

Gamble Gamble::operator-(const Gamble& other) const { return *this + (-other); }

Gamble Gamble::operator*(const Rational& scale) const {
  std::vector<Rational> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * scale;
  return Gamble(domain_, std::move(v));
}

Gamble Gamble::pointwise_min(const Gamble& other) const {
  require_same_domain(domain_, other.domain_, "pointwise min");
  std::vector<Rational> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(values_[i], other.values_[i]);
  return Gamble(domain_, std::move(v));
}

Gamble Gamble::pointwise_max(const Gamble& other) const {
  require_same_domain(domain_, other.domain_, "pointwise max");
  std::vector<Rational> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(values_[i], other.values_[i]);
  return Gamble(domain_, std::move(v));
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto i : images_) {
    if (i >= images_.size() || seen[i]) throw ValidationError("not a permutation");
    seen[i] = true;
  }
}

Permutation Permutation::identity(std::size_t length) {
  std::vector<std::size_t> images(length);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t length, std::size_t i, std::size_t j) {
  auto p = identity(length).images_;
  std::swap(p.at(i), p.at(j));
  return Permutation(std::move(p));
}

Permutation Permutation::from_one_based(std::span<const std::size_t> images) {
  std::vector<std::size_t> zero;
  zero.reserve(images.size());
  for (auto i : images) {
    if (i == 0) throw ValidationError("permutation images are 1-based");
    zero.push_back(i - 1);
  }
  return Permutation(std::move(zero));
}

Permutation Permutation::then(const Permutation& first, const Permutation& second) {
  if (first.length() != second.length()) throw DomainMismatchError("permutation lengths differ");
  std::vector<std::size_t> images(first.length());
  for (std::size_t k = 0; k < images.size(); ++k) images[k] = second(first(k));
  return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(std::size_t length) {
  auto p = identity(length).images_;
  std::vector<Permutation> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Gamble permute(const Gamble& f, const Permutation& pi) {
  const auto& dom = f.domain();
  if (!dom.is_tuples()) throw DomainMismatchError("permute needs a tuple-space gamble");
  if (pi.length() != dom.length())
    throw DomainMismatchError("permutation of length " + std::to_string(pi.length()) +
                              " applied to a gamble on X^" + std::to_string(dom.length()));
  std::vector<std::size_t> moved(dom.length());
  return Gamble::tabulate(dom, [&](std::size_t i) {
    auto z = dom.tuple_at(i);
    for (std::size_t k = 0; k < z.size(); ++k) moved[k] = z[pi(k)];
    return f[dom.index_of_tuple(moved)];
  });
}

Gamble cylindrical_extension(const Gamble& f, unsigned extra, std::size_t cap) {
  const auto& dom = f.domain();
  if (!dom.is_tuples()) throw DomainMismatchError("cylindrical extension needs a tuple-space gamble");
  if (extra == 0) return f;
  auto wide = Domain::tuples(dom.space(), dom.length() + extra, cap);
  // Trailing coordinates are least significant, so each value repeats |X|^k times.
  const std::size_t block = wide.size() / dom.size();
  std::vector<Rational> v;
  v.reserve(wide.size());
  for (const auto& value : f.values()) v.insert(v.end(), block, value);
  return Gamble(std::move(wide), std::move(v));
}

Gamble lower_projection(const Gamble& f, unsigned length) {
  const auto& dom = f.domain();
  if (!dom.is_tuples()) throw DomainMismatchError("lower projection needs a tuple-space gamble");
  if (length < 1 || length > dom.length())
    throw ValidationError("lower projection to X^" + std::to_string(length) + " from X^" +
                          std::to_string(dom.length()));
  auto narrow = Domain::tuples(dom.space(), length);
  const std::size_t block = dom.size() / narrow.size();
  std::vector<Rational> v;
  v.reserve(narrow.size());
  for (std::size_t i = 0; i < narrow.size(); ++i) {
    auto first = f.values().begin() + static_cast<std::ptrdiff_t>(i * block);
    v.push_back(*std::min_element(first, first + static_cast<std::ptrdiff_t>(block)));
  }
  return Gamble(std::move(narrow), std::move(v));
}

}  // namespace credal
