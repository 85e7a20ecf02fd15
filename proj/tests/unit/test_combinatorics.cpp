#include <gtest/gtest.h>

#include <set>

#include "credal/combinatorics.hpp"
#include "credal/gambles.hpp"
#include "oracles.hpp"

using namespace credal;

namespace {

CategorySpace ab() { return CategorySpace({"a", "b"}); }
CategorySpace abc() { return CategorySpace({"a", "b", "c"}); }

Tuple tuple_of(const CategorySpace& s, std::vector<std::string> labels) {
  return Tuple::from_labels(s, labels);
}

}  // namespace

TEST(CategorySpace, RejectsEmptyAndDuplicates) {
  EXPECT_THROW(CategorySpace({}), ValidationError);
  EXPECT_THROW(CategorySpace({"a", "a"}), ValidationError);
  EXPECT_EQ(abc().index_of("c"), 2u);
  EXPECT_THROW(abc().index_of("d"), InvalidCategoryError);
}

TEST(CountVector, CountsOccurrences) {
  EXPECT_EQ(count_vector(tuple_of(ab(), {"a", "b", "a"})).counts(), (std::vector<unsigned>{2, 1}));
  EXPECT_EQ(count_vector(tuple_of(ab(), {"b", "b"})).counts(), (std::vector<unsigned>{0, 2}));
  auto m = count_vector(tuple_of(abc(), {"a", "b", "c", "b"}));
  EXPECT_EQ(m.counts(), (std::vector<unsigned>{1, 2, 1}));
  EXPECT_EQ(m.total(), 4u);
}

TEST(CountVector, UnknownCategoryIsRejected) {
  EXPECT_THROW(tuple_of(ab(), {"a", "z"}), InvalidCategoryError);
}

TEST(CountVector, InvariantUnderEveryPermutation) {
  auto s = abc();
  for (unsigned n = 1; n <= 5; ++n) {
    auto perms = Permutation::all(n);
    for (const auto& z : oracle::all_tuples(3, n)) {
      auto base = count_vector(Tuple(s, z));
      for (const auto& pi : perms) {
        std::vector<std::size_t> moved(n);
        for (std::size_t k = 0; k < n; ++k) moved[k] = z[pi(k)];
        ASSERT_EQ(count_vector(Tuple(s, moved)), base);
      }
    }
  }
}

TEST(Enumerate, ReverseLexicographicOrder) {
  auto ms = enumerate_count_vectors(ab(), 2);
  ASSERT_EQ(ms.size(), 3u);
  EXPECT_EQ(ms[0].counts(), (std::vector<unsigned>{2, 0}));
  EXPECT_EQ(ms[1].counts(), (std::vector<unsigned>{1, 1}));
  EXPECT_EQ(ms[2].counts(), (std::vector<unsigned>{0, 2}));

  auto single = enumerate_count_vectors(CategorySpace({"a"}), 5);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].counts(), (std::vector<unsigned>{5}));
}

TEST(Enumerate, MatchesBruteForceLattice) {
  // Oracle: distinct count vectors of all tuples.
  for (std::size_t k = 1; k <= 4; ++k)
    for (unsigned n = 0; n <= 5; ++n) {
      std::set<oracle::Counts> expected;
      for (const auto& z : oracle::all_tuples(k, n)) expected.insert(oracle::count(z, k));
      std::vector<std::string> labels;
      for (std::size_t x = 0; x < k; ++x) labels.push_back(std::string(1, char('a' + x)));
      auto ms = enumerate_count_vectors(CategorySpace(labels), n);
      std::set<oracle::Counts> got;
      for (const auto& m : ms) got.insert(m.counts());
      EXPECT_EQ(got.size(), ms.size()) << "duplicates";
      EXPECT_EQ(got, expected);
      EXPECT_EQ(Integer(ms.size()), binomial(n + static_cast<unsigned>(k) - 1, static_cast<unsigned>(k) - 1));
      for (std::size_t i = 1; i < ms.size(); ++i) EXPECT_GT(ms[i - 1].counts(), ms[i].counts());
    }
  EXPECT_EQ(enumerate_count_vectors(abc(), 3).size(), 10u);
}

TEST(Atom, ListsAllOrderings) {
  auto s = ab();
  auto a11 = atom(CountVector(s, {1, 1}));
  ASSERT_EQ(a11.size(), 2u);
  EXPECT_EQ(a11[0], tuple_of(s, {"a", "b"}));
  EXPECT_EQ(a11[1], tuple_of(s, {"b", "a"}));

  auto a20 = atom(CountVector(s, {2, 0}));
  ASSERT_EQ(a20.size(), 1u);
  EXPECT_EQ(a20[0], tuple_of(s, {"a", "a"}));

  // Oracle: filter X^3 by count vector.
  auto a21 = atom(CountVector(s, {2, 1}));
  std::vector<Tuple> expected;
  for (const auto& z : oracle::all_tuples(2, 3))
    if (oracle::count(z, 2) == oracle::Counts{2, 1}) expected.emplace_back(s, z);
  EXPECT_EQ(a21, expected);
  EXPECT_EQ(a21.size(), 3u);
}

TEST(Atom, RefusesBeyondCap) {
  CountVector m(abc(), {4, 4, 4});  // nu = 34650
  EXPECT_THROW(atom(m, 1000), CapacityError);
  EXPECT_EQ(atom(m, 34650).size(), 34650u);
}

TEST(Nu, KnownValues) {
  EXPECT_EQ(nu(CountVector(ab(), {1, 1})), 2);
  EXPECT_EQ(nu(CountVector(ab(), {2, 0})), 1);
  EXPECT_EQ(nu(CountVector(abc(), {2, 1, 1})), Integer(oracle::nu({2, 1, 1})));
  EXPECT_EQ(nu(CountVector(abc(), {2, 1, 1})), 12);
}

TEST(Nu, SumsToTupleCount) {
  for (std::size_t k = 1; k <= 4; ++k)
    for (unsigned n = 0; n <= 6; ++n) {
      std::vector<std::string> labels;
      for (std::size_t x = 0; x < k; ++x) labels.push_back(std::string(1, char('a' + x)));
      CategorySpace s(labels);
      Integer total = 0;
      for (const auto& m : enumerate_count_vectors(s, n)) {
        total += nu(m);
        if (n <= 5) ASSERT_EQ(Integer(atom(m).size()), nu(m));
      }
      Integer expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), k, n);
      EXPECT_EQ(total, expected) << "k=" << k << " n=" << n;
    }
}

TEST(Nu, LargeValuesAreExact) {
  // 60! / (20!)^3 does not fit in 64 bits.
  Factorials f;
  std::vector<unsigned> c{20, 20, 20};
  EXPECT_EQ(nu(c), f.multinomial(c));
  EXPECT_GT(nu(c), Integer("18446744073709551616"));
}

TEST(CountLattice, IndexRoundTrip) {
  CountLattice lattice(3, 4);
  for (std::size_t i = 0; i < lattice.size(); ++i) EXPECT_EQ(lattice.index_of(lattice.at(i)), i);
  std::vector<unsigned> bad{5, 0, 0};
  EXPECT_THROW(lattice.index_of(bad), ValidationError);
}
