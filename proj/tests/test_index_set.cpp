#include <doctest.h>

#include <algorithm>
#include <vector>

#include "clipvol/index_set.hpp"

#include "test_support.hpp"

using clipvol::IndexSet;

namespace {

// O(k^2) reference for the permutation sign between two orderings of the
// same elements: count pairwise inversions of J's positions inside I.
int parity_oracle(const IndexSet& base, const IndexSet& reordered) {
  std::vector<int> pos;
  for (int x : reordered) {
    const auto& e = base.elements();
    pos.push_back(static_cast<int>(
        std::find(e.begin(), e.end(), x) - e.begin()));
  }
  int inversions = 0;
  for (size_t i = 0; i < pos.size(); ++i)
    for (size_t j = i + 1; j < pos.size(); ++j)
      if (pos[i] > pos[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

// All subsets of {1..n}, each in increasing order.
std::vector<IndexSet> subsets_of_range(int n) {
  std::vector<IndexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> elems;
    for (int t = 1; t <= n; ++t)
      if (mask & (1u << (t - 1))) elems.push_back(t);
    out.emplace_back(elems);
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("index-sets");

TEST_CASE("construction validates labels") {
  CHECK(IndexSet({3, 1, 2}).size() == 3);
  CHECK(IndexSet({3, 1, 2}).str() == "{3,1,2}");
  CHECK(IndexSet().empty());
  CHECK(IndexSet().str() == "{}");
  CHECK_THROWS_AS(IndexSet({1, 1}), clipvol::InvalidIndexSet);
  CHECK_THROWS_AS(IndexSet({0, 1}), clipvol::InvalidIndexSet);
  CHECK_THROWS_AS(IndexSet({-2}), clipvol::InvalidIndexSet);
}

TEST_CASE("basic queries") {
  const IndexSet I({3, 1, 4});
  CHECK(I.sum() == 8);
  CHECK(I.contains(4));
  CHECK(!I.contains(2));
  CHECK(!I.well_ordered());
  CHECK(IndexSet({1, 3, 4}).well_ordered());
  CHECK(IndexSet().well_ordered());
  CHECK(I[0] == 3);
  CHECK(I[2] == 4);
  CHECK(IndexSet::range(4) == IndexSet({1, 2, 3, 4}));
  CHECK(IndexSet::range(0) == IndexSet());
}

TEST_CASE("without and difference") {
  const IndexSet I({2, 5, 7});
  CHECK(I.without(5) == IndexSet({2, 7}));
  CHECK_THROWS_AS(I.without(3), clipvol::InvalidIndexSet);
  CHECK(I.difference(IndexSet({5, 9})) == IndexSet({2, 7}));
  CHECK(I.difference(IndexSet()) == I);
  CHECK(I.difference(I).empty());
}

TEST_CASE("ordered union merges, joining union appends") {
  CHECK(clipvol::ordered_union(IndexSet({1, 4}), IndexSet({2, 6})) ==
        IndexSet({1, 2, 4, 6}));
  CHECK(clipvol::ordered_union(IndexSet({1, 4}), 3) == IndexSet({1, 3, 4}));
  CHECK(clipvol::joining_union(IndexSet({1, 4}), IndexSet({6, 2})) ==
        IndexSet({1, 4, 6, 2}));
  CHECK(clipvol::joining_union(IndexSet({1, 4}), 3) == IndexSet({1, 4, 3}));
  CHECK(clipvol::joining_union(3, IndexSet({1, 4})) == IndexSet({3, 1, 4}));

  // ordered union requires well-ordered, disjoint arguments
  CHECK_THROWS_AS(clipvol::ordered_union(IndexSet({4, 1}), IndexSet({2})),
                  clipvol::InvalidIndexSet);
  CHECK_THROWS_AS(clipvol::ordered_union(IndexSet({1, 4}), IndexSet({4})),
                  clipvol::InvalidIndexSet);
  // joining union only requires distinctness of the concatenation
  CHECK_THROWS_AS(clipvol::joining_union(IndexSet({1, 4}), IndexSet({4})),
                  clipvol::InvalidIndexSet);
}

TEST_CASE("permutation parity against a quadratic oracle") {
  CHECK(clipvol::permutation_parity(IndexSet({1, 2, 3}), IndexSet({1, 2, 3})) ==
        1);
  CHECK(clipvol::permutation_parity(IndexSet({1, 2, 3}), IndexSet({2, 1, 3})) ==
        -1);
  CHECK(clipvol::permutation_parity(IndexSet({1, 2, 3}), IndexSet({3, 1, 2})) ==
        1);
  CHECK_THROWS_AS(
      clipvol::permutation_parity(IndexSet({1, 2}), IndexSet({1, 2, 3})),
      clipvol::MismatchedSets);
  CHECK_THROWS_AS(
      clipvol::permutation_parity(IndexSet({1, 2}), IndexSet({1, 3})),
      clipvol::MismatchedSets);

  test_support::Rng rng(5150);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng.below(7));
    std::vector<int> elems;
    while (static_cast<int>(elems.size()) < k) {
      const int cand = 1 + static_cast<int>(rng.below(20));
      if (std::find(elems.begin(), elems.end(), cand) == elems.end())
        elems.push_back(cand);
    }
    const IndexSet I(elems);
    std::vector<int> shuffled = elems;
    for (size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    const IndexSet J(shuffled);
    CHECK(clipvol::permutation_parity(I, J) == parity_oracle(I, J));
  }
}

TEST_CASE("separating parity examples and closed forms") {
  // moving {2} out of {1,2,3}: one transposition past element 3
  CHECK(clipvol::separating_parity(IndexSet({1, 2, 3}), IndexSet({2})) == -1);
  CHECK(clipvol::separating_parity(IndexSet({1, 2, 3}), IndexSet({3})) == 1);
  CHECK(clipvol::separating_parity(IndexSet({1, 2, 3, 4}), IndexSet({1, 3})) ==
        -1);
  CHECK(clipvol::separating_parity(IndexSet({1, 2, 3}), IndexSet()) == 1);
  CHECK_THROWS_AS(
      clipvol::separating_parity(IndexSet({1, 2}), IndexSet({3})),
      clipvol::MismatchedSets);

  // closed form over the full range: moving J to the back of [n] costs
  // (-1)^(n|J| - sum(J) - |J|(|J|-1)/2), exhaustively for n <= 8.
  for (int n = 0; n <= 8; ++n) {
    const IndexSet full = IndexSet::range(n);
    for (const IndexSet& J : subsets_of_range(n)) {
      const int k = static_cast<int>(J.size());
      const int exponent = n * k - J.sum() - k * (k - 1) / 2;
      const int expected = (exponent % 2 == 0) ? 1 : -1;
      CHECK(clipvol::separating_parity(full, J) == expected);
    }
  }

  // singleton form: moving {t} to the back of [n] costs (-1)^(n-t)
  for (int n = 1; n <= 8; ++n)
    for (int t = 1; t <= n; ++t) {
      const int expected = ((n - t) % 2 == 0) ? 1 : -1;
      CHECK(clipvol::separating_parity(IndexSet::range(n), IndexSet({t})) ==
            expected);
    }
}

TEST_CASE("product of singleton separations depends only on the size") {
  // over any I, prod_{i in I} sep(I, {i}) = (-1)^(|I|(|I|-1)/2)
  for (const IndexSet& I : subsets_of_range(8)) {
    int prod = 1;
    for (int i : I) prod *= clipvol::separating_parity(I, IndexSet({i}));
    const int k = static_cast<int>(I.size());
    const int expected = (k * (k - 1) / 2 % 2 == 0) ? 1 : -1;
    CHECK(prod == expected);
  }
}

TEST_CASE("parities compose") {
  test_support::Rng rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + static_cast<int>(rng.below(6));
    std::vector<int> elems;
    while (static_cast<int>(elems.size()) < k) {
      const int cand = 1 + static_cast<int>(rng.below(15));
      if (std::find(elems.begin(), elems.end(), cand) == elems.end())
        elems.push_back(cand);
    }
    auto shuffle = [&](std::vector<int> v) {
      for (size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng.below(i)]);
      return v;
    };
    const IndexSet a(elems), b(shuffle(elems)), c(shuffle(elems));
    CHECK(clipvol::permutation_parity(a, c) ==
          clipvol::permutation_parity(a, b) * clipvol::permutation_parity(b, c));
  }
}

TEST_CASE("front vs back adjunction of one extra label") {
  // appending m to I versus prepending costs (-1)^|I|
  for (int n = 0; n <= 7; ++n) {
    const int m = 20;
    for (const IndexSet& I : subsets_of_range(n)) {
      const IndexSet back = clipvol::joining_union(I, m);
      const IndexSet front = clipvol::joining_union(m, I);
      const int expected = (I.size() % 2 == 0) ? 1 : -1;
      CHECK(clipvol::permutation_parity(back, front) == expected);
    }
  }
}

TEST_SUITE_END();
