#pragma once
// Ordered index sets and the parity combinatorics that drive every sign in
// the vertex-sum volume formulas.
//
// An IndexSet is an ordered sequence of distinct positive (1-based)
// integers. Order matters: minors are extracted in the order listed, and
// permutation parities compare two orderings of the same underlying set.
// Two unions are provided: ordered_union merges two increasing sequences
// into one increasing sequence, joining_union concatenates (result may be
// non-increasing). separating_parity is the sign Delta(I,J) =
// sigma(I, (I\J) joined with J) that the general formulas use for their
// sign exponents.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "clipvol/errors.hpp"

namespace clipvol {

class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> elems)
      : IndexSet(std::vector<int>(elems)) {}
  explicit IndexSet(std::vector<int> elems);

  // [n] = {1, 2, ..., n}.
  static IndexSet range(int n);

  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }

  // Element sum ||I||.
  int sum() const;

  bool contains(int t) const;
  bool well_ordered() const;  // strictly increasing

  const std::vector<int>& elements() const { return elems_; }
  int operator[](std::size_t position) const { return elems_[position]; }
  std::vector<int>::const_iterator begin() const { return elems_.begin(); }
  std::vector<int>::const_iterator end() const { return elems_.end(); }

  // I \ {t}, order preserved; t must be present.
  IndexSet without(int t) const;
  // I \ J, order preserved; J need not be contained in I.
  IndexSet difference(const IndexSet& j) const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.elems_ == b.elems_;
  }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) {
    return !(a == b);
  }

  std::string str() const;  // "{1,3,2}"

 private:
  std::vector<int> elems_;
};

// Merge of two increasing disjoint sequences (InvalidIndexSet otherwise).
IndexSet ordered_union(const IndexSet& i, const IndexSet& j);
IndexSet ordered_union(const IndexSet& i, int t);

// Concatenation of disjoint sequences (InvalidIndexSet on duplicates).
IndexSet joining_union(const IndexSet& i, const IndexSet& j);
IndexSet joining_union(const IndexSet& i, int t);
IndexSet joining_union(int t, const IndexSet& i);

// sigma(I, J): sign of the permutation carrying the listing I to the
// listing J; the underlying sets must coincide (MismatchedSets otherwise).
// Computed by merge-sort inversion counting.
int permutation_parity(const IndexSet& i, const IndexSet& j);

// Delta(I, J) = sigma(I, (I\J) v J) for J a subset of I (MismatchedSets
// otherwise).
int separating_parity(const IndexSet& i, const IndexSet& j);

// All size-k subsets of {1..n} as increasing sequences, in lexicographic
// order. Empty list when k < 0 or k > n.
std::vector<IndexSet> subsets_of_size(int n, int k);

// All subsets of {1..n}, ordered by size and lexicographically within a
// size; the first entry is {}.
std::vector<IndexSet> all_subsets(int n);

}  // namespace clipvol
