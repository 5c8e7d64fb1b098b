#include "clipvol/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace clipvol {

namespace {

// Number of inversions of perm, counted by merge sort. perm is consumed.
long count_inversions(std::vector<int>& perm) {
  const std::size_t n = perm.size();
  if (n < 2) return 0;
  std::vector<int> buffer(n);
  long inversions = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
      const std::size_t mid = lo + width;
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t a = lo, b = mid, out = lo;
      while (a < mid && b < hi) {
        if (perm[a] <= perm[b]) {
          buffer[out++] = perm[a++];
        } else {
          inversions += static_cast<long>(mid - a);
          buffer[out++] = perm[b++];
        }
      }
      while (a < mid) buffer[out++] = perm[a++];
      while (b < hi) buffer[out++] = perm[b++];
      std::copy(buffer.begin() + lo, buffer.begin() + hi, perm.begin() + lo);
    }
  }
  return inversions;
}

}  // namespace

IndexSet::IndexSet(std::vector<int> elems) : elems_(std::move(elems)) {
  for (std::size_t a = 0; a < elems_.size(); ++a) {
    if (elems_[a] <= 0)
      throw InvalidIndexSet("index sets hold positive (1-based) integers, got " +
                            std::to_string(elems_[a]));
    for (std::size_t b = a + 1; b < elems_.size(); ++b)
      if (elems_[a] == elems_[b])
        throw InvalidIndexSet("duplicate element " + std::to_string(elems_[a]) +
                              " in index set");
  }
}

IndexSet IndexSet::range(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return IndexSet(std::move(v));
}

int IndexSet::sum() const {
  return std::accumulate(elems_.begin(), elems_.end(), 0);
}

bool IndexSet::contains(int t) const {
  return std::find(elems_.begin(), elems_.end(), t) != elems_.end();
}

bool IndexSet::well_ordered() const {
  for (std::size_t a = 1; a < elems_.size(); ++a)
    if (elems_[a - 1] >= elems_[a]) return false;
  return true;
}

IndexSet IndexSet::without(int t) const {
  if (!contains(t))
    throw InvalidIndexSet("element " + std::to_string(t) +
                          " not present in " + str());
  std::vector<int> v;
  v.reserve(elems_.size() - 1);
  for (int e : elems_)
    if (e != t) v.push_back(e);
  IndexSet r;
  r.elems_ = std::move(v);  // distinctness inherited
  return r;
}

IndexSet IndexSet::difference(const IndexSet& j) const {
  std::vector<int> v;
  v.reserve(elems_.size());
  for (int e : elems_)
    if (!j.contains(e)) v.push_back(e);
  IndexSet r;
  r.elems_ = std::move(v);
  return r;
}

std::string IndexSet::str() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t a = 0; a < elems_.size(); ++a) {
    if (a) out << ",";
    out << elems_[a];
  }
  out << "}";
  return out.str();
}

IndexSet ordered_union(const IndexSet& i, const IndexSet& j) {
  if (!i.well_ordered() || !j.well_ordered())
    throw InvalidIndexSet("ordered_union requires well-ordered operands: " +
                          i.str() + ", " + j.str());
  std::vector<int> merged;
  merged.reserve(i.elements().size() + j.elements().size());
  std::merge(i.begin(), i.end(), j.begin(), j.end(),
             std::back_inserter(merged));
  for (std::size_t a = 1; a < merged.size(); ++a)
    if (merged[a - 1] == merged[a])
      throw InvalidIndexSet("ordered_union of non-disjoint sets: " + i.str() +
                            ", " + j.str());
  return IndexSet(std::move(merged));
}

IndexSet ordered_union(const IndexSet& i, int t) {
  return ordered_union(i, IndexSet{t});
}

IndexSet joining_union(const IndexSet& i, const IndexSet& j) {
  std::vector<int> cat(i.begin(), i.end());
  cat.insert(cat.end(), j.begin(), j.end());
  return IndexSet(std::move(cat));  // constructor rejects duplicates
}

IndexSet joining_union(const IndexSet& i, int t) {
  return joining_union(i, IndexSet{t});
}

IndexSet joining_union(int t, const IndexSet& i) {
  return joining_union(IndexSet{t}, i);
}

int permutation_parity(const IndexSet& i, const IndexSet& j) {
  if (i.size() != j.size())
    throw MismatchedSets("parity of sets of different size: " + i.str() +
                         ", " + j.str());
  // positions of j's elements within i
  std::vector<int> perm;
  perm.reserve(j.elements().size());
  for (int e : j) {
    const auto& iv = i.elements();
    const auto it = std::find(iv.begin(), iv.end(), e);
    if (it == iv.end())
      throw MismatchedSets("parity of different underlying sets: " + i.str() +
                           ", " + j.str());
    perm.push_back(static_cast<int>(it - iv.begin()));
  }
  return count_inversions(perm) % 2 == 0 ? 1 : -1;
}

int separating_parity(const IndexSet& i, const IndexSet& j) {
  for (int e : j)
    if (!i.contains(e))
      throw MismatchedSets("separating parity requires J within I: " + i.str() +
                           ", " + j.str());
  return permutation_parity(i, joining_union(i.difference(j), j));
}

std::vector<IndexSet> subsets_of_size(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) comb[static_cast<std::size_t>(t)] = t + 1;
  while (true) {
    out.emplace_back(comb);
    // advance the k-combination of [n] lexicographically
    int pos = k - 1;
    while (pos >= 0 && comb[static_cast<std::size_t>(pos)] == n - (k - 1 - pos))
      --pos;
    if (pos < 0) break;
    ++comb[static_cast<std::size_t>(pos)];
    for (int t = pos + 1; t < k; ++t)
      comb[static_cast<std::size_t>(t)] = comb[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

std::vector<IndexSet> all_subsets(int n) {
  std::vector<IndexSet> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<IndexSet> layer = subsets_of_size(n, k);
    out.insert(out.end(), std::make_move_iterator(layer.begin()),
               std::make_move_iterator(layer.end()));
  }
  return out;
}

}  // namespace clipvol
