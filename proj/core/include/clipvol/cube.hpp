#pragma once
// Model of a unit cube clipped by hyperplanes, and exact enumeration of the
// vertices of the clipped region.
//
// A spec holds m affine functions g_i(x) = <a_i, x> + r_i on [0,1]^n. The
// clipped region is [0,1]^n intersected with g_i(x) >= 0 for ALL i; the last
// function g_m additionally acts as the auxiliary linear form that powers the
// vertex-sum volume formulas, so it plays a special role throughout: vertex
// records carry the sign of g_m (their "side"), and vertices with g_m = 0
// are flagged degenerate.
//
// A vertex of the clipped region fixes n - k coordinates at 0 or 1 (the sets
// v0 and v1), leaves k coordinates strictly interior (the star set v*), and
// lies on k tight planes (the set I, which may include the auxiliary plane).
// enumerate_vertices visits every stratum (I, v*, 0/1-assignment), solves the
// k x k tight system exactly, and keeps solutions whose stars are strictly
// inside (0,1) and which satisfy every clipping inequality g_i >= 0 for
// i < m not in I. The auxiliary inequality is NOT enforced: points on its
// negative side are emitted with side = -1 so the same enumeration serves
// complementary-volume computations. Formula callers keep side = +1,
// non-degenerate records only.
//
// A consistent-but-underdetermined tight system means the planes meet the
// stratum in a positive-dimensional set; in strict mode this raises
// NonGenericFace (unless the auxiliary plane is involved, whose strata are
// only ever used for degenerate bookkeeping).

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "clipvol/errors.hpp"
#include "clipvol/index_set.hpp"
#include "clipvol/matrix.hpp"
#include "clipvol/rational.hpp"

namespace clipvol {

inline constexpr int kDefaultDimensionCap = 20;

inline void ensure_dimension_cap(int n, int cap) {
  if (n > cap)
    throw DimensionCapExceeded("dimension " + std::to_string(n) +
                               " exceeds the configured cap " +
                               std::to_string(cap));
}

template <class S>
struct Hyperplane {
  std::vector<S> a;  // one coefficient per coordinate
  S r = S(0);        // constant term

  S eval(const std::vector<S>& x) const {
    if (x.size() != a.size())
      throw ShapeMismatch("point dimension != hyperplane dimension");
    S acc = r;
    for (std::size_t t = 0; t < a.size(); ++t) acc += a[t] * x[t];
    return acc;
  }
};

template <class S>
struct ClippedCubeSpec {
  int n = 0;
  std::vector<Hyperplane<S>> planes;  // the last one is the auxiliary plane

  int m() const { return static_cast<int>(planes.size()); }
  const Hyperplane<S>& aux() const { return planes.back(); }
  const Hyperplane<S>& plane(int i) const {
    return planes[static_cast<std::size_t>(i - 1)];  // 1-based
  }

  void validate() const {
    if (n < 1) throw InvalidSpec("dimension must be at least 1");
    if (planes.empty())
      throw InvalidSpec("at least one hyperplane (the auxiliary) is required");
    for (std::size_t i = 0; i < planes.size(); ++i)
      if (static_cast<int>(planes[i].a.size()) != n)
        throw InvalidSpec("hyperplane " + std::to_string(i + 1) + " has " +
                          std::to_string(planes[i].a.size()) +
                          " coefficients, expected " + std::to_string(n));
  }
};

// The n x m matrix whose column i lists the coordinate coefficients of
// plane i: entry (t, i) is the coefficient of x_t in g_i.
template <class S>
Matrix<S> coefficient_matrix(const ClippedCubeSpec<S>& spec) {
  Matrix<S> a(spec.n, spec.m());
  for (int i = 1; i <= spec.m(); ++i)
    for (int t = 1; t <= spec.n; ++t)
      a(t, i) = spec.plane(i).a[static_cast<std::size_t>(t - 1)];
  return a;
}

template <class S>
struct VertexRecord {
  std::vector<S> coords;  // all n coordinates
  IndexSet planes;        // I: tight planes, increasing
  IndexSet fixed_zero;    // v0: coordinates at 0, increasing
  IndexSet fixed_one;     // v1: coordinates at 1, increasing
  IndexSet star;          // v*: strictly interior coordinates, increasing
  bool degenerate = false;  // the auxiliary function vanishes here
  int side = 0;             // sign of the auxiliary function at the vertex

  // v0 and v1 merged in increasing coordinate order.
  IndexSet fixed() const { return ordered_union(fixed_zero, fixed_one); }
};

struct VertexDecomposition {
  IndexSet zero;  // coordinates equal to 0
  IndexSet one;   // coordinates equal to 1
  IndexSet star;  // coordinates strictly between 0 and 1
};

// Split the coordinates of a cube point into (v0, v1, v*). Coordinates
// outside [0,1] violate the cube model.
template <class S>
VertexDecomposition decompose_vertex(const std::vector<S>& coords) {
  std::vector<int> zero, one, star;
  for (std::size_t t = 0; t < coords.size(); ++t) {
    const int label = static_cast<int>(t) + 1;
    if (coords[t] == S(0))
      zero.push_back(label);
    else if (coords[t] == S(1))
      one.push_back(label);
    else if (coords[t] > S(0) && coords[t] < S(1))
      star.push_back(label);
    else
      throw FormulaPreconditionViolated(
          "coordinate " + std::to_string(label) +
          " lies outside the unit interval");
  }
  return {IndexSet(std::move(zero)), IndexSet(std::move(one)),
          IndexSet(std::move(star))};
}

enum class EnumerationMode {
  kStrict,   // raise NonGenericFace on consistent singular strata
  kLenient,  // skip them (used by redundancy probing)
};

namespace detail {

template <class S>
class VertexEnumerator {
 public:
  VertexEnumerator(const ClippedCubeSpec<S>& spec, EnumerationMode mode)
      : spec_(spec), mode_(mode), n_(spec.n), m_(spec.m()) {}

  std::vector<VertexRecord<S>> run() {
    for (int k = 0; k <= std::min(n_, m_); ++k)
      for (const IndexSet& planes : subsets_of_size(m_, k))
        for (const IndexSet& star : subsets_of_size(n_, k))
          visit_stratum(planes, star);
    std::sort(records_.begin(), records_.end(),
              [](const VertexRecord<S>& a, const VertexRecord<S>& b) {
                if (a.planes.size() != b.planes.size())
                  return a.planes.size() < b.planes.size();
                if (a.planes.elements() != b.planes.elements())
                  return a.planes.elements() < b.planes.elements();
                return a.coords < b.coords;
              });
    return std::move(records_);
  }

 private:
  void visit_stratum(const IndexSet& planes, const IndexSet& star) {
    free_coords_.clear();
    for (int t = 1; t <= n_; ++t)
      if (!star.contains(t)) free_coords_.push_back(t);
    assignment_.assign(free_coords_.size(), 0);
    assign_from(planes, star, 0);
  }

  // Recursively fix the non-star coordinates to 0/1 (0 first, so complete
  // assignments appear in lexicographic order), pruning a subtree as soon
  // as some clipping inequality can no longer be satisfied.
  void assign_from(const IndexSet& planes, const IndexSet& star,
                   std::size_t next) {
    if (!clipping_still_satisfiable(planes, star, next)) return;
    if (next == free_coords_.size()) {
      solve_stratum(planes, star);
      return;
    }
    assignment_[next] = 0;
    assign_from(planes, star, next + 1);
    assignment_[next] = 1;
    assign_from(planes, star, next + 1);
    assignment_[next] = 0;
  }

  // Upper-bound each clipping inequality g_i (i < m, i not tight) over all
  // completions of the partial assignment: fixed coordinates contribute
  // exactly, undecided and star coordinates contribute max(a, 0).
  bool clipping_still_satisfiable(const IndexSet& planes, const IndexSet& star,
                                  std::size_t decided) {
    for (int i = 1; i < m_; ++i) {
      if (planes.contains(i)) continue;
      const Hyperplane<S>& g = spec_.plane(i);
      S bound = g.r;
      for (std::size_t p = 0; p < decided; ++p) {
        if (assignment_[p] == 1)
          bound += g.a[static_cast<std::size_t>(free_coords_[p] - 1)];
      }
      for (std::size_t p = decided; p < free_coords_.size(); ++p) {
        const S& c = g.a[static_cast<std::size_t>(free_coords_[p] - 1)];
        if (c > S(0)) bound += c;
      }
      for (int t : star) {
        const S& c = g.a[static_cast<std::size_t>(t - 1)];
        if (c > S(0)) bound += c;
      }
      if (bound < S(0)) return false;
    }
    return true;
  }

  void solve_stratum(const IndexSet& planes, const IndexSet& star) {
    const int k = planes.size();
    Matrix<S> system(k, k);
    std::vector<S> rhs(static_cast<std::size_t>(k));
    for (int row = 1; row <= k; ++row) {
      const Hyperplane<S>& g = spec_.plane(planes[static_cast<std::size_t>(row - 1)]);
      S constant = g.r;
      for (std::size_t p = 0; p < free_coords_.size(); ++p)
        if (assignment_[p] == 1)
          constant += g.a[static_cast<std::size_t>(free_coords_[p] - 1)];
      rhs[static_cast<std::size_t>(row - 1)] = -constant;
      for (int col = 1; col <= k; ++col)
        system(row, col) =
            g.a[static_cast<std::size_t>(star[static_cast<std::size_t>(col - 1)] - 1)];
    }
    const LinearSolveResult<S> solved = gaussian_solve(system, rhs);
    if (solved.status == SolveStatus::kInconsistent) return;
    if (solved.status == SolveStatus::kUnderdetermined) {
      if (mode_ == EnumerationMode::kStrict && !planes.contains(m_))
        throw NonGenericFace(
            "planes " + planes.str() + " meet the stratum with stars " +
                star.str() + " in a positive-dimensional set",
            planes.elements(), star.elements());
      return;
    }
    for (const S& value : solved.solution)
      if (!(value > S(0) && value < S(1))) return;

    std::vector<S> coords(static_cast<std::size_t>(n_), S(0));
    for (std::size_t p = 0; p < free_coords_.size(); ++p)
      coords[static_cast<std::size_t>(free_coords_[p] - 1)] =
          assignment_[p] == 1 ? S(1) : S(0);
    for (int col = 0; col < k; ++col)
      coords[static_cast<std::size_t>(star[static_cast<std::size_t>(col)] - 1)] =
          solved.solution[static_cast<std::size_t>(col)];

    for (int i = 1; i < m_; ++i) {
      if (planes.contains(i)) continue;
      if (spec_.plane(i).eval(coords) < S(0)) return;
    }
    if (!seen_.emplace(coords, true).second) return;  // duplicate coordinates

    VertexRecord<S> rec;
    rec.side = sign(spec_.aux().eval(coords));
    rec.degenerate = rec.side == 0;
    rec.coords = std::move(coords);
    const VertexDecomposition parts = decompose_vertex(rec.coords);
    rec.fixed_zero = parts.zero;
    rec.fixed_one = parts.one;
    rec.star = parts.star;
    rec.planes = planes;
    records_.push_back(std::move(rec));
  }

  const ClippedCubeSpec<S>& spec_;
  EnumerationMode mode_;
  int n_;
  int m_;
  std::vector<int> free_coords_;  // non-star coordinates, increasing
  std::vector<int> assignment_;   // 0/1 value per free coordinate
  std::map<std::vector<S>, bool> seen_;
  std::vector<VertexRecord<S>> records_;
};

}  // namespace detail

// Every vertex of the clipped region, both sides of the auxiliary plane,
// deduplicated by coordinates (first stratum found wins) and sorted by
// (|I|, I, coordinates).
template <class S>
std::vector<VertexRecord<S>> enumerate_vertices(
    const ClippedCubeSpec<S>& spec,
    EnumerationMode mode = EnumerationMode::kStrict,
    int dimension_cap = kDefaultDimensionCap) {
  spec.validate();
  ensure_dimension_cap(spec.n, dimension_cap);
  return detail::VertexEnumerator<S>(spec, mode).run();
}

// Number of (stratum, assignment) candidates enumeration visits for a cube
// clipped by `planes` hyperplanes (the auxiliary one not counted):
// sum over k of C(planes, k) * C(n, k) * 2^(n-k).
inline BigInt enumeration_candidate_count(int n, int planes) {
  BigInt total = 0;
  for (int k = 0; k <= std::min(n, planes); ++k)
    total += binomial(planes, k) * binomial(n, k) * pow(BigInt(2), n - k);
  return total;
}

// ---- good clipping ----------------------------------------------------------

// A witness that some strictly lower-dimensional stratum meets the tight set
// of I: the closed-form summation over (|I|-star vertices) would miss or
// double-count mass. When `indeterminate` is set the stratum system was
// consistent but underdetermined, so a single witness point cannot be named.
template <class S>
struct ConditionAViolation {
  IndexSet planes;         // the tight set I
  IndexSet star;           // stars of the offending stratum (|I| - 1 of them)
  std::vector<S> witness;  // a point of the intersection; empty if indeterminate
  bool indeterminate = false;
};

struct MinorLabel {
  IndexSet rows;
  IndexSet cols;
};

// A formula-relevant vertex at which a denominator minor vanishes.
template <class S>
struct ConditionBViolation {
  VertexRecord<S> vertex;
  std::vector<MinorLabel> vanishing;
};

template <class S>
struct GoodClippingReport {
  std::vector<ConditionAViolation<S>> condition_a;
  std::vector<ConditionBViolation<S>> condition_b;
  bool holds() const { return condition_a.empty() && condition_b.empty(); }
};

// Verify the two structural conditions the general vertex-sum formulas
// assume. (A) no tight set I of clipping planes meets a stratum with fewer
// than |I| stars; (B) at every vertex on the positive side, all denominator
// minors of the general formulas are nonzero.
template <class S>
GoodClippingReport<S> check_good_clipping(
    const ClippedCubeSpec<S>& spec, int dimension_cap = kDefaultDimensionCap) {
  spec.validate();
  ensure_dimension_cap(spec.n, dimension_cap);
  const int n = spec.n, m = spec.m();
  GoodClippingReport<S> report;

  // Condition (A): walk every stratum one dimension short of |I|.
  for (int k = 1; k <= std::min(n + 1, m - 1); ++k) {
    for (const IndexSet& planes : subsets_of_size(m - 1, k)) {
      for (const IndexSet& star : subsets_of_size(n, k - 1)) {
        std::vector<int> free_coords;
        for (int t = 1; t <= n; ++t)
          if (!star.contains(t)) free_coords.push_back(t);
        const std::size_t free_count = free_coords.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_count);
             ++mask) {
          Matrix<S> system(k, k - 1);
          std::vector<S> rhs(static_cast<std::size_t>(k));
          for (int row = 1; row <= k; ++row) {
            const Hyperplane<S>& g =
                spec.plane(planes[static_cast<std::size_t>(row - 1)]);
            S constant = g.r;
            for (std::size_t p = 0; p < free_count; ++p)
              if (mask & (std::uint64_t{1} << p))
                constant += g.a[static_cast<std::size_t>(free_coords[p] - 1)];
            rhs[static_cast<std::size_t>(row - 1)] = -constant;
            for (int col = 1; col <= k - 1; ++col)
              system(row, col) = g.a[static_cast<std::size_t>(
                  star[static_cast<std::size_t>(col - 1)] - 1)];
          }
          const LinearSolveResult<S> solved = gaussian_solve(system, rhs);
          if (solved.status == SolveStatus::kInconsistent) continue;
          if (solved.status == SolveStatus::kUnderdetermined) {
            // report a given stratum as indeterminate once, not per corner
            const bool already =
                !report.condition_a.empty() &&
                report.condition_a.back().indeterminate &&
                report.condition_a.back().planes == planes &&
                report.condition_a.back().star == star;
            if (!already) report.condition_a.push_back({planes, star, {}, true});
            continue;
          }
          bool interior = true;
          for (const S& value : solved.solution)
            if (!(value > S(0) && value < S(1))) {
              interior = false;
              break;
            }
          if (!interior) continue;
          std::vector<S> coords(static_cast<std::size_t>(n), S(0));
          for (std::size_t p = 0; p < free_count; ++p)
            if (mask & (std::uint64_t{1} << p))
              coords[static_cast<std::size_t>(free_coords[p] - 1)] = S(1);
          for (int col = 0; col < k - 1; ++col)
            coords[static_cast<std::size_t>(
                star[static_cast<std::size_t>(col)] - 1)] =
                solved.solution[static_cast<std::size_t>(col)];
          bool feasible = true;
          for (int i = 1; i < m; ++i) {
            if (planes.contains(i)) continue;
            if (spec.plane(i).eval(coords) < S(0)) {
              feasible = false;
              break;
            }
          }
          if (!feasible) continue;
          if (!(spec.aux().eval(coords) > S(0))) continue;
          report.condition_a.push_back({planes, star, std::move(coords), false});
        }
      }
    }
  }

  // Condition (B): every denominator minor at formula-relevant vertices.
  // Lenient enumeration so that a non-generic stratum (itself a reportable
  // defect) cannot abort the report.
  const Matrix<S> a = coefficient_matrix(spec);
  for (const VertexRecord<S>& v :
       enumerate_vertices(spec, EnumerationMode::kLenient, dimension_cap)) {
    if (v.side <= 0 || v.degenerate || v.planes.contains(m)) continue;
    std::vector<MinorLabel> vanishing;
    for (int t : v.planes) {
      const IndexSet cols = ordered_union(v.planes.without(t), m);
      if (minor(a, v.star, cols) == S(0)) vanishing.push_back({v.star, cols});
    }
    const IndexSet cols_full = ordered_union(v.planes, m);
    for (int t : v.fixed()) {
      const IndexSet rows = ordered_union(v.star, t);
      if (minor(a, rows, cols_full) == S(0))
        vanishing.push_back({rows, cols_full});
    }
    if (!vanishing.empty())
      report.condition_b.push_back({v, std::move(vanishing)});
  }
  return report;
}

// ---- redundancy -------------------------------------------------------------

struct RedundancyEntry {
  int plane = 0;          // 1-based plane index in the original spec
  bool redundant = false; // dropping it leaves the vertex set unchanged
};

struct RedundancyReport {
  std::vector<RedundancyEntry> entries;  // one per plane
};

// Probe each hyperplane: a plane is redundant when removing it does not
// change the set of vertex coordinates. Uses lenient enumeration so that
// non-generic strata in a probe never abort the report. With m = 1 there is
// nothing left after dropping, so the single plane is reported essential.
template <class S>
RedundancyReport check_redundancy(const ClippedCubeSpec<S>& spec,
                                  int dimension_cap = kDefaultDimensionCap) {
  spec.validate();
  ensure_dimension_cap(spec.n, dimension_cap);
  RedundancyReport report;
  if (spec.m() == 1) {
    report.entries.push_back({1, false});
    return report;
  }
  auto coordinate_set = [&](const ClippedCubeSpec<S>& s) {
    std::vector<std::vector<S>> coords;
    for (const VertexRecord<S>& v :
         enumerate_vertices(s, EnumerationMode::kLenient, dimension_cap))
      coords.push_back(v.coords);
    std::sort(coords.begin(), coords.end());
    return coords;
  };
  const std::vector<std::vector<S>> baseline = coordinate_set(spec);
  for (int j = 1; j <= spec.m(); ++j) {
    ClippedCubeSpec<S> reduced = spec;
    reduced.planes.erase(reduced.planes.begin() + (j - 1));
    report.entries.push_back({j, coordinate_set(reduced) == baseline});
  }
  return report;
}

// Flip the auxiliary plane: the complementary region's auxiliary function.
template <class S>
ClippedCubeSpec<S> negate_aux(const ClippedCubeSpec<S>& spec) {
  spec.validate();
  ClippedCubeSpec<S> out = spec;
  Hyperplane<S>& g = out.planes.back();
  for (S& c : g.a) c = -c;
  g.r = -g.r;
  return out;
}

// ---- half-space form ---------------------------------------------------------

// A convex region given purely as an intersection of half-spaces g >= 0.
template <class S>
struct PolytopeSpec {
  int dim = 0;
  std::vector<Hyperplane<S>> constraints;
};

// The clipped cube as 2n + m half-spaces, in the fixed order
// x_1 >= 0, 1 - x_1 >= 0, ..., x_n >= 0, 1 - x_n >= 0, g_1, ..., g_m.
template <class S>
PolytopeSpec<S> cube_to_polytope(const ClippedCubeSpec<S>& spec) {
  spec.validate();
  PolytopeSpec<S> poly;
  poly.dim = spec.n;
  for (int t = 1; t <= spec.n; ++t) {
    Hyperplane<S> lower, upper;
    lower.a.assign(static_cast<std::size_t>(spec.n), S(0));
    upper.a.assign(static_cast<std::size_t>(spec.n), S(0));
    lower.a[static_cast<std::size_t>(t - 1)] = S(1);
    lower.r = S(0);
    upper.a[static_cast<std::size_t>(t - 1)] = S(-1);
    upper.r = S(1);
    poly.constraints.push_back(std::move(lower));
    poly.constraints.push_back(std::move(upper));
  }
  for (const Hyperplane<S>& g : spec.planes) poly.constraints.push_back(g);
  return poly;
}

// The n x (2n + m) matrix whose columns are the coordinate coefficient
// vectors of the cube facets (e_1, -e_1, ..., e_n, -e_n) followed by the
// columns of the plane coefficient matrix.
template <class S>
Matrix<S> augmented_matrix(const ClippedCubeSpec<S>& spec) {
  const int n = spec.n, m = spec.m();
  Matrix<S> a(n, 2 * n + m);
  for (int t = 1; t <= n; ++t) {
    a(t, 2 * t - 1) = S(1);
    a(t, 2 * t) = S(-1);
  }
  for (int i = 1; i <= m; ++i)
    for (int t = 1; t <= n; ++t)
      a(t, 2 * n + i) = spec.plane(i).a[static_cast<std::size_t>(t - 1)];
  return a;
}

// Columns of the augmented matrix tight at the vertex: the cube-facet
// column 2t-1 for each coordinate fixed at 0, the column 2t for each fixed
// at 1, and 2n + i for each tight plane, all in increasing column order.
template <class S>
IndexSet augmented_columns(const VertexRecord<S>& v, int n) {
  std::vector<int> cols;
  for (int t : v.fixed_zero) cols.push_back(2 * t - 1);
  for (int t : v.fixed_one) cols.push_back(2 * t);
  for (int i : v.planes) cols.push_back(2 * n + i);
  std::sort(cols.begin(), cols.end());
  return IndexSet(std::move(cols));
}

// Only the cube-facet columns of augmented_columns, increasing.
template <class S>
IndexSet augmented_cube_columns(const VertexRecord<S>& v) {
  std::vector<int> cols;
  for (int t : v.fixed_zero) cols.push_back(2 * t - 1);
  for (int t : v.fixed_one) cols.push_back(2 * t);
  std::sort(cols.begin(), cols.end());
  return IndexSet(std::move(cols));
}

}  // namespace clipvol
