#pragma once
// Closed-form volumes of clipped cubes as exact vertex sums.
//
// Every formula here has the same shape: enumerate the vertices of the
// clipped region, and add one term per vertex on the strictly positive side
// of the auxiliary plane,
//
//   N_v = (-1)^sign_exponent * (g_m(v) * A^I_{v*})^n
//         / (n! * |A^I_{v*}| * prod of denominator minors),
//
// where A is the n x m coefficient matrix (columns = planes), I is the
// vertex's tight-plane set and v* its interior-coordinate set. The variants
// differ only in the sign exponent and in the row/column ORDER of the
// denominator minors (order flips a minor's sign), and all produce the same
// value vertex by vertex:
//
//   one/two/three-plane: exponent |v0| + |I|(|I|+1)/2; minors take rows
//     "stars first, then the fixed coordinate" and sorted columns. These are
//     the specialized low-m forms, with the classical sign folded per term.
//   general cup:  exponent |v0| + ||v*||; fully sorted rows and columns.
//   general vee:  exponent |v0| + |I|(|I|+1)/2; appended row/column order
//     (same terms as the specialized forms, any m).
//   general vee2: exponent |v0| + |I|(|I|-1)/2 + n|I|; the auxiliary column
//     is listed first instead of last.
//
// volume_lawrence is the independent classical vertex sum over a polytope
// given purely by half-spaces; it serves as a cross-representation check.
//
// The general forms require good clipping and run check_good_clipping up
// front, throwing GoodClippingViolated with the checker's witnesses. The
// degenerate vertices (auxiliary plane vanishing) and negative-side vertices
// are excluded from the sum but reported, with reasons, in the result.
//
// Everything is generic over the scalar field; running over Q(eps) and
// taking epsilon_limit of the total implements the perturbation pipeline
// for specs that violate good clipping only at eps = 0.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "clipvol/cube.hpp"
#include "clipvol/eps_rational.hpp"
#include "clipvol/errors.hpp"
#include "clipvol/index_set.hpp"
#include "clipvol/matrix.hpp"
#include "clipvol/rational.hpp"

namespace clipvol {

enum class Formula {
  kAuto,        // one/two/three-plane when m <= 3, general cup otherwise
  kOnePlane,
  kTwoPlanes,
  kThreePlanes,
  kCup,
  kVee,
  kVee2,
  kLawrence,
};

enum class GeneralVariant { kCup, kVee, kVee2 };

// The Lawrence path iterates over C(#halfspaces - 1, n) subsets; refuse
// instances beyond this budget rather than hang.
inline constexpr long long kLawrenceSubsetCap = 2'000'000;

template <class S>
struct DenominatorFactor {
  std::string label;  // e.g. "A{1,3}^{2,4}" or "|A{1}^{1}|"
  S value;
};

template <class S>
struct VolumeTerm {
  VertexRecord<S> vertex;
  int sign_exponent = 0;
  S numerator = S(0);  // (g_m(v) * A^I_{v*})^n
  std::vector<DenominatorFactor<S>> denominator_factors;
  S value = S(0);  // (-1)^sign_exponent * numerator / (n! * prod factors)
};

template <class S>
struct ExcludedVertex {
  VertexRecord<S> vertex;
  std::string reason;  // "degenerate" or "negative_side"
};

template <class S>
struct VolumeResult {
  S volume = S(0);
  std::vector<VolumeTerm<S>> terms;
  std::string formula_id;  // one-plane, two-plane, three-plane,
                           // general-cup, general-vee, general-vee2, lawrence
  std::vector<ExcludedVertex<S>> excluded;
};

namespace detail {

inline std::string minor_label(const IndexSet& rows, const IndexSet& cols) {
  return "A" + rows.str() + "^" + cols.str();
}

template <class S>
S signed_unit(int exponent) {
  return (exponent % 2 + 2) % 2 == 0 ? S(1) : S(-1);
}

template <class S>
S abs_value(const S& x) {
  return sign(x) < 0 ? -x : x;
}

template <class S>
std::string point_str(const std::vector<S>& coords) {
  std::string out = "(";
  for (std::size_t t = 0; t < coords.size(); ++t) {
    if (t) out += ", ";
    out += to_string(coords[t]);
  }
  return out + ")";
}

template <class S>
std::string describe_violations(const GoodClippingReport<S>& report) {
  std::ostringstream os;
  os << "good clipping violated: " << report.condition_a.size()
     << " transversality witness(es), " << report.condition_b.size()
     << " vanishing-minor vertex(ices)";
  int shown = 0;
  for (const auto& v : report.condition_a) {
    if (shown == 3) break;
    os << "; planes " << v.planes.str();
    if (v.indeterminate)
      os << " meet stratum with stars " << v.star.str()
         << " in a positive-dimensional set";
    else
      os << " meet a face at " << point_str(v.witness);
    ++shown;
  }
  for (const auto& v : report.condition_b) {
    if (shown == 3) break;
    os << "; vertex " << point_str(v.vertex.coords) << " has vanishing minor "
       << minor_label(v.vanishing.front().rows, v.vanishing.front().cols);
    ++shown;
  }
  return os.str();
}

enum class TermStyle {
  kSpecialized,  // the low-m corollary shape: exponent |v0| + |I|(|I|+1)/2,
                 // star rows first then the fixed coordinate
  kCup,          // exponent |v0| + ||v*||, sorted rows
  kVee,          // same shape as kSpecialized (kept distinct for labeling)
  kVee2,         // exponent |v0| + |I|(|I|-1)/2 + n|I|, aux column first
};

// Shared vertex-sum engine for every cube-backed formula.
template <class S>
VolumeResult<S> vertex_sum_volume(const ClippedCubeSpec<S>& spec,
                                  TermStyle style, const char* formula_id,
                                  bool require_good_clipping,
                                  int dimension_cap) {
  spec.validate();
  ensure_dimension_cap(spec.n, dimension_cap);
  if (require_good_clipping) {
    const GoodClippingReport<S> report = check_good_clipping(spec, dimension_cap);
    if (!report.holds()) throw GoodClippingViolated(describe_violations(report));
  }

  const int n = spec.n, m = spec.m();
  const Matrix<S> a = coefficient_matrix(spec);
  const S n_factorial = S(factorial(n));

  VolumeResult<S> result;
  result.formula_id = formula_id;
  for (VertexRecord<S>& v : enumerate_vertices(spec, EnumerationMode::kStrict,
                                               dimension_cap)) {
    if (v.side < 0) {
      result.excluded.push_back({std::move(v), "negative_side"});
      continue;
    }
    if (v.degenerate) {
      result.excluded.push_back({std::move(v), "degenerate"});
      continue;
    }
    const IndexSet& tight = v.planes;
    const int k = tight.size();

    VolumeTerm<S> term;
    switch (style) {
      case TermStyle::kCup:
        term.sign_exponent = v.fixed_zero.size() + v.star.sum();
        break;
      case TermStyle::kSpecialized:
      case TermStyle::kVee:
        term.sign_exponent = v.fixed_zero.size() + k * (k + 1) / 2;
        break;
      case TermStyle::kVee2:
        term.sign_exponent = v.fixed_zero.size() + k * (k - 1) / 2 + n * k;
        break;
    }

    const S lead = minor(a, v.star, tight);
    term.numerator = pow(spec.aux().eval(v.coords) * lead, n);
    term.denominator_factors.push_back(
        {"|" + minor_label(v.star, tight) + "|", abs_value(lead)});
    // one factor per tight plane: the auxiliary column replaces its column
    for (int t : tight) {
      const IndexSet cols = ordered_union(tight.without(t), m);
      term.denominator_factors.push_back(
          {minor_label(v.star, cols), minor(a, v.star, cols)});
    }
    // one factor per fixed coordinate: its row joins the star rows
    const IndexSet fixed = v.fixed();
    for (int t : fixed) {
      IndexSet rows, cols;
      switch (style) {
        case TermStyle::kCup:
          rows = ordered_union(v.star, t);
          cols = ordered_union(tight, m);
          break;
        case TermStyle::kSpecialized:
        case TermStyle::kVee:
          rows = joining_union(v.star, t);
          cols = joining_union(tight, m);
          break;
        case TermStyle::kVee2:
          rows = joining_union(v.star, t);
          cols = joining_union(m, tight);
          break;
      }
      term.denominator_factors.push_back(
          {minor_label(rows, cols), minor(a, rows, cols)});
    }

    S denominator = n_factorial;
    for (const auto& factor : term.denominator_factors)
      denominator *= factor.value;
    term.value =
        signed_unit<S>(term.sign_exponent) * term.numerator / denominator;
    term.vertex = std::move(v);
    result.volume += term.value;
    result.terms.push_back(std::move(term));
  }
  return result;
}

}  // namespace detail

// Volume of [0,1]^n on the positive side of a single hyperplane, summed
// over the corners it keeps. Requires every coefficient nonzero.
template <class S>
VolumeResult<S> volume_one_plane(const ClippedCubeSpec<S>& spec,
                                 int dimension_cap = kDefaultDimensionCap) {
  spec.validate();
  if (spec.m() != 1)
    throw FormulaPreconditionViolated(
        "one-plane formula requires exactly 1 hyperplane, got " +
        std::to_string(spec.m()));
  for (int t = 1; t <= spec.n; ++t)
    if (spec.plane(1).a[static_cast<std::size_t>(t - 1)] == S(0))
      throw FormulaPreconditionViolated(
          "one-plane formula requires nonzero coefficients; coefficient " +
          std::to_string(t) + " is zero");
  return detail::vertex_sum_volume(spec, detail::TermStyle::kSpecialized,
                                   "one-plane", false, dimension_cap);
}

// One clipping plane plus the auxiliary plane (both bound the region).
template <class S>
VolumeResult<S> volume_two_planes(const ClippedCubeSpec<S>& spec,
                                  int dimension_cap = kDefaultDimensionCap) {
  spec.validate();
  if (spec.m() != 2)
    throw FormulaPreconditionViolated(
        "two-plane formula requires exactly 2 hyperplanes, got " +
        std::to_string(spec.m()));
  return detail::vertex_sum_volume(spec, detail::TermStyle::kSpecialized,
                                   "two-plane", true, dimension_cap);
}

// Two clipping planes plus the auxiliary plane.
template <class S>
VolumeResult<S> volume_three_planes(const ClippedCubeSpec<S>& spec,
                                    int dimension_cap = kDefaultDimensionCap) {
  spec.validate();
  if (spec.m() != 3)
    throw FormulaPreconditionViolated(
        "three-plane formula requires exactly 3 hyperplanes, got " +
        std::to_string(spec.m()));
  return detail::vertex_sum_volume(spec, detail::TermStyle::kSpecialized,
                                   "three-plane", true, dimension_cap);
}

// The general vertex sum, any number of planes.
template <class S>
VolumeResult<S> volume_general(const ClippedCubeSpec<S>& spec,
                               GeneralVariant variant,
                               int dimension_cap = kDefaultDimensionCap) {
  switch (variant) {
    case GeneralVariant::kCup:
      return detail::vertex_sum_volume(spec, detail::TermStyle::kCup,
                                       "general-cup", true, dimension_cap);
    case GeneralVariant::kVee:
      return detail::vertex_sum_volume(spec, detail::TermStyle::kVee,
                                       "general-vee", true, dimension_cap);
    case GeneralVariant::kVee2:
    default:
      return detail::vertex_sum_volume(spec, detail::TermStyle::kVee2,
                                       "general-vee2", true, dimension_cap);
  }
}

// Classical vertex sum for a bounded region given purely by half-spaces
// h_j(x) >= 0; the last half-space doubles as the auxiliary linear form.
// Every non-degenerate vertex must be simple and have no edge parallel to
// the auxiliary level sets. Vertices on the auxiliary plane itself are
// skipped (their numerator vanishes identically).
template <class S>
VolumeResult<S> volume_lawrence(const PolytopeSpec<S>& poly,
                                int dimension_cap = kDefaultDimensionCap) {
  const int n = poly.dim;
  const int total = static_cast<int>(poly.constraints.size());
  if (n < 1) throw InvalidSpec("dimension must be at least 1");
  if (total < n + 1)
    throw InvalidSpec("a bounded region needs at least n + 1 half-spaces");
  for (const Hyperplane<S>& h : poly.constraints)
    if (static_cast<int>(h.a.size()) != n)
      throw InvalidSpec("half-space arity does not match the dimension");
  ensure_dimension_cap(n, dimension_cap);
  if (binomial(total - 1, n) > kLawrenceSubsetCap)
    throw DimensionCapExceeded(
        "half-space vertex candidates exceed the budget of " +
        std::to_string(kLawrenceSubsetCap));

  Matrix<S> a(n, total);
  for (int j = 1; j <= total; ++j)
    for (int t = 1; t <= n; ++t)
      a(t, j) = poly.constraints[static_cast<std::size_t>(j - 1)]
                    .a[static_cast<std::size_t>(t - 1)];
  const S n_factorial = S(factorial(n));
  const int base_exponent = n * (n + 1) / 2;

  VolumeResult<S> result;
  result.formula_id = "lawrence";
  std::map<std::vector<S>, bool> degenerate_seen;
  for (const IndexSet& tight : subsets_of_size(total - 1, n)) {
    Matrix<S> system(n, n);
    std::vector<S> rhs(static_cast<std::size_t>(n));
    for (int row = 1; row <= n; ++row) {
      const Hyperplane<S>& h =
          poly.constraints[static_cast<std::size_t>(tight[static_cast<std::size_t>(row - 1)] - 1)];
      for (int col = 1; col <= n; ++col)
        system(row, col) = h.a[static_cast<std::size_t>(col - 1)];
      rhs[static_cast<std::size_t>(row - 1)] = -h.r;
    }
    const LinearSolveResult<S> solved = gaussian_solve(system, rhs);
    if (solved.status != SolveStatus::kUnique) continue;
    const std::vector<S>& v = solved.solution;

    bool feasible = true;
    for (int j = 1; j <= total && feasible; ++j)
      if (!tight.contains(j) &&
          poly.constraints[static_cast<std::size_t>(j - 1)].eval(v) < S(0))
        feasible = false;
    if (!feasible) continue;

    const S aux = poly.constraints.back().eval(v);
    VertexRecord<S> record;
    record.coords = v;
    record.planes = tight;
    if (aux == S(0)) {
      // on the auxiliary plane: contributes nothing, skip without checks
      if (degenerate_seen.emplace(v, true).second) {
        record.degenerate = true;
        result.excluded.push_back({std::move(record), "degenerate"});
      }
      continue;
    }
    for (int j = 1; j < total; ++j)
      if (!tight.contains(j) &&
          poly.constraints[static_cast<std::size_t>(j - 1)].eval(v) == S(0))
        throw NotSimple("vertex " + detail::point_str(v) + " lies on " +
                        std::to_string(n + 1) +
                        "+ half-space boundaries (extra: " +
                        std::to_string(j) + ")");
    record.side = sign(aux);

    VolumeTerm<S> term;
    term.sign_exponent = base_exponent;
    const IndexSet all_rows = IndexSet::range(n);
    const S lead = minor(a, all_rows, tight);
    term.numerator = pow(aux * lead, n);
    term.denominator_factors.push_back(
        {"|" + detail::minor_label(all_rows, tight) + "|",
         detail::abs_value(lead)});
    for (int t : tight) {
      const IndexSet cols = ordered_union(tight.without(t), total);
      const S value = minor(a, all_rows, cols);
      if (value == S(0))
        throw ParallelEdge("vertex " + detail::point_str(v) +
                           " has an edge on which the auxiliary form is "
                           "constant (minor " +
                           detail::minor_label(all_rows, cols) + " = 0)");
      term.denominator_factors.push_back(
          {detail::minor_label(all_rows, cols), value});
    }
    S denominator = n_factorial;
    for (const auto& factor : term.denominator_factors)
      denominator *= factor.value;
    term.value =
        detail::signed_unit<S>(term.sign_exponent) * term.numerator / denominator;
    term.vertex = std::move(record);
    result.volume += term.value;
    result.terms.push_back(std::move(term));
  }
  return result;
}

// Formula dispatch: kAuto picks the specialized form for m <= 3 and the
// general cup form otherwise; kLawrence converts the cube to half-spaces.
template <class S>
VolumeResult<S> compute_volume(const ClippedCubeSpec<S>& spec, Formula formula,
                               int dimension_cap = kDefaultDimensionCap) {
  spec.validate();
  if (formula == Formula::kAuto) {
    switch (spec.m()) {
      case 1: formula = Formula::kOnePlane; break;
      case 2: formula = Formula::kTwoPlanes; break;
      case 3: formula = Formula::kThreePlanes; break;
      default: formula = Formula::kCup; break;
    }
  }
  switch (formula) {
    case Formula::kOnePlane: return volume_one_plane(spec, dimension_cap);
    case Formula::kTwoPlanes: return volume_two_planes(spec, dimension_cap);
    case Formula::kThreePlanes: return volume_three_planes(spec, dimension_cap);
    case Formula::kCup:
      return volume_general(spec, GeneralVariant::kCup, dimension_cap);
    case Formula::kVee:
      return volume_general(spec, GeneralVariant::kVee, dimension_cap);
    case Formula::kVee2:
      return volume_general(spec, GeneralVariant::kVee2, dimension_cap);
    case Formula::kLawrence:
      return volume_lawrence(cube_to_polytope(spec), dimension_cap);
    case Formula::kAuto: break;  // resolved above
  }
  throw Error("unreachable formula dispatch");
}

// Exact limiting volume of an eps-perturbed spec: the general formula over
// Q(eps), then the value at eps = 0.
inline Rational volume_with_perturbation(
    const ClippedCubeSpec<EpsRational>& spec,
    GeneralVariant variant = GeneralVariant::kCup,
    int dimension_cap = kDefaultDimensionCap) {
  return epsilon_limit(volume_general(spec, variant, dimension_cap).volume);
}

// ---- term report --------------------------------------------------------------

template <class S>
struct StratumTotal {
  int stratum = 0;  // |I|
  S total = S(0);
};

template <class S>
struct TermReport {
  std::string formula_id;
  S volume = S(0);
  std::vector<VolumeTerm<S>> terms;
  std::vector<ExcludedVertex<S>> excluded;
  std::vector<StratumTotal<S>> stratum_totals;

  std::string str() const {
    std::ostringstream os;
    os << "formula: " << formula_id << "\n";
    for (const auto& term : terms) {
      os << "vertex " << detail::point_str(term.vertex.coords) << "  I="
         << term.vertex.planes.str() << "  v0=" << term.vertex.fixed_zero.str()
         << " v1=" << term.vertex.fixed_one.str()
         << " star=" << term.vertex.star.str() << "  sign=(-1)^"
         << term.sign_exponent << "  numerator=" << to_string(term.numerator)
         << "  value=" << to_string(term.value) << "\n";
      for (const auto& factor : term.denominator_factors)
        os << "  factor " << factor.label << " = " << to_string(factor.value)
           << "\n";
    }
    for (const auto& ex : excluded)
      os << "excluded " << detail::point_str(ex.vertex.coords) << ": "
         << ex.reason << "\n";
    for (const auto& stratum : stratum_totals)
      os << "stratum |I|=" << stratum.stratum
         << ": total " << to_string(stratum.total) << "\n";
    os << "volume: " << to_string(volume) << "\n";
    return os.str();
  }
};

// Breakdown of a computed result: terms, exclusions, per-|I| totals.
template <class S>
TermReport<S> term_report(const VolumeResult<S>& result) {
  TermReport<S> report;
  report.formula_id = result.formula_id;
  report.volume = result.volume;
  report.terms = result.terms;
  report.excluded = result.excluded;
  std::map<int, S> totals;
  for (const auto& term : result.terms) {
    auto [it, inserted] = totals.emplace(term.vertex.planes.size(), term.value);
    if (!inserted) it->second += term.value;
  }
  for (const auto& [stratum, total] : totals)
    report.stratum_totals.push_back({stratum, total});
  return report;
}

}  // namespace clipvol
