#include <doctest.h>

#include <algorithm>
#include <vector>

#include "clipvol/cube.hpp"
#include "clipvol/eps_rational.hpp"

#include "test_support.hpp"

using clipvol::ClippedCubeSpec;
using clipvol::EnumerationMode;
using clipvol::EpsRational;
using clipvol::Hyperplane;
using clipvol::IndexSet;
using clipvol::Rational;
using clipvol::VertexRecord;

namespace {

Hyperplane<Rational> plane(std::vector<Rational> a, Rational r) {
  return Hyperplane<Rational>{std::move(a), std::move(r)};
}

// 3d example: one clipping plane -x1 + x2 + 1/2, auxiliary -x1 - 2x2 - x3 + 3.
ClippedCubeSpec<Rational> corner_cut_spec() {
  ClippedCubeSpec<Rational> spec;
  spec.n = 3;
  spec.planes.push_back(plane({-1, 1, 0}, Rational(1, 2)));
  spec.planes.push_back(plane({-1, -2, -1}, Rational(3)));
  return spec;
}

// Same region further clipped by x3 - 1/2 >= 0; auxiliary as above.
ClippedCubeSpec<Rational> slab_cut_spec() {
  ClippedCubeSpec<Rational> spec;
  spec.n = 3;
  spec.planes.push_back(plane({-1, 1, 0}, Rational(1, 2)));
  spec.planes.push_back(plane({0, 0, 1}, Rational(-1, 2)));
  spec.planes.push_back(plane({-1, -2, -1}, Rational(3)));
  return spec;
}

// Two planes meeting the cube only at single corners each (no transverse
// cut), plus a strictly positive auxiliary plane.
ClippedCubeSpec<Rational> corner_touching_spec() {
  ClippedCubeSpec<Rational> spec;
  spec.n = 3;
  spec.planes.push_back(plane({1, 1, 2}, Rational(-1)));
  spec.planes.push_back(plane({-1, -1, 0}, Rational(1)));
  spec.planes.push_back(plane({1, 1, 1}, Rational(1)));
  return spec;
}

const VertexRecord<Rational>* find_vertex(
    const std::vector<VertexRecord<Rational>>& records,
    const std::vector<Rational>& coords) {
  for (const auto& rec : records)
    if (rec.coords == coords) return &rec;
  return nullptr;
}

}  // namespace

TEST_SUITE_BEGIN("cube-model");

TEST_CASE("decompose_vertex splits coordinates three ways") {
  const std::vector<Rational> coords = {0,  1, Rational(1, 3), 0,
                                        0,  Rational(3, 5), 1,
                                        Rational(1, 8)};
  const auto parts = clipvol::decompose_vertex(coords);
  CHECK(parts.zero == IndexSet({1, 4, 5}));
  CHECK(parts.one == IndexSet({2, 7}));
  CHECK(parts.star == IndexSet({3, 6, 8}));

  CHECK_THROWS_AS(clipvol::decompose_vertex<Rational>({Rational(3, 2)}),
                  clipvol::FormulaPreconditionViolated);
  CHECK_THROWS_AS(clipvol::decompose_vertex<Rational>({Rational(-1, 4)}),
                  clipvol::FormulaPreconditionViolated);
}

TEST_CASE("spec validation") {
  ClippedCubeSpec<Rational> bad;
  bad.n = 2;
  CHECK_THROWS_AS(bad.validate(), clipvol::InvalidSpec);
  bad.planes.push_back(plane({1}, Rational(0)));  // wrong arity
  CHECK_THROWS_AS(bad.validate(), clipvol::InvalidSpec);
  bad.planes[0] = plane({1, 1}, Rational(0));
  CHECK_NOTHROW(bad.validate());
  bad.n = 0;
  CHECK_THROWS_AS(bad.validate(), clipvol::InvalidSpec);

  ClippedCubeSpec<Rational> capped = corner_cut_spec();
  CHECK_THROWS_AS(
      clipvol::enumerate_vertices(capped, EnumerationMode::kStrict, 2),
      clipvol::DimensionCapExceeded);
}

TEST_CASE("single plane: every corner is emitted with its side") {
  ClippedCubeSpec<Rational> spec;
  spec.n = 2;
  spec.planes.push_back(plane({-1, -1}, Rational(1)));
  const auto records = clipvol::enumerate_vertices(spec);
  REQUIRE(records.size() == 4);
  // corners in coordinate order: (0,0), (0,1), (1,0), (1,1)
  CHECK(records[0].coords == std::vector<Rational>{0, 0});
  CHECK(records[0].side == 1);
  CHECK(!records[0].degenerate);
  CHECK(records[1].coords == std::vector<Rational>{0, 1});
  CHECK(records[1].side == 0);
  CHECK(records[1].degenerate);
  CHECK(records[2].coords == std::vector<Rational>{1, 0});
  CHECK(records[2].side == 0);
  CHECK(records[3].coords == std::vector<Rational>{1, 1});
  CHECK(records[3].side == -1);
  for (const auto& rec : records) {
    CHECK(rec.planes.empty());
    CHECK(rec.star.empty());
  }
}

TEST_CASE("corner cut: full vertex listing") {
  const auto records = clipvol::enumerate_vertices(corner_cut_spec());
  REQUIRE(records.size() == 10);

  // the six cube corners on the clipping plane's nonnegative side come
  // first (I = {}), sorted by coordinates
  const std::vector<std::vector<Rational>> corner_coords = {
      {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 1, 0}, {1, 1, 1}};
  const std::vector<int> corner_sides = {1, 1, 1, 0, 0, -1};
  for (int i = 0; i < 6; ++i) {
    CHECK(records[i].coords == corner_coords[i]);
    CHECK(records[i].planes.empty());
    CHECK(records[i].side == corner_sides[i]);
    CHECK(records[i].degenerate == (corner_sides[i] == 0));
  }

  // then the four vertices on the clipping plane (I = {1})
  const std::vector<std::vector<Rational>> cut_coords = {
      {Rational(1, 2), 0, 0},
      {Rational(1, 2), 0, 1},
      {1, Rational(1, 2), 0},
      {1, Rational(1, 2), 1}};
  const std::vector<int> cut_sides = {1, 1, 1, 0};
  const std::vector<IndexSet> cut_stars = {IndexSet({1}), IndexSet({1}),
                                           IndexSet({2}), IndexSet({2})};
  for (int i = 0; i < 4; ++i) {
    const auto& rec = records[static_cast<std::size_t>(6 + i)];
    CHECK(rec.coords == cut_coords[static_cast<std::size_t>(i)]);
    CHECK(rec.planes == IndexSet({1}));  // first stratum found keeps the record
    CHECK(rec.side == cut_sides[static_cast<std::size_t>(i)]);
    CHECK(rec.star == cut_stars[static_cast<std::size_t>(i)]);
  }

  // spot-check one decomposition
  const auto* v8 = find_vertex(records, {1, Rational(1, 2), 0});
  REQUIRE(v8 != nullptr);
  CHECK(v8->fixed_zero == IndexSet({3}));
  CHECK(v8->fixed_one == IndexSet({1}));
  CHECK(v8->fixed() == IndexSet({1, 3}));
}

TEST_CASE("slab cut: vertices on the auxiliary plane get their own strata") {
  const auto records = clipvol::enumerate_vertices(slab_cut_spec());
  REQUIRE(records.size() == 12);

  // the two vertices that only exist because the auxiliary plane is tight
  const auto* v9 = find_vertex(records, {1, Rational(3, 4), Rational(1, 2)});
  REQUIRE(v9 != nullptr);
  CHECK(v9->planes == IndexSet({2, 3}));
  CHECK(v9->degenerate);
  CHECK(v9->side == 0);
  CHECK(v9->star == IndexSet({2, 3}));

  const auto* v10 = find_vertex(records, {Rational(1, 2), 1, Rational(1, 2)});
  REQUIRE(v10 != nullptr);
  CHECK(v10->planes == IndexSet({2, 3}));
  CHECK(v10->degenerate);

  // negative-side records are emitted, flagged
  const auto* far_corner = find_vertex(records, {1, 1, 1});
  REQUIRE(far_corner != nullptr);
  CHECK(far_corner->side == -1);
  const auto* far_slab = find_vertex(records, {1, 1, Rational(1, 2)});
  REQUIRE(far_slab != nullptr);
  CHECK(far_slab->side == -1);
  CHECK(far_slab->planes == IndexSet({2}));

  // the ten on the closed nonnegative side, in listing order
  std::vector<std::vector<Rational>> nonneg;
  for (const auto& rec : records)
    if (rec.side >= 0) nonneg.push_back(rec.coords);
  const std::vector<std::vector<Rational>> expected = {
      {0, 0, 1},
      {0, 1, 1},
      {Rational(1, 2), 0, 1},
      {1, Rational(1, 2), 1},
      {0, 0, Rational(1, 2)},
      {0, 1, Rational(1, 2)},
      {Rational(1, 2), 0, Rational(1, 2)},
      {1, Rational(1, 2), Rational(1, 2)},
      {Rational(1, 2), 1, Rational(1, 2)},
      {1, Rational(3, 4), Rational(1, 2)}};
  CHECK(nonneg == expected);

  // the degenerate ones among them
  CHECK(find_vertex(records, {0, 1, 1})->degenerate);
  CHECK(find_vertex(records, {1, Rational(1, 2), 1})->degenerate);
  CHECK(!find_vertex(records, {0, 0, 1})->degenerate);
  CHECK(!find_vertex(records, {Rational(1, 2), 0, Rational(1, 2)})->degenerate);
}

TEST_CASE("duplicate coordinates keep the first stratum found") {
  // in the corner-cut example, (1, 1/2, 1) is reachable both from the
  // clipping plane (I={1}) and from the auxiliary plane (I={2}); the
  // record must carry I={1}
  const auto records = clipvol::enumerate_vertices(corner_cut_spec());
  const auto* v = find_vertex(records, {1, Rational(1, 2), 1});
  REQUIRE(v != nullptr);
  CHECK(v->planes == IndexSet({1}));
}

TEST_CASE("coincident planes raise NonGenericFace in strict mode only") {
  ClippedCubeSpec<Rational> spec;
  spec.n = 2;
  spec.planes.push_back(plane({1, 0}, Rational(-1, 2)));
  spec.planes.push_back(plane({2, 0}, Rational(-1)));  // same line, rescaled
  spec.planes.push_back(plane({1, 1}, Rational(1)));   // positive auxiliary
  CHECK_THROWS_AS(clipvol::enumerate_vertices(spec),
                  clipvol::NonGenericFace);
  try {
    clipvol::enumerate_vertices(spec);
  } catch (const clipvol::NonGenericFace& e) {
    CHECK(e.planes() == std::vector<int>{1, 2});
    CHECK(e.vstar() == std::vector<int>{1, 2});
  }
  CHECK_NOTHROW(clipvol::enumerate_vertices(spec, EnumerationMode::kLenient));
}

TEST_CASE("good clipping holds for the worked examples") {
  CHECK(clipvol::check_good_clipping(corner_cut_spec()).holds());
  CHECK(clipvol::check_good_clipping(slab_cut_spec()).holds());
}

TEST_CASE("corner-touching planes violate the transversality condition") {
  const auto report = clipvol::check_good_clipping(corner_touching_spec());
  CHECK(!report.holds());
  CHECK(report.condition_b.empty());

  // plane 1 grazes exactly the corners (1,0,0) and (0,1,0)
  std::vector<std::vector<Rational>> plane1_witnesses;
  int plane2_witnesses = 0;
  for (const auto& v : report.condition_a) {
    CHECK(!v.indeterminate);
    if (v.planes == IndexSet({1})) plane1_witnesses.push_back(v.witness);
    if (v.planes == IndexSet({2})) ++plane2_witnesses;
  }
  std::sort(plane1_witnesses.begin(), plane1_witnesses.end());
  const std::vector<std::vector<Rational>> expected = {{0, 1, 0}, {1, 0, 0}};
  CHECK(plane1_witnesses == expected);
  CHECK(plane2_witnesses == 4);
  CHECK(report.condition_a.size() == 6);
}

TEST_CASE("redundancy probe") {
  // wedge a never-active plane into the slab-cut example; the auxiliary
  // plane is essential there (two vertices exist only on it)
  ClippedCubeSpec<Rational> spec;
  spec.n = 3;
  spec.planes.push_back(plane({-1, 1, 0}, Rational(1, 2)));
  spec.planes.push_back(plane({0, 0, 1}, Rational(-1, 2)));
  spec.planes.push_back(plane({1, 1, 1}, Rational(5)));  // always satisfied
  spec.planes.push_back(plane({-1, -2, -1}, Rational(3)));
  const auto report = clipvol::check_redundancy(spec);
  REQUIRE(report.entries.size() == 4);
  CHECK(!report.entries[0].redundant);
  CHECK(!report.entries[1].redundant);
  CHECK(report.entries[2].redundant);
  CHECK(!report.entries[3].redundant);

  ClippedCubeSpec<Rational> lone;
  lone.n = 2;
  lone.planes.push_back(plane({1, 1}, Rational(-1, 2)));
  const auto lone_report = clipvol::check_redundancy(lone);
  REQUIRE(lone_report.entries.size() == 1);
  CHECK(!lone_report.entries[0].redundant);
}

TEST_CASE("negate_aux flips only the auxiliary plane") {
  const auto spec = corner_cut_spec();
  const auto flipped = clipvol::negate_aux(spec);
  CHECK(flipped.planes[0].a == spec.planes[0].a);
  CHECK(flipped.planes[1].a == std::vector<Rational>{1, 2, 1});
  CHECK(flipped.planes[1].r == -3);
  const auto back = clipvol::negate_aux(flipped);
  CHECK(back.planes[1].a == spec.planes[1].a);
  CHECK(back.planes[1].r == spec.planes[1].r);
}

TEST_CASE("half-space form lists cube facets then planes") {
  const auto poly = clipvol::cube_to_polytope(corner_cut_spec());
  CHECK(poly.dim == 3);
  REQUIRE(poly.constraints.size() == 8);
  CHECK(poly.constraints[0].a == std::vector<Rational>{1, 0, 0});
  CHECK(poly.constraints[0].r == 0);
  CHECK(poly.constraints[1].a == std::vector<Rational>{-1, 0, 0});
  CHECK(poly.constraints[1].r == 1);
  CHECK(poly.constraints[4].a == std::vector<Rational>{0, 0, 1});
  CHECK(poly.constraints[5].a == std::vector<Rational>{0, 0, -1});
  CHECK(poly.constraints[6].a == std::vector<Rational>{-1, 1, 0});
  CHECK(poly.constraints[7].a == std::vector<Rational>{-1, -2, -1});
}

TEST_CASE("augmented matrix and tight-column relations") {
  test_support::Rng rng(246810);
  for (int trial = 0; trial < 25; ++trial) {
    ClippedCubeSpec<Rational> spec;
    spec.n = 2 + static_cast<int>(rng.below(3));
    const int m = 2 + static_cast<int>(rng.below(2));
    for (int i = 0; i < m; ++i) {
      Hyperplane<Rational> g;
      for (int t = 0; t < spec.n; ++t) g.a.push_back(rng.rational(-3, 3));
      g.r = rng.rational(-2, 3);
      spec.planes.push_back(std::move(g));
    }
    const auto aug = clipvol::augmented_matrix(spec);
    CHECK(aug.rows() == spec.n);
    CHECK(aug.cols() == 2 * spec.n + m);
    const auto coeff = clipvol::coefficient_matrix(spec);

    const auto records =
        clipvol::enumerate_vertices(spec, EnumerationMode::kLenient);
    for (const auto& v : records) {
      // the cube-facet block at the fixed coordinates is diagonal with
      // +1 at a 0-coordinate and -1 at a 1-coordinate
      const IndexSet fixed_rows = v.fixed();
      const IndexSet cube_cols = clipvol::augmented_cube_columns(v);
      const auto block = aug.submatrix(fixed_rows, cube_cols);
      for (int i = 1; i <= block.rows(); ++i)
        for (int j = 1; j <= block.cols(); ++j) {
          if (i != j) {
            CHECK(block(i, j) == 0);
          } else {
            const int coord = fixed_rows[static_cast<std::size_t>(i - 1)];
            CHECK(block(i, i) == (v.fixed_zero.contains(coord) ? 1 : -1));
          }
        }
      const int ones = v.fixed_one.size();
      CHECK(block.det() == (ones % 2 == 0 ? 1 : -1));

      // the full tight-column minor factors through the plane minor
      const IndexSet all_cols = clipvol::augmented_columns(v, spec.n);
      const Rational lhs =
          clipvol::minor(aug, IndexSet::range(spec.n), all_cols);
      const int sep =
          clipvol::separating_parity(IndexSet::range(spec.n), v.star);
      const Rational rhs = Rational(ones % 2 == 0 ? 1 : -1) * Rational(sep) *
                           clipvol::minor(coeff, v.star, v.planes);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("enumeration works over the infinitesimal field") {
  const EpsRational e = EpsRational::epsilon();
  ClippedCubeSpec<EpsRational> spec;
  spec.n = 2;
  Hyperplane<EpsRational> cut;
  cut.a = {EpsRational(-1), EpsRational(-1)};
  cut.r = EpsRational(1) - e;
  Hyperplane<EpsRational> aux;
  aux.a = {EpsRational(1), EpsRational(2)};
  aux.r = EpsRational(1);
  spec.planes.push_back(std::move(cut));
  spec.planes.push_back(std::move(aux));

  const auto records = clipvol::enumerate_vertices(spec);
  REQUIRE(records.size() == 3);
  CHECK(records[0].coords ==
        std::vector<EpsRational>{EpsRational(0), EpsRational(0)});
  CHECK(records[0].side == 1);
  CHECK(records[1].coords ==
        std::vector<EpsRational>{EpsRational(0), EpsRational(1) - e});
  CHECK(records[1].planes == IndexSet({1}));
  CHECK(records[2].coords ==
        std::vector<EpsRational>{EpsRational(1) - e, EpsRational(0)});
  CHECK(records[2].side == 1);
}

TEST_CASE("candidate count closed form") {
  CHECK(clipvol::enumeration_candidate_count(3, 0) == 8);
  CHECK(clipvol::enumeration_candidate_count(3, 1) == 8 + 3 * 4);
  CHECK(clipvol::enumeration_candidate_count(2, 2) ==
        4 + 2 * 2 * 2 + 1 * 1 * 1);
  CHECK(clipvol::enumeration_candidate_count(16, 1) ==
        65536 + 16 * 32768);
}

TEST_SUITE_END();
