#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "toricvar/product.hpp"
#include "toricvar/variation.hpp"

using namespace toricvar;
using fixtures::rat;

namespace {

QuotientData hirzebruch() { return build_quotient(fixtures::hirzebruch_fan()); }

bool oracle_semistable(const QuotientData& q, const RatVector& alpha, const IndexSet& s) {
  std::vector<RatVector> gens;
  for (auto i : s) gens.push_back(to_rational(q.weights[i]));
  return oracle::cone_contains(alpha, gens, false);
}

bool meets(const IndexSet& a, const IndexSet& b) {
  for (auto i : a)
    if (std::find(b.begin(), b.end(), i) != b.end()) return true;
  return false;
}

// Every (chamber, adjacent wall point) pair of the fan, via the chamber enumeration.
std::vector<VariationReport> all_reports(const QuotientData& q) {
  std::vector<VariationReport> out;
  auto walls = enumerate_walls(q);
  for (const auto& ch : enumerate_chambers(q))
    for (std::size_t s = 0; s < walls.size(); ++s)
      if (auto p = facet_point(q, walls, ch.cone, s)) out.push_back(natural_morphism(q, ch.representative, *p));
  return out;
}

Polytope polygon(std::vector<HalfSpace> hs) { return polytope_from_halfspaces(2, std::move(hs)); }

Polytope unit_square() { return polygon({{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, 1}, {{0, -1}, 1}}); }
Polytope triangle() { return polygon({{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 1}}); }
Polytope pentagon() {
  return polygon({{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, 2}, {{0, -1}, 2}, {{-1, -1}, 3}});
}
Polytope trapezoid() {
  return polytope_of(arrangement_from_lift(hirzebruch(), rat({1, 1, 1, 1})));
}

}  // namespace

TEST(Stability, Examples) {
  QuotientData q = hirzebruch();
  SupportStability all = stability(q, rat({3, 2}), {0, 1, 2, 3});
  EXPECT_TRUE(all.semistable);
  EXPECT_TRUE(all.closed_orbit);
  ASSERT_TRUE(all.certificate);
  EXPECT_EQ(all.certificate->mode, ConeMode::StrictlyPositive);
  EXPECT_TRUE(verify_certificate(*all.certificate, rat({3, 2}), q.weights));
  EXPECT_TRUE(verify_certificate({rat({1, 1, 1, 1}), ConeMode::StrictlyPositive}, rat({3, 2}), q.weights));

  SupportStability none = stability(q, rat({3, 2}), {});
  EXPECT_FALSE(none.semistable);
  EXPECT_FALSE(none.closed_orbit);

  SupportStability wall = stability(q, rat({3, 0}), {0, 2});
  EXPECT_TRUE(wall.semistable);
  EXPECT_TRUE(wall.closed_orbit);

  SupportStability edge = stability(q, rat({3, 0}), {0, 1, 2});
  EXPECT_TRUE(edge.semistable);
  EXPECT_FALSE(edge.closed_orbit);
}

TEST(Stability, MatchesOracleOnAllSupports) {
  QuotientData q = hirzebruch();
  for (const auto& alpha : {rat({3, 2}), rat({3, 0}), rat({2, 2}), rat({1, 2}), rat({0, 0}), rat({-1, 0})})
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      IndexSet s = support_from_mask(mask, 4);
      SupportStability st = stability(q, alpha, s);
      EXPECT_EQ(st.semistable, oracle_semistable(q, alpha, s));
      if (st.closed_orbit) EXPECT_TRUE(st.semistable);
    }
}

TEST(NaturalMorphism, BoundaryWallDegeneratesToBundle) {
  VariationReport r = natural_morphism(hirzebruch(), rat({3, 2}), rat({3, 0}));
  EXPECT_EQ(r.theta1, (IntVector{0, 1}));
  EXPECT_EQ(r.J1, (IndexSet{1, 3}));
  EXPECT_EQ(r.J1_plus, (IndexSet{1, 3}));
  EXPECT_TRUE(r.J1_minus.empty());
  EXPECT_EQ(r.kind, MorphismKind::BundleProjection);
  EXPECT_EQ(r.fiber_dim_plus, 1u);
  EXPECT_FALSE(r.fiber_dim_minus);
  EXPECT_EQ(r.dim_V1, 1u);
  EXPECT_EQ(r.restriction.indices, (IndexSet{0, 2}));
  EXPECT_EQ(r.restriction.sub_quotient.n(), 1u);
}

TEST(NaturalMorphism, InteriorDiagonalWall) {
  // alpha+ below the diagonal; pairings with theta1 = (1,-1) are (1,0,1,-1).
  VariationReport r = natural_morphism(hirzebruch(), rat({3, 2}), rat({2, 2}));
  EXPECT_EQ(r.theta1, (IntVector{1, -1}));
  EXPECT_EQ(r.J1, (IndexSet{0, 2, 3}));
  EXPECT_EQ(r.J1_plus, (IndexSet{0, 2}));
  EXPECT_EQ(r.J1_minus, (IndexSet{3}));
  EXPECT_EQ(r.kind, MorphismKind::TwoSidedDesingularization);
  EXPECT_EQ(r.fiber_dim_plus, 1u);
  EXPECT_EQ(r.fiber_dim_minus, std::optional<std::size_t>(0));
  EXPECT_EQ(r.dim_V1, 0u);
}

TEST(NaturalMorphism, DiagonalCircle) {
  VariationReport r = natural_morphism(build_quotient(fixtures::diagonal_fan()), rat({1}), rat({0}));
  EXPECT_EQ(r.J1, (IndexSet{0, 1}));
  EXPECT_EQ(r.J1_plus, (IndexSet{0, 1}));
  EXPECT_EQ(r.fiber_dim_plus, 1u);
  EXPECT_EQ(r.dim_V1, 0u);
}

TEST(NaturalMorphism, Errors) {
  QuotientData q = hirzebruch();
  auto code = [&](const RatVector& a, const RatVector& b) {
    try {
      natural_morphism(q, a, b);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  EXPECT_EQ(code(rat({3, 2}), rat({3, 1})), ErrorCode::NotOnWall);
  EXPECT_EQ(code(rat({3, 2}), rat({0, 0})), ErrorCode::NotGeneric);
  EXPECT_EQ(code(rat({3, 2}), rat({0, 3})), ErrorCode::NotAdjacent);
  EXPECT_EQ(code(rat({3, 0}), rat({3, 0})), ErrorCode::NotInterior);
}

TEST(NaturalMorphism, IdentitiesOnEveryReport) {
  int reports = 0;
  for (const auto& fan : {fixtures::hirzebruch_fan(), fixtures::reoriented_fan(), fixtures::circle_fan(),
                          fixtures::diagonal_fan()}) {
    QuotientData q = build_quotient(fan);
    for (const auto& r : all_reports(q)) {
      ++reports;
      IndexSet joined = r.J1_plus;
      joined.insert(joined.end(), r.J1_minus.begin(), r.J1_minus.end());
      std::sort(joined.begin(), joined.end());
      EXPECT_EQ(joined, r.J1);
      EXPECT_FALSE(meets(r.J1_plus, r.J1_minus));
      EXPECT_EQ(r.dim_V1, q.n() - (r.J1.size() - 1));
      EXPECT_EQ(r.fiber_dim_plus, r.J1_plus.size() - 1);
      EXPECT_EQ(r.dim_V_plus - r.dim_V1, r.J1_plus.size() - 1);
      if (!r.J1_minus.empty()) {
        EXPECT_EQ(*r.fiber_dim_minus, r.J1_minus.size() - 1);
        EXPECT_EQ(*r.dim_V_minus - r.dim_V1, r.J1_minus.size() - 1);
      }
      EXPECT_EQ(r.kind == MorphismKind::BundleProjection, r.J1_minus.empty());
      EXPECT_EQ(r.wall.boundary, r.J1_minus.empty());
      EXPECT_EQ(r.restriction.indices.size(), q.d() - r.J1.size());
      EXPECT_EQ(r.restriction.sub_quotient.n(), r.dim_V1);

      // Semistable supports: inclusion and the J1+ characterization, by brute force.
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q.d()); ++mask) {
        IndexSet s = support_from_mask(mask, q.d());
        const bool plus = oracle_semistable(q, r.alpha_plus, s);
        const bool on = oracle_semistable(q, r.alpha1, s);
        if (plus) EXPECT_TRUE(on);
        EXPECT_EQ(plus, on && meets(s, r.J1_plus)) << "mask " << mask;
      }
    }
  }
  EXPECT_GE(reports, 8);
}

TEST(NaturalMorphism, BoundaryIffOneSidedForEveryWall) {
  for (const auto& fan : {fixtures::hirzebruch_fan(), fixtures::reoriented_fan(), fixtures::circle_fan()}) {
    QuotientData q = build_quotient(fan);
    for (const auto& w : enumerate_walls(q)) {
      WallSplit s = split_by(q, w.theta);
      EXPECT_EQ(w.boundary, s.J1_plus.empty() || s.J1_minus.empty());
    }
  }
}

TEST(Flip, HirzebruchDiagonal) {
  QuotientData q = hirzebruch();
  FlipReport f = flip_report(q, rat({3, 2}), rat({2, 3}));
  EXPECT_EQ(f.alpha1, (RatVector{make_rational(5, 2), make_rational(5, 2)}));
  EXPECT_EQ(f.plus.J1_plus, (IndexSet{0, 2}));
  EXPECT_EQ(f.plus.J1_minus, (IndexSet{3}));
  EXPECT_EQ(f.minus.J1_plus, (IndexSet{3}));
  EXPECT_EQ(f.minus.fiber_dim_plus, 0u);
  EXPECT_EQ(f.kind, FlipKind::BlowDown);
  EXPECT_EQ(f.exceptional_dim_plus, 1u);
  EXPECT_EQ(f.exceptional_dim_minus, 0u);
  std::size_t common = 0;
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    IndexSet s = support_from_mask(mask, 4);
    common += oracle_semistable(q, rat({3, 2}), s) && oracle_semistable(q, rat({2, 3}), s);
  }
  EXPECT_EQ(f.common_supports, common);
}

TEST(Flip, SwapSymmetry) {
  QuotientData q = hirzebruch();
  FlipReport a = flip_report(q, rat({3, 2}), rat({2, 3}));
  FlipReport b = flip_report(q, rat({2, 3}), rat({3, 2}));
  EXPECT_EQ(a.plus, b.minus);
  EXPECT_EQ(a.minus, b.plus);
  EXPECT_EQ(a.alpha1, b.alpha1);
  EXPECT_EQ(a.exceptional_dim_plus, b.exceptional_dim_minus);
  EXPECT_EQ(a.common_supports, b.common_supports);
}

TEST(Flip, Errors) {
  QuotientData q = hirzebruch();
  try {
    flip_report(q, rat({3, 2}), rat({5, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SameChamber);
  }
  // Four distinct weight rays give three chambers; the outer two are not adjacent.
  QuotientData r = build_quotient({2, {{-1, -1}, {0, 1}, {1, 0}, {-2, -1}}});
  auto ch = enumerate_chambers(r);
  bool non_adjacent = false;
  for (std::size_t i = 0; i < ch.size(); ++i)
    for (std::size_t j = i + 1; j < ch.size(); ++j) {
      try {
        flip_report(r, ch[i].representative, ch[j].representative);
      } catch (const Error& e) {
        non_adjacent = non_adjacent || e.code() == ErrorCode::NonAdjacentChambers;
      }
    }
  EXPECT_EQ(ch.size(), 3u);
  EXPECT_TRUE(non_adjacent);
}

TEST(Fibred, HirzebruchIsBundleOverLine) {
  auto f = is_fibred(hirzebruch(), rat({3, 2}));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->r, 1u);
  EXPECT_EQ(f->base_polytope.vertices.size(), 2u);
  EXPECT_TRUE(f->base_polytope.bounded);
  EXPECT_TRUE(f->grouping_consistent);
  EXPECT_EQ(f->product_check, std::optional<bool>(true));
  EXPECT_EQ(f->polytope.vertices.size(), (f->r + 1) * f->base_polytope.vertices.size());
}

TEST(Fibred, OtherChamberIsPlaneOverPoint) {
  auto f = is_fibred(hirzebruch(), rat({1, 2}));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->r, 2u);
  EXPECT_EQ(f->base_polytope.vertices.size(), 1u);
  EXPECT_EQ(f->polytope.vertices.size(), 3u);
  EXPECT_EQ(f->product_check, std::optional<bool>(true));
}

TEST(Fibred, ReorientedFanIsNot) {
  QuotientData q = build_quotient(fixtures::reoriented_fan());
  for (const auto& ch : enumerate_chambers(q)) EXPECT_FALSE(is_fibred(q, ch.representative));
}

TEST(Fibred, CircleOverPoint) {
  QuotientData q = build_quotient(fixtures::circle_fan());
  auto f = is_fibred(q, {make_rational(1, 2), 1});
  ASSERT_TRUE(f);
  EXPECT_EQ(f->r, 1u);
  EXPECT_EQ(f->base_polytope.vertices.size(), 1u);
  EXPECT_EQ(f->base_polytope.n, 0u);
}

TEST(Fibred, AgreesWithProductDecomposition) {
  for (const auto& fan : {fixtures::hirzebruch_fan(), fixtures::circle_fan()}) {
    QuotientData q = build_quotient(fan);
    for (const auto& ch : enumerate_chambers(q)) {
      auto f = is_fibred(q, ch.representative);
      if (!f || !f->polytope.bounded) continue;
      auto dec = decompose_product(f->polytope, f->r);
      ASSERT_TRUE(dec);
      EXPECT_EQ(dec->r, f->r);
      EXPECT_EQ(dec->base.vertices.size(), f->base_polytope.vertices.size());
      EXPECT_EQ(f->polytope.vertices.size(), (f->r + 1) * f->base_polytope.vertices.size());
    }
  }
}

TEST(DecomposeProduct, Trapezoid) {
  Polytope P = trapezoid();
  auto dec = decompose_product(P);
  ASSERT_TRUE(dec);
  EXPECT_EQ(dec->r, 1u);
  EXPECT_EQ(dec->base.vertices.size(), 2u);
  EXPECT_EQ(P.vertices.size(), (dec->r + 1) * dec->base.vertices.size());
  // The fibers are the left edge and the slanted edge, each joining y = -1 to y = 1.
  for (std::size_t a = 0; a < P.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < P.vertices.size(); ++b)
      if (dec->grouping[a] == dec->grouping[b]) EXPECT_NE(P.vertices[a][1], P.vertices[b][1]);
}

TEST(DecomposeProduct, SquareTriangleAndPentagon) {
  auto sq = decompose_product(unit_square());
  ASSERT_TRUE(sq);
  EXPECT_EQ(sq->r, 1u);
  EXPECT_EQ(sq->base.vertices.size(), 2u);

  auto tri = decompose_product(triangle());
  ASSERT_TRUE(tri);
  EXPECT_EQ(tri->r, 2u);
  EXPECT_EQ(tri->base.vertices.size(), 1u);
  EXPECT_EQ(tri->base.dimension(), 0);

  Polytope pent = pentagon();
  ASSERT_EQ(pent.vertices.size(), 5u);
  EXPECT_FALSE(decompose_product(pent));
}

TEST(DecomposeProduct, RejectsNonSimple) {
  Polytope pyramid = polytope_from_halfspaces(
      3, {{{0, 0, 1}, 0}, {{-1, 0, -1}, 1}, {{1, 0, -1}, 1}, {{0, -1, -1}, 1}, {{0, 1, -1}, 1}});
  ASSERT_EQ(pyramid.vertices.size(), 5u);
  try {
    decompose_product(pyramid);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSimple);
  }
}

TEST(DecomposeProduct, PrismInThreeDimensions) {
  // Triangle times segment: r = 2 over a segment or r = 1 over a triangle.
  Polytope prism = polytope_from_halfspaces(
      3, {{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{-1, -1, 0}, 1}, {{0, 0, 1}, 0}, {{0, 0, -1}, 1}});
  auto dec = decompose_product(prism);
  ASSERT_TRUE(dec);
  EXPECT_EQ(prism.vertices.size(), (dec->r + 1) * dec->base.vertices.size());
  EXPECT_EQ(static_cast<int>(dec->r) + dec->base.dimension(), 3);
}
