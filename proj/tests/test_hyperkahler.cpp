#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "toricvar/hyperkahler.hpp"

using namespace toricvar;
using fixtures::rat;

namespace {

QuotientData hirzebruch() { return build_quotient(fixtures::hirzebruch_fan()); }

std::set<IntVector> theta_set(const std::vector<HkWall>& walls) {
  std::set<IntVector> out;
  for (const auto& w : walls) out.insert(w.theta);
  return out;
}

// Basis free description: which weights span each hyperplane.
std::set<IndexSet> span_set(const std::vector<HkWall>& walls) {
  std::set<IndexSet> out;
  for (const auto& w : walls) out.insert(w.span_indices);
  return out;
}

bool contains(const Polytope& P, const RatVector& x) {
  for (const auto& h : P.hrep)
    if (evaluate(h, x) < 0) return false;
  return true;
}

// Interval of x with eps_i * (u_i x + lambda_i) >= 0 on the line, as optional ends.
struct Interval {
  std::optional<Rational> lo, hi;
  bool operator<(const Interval& o) const {
    return std::tie(lo, hi) < std::tie(o.lo, o.hi);
  }
};

std::optional<Interval> line_cell(const FanInput& fan, const RatVector& lift, const std::vector<int>& eps) {
  Interval iv;
  for (std::size_t i = 0; i < fan.d(); ++i) {
    const int s = eps[i] * (fan.u[i][0] > 0 ? 1 : -1);
    const Rational root = -lift[i] / Rational(fan.u[i][0]);
    if (s > 0) iv.lo = iv.lo ? std::max(*iv.lo, root) : root;
    else iv.hi = iv.hi ? std::min(*iv.hi, root) : root;
  }
  if (iv.lo && iv.hi && *iv.lo > *iv.hi) return std::nullopt;
  return iv;
}

// Recession cone {y : eps_i <u_i, y> >= 0} is nonzero iff some coordinate sign is reachable.
bool oracle_unbounded(const OrientedArrangement& arr, const std::vector<int>& eps) {
  const std::size_t n = arr.n;
  for (std::size_t k = 0; k < n; ++k)
    for (int s : {1, -1}) {
      std::vector<oracle::Ineq> sys;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        oracle::Ineq q;
        for (const auto& x : arr.items[i].normal) q.a.push_back(Rational(eps[i] * x));
        q.b = 0;
        sys.push_back(q);
      }
      oracle::Ineq unit;
      unit.a.assign(n, Rational(0));
      unit.a[k] = s;
      unit.b = 1;
      sys.push_back(unit);
      if (oracle::fm_feasible(sys, n)) return true;
    }
  return false;
}

}  // namespace

TEST(HkWalls, HirzebruchThreeLines) {
  auto walls = hk_walls(hirzebruch());
  EXPECT_EQ(theta_set(walls), (std::set<IntVector>{{0, 1}, {1, -1}, {1, 0}}));
  EXPECT_EQ(hk_chambers(hirzebruch()).size(), 6u);
}

TEST(HkWalls, ReorientedFanHasTheSameLines) {
  QuotientData a = hirzebruch(), b = build_quotient(fixtures::reoriented_fan());
  EXPECT_EQ(hk_walls(a), hk_walls(b));
  // While the toric positive cones differ.
  EXPECT_FALSE(in_positive_cone(a, rat({-1, -1})));
  EXPECT_TRUE(in_positive_cone(b, rat({-1, -1})));
}

TEST(HkWalls, InvariantUnderEveryReorientation) {
  const auto base = span_set(hk_walls(hirzebruch()));
  for (unsigned mask = 0; mask < 16; ++mask) {
    FanInput f = fixtures::hirzebruch_fan();
    for (std::size_t i = 0; i < 4; ++i)
      if (mask >> i & 1U)
        for (auto& x : f.u[i]) x = -x;
    EXPECT_EQ(span_set(hk_walls(build_quotient(f))), base) << "mask " << mask;
  }
}

TEST(HkWalls, OneDimensional) {
  auto walls = hk_walls(build_quotient(fixtures::diagonal_fan()));
  ASSERT_EQ(walls.size(), 1u);
  EXPECT_EQ(walls[0].theta, (IntVector{1}));
}

TEST(ExtendedCore, DiagonalCircle) {
  QuotientData q = build_quotient(fixtures::diagonal_fan());
  auto comps = extended_core(q, rat({1}));
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].epsilon, (std::vector<int>{1, 1}));
  EXPECT_TRUE(comps[0].bounded);
  EXPECT_EQ(comps[0].polytope.vertices.size(), 2u);
  EXPECT_EQ(comps[1].epsilon, (std::vector<int>{1, -1}));
  EXPECT_FALSE(comps[1].bounded);
  EXPECT_EQ(comps[2].epsilon, (std::vector<int>{-1, 1}));
  EXPECT_FALSE(comps[2].bounded);
  EXPECT_EQ(core(comps).size(), 1u);
}

TEST(ExtendedCore, CircleFanMatchesIntervalOracle) {
  const FanInput fan = fixtures::circle_fan();
  QuotientData q = build_quotient(fan);
  const RatVector lift{1, make_rational(-1, 2), 0};
  auto comps = extended_core_of(arrangement_from_lift(q, lift));
  std::set<Interval> cells;
  std::size_t bounded = 0;
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<int> eps{mask & 4U ? -1 : 1, mask & 2U ? -1 : 1, mask & 1U ? -1 : 1};
    if (auto iv = line_cell(fan, lift, eps); iv && cells.insert(*iv).second) bounded += iv->lo && iv->hi;
  }
  EXPECT_EQ(comps.size(), cells.size());
  EXPECT_EQ(core(comps).size(), bounded);
  // Two segments between the three points and two rays outside.
  EXPECT_EQ(cells.size(), 4u);
  EXPECT_EQ(bounded, 2u);
}

TEST(ExtendedCore, AllPlusIsTheToricPolytope) {
  QuotientData q = hirzebruch();
  auto comps = extended_core(q, rat({3, 2}));
  ASSERT_FALSE(comps.empty());
  EXPECT_EQ(comps[0].epsilon, (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(comps[0].polytope, polytope_of(arrangement_from_lift(q, lift_of(q, rat({3, 2})))));
}

TEST(ExtendedCore, Errors) {
  QuotientData q = hirzebruch();
  EXPECT_THROW(extended_core(q, rat({2, 2})), Error);
  try {
    extended_core(q, rat({3, 2}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooManyHyperplanes);
  }
  try {
    extended_core(q, rat({3, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularAlpha);
  }
}

TEST(ExtendedCore, ComponentsTileThePlane) {
  std::mt19937 rng(606);
  int samples = 0;
  for (int trial = 0; trial < 12; ++trial) {
    FanInput fan{2, {}};
    const std::size_t d = 3 + rng() % 4;
    while (fan.u.size() < d) {
      IntVector v{oracle::random_int(rng, -2, 2), oracle::random_int(rng, -2, 2)};
      if (content(v) == 1) fan.u.push_back(v);
    }
    if (rank(fan_matrix(fan)) < 2) continue;
    QuotientData q = detail::quotient_from_rays(fan);
    OrientedArrangement arr = arrangement_from_lift(q, fixtures::random_point(rng, d, 5, 3));
    auto comps = extended_core_of(arr);
    for (int s = 0; s < 60; ++s) {
      RatVector x = fixtures::random_point(rng, 2, 9, 4);
      bool on_hyperplane = false;
      for (const auto& h : arr.items) on_hyperplane = on_hyperplane || dot(h.normal, x) + h.offset == 0;
      if (on_hyperplane) continue;
      std::size_t hits = 0;
      for (const auto& c : comps) hits += contains(c.polytope, x);
      EXPECT_EQ(hits, 1u);
      ++samples;
    }
  }
  EXPECT_GT(samples, 200);
}

TEST(ExtendedCore, TilesTheLineForTheDiagonalCircle) {
  QuotientData q = build_quotient(fixtures::diagonal_fan());
  auto comps = extended_core(q, rat({1}));
  for (int k = -40; k <= 40; ++k) {
    RatVector x{make_rational(k, 7)};
    if (x[0] == 0 || x[0] == -1) continue;
    std::size_t hits = 0;
    for (const auto& c : comps) hits += contains(c.polytope, x);
    EXPECT_EQ(hits, 1u) << k;
  }
}

TEST(ExtendedCore, BoundedFlagMatchesRecessionCone) {
  for (const auto& [fan, lift] :
       {std::pair{fixtures::hirzebruch_fan(), rat({1, 1, 1, 1})}, std::pair{fixtures::reoriented_fan(), rat({1, 2, 3, 1})},
        std::pair{fixtures::circle_fan(), RatVector{1, make_rational(-1, 2), 0}}}) {
    OrientedArrangement arr = arrangement_from_lift(build_quotient(fan), lift);
    for (const auto& c : extended_core_of(arr)) EXPECT_EQ(c.bounded, !oracle_unbounded(arr, c.epsilon));
  }
}

TEST(HkMorphism, HirzebruchFlagship) {
  HkVariationReport r = hk_natural_morphism(hirzebruch(), rat({3, 2}), rat({3, 0}));
  EXPECT_EQ(r.J1, (IndexSet{1, 3}));
  EXPECT_EQ(r.fiber_dim, 1u);
  EXPECT_EQ(r.codim_V1, 2u);
  EXPECT_EQ(r.codim_V_pm, 1u);
  EXPECT_EQ(r.restriction.arrangement.n, 1u);
  EXPECT_EQ(r.restriction.arrangement.size(), 2u);
  ASSERT_EQ(r.fibred_pieces.size(), 3u);
  std::size_t segments = 0, rays = 0;
  for (const auto& p : r.fibred_pieces) {
    EXPECT_EQ(p.piece_dim, 2u);
    EXPECT_EQ(p.base_dim, 1u);
    EXPECT_EQ(p.bounded, p.base.bounded);
    segments += p.bounded;
    rays += !p.bounded;
  }
  EXPECT_EQ(segments, 1u);
  EXPECT_EQ(rays, 2u);
}

TEST(HkMorphism, DiagonalCircle) {
  HkVariationReport r = hk_natural_morphism(build_quotient(fixtures::diagonal_fan()), rat({1}), rat({0}));
  EXPECT_EQ(r.J1, (IndexSet{0, 1}));
  EXPECT_EQ(r.fiber_dim, 1u);
  EXPECT_EQ(r.restriction.sub_quotient.n(), 0u);
  ASSERT_EQ(r.fibred_pieces.size(), 1u);
  EXPECT_EQ(r.fibred_pieces[0].base_dim, 0u);
  EXPECT_EQ(r.fibred_pieces[0].piece_dim, 1u);
}

TEST(HkMorphism, Errors) {
  QuotientData q = hirzebruch();
  auto code = [&](const RatVector& a, const RatVector& b) {
    try {
      hk_natural_morphism(q, a, b);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  EXPECT_EQ(code(rat({3, 2}), rat({3, 1})), ErrorCode::NotOnWall);
  EXPECT_EQ(code(rat({3, 2}), rat({0, 0})), ErrorCode::NotGeneric);
  EXPECT_EQ(code(rat({1, 2}), rat({3, 0})), ErrorCode::NotAdjacent);
  EXPECT_EQ(code(rat({2, 2}), rat({3, 0})), ErrorCode::SingularAlpha);
}

TEST(HkMorphism, AgreesWithToricWallCrossings) {
  int compared = 0;
  for (const auto& fan : {fixtures::hirzebruch_fan(), fixtures::reoriented_fan(), fixtures::circle_fan()}) {
    QuotientData q = build_quotient(fan);
    auto walls = enumerate_walls(q);
    auto hk = hk_walls(q);
    for (const auto& ch : enumerate_chambers(q))
      for (std::size_t s = 0; s < walls.size(); ++s) {
        auto p = facet_point(q, walls, ch.cone, s);
        if (!p || hk_locate(hk, *p).walls.size() != 1) continue;
        VariationReport toric = natural_morphism(q, ch.representative, *p);
        // Move alpha+ towards the wall point until it sits in an adjacent hk chamber.
        RatVector plus = ch.representative;
        for (int k = 0; k < 40; ++k) {
          HkLocation a = hk_locate(hk, plus), b = hk_locate(hk, *p);
          bool adjacent = a.regular();
          for (std::size_t t = 0; t < hk.size(); ++t)
            if (t != b.walls.front()) adjacent = adjacent && a.sign_vector[t] == b.sign_vector[t];
          if (adjacent) break;
          plus = add(*p, scale(make_rational(1, 2), sub(plus, *p)));
        }
        HkVariationReport r = hk_natural_morphism(q, plus, *p);
        EXPECT_EQ(r.J1, toric.J1);
        EXPECT_EQ(r.J1_plus, toric.J1_plus);
        EXPECT_EQ(r.fiber_dim, toric.J1.size() - 1);
        EXPECT_EQ(r.codim_V1, 2 * r.codim_V_pm);
        for (const auto& piece : r.fibred_pieces) EXPECT_EQ(piece.piece_dim, q.n());
        ++compared;
      }
  }
  EXPECT_GE(compared, 6);
}

TEST(MukaiFlop, AcrossTheHorizontalLine) {
  MukaiFlopReport f = mukai_flop(hirzebruch(), rat({3, 2}), rat({3, -2}));
  EXPECT_EQ(f.alpha1, rat({3, 0}));
  EXPECT_EQ(f.J1_size, 2u);
  EXPECT_TRUE(f.biholomorphic);
  EXPECT_EQ(f.plus.J1, (IndexSet{1, 3}));
  EXPECT_EQ(f.minus.J1, (IndexSet{1, 3}));
  EXPECT_EQ(f.plus.fiber_dim, 1u);
  EXPECT_EQ(f.minus.fiber_dim, 1u);
}

TEST(MukaiFlop, AcrossTheDiagonal) {
  MukaiFlopReport f = mukai_flop(hirzebruch(), rat({3, 2}), rat({2, 3}));
  EXPECT_EQ(f.J1_size, 3u);
  EXPECT_FALSE(f.biholomorphic);
  EXPECT_EQ(f.plus.J1, (IndexSet{0, 2, 3}));
  EXPECT_EQ(f.plus.fiber_dim, 2u);
  EXPECT_EQ(f.minus.fiber_dim, 2u);
}

TEST(MukaiFlop, SwapAndErrors) {
  QuotientData q = hirzebruch();
  MukaiFlopReport a = mukai_flop(q, rat({3, 2}), rat({2, 3}));
  MukaiFlopReport b = mukai_flop(q, rat({2, 3}), rat({3, 2}));
  EXPECT_EQ(a.plus, b.minus);
  EXPECT_EQ(a.minus, b.plus);
  auto code = [&](const RatVector& x, const RatVector& y) {
    try {
      mukai_flop(q, x, y);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  EXPECT_EQ(code(rat({3, 2}), rat({5, 1})), ErrorCode::SameChamber);
  EXPECT_EQ(code(rat({3, 2}), rat({-3, -2})), ErrorCode::NonAdjacentChambers);
  EXPECT_EQ(code(rat({3, 2}), rat({3, 0})), ErrorCode::SingularAlpha);
}
