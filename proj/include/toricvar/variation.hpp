#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "toricvar/arrangement.hpp"
#include "toricvar/chambers.hpp"
#include "toricvar/cone.hpp"
#include "toricvar/error.hpp"
#include "toricvar/exactla.hpp"
#include "toricvar/numeric.hpp"
#include "toricvar/product.hpp"
#include "toricvar/quotient.hpp"

namespace toricvar {

struct SupportStability {
  IndexSet support;
  bool semistable = false;
  bool closed_orbit = false;
  std::optional<ConeCertificate> certificate;  // strict when closed_orbit

  friend bool operator==(const SupportStability&, const SupportStability&) = default;
};

inline SupportStability stability(const QuotientData& q, const RatVector& alpha, const IndexSet& support) {
  if (alpha.size() != q.m_rank) throw Error(ErrorCode::LengthMismatch, "alpha length differs from m");
  std::vector<IntVector> gens;
  for (auto i : support) {
    if (i >= q.d()) throw Error(ErrorCode::InvalidInput, "support index out of range");
    gens.push_back(q.weights[i]);
  }
  SupportStability st;
  st.support = support;
  auto nonneg = cone_membership(alpha, gens, ConeMode::Nonnegative);
  st.semistable = nonneg.has_value();
  if (st.semistable) {
    auto strict = cone_membership(alpha, gens, ConeMode::StrictlyPositive);
    st.closed_orbit = strict.has_value();
    st.certificate = st.closed_orbit ? strict : nonneg;
  }
  return st;
}

inline IndexSet support_from_mask(std::uint64_t mask, std::size_t d) {
  IndexSet s;
  for (std::size_t i = 0; i < d; ++i)
    if (mask >> i & 1U) s.push_back(i);
  return s;
}

// Data induced on a wall: the quotient V_1 built on the indices outside J1, in
// coordinates of an integral basis of the flat cut out by the J1 hyperplanes.
struct WallRestriction {
  IndexSet indices;                  // complement of J1
  std::vector<IntVector> flat_basis; // lattice basis of {x : <u_j, x> = 0, j in J1}
  QuotientData sub_quotient;
  RatVector lift;                    // restriction of a lift of alpha_1
  RatVector alpha;                   // its moment value for the sub-quotient
  OrientedArrangement arrangement;   // hyperplanes outside J1 on the flat

  friend bool operator==(const WallRestriction&, const WallRestriction&) = default;
};

inline WallRestriction restrict_to_wall(const QuotientData& q, const IndexSet& J1, const RatVector& alpha1) {
  WallRestriction w;
  w.indices = complement(J1, q.d());
  std::vector<IntVector> rows;
  for (auto j : J1) rows.push_back(q.fan.u[j]);
  w.flat_basis = lattice_kernel(IntMatrix::from_rows(rows, q.n()));
  FanInput sub;
  sub.n = w.flat_basis.size();
  for (auto j : w.indices) {
    IntVector v;
    for (const auto& b : w.flat_basis) v.push_back(dot(q.fan.u[j], b));
    sub.u.push_back(std::move(v));
  }
  w.sub_quotient = detail::quotient_from_rays(std::move(sub));

  RatVector full = lift_of(q, alpha1);
  for (auto j : w.indices) w.lift.push_back(full[j]);
  w.alpha = moment_value(w.sub_quotient, w.lift);
  w.arrangement = arrangement_from_lift(w.sub_quotient, w.lift);
  return w;
}

// Pairing signs of all weights against theta.
struct WallSplit {
  IndexSet J1, J1_plus, J1_minus;
};

inline WallSplit split_by(const QuotientData& q, const IntVector& theta) {
  WallSplit s;
  for (std::size_t i = 0; i < q.d(); ++i) {
    const int sg = sign(dot(q.weights[i], theta));
    if (sg == 0) continue;
    s.J1.push_back(i);
    (sg > 0 ? s.J1_plus : s.J1_minus).push_back(i);
  }
  return s;
}

enum class MorphismKind { BundleProjection, TwoSidedDesingularization };

struct VariationReport {
  Wall wall;
  IntVector theta1;  // sign fixed by <alpha_plus, theta1> > 0
  RatVector alpha_plus;
  RatVector alpha1;
  IndexSet J1, J1_plus, J1_minus;
  MorphismKind kind = MorphismKind::BundleProjection;
  std::size_t fiber_dim_plus = 0;
  std::optional<std::size_t> fiber_dim_minus;
  std::size_t dim_V1 = 0;
  std::size_t dim_V_plus = 0;
  std::optional<std::size_t> dim_V_minus;
  WallRestriction restriction;

  friend bool operator==(const VariationReport&, const VariationReport&) = default;
};

inline VariationReport natural_morphism(const QuotientData& q, const RatVector& alpha_plus, const RatVector& alpha1) {
  const auto walls = enumerate_walls(q);
  const ChamberLocation on = locate(q, walls, alpha1);
  if (on.kind == LocationKind::NonGeneric) throw Error(ErrorCode::NotGeneric, "alpha_1 lies on several walls");
  if (on.kind != LocationKind::OnGenericWall) throw Error(ErrorCode::NotOnWall, "alpha_1 is not on a wall");
  if (locate(q, walls, alpha_plus).kind != LocationKind::Interior)
    throw Error(ErrorCode::NotInterior, "alpha_plus is not in a chamber");
  if (!chamber_of(q, alpha_plus).closure_contains(alpha1))
    throw Error(ErrorCode::NotAdjacent, "the wall point is not in the closure of the chamber of alpha_plus");

  VariationReport rep;
  rep.wall = walls[on.walls.front()];
  rep.alpha_plus = alpha_plus;
  rep.alpha1 = alpha1;
  rep.theta1 = rep.wall.theta;
  if (sign(dot(rep.theta1, alpha_plus)) < 0)
    for (auto& x : rep.theta1) x = -x;
  WallSplit split = split_by(q, rep.theta1);
  rep.J1 = split.J1;
  rep.J1_plus = split.J1_plus;
  rep.J1_minus = split.J1_minus;
  rep.kind = rep.J1_minus.empty() ? MorphismKind::BundleProjection : MorphismKind::TwoSidedDesingularization;
  rep.fiber_dim_plus = rep.J1_plus.size() - 1;
  if (!rep.J1_minus.empty()) rep.fiber_dim_minus = rep.J1_minus.size() - 1;
  rep.dim_V1 = q.n() - (rep.J1.size() - 1);
  rep.dim_V_plus = rep.dim_V1 + rep.fiber_dim_plus;
  if (rep.fiber_dim_minus) rep.dim_V_minus = rep.dim_V1 + *rep.fiber_dim_minus;
  rep.restriction = restrict_to_wall(q, rep.J1, alpha1);
  return rep;
}

enum class FlipKind { Flip, BlowDown, Isomorphism };

struct FlipReport {
  RatVector alpha1;  // where the segment crosses the wall
  VariationReport plus, minus;
  FlipKind kind = FlipKind::Flip;
  std::size_t exceptional_dim_plus = 0;   // dim of V+ in X(alpha_plus)
  std::size_t exceptional_dim_minus = 0;
  std::size_t common_supports = 0;        // supports semistable on both sides

  friend bool operator==(const FlipReport&, const FlipReport&) = default;
};

namespace detail {

// The unique point where [a, b] crosses a wall cone, or an error when the segment
// crosses zero, several, or non-generic wall points.
inline RatVector crossing_point(const QuotientData& q, const std::vector<Wall>& walls, const RatVector& a,
                                const RatVector& b) {
  std::vector<RatVector> hits;
  for (const auto& w : walls) {
    const Rational va = dot(w.theta, a), vb = dot(w.theta, b);
    if (va == 0 && vb == 0) {
      if (segment_meets_cone(a, b, w.cone_generators))
        throw Error(ErrorCode::NonAdjacentChambers, "segment runs inside a wall");
      continue;
    }
    if (sign(va) * sign(vb) >= 0) continue;
    Rational t = va / (va - vb);
    RatVector p = add(a, scale(t, sub(b, a)));
    if (cone_membership(p, w.cone_generators, ConeMode::Nonnegative) &&
        std::find(hits.begin(), hits.end(), p) == hits.end())
      hits.push_back(std::move(p));
  }
  if (hits.size() != 1) throw Error(ErrorCode::NonAdjacentChambers, "chambers are not separated by a single wall");
  if (locate(q, walls, hits.front()).kind != LocationKind::OnGenericWall)
    throw Error(ErrorCode::NonAdjacentChambers, "the crossing point is not generic");
  return hits.front();
}

}  // namespace detail

inline FlipReport flip_report(const QuotientData& q, const RatVector& alpha_plus, const RatVector& alpha_minus) {
  const auto walls = enumerate_walls(q);
  if (locate(q, walls, alpha_plus).kind != LocationKind::Interior ||
      locate(q, walls, alpha_minus).kind != LocationKind::Interior)
    throw Error(ErrorCode::NotInterior, "both points must be interior");
  if (chamber_of(q, alpha_plus).contains(alpha_minus))
    throw Error(ErrorCode::SameChamber, "both points lie in the same chamber");

  FlipReport f;
  f.alpha1 = detail::crossing_point(q, walls, alpha_plus, alpha_minus);
  f.plus = natural_morphism(q, alpha_plus, f.alpha1);
  f.minus = natural_morphism(q, alpha_minus, f.alpha1);
  f.exceptional_dim_plus = f.plus.dim_V_plus;
  f.exceptional_dim_minus = f.minus.dim_V_plus;
  const bool contract_plus = f.plus.fiber_dim_plus > 0, contract_minus = f.minus.fiber_dim_plus > 0;
  if (contract_plus && contract_minus) f.kind = FlipKind::Flip;
  else if (contract_plus || contract_minus) f.kind = FlipKind::BlowDown;
  else f.kind = FlipKind::Isomorphism;
  if (q.d() <= 20) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q.d()); ++mask) {
      IndexSet s = support_from_mask(mask, q.d());
      if (stability(q, alpha_plus, s).semistable && stability(q, alpha_minus, s).semistable) ++f.common_supports;
    }
  }
  return f;
}

struct FibredDecomposition {
  Wall wall;
  RatVector alpha1;  // generic point of the boundary wall next to alpha
  std::size_t r = 0;
  Polytope polytope;       // E, the polytope of alpha
  Polytope base_polytope;  // F, from the restriction to the wall
  std::vector<std::size_t> grouping;  // vertex of E -> vertex of F
  bool grouping_consistent = false;
  std::optional<bool> product_check;  // decompose_product agreement when E is bounded

  friend bool operator==(const FibredDecomposition&, const FibredDecomposition&) = default;
};

namespace detail {

inline std::vector<std::size_t> group_vertices(const Polytope& E, const Polytope& F, const IndexSet& outside,
                                               bool& consistent) {
  consistent = true;
  std::vector<IndexSet> base_tight;
  for (const auto& t : F.vertex_tight) {
    IndexSet global;
    for (auto j : t) global.push_back(outside[j]);
    base_tight.push_back(std::move(global));
  }
  std::vector<std::size_t> grouping(E.vertices.size(), F.vertices.size());
  for (std::size_t v = 0; v < E.vertices.size(); ++v) {
    IndexSet key;
    std::set_intersection(E.vertex_tight[v].begin(), E.vertex_tight[v].end(), outside.begin(), outside.end(),
                          std::back_inserter(key));
    for (std::size_t b = 0; b < base_tight.size(); ++b)
      if (base_tight[b] == key) grouping[v] = b;
    if (grouping[v] == F.vertices.size()) consistent = false;
  }
  if (!consistent) return grouping;
  std::vector<std::size_t> count(F.vertices.size(), 0);
  for (auto g : grouping) ++count[g];
  const std::size_t fiber = count.empty() ? 0 : count.front();
  for (auto c : count) consistent = consistent && c == fiber;
  return grouping;
}

}  // namespace detail

// Fibred structure coming from a boundary wall in the closure of the chamber of alpha.
inline std::optional<FibredDecomposition> is_fibred(const QuotientData& q, const RatVector& alpha) {
  const auto walls = enumerate_walls(q);
  if (locate(q, walls, alpha).kind != LocationKind::Interior)
    throw Error(ErrorCode::NotInterior, "alpha is not in a chamber");
  const ChamberCone chamber = chamber_of(q, alpha);
  for (std::size_t s = 0; s < walls.size(); ++s) {
    if (!walls[s].boundary) continue;
    auto p = facet_point(q, walls, chamber, s);
    if (!p) continue;
    VariationReport rep = natural_morphism(q, alpha, *p);
    FibredDecomposition fd;
    fd.wall = walls[s];
    fd.alpha1 = *p;
    fd.r = rep.J1.size() - 1;
    fd.polytope = polytope_of(arrangement_from_lift(q, lift_of(q, alpha)));
    fd.base_polytope = polytope_of(rep.restriction.arrangement);
    fd.grouping = detail::group_vertices(fd.polytope, fd.base_polytope, rep.restriction.indices,
                                         fd.grouping_consistent);
    fd.grouping_consistent = fd.grouping_consistent &&
                             fd.polytope.vertices.size() == (fd.r + 1) * fd.base_polytope.vertices.size();
    if (fd.polytope.bounded && !fd.polytope.empty) {
      auto dec = decompose_product(fd.polytope, fd.r);
      fd.product_check = dec.has_value() && dec->base.vertices.size() == fd.base_polytope.vertices.size();
    }
    return fd;
  }
  return std::nullopt;
}

}  // namespace toricvar
