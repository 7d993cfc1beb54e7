#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "toricvar/arrangement.hpp"
#include "toricvar/chambers.hpp"
#include "toricvar/error.hpp"
#include "toricvar/numeric.hpp"
#include "toricvar/quotient.hpp"
#include "toricvar/variation.hpp"

namespace toricvar {

inline constexpr std::size_t default_sweep_cap = 16;

// Full linear hyperplane theta^perp of m*, no cone attached.
struct HkWall {
  IntVector theta;
  IndexSet span_indices;

  friend bool operator==(const HkWall&, const HkWall&) = default;
};

inline std::vector<HkWall> hk_walls(const QuotientData& q) {
  std::vector<HkWall> walls;
  for (auto& theta : weight_hyperplanes(q)) {
    HkWall w;
    for (std::size_t i = 0; i < q.d(); ++i)
      if (dot(q.weights[i], theta) == 0) w.span_indices.push_back(i);
    w.theta = std::move(theta);
    walls.push_back(std::move(w));
  }
  return walls;
}

struct HkLocation {
  std::vector<int> sign_vector;
  std::vector<std::size_t> walls;  // hyperplanes through alpha

  bool regular() const { return walls.empty(); }

  friend bool operator==(const HkLocation&, const HkLocation&) = default;
};

inline HkLocation hk_locate(const std::vector<HkWall>& walls, const RatVector& alpha) {
  HkLocation loc;
  for (std::size_t s = 0; s < walls.size(); ++s) {
    if (walls[s].theta.size() != alpha.size()) throw Error(ErrorCode::LengthMismatch, "alpha length differs from m");
    const int sg = sign(dot(walls[s].theta, alpha));
    loc.sign_vector.push_back(sg);
    if (sg == 0) loc.walls.push_back(s);
  }
  return loc;
}

struct HkChamber {
  std::vector<int> signs;
  RatVector representative;

  friend bool operator==(const HkChamber&, const HkChamber&) = default;
};

inline std::vector<HkChamber> hk_chambers(const QuotientData& q) {
  std::vector<IntVector> normals;
  for (const auto& w : hk_walls(q)) normals.push_back(w.theta);
  std::vector<HkChamber> out;
  for (auto& reg : central_regions(q.m_rank, normals)) out.push_back({std::move(reg.signs), std::move(reg.representative)});
  return out;
}

struct ExtendedCoreComponent {
  std::vector<int> epsilon;
  Polytope polytope;
  bool bounded = true;

  friend bool operator==(const ExtendedCoreComponent&, const ExtendedCoreComponent&) = default;
};

// One component per orientation with nonempty polytope. Orientations are swept
// with + before -, coordinate 1 most significant; equal polytopes keep the first.
inline std::vector<ExtendedCoreComponent> extended_core_of(const OrientedArrangement& arr,
                                                           std::size_t cap = default_sweep_cap) {
  const std::size_t d = arr.size();
  if (d > cap || d >= 63) throw Error(ErrorCode::TooManyHyperplanes, "orientation sweep exceeds the cap");
  std::vector<ExtendedCoreComponent> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    std::vector<int> eps(d);
    for (std::size_t i = 0; i < d; ++i) eps[i] = (mask >> (d - 1 - i) & 1U) ? -1 : 1;
    OrientedArrangement a = arr;
    for (std::size_t i = 0; i < d; ++i) a.items[i].orientation = eps[i];
    Polytope P = polytope_of(a);
    if (P.empty) continue;
    bool dup = false;
    for (const auto& c : out) dup = dup || (c.polytope.vertices == P.vertices && c.polytope.rays == P.rays);
    if (dup) continue;
    const bool bounded = P.bounded;
    out.push_back({std::move(eps), std::move(P), bounded});
  }
  return out;
}

inline std::vector<ExtendedCoreComponent> extended_core(const QuotientData& q, const RatVector& alpha,
                                                        std::size_t cap = default_sweep_cap) {
  if (!hk_locate(hk_walls(q), alpha).regular()) throw Error(ErrorCode::SingularAlpha, "alpha lies on a hk wall");
  if (q.d() > cap) throw Error(ErrorCode::TooManyHyperplanes, "orientation sweep exceeds the cap");
  return extended_core_of(arrangement_from_lift(q, lift_of(q, alpha)), cap);
}

inline std::vector<ExtendedCoreComponent> core(const std::vector<ExtendedCoreComponent>& components) {
  std::vector<ExtendedCoreComponent> out;
  for (const auto& c : components)
    if (c.bounded) out.push_back(c);
  return out;
}

struct FibredPiece {
  std::vector<int> epsilon_tilde;  // orientation of the sub-arrangement
  Polytope base;
  std::size_t base_dim = 0;
  std::size_t piece_dim = 0;
  bool bounded = true;

  friend bool operator==(const FibredPiece&, const FibredPiece&) = default;
};

struct HkVariationReport {
  HkWall wall;
  IntVector theta1;
  RatVector alpha_plus;
  RatVector alpha1;
  IndexSet J1, J1_plus, J1_minus;
  std::size_t fiber_dim = 0;
  std::size_t codim_V1 = 0;
  std::size_t codim_V_pm = 0;
  WallRestriction restriction;  // restriction.arrangement is the singular sub-arrangement
  std::vector<FibredPiece> fibred_pieces;

  friend bool operator==(const HkVariationReport&, const HkVariationReport&) = default;
};

inline HkVariationReport hk_natural_morphism(const QuotientData& q, const RatVector& alpha_plus, const RatVector& alpha1,
                                             std::size_t cap = default_sweep_cap) {
  const auto walls = hk_walls(q);
  const HkLocation on = hk_locate(walls, alpha1);
  if (on.walls.empty()) throw Error(ErrorCode::NotOnWall, "alpha_1 is not on a hk wall");
  if (on.walls.size() > 1) throw Error(ErrorCode::NotGeneric, "alpha_1 lies on several hk walls");
  const HkLocation plus = hk_locate(walls, alpha_plus);
  if (!plus.regular()) throw Error(ErrorCode::SingularAlpha, "alpha_plus lies on a hk wall");
  for (std::size_t s = 0; s < walls.size(); ++s)
    if (s != on.walls.front() && plus.sign_vector[s] != on.sign_vector[s])
      throw Error(ErrorCode::NotAdjacent, "the wall point is not in the closure of the chamber of alpha_plus");

  HkVariationReport rep;
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
  rep.fiber_dim = rep.J1.size() - 1;
  rep.codim_V1 = 2 * rep.fiber_dim;
  rep.codim_V_pm = rep.fiber_dim;
  rep.restriction = restrict_to_wall(q, rep.J1, alpha1);
  for (auto& comp : extended_core_of(rep.restriction.arrangement, cap)) {
    FibredPiece piece;
    piece.epsilon_tilde = comp.epsilon;
    piece.base_dim = static_cast<std::size_t>(comp.polytope.dimension());
    piece.piece_dim = rep.fiber_dim + piece.base_dim;
    piece.bounded = comp.bounded;
    piece.base = std::move(comp.polytope);
    rep.fibred_pieces.push_back(std::move(piece));
  }
  return rep;
}

struct MukaiFlopReport {
  RatVector alpha1;
  HkVariationReport plus, minus;
  std::size_t J1_size = 0;
  bool biholomorphic = false;  // #J1 = 2

  friend bool operator==(const MukaiFlopReport&, const MukaiFlopReport&) = default;
};

inline MukaiFlopReport mukai_flop(const QuotientData& q, const RatVector& alpha_plus, const RatVector& alpha_minus,
                                  std::size_t cap = default_sweep_cap) {
  const auto walls = hk_walls(q);
  const HkLocation a = hk_locate(walls, alpha_plus), b = hk_locate(walls, alpha_minus);
  if (!a.regular() || !b.regular()) throw Error(ErrorCode::SingularAlpha, "both points must avoid the hk walls");
  std::vector<std::size_t> differ;
  for (std::size_t s = 0; s < walls.size(); ++s)
    if (a.sign_vector[s] != b.sign_vector[s]) differ.push_back(s);
  if (differ.empty()) throw Error(ErrorCode::SameChamber, "both points lie in the same hk chamber");
  if (differ.size() > 1) throw Error(ErrorCode::NonAdjacentChambers, "hk chambers are not separated by a single wall");

  const IntVector& theta = walls[differ.front()].theta;
  const Rational va = dot(theta, alpha_plus), vb = dot(theta, alpha_minus);
  const Rational t = va / (va - vb);
  MukaiFlopReport f;
  f.alpha1 = add(alpha_plus, scale(t, sub(alpha_minus, alpha_plus)));
  f.plus = hk_natural_morphism(q, alpha_plus, f.alpha1, cap);
  f.minus = hk_natural_morphism(q, alpha_minus, f.alpha1, cap);
  f.J1_size = f.plus.J1.size();
  f.biholomorphic = f.J1_size == 2;
  return f;
}

}  // namespace toricvar
