#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "toricvar/cone.hpp"
#include "toricvar/error.hpp"
#include "toricvar/exactla.hpp"
#include "toricvar/numeric.hpp"
#include "toricvar/quotient.hpp"

namespace toricvar {

// A wall of the positive cone: the cone spanned by the weights lying on the linear
// hyperplane theta^perp, where theta is primitive in m with first nonzero entry > 0.
struct Wall {
  IntVector theta;
  IndexSet span_indices;                 // {i : <a_i, theta> = 0}
  std::vector<IntVector> cone_generators;  // a_i for i in span_indices
  bool boundary = false;                 // all weights on one closed side

  friend bool operator==(const Wall&, const Wall&) = default;
};

enum class LocationKind { OutsidePositiveCone, Interior, OnGenericWall, NonGeneric };

struct ChamberLocation {
  LocationKind kind = LocationKind::Interior;
  std::vector<std::size_t> walls;  // walls whose cone contains alpha
  std::vector<int> sign_vector;    // sign of <alpha, theta_s> per wall

  friend bool operator==(const ChamberLocation&, const ChamberLocation&) = default;
};

// Open polyhedral cone: every constraint sign * <theta, x> > 0 holds.
struct ChamberCone {
  std::vector<SignedHyperplane> constraints;  // sorted, duplicate free

  bool contains(const RatVector& x) const {
    for (const auto& h : constraints)
      if (h.sign * sign(dot(h.normal, x)) <= 0) return false;
    return true;
  }
  bool closure_contains(const RatVector& x) const {
    for (const auto& h : constraints)
      if (h.sign * sign(dot(h.normal, x)) < 0) return false;
    return true;
  }

  friend bool operator==(const ChamberCone&, const ChamberCone&) = default;
};

struct Chamber {
  RatVector representative;
  ChamberCone cone;

  friend bool operator==(const Chamber&, const Chamber&) = default;
};

// Distinct hyperplanes of m* spanned by weights, as canonical primitive normals,
// ordered by the index set of weights they contain. For m = 1 this is {0}.
inline std::vector<IntVector> weight_hyperplanes(const QuotientData& q) {
  const std::size_t m = q.m_rank;
  std::vector<IntVector> normals;
  if (m == 0) return normals;
  std::set<IntVector> seen;
  for_each_combination(q.d(), m - 1, [&](const IndexSet& s) {
    std::vector<IntVector> rows;
    for (auto i : s) rows.push_back(q.weights[i]);
    if (rank_of_vectors(rows, m) != m - 1) return;
    IntVector theta = hyperplane_normal(rows, m);
    if (seen.insert(theta).second) normals.push_back(theta);
  });
  auto span_of = [&](const IntVector& theta) {
    IndexSet s;
    for (std::size_t i = 0; i < q.d(); ++i)
      if (dot(q.weights[i], theta) == 0) s.push_back(i);
    return s;
  };
  std::stable_sort(normals.begin(), normals.end(),
                   [&](const IntVector& a, const IntVector& b) { return span_of(a) < span_of(b); });
  return normals;
}

inline std::vector<Wall> enumerate_walls(const QuotientData& q) {
  std::vector<Wall> walls;
  for (auto& theta : weight_hyperplanes(q)) {
    Wall w;
    bool has_pos = false, has_neg = false;
    for (std::size_t i = 0; i < q.d(); ++i) {
      const int s = sign(dot(q.weights[i], theta));
      if (s == 0) {
        w.span_indices.push_back(i);
        w.cone_generators.push_back(q.weights[i]);
      }
      has_pos = has_pos || s > 0;
      has_neg = has_neg || s < 0;
    }
    w.boundary = !(has_pos && has_neg);
    w.theta = std::move(theta);
    walls.push_back(std::move(w));
  }
  return walls;
}

inline bool in_positive_cone(const QuotientData& q, const RatVector& alpha) {
  return cone_membership(alpha, q.weights, ConeMode::Nonnegative).has_value();
}

inline ChamberLocation locate(const QuotientData& q, const std::vector<Wall>& walls, const RatVector& alpha) {
  if (alpha.size() != q.m_rank) throw Error(ErrorCode::LengthMismatch, "alpha length differs from m");
  ChamberLocation loc;
  for (std::size_t s = 0; s < walls.size(); ++s) {
    const int sg = sign(dot(walls[s].theta, alpha));
    loc.sign_vector.push_back(sg);
    if (sg == 0 && cone_membership(alpha, walls[s].cone_generators, ConeMode::Nonnegative)) loc.walls.push_back(s);
  }
  if (!in_positive_cone(q, alpha)) {
    loc.kind = LocationKind::OutsidePositiveCone;
    loc.walls.clear();
  } else if (loc.walls.empty()) {
    loc.kind = LocationKind::Interior;
  } else if (loc.walls.size() == 1) {
    loc.kind = LocationKind::OnGenericWall;
  } else {
    loc.kind = LocationKind::NonGeneric;
  }
  return loc;
}

inline ChamberLocation locate(const QuotientData& q, const RatVector& alpha) {
  return locate(q, enumerate_walls(q), alpha);
}

// Deterministic lift: the reduced-echelon particular solution, zero off the pivots.
inline RatVector lift_of(const QuotientData& q, const RatVector& alpha) {
  if (alpha.size() != q.m_rank) throw Error(ErrorCode::LengthMismatch, "alpha length differs from m");
  auto x = solve_particular(weight_matrix(q), alpha);
  if (!x) throw Error(ErrorCode::NoLift, "alpha is not in the span of the weights");
  return *x;
}

// Chamber containing an interior alpha: the intersection of all simplicial cones
// spanned by bases of weights that contain alpha in their interior.
inline ChamberCone chamber_of(const QuotientData& q, const RatVector& alpha) {
  const std::size_t m = q.m_rank;
  std::set<SignedHyperplane> constraints;
  for_each_combination(q.d(), m, [&](const IndexSet& basis) {
    RatMatrix A(m, m);
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t r = 0; r < m; ++r) A(r, c) = Rational(q.weights[basis[c]][r]);
    if (rank(A) != m) return;
    RatVector coeff = *solve_particular(A, alpha);
    for (const auto& c : coeff)
      if (c <= 0) return;
    for (std::size_t drop = 0; drop < m; ++drop) {
      std::vector<IntVector> rows;
      for (std::size_t c = 0; c < m; ++c)
        if (c != drop) rows.push_back(q.weights[basis[c]]);
      IntVector theta = hyperplane_normal(rows, m);
      constraints.insert({theta, sign(dot(theta, alpha))});
    }
  });
  return ChamberCone{{constraints.begin(), constraints.end()}};
}

inline bool same_chamber(const QuotientData& q, const RatVector& a, const RatVector& b) {
  auto walls = enumerate_walls(q);
  if (locate(q, walls, a).kind != LocationKind::Interior || locate(q, walls, b).kind != LocationKind::Interior)
    throw Error(ErrorCode::NotInterior, "both points must be interior");
  return chamber_of(q, a).contains(b);
}

// Open regions of the central arrangement {theta^perp}, as sign vectors with a
// strictly interior representative, found by incremental splitting.
struct SignRegion {
  std::vector<int> signs;
  RatVector representative;
};

inline std::vector<SignRegion> central_regions(std::size_t dim, const std::vector<IntVector>& normals) {
  std::vector<std::vector<SignedHyperplane>> regions{{}};
  for (const auto& theta : normals) {
    std::vector<std::vector<SignedHyperplane>> next;
    for (const auto& r : regions)
      for (int s : {1, -1}) {
        auto cand = r;
        cand.push_back({theta, s});
        if (strict_point(dim, cand)) next.push_back(std::move(cand));
      }
    regions = std::move(next);
  }
  std::vector<SignRegion> out;
  for (const auto& r : regions) {
    SignRegion reg;
    for (const auto& h : r) reg.signs.push_back(h.sign);
    reg.representative = *strict_point(dim, r);
    out.push_back(std::move(reg));
  }
  return out;
}

// All chambers of the positive cone, in the order their first region is met.
inline std::vector<Chamber> enumerate_chambers(const QuotientData& q) {
  std::vector<Chamber> chambers;
  for (const auto& reg : central_regions(q.m_rank, weight_hyperplanes(q))) {
    if (!in_positive_cone(q, reg.representative)) continue;
    ChamberCone cone = chamber_of(q, reg.representative);
    bool known = false;
    for (const auto& c : chambers) known = known || c.cone == cone;
    if (!known) chambers.push_back({reg.representative, std::move(cone)});
  }
  return chambers;
}

// A point on `wall` that lies on no other wall and in the closure of `chamber`,
// or nullopt when the wall does not bound the chamber in codimension one.
inline std::optional<RatVector> facet_point(const QuotientData& q, const std::vector<Wall>& walls,
                                            const ChamberCone& chamber, std::size_t wall_index) {
  const std::size_t m = q.m_rank;
  const Wall& wall = walls[wall_index];
  std::vector<SignedHyperplane> base;
  for (const auto& h : chamber.constraints)
    if (h.normal != wall.theta) base.push_back(h);
  if (!strict_point(m, base, {wall.theta})) return std::nullopt;

  std::vector<IntVector> others;
  for (const auto& w : walls)
    if (w.theta != wall.theta) others.push_back(w.theta);

  auto generic = [&](const RatVector& p) {
    ChamberLocation loc = locate(q, walls, p);
    return loc.kind == LocationKind::OnGenericWall && loc.walls.front() == wall_index && chamber.closure_contains(p);
  };
  if (auto p = strict_point(m, base, {wall.theta}); p && generic(*p)) return p;

  // Split the facet by the remaining hyperplanes until a generic cell is found.
  std::function<std::optional<RatVector>(std::size_t, std::vector<SignedHyperplane>&)> search =
      [&](std::size_t k, std::vector<SignedHyperplane>& cons) -> std::optional<RatVector> {
    if (k == others.size()) {
      auto p = strict_point(m, cons, {wall.theta});
      if (p && generic(*p)) return p;
      return std::nullopt;
    }
    for (int s : {1, -1}) {
      cons.push_back({others[k], s});
      if (strict_point(m, cons, {wall.theta})) {
        if (auto p = search(k + 1, cons)) return p;
      }
      cons.pop_back();
    }
    return std::nullopt;
  };
  return search(0, base);
}

}  // namespace toricvar
