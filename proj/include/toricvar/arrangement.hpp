#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "toricvar/error.hpp"
#include "toricvar/exactla.hpp"
#include "toricvar/numeric.hpp"
#include "toricvar/quotient.hpp"

namespace toricvar {

// H = {x : <normal, x> + offset = 0}; the chosen side is
// orientation * (<normal, x> + offset) >= 0.
struct OrientedHyperplane {
  IntVector normal;
  Rational offset;
  int orientation = 1;

  friend bool operator==(const OrientedHyperplane&, const OrientedHyperplane&) = default;
};

struct OrientedArrangement {
  std::size_t n = 0;
  std::vector<OrientedHyperplane> items;

  std::size_t size() const { return items.size(); }

  friend bool operator==(const OrientedArrangement&, const OrientedArrangement&) = default;
};

// <normal, x> + offset >= 0
struct HalfSpace {
  IntVector normal;
  Rational offset;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

using Edge = std::pair<std::size_t, std::size_t>;

struct Polytope {
  std::size_t n = 0;
  std::vector<HalfSpace> hrep;
  std::vector<RatVector> vertices;
  std::vector<IndexSet> vertex_tight;  // indices into hrep tight at each vertex
  std::vector<IntVector> rays;         // primitive extreme rays of the recession cone
  std::vector<Edge> edges;             // bounded edges (i < j)
  std::vector<Edge> ray_edges;         // unbounded edges as (vertex, ray)
  bool bounded = true;
  bool empty = true;

  // Affine dimension; -1 when empty.
  int dimension() const {
    if (empty) return -1;
    std::vector<RatVector> dirs;
    for (std::size_t i = 1; i < vertices.size(); ++i) dirs.push_back(sub(vertices[i], vertices[0]));
    for (const auto& r : rays) dirs.push_back(to_rational(r));
    if (dirs.empty()) return 0;
    return static_cast<int>(rank_of_vectors(dirs, n));
  }

  // Number of edges (bounded or unbounded) at a vertex.
  std::size_t degree(std::size_t v) const {
    std::size_t k = 0;
    for (const auto& e : edges) k += (e.first == v || e.second == v);
    for (const auto& e : ray_edges) k += (e.first == v);
    return k;
  }

  friend bool operator==(const Polytope&, const Polytope&) = default;
};

struct SingularFlat {
  RatVector point;                    // a point of the flat
  std::vector<RatVector> directions;  // basis of its direction space
  IndexSet incident;                  // all hyperplanes containing the flat
  std::size_t codimension = 0;

  friend bool operator==(const SingularFlat&, const SingularFlat&) = default;
};

struct ArrangementClass {
  bool regular = true;
  bool simplicial = true;
  bool smooth = true;
  std::vector<SingularFlat> singular_flats;

  friend bool operator==(const ArrangementClass&, const ArrangementClass&) = default;
};

inline OrientedArrangement arrangement_from_lift(const QuotientData& q, const RatVector& lift,
                                                 const std::vector<int>& orientation = {}) {
  if (lift.size() != q.d()) throw Error(ErrorCode::LengthMismatch, "lift length differs from d");
  if (!orientation.empty() && orientation.size() != q.d())
    throw Error(ErrorCode::LengthMismatch, "orientation length differs from d");
  OrientedArrangement arr;
  arr.n = q.n();
  for (std::size_t i = 0; i < q.d(); ++i) {
    const int e = orientation.empty() ? 1 : orientation[i];
    if (e != 1 && e != -1) throw Error(ErrorCode::InvalidInput, "orientation entries must be +1 or -1");
    arr.items.push_back({q.fan.u[i], lift[i], e});
  }
  return arr;
}

// Multiplies each orientation by eps[i]; an involution.
inline OrientedArrangement reorient(OrientedArrangement arr, const std::vector<int>& eps) {
  if (eps.size() != arr.size()) throw Error(ErrorCode::LengthMismatch, "orientation length differs from d");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (eps[i] != 1 && eps[i] != -1) throw Error(ErrorCode::InvalidInput, "orientation entries must be +1 or -1");
    arr.items[i].orientation *= eps[i];
  }
  return arr;
}

inline std::vector<HalfSpace> halfspaces(const OrientedArrangement& arr) {
  std::vector<HalfSpace> hs;
  for (const auto& h : arr.items) {
    IntVector w = h.normal;
    for (auto& x : w) x *= h.orientation;
    hs.push_back({std::move(w), h.orientation * h.offset});
  }
  return hs;
}

inline Rational evaluate(const HalfSpace& h, const RatVector& x) { return dot(h.normal, x) + h.offset; }

// Exact V-representation by tight-set enumeration: every n-subset of constraints with
// independent normals is solved and kept if feasible. Requires the normals to span.
inline Polytope polytope_from_halfspaces(std::size_t n, std::vector<HalfSpace> hrep) {
  Polytope P;
  P.n = n;
  P.hrep = std::move(hrep);
  const std::size_t d = P.hrep.size();
  {
    std::vector<IntVector> normals;
    for (const auto& h : P.hrep) normals.push_back(h.normal);
    if (rank_of_vectors(normals, n) != n)
      throw Error(ErrorCode::InvalidInput, "hyperplane normals do not span the ambient space");
  }

  auto feasible = [&](const RatVector& x) {
    for (const auto& h : P.hrep)
      if (evaluate(h, x) < 0) return false;
    return true;
  };

  std::map<RatVector, std::size_t> seen;
  for_each_combination(d, n, [&](const IndexSet& s) {
    RatMatrix A(n, n);
    RatVector b(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) A(r, c) = Rational(P.hrep[s[r]].normal[c]);
      b[r] = -P.hrep[s[r]].offset;
    }
    if (rank(A) != n) return;
    RatVector x = *solve_particular(A, b);
    if (!feasible(x) || seen.count(x)) return;
    seen.emplace(x, P.vertices.size());
    P.vertices.push_back(std::move(x));
  });

  P.empty = P.vertices.empty();
  if (P.empty) return P;

  for (const auto& v : P.vertices) {
    IndexSet tight;
    for (std::size_t i = 0; i < d; ++i)
      if (evaluate(P.hrep[i], v) == 0) tight.push_back(i);
    P.vertex_tight.push_back(std::move(tight));
  }

  // Extreme rays of the recession cone {y : <w_i, y> >= 0}.
  if (n > 0) {
    for_each_combination(d, n - 1, [&](const IndexSet& s) {
      std::vector<IntVector> rows;
      for (auto i : s) rows.push_back(P.hrep[i].normal);
      std::vector<RatVector> ns = nullspace(RatMatrix::from_rows(rows, n));
      if (ns.size() != 1) return;
      IntVector base = primitive_multiple(ns.front());
      for (int sgn : {1, -1}) {
        IntVector r = base;
        if (sgn < 0)
          for (auto& x : r) x = -x;
        bool ok = true;
        for (const auto& h : P.hrep)
          if (dot(h.normal, r) < 0) ok = false;
        if (ok && std::find(P.rays.begin(), P.rays.end(), r) == P.rays.end()) P.rays.push_back(r);
      }
    });
  }
  P.bounded = P.rays.empty();

  auto face_rank = [&](const IndexSet& tight) {
    std::vector<IntVector> rows;
    for (auto i : tight) rows.push_back(P.hrep[i].normal);
    return rank_of_vectors(rows, n);
  };
  for (std::size_t a = 0; a < P.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < P.vertices.size(); ++b) {
      IndexSet common;
      std::set_intersection(P.vertex_tight[a].begin(), P.vertex_tight[a].end(), P.vertex_tight[b].begin(),
                            P.vertex_tight[b].end(), std::back_inserter(common));
      if (face_rank(common) + 1 == n) P.edges.emplace_back(a, b);
    }
  for (std::size_t a = 0; a < P.vertices.size(); ++a)
    for (std::size_t r = 0; r < P.rays.size(); ++r) {
      IndexSet along;
      for (auto i : P.vertex_tight[a])
        if (dot(P.hrep[i].normal, P.rays[r]) == 0) along.push_back(i);
      if (face_rank(along) + 1 == n) P.ray_edges.emplace_back(a, r);
    }
  return P;
}

inline Polytope polytope_of(const OrientedArrangement& arr) { return polytope_from_halfspaces(arr.n, halfspaces(arr)); }

// Regular: every n linearly independent normals have determinant +-1.
// Simplicial: every k hyperplanes with a common point meet in codimension k.
inline ArrangementClass classify(const OrientedArrangement& arr) {
  ArrangementClass cls;
  const std::size_t n = arr.n, d = arr.size();

  for_each_combination(d, n, [&](const IndexSet& s) {
    IntMatrix M(n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) M(r, c) = arr.items[s[c]].normal[r];
    Integer det = determinant(M);
    if (det != 0 && abs(det) != 1) cls.regular = false;
  });

  std::map<IndexSet, SingularFlat> flats;
  for (std::size_t k = 2; k <= std::min(d, n + 1); ++k) {
    for_each_combination(d, k, [&](const IndexSet& s) {
      RatMatrix A(k, n);
      RatVector b(k);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < n; ++c) A(r, c) = Rational(arr.items[s[r]].normal[c]);
        b[r] = -arr.items[s[r]].offset;
      }
      auto x = solve_particular(A, b);
      if (!x) return;
      const std::size_t codim = rank(A);
      if (codim >= k) return;
      SingularFlat flat;
      flat.point = *x;
      flat.directions = nullspace(A);
      flat.codimension = codim;
      for (std::size_t i = 0; i < d; ++i) {
        const auto& h = arr.items[i];
        bool contains = dot(h.normal, flat.point) + h.offset == 0;
        for (const auto& dir : flat.directions) contains = contains && dot(h.normal, dir) == 0;
        if (contains) flat.incident.push_back(i);
      }
      flats.emplace(flat.incident, std::move(flat));
    });
  }
  cls.simplicial = flats.empty();
  for (auto& [key, flat] : flats) cls.singular_flats.push_back(std::move(flat));
  std::stable_sort(cls.singular_flats.begin(), cls.singular_flats.end(),
                   [](const SingularFlat& a, const SingularFlat& b) { return a.codimension < b.codimension; });
  cls.smooth = cls.regular && cls.simplicial;
  return cls;
}

}  // namespace toricvar
