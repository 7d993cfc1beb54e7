#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "toricvar/arrangement.hpp"
#include "toricvar/error.hpp"
#include "toricvar/numeric.hpp"

namespace toricvar {

// Combinatorial splitting P = simplex(r) x F. Vertex v of P sits in fiber group
// grouping[v] (the index of the matching vertex of F) at simplex position fiber_label[v].
struct ProductDecomposition {
  std::size_t r = 0;
  Polytope base;
  std::vector<std::size_t> grouping;
  std::vector<std::size_t> fiber_label;

  friend bool operator==(const ProductDecomposition&, const ProductDecomposition&) = default;
};

namespace detail {

inline bool positive_multiple(const RatVector& a, const RatVector& b) {
  if (is_zero(a) || is_zero(b)) return false;
  if (rank_of_vectors(std::vector<RatVector>{a, b}, a.size()) != 1) return false;
  return dot(a, b) > 0;
}

inline std::optional<ProductDecomposition> check_grouping(const Polytope& P, std::size_t r,
                                                          const std::vector<std::vector<std::size_t>>& groups,
                                                          const std::vector<std::size_t>& group_of,
                                                          const std::vector<std::vector<bool>>& adj) {
  const std::size_t V = P.vertices.size(), G = groups.size();
  // Between two groups: either no edges or a perfect matching.
  std::vector<std::vector<std::vector<std::size_t>>> match(G, std::vector<std::vector<std::size_t>>(G));
  for (std::size_t g = 0; g < G; ++g)
    for (std::size_t h = 0; h < G; ++h) {
      if (g == h) continue;
      std::size_t linked = 0;
      std::vector<std::size_t> partner;
      for (auto v : groups[g]) {
        std::vector<std::size_t> hits;
        for (auto w : groups[h])
          if (adj[v][w]) hits.push_back(w);
        if (hits.size() > 1) return std::nullopt;
        if (hits.size() == 1) {
          ++linked;
          partner.push_back(hits[0]);
        }
      }
      if (linked != 0 && linked != groups[g].size()) return std::nullopt;
      if (linked) match[g][h] = partner;
    }

  std::vector<std::size_t> label(V, V);
  std::vector<bool> done(G, false);
  for (std::size_t start = 0; start < G; ++start) {
    if (done[start]) continue;
    for (std::size_t k = 0; k < groups[start].size(); ++k) label[groups[start][k]] = k;
    done[start] = true;
    std::queue<std::size_t> todo;
    todo.push(start);
    while (!todo.empty()) {
      std::size_t g = todo.front();
      todo.pop();
      for (std::size_t h = 0; h < G; ++h) {
        if (match[g][h].empty()) continue;
        for (std::size_t k = 0; k < groups[g].size(); ++k) {
          std::size_t v = groups[g][k], w = match[g][h][k];
          if (!done[h]) label[w] = label[v];
          else if (label[w] != label[v]) return std::nullopt;
        }
        if (!done[h]) {
          done[h] = true;
          todo.push(h);
        }
      }
    }
  }

  // Matched edges between two groups are parallel translates of one direction.
  for (std::size_t g = 0; g < G; ++g)
    for (std::size_t h = g + 1; h < G; ++h) {
      if (match[g][h].empty()) continue;
      RatVector first;
      for (std::size_t k = 0; k < groups[g].size(); ++k) {
        RatVector dir = sub(P.vertices[match[g][h][k]], P.vertices[groups[g][k]]);
        if (k == 0) first = dir;
        else if (!positive_multiple(first, dir)) return std::nullopt;
      }
    }

  // Every vertex of a group carries the same unbounded directions.
  std::vector<IndexSet> rays_at(V);
  for (const auto& [v, ray] : P.ray_edges) rays_at[v].push_back(ray);
  for (auto& s : rays_at) std::sort(s.begin(), s.end());
  for (const auto& grp : groups)
    for (auto v : grp)
      if (rays_at[v] != rays_at[grp.front()]) return std::nullopt;

  // F is the face through the label-0 vertices.
  std::vector<std::size_t> zero(G);
  for (std::size_t v = 0; v < V; ++v)
    if (label[v] == 0) zero[group_of[v]] = v;
  IndexSet common = P.vertex_tight[zero[0]];
  for (std::size_t g = 1; g < G; ++g) {
    IndexSet next;
    std::set_intersection(common.begin(), common.end(), P.vertex_tight[zero[g]].begin(),
                          P.vertex_tight[zero[g]].end(), std::back_inserter(next));
    common = std::move(next);
  }
  std::vector<HalfSpace> hrep = P.hrep;
  for (auto i : common) {
    HalfSpace rev = P.hrep[i];
    for (auto& x : rev.normal) x = -x;
    rev.offset = -rev.offset;
    hrep.push_back(std::move(rev));
  }
  ProductDecomposition out;
  out.r = r;
  out.base = polytope_from_halfspaces(P.n, std::move(hrep));
  if (out.base.vertices.size() != G) return std::nullopt;
  std::vector<std::size_t> base_index(G, G);
  for (std::size_t g = 0; g < G; ++g)
    for (std::size_t b = 0; b < G; ++b)
      if (out.base.vertices[b] == P.vertices[zero[g]]) base_index[g] = b;
  for (auto b : base_index)
    if (b == G) return std::nullopt;
  out.grouping.resize(V);
  for (std::size_t v = 0; v < V; ++v) out.grouping[v] = base_index[group_of[v]];
  out.fiber_label = label;
  return out;
}

}  // namespace detail

// Searches partitions of the vertices into (r+1)-cliques in lexicographic order and
// returns the first one satisfying the product conditions. Tries r = 1..dim unless
// `fixed_r` is given.
inline std::optional<ProductDecomposition> decompose_product(const Polytope& P,
                                                             std::optional<std::size_t> fixed_r = std::nullopt) {
  if (P.empty) return std::nullopt;
  const int dim = P.dimension();
  const std::size_t V = P.vertices.size();
  for (std::size_t v = 0; v < V; ++v)
    if (P.degree(v) != static_cast<std::size_t>(dim)) throw Error(ErrorCode::NotSimple, "polytope is not simple");

  std::vector<std::vector<bool>> adj(V, std::vector<bool>(V, false));
  for (const auto& [a, b] : P.edges) adj[a][b] = adj[b][a] = true;

  std::vector<std::size_t> candidates;
  if (fixed_r) candidates.push_back(*fixed_r);
  else
    for (int r = 1; r <= dim; ++r) candidates.push_back(static_cast<std::size_t>(r));

  for (std::size_t r : candidates) {
    if (r == 0 || V % (r + 1) != 0) continue;
    std::vector<std::size_t> group_of(V, V);
    std::vector<std::vector<std::size_t>> groups;
    std::optional<ProductDecomposition> found;

    std::function<bool()> search = [&]() -> bool {
      std::size_t v = 0;
      while (v < V && group_of[v] != V) ++v;
      if (v == V) {
        found = detail::check_grouping(P, r, groups, group_of, adj);
        return found.has_value();
      }
      std::vector<std::size_t> nbrs;
      for (std::size_t w = v + 1; w < V; ++w)
        if (group_of[w] == V && adj[v][w]) nbrs.push_back(w);
      bool ok = false;
      for_each_combination(nbrs.size(), r, [&](const IndexSet& pick) {
        if (ok) return;
        std::vector<std::size_t> grp{v};
        for (auto k : pick) grp.push_back(nbrs[k]);
        for (std::size_t a = 1; a < grp.size(); ++a)
          for (std::size_t b = a + 1; b < grp.size(); ++b)
            if (!adj[grp[a]][grp[b]]) return;
        for (auto w : grp) group_of[w] = groups.size();
        groups.push_back(grp);
        ok = search();
        if (!ok) {
          groups.pop_back();
          for (auto w : grp) group_of[w] = V;
        }
      });
      return ok;
    };
    if (search()) return found;
  }
  return std::nullopt;
}

}  // namespace toricvar
