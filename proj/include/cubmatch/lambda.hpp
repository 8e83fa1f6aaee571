#pragma once

// λ-matchable vertices and pairs of cubic graphs.
//
// A v-matching (resp. (a,b)-matching) must contain every edge at its
// centres, so the search fixes those edges, checks that no other vertex is
// hit twice, and asks for a perfect matching of what is left.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cubmatch/matching.hpp"
#include "cubmatch/multigraph.hpp"

namespace cubmatch {

namespace detail {

inline std::optional<MatchingCertificate> centred_matching(const Multigraph& g,
                                                           std::vector<Vertex> centers,
                                                           CertificateKind kind) {
  std::sort(centers.begin(), centers.end());
  std::vector<std::size_t> hits(g.n(), 0);
  std::vector<bool> forced(g.m(), false);
  for (Vertex c : centers) {
    if (g.degree(c) != 3) return std::nullopt;
    for (EdgeIndex e : g.incident(c)) forced[e] = true;
  }
  std::vector<EdgeIndex> edges;
  for (EdgeIndex e = 0; e < g.m(); ++e) {
    if (!forced[e]) continue;
    edges.push_back(e);
    ++hits[g.edge(e).u];
    ++hits[g.edge(e).v];
  }
  std::vector<Vertex> removed;
  for (Vertex v = 0; v < g.n(); ++v) {
    bool is_centre = std::binary_search(centers.begin(), centers.end(), v);
    if (is_centre) {
      if (hits[v] != 3) return std::nullopt;
      removed.push_back(v);
    } else if (hits[v] > 1) {
      return std::nullopt;
    } else if (hits[v] == 1) {
      removed.push_back(v);
    }
  }
  auto rest = perfect_matching_without(g, removed);
  if (!rest) return std::nullopt;
  edges.insert(edges.end(), rest->begin(), rest->end());
  std::sort(edges.begin(), edges.end());
  return MatchingCertificate{kind, std::move(edges), std::move(centers)};
}

}  // namespace detail

inline std::optional<MatchingCertificate> find_v_matching(const Multigraph& g, Vertex v) {
  return detail::centred_matching(g, {v}, CertificateKind::vertex);
}

inline bool is_lambda_matchable_vertex(const Multigraph& g, Vertex v) {
  return find_v_matching(g, v).has_value();
}

// Barrier isolating v when v is not λ-matchable.
inline std::optional<Barrier> find_isolating_barrier(const Multigraph& g, Vertex v) {
  if (is_lambda_matchable_vertex(g, v)) return std::nullopt;
  VertexSet nv = g.neighbors(v);
  VertexSet b = nv;
  if (nv.size() == 3) {
    VertexSet removed = sorted_union(nv, std::vector<Vertex>{v});
    b = sorted_union(maximum_violator(g, removed), nv);
  }
  if (!is_barrier(g, b)) return std::nullopt;
  return Barrier{std::move(b)};
}

// Unordered pair query; (a,b) and (b,a) are the same spanning subgraph.
inline std::optional<MatchingCertificate> find_ab_matching(const Multigraph& h, Vertex a, Vertex b) {
  if (a == b) throw GraphError("pair centres must be distinct");
  return detail::centred_matching(h, {a, b}, CertificateKind::pair);
}

// For bipartite hosts the centres must lie in different colour classes.
inline bool is_lambda_matchable_pair(const Multigraph& h, Vertex a, Vertex b) {
  return find_ab_matching(h, a, b).has_value();
}

inline bool is_lambda_matchable_pair(const Multigraph& h, const Bipartition& parts, Vertex a, Vertex b) {
  if (parts.side.at(a) == parts.side.at(b))
    throw GraphError("pair centres must lie in different colour classes");
  return is_lambda_matchable_pair(h, a, b);
}

struct LambdaProfile {
  VertexSet lambda_set;                         // Λ
  std::size_t lambda = 0;                       // λ
  bool bipartite = false;
  std::optional<Bipartition> parts;
  std::vector<std::pair<Vertex, Vertex>> pairs;  // P, ordered (a in A, b in B), sorted
  std::size_t rho = 0;                          // ρ
  std::vector<std::size_t> partners;            // ℓ(u) per vertex

  bool has_pair(Vertex a, Vertex b) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b)) ||
           std::binary_search(pairs.begin(), pairs.end(), std::make_pair(b, a));
  }
  bool in_lambda(Vertex v) const {
    return std::binary_search(lambda_set.begin(), lambda_set.end(), v);
  }
};

inline LambdaProfile lambda_profile_unchecked(const Multigraph& g) {
  LambdaProfile p;
  for (Vertex v = 0; v < g.n(); ++v)
    if (is_lambda_matchable_vertex(g, v)) p.lambda_set.push_back(v);
  p.lambda = p.lambda_set.size();
  p.parts = bipartition(g);
  p.bipartite = p.parts.has_value();
  p.partners.assign(g.n(), 0);
  if (p.bipartite) {
    for (Vertex a : p.parts->a)
      for (Vertex b : p.parts->b)
        if (is_lambda_matchable_pair(g, a, b)) {
          p.pairs.emplace_back(a, b);
          ++p.partners[a];
          ++p.partners[b];
        }
    std::sort(p.pairs.begin(), p.pairs.end());
    p.rho = p.pairs.size();
  }
  return p;
}

inline LambdaProfile lambda_profile(const Multigraph& g) {
  if (!is_cubic(g)) throw GraphError("lambda profile needs a cubic graph");
  if (!is_connected(g) || vertex_connectivity(g) < 2)
    throw GraphError("lambda profile needs a 2-connected cubic graph");
  return lambda_profile_unchecked(g);
}

inline std::size_t partner_count(const Multigraph& h, Vertex u) {
  auto parts = bipartition(h);
  if (!parts) throw GraphError("partner count needs a bipartite graph");
  std::size_t count = 0;
  for (Vertex w = 0; w < h.n(); ++w)
    if (parts->side[w] != parts->side[u] && is_lambda_matchable_pair(h, u, w)) ++count;
  return count;
}

// Oracle path: direct enumeration of degree-constrained spanning subgraphs.
namespace oracle {

inline bool lambda_matchable_vertex(const Multigraph& g, Vertex v) {
  require_enumerable(g);
  std::vector<std::size_t> want(g.n(), 1);
  want[v] = 3;
  return find_factor(g, want).has_value();
}

inline bool lambda_matchable_pair(const Multigraph& g, Vertex a, Vertex b) {
  require_enumerable(g);
  std::vector<std::size_t> want(g.n(), 1);
  want[a] = want[b] = 3;
  return find_factor(g, want).has_value();
}

inline LambdaProfile lambda_profile(const Multigraph& g) {
  LambdaProfile p;
  for (Vertex v = 0; v < g.n(); ++v)
    if (lambda_matchable_vertex(g, v)) p.lambda_set.push_back(v);
  p.lambda = p.lambda_set.size();
  p.parts = bipartition(g);
  p.bipartite = p.parts.has_value();
  p.partners.assign(g.n(), 0);
  if (p.bipartite) {
    for (Vertex a : p.parts->a)
      for (Vertex b : p.parts->b)
        if (lambda_matchable_pair(g, a, b)) {
          p.pairs.emplace_back(a, b);
          ++p.partners[a];
          ++p.partners[b];
        }
    std::sort(p.pairs.begin(), p.pairs.end());
    p.rho = p.pairs.size();
  }
  return p;
}

}  // namespace oracle

// Cut-based characterisation of non-λ-matchable pairs in a connected
// bipartite cubic graph; evaluated independently of the matching search.
// `tight_cuts` must hold the tight cuts of h, `two_cuts` its 2-cuts.
inline bool pair_blocked_by_cuts(const Multigraph& h, const Bipartition& parts, Vertex a, Vertex b,
                                 const std::vector<Cut>& tight_cuts, const std::vector<Cut>& two_cuts) {
  std::size_t ab_edges = 0;
  std::vector<EdgeIndex> ab;
  for (EdgeIndex e : h.incident(a))
    if (h.edge(e).other(a) == b) {
      ++ab_edges;
      ab.push_back(e);
    }
  if (ab_edges == 1) {
    for (const Cut& c : two_cuts)
      if (std::find(c.edges.begin(), c.edges.end(), ab.front()) != c.edges.end()) return true;
    return false;
  }
  if (ab_edges > 1) return false;
  for (const Cut& c : tight_cuts) {
    // X- is the smaller colour part of the shore, on each side.
    auto minus_side = [&](bool shore_side) {
      std::size_t in_a = 0, in_b = 0;
      for (Vertex v = 0; v < h.n(); ++v)
        if (c.contains(v) == shore_side) (parts.in_a(v) ? in_a : in_b)++;
      return in_a < in_b ? 0 : 1;  // colour of the minus part
    };
    bool a_side = c.contains(a), b_side = c.contains(b);
    if (a_side == b_side) continue;
    if (parts.side[a] == minus_side(a_side) && parts.side[b] == minus_side(b_side)) return true;
  }
  return false;
}

}  // namespace cubmatch
