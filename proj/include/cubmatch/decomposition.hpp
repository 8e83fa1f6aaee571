#pragma once

// Tight cuts, tight cut decomposition (bricks and braces), 2-cut
// decomposition (3-connected pieces), barrier cores and fragments, and the
// invariants b, b', beta, beta', theta, theta-bar and n_nonbip.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cubmatch/canonical.hpp"
#include "cubmatch/lambda.hpp"
#include "cubmatch/matching.hpp"
#include "cubmatch/multigraph.hpp"

namespace cubmatch {

// ---------------------------------------------------------------- tightness

namespace detail {

inline void require_odd(const Cut& c) {
  if (!c.is_odd()) throw GraphError("cut must be odd");
}

}  // namespace detail

// Any odd cut meets a perfect matching an odd number of times, so the cut is
// tight iff no perfect matching uses three pairwise disjoint cut edges.
inline bool is_tight_cut(const Multigraph& g, const Cut& c) {
  detail::require_odd(c);
  const auto& ce = c.edges;
  for (std::size_t i = 0; i < ce.size(); ++i)
    for (std::size_t j = i + 1; j < ce.size(); ++j)
      for (std::size_t k = j + 1; k < ce.size(); ++k) {
        const Edge &a = g.edge(ce[i]), &b = g.edge(ce[j]), &d = g.edge(ce[k]);
        std::vector<Vertex> ends{a.u, a.v, b.u, b.v, d.u, d.v};
        std::sort(ends.begin(), ends.end());
        if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) continue;
        if (is_matchable_without(g, ends)) return false;
      }
  return true;
}

// Bipartite hosts: tight iff |X+| = |X-| + 1 and every cut edge leaves X+.
inline bool is_tight_cut_bipartite(const Multigraph& g, const Bipartition& parts, const Cut& c) {
  detail::require_odd(c);
  std::size_t in_a = 0, in_b = 0;
  for (Vertex v : c.shore) (parts.in_a(v) ? in_a : in_b)++;
  const bool plus_is_a = in_a > in_b;
  const std::size_t plus = std::max(in_a, in_b), minus = std::min(in_a, in_b);
  if (plus != minus + 1) return false;
  for (EdgeIndex e : c.edges) {
    const Edge& ed = g.edge(e);
    Vertex inside = c.contains(ed.u) ? ed.u : ed.v;
    if (parts.in_a(inside) != plus_is_a) return false;
  }
  return true;
}

inline bool is_separating_cut(const Multigraph& g, const Cut& c) {
  Contraction left = contract(g, c.other_shore(g.n()));
  Contraction right = contract(g, c.shore);
  return is_matching_covered(left.graph) && is_matching_covered(right.graph);
}

namespace oracle {

inline bool is_tight_cut(const Multigraph& g, const Cut& c) {
  detail::require_odd(c);
  std::vector<bool> in_cut(g.m(), false);
  for (EdgeIndex e : c.edges) in_cut[e] = true;
  bool tight = true;
  for_each_perfect_matching(g, [&](const std::vector<EdgeIndex>& m) {
    std::size_t hit = 0;
    for (EdgeIndex e : m) hit += in_cut[e];
    if (hit != 1) tight = false;
    return tight;
  });
  return tight;
}

// Separating iff each cut edge is the only cut edge of some perfect matching.
inline bool is_separating_cut(const Multigraph& g, const Cut& c) {
  std::vector<bool> in_cut(g.m(), false), single(g.m(), false);
  for (EdgeIndex e : c.edges) in_cut[e] = true;
  for_each_perfect_matching(g, [&](const std::vector<EdgeIndex>& m) {
    std::vector<EdgeIndex> hits;
    for (EdgeIndex e : m)
      if (in_cut[e]) hits.push_back(e);
    if (hits.size() == 1) single[hits.front()] = true;
    return true;
  });
  return std::all_of(c.edges.begin(), c.edges.end(), [&](EdgeIndex e) { return single[e]; });
}

}  // namespace oracle

// Nontrivial tight 3-cuts ordered by canonical shore.
inline std::vector<Cut> nontrivial_tight_cuts(const Multigraph& g) {
  std::vector<Cut> out;
  auto parts = bipartition(g);
  for (Cut& c : enumerate_small_cuts(g, 3)) {
    if (c.is_trivial(g.n()) || !c.is_odd()) continue;
    bool tight = parts ? is_tight_cut_bipartite(g, *parts, c) : is_tight_cut(g, c);
    if (tight) out.push_back(std::move(c));
  }
  return out;
}

inline std::optional<Cut> find_nontrivial_tight_cut(const Multigraph& g) {
  auto cuts = nontrivial_tight_cuts(g);
  if (cuts.empty()) return std::nullopt;
  return cuts.front();
}

// -------------------------------------------------------- decomposition tree

enum class NodeKind { internal, brick, brace, piece };

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::internal: return "internal";
    case NodeKind::brick: return "brick";
    case NodeKind::brace: return "brace";
    case NodeKind::piece: return "piece";
  }
  return "?";
}

struct DecompositionNode {
  Multigraph graph;
  NodeKind kind = NodeKind::internal;
  std::optional<Cut> cut;                // set on internal nodes
  Vertex marked_vertex = kNoVertex;      // contraction vertex of this child, if any
  std::optional<EdgeIndex> marker_edge;  // marker edge of a marked C-component
  std::vector<DecompositionNode> children;

  template <class F>
  void for_each_leaf(F&& f) const {
    if (children.empty()) {
      f(*this);
      return;
    }
    for (const auto& c : children) c.for_each_leaf(f);
  }
};

enum class DecompositionMode { tight, two_cut };

struct DecompositionTree {
  DecompositionMode mode = DecompositionMode::tight;
  DecompositionNode root;

  std::vector<const DecompositionNode*> leaves() const {
    std::vector<const DecompositionNode*> out;
    root.for_each_leaf([&](const DecompositionNode& n) { out.push_back(&n); });
    return out;
  }
};

namespace detail {

inline DecompositionNode tight_node(Multigraph g, Vertex marked, std::size_t choice) {
  DecompositionNode node;
  node.marked_vertex = marked;
  auto cuts = nontrivial_tight_cuts(g);
  if (cuts.empty()) {
    node.kind = is_bipartite(g) ? NodeKind::brace : NodeKind::brick;
    node.graph = std::move(g);
    return node;
  }
  const Cut& c = cuts[std::min(choice, cuts.size() - 1)];
  Contraction keep_shore = contract(g, c.other_shore(g.n()));  // G / X-bar
  Contraction keep_other = contract(g, c.shore);               // G / X
  node.children.push_back(tight_node(std::move(keep_shore.graph), keep_shore.contraction_vertex, 0));
  node.children.push_back(tight_node(std::move(keep_other.graph), keep_other.contraction_vertex, 0));
  node.cut = c;
  node.graph = std::move(g);
  return node;
}

inline void require_two_connected_cubic(const Multigraph& g) {
  if (!is_cubic(g)) throw GraphError("expected a cubic graph");
  if (!is_connected(g) || edge_connectivity(g) < 2)
    throw GraphError("expected a 2-connected cubic graph");
}

}  // namespace detail

// `first_choice` picks which nontrivial tight cut is used at the root
// (clamped); deeper levels always take the first cut.
inline DecompositionTree tight_cut_decomposition(const Multigraph& g, std::size_t first_choice = 0) {
  detail::require_two_connected_cubic(g);
  return {DecompositionMode::tight, detail::tight_node(g, kNoVertex, first_choice)};
}

using FormMultiset = std::vector<CanonicalForm>;  // sorted

inline FormMultiset leaf_forms(const DecompositionTree& t, bool simple) {
  FormMultiset out;
  for (const auto* leaf : t.leaves())
    out.push_back(canonical_form(simple ? underlying_simple(leaf->graph) : leaf->graph));
  std::sort(out.begin(), out.end());
  return out;
}

// B*: bricks and braces as underlying simple graphs.
inline FormMultiset bricks_and_braces(const Multigraph& g) {
  return leaf_forms(tight_cut_decomposition(g), true);
}

// ---------------------------------------------------------------- 2-cuts

inline std::optional<Cut> find_2cut(const Multigraph& g) {
  auto cuts = enumerate_small_cuts(g, 2);
  if (cuts.empty()) return std::nullopt;
  return cuts.front();
}

struct MarkedComponent {
  Multigraph graph;
  EdgeIndex marker = 0;
  std::vector<Vertex> to_host;  // local vertex -> host vertex
};

// Each side of the 2-cut closed by an edge joining its two degree-2 vertices.
inline std::pair<MarkedComponent, MarkedComponent> marked_components(const Multigraph& g, const Cut& c) {
  if (c.size() != 2) throw GraphError("marked components need a 2-cut");
  auto side = [&](const VertexSet& shore) {
    Subgraph s = induced_subgraph(g, shore);
    std::vector<Vertex> ends;
    for (EdgeIndex e : c.edges) {
      const Edge& ed = g.edge(e);
      Vertex inside = std::binary_search(shore.begin(), shore.end(), ed.u) ? ed.u : ed.v;
      ends.push_back(s.from_host[inside]);
    }
    if (ends[0] == ends[1]) throw GraphError("2-cut edges share an end; graph has a bridge");
    MarkedComponent mc;
    mc.marker = s.graph.add_edge(ends[0], ends[1], g.next_id());
    mc.graph = std::move(s.graph);
    mc.to_host = std::move(s.to_host);
    return mc;
  };
  return {side(c.shore), side(c.other_shore(g.n()))};
}

namespace detail {

inline DecompositionNode two_cut_node(Multigraph g, std::optional<EdgeIndex> marker, std::size_t choice) {
  DecompositionNode node;
  node.marker_edge = marker;
  auto cuts = enumerate_small_cuts(g, 2);
  if (cuts.empty()) {
    node.kind = NodeKind::piece;
    node.graph = std::move(g);
    return node;
  }
  const Cut& c = cuts[std::min(choice, cuts.size() - 1)];
  auto [g1, g2] = marked_components(g, c);
  node.children.push_back(two_cut_node(std::move(g1.graph), g1.marker, 0));
  node.children.push_back(two_cut_node(std::move(g2.graph), g2.marker, 0));
  node.cut = c;
  node.graph = std::move(g);
  return node;
}

}  // namespace detail

inline DecompositionTree two_cut_decomposition(const Multigraph& g, std::size_t first_choice = 0) {
  detail::require_two_connected_cubic(g);
  return {DecompositionMode::two_cut, detail::two_cut_node(g, std::nullopt, first_choice)};
}

inline std::vector<Multigraph> three_connected_pieces(const Multigraph& g) {
  std::vector<Multigraph> out;
  DecompositionTree t = two_cut_decomposition(g);
  for (const auto* leaf : t.leaves()) out.push_back(leaf->graph);
  return out;
}

inline bool is_theta(const Multigraph& g) {
  return g.n() == 2 && g.m() == 3 && g.multiplicity(0, 1) == 3;
}

// ---------------------------------------------------------------- invariants

struct InvariantBundle {
  std::size_t b = 0;          // bricks
  std::size_t b_prime = 0;    // braces of order >= 6
  std::size_t beta = 0;       // sum of brick orders
  std::size_t beta_prime = 0; // sum of (n/2)^2 over braces of order >= 6
  std::size_t theta = 0;      // 3-connected pieces isomorphic to Theta
  std::size_t theta_bar = 0;  // the other pieces
  std::size_t n_nonbip = 0;   // total order of nonbipartite pieces

  bool operator==(const InvariantBundle&) const = default;
};

namespace detail {

// Tight-cut part of the bundle from leaf graphs.
inline void add_leaf(InvariantBundle& inv, const Multigraph& leaf, bool bipartite) {
  if (!bipartite) {
    ++inv.b;
    inv.beta += leaf.n();
  } else if (leaf.n() >= 6) {
    ++inv.b_prime;
    inv.beta_prime += (leaf.n() / 2) * (leaf.n() / 2);
  }
}

inline void add_piece(InvariantBundle& inv, const Multigraph& piece, bool bipartite) {
  if (is_theta(piece))
    ++inv.theta;
  else
    ++inv.theta_bar;
  if (!bipartite) inv.n_nonbip += piece.n();
}

}  // namespace detail

inline InvariantBundle invariants(const Multigraph& g) {
  detail::require_two_connected_cubic(g);
  InvariantBundle inv;
  DecompositionTree tight = tight_cut_decomposition(g);
  for (const auto* leaf : tight.leaves()) detail::add_leaf(inv, leaf->graph, leaf->kind == NodeKind::brace);
  DecompositionTree split = two_cut_decomposition(g);
  for (const auto* leaf : split.leaves()) detail::add_piece(inv, leaf->graph, is_bipartite(leaf->graph));
  return inv;
}

// Enumeration path: every odd shore is tested against every perfect
// matching, and 2-cuts are found by scanning all shores.
namespace oracle {

namespace detail {

inline std::vector<VertexSet> shores_with_zero(std::size_t n) {
  std::vector<VertexSet> out;
  if (n < 2 || n > 24) throw CapExceeded("shore enumeration limited to 24 vertices");
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    VertexSet s{0};
    for (Vertex v = 1; v < n; ++v)
      if (mask >> (v - 1) & 1u) s.push_back(v);
    if (s.size() < n) out.push_back(std::move(s));
  }
  return out;
}

inline std::optional<Cut> first_nontrivial_tight(const Multigraph& g) {
  require_enumerable(g);
  std::vector<std::vector<EdgeIndex>> pms;
  for_each_perfect_matching(g, [&](const std::vector<EdgeIndex>& m) {
    pms.push_back(m);
    return true;
  });
  for (VertexSet& s : shores_with_zero(g.n())) {
    if (s.size() % 2 == 0 || s.size() < 3 || g.n() - s.size() < 3) continue;
    Cut c = cut_of(g, std::move(s));
    std::vector<bool> in_cut(g.m(), false);
    for (EdgeIndex e : c.edges) in_cut[e] = true;
    bool tight = std::all_of(pms.begin(), pms.end(), [&](const std::vector<EdgeIndex>& m) {
      std::size_t hit = 0;
      for (EdgeIndex e : m) hit += in_cut[e];
      return hit == 1;
    });
    if (tight) return c;
  }
  return std::nullopt;
}

inline void tight_leaves(const Multigraph& g, std::vector<Multigraph>& out) {
  auto c = first_nontrivial_tight(g);
  if (!c) {
    out.push_back(g);
    return;
  }
  tight_leaves(contract(g, c->other_shore(g.n())).graph, out);
  tight_leaves(contract(g, c->shore).graph, out);
}

inline std::optional<Cut> first_two_cut(const Multigraph& g) {
  for (VertexSet& s : shores_with_zero(g.n())) {
    Cut c = cut_of(g, std::move(s));
    if (c.size() == 2) return c;
  }
  return std::nullopt;
}

inline void pieces(const Multigraph& g, std::vector<Multigraph>& out) {
  auto c = first_two_cut(g);
  if (!c) {
    out.push_back(g);
    return;
  }
  auto [g1, g2] = marked_components(g, *c);
  pieces(g1.graph, out);
  pieces(g2.graph, out);
}

}  // namespace detail

inline std::vector<Multigraph> tight_cut_leaves(const Multigraph& g) {
  std::vector<Multigraph> out;
  detail::tight_leaves(g, out);
  return out;
}

inline std::vector<Multigraph> three_connected_pieces(const Multigraph& g) {
  std::vector<Multigraph> out;
  detail::pieces(g, out);
  return out;
}

inline InvariantBundle invariants(const Multigraph& g) {
  InvariantBundle inv;
  for (const Multigraph& leaf : oracle::tight_cut_leaves(g))
    cubmatch::detail::add_leaf(inv, leaf, is_bipartite(leaf));
  for (const Multigraph& piece : oracle::three_connected_pieces(g))
    cubmatch::detail::add_piece(inv, piece, is_bipartite(piece));
  return inv;
}

}  // namespace oracle

// ----------------------------------------------- B* across a 2-cut

enum class TwoCutCase { neither_theta = 1, one_theta = 2, both_theta = 3 };

struct TwoCutCheck {
  TwoCutCase which = TwoCutCase::neither_theta;
  bool bstar_matches = false;      // B*(G) equals the stated multiset union
  bool tight_sums_additive = false;  // b, beta, b', beta'
  bool piece_sums_additive = false;  // theta, theta-bar, n_nonbip
};

inline CanonicalForm c4_form() {
  return canonical_form(Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
}

inline TwoCutCheck check_bstar_across_2cut(const Multigraph& g, const Cut& c) {
  auto [g1, g2] = marked_components(g, c);
  const bool t1 = is_theta(g1.graph), t2 = is_theta(g2.graph);
  TwoCutCheck out;
  FormMultiset expect{c4_form()};
  if (t1 && t2) {
    out.which = TwoCutCase::both_theta;
  } else if (t1 || t2) {
    out.which = TwoCutCase::one_theta;
    auto rest = bricks_and_braces(t1 ? g2.graph : g1.graph);
    expect.insert(expect.end(), rest.begin(), rest.end());
  } else {
    out.which = TwoCutCase::neither_theta;
    auto r1 = bricks_and_braces(g1.graph), r2 = bricks_and_braces(g2.graph);
    expect.insert(expect.end(), r1.begin(), r1.end());
    expect.insert(expect.end(), r2.begin(), r2.end());
  }
  std::sort(expect.begin(), expect.end());
  out.bstar_matches = bricks_and_braces(g) == expect;
  if (out.which == TwoCutCase::both_theta)
    out.bstar_matches = out.bstar_matches && g.n() == 4;
  InvariantBundle all = invariants(g), i1 = invariants(g1.graph), i2 = invariants(g2.graph);
  out.tight_sums_additive = all.b == i1.b + i2.b && all.beta == i1.beta + i2.beta &&
                            all.b_prime == i1.b_prime + i2.b_prime &&
                            all.beta_prime == i1.beta_prime + i2.beta_prime;
  out.piece_sums_additive = all.theta == i1.theta + i2.theta &&
                            all.theta_bar == i1.theta_bar + i2.theta_bar &&
                            all.n_nonbip == i1.n_nonbip + i2.n_nonbip;
  return out;
}

// ---------------------------------------------------------------- barriers

struct Fragment {
  Multigraph graph;                // G / complement(J), contraction vertex last
  Vertex contraction_vertex = kNoVertex;
  VertexSet component;             // host vertices of J
  std::vector<Vertex> to_host;     // local -> host (kNoVertex at the contraction vertex)
};

struct BarrierDecomposition {
  Barrier barrier;
  Multigraph core;                 // A side = one vertex per component, then B
  std::vector<Vertex> core_a;      // fragment index -> core vertex
  std::vector<Vertex> core_b;      // index into barrier -> core vertex
  std::vector<Fragment> fragments; // ordered by least host vertex of the component
  std::vector<Cut> barrier_cuts;   // boundary of each component

  // Checks of the structural identities for this barrier.
  bool bstar_splits = false;       // B*(G) = B*(core) + B*(fragments of order >= 4)
  bool beta_splits = false;        // beta(G) = sum of fragment betas
  bool cuts_tight = false;         // every barrier cut is tight
  bool pieces_cubic_3conn = false; // core and fragments cubic with kappa >= 3
};

inline BarrierDecomposition barrier_decomposition(const Multigraph& g, const Barrier& b, bool run_checks = true) {
  if (!is_cubic(g) || !is_connected(g) || vertex_connectivity(g) < 3)
    throw GraphError("barrier decomposition needs a 3-connected cubic graph");
  if (b.vertices.empty() || !is_barrier(g, b.vertices)) throw GraphError("not a barrier");
  BarrierDecomposition d;
  d.barrier = b;
  std::vector<bool> alive(g.n(), true);
  for (Vertex v : b.vertices) alive[v] = false;
  auto [comp, count] = components(g, &alive);
  std::vector<VertexSet> members(count);
  for (Vertex v = 0; v < g.n(); ++v)
    if (alive[v]) members[comp[v]].push_back(v);
  std::sort(members.begin(), members.end());
  for (const auto& m : members)
    if (m.size() % 2 == 0) throw GraphError("barrier leaves an even component");

  // Core: components first, then barrier vertices.
  std::vector<Vertex> to_core(g.n(), kNoVertex);
  for (std::size_t i = 0; i < members.size(); ++i) {
    d.core_a.push_back(i);
    for (Vertex v : members[i]) to_core[v] = i;
  }
  for (std::size_t j = 0; j < b.vertices.size(); ++j) {
    d.core_b.push_back(members.size() + j);
    to_core[b.vertices[j]] = members.size() + j;
  }
  d.core = Multigraph(members.size() + b.vertices.size());
  for (const Edge& e : g.edges())
    if (to_core[e.u] != to_core[e.v]) d.core.add_edge(to_core[e.u], to_core[e.v], e.id);

  for (const auto& m : members) {
    Contraction c = contract(g, complement(g.n(), m));
    d.fragments.push_back({std::move(c.graph), c.contraction_vertex, m, std::move(c.to_host)});
    d.barrier_cuts.push_back(cut_of(g, m));
  }
  if (!run_checks) return d;

  d.cuts_tight = std::all_of(d.barrier_cuts.begin(), d.barrier_cuts.end(),
                             [&](const Cut& c) { return is_tight_cut(g, c); });
  auto ok3 = [](const Multigraph& h) { return is_cubic(h) && vertex_connectivity(h) >= 3; };
  d.pieces_cubic_3conn = ok3(d.core) && std::all_of(d.fragments.begin(), d.fragments.end(),
                                                    [&](const Fragment& f) { return ok3(f.graph); });
  FormMultiset expect = bricks_and_braces(d.core);
  std::size_t beta_sum = 0;
  for (const Fragment& f : d.fragments) {
    auto inv = invariants(f.graph);
    beta_sum += inv.beta;
    if (f.graph.n() >= 4) {
      auto r = bricks_and_braces(f.graph);
      expect.insert(expect.end(), r.begin(), r.end());
    }
  }
  std::sort(expect.begin(), expect.end());
  d.bstar_splits = bricks_and_braces(g) == expect;
  d.beta_splits = invariants(g).beta == beta_sum;
  return d;
}

// Lambda(G) rebuilt from fragment profiles and core pairs.
inline VertexSet lambda_via_barrier(const Multigraph& g, const Barrier& b) {
  BarrierDecomposition d = barrier_decomposition(g, b, false);
  VertexSet out;
  std::vector<bool> a_prime(d.fragments.size(), false);
  for (std::size_t i = 0; i < d.fragments.size(); ++i) {
    const Fragment& f = d.fragments[i];
    for (Vertex v = 0; v < f.graph.n(); ++v) {
      if (!is_lambda_matchable_vertex(f.graph, v)) continue;
      if (v == f.contraction_vertex)
        a_prime[i] = true;
      else
        out.push_back(f.to_host[v]);
    }
  }
  for (std::size_t j = 0; j < d.core_b.size(); ++j)
    for (std::size_t i = 0; i < d.fragments.size(); ++i)
      if (a_prime[i] && is_lambda_matchable_pair(d.core, d.core_a[i], d.core_b[j])) {
        out.push_back(b.vertices[j]);
        break;
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cubmatch
