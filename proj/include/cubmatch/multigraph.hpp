#pragma once

// Loopless undirected multigraphs, cuts, connectivity and cut contraction.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubmatch {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;
using EdgeId = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  EdgeId id = 0;  // stable label, survives contraction and marking

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool has(Vertex w) const { return u == w || v == w; }
};

class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t n) : incident_(n) {}

  Multigraph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges)
      : incident_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }
  Multigraph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : incident_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  // Adds an edge; the id defaults to the next unused label.
  EdgeIndex add_edge(Vertex u, Vertex v, std::optional<EdgeId> id = std::nullopt) {
    if (u >= n() || v >= n()) throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("loops are not allowed");
    EdgeId label = id ? *id : next_id_;
    next_id_ = std::max<EdgeId>(next_id_, label + 1);
    EdgeIndex e = edges_.size();
    edges_.push_back(Edge{std::min(u, v), std::max(u, v), label});
    incident_[u].push_back(e);
    incident_[v].push_back(e);
    return e;
  }

  std::size_t n() const { return incident_.size(); }
  std::size_t m() const { return edges_.size(); }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const EdgeIndex> incident(Vertex v) const { return incident_[v]; }
  std::size_t degree(Vertex v) const { return incident_[v].size(); }
  EdgeId next_id() const { return next_id_; }

  std::size_t multiplicity(Vertex u, Vertex v) const {
    std::size_t k = 0;
    for (EdgeIndex e : incident_[u])
      if (edges_[e].other(u) == v) ++k;
    return k;
  }

  // Distinct neighbours, sorted.
  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(incident_[v].size());
    for (EdgeIndex e : incident_[v]) out.push_back(edges_[e].other(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::optional<EdgeIndex> find_edge_by_id(EdgeId id) const {
    for (EdgeIndex e = 0; e < edges_.size(); ++e)
      if (edges_[e].id == id) return e;
    return std::nullopt;
  }

  bool is_simple() const {
    for (Vertex v = 0; v < n(); ++v)
      if (neighbors(v).size() != degree(v)) return false;
    return true;
  }

  // Endpoint lists compare equal, ids ignored.
  bool same_edges(const Multigraph& o) const {
    if (n() != o.n() || m() != o.m()) return false;
    for (EdgeIndex e = 0; e < m(); ++e)
      if (edges_[e].u != o.edges_[e].u || edges_[e].v != o.edges_[e].v) return false;
    return true;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incident_;
  EdgeId next_id_ = 0;
};

using VertexSet = std::vector<Vertex>;  // sorted, duplicate free

inline std::vector<bool> to_mask(std::size_t n, std::span<const Vertex> set) {
  std::vector<bool> mask(n, false);
  for (Vertex v : set) mask.at(v) = true;
  return mask;
}

inline VertexSet complement(std::size_t n, std::span<const Vertex> set) {
  auto mask = to_mask(n, set);
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (!mask[v]) out.push_back(v);
  return out;
}

struct Cut {
  VertexSet shore;                // X
  std::vector<EdgeIndex> edges;   // ∂(X), ascending edge index

  std::size_t size() const { return edges.size(); }
  VertexSet other_shore(std::size_t n) const { return complement(n, shore); }
  bool is_trivial(std::size_t n) const { return shore.size() <= 1 || n - shore.size() <= 1; }
  bool is_odd() const { return shore.size() % 2 == 1; }
  bool contains(Vertex v) const { return std::binary_search(shore.begin(), shore.end(), v); }

  // The shore containing vertex 0, i.e. the lexicographically least one.
  VertexSet canonical_shore(std::size_t n) const {
    if (!shore.empty() && shore.front() == 0) return shore;
    return other_shore(n);
  }
};

inline bool is_cubic(const Multigraph& g) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

inline Cut cut_of(const Multigraph& g, VertexSet shore) {
  std::sort(shore.begin(), shore.end());
  shore.erase(std::unique(shore.begin(), shore.end()), shore.end());
  if (shore.empty() || shore.size() >= g.n())
    throw GraphError("cut shore must be a nonempty proper subset of the vertices");
  if (shore.back() >= g.n()) throw GraphError("cut shore vertex out of range");
  auto mask = to_mask(g.n(), shore);
  Cut c;
  c.shore = std::move(shore);
  for (EdgeIndex e = 0; e < g.m(); ++e)
    if (mask[g.edge(e).u] != mask[g.edge(e).v]) c.edges.push_back(e);
  return c;
}

// Component label per vertex (kNoVertex for vertices outside `alive`), and count.
inline std::pair<std::vector<std::size_t>, std::size_t> components(
    const Multigraph& g, const std::vector<bool>* alive = nullptr,
    const std::vector<bool>* edge_removed = nullptr) {
  std::vector<std::size_t> comp(g.n(), kNoVertex);
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] != kNoVertex || (alive && !(*alive)[s])) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeIndex e : g.incident(v)) {
        if (edge_removed && (*edge_removed)[e]) continue;
        Vertex w = g.edge(e).other(v);
        if (comp[w] != kNoVertex || (alive && !(*alive)[w])) continue;
        comp[w] = count;
        stack.push_back(w);
      }
    }
    ++count;
  }
  return {std::move(comp), count};
}

inline bool is_connected(const Multigraph& g) {
  return g.n() > 0 && components(g).second == 1;
}

inline bool induces_connected(const Multigraph& g, std::span<const Vertex> set) {
  if (set.empty()) return false;
  auto alive = to_mask(g.n(), set);
  return components(g, &alive).second == 1;
}

// Number of odd components of g - removed.
inline std::size_t odd_components(const Multigraph& g, std::span<const Vertex> removed) {
  std::vector<bool> alive(g.n(), true);
  for (Vertex v : removed) alive.at(v) = false;
  auto [comp, count] = components(g, &alive);
  std::vector<std::size_t> size(count, 0);
  for (Vertex v = 0; v < g.n(); ++v)
    if (alive[v]) ++size[comp[v]];
  return static_cast<std::size_t>(
      std::count_if(size.begin(), size.end(), [](std::size_t s) { return s % 2 == 1; }));
}

struct Bipartition {
  VertexSet a;  // contains vertex 0
  VertexSet b;
  std::vector<std::uint8_t> side;  // 0 for A, 1 for B

  bool in_a(Vertex v) const { return side[v] == 0; }
};

inline std::optional<Bipartition> bipartition(const Multigraph& g) {
  std::vector<int> color(g.n(), -1);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeIndex e : g.incident(v)) {
        Vertex w = g.edge(e).other(v);
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition p;
  p.side.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    p.side[v] = static_cast<std::uint8_t>(color[v]);
    (color[v] == 0 ? p.a : p.b).push_back(v);
  }
  return p;
}

inline bool is_bipartite(const Multigraph& g) { return bipartition(g).has_value(); }

namespace detail {

// Unit-capacity max flow on a small directed network, stopping at `limit`.
class UnitFlow {
 public:
  explicit UnitFlow(std::size_t nodes) : head_(nodes, kNone) {}

  void add_arc(std::size_t from, std::size_t to, int cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = arcs_.size() - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = arcs_.size() - 1;
  }

  int max_flow(std::size_t s, std::size_t t, int limit) {
    int flow = 0;
    while (flow < limit) {
      std::vector<std::size_t> via(head_.size(), kNone);
      std::vector<bool> seen(head_.size(), false);
      std::queue<std::size_t> q;
      q.push(s);
      seen[s] = true;
      while (!q.empty() && !seen[t]) {
        std::size_t x = q.front();
        q.pop();
        for (std::size_t a = head_[x]; a != kNone; a = arcs_[a].next) {
          if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
            seen[arcs_[a].to] = true;
            via[arcs_[a].to] = a;
            q.push(arcs_[a].to);
          }
        }
      }
      if (!seen[t]) break;
      for (std::size_t x = t; x != s; x = arcs_[via[x] ^ 1].to) {
        arcs_[via[x]].cap -= 1;
        arcs_[via[x] ^ 1].cap += 1;
      }
      ++flow;
    }
    return flow;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  struct Arc {
    std::size_t to;
    std::size_t next;
    int cap;
  };
  std::vector<Arc> arcs_;
  std::vector<std::size_t> head_;
};

inline void require_connected(const Multigraph& g) {
  if (!is_connected(g)) throw GraphError("graph must be connected");
}

}  // namespace detail

inline std::size_t edge_connectivity(const Multigraph& g) {
  detail::require_connected(g);
  if (g.n() == 1) return 0;
  int best = std::numeric_limits<int>::max();
  for (Vertex t = 1; t < g.n(); ++t) {
    detail::UnitFlow f(g.n());
    for (const Edge& e : g.edges()) {
      f.add_arc(e.u, e.v, 1);
      f.add_arc(e.v, e.u, 1);
    }
    best = std::min(best, f.max_flow(0, t, best));
  }
  return static_cast<std::size_t>(best);
}

// Vertex connectivity. Multigraphs on at most two vertices take their edge
// connectivity, so the two-vertex triple edge counts as 3-connected.
inline std::size_t vertex_connectivity(const Multigraph& g) {
  detail::require_connected(g);
  if (g.n() <= 2) return edge_connectivity(g);
  const std::size_t n = g.n();
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adjacent[e.u][e.v] = adjacent[e.v][e.u] = true;
  int best = static_cast<int>(n - 1);
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (adjacent[s][t]) continue;
      // v_in = 2v, v_out = 2v + 1
      detail::UnitFlow f(2 * n);
      for (Vertex v = 0; v < n; ++v) f.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? 1 << 20 : 1);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
          if (adjacent[u][v]) f.add_arc(2 * u + 1, 2 * v, 1 << 20);
      best = std::min(best, f.max_flow(2 * s + 1, 2 * t, best));
    }
  }
  return static_cast<std::size_t>(best);
}

// All cuts with exactly k edges whose shores both induce connected subgraphs,
// each reported once with the shore that contains vertex 0, ordered by shore.
inline std::vector<Cut> enumerate_small_cuts(const Multigraph& g, std::size_t k) {
  std::vector<Cut> out;
  const std::size_t m = g.m();
  if (k == 0 || k > m || g.n() < 2) return out;
  std::vector<EdgeIndex> pick(k);
  std::vector<bool> removed(m, false);
  auto visit = [&]() {
    auto [comp, count] = components(g, nullptr, &removed);
    if (count != 2) return;
    for (EdgeIndex e : pick)
      if (comp[g.edge(e).u] == comp[g.edge(e).v]) return;
    // Also every edge with ends in different components must be picked.
    for (EdgeIndex e = 0; e < m; ++e)
      if (!removed[e] && comp[g.edge(e).u] != comp[g.edge(e).v]) return;
    Cut c;
    for (Vertex v = 0; v < g.n(); ++v)
      if (comp[v] == comp[0]) c.shore.push_back(v);
    c.edges = pick;
    out.push_back(std::move(c));
  };
  // Lexicographic k-subsets of edge indices.
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    for (EdgeIndex e : pick) removed[e] = true;
    visit();
    for (EdgeIndex e : pick) removed[e] = false;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end(), [](const Cut& x, const Cut& y) { return x.shore < y.shore; });
  return out;
}

// G/X -> x : the shore is shrunk into one contraction vertex, appended last.
struct Contraction {
  Multigraph graph;
  Vertex contraction_vertex = kNoVertex;
  std::vector<Vertex> to_host;    // local vertex -> host vertex (kNoVertex for the contraction vertex)
  std::vector<Vertex> from_host;  // host vertex -> local vertex (contraction vertex for shrunk ones)
  std::vector<EdgeIndex> host_edge;  // local edge -> host edge
};

inline Contraction contract(const Multigraph& g, std::span<const Vertex> shrink) {
  auto mask = to_mask(g.n(), shrink);
  Contraction c;
  c.from_host.assign(g.n(), kNoVertex);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (mask[v]) continue;
    c.from_host[v] = c.to_host.size();
    c.to_host.push_back(v);
  }
  c.contraction_vertex = c.to_host.size();
  c.to_host.push_back(kNoVertex);
  for (Vertex v = 0; v < g.n(); ++v)
    if (mask[v]) c.from_host[v] = c.contraction_vertex;
  c.graph = Multigraph(c.to_host.size());
  for (EdgeIndex e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    if (mask[ed.u] && mask[ed.v]) continue;
    c.graph.add_edge(c.from_host[ed.u], c.from_host[ed.v], ed.id);
    c.host_edge.push_back(e);
  }
  return c;
}

// Induced subgraph on `keep`, vertices renumbered in increasing order.
struct Subgraph {
  Multigraph graph;
  std::vector<Vertex> to_host;
  std::vector<Vertex> from_host;
};

inline Subgraph induced_subgraph(const Multigraph& g, std::span<const Vertex> keep) {
  Subgraph s;
  auto mask = to_mask(g.n(), keep);
  s.from_host.assign(g.n(), kNoVertex);
  for (Vertex v = 0; v < g.n(); ++v)
    if (mask[v]) {
      s.from_host[v] = s.to_host.size();
      s.to_host.push_back(v);
    }
  s.graph = Multigraph(s.to_host.size());
  for (const Edge& e : g.edges())
    if (mask[e.u] && mask[e.v]) s.graph.add_edge(s.from_host[e.u], s.from_host[e.v], e.id);
  return s;
}

}  // namespace cubmatch
