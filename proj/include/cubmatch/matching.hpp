#pragma once

// Perfect matchings, matchability probes, barriers and bicriticality.
//
// Two engines live here: an augmenting-path search with blossom shrinking for
// decisions, and exhaustive depth-first enumeration used as the oracle.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "cubmatch/multigraph.hpp"

namespace cubmatch {

enum class CertificateKind { perfect, vertex, pair };

// Edge set (host edge indices, ascending) witnessing a perfect matching, a
// v-matching or an (a,b)-matching.
struct MatchingCertificate {
  CertificateKind kind = CertificateKind::perfect;
  std::vector<EdgeIndex> edges;
  std::vector<Vertex> centers;  // empty, {v} or {a, b}

  std::vector<std::size_t> target_degrees(std::size_t n) const {
    std::vector<std::size_t> want(n, 1);
    for (Vertex c : centers) want.at(c) = 3;
    return want;
  }

  bool validate(const Multigraph& g) const {
    std::vector<std::size_t> deg(g.n(), 0);
    std::vector<bool> used(g.m(), false);
    for (EdgeIndex e : edges) {
      if (e >= g.m() || used[e]) return false;
      used[e] = true;
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    return deg == target_degrees(g.n());
  }
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration refuses graphs above this order; CUBMATCH_MAX_N overrides 24.
inline std::size_t enumeration_cap() {
  if (const char* env = std::getenv("CUBMATCH_MAX_N")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 24;
}

namespace detail {

// Edmonds' blossom algorithm on the underlying simple graph restricted to
// the alive vertices.
class Blossom {
 public:
  Blossom(const Multigraph& g, const std::vector<bool>& alive)
      : n_(g.n()), adj_(n_), alive_(alive), match_(n_, kNoVertex) {
    for (Vertex v = 0; v < n_; ++v) {
      if (!alive_[v]) continue;
      for (Vertex w : g.neighbors(v))
        if (alive_[w]) adj_[v].push_back(w);
    }
  }

  std::size_t run() {
    // Greedy start.
    for (Vertex v = 0; v < n_; ++v) {
      if (!alive_[v] || match_[v] != kNoVertex) continue;
      for (Vertex w : adj_[v])
        if (match_[w] == kNoVertex) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (!alive_[v] || match_[v] != kNoVertex) continue;
      Vertex end = find_path(v);
      while (end != kNoVertex) {
        Vertex pv = parent_[end];
        Vertex ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    std::size_t size = 0;
    for (Vertex v = 0; v < n_; ++v)
      if (match_[v] != kNoVertex && v < match_[v]) ++size;
    return size;
  }

  const std::vector<Vertex>& mate() const { return match_; }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNoVertex) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    used_.assign(n_, false);
    parent_.assign(n_, kNoVertex);
    base_.resize(n_);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNoVertex && parent_[match_[to]] != kNoVertex)) {
          Vertex cur = lca(v, to);
          in_blossom_.assign(n_, false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!alive_[i] || !in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = true;
              q.push(i);
            }
          }
        } else if (parent_[to] == kNoVertex) {
          parent_[to] = v;
          if (match_[to] == kNoVertex) return to;
          Vertex next = match_[to];
          used_[next] = true;
          q.push(next);
        }
      }
    }
    return kNoVertex;
  }

  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<bool> alive_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

inline std::vector<bool> alive_without(std::size_t n, std::span<const Vertex> removed) {
  std::vector<bool> alive(n, true);
  for (Vertex v : removed) alive.at(v) = false;
  return alive;
}

}  // namespace detail

// Size of a maximum matching of g - removed.
inline std::size_t maximum_matching_size(const Multigraph& g, std::span<const Vertex> removed = {}) {
  return detail::Blossom(g, detail::alive_without(g.n(), removed)).run();
}

// Whether g - removed has a perfect matching.
inline bool is_matchable_without(const Multigraph& g, std::span<const Vertex> removed) {
  std::vector<bool> alive = detail::alive_without(g.n(), removed);
  std::size_t live = static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
  if (live % 2 == 1) return false;
  if (live == 0) return true;
  return 2 * detail::Blossom(g, alive).run() == live;
}

inline bool has_perfect_matching(const Multigraph& g) { return is_matchable_without(g, {}); }

// Perfect matching of g - removed, as host edge indices (first parallel copy).
inline std::optional<std::vector<EdgeIndex>> perfect_matching_without(
    const Multigraph& g, std::span<const Vertex> removed) {
  std::vector<bool> alive = detail::alive_without(g.n(), removed);
  std::size_t live = static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
  if (live % 2 == 1) return std::nullopt;
  detail::Blossom b(g, alive);
  if (2 * b.run() != live) return std::nullopt;
  std::vector<EdgeIndex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    Vertex w = b.mate()[v];
    if (w == kNoVertex || w < v) continue;
    for (EdgeIndex e : g.incident(v))
      if (g.edge(e).other(v) == w) {
        out.push_back(e);
        break;
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<MatchingCertificate> find_perfect_matching(const Multigraph& g) {
  auto pm = perfect_matching_without(g, {});
  if (!pm) return std::nullopt;
  return MatchingCertificate{CertificateKind::perfect, std::move(*pm), {}};
}

// Every spanning subgraph in which vertex v has degree target[v]. The
// callback returns false to stop. Each subgraph is produced exactly once.
inline void for_each_factor(const Multigraph& g, const std::vector<std::size_t>& target,
                            const std::function<bool(const std::vector<EdgeIndex>&)>& visit) {
  std::vector<std::size_t> need = target;
  for (Vertex v = 0; v < g.n(); ++v)
    if (need[v] > g.degree(v)) return;
  std::vector<EdgeIndex> chosen;
  std::vector<bool> used(g.m(), false);
  bool stop = false;

  std::function<void()> rec = [&]() {
    if (stop) return;
    Vertex v = kNoVertex;
    for (Vertex w = 0; w < g.n(); ++w)
      if (need[w] > 0) {
        v = w;
        break;
      }
    if (v == kNoVertex) {
      std::vector<EdgeIndex> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      if (!visit(sorted)) stop = true;
      return;
    }
    std::vector<EdgeIndex> options;
    for (EdgeIndex e : g.incident(v))
      if (!used[e] && need[g.edge(e).other(v)] > 0) options.push_back(e);
    const std::size_t k = need[v];
    if (options.size() < k) return;
    // All k-subsets of options; a parallel pair to the same neighbour
    // needs that neighbour to have enough remaining degree.
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (!stop) {
      bool ok = true;
      std::vector<std::pair<Vertex, std::size_t>> taken;
      for (std::size_t i : pick) {
        Vertex w = g.edge(options[i]).other(v);
        if (need[w] == 0) {
          ok = false;
          break;
        }
        --need[w];
        taken.emplace_back(w, options[i]);
      }
      if (ok) {
        for (auto& [w, e] : taken) {
          used[e] = true;
          chosen.push_back(e);
        }
        need[v] = 0;
        rec();
        need[v] = k;
        for (auto& [w, e] : taken) {
          used[e] = false;
          chosen.pop_back();
        }
      }
      for (auto& [w, e] : taken) ++need[w];
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == options.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  };
  rec();
}

inline std::optional<std::vector<EdgeIndex>> find_factor(const Multigraph& g,
                                                         const std::vector<std::size_t>& target) {
  std::optional<std::vector<EdgeIndex>> found;
  for_each_factor(g, target, [&](const std::vector<EdgeIndex>& f) {
    found = f;
    return false;
  });
  return found;
}

inline void require_enumerable(const Multigraph& g) {
  if (g.n() > enumeration_cap())
    throw CapExceeded("graph order " + std::to_string(g.n()) + " exceeds enumeration cap " +
                      std::to_string(enumeration_cap()));
}

inline void for_each_perfect_matching(const Multigraph& g,
                                      const std::function<bool(const std::vector<EdgeIndex>&)>& visit) {
  require_enumerable(g);
  if (g.n() % 2 == 1) return;
  for_each_factor(g, std::vector<std::size_t>(g.n(), 1), visit);
}

inline std::vector<MatchingCertificate> enumerate_perfect_matchings(const Multigraph& g) {
  std::vector<MatchingCertificate> out;
  for_each_perfect_matching(g, [&](const std::vector<EdgeIndex>& m) {
    out.push_back({CertificateKind::perfect, m, {}});
    return true;
  });
  return out;
}

inline std::size_t count_perfect_matchings(const Multigraph& g) {
  std::size_t count = 0;
  for_each_perfect_matching(g, [&](const std::vector<EdgeIndex>&) {
    ++count;
    return true;
  });
  return count;
}

inline bool is_matching_covered(const Multigraph& g) {
  if (g.n() < 2 || !is_connected(g)) return false;
  for (const Edge& e : g.edges()) {
    Vertex ends[2] = {e.u, e.v};
    if (!is_matchable_without(g, ends)) return false;
  }
  return true;
}

inline bool is_matchable_pair(const Multigraph& g, Vertex u, Vertex v) {
  if (u == v) throw GraphError("matchable pair needs distinct vertices");
  Vertex ends[2] = {u, v};
  return is_matchable_without(g, ends);
}

struct Barrier {
  VertexSet vertices;

  std::size_t size() const { return vertices.size(); }
  bool contains(Vertex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
};

// c_odd(g - B) == |B|.
inline bool is_barrier(const Multigraph& g, std::span<const Vertex> set) {
  return odd_components(g, set) == set.size();
}

// Vertices missed by some maximum matching of g - removed.
inline VertexSet deficient_vertices(const Multigraph& g, std::span<const Vertex> removed) {
  std::vector<Vertex> base(removed.begin(), removed.end());
  const std::size_t nu = maximum_matching_size(g, base);
  std::vector<bool> gone = to_mask(g.n(), base);
  VertexSet out;
  for (Vertex w = 0; w < g.n(); ++w) {
    if (gone[w]) continue;
    base.push_back(w);
    if (maximum_matching_size(g, base) == nu) out.push_back(w);
    base.pop_back();
  }
  return out;
}

// Tutte set of maximum deficiency for g - removed: the neighbours of the
// deficient vertices that are not themselves deficient.
inline VertexSet maximum_violator(const Multigraph& g, std::span<const Vertex> removed) {
  VertexSet d = deficient_vertices(g, removed);
  std::vector<bool> gone = to_mask(g.n(), removed);
  std::vector<bool> in_d = to_mask(g.n(), d);
  std::vector<bool> in_s(g.n(), false);
  for (Vertex v : d)
    for (EdgeIndex e : g.incident(v)) {
      Vertex w = g.edge(e).other(v);
      if (!gone[w] && !in_d[w]) in_s[w] = true;
    }
  VertexSet s;
  for (Vertex v = 0; v < g.n(); ++v)
    if (in_s[v]) s.push_back(v);
  return s;
}

inline VertexSet sorted_union(VertexSet a, std::span<const Vertex> b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// A barrier containing u and v when g - u - v is not matchable.
inline std::optional<Barrier> find_barrier_containing(const Multigraph& g, Vertex u, Vertex v) {
  if (u == v) throw GraphError("barrier search needs distinct vertices");
  Vertex ends[2] = {std::min(u, v), std::max(u, v)};
  if (is_matchable_without(g, ends)) return std::nullopt;
  Barrier b{sorted_union(maximum_violator(g, ends), ends)};
  if (!is_barrier(g, b.vertices)) return std::nullopt;  // host not matchable
  return b;
}

// First barrier of size two or more over pairs in lexicographic order.
inline std::optional<Barrier> find_nontrivial_barrier(const Multigraph& g) {
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (auto b = find_barrier_containing(g, u, v)) return b;
  return std::nullopt;
}

// Distinct barriers produced by the pair scan, in discovery order.
inline std::vector<Barrier> pair_barriers(const Multigraph& g) {
  std::vector<Barrier> out;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (auto b = find_barrier_containing(g, u, v)) {
        bool seen = std::any_of(out.begin(), out.end(),
                                [&](const Barrier& x) { return x.vertices == b->vertices; });
        if (!seen) out.push_back(std::move(*b));
      }
  return out;
}

// All barriers by subset enumeration (oracle; small n only).
inline std::vector<Barrier> all_barriers(const Multigraph& g, std::size_t min_size = 1) {
  std::vector<Barrier> out;
  if (g.n() > 20) throw CapExceeded("barrier enumeration limited to 20 vertices");
  for (std::uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
    VertexSet s;
    for (Vertex v = 0; v < g.n(); ++v)
      if (mask >> v & 1u) s.push_back(v);
    if (s.size() >= min_size && is_barrier(g, s)) out.push_back({std::move(s)});
  }
  std::sort(out.begin(), out.end(),
            [](const Barrier& a, const Barrier& b) { return a.vertices < b.vertices; });
  return out;
}

inline bool is_bicritical(const Multigraph& g) {
  if (g.n() < 4) return false;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!is_matchable_pair(g, u, v)) return false;
  return true;
}

inline bool is_brick(const Multigraph& g) {
  return is_connected(g) && is_bicritical(g) && vertex_connectivity(g) >= 3;
}

}  // namespace cubmatch
