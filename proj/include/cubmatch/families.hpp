#pragma once

// Tight-example families: generators with build recipes (FamilyWitness),
// structural recognizers, and recipe replay.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubmatch/canonical.hpp"
#include "cubmatch/constructions.hpp"
#include "cubmatch/decomposition.hpp"
#include "cubmatch/lambda.hpp"
#include "cubmatch/matching.hpp"
#include "cubmatch/multigraph.hpp"

namespace cubmatch {

enum class Family { J, K, Kprime, L, G, Gprime, N, Nprime };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::J: return "J";
    case Family::K: return "K";
    case Family::Kprime: return "Kprime";
    case Family::L: return "L";
    case Family::G: return "G";
    case Family::Gprime: return "Gprime";
    case Family::N: return "N";
    case Family::Nprime: return "Nprime";
  }
  return "?";
}

inline std::optional<Family> family_from_string(const std::string& s) {
  for (Family f : {Family::J, Family::K, Family::Kprime, Family::L, Family::G, Family::Gprime, Family::N,
                   Family::Nprime})
    if (s == to_string(f)) return f;
  return std::nullopt;
}

// Rules:
//   base      graph is K33 (K), a simple brace (J), a brick (G, N), Theta, or
//             a bipartite 3-connected piece (allowed inside Gprime)
//   splice    graph = host spliced at each attachment with the child's graph
//   pieces    children certify the 3-connected pieces of graph
struct FamilyWitness {
  struct Attachment {
    Vertex at = 0;            // host vertex
    Vertex child_vertex = 0;  // vertex of children[child]
    std::size_t child = 0;
    std::vector<std::pair<EdgeId, EdgeId>> pi;  // (host-side edge id, child edge id)
  };

  Family family = Family::K;
  std::string rule;  // "K33", "brace", "brick", "theta", "bipartite", "splice", "pieces"
  Multigraph graph;
  std::optional<Vertex> x_vertex;  // N: X = {x_vertex}; unset means X = V
  Multigraph host;
  std::vector<Attachment> attachments;
  std::vector<Vertex> a0, a1;  // N: host vertices
  std::vector<FamilyWitness> children;
};

// ------------------------------------------------------------ replay

namespace detail {

inline SpliceMap splice_map_from_ids(const Multigraph& g, Vertex u, const Multigraph& h, Vertex v,
                                     const std::vector<std::pair<EdgeId, EdgeId>>& ids) {
  SpliceMap pi;
  for (auto [gi, hi] : ids) {
    std::optional<EdgeIndex> ge, he;
    for (EdgeIndex e : g.incident(u))
      if (g.edge(e).id == gi) ge = e;
    for (EdgeIndex e : h.incident(v))
      if (h.edge(e).id == hi) he = e;
    if (!ge || !he) throw GraphError("witness splice map names an edge not at the splice vertex");
    pi.emplace_back(*ge, *he);
  }
  return pi;
}

inline std::vector<std::pair<EdgeId, EdgeId>> ids_of(const Multigraph& g, const Multigraph& h, const SpliceMap& pi) {
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (auto [a, b] : pi) out.emplace_back(g.edge(a).id, h.edge(b).id);
  return out;
}

}  // namespace detail

struct Replayed {
  Multigraph graph;
  std::optional<Vertex> x_vertex;
};

// Rebuilds the graph of a splice recipe from host and children graphs.
inline Replayed replay_splice(const FamilyWitness& w) {
  Replayed out{w.host, std::nullopt};
  std::vector<Vertex> where(w.host.n());
  for (Vertex v = 0; v < w.host.n(); ++v) where[v] = v;
  for (const auto& a : w.attachments) {
    const Multigraph& child = w.children.at(a.child).graph;
    Vertex here = where.at(a.at);
    if (here == kNoVertex) throw GraphError("witness splices a vertex twice");
    SpliceResult r = splice(out.graph, here, child, a.child_vertex,
                            detail::splice_map_from_ids(out.graph, here, child, a.child_vertex, a.pi));
    for (Vertex& v : where) v = v == kNoVertex ? kNoVertex : r.from_g[v];
    out.graph = std::move(r.graph);
  }
  if (!w.a1.empty()) out.x_vertex = where.at(w.a1.front());
  return out;
}

namespace detail {

inline CanonicalForm marked_form(const Multigraph& g, std::optional<Vertex> x) {
  std::vector<std::uint32_t> tint(g.n(), 0);
  if (x) tint.at(*x) = 1;
  return canonical_form(g, std::move(tint));
}

inline bool is_three_connected_cubic(const Multigraph& g) {
  return is_cubic(g) && is_connected(g) && vertex_connectivity(g) >= 3;
}

inline bool is_brace_graph(const Multigraph& g) {
  return is_bipartite(g) && is_cubic(g) && is_connected(g) && edge_connectivity(g) >= 2 &&
         !find_nontrivial_tight_cut(g);
}

}  // namespace detail

// Checks every rule of the recipe, recursively; true iff the witness proves
// membership of w.graph (with w.x_vertex for N).
inline bool validate_witness(const FamilyWitness& w) {
  const Multigraph& g = w.graph;
  if (w.rule == "theta") return is_theta(g);
  if (w.rule == "K33") return w.family == Family::K && are_isomorphic(g, k33_graph());
  if (w.rule == "brace") return w.family == Family::J && g.is_simple() && detail::is_brace_graph(g);
  if (w.rule == "bipartite") return w.family == Family::Gprime && is_bipartite(g) && detail::is_three_connected_cubic(g);
  if (w.rule == "brick")
    return (w.family == Family::G || w.family == Family::N) && !w.x_vertex && is_cubic(g) && is_brick(g);
  if (w.rule == "pieces") {
    if (!is_cubic(g) || !is_connected(g) || edge_connectivity(g) < 2) return false;
    FormMultiset want, have;
    for (const Multigraph& p : three_connected_pieces(g)) want.push_back(canonical_form(p));
    for (const FamilyWitness& c : w.children) {
      if (!validate_witness(c)) return false;
      have.push_back(canonical_form(c.graph));
      bool allowed = false;
      switch (w.family) {
        case Family::Kprime: allowed = c.family == Family::K || c.rule == "theta"; break;
        case Family::L: allowed = c.family == Family::J || c.family == Family::K || c.rule == "theta"; break;
        case Family::Gprime: allowed = c.family == Family::G || c.rule == "bipartite"; break;
        case Family::Nprime: allowed = c.family == Family::N && !c.x_vertex; break;
        default: break;
      }
      if (!allowed) return false;
    }
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    return want == have;
  }
  if (w.rule != "splice") return false;

  for (const FamilyWitness& c : w.children)
    if (!validate_witness(c)) return false;
  const Multigraph& h = w.host;
  auto parts = bipartition(h);
  if (!parts || !detail::is_three_connected_cubic(h)) return false;
  std::vector<bool> attached(h.n(), false);
  for (const auto& a : w.attachments) {
    if (a.at >= h.n() || attached[a.at]) return false;
    attached[a.at] = true;
  }
  switch (w.family) {
    case Family::K: {
      if (!are_isomorphic(h, k33_graph()) || w.attachments.size() != 1) return false;
      const auto& a = w.attachments.front();
      const FamilyWitness& c = w.children.at(a.child);
      if (c.family != Family::K || partner_count(c.graph, a.child_vertex) != 3) return false;
      break;
    }
    case Family::G: {
      // Attachments cover exactly one colour class.
      const int cls = w.attachments.empty() ? 0 : parts->side[w.attachments.front().at];
      for (Vertex v = 0; v < h.n(); ++v)
        if (attached[v] != (parts->side[v] == cls)) return false;
      for (const auto& a : w.attachments)
        if (w.children.at(a.child).family != Family::G) return false;
      break;
    }
    case Family::N: {
      if (is_theta(h) || w.a1.size() > 1) return false;
      std::vector<bool> in_a0(h.n(), false), in_a1(h.n(), false);
      for (Vertex v : w.a0) in_a0.at(v) = true;
      for (Vertex v : w.a1) in_a1.at(v) = true;
      const int cls = w.a0.empty() ? 0 : parts->side[w.a0.front()];
      for (Vertex v = 0; v < h.n(); ++v) {
        const bool in_class = parts->side[v] == cls;
        if ((in_a0[v] || in_a1[v]) && !in_class) return false;
        if (in_a0[v] && in_a1[v]) return false;
        if (attached[v] != (in_class && !in_a1[v])) return false;
      }
      for (const auto& a : w.attachments) {
        const FamilyWitness& c = w.children.at(a.child);
        if (c.family != Family::N) return false;
        if (in_a0[a.at] ? c.x_vertex.has_value() : c.x_vertex != std::optional<Vertex>(a.child_vertex))
          return false;
      }
      for (Vertex b = 0; b < h.n(); ++b) {
        if (parts->side[b] == cls) continue;
        bool covered = std::any_of(w.a0.begin(), w.a0.end(),
                                   [&](Vertex a) { return is_lambda_matchable_pair(h, a, b); });
        if (!covered) return false;
      }
      break;
    }
    default: return false;
  }
  Replayed r = replay_splice(w);
  if (w.family == Family::N && r.x_vertex.has_value() != w.x_vertex.has_value()) return false;
  return detail::marked_form(r.graph, r.x_vertex) == detail::marked_form(g, w.x_vertex);
}

// ------------------------------------------------------------ generators

namespace detail {

inline FamilyWitness base_witness(Family f, std::string rule, Multigraph g) {
  FamilyWitness w;
  w.family = f;
  w.rule = std::move(rule);
  w.graph = std::move(g);
  return w;
}

// Adds an attachment using the identity pairing against the graph built so far.
inline void attach(FamilyWitness& w, Vertex at, FamilyWitness child, Vertex child_vertex) {
  Replayed sofar = replay_splice(w);
  std::vector<Vertex> where(w.host.n());
  for (Vertex v = 0; v < w.host.n(); ++v) where[v] = v;
  // Track host vertex positions through the earlier attachments.
  {
    Multigraph cur = w.host;
    for (const auto& a : w.attachments) {
      const Multigraph& cg = w.children.at(a.child).graph;
      SpliceResult r = splice(cur, where[a.at], cg, a.child_vertex,
                              splice_map_from_ids(cur, where[a.at], cg, a.child_vertex, a.pi));
      for (Vertex& v : where) v = v == kNoVertex ? kNoVertex : r.from_g[v];
      cur = std::move(r.graph);
    }
  }
  Vertex here = where.at(at);
  SpliceMap pi = identity_splice_map(sofar.graph, here, child.graph, child_vertex);
  FamilyWitness::Attachment a;
  a.at = at;
  a.child_vertex = child_vertex;
  a.child = w.children.size();
  a.pi = ids_of(sofar.graph, child.graph, pi);
  w.children.push_back(std::move(child));
  w.attachments.push_back(std::move(a));
}

inline FamilyWitness splice_witness(Family f, Multigraph host) {
  FamilyWitness w;
  w.family = f;
  w.rule = "splice";
  w.host = std::move(host);
  return w;
}

inline void finish(FamilyWitness& w) {
  Replayed r = replay_splice(w);
  w.graph = std::move(r.graph);
  w.x_vertex = r.x_vertex;
}

}  // namespace detail

struct FamilyMember {
  Multigraph graph;
  std::optional<Vertex> x_vertex;  // N members with |X| = 1
  FamilyWitness witness;
};

// K33, then repeatedly K33 spliced with the previous member at its first
// vertex whose partner count is three.
inline FamilyMember gen_K(std::size_t depth) {
  FamilyWitness w = detail::base_witness(Family::K, "K33", k33_graph());
  for (std::size_t d = 0; d < depth; ++d) {
    Vertex v = kNoVertex;
    for (Vertex u = 0; u < w.graph.n() && v == kNoVertex; ++u)
      if (partner_count(w.graph, u) == 3) v = u;
    if (v == kNoVertex) throw GraphError("no vertex with three partners");
    FamilyWitness next = detail::splice_witness(Family::K, k33_graph());
    detail::attach(next, 0, std::move(w), v);
    detail::finish(next);
    w = std::move(next);
  }
  return {w.graph, std::nullopt, w};
}

// K4, then K33 with the previous member at a1 and K4 at a2, a3.
inline FamilyMember gen_G(std::size_t depth) {
  FamilyWitness w = detail::base_witness(Family::G, "brick", k4_graph());
  for (std::size_t d = 0; d < depth; ++d) {
    FamilyWitness next = detail::splice_witness(Family::G, k33_graph());
    detail::attach(next, 0, std::move(w), 0);
    detail::attach(next, 1, detail::base_witness(Family::G, "brick", k4_graph()), 0);
    detail::attach(next, 2, detail::base_witness(Family::G, "brick", k4_graph()), 0);
    detail::finish(next);
    w = std::move(next);
  }
  return {w.graph, std::nullopt, w};
}

namespace detail {

inline FamilyWitness n_brick() { return base_witness(Family::N, "brick", k4_graph()); }

inline FamilyWitness gen_n(std::size_t depth, bool defect) {
  if (depth == 0) {
    if (defect) throw GraphError("no defect member at depth 0");
    return n_brick();
  }
  FamilyWitness w = splice_witness(Family::N, k33_graph());
  if (depth == 1) {
    attach(w, 0, n_brick(), 0);
    attach(w, 1, n_brick(), 0);
    if (defect) {
      w.a0 = {0, 1};
      w.a1 = {2};
    } else {
      attach(w, 2, n_brick(), 0);
      w.a0 = {0, 1, 2};
    }
  } else if (!defect) {
    FamilyWitness inner = gen_n(depth - 1, true);
    Vertex x = *inner.x_vertex;
    attach(w, 0, n_brick(), 0);
    attach(w, 1, n_brick(), 0);
    attach(w, 2, std::move(inner), x);
    w.a0 = {0, 1};
  } else {
    attach(w, 0, gen_n(depth - 1, false), 0);
    attach(w, 1, n_brick(), 0);
    w.a0 = {0, 1};
    w.a1 = {2};
  }
  finish(w);
  return w;
}

}  // namespace detail

// Members at the given depth: X = V always, plus the |X| = 1 member for depth >= 1.
inline std::vector<FamilyMember> gen_N(std::size_t depth) {
  std::vector<FamilyMember> out;
  FamilyWitness full = detail::gen_n(depth, false);
  out.push_back({full.graph, full.x_vertex, full});
  if (depth >= 1) {
    FamilyWitness defect = detail::gen_n(depth, true);
    out.push_back({defect.graph, defect.x_vertex, defect});
  }
  return out;
}

// ------------------------------------------------------------ recognizers

// Barriers of size >= 2, stable sets only (barriers of matching covered
// graphs are stable), by backtracking over independent sets.
inline std::vector<Barrier> stable_barriers(const Multigraph& g) {
  std::vector<Barrier> out;
  VertexSet cur;
  std::vector<bool> blocked(g.n(), false);
  auto rec = [&](auto&& self, Vertex from) -> void {
    if (cur.size() >= 2 && is_barrier(g, cur)) out.push_back({cur});
    for (Vertex v = from; v < g.n(); ++v) {
      if (blocked[v]) continue;
      std::vector<Vertex> newly{v};
      blocked[v] = true;
      for (Vertex w : g.neighbors(v))
        if (!blocked[w]) {
          blocked[w] = true;
          newly.push_back(w);
        }
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
      for (Vertex w : newly) blocked[w] = false;
    }
  };
  rec(rec, 0);
  return out;
}

// Nontrivial barriers from the pair scan, then every remaining stable
// barrier when n <= exhaustive_limit.
inline std::vector<Barrier> candidate_barriers(const Multigraph& g, std::size_t exhaustive_limit = 20) {
  std::vector<Barrier> out = pair_barriers(g);
  if (g.n() <= exhaustive_limit)
    for (Barrier& b : stable_barriers(g))
      if (std::none_of(out.begin(), out.end(), [&](const Barrier& x) { return x.vertices == b.vertices; }))
        out.push_back(std::move(b));
  return out;
}

// Memoised structural recognizers. Membership answers are cached per
// isomorphism class (with the marked vertex for N); witnesses are rebuilt
// along the successful branch only.
class Recognizer {
 public:
  // Barrier candidates: the pair scan first, then (for n up to this bound)
  // every stable barrier.
  explicit Recognizer(std::size_t exhaustive_barrier_limit = 20) : limit_(exhaustive_barrier_limit) {}

  // ---- K
  bool in_K(const Multigraph& g) { return k_step(g, false).has_value(); }
  std::optional<FamilyWitness> witness_K(const Multigraph& g) {
    auto s = k_step(g, true);
    if (!s) return std::nullopt;
    return std::move(*s);
  }

  // ---- J
  static bool in_J(const Multigraph& g) {
    return is_cubic(g) && g.is_simple() && detail::is_brace_graph(g);
  }

  // ---- G
  bool in_G(const Multigraph& g) { return g_step(g, false).has_value(); }
  std::optional<FamilyWitness> witness_G(const Multigraph& g) { return g_step(g, true); }

  // ---- N
  bool in_N(const Multigraph& g, std::optional<Vertex> x) { return n_step(g, x, false).has_value(); }
  std::optional<FamilyWitness> witness_N(const Multigraph& g, std::optional<Vertex> x) { return n_step(g, x, true); }

  // ---- primes over 3-connected pieces
  std::optional<FamilyWitness> witness_prime(const Multigraph& g, Family f) {
    if (!is_cubic(g) || !is_connected(g) || edge_connectivity(g) < 2) return std::nullopt;
    FamilyWitness w = detail::base_witness(f, "pieces", g);
    for (const Multigraph& p : three_connected_pieces(g)) {
      std::optional<FamilyWitness> c;
      switch (f) {
        case Family::Kprime:
          if (is_theta(p)) c = detail::base_witness(Family::Kprime, "theta", p);
          else c = witness_K(p);
          break;
        case Family::L:
          if (is_theta(p)) c = detail::base_witness(Family::L, "theta", p);
          else if (in_J(p)) c = detail::base_witness(Family::J, "brace", p);
          else c = witness_K(p);
          break;
        case Family::Gprime:
          if (is_bipartite(p)) c = detail::base_witness(Family::Gprime, "bipartite", p);
          else c = witness_G(p);
          break;
        case Family::Nprime: c = witness_N(p, std::nullopt); break;
        default: throw GraphError("not a piece-wise family");
      }
      if (!c) return std::nullopt;
      w.children.push_back(std::move(*c));
    }
    return w;
  }
  bool in_prime(const Multigraph& g, Family f) {
    if (!is_cubic(g) || !is_connected(g) || edge_connectivity(g) < 2) return false;
    for (const Multigraph& p : three_connected_pieces(g)) {
      bool ok = false;
      switch (f) {
        case Family::Kprime: ok = is_theta(p) || in_K(p); break;
        case Family::L: ok = is_theta(p) || in_J(p) || in_K(p); break;
        case Family::Gprime: ok = is_bipartite(p) || in_G(p); break;
        case Family::Nprime: ok = in_N(p, std::nullopt); break;
        default: throw GraphError("not a piece-wise family");
      }
      if (!ok) return false;
    }
    return true;
  }

 private:
  using Key = std::pair<CanonicalForm, bool>;

  std::vector<Barrier> candidates(const Multigraph& g) const { return candidate_barriers(g, limit_); }

  static std::vector<std::pair<EdgeId, EdgeId>> same_ids(const Multigraph& h, Vertex at) {
    std::vector<std::pair<EdgeId, EdgeId>> out;
    for (EdgeIndex e : h.incident(at)) out.emplace_back(h.edge(e).id, h.edge(e).id);
    return out;
  }

  // Returns a witness when `build`, otherwise an empty witness on success.
  std::optional<FamilyWitness> k_step(const Multigraph& g, bool build) {
    Key key{canonical_form(g), false};
    if (!build) {
      if (auto it = memo_k_.find(key); it != memo_k_.end())
        return it->second ? std::optional<FamilyWitness>(FamilyWitness{}) : std::nullopt;
    }
    std::optional<FamilyWitness> found;
    if (!is_bipartite(g) || !detail::is_three_connected_cubic(g)) {
      // not a member
    } else if (are_isomorphic(g, k33_graph())) {
      found = detail::base_witness(Family::K, "K33", g);
    } else {
      for (const Cut& c : nontrivial_tight_cuts(g)) {
        Contraction left = contract(g, c.other_shore(g.n()));
        Contraction right = contract(g, c.shore);
        for (int flip = 0; flip < 2 && !found; ++flip) {
          const Contraction& small = flip ? right : left;
          const Contraction& big = flip ? left : right;
          if (!are_isomorphic(small.graph, k33_graph())) continue;
          if (partner_count(big.graph, big.contraction_vertex) != 3) continue;
          if (!build) {
            if (in_K(big.graph)) found = FamilyWitness{};
            continue;
          }
          auto child = witness_K(big.graph);
          if (!child) continue;
          FamilyWitness w = detail::splice_witness(Family::K, small.graph);
          w.graph = g;
          FamilyWitness::Attachment a{small.contraction_vertex, big.contraction_vertex, 0,
                                      same_ids(small.graph, small.contraction_vertex)};
          w.children.push_back(std::move(*child));
          w.attachments.push_back(std::move(a));
          found = std::move(w);
        }
        if (found) break;
      }
    }
    memo_k_[key] = found.has_value();
    return found;
  }

  std::optional<FamilyWitness> g_step(const Multigraph& g, bool build) {
    Key key{canonical_form(g), false};
    if (!build) {
      if (auto it = memo_g_.find(key); it != memo_g_.end())
        return it->second ? std::optional<FamilyWitness>(FamilyWitness{}) : std::nullopt;
    }
    std::optional<FamilyWitness> found;
    if (!detail::is_three_connected_cubic(g) || is_bipartite(g)) {
      // not a member
    } else if (is_brick(g)) {
      found = detail::base_witness(Family::G, "brick", g);
    } else {
      for (const Barrier& b : candidates(g)) {
        BarrierDecomposition d = barrier_decomposition(g, b, false);
        bool ok = std::all_of(d.fragments.begin(), d.fragments.end(),
                              [](const Fragment& f) { return f.component.size() >= 3; });
        for (std::size_t i = 0; ok && i < d.fragments.size(); ++i) ok = in_G(d.fragments[i].graph);
        if (!ok) continue;
        if (!build) {
          found = FamilyWitness{};
          break;
        }
        FamilyWitness w = detail::splice_witness(Family::G, d.core);
        w.graph = g;
        for (std::size_t i = 0; i < d.fragments.size(); ++i) {
          const Fragment& f = d.fragments[i];
          w.attachments.push_back({d.core_a[i], f.contraction_vertex, i, same_ids(d.core, d.core_a[i])});
          w.children.push_back(*witness_G(f.graph));
        }
        found = std::move(w);
        break;
      }
    }
    memo_g_[key] = found.has_value();
    return found;
  }

  std::optional<FamilyWitness> n_step(const Multigraph& g, std::optional<Vertex> x, bool build) {
    Key key{detail::marked_form(g, x), x.has_value()};
    if (!build) {
      if (auto it = memo_n_.find(key); it != memo_n_.end())
        return it->second ? std::optional<FamilyWitness>(FamilyWitness{}) : std::nullopt;
    }
    std::optional<FamilyWitness> found;
    if (!detail::is_three_connected_cubic(g)) {
      // not a member
    } else if (is_brick(g)) {
      if (!x) found = detail::base_witness(Family::N, "brick", g);
    } else {
      for (const Barrier& b : candidates(g)) {
        if (x && b.contains(*x)) continue;
        BarrierDecomposition d = barrier_decomposition(g, b, false);
        std::optional<std::size_t> single;
        bool ok = true;
        for (std::size_t i = 0; ok && i < d.fragments.size(); ++i)
          if (d.fragments[i].component.size() == 1) {
            if (single || !x || d.fragments[i].component.front() != *x) ok = false;
            single = i;
          }
        if (!ok || (x && !single)) continue;
        std::vector<bool> full(d.fragments.size(), false);
        for (std::size_t i = 0; ok && i < d.fragments.size(); ++i) {
          if (single && i == *single) continue;
          const Fragment& f = d.fragments[i];
          full[i] = in_N(f.graph, std::nullopt);
          if (!full[i]) ok = in_N(f.graph, f.contraction_vertex);
        }
        for (std::size_t j = 0; ok && j < d.core_b.size(); ++j) {
          bool covered = false;
          for (std::size_t i = 0; i < d.fragments.size() && !covered; ++i)
            covered = full[i] && is_lambda_matchable_pair(d.core, d.core_a[i], d.core_b[j]);
          ok = covered;
        }
        if (!ok) continue;
        if (!build) {
          found = FamilyWitness{};
          break;
        }
        FamilyWitness w = detail::splice_witness(Family::N, d.core);
        w.graph = g;
        w.x_vertex = x;
        for (std::size_t i = 0; i < d.fragments.size(); ++i) {
          if (single && i == *single) {
            w.a1.push_back(d.core_a[i]);
            continue;
          }
          const Fragment& f = d.fragments[i];
          if (full[i]) w.a0.push_back(d.core_a[i]);
          w.attachments.push_back({d.core_a[i], f.contraction_vertex, w.children.size(), same_ids(d.core, d.core_a[i])});
          w.children.push_back(
              *witness_N(f.graph, full[i] ? std::nullopt : std::optional<Vertex>(f.contraction_vertex)));
        }
        found = std::move(w);
        break;
      }
    }
    memo_n_[key] = found.has_value();
    return found;
  }

  std::size_t limit_;
  std::map<Key, bool> memo_k_, memo_g_, memo_n_;
};

// One-shot wrappers; each call uses a fresh recognizer.
inline std::optional<FamilyWitness> recognize_K(const Multigraph& g) { return Recognizer().witness_K(g); }
inline bool recognize_J(const Multigraph& g) { return Recognizer::in_J(g); }
inline bool recognize_Kprime(const Multigraph& g) { return Recognizer().in_prime(g, Family::Kprime); }
inline bool recognize_L(const Multigraph& g) { return Recognizer().in_prime(g, Family::L); }
inline std::optional<FamilyWitness> recognize_G(const Multigraph& g) { return Recognizer().witness_G(g); }
inline bool recognize_Gprime(const Multigraph& g) { return Recognizer().in_prime(g, Family::Gprime); }
inline std::optional<FamilyWitness> recognize_N(const Multigraph& g, std::optional<Vertex> x = std::nullopt) {
  return Recognizer().witness_N(g, x);
}
inline bool recognize_Nprime(const Multigraph& g) { return Recognizer().in_prime(g, Family::Nprime); }

}  // namespace cubmatch
