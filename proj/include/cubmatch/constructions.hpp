#pragma once

// Named fixtures, splicing, gluing, the bipartite 3-connected catalogue and
// exhaustive generation of connected cubic multigraphs.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cubmatch/canonical.hpp"
#include "cubmatch/multigraph.hpp"

namespace cubmatch {

// --------------------------------------------------------------- splicing

// pi[i] = (edge index of G at u, edge index of H at v).
using SpliceMap = std::vector<std::pair<EdgeIndex, EdgeIndex>>;

struct SpliceResult {
  Multigraph graph;
  std::vector<Vertex> from_g;  // G vertex -> result vertex (kNoVertex at u)
  std::vector<Vertex> from_h;  // H vertex -> result vertex (kNoVertex at v)
  VertexSet g_side;            // shore V(G) - u of the splicing cut
};

namespace detail {

inline std::vector<EdgeIndex> incident_by_id(const Multigraph& g, Vertex u) {
  std::vector<EdgeIndex> es(g.incident(u).begin(), g.incident(u).end());
  std::sort(es.begin(), es.end(), [&](EdgeIndex a, EdgeIndex b) { return g.edge(a).id < g.edge(b).id; });
  return es;
}

}  // namespace detail

// Pairs the edges at u and v in order of edge id.
inline SpliceMap identity_splice_map(const Multigraph& g, Vertex u, const Multigraph& h, Vertex v) {
  auto eu = detail::incident_by_id(g, u), ev = detail::incident_by_id(h, v);
  if (eu.size() != ev.size()) throw GraphError("splice needs equal degrees");
  SpliceMap pi;
  for (std::size_t i = 0; i < eu.size(); ++i) pi.emplace_back(eu[i], ev[i]);
  return pi;
}

// Pairs edges at u and v carrying the same edge id.
inline SpliceMap splice_map_by_ids(const Multigraph& g, Vertex u, const Multigraph& h, Vertex v) {
  SpliceMap pi;
  for (EdgeIndex e : g.incident(u)) {
    bool found = false;
    for (EdgeIndex f : h.incident(v))
      if (h.edge(f).id == g.edge(e).id) {
        pi.emplace_back(e, f);
        found = true;
        break;
      }
    if (!found) throw GraphError("no edge with a matching id at the splice vertex");
  }
  return pi;
}

// Permuted pairing: the i-th edge at u (by id) goes to the perm[i]-th edge at v.
inline SpliceMap permuted_splice_map(const Multigraph& g, Vertex u, const Multigraph& h, Vertex v,
                                     const std::vector<std::size_t>& perm) {
  auto eu = detail::incident_by_id(g, u), ev = detail::incident_by_id(h, v);
  if (eu.size() != ev.size() || perm.size() != eu.size()) throw GraphError("splice needs equal degrees");
  SpliceMap pi;
  for (std::size_t i = 0; i < eu.size(); ++i) pi.emplace_back(eu[i], ev.at(perm[i]));
  return pi;
}

inline SpliceResult splice(const Multigraph& g, Vertex u, const Multigraph& h, Vertex v, const SpliceMap& pi) {
  if (u >= g.n() || v >= h.n()) throw GraphError("splice vertex out of range");
  if (g.degree(u) != h.degree(v)) throw GraphError("splice needs equal degrees");
  if (pi.size() != g.degree(u)) throw GraphError("splice map must be a bijection");
  {
    std::vector<EdgeIndex> a, b;
    for (auto [x, y] : pi) {
      if (!g.edge(x).has(u) || !h.edge(y).has(v)) throw GraphError("splice map edge not at splice vertex");
      a.push_back(x);
      b.push_back(y);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end() || std::adjacent_find(b.begin(), b.end()) != b.end())
      throw GraphError("splice map must be a bijection");
  }
  SpliceResult r;
  r.from_g.assign(g.n(), kNoVertex);
  r.from_h.assign(h.n(), kNoVertex);
  std::size_t next = 0;
  for (Vertex x = 0; x < g.n(); ++x)
    if (x != u) {
      r.from_g[x] = next++;
      r.g_side.push_back(r.from_g[x]);
    }
  for (Vertex y = 0; y < h.n(); ++y)
    if (y != v) r.from_h[y] = next++;
  r.graph = Multigraph(next);
  std::set<EdgeId> used;
  for (const Edge& e : g.edges())
    if (!e.has(u)) {
      r.graph.add_edge(r.from_g[e.u], r.from_g[e.v], e.id);
      used.insert(e.id);
    }
  for (auto [x, y] : pi) {
    const Edge& ge = g.edge(x);
    const Edge& he = h.edge(y);
    r.graph.add_edge(r.from_g[ge.other(u)], r.from_h[he.other(v)], ge.id);
    used.insert(ge.id);
  }
  EdgeId fresh = used.empty() ? 0 : *used.rbegin() + 1;
  for (const Edge& e : h.edges())
    if (!e.has(v)) {
      EdgeId id = used.count(e.id) ? fresh++ : e.id;
      used.insert(id);
      if (id >= fresh) fresh = id + 1;
      r.graph.add_edge(r.from_h[e.u], r.from_h[e.v], id);
    }
  return r;
}

inline SpliceResult splice(const Multigraph& g, Vertex u, const Multigraph& h, Vertex v) {
  return splice(g, u, h, v, identity_splice_map(g, u, h, v));
}

// Deletes e1 = x1y1 and e2 = x2y2 (ends in stored order) and adds x1x2, y1y2,
// or x1y2, y1x2 when `cross` is set. Vertices of g2 follow those of g1.
inline Multigraph glue(const Multigraph& g1, EdgeIndex e1, const Multigraph& g2, EdgeIndex e2, bool cross = false) {
  if (e1 >= g1.m() || e2 >= g2.m()) throw GraphError("glue edge out of range");
  const std::size_t off = g1.n();
  Multigraph r(g1.n() + g2.n());
  for (EdgeIndex e = 0; e < g1.m(); ++e)
    if (e != e1) r.add_edge(g1.edge(e).u, g1.edge(e).v);
  for (EdgeIndex e = 0; e < g2.m(); ++e)
    if (e != e2) r.add_edge(g2.edge(e).u + off, g2.edge(e).v + off);
  const Edge &a = g1.edge(e1), &b = g2.edge(e2);
  if (!cross) {
    r.add_edge(a.u, b.u + off);
    r.add_edge(a.v, b.v + off);
  } else {
    r.add_edge(a.u, b.v + off);
    r.add_edge(a.v, b.u + off);
  }
  return r;
}

// --------------------------------------------------------------- fixtures

inline Multigraph theta_graph() { return Multigraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

inline Multigraph cycle_graph_c4_cubic() {
  return Multigraph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {0, 3}});
}

inline Multigraph k4_graph() { return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

// a1,a2,a3 = 0,1,2; b1,b2,b3 = 3,4,5.
inline Multigraph k33_graph() {
  Multigraph g(6);
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 6; ++b) g.add_edge(a, b);
  return g;
}

// C_k x K2: outer cycle 0..k-1, inner cycle k..2k-1, spokes i -- k+i.
inline Multigraph prism_graph(std::size_t k) {
  if (k < 2) throw GraphError("prism needs k >= 2");
  Multigraph g(2 * k);
  for (Vertex i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  for (Vertex i = 0; i < k; ++i) g.add_edge(k + i, k + (i + 1) % k);
  for (Vertex i = 0; i < k; ++i) g.add_edge(i, k + i);
  return g;
}

// Cycle 0..m-1 with chords i -- i + m/2.
inline Multigraph moebius_ladder(std::size_t m) {
  if (m < 4 || m % 2) throw GraphError("Moebius ladder needs even m >= 4");
  Multigraph g(m);
  for (Vertex i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
  for (Vertex i = 0; i < m / 2; ++i) g.add_edge(i, i + m / 2);
  return g;
}

inline Multigraph cube_graph() {
  Multigraph g(8);
  for (Vertex v = 0; v < 8; ++v)
    for (Vertex bit = 1; bit < 8; bit <<= 1)
      if (v < (v ^ bit)) g.add_edge(v, v ^ bit);
  return g;
}

inline Multigraph petersen_graph() {
  Multigraph g(10);
  for (Vertex i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  for (Vertex i = 0; i < 5; ++i) g.add_edge(i, i + 5);
  for (Vertex i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
  return g;
}

// Hub 0, rim 1..5.
inline Multigraph wheel6_graph() {
  Multigraph g(6);
  for (Vertex i = 1; i <= 5; ++i) g.add_edge(0, i);
  for (Vertex i = 1; i <= 5; ++i) g.add_edge(i, i % 5 + 1);
  return g;
}

// Splices `host` at each listed vertex with (graph, vertex) using the
// identity pairing; returns the result with host vertices renumbered.
struct MultiSplice {
  Multigraph graph;
  std::vector<Vertex> from_host;  // host vertex -> result vertex (kNoVertex where spliced)
};

inline MultiSplice splice_at(const Multigraph& host,
                             const std::vector<std::tuple<Vertex, const Multigraph*, Vertex>>& parts) {
  MultiSplice ms{host, {}};
  ms.from_host.resize(host.n());
  for (Vertex v = 0; v < host.n(); ++v) ms.from_host[v] = v;
  for (auto [at, child, cv] : parts) {
    Vertex here = ms.from_host.at(at);
    if (here == kNoVertex) throw GraphError("vertex spliced twice");
    SpliceResult r = splice(ms.graph, here, *child, cv);
    for (Vertex& v : ms.from_host) v = (v == kNoVertex) ? kNoVertex : r.from_g[v];
    ms.graph = std::move(r.graph);
  }
  return ms;
}

// K33 spliced at a1 with K4: vertices a2,a3,b1,b2,b3,k1,k2,k3 = 0..7.
// B' = {2,3,4} (class adjacent to the K4 side), X = {5,6,7}.
inline Multigraph k33_splice_k4() { return splice(k33_graph(), 0, k4_graph(), 0).graph; }

inline Multigraph k33_splice_k33() { return splice(k33_graph(), 0, k33_graph(), 0).graph; }

// K33 with K4 spliced at a1 and a2; the remaining A-vertex a3 becomes vertex 0.
inline Multigraph k33_splice_2_k4s() {
  Multigraph k4 = k4_graph();
  return splice_at(k33_graph(), {{0, &k4, 0}, {1, &k4, 0}}).graph;
}

inline Multigraph k33_splice_3_k4s() {
  Multigraph k4 = k4_graph();
  return splice_at(k33_graph(), {{0, &k4, 0}, {1, &k4, 0}, {2, &k4, 0}}).graph;
}

// K33 with K4 at a1, a2 and the 2-K4 graph spliced at a3 through its vertex 0.
inline Multigraph lambda_gt_beta_graph() {
  Multigraph k4 = k4_graph(), g3 = k33_splice_2_k4s();
  return splice_at(k33_graph(), {{0, &k4, 0}, {1, &k4, 0}, {2, &g3, 0}}).graph;
}

inline Multigraph k4_glue_k33() { return glue(k4_graph(), 0, k33_graph(), 0); }

inline Multigraph k33_glue_theta_glue_k33() {
  Multigraph left = glue(k33_graph(), 0, theta_graph(), 0);  // theta vertices are 6, 7
  EdgeIndex spare = 0;
  for (EdgeIndex e = 0; e < left.m(); ++e)
    if (left.edge(e).u == 6 && left.edge(e).v == 7) spare = e;
  return glue(left, spare, k33_graph(), 0);
}

// K33 with K4 at a1 and the triangular prism at a2; a3 is left alone.
inline Multigraph barrier_example_graph() {
  Multigraph k4 = k4_graph(), prism = prism_graph(3);
  return splice_at(k33_graph(), {{0, &k4, 0}, {1, &prism, 0}}).graph;
}

inline Multigraph named(const std::string& raw) {
  std::string name;
  for (char ch : raw)
    if (ch != ' ' && ch != '_' && ch != '-') name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (name == "theta") return theta_graph();
  if (name == "c4cubic" || name == "c4") return cycle_graph_c4_cubic();
  if (name == "k4") return k4_graph();
  if (name == "k33" || name == "k3,3") return k33_graph();
  if (name == "c6bar" || name == "triangularprism" || name == "prism") return prism_graph(3);
  if (name == "cube") return cube_graph();
  if (name == "petersen") return petersen_graph();
  if (name == "pentagonalprism") return prism_graph(5);
  if (name == "wheel6") return wheel6_graph();
  if (name == "k33sk4" || name == "k3,3sk4") return k33_splice_k4();
  if (name == "k33sk33" || name == "k3,3sk3,3") return k33_splice_k33();
  if (name == "k33s2k4" || name == "k33splice2k4s") return k33_splice_2_k4s();
  if (name == "k33s3k4" || name == "k33splice3k4s") return k33_splice_3_k4s();
  if (name == "lambdagtbeta") return lambda_gt_beta_graph();
  if (name == "k4gk33" || name == "k4gluek33") return k4_glue_k33();
  if (name == "k33gthetagk33" || name == "k33gluethetagluek33") return k33_glue_theta_glue_k33();
  if (name == "barrierexample") return barrier_example_graph();
  if (name == "lnotkprime" || name == "cubegk33") return glue(cube_graph(), 0, k33_graph(), 0);
  if (name == "nprimeexample") return glue(k4_graph(), 0, k33_splice_3_k4s(), 0);
  if (name == "cubesk33") return splice(cube_graph(), 0, k33_graph(), 0).graph;
  if (name == "cubescube") return splice(cube_graph(), 0, cube_graph(), 0).graph;
  throw GraphError("unknown named graph: " + raw);
}

inline std::vector<std::string> named_list() {
  return {"Theta",   "C4cubic",  "K4",          "K33",           "C6bar",         "Cube",
          "Petersen", "PentagonalPrism", "Wheel6", "K33sK4",    "K33sK33",       "K33s2K4",
          "K33s3K4", "LambdaGtBeta", "K4gK33",    "K33gThetagK33", "BarrierExample", "LnotKprime",
          "NprimeExample", "CubesK33", "CubesCube"};
}

// Bipartite 3-connected cubic graph of order m: prism for m = 0 mod 4,
// Moebius ladder for m = 2 mod 4.
inline Multigraph bipartite_catalog(std::size_t m) {
  if (m < 6 || m % 2) throw GraphError("no catalogue entry for this order");
  return m % 4 == 0 ? prism_graph(m / 2) : moebius_ladder(m);
}

// K33 (x) K4 spliced at a remaining A-vertex with a catalogue graph H of
// order n - 6 at a vertex of its second colour class.
inline Multigraph gen_negative_family(std::size_t n) {
  if (n % 2 || n < 12) throw GraphError("negative family needs even n >= 12");
  Multigraph h = bipartite_catalog(n - 6);
  auto parts = bipartition(h);
  return splice(k33_splice_k4(), 0, h, parts->b.front()).graph;
}

// ---------------------------------------------------------- exhaustive

namespace detail {

class CubicGenerator {
 public:
  explicit CubicGenerator(std::size_t n) : n_(n), deg_(n, 0), mult_(n * n, 0) {}

  std::set<CanonicalForm> run() {
    if (n_ == 0) return {};
    next_new_ = 1;
    visit(0);
    return std::move(found_);
  }

 private:
  void add(Vertex a, Vertex b, int k) {
    mult_[a * n_ + b] = static_cast<std::uint8_t>(mult_[a * n_ + b] + k);
    mult_[b * n_ + a] = static_cast<std::uint8_t>(mult_[b * n_ + a] + k);
    deg_[a] = static_cast<std::size_t>(static_cast<long>(deg_[a]) + k);
    deg_[b] = static_cast<std::size_t>(static_cast<long>(deg_[b]) + k);
  }

  void visit(Vertex v) {
    if (v == n_) {
      emit();
      return;
    }
    if (v >= next_new_) return;  // not reached: disconnected
    std::size_t need = 3 - deg_[v];
    std::vector<Vertex> seen;
    for (Vertex w = v + 1; w < next_new_; ++w)
      if (deg_[w] < 3) seen.push_back(w);
    to_seen(v, seen, 0, need);
  }

  void to_seen(Vertex v, const std::vector<Vertex>& seen, std::size_t i, std::size_t need) {
    if (i == seen.size()) {
      to_new(v, need, 3);
      return;
    }
    Vertex w = seen[i];
    std::size_t cap = std::min<std::size_t>(need, 3 - deg_[w]);
    for (std::size_t k = 0; k <= cap; ++k) {
      if (k) add(v, w, static_cast<int>(k));
      to_seen(v, seen, i + 1, need - k);
      if (k) add(v, w, -static_cast<int>(k));
    }
  }

  // Fresh vertices are interchangeable, so their multiplicities are taken
  // in non-increasing order.
  void to_new(Vertex v, std::size_t need, std::size_t max_k) {
    if (need == 0) {
      visit(v + 1);
      return;
    }
    if (next_new_ >= n_) return;
    for (std::size_t k = std::min(need, max_k); k >= 1; --k) {
      Vertex w = next_new_++;
      add(v, w, static_cast<int>(k));
      to_new(v, need - k, k);
      add(v, w, -static_cast<int>(k));
      --next_new_;
    }
  }

  void emit() {
    Multigraph g(n_);
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = a + 1; b < n_; ++b)
        for (std::uint8_t k = 0; k < mult_[a * n_ + b]; ++k) g.add_edge(a, b);
    found_.insert(canonical_form(g));
  }

  std::size_t n_;
  std::size_t next_new_ = 0;
  std::vector<std::size_t> deg_;
  std::vector<std::uint8_t> mult_;
  std::set<CanonicalForm> found_;
};

}  // namespace detail

// One representative per isomorphism class, in canonical-form order.
inline std::vector<Multigraph> generate_all_cubic(std::size_t n, std::size_t min_kappa = 1) {
  if (n % 2) throw GraphError("cubic graphs have even order");
  std::vector<Multigraph> out;
  if (n == 0) return out;
  for (const CanonicalForm& f : detail::CubicGenerator(n).run()) {
    Multigraph g = f.to_graph();
    if (min_kappa <= 1 || vertex_connectivity(g) >= min_kappa) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace cubmatch
