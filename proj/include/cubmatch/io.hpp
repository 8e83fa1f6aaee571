#pragma once

// Edge-list and graph6 formats, DOT output, and JSON views of results.

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cubmatch/canonical.hpp"
#include "cubmatch/decomposition.hpp"
#include "cubmatch/families.hpp"
#include "cubmatch/lambda.hpp"
#include "cubmatch/multigraph.hpp"
#include "cubmatch/verify.hpp"

namespace cubmatch {

using Json = nlohmann::json;  // std::map backed, so keys serialize sorted

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// ---------------------------------------------------------------- edge list

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::optional<std::size_t> parse_uint(std::string_view s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace detail

// Header "cubmatch v1 n=<int>", then one "u v" line per edge in order.
// Edge ids are assigned 0..m-1 in file order.
inline Multigraph parse_edge_list(std::string_view text) {
  std::optional<Multigraph> g;
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t cut = text.find('\n');
    std::string_view line = detail::trim(text.substr(0, cut));
    text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!g) {
      constexpr std::string_view kHead = "cubmatch v1 n=";
      if (line.substr(0, kHead.size()) != kHead) throw ParseError(line_no, "expected header 'cubmatch v1 n=<int>'");
      auto n = detail::parse_uint(line.substr(kHead.size()));
      if (!n) throw ParseError(line_no, "bad vertex count");
      g.emplace(*n);
      continue;
    }
    std::size_t sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) throw ParseError(line_no, "expected 'u v'");
    auto u = detail::parse_uint(line.substr(0, sp));
    auto v = detail::parse_uint(detail::trim(line.substr(sp)));
    if (!u || !v) throw ParseError(line_no, "expected two vertex numbers");
    if (*u == *v) throw ParseError(line_no, "loop at vertex " + std::to_string(*u));
    if (*u >= g->n() || *v >= g->n()) throw ParseError(line_no, "vertex out of range");
    g->add_edge(*u, *v);
  }
  if (!g) throw ParseError(line_no, "missing header");
  return std::move(*g);
}

inline std::string serialize_edge_list(const Multigraph& g) {
  std::string out = "cubmatch v1 n=" + std::to_string(g.n()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

// ---------------------------------------------------------------- graph6

inline Multigraph parse_graph6(std::string_view s) {
  s = detail::trim(s);
  if (s.substr(0, 10) == ">>graph6<<") s.remove_prefix(10);
  std::size_t pos = 0;
  auto next = [&]() -> std::uint32_t {
    if (pos >= s.size()) throw GraphError("graph6: string too short");
    char c = s[pos++];
    if (c < 63 || c > 126) throw GraphError("graph6: byte out of range");
    return static_cast<std::uint32_t>(c - 63);
  };
  std::size_t n = 0;
  std::uint32_t first = next();
  if (first < 63) {
    n = first;
  } else {
    std::size_t k = 3;
    if (pos < s.size() && s[pos] == '~') {
      ++pos;
      k = 6;
    }
    for (std::size_t i = 0; i < k; ++i) n = (n << 6) | next();
  }
  Multigraph g(n);
  std::uint32_t word = 0;
  int left = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      if (left == 0) {
        word = next();
        left = 6;
      }
      --left;
      if ((word >> left) & 1u) g.add_edge(i, j);
    }
  if (pos != s.size()) throw GraphError("graph6: trailing bytes");
  return g;
}

inline std::string write_graph6(const Multigraph& g) {
  if (!g.is_simple()) throw GraphError("graph6 cannot encode parallel edges");
  const std::size_t n = g.n();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  std::uint32_t word = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      word = (word << 1) | (adj[i][j] ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + word));
        word = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (word << (6 - filled))));
  return out;
}

// ---------------------------------------------------------------- DOT

inline std::string to_dot(const Multigraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << " [label=\"" << e.id << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const DecompositionTree& t) {
  std::ostringstream os;
  os << "digraph " << (t.mode == DecompositionMode::tight ? "tight" : "two_cut") << " {\n";
  std::size_t next = 0;
  auto rec = [&](auto&& self, const DecompositionNode& node) -> std::size_t {
    std::size_t id = next++;
    os << "  n" << id << " [label=\"" << to_string(node.kind) << " n=" << node.graph.n() << " m=" << node.graph.m()
       << "\\n" << canonical_hash(node.graph) << "\"];\n";
    for (const auto& child : node.children) {
      std::size_t c = self(self, child);
      os << "  n" << id << " -> n" << c << ";\n";
    }
    return id;
  };
  rec(rec, t.root);
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------- JSON

inline Json graph_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.n()}, {"m", g.m()}, {"edges", edges}, {"hash", canonical_hash(g)}};
}

inline Multigraph graph_from_json(const Json& j) {
  Multigraph g(j.at("n").get<std::size_t>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return g;
}

inline Json invariants_json(const InvariantBundle& inv) {
  return {{"b", inv.b},         {"b_prime", inv.b_prime}, {"beta", inv.beta},          {"beta_prime", inv.beta_prime},
          {"theta", inv.theta}, {"theta_bar", inv.theta_bar}, {"n_nonbip", inv.n_nonbip}};
}

inline Json profile_json(const LambdaProfile& p) {
  Json j = {{"lambda", p.lambda}, {"lambda_set", p.lambda_set}, {"bipartite", p.bipartite}};
  if (p.bipartite) {
    Json pairs = Json::array();
    for (auto [a, b] : p.pairs) pairs.push_back({a, b});
    j["pairs"] = pairs;
    j["rho"] = p.rho;
    j["partners"] = p.partners;
  }
  return j;
}

inline Json node_json(const DecompositionNode& node) {
  Json j = {{"kind", to_string(node.kind)}, {"graph", graph_json(node.graph)}};
  if (node.marked_vertex != kNoVertex) j["marked_vertex"] = node.marked_vertex;
  if (node.marker_edge) j["marker_edge"] = *node.marker_edge;
  if (node.cut) j["cut"] = {{"shore", node.cut->shore}, {"edges", node.cut->edges}};
  if (!node.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : node.children) kids.push_back(node_json(c));
    j["children"] = kids;
  }
  return j;
}

inline Json tree_json(const DecompositionTree& t) {
  Json leaves = Json::array();
  for (const CanonicalForm& f : leaf_forms(t, false)) leaves.push_back(f.hash());
  return {{"mode", t.mode == DecompositionMode::tight ? "tight" : "2cut"}, {"root", node_json(t.root)}, {"leaves", leaves}};
}

// Splice maps name edges by id, so witness graphs carry their ids.
inline Json graph_json_with_ids(const Multigraph& g) {
  Json j = graph_json(g);
  Json ids = Json::array();
  for (const Edge& e : g.edges()) ids.push_back(e.id);
  j["ids"] = ids;
  return j;
}

inline Multigraph graph_from_json_with_ids(const Json& j) {
  if (!j.contains("ids")) return graph_from_json(j);
  Multigraph g(j.at("n").get<std::size_t>());
  const auto& ids = j.at("ids");
  const auto& edges = j.at("edges");
  if (ids.size() != edges.size()) throw GraphError("ids and edges differ in length");
  for (std::size_t i = 0; i < edges.size(); ++i)
    g.add_edge(edges[i].at(0).get<Vertex>(), edges[i].at(1).get<Vertex>(), ids[i].get<EdgeId>());
  return g;
}

inline Json witness_json(const FamilyWitness& w) {
  Json j = {{"family", to_string(w.family)}, {"rule", w.rule}, {"graph", graph_json_with_ids(w.graph)}};
  if (w.x_vertex) j["x_vertex"] = *w.x_vertex;
  if (w.rule == "splice") {
    j["host"] = graph_json_with_ids(w.host);
    Json atts = Json::array();
    for (const auto& a : w.attachments) {
      Json pi = Json::array();
      for (auto [x, y] : a.pi) pi.push_back({x, y});
      atts.push_back({{"at", a.at}, {"child_vertex", a.child_vertex}, {"child", a.child}, {"pi", pi}});
    }
    j["attachments"] = atts;
    if (w.family == Family::N) {
      j["a0"] = w.a0;
      j["a1"] = w.a1;
    }
  }
  if (!w.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : w.children) kids.push_back(witness_json(c));
    j["children"] = kids;
  }
  return j;
}

inline FamilyWitness witness_from_json(const Json& j) {
  FamilyWitness w;
  auto f = family_from_string(j.at("family").get<std::string>());
  if (!f) throw GraphError("unknown family");
  w.family = *f;
  w.rule = j.at("rule").get<std::string>();
  w.graph = graph_from_json_with_ids(j.at("graph"));
  if (j.contains("x_vertex")) w.x_vertex = j.at("x_vertex").get<Vertex>();
  if (j.contains("host")) w.host = graph_from_json_with_ids(j.at("host"));
  if (j.contains("attachments"))
    for (const auto& a : j.at("attachments")) {
      FamilyWitness::Attachment at;
      at.at = a.at("at").get<Vertex>();
      at.child_vertex = a.at("child_vertex").get<Vertex>();
      at.child = a.at("child").get<std::size_t>();
      for (const auto& p : a.at("pi")) at.pi.emplace_back(p.at(0).get<EdgeId>(), p.at(1).get<EdgeId>());
      w.attachments.push_back(std::move(at));
    }
  if (j.contains("a0")) w.a0 = j.at("a0").get<std::vector<Vertex>>();
  if (j.contains("a1")) w.a1 = j.at("a1").get<std::vector<Vertex>>();
  if (j.contains("children"))
    for (const auto& c : j.at("children")) w.children.push_back(witness_from_json(c));
  for (const auto& a : w.attachments)
    if (a.child >= w.children.size()) throw GraphError("attachment names a missing child");
  return w;
}

inline Json record_json(const TheoremRecord& r) {
  Json j = {{"theorem", r.theorem}, {"values", r.values}, {"bound_holds", r.bound_holds},
            {"green", r.green()},   {"failures", r.failures}};
  if (r.equality) j["equality"] = *r.equality;
  if (r.membership_agrees) j["membership_agrees"] = *r.membership_agrees;
  if (r.oracle_agrees) j["oracle_agrees"] = *r.oracle_agrees;
  return j;
}

inline Json report_json(const VerificationReport& rep) {
  Json recs = Json::array();
  for (const auto& r : rep.records) recs.push_back(record_json(r));
  return {{"graph_id", rep.graph_id}, {"n", rep.n}, {"m", rep.m}, {"green", rep.green()}, {"records", recs}};
}

}  // namespace cubmatch
