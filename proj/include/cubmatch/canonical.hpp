#pragma once

// Canonical labelling of multigraphs by colour refinement plus exhaustive
// individualisation. Edge multiplicities act as edge colours, so two
// multigraphs get equal forms exactly when they are isomorphic.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cubmatch/multigraph.hpp"

namespace cubmatch {

struct CanonicalForm {
  std::size_t n = 0;
  std::vector<std::uint8_t> upper;  // multiplicities of the relabelled upper triangle, row major

  auto operator<=>(const CanonicalForm&) const = default;

  // FNV-1a digest, rendered as 16 hex digits.
  std::string hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t byte) {
      h ^= byte;
      h *= 1099511628211ull;
    };
    for (int s = 0; s < 64; s += 8) mix((n >> s) & 0xff);
    for (std::uint8_t x : upper) mix(x);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
      out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
      h >>= 4;
    }
    return out;
  }

  Multigraph to_graph() const {
    Multigraph g(n);
    std::size_t k = 0;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j, ++k)
        for (std::uint8_t r = 0; r < upper[k]; ++r) g.add_edge(i, j);
    return g;
  }
};

namespace detail {

class Canonizer {
 public:
  Canonizer(const Multigraph& g, std::vector<std::uint32_t> tint) : n_(g.n()), mult_(n_ * n_, 0), tint_(std::move(tint)) {
    for (const Edge& e : g.edges()) {
      ++mult_[e.u * n_ + e.v];
      ++mult_[e.v * n_ + e.u];
    }
    for (Vertex v = 0; v < n_; ++v) {
      std::vector<std::pair<Vertex, std::uint8_t>> row;
      for (Vertex w = 0; w < n_; ++w)
        if (mult_[v * n_ + w]) row.emplace_back(w, mult_[v * n_ + w]);
      adj_.push_back(std::move(row));
    }
  }

  CanonicalForm run() {
    CanonicalForm out;
    out.n = n_;
    if (n_ == 0) return out;
    std::vector<std::uint32_t> colour(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      std::uint32_t d = 0;
      for (auto [w, k] : adj_[v]) d += k;
      colour[v] = d + (tint_.empty() ? 0 : 64 * tint_[v]);
    }
    normalise(colour);
    refine(colour);
    search(colour);
    out.upper = std::move(best_);
    return out;
  }

 private:
  // Renumber colours 0..k-1 preserving order.
  static void normalise(std::vector<std::uint32_t>& colour) {
    std::vector<std::uint32_t> vals = colour;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (auto& c : colour)
      c = static_cast<std::uint32_t>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
  }

  static std::size_t cell_count(const std::vector<std::uint32_t>& colour) {
    return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  }

  void refine(std::vector<std::uint32_t>& colour) const {
    std::size_t cells = cell_count(colour);
    while (true) {
      std::vector<std::vector<std::uint32_t>> sig(n_);
      for (Vertex v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.push_back(colour[v]);
        std::vector<std::uint32_t> nb;
        for (auto [w, k] : adj_[v]) nb.push_back(colour[w] * 8u + k);
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
      }
      std::vector<std::vector<std::uint32_t>> keys = sig;
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (Vertex v = 0; v < n_; ++v)
        colour[v] = static_cast<std::uint32_t>(
            std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
      if (keys.size() == cells) return;
      cells = keys.size();
    }
  }

  void search(const std::vector<std::uint32_t>& colour) {
    const std::size_t cells = cell_count(colour);
    if (cells == n_) {
      leaf(colour);
      return;
    }
    // First smallest non-singleton cell.
    std::vector<std::size_t> size(cells, 0);
    for (auto c : colour) ++size[c];
    std::uint32_t target = 0;
    std::size_t best = n_ + 1;
    for (std::uint32_t c = 0; c < cells; ++c)
      if (size[c] > 1 && size[c] < best) {
        best = size[c];
        target = c;
      }
    for (Vertex v = 0; v < n_; ++v) {
      if (colour[v] != target) continue;
      std::vector<std::uint32_t> next(n_);
      for (Vertex w = 0; w < n_; ++w) next[w] = colour[w] * 2 + ((colour[w] == target && w != v) ? 1 : 0);
      normalise(next);
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<std::uint32_t>& colour) {
    std::vector<Vertex> at(n_);
    for (Vertex v = 0; v < n_; ++v) at[colour[v]] = v;
    std::vector<std::uint8_t> form;
    form.reserve(n_ * (n_ - 1) / 2);
    for (Vertex i = 0; i < n_; ++i)
      for (Vertex j = i + 1; j < n_; ++j) form.push_back(mult_[at[i] * n_ + at[j]]);
    // Larger entries early give a lexicographically larger form; keep the maximum.
    if (best_.empty() || form > best_) best_ = std::move(form);
  }

  std::size_t n_;
  std::vector<std::uint8_t> mult_;
  std::vector<std::vector<std::pair<Vertex, std::uint8_t>>> adj_;
  std::vector<std::uint32_t> tint_;
  std::vector<std::uint8_t> best_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Multigraph& g) { return detail::Canonizer(g, {}).run(); }

// Form of g with vertices pre-coloured by `tint`; colour classes are ordered
// by tint, so a vertex with the unique largest tint is relabelled last.
inline CanonicalForm canonical_form(const Multigraph& g, std::vector<std::uint32_t> tint) {
  if (tint.size() != g.n()) throw GraphError("vertex colouring has the wrong length");
  return detail::Canonizer(g, std::move(tint)).run();
}

inline std::string canonical_hash(const Multigraph& g) { return canonical_form(g).hash(); }

inline bool are_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  return canonical_form(a) == canonical_form(b);
}

// Underlying simple graph: parallel edges collapsed.
inline Multigraph underlying_simple(const Multigraph& g) {
  Multigraph s(g.n());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) s.add_edge(u, v);
  return s;
}

}  // namespace cubmatch
