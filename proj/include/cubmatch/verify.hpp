#pragma once

// Bound and characterization checkers. A failed check is reported, never
// thrown; only violated preconditions throw.

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cubmatch/canonical.hpp"
#include "cubmatch/decomposition.hpp"
#include "cubmatch/families.hpp"
#include "cubmatch/lambda.hpp"
#include "cubmatch/matching.hpp"
#include "cubmatch/multigraph.hpp"

namespace cubmatch {

struct TheoremRecord {
  std::string theorem;
  std::map<std::string, long long> values;
  bool bound_holds = true;                  // inequalities / formulas
  std::optional<bool> equality;             // equality case, when one applies
  std::optional<bool> membership_agrees;    // equality case vs recognizers
  std::optional<bool> oracle_agrees;        // fast path vs enumeration
  std::vector<std::string> failures;

  bool green() const {
    return bound_holds && membership_agrees.value_or(true) && oracle_agrees.value_or(true);
  }
  void fail(std::string why) {
    failures.push_back(std::move(why));
    bound_holds = false;
  }
};

struct VerificationReport {
  std::string graph_id;  // canonical hash
  std::size_t n = 0, m = 0;
  std::vector<TheoremRecord> records;

  bool green() const {
    return std::all_of(records.begin(), records.end(), [](const TheoremRecord& r) { return r.green(); });
  }
};

struct VerifyOptions {
  std::size_t oracle_max_n = 12;  // enumeration recomputation up to this order
  bool compositions = true;
  bool uniqueness = true;
};

namespace detail {

inline void require_two_connected(const Multigraph& g) {
  if (!is_cubic(g)) throw GraphError("expected a cubic graph");
  if (!is_connected(g) || edge_connectivity(g) < 2) throw GraphError("expected a 2-connected cubic graph");
}

inline long long ll(std::size_t x) { return static_cast<long long>(x); }

using PairSet = std::vector<std::pair<Vertex, Vertex>>;  // unordered, stored (min, max), sorted

inline PairSet normalised(PairSet p) {
  for (auto& [a, b] : p)
    if (a > b) std::swap(a, b);
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace detail

// λ ≥ β and its equality cases; λ = n and λ = n - 1 characterizations.
inline TheoremRecord check_lambda_bounds(const Multigraph& g, Recognizer& rec) {
  detail::require_two_connected(g);
  TheoremRecord r;
  r.theorem = "lambda_bound";
  const LambdaProfile p = lambda_profile_unchecked(g);
  const InvariantBundle inv = invariants(g);
  const std::size_t n = g.n();
  const bool three = vertex_connectivity(g) >= 3;
  r.values = {{"lambda", detail::ll(p.lambda)},
              {"beta", detail::ll(inv.beta)},
              {"n", detail::ll(n)},
              {"n_nonbip", detail::ll(inv.n_nonbip)}};
  if (p.lambda < inv.beta) r.fail("lambda < beta");
  r.equality = p.lambda == inv.beta;
  bool agree = true;
  if (p.bipartite) {
    if (p.lambda != 0 || inv.beta != 0) r.fail("bipartite graph with lambda or beta nonzero");
  } else if (three) {
    const bool eq = p.lambda == inv.beta, full = inv.beta == n, in_g = rec.in_G(g);
    if (eq != full || full != in_g) {
      agree = false;
      r.failures.push_back("3-connected: lambda=beta, beta=n, G-membership disagree");
    }
  }
  const bool in_gp = rec.in_prime(g, Family::Gprime);
  if ((p.lambda == inv.beta) != (inv.beta == inv.n_nonbip) || (inv.beta == inv.n_nonbip) != in_gp) {
    agree = false;
    r.failures.push_back("lambda=beta, beta=n_nonbip, Gprime-membership disagree");
  }
  const bool in_np = rec.in_prime(g, Family::Nprime);
  if ((p.lambda == n) != in_np) {
    agree = false;
    r.failures.push_back("lambda=n disagrees with Nprime-membership");
  }
  if (three) {
    if ((p.lambda == n) != rec.in_N(g, std::nullopt)) {
      agree = false;
      r.failures.push_back("lambda=n disagrees with (G,V) in N");
    }
    for (Vertex u = 0; u < n; ++u) {
      const bool defect = p.lambda + 1 == n && !p.in_lambda(u);
      if (defect != rec.in_N(g, u)) {
        agree = false;
        r.failures.push_back("lambda=n-1 with defect " + std::to_string(u) + " disagrees with (G,{u}) in N");
      }
    }
  }
  r.membership_agrees = agree;
  return r;
}

// ρ ≥ β′+3b′−3θ̄+θ ≥ 3n−9θ̄−5θ, the 3-connected form, and their equality cases.
inline TheoremRecord check_rho_bounds(const Multigraph& h, Recognizer& rec) {
  if (!is_cubic(h) || !is_connected(h)) throw GraphError("expected a connected cubic graph");
  if (!is_bipartite(h)) throw GraphError("rho bounds need a bipartite graph");
  TheoremRecord r;
  r.theorem = "rho_bound";
  const LambdaProfile p = lambda_profile_unchecked(h);
  const InvariantBundle inv = invariants(h);
  const long long n = detail::ll(h.n()), rho = detail::ll(p.rho);
  const long long bp = detail::ll(inv.beta_prime), bc = detail::ll(inv.b_prime);
  const long long th = detail::ll(inv.theta), tb = detail::ll(inv.theta_bar);
  const long long mid = bp + 3 * bc - 3 * tb + th, low = 3 * n - 9 * tb - 5 * th;
  r.values = {{"rho", rho}, {"beta_prime", bp}, {"b_prime", bc}, {"theta", th}, {"theta_bar", tb},
              {"n", n}, {"middle", mid}, {"lower", low}};
  if (rho < mid) r.fail("rho below beta'+3b'-3theta_bar+theta");
  if (mid < low) r.fail("beta'+3b'-3theta_bar+theta below 3n-9theta_bar-5theta");
  r.equality = rho == mid;
  bool agree = true;
  if ((rho == mid) != rec.in_prime(h, Family::L)) {
    agree = false;
    r.failures.push_back("first equality disagrees with L-membership");
  }
  if ((rho == mid && mid == low) != rec.in_prime(h, Family::Kprime)) {
    agree = false;
    r.failures.push_back("double equality disagrees with Kprime-membership");
  }
  if (vertex_connectivity(h) >= 3) {
    const long long mid3 = bp + 3 * bc - 3, low3 = 3 * n - 9;
    r.values["middle_3conn"] = mid3;
    r.values["lower_3conn"] = low3;
    if (rho < mid3) r.fail("rho below beta'+3b'-3");
    if (mid3 < low3) r.fail("beta'+3b'-3 below 3n-9");
    const bool in_k = rec.in_K(h);
    if ((rho == mid3) != (in_k || Recognizer::in_J(h))) {
      agree = false;
      r.failures.push_back("3-connected first equality disagrees with J or K membership");
    }
    if ((rho == mid3 && mid3 == low3) != in_k) {
      agree = false;
      r.failures.push_back("3-connected double equality disagrees with K-membership");
    }
  }
  r.membership_agrees = agree;
  return r;
}

// Pair sets across every nontrivial tight cut and every 2-cut.
inline TheoremRecord check_pair_composition(const Multigraph& h) {
  if (!is_cubic(h) || !is_connected(h) || !is_bipartite(h))
    throw GraphError("pair composition needs a connected bipartite cubic graph");
  TheoremRecord r;
  r.theorem = "pair_composition";
  const detail::PairSet direct = detail::normalised(lambda_profile_unchecked(h).pairs);
  const std::size_t rho = direct.size();
  long long tight_checked = 0, two_checked = 0;

  for (const Cut& c : nontrivial_tight_cuts(h)) {
    ++tight_checked;
    Contraction h1 = contract(h, c.other_shore(h.n()));  // H / X-bar
    Contraction h2 = contract(h, c.shore);               // H / X
    const LambdaProfile p1 = lambda_profile_unchecked(h1.graph), p2 = lambda_profile_unchecked(h2.graph);
    const Vertex xb = h1.contraction_vertex, x = h2.contraction_vertex;
    detail::PairSet built;
    std::vector<Vertex> across1, across2;
    for (auto [a, b] : p1.pairs) {
      if (a == xb || b == xb) across1.push_back(a == xb ? h1.to_host[b] : h1.to_host[a]);
      else built.emplace_back(h1.to_host[a], h1.to_host[b]);
    }
    for (auto [a, b] : p2.pairs) {
      if (a == x || b == x) across2.push_back(a == x ? h2.to_host[b] : h2.to_host[a]);
      else built.emplace_back(h2.to_host[a], h2.to_host[b]);
    }
    for (Vertex u : across1)
      for (Vertex w : across2) built.emplace_back(u, w);
    const std::size_t raw = built.size();
    built = detail::normalised(std::move(built));
    if (std::adjacent_find(built.begin(), built.end()) != built.end() || raw != built.size())
      r.fail("tight-cut pair union is not disjoint");
    if (built != direct) r.fail("tight-cut pair set differs from direct computation");
    const long long l1 = detail::ll(p1.partners[xb]), l2 = detail::ll(p2.partners[x]);
    const long long formula = detail::ll(p1.rho) - l1 + detail::ll(p2.rho) - l2 + l1 * l2;
    if (formula != detail::ll(rho)) r.fail("tight-cut rho formula differs from direct computation");
  }

  for (const Cut& c : enumerate_small_cuts(h, 2)) {
    ++two_checked;
    auto [m1, m2] = marked_components(h, c);
    detail::PairSet built;
    std::size_t sum = 0;
    for (const MarkedComponent* mc : {&m1, &m2}) {
      const LambdaProfile p = lambda_profile_unchecked(mc->graph);
      sum += p.rho;
      for (auto [a, b] : p.pairs) built.emplace_back(mc->to_host[a], mc->to_host[b]);
    }
    built = detail::normalised(std::move(built));
    if (built != direct) r.fail("2-cut pair set differs from direct computation");
    if (sum != rho) r.fail("2-cut rho sum differs from direct computation");
  }
  r.values = {{"rho", detail::ll(rho)}, {"tight_cuts", tight_checked}, {"two_cuts", two_checked}};
  return r;
}

// Λ across separating 3-cuts (one-way), 2-cuts (exact), and barriers (exact).
inline TheoremRecord check_vertex_composition(const Multigraph& g, std::size_t barrier_limit = 20) {
  detail::require_two_connected(g);
  TheoremRecord r;
  r.theorem = "vertex_composition";
  const VertexSet lam = lambda_profile_unchecked(g).lambda_set;
  long long sep = 0, two = 0, bars = 0;

  for (const Cut& c : enumerate_small_cuts(g, 3)) {
    if (c.is_trivial(g.n()) || !is_separating_cut(g, c)) continue;
    ++sep;
    for (const Contraction& side : {contract(g, c.other_shore(g.n())), contract(g, c.shore)}) {
      for (Vertex v = 0; v < side.graph.n(); ++v) {
        if (v == side.contraction_vertex || !is_lambda_matchable_vertex(side.graph, v)) continue;
        if (!std::binary_search(lam.begin(), lam.end(), side.to_host[v]))
          r.fail("vertex matchable in a separating contraction but not in the graph");
      }
    }
  }

  for (const Cut& c : enumerate_small_cuts(g, 2)) {
    ++two;
    auto [m1, m2] = marked_components(g, c);
    VertexSet built;
    for (const MarkedComponent* mc : {&m1, &m2})
      for (Vertex v : lambda_profile_unchecked(mc->graph).lambda_set) built.push_back(mc->to_host[v]);
    std::sort(built.begin(), built.end());
    if (built != lam) r.fail("2-cut vertex set differs from direct computation");
  }

  if (vertex_connectivity(g) >= 3 && g.n() >= 4) {
    std::vector<Barrier> barriers = candidate_barriers(g, barrier_limit);
    barriers.push_back(Barrier{{0}});
    for (const Barrier& b : barriers) {
      ++bars;
      if (lambda_via_barrier(g, b) != lam) r.fail("barrier formula differs from direct computation");
    }
  }
  r.values = {{"lambda", detail::ll(lam.size())}, {"separating_cuts", sep}, {"two_cuts", two}, {"barriers", bars}};
  return r;
}

// Leaf multisets of both decompositions under every root choice.
inline TheoremRecord check_decomposition_uniqueness(const Multigraph& g) {
  detail::require_two_connected(g);
  TheoremRecord r;
  r.theorem = "decomposition_uniqueness";
  const std::size_t tight = nontrivial_tight_cuts(g).size(), two = enumerate_small_cuts(g, 2).size();
  const FormMultiset t0 = leaf_forms(tight_cut_decomposition(g, 0), false);
  const FormMultiset s0 = leaf_forms(two_cut_decomposition(g, 0), false);
  for (std::size_t i = 1; i < tight; ++i)
    if (leaf_forms(tight_cut_decomposition(g, i), false) != t0) r.fail("tight cut leaves depend on the first cut");
  for (std::size_t i = 1; i < two; ++i)
    if (leaf_forms(two_cut_decomposition(g, i), false) != s0) r.fail("3-connected pieces depend on the first cut");
  r.values = {{"tight_choices", detail::ll(tight)}, {"two_cut_choices", detail::ll(two)}};
  return r;
}

// Fast path against enumeration: tightness of every odd 3-cut, λ/ρ profiles,
// and every invariant.
inline TheoremRecord check_oracle_agreement(const Multigraph& g) {
  TheoremRecord r;
  r.theorem = "oracle_agreement";
  bool agree = true;
  long long cuts = 0;
  for (const Cut& c : enumerate_small_cuts(g, 3)) {
    ++cuts;
    if (is_tight_cut(g, c) != oracle::is_tight_cut(g, c)) {
      agree = false;
      r.failures.push_back("tightness differs");
    }
  }
  if (auto parts = bipartition(g))
    for (const Cut& c : enumerate_small_cuts(g, 3))
      if (is_tight_cut_bipartite(g, *parts, c) != oracle::is_tight_cut(g, c)) {
        agree = false;
        r.failures.push_back("bipartite tightness differs");
      }
  const LambdaProfile fast = lambda_profile_unchecked(g), slow = oracle::lambda_profile(g);
  if (fast.lambda_set != slow.lambda_set) {
    agree = false;
    r.failures.push_back("lambda set differs");
  }
  if (fast.pairs != slow.pairs) {
    agree = false;
    r.failures.push_back("pair set differs");
  }
  if (!(invariants(g) == oracle::invariants(g))) {
    agree = false;
    r.failures.push_back("invariants differ");
  }
  r.values = {{"cuts", cuts}, {"lambda", detail::ll(slow.lambda)}, {"rho", detail::ll(slow.rho)}};
  r.oracle_agrees = agree;
  return r;
}

// pq - p - q >= 3 for p, q >= 3, with equality iff p = q = 3.
inline bool check_technical_inequality(long long p, long long q) {
  if (p < 3 || q < 3) throw GraphError("technical inequality needs p, q >= 3");
  const long long v = p * q - p - q;
  return v >= 3 && ((v == 3) == (p == 3 && q == 3));
}

inline VerificationReport verify_graph(const Multigraph& g, Recognizer& rec, const VerifyOptions& opt = {}) {
  detail::require_two_connected(g);
  VerificationReport rep;
  rep.graph_id = canonical_hash(g);
  rep.n = g.n();
  rep.m = g.m();
  rep.records.push_back(check_lambda_bounds(g, rec));
  const bool bip = is_bipartite(g);
  if (bip) rep.records.push_back(check_rho_bounds(g, rec));
  if (opt.compositions) {
    if (bip) rep.records.push_back(check_pair_composition(g));
    rep.records.push_back(check_vertex_composition(g));
  }
  if (opt.uniqueness) rep.records.push_back(check_decomposition_uniqueness(g));
  if (g.n() <= opt.oracle_max_n) rep.records.push_back(check_oracle_agreement(g));
  return rep;
}

// Verifies every graph; `jobs` workers each keep their own recognizer.
// Output is ordered by canonical hash, then by input position.
inline std::vector<VerificationReport> run_corpus(const std::vector<Multigraph>& corpus, const VerifyOptions& opt = {},
                                                  std::size_t jobs = 1) {
  std::vector<VerificationReport> out(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    Recognizer rec;
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        out[i] = verify_graph(corpus[i], rec, opt);
      } catch (const std::exception& e) {
        out[i].graph_id = canonical_hash(corpus[i]);
        out[i].n = corpus[i].n();
        out[i].m = corpus[i].m();
        TheoremRecord bad;
        bad.theorem = "precondition";
        bad.fail(e.what());
        out[i].records.push_back(std::move(bad));
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, corpus.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const VerificationReport& a, const VerificationReport& b) { return a.graph_id < b.graph_id; });
  return out;
}

}  // namespace cubmatch
