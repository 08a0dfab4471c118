// raagkit — computing in right-angled Artin groups and their extension graphs.
// Finite subgraphs of the extension graph, whose vertices are conjugates
// v^g of generators and whose edges join commuting conjugates.  Provides
// vertex equality/adjacency predicates, pivot points of a syllable
// decomposition, the chain / union-of-chains / axial / ball builders, and
// exact distance queries.
//
// Distributed under the MIT license; see LICENSE at the repository root.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "raag/syllables.hpp"
#include "raag/word.hpp"

namespace raag {

inline constexpr int kDefaultDecompositionCap = 10000;
inline constexpr size_t kDefaultSubgraphGuard = 500000;

// Strip from the left of `h` every extractable syllable lying in st(base):
// whenever a syllable commutes with its whole left context and its vertex is
// in st(base), it acts trivially on `base` from that side and is removed.
// The fixpoint is a canonical representative of the coset <st(base)> h, so
// equal extension-graph vertices get equal keys.
inline Element canonical_coset_rep(const SimplicialGraph& g, int base,
                                   Element h) {
  const uint64_t st = g.st_mask(base);
  bool changed = true;
  while (changed) {
    changed = false;
    const auto& w = h.syllables();
    for (int p : front_movable_positions(w, g)) {
      if (!(st & (uint64_t{1} << w[p].v))) continue;
      std::vector<Syllable> rest;
      rest.reserve(w.size() - 1);
      for (int q = 0; q < static_cast<int>(w.size()); ++q)
        if (q != p) rest.push_back(w[q]);
      h = Element::from_syllables(g, rest);
      changed = true;
      break;
    }
  }
  return h;
}

// A vertex v^g of the extension graph: a base generator conjugated by a
// group element.  The canonical conjugator determines equality.
struct ExtVertex {
  const SimplicialGraph* graph = nullptr;
  int base = -1;
  Element conj;       // conjugator as provided
  Element canonical;  // canonical coset representative of <st(base)> conj

  ExtVertex(const SimplicialGraph& g, int base_vertex, Element conjugator)
      : graph(&g),
        base(base_vertex),
        conj(std::move(conjugator)),
        canonical(canonical_coset_rep(g, base_vertex, conj)) {
    if (base < 0 || base >= g.n())
      throw std::invalid_argument("extension vertex: base out of range");
  }

  std::string key() const {
    return std::to_string(base) + "|" + canonical.key();
  }

  // "u_1" for vertices of the defining graph, "u_1^(t v u)" otherwise; the
  // canonical conjugator is displayed.
  std::string str() const {
    if (canonical.is_identity()) return graph->name(base);
    return graph->name(base) + "^(" + canonical.str() + ")";
  }
};

// Equality as extension-graph vertices: same base and the conjugators differ
// by an element of <st(base)> on the left, tested through the support of the
// difference (the centralizer of a generator is its star subgroup).
inline bool ext_vertex_equal(const ExtVertex& x, const ExtVertex& y) {
  if (x.graph != y.graph)
    throw std::invalid_argument("extension vertices on different graphs");
  if (x.base != y.base) return false;
  Element diff = y.conj * x.conj.inverse();
  return (diff.support_mask() & ~x.graph->st_mask(x.base)) == 0;
}

// Adjacency: u^h and w^c commute iff, after translating u^h back to u, the
// translate of w lands in the star subgroup of u.
inline bool ext_adjacent(const ExtVertex& x, const ExtVertex& y) {
  if (x.graph != y.graph)
    throw std::invalid_argument("extension vertices on different graphs");
  if (ext_vertex_equal(x, y)) return false;
  const SimplicialGraph& g = *x.graph;
  Element e = y.conj * x.conj.inverse();
  Element moved = Element::generator(g, y.base).conjugate(e);
  return (moved.support_mask() & ~g.st_mask(x.base)) == 0;
}

// Pivot points of a decomposition s_n ... s_1: the i-th pivot is the vertex
// of s_i conjugated by s_i ... s_1.  Every decomposition of one element
// yields the same pivots up to the induced permutation of syllables.
inline std::vector<ExtVertex> pivot_points(const SyllableSeq& s) {
  std::vector<ExtVertex> out;
  const int n = s.size();
  out.reserve(n);
  for (int i = 1; i <= n; ++i)
    out.emplace_back(*s.graph, s.from_right(i).v, s.prefix_conjugator(i));
  return out;
}

// A finite induced subgraph of the extension graph.
struct ExtSubgraph {
  const SimplicialGraph* graph = nullptr;
  std::vector<ExtVertex> vertices;
  std::vector<std::vector<int>> adj;
  std::string provenance;
  bool distance_exact = false;
  std::unordered_map<std::string, int> index;

  int find(const ExtVertex& v) const {
    auto it = index.find(v.key());
    return it == index.end() ? -1 : it->second;
  }
  int require(const ExtVertex& v) const {
    int id = find(v);
    if (id < 0)
      throw std::invalid_argument("subgraph does not contain vertex " +
                                  v.str());
    return id;
  }

  size_t edge_count() const {
    size_t t = 0;
    for (const auto& a : adj) t += a.size();
    return t / 2;
  }

  std::vector<int> bfs_from(int src) const {
    std::vector<int> dist(vertices.size(), -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
    }
    return dist;
  }

  int bfs_distance(int a, int b) const { return bfs_from(a)[b]; }

  bool connected() const {
    if (vertices.empty()) return true;
    auto d = bfs_from(0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
  }
};

namespace detail {

// Shared builder: the union of the defining-graph copies Gamma^{c} over the
// given conjugators.  Vertices are deduplicated by canonical key.  Cross-copy
// adjacency between u^{c_i} and w^{c_j} depends only on w and e = c_j c_i^-1
// (it holds iff supp(w^e) is contained in st(u)), so each copy pair costs
// |V| conjugations plus |V|^2 mask tests; the per-e support masks are cached
// because chains built from periodic words repeat the same e many times.
inline ExtSubgraph build_union_of_copies(const SimplicialGraph& g,
                                         const std::vector<Element>& copies_in,
                                         std::string provenance,
                                         bool distance_exact,
                                         size_t guard) {
  ExtSubgraph out;
  out.graph = &g;
  out.provenance = std::move(provenance);
  out.distance_exact = distance_exact;

  std::vector<Element> copies;
  {
    std::map<std::string, int> seen;
    for (const Element& c : copies_in)
      if (seen.emplace(c.key(), 1).second) copies.push_back(c);
  }
  const int n = g.n();
  const int nc = static_cast<int>(copies.size());

  std::vector<std::vector<int>> slot(nc, std::vector<int>(n, -1));
  for (int ci = 0; ci < nc; ++ci) {
    for (int w = 0; w < n; ++w) {
      ExtVertex xv(g, w, copies[ci]);
      auto it = out.index.find(xv.key());
      if (it != out.index.end()) {
        slot[ci][w] = it->second;
        continue;
      }
      if (out.vertices.size() >= guard)
        throw std::runtime_error("extension subgraph: vertex guard exceeded");
      int id = static_cast<int>(out.vertices.size());
      out.index.emplace(xv.key(), id);
      out.vertices.push_back(std::move(xv));
      slot[ci][w] = id;
    }
  }
  out.adj.assign(out.vertices.size(), std::vector<int>());

  std::vector<std::pair<int, int>> edges;
  auto add_edge = [&edges](int a, int b) {
    if (a == b) return;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  };

  for (int ci = 0; ci < nc; ++ci)
    for (int a = 0; a < n; ++a)
      for (int b : g.neighbors(a))
        if (a < b) add_edge(slot[ci][a], slot[ci][b]);

  std::unordered_map<std::string, std::vector<uint64_t>> mask_cache;
  for (int ci = 0; ci < nc; ++ci) {
    for (int cj = ci + 1; cj < nc; ++cj) {
      Element e = copies[cj] * copies[ci].inverse();
      auto [it, fresh] = mask_cache.try_emplace(e.key());
      if (fresh) {
        Element einv = e.inverse();
        it->second.resize(n);
        for (int w = 0; w < n; ++w)
          it->second[w] =
              (einv * Element::generator(g, w) * e).support_mask();
      }
      const std::vector<uint64_t>& masks = it->second;
      for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
          if ((masks[w] & ~g.st_mask(u)) == 0)
            add_edge(slot[ci][u], slot[cj][w]);
    }
  }

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& [a, b] : edges) {
    out.adj[a].push_back(b);
    out.adj[b].push_back(a);
  }
  for (auto& lst : out.adj) std::sort(lst.begin(), lst.end());
  return out;
}

}  // namespace detail

// The chain of a decomposition s_n ... s_1: the union of the copies
// Gamma^{s_i ... s_1} for i = 0..n.  Distances read off a chain are exact
// for all of its vertex pairs when the defining graph has girth >= 6 (chains
// are then weakly convex), and also when the syllable vertices pairwise fail
// to commute (the decomposition of every subword is then unique, so the
// chain coincides with the union of chains over all decompositions, which
// contains a geodesic for every pair it spans).  Otherwise a chain only
// bounds distances from above, so the flag is false.
inline ExtSubgraph build_chain(const SimplicialGraph& g, const SyllableSeq& s,
                               size_t guard = kDefaultSubgraphGuard) {
  std::vector<Element> copies;
  for (int i = 0; i <= s.size(); ++i) copies.push_back(s.prefix_conjugator(i));
  const bool exact =
      g.metrics().girth.at_least(6) || pairwise_noncommuting(s.syl, g);
  return detail::build_union_of_copies(
      g, copies, "chain[" + s.str() + "]", exact, guard);
}

// Thrown when an element has more syllable decompositions than the cap.
struct DecompositionOverflowError : std::runtime_error {
  explicit DecompositionOverflowError(int cap)
      : std::runtime_error(
            "element has more than " + std::to_string(cap) +
            " syllable decompositions (raise the cap to proceed)"),
        partial_count(cap) {}
  int partial_count;
};

// The union of the chains of every syllable decomposition of x.  Weakly
// convex in the extension graph for any girth, so distances are exact for
// all pairs it contains.
inline ExtSubgraph build_lambda(const SimplicialGraph& g, const Element& x,
                                int cap = kDefaultDecompositionCap,
                                size_t guard = kDefaultSubgraphGuard) {
  DecompositionSet ds = enumerate_syllable_decompositions(x, cap);
  if (ds.overflow) throw DecompositionOverflowError(cap);
  std::vector<Element> copies;
  for (const SyllableSeq& s : ds.seqs)
    for (int i = 0; i <= s.size(); ++i)
      copies.push_back(s.prefix_conjugator(i));
  return detail::build_union_of_copies(
      g, copies, "lambda[" + x.str() + "]", /*distance_exact=*/true, guard);
}

// A window of the axial subgraph of a cyclically reduced loxodromic element:
// the union of the copies Gamma^{g(m)} for m = -nM .. nM, where
// g(nq + r) = (s_r ... s_1) g^q.  The construction carries its geometric
// guarantees (the infinite union is weakly convex and hosts the invariant
// geodesics) when the girth is at least 6 or the syllable vertices pairwise
// fail to commute, and is rejected outside those regimes.  A finite window
// of a weakly convex set is still not guaranteed convex, so distances are
// not marked exact.
inline ExtSubgraph build_axial(const SimplicialGraph& g, const SyllableSeq& s,
                               int window,
                               size_t guard = kDefaultSubgraphGuard) {
  if (window < 0)
    throw std::invalid_argument("axial subgraph: window must be >= 0");
  if (!g.metrics().girth.at_least(6) && !pairwise_noncommuting(s.syl, g))
    throw std::invalid_argument(
        "axial subgraph: requires girth >= 6 or pairwise non-commuting "
        "support");
  Element x = s.element();
  if (x.syllable_count() != s.size())
    throw std::invalid_argument(
        "axial subgraph: sequence is not a reduced decomposition");
  if (!is_cyclically_reduced(x))
    throw std::invalid_argument(
        "axial subgraph: element must be cyclically syllable-reduced");
  if (!classify(x).loxodromic)
    throw std::invalid_argument("axial subgraph: element must be loxodromic");
  const int n = s.size();
  std::vector<Element> copies;
  for (int m = -n * window; m <= n * window; ++m) {
    long long q = m >= 0 ? m / n : -((-static_cast<long long>(m) + n - 1) / n);
    int r = static_cast<int>(m - q * n);
    copies.push_back(s.prefix_conjugator(r) * x.power(q));
  }
  return detail::build_union_of_copies(
      g, copies,
      "axial[" + s.str() + "; window=" + std::to_string(window) + "]",
      /*distance_exact=*/false, guard);
}

// The union of the copies Gamma^{h c} over all h of word length <= radius,
// where c is the conjugator of `center`: a crude neighborhood of the copy of
// the defining graph containing `center`.  Distances are upper bounds only.
inline ExtSubgraph build_ball(const SimplicialGraph& g,
                              const ExtVertex& center, int radius,
                              size_t guard = kDefaultSubgraphGuard) {
  if (radius < 0)
    throw std::invalid_argument("ball subgraph: radius must be >= 0");
  // Breadth-first enumeration of the word-length ball, deduplicated by
  // normal form.
  std::vector<Element> ball{Element::identity(g)};
  std::map<std::string, int> seen{{ball[0].key(), 0}};
  size_t frontier_begin = 0;
  for (int layer = 1; layer <= radius; ++layer) {
    size_t frontier_end = ball.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (int v = 0; v < g.n(); ++v) {
        for (long long e : {1LL, -1LL}) {
          Element next = ball[i] * Element::generator(g, v, e);
          if (next.word_length() != layer) continue;
          if (!seen.emplace(next.key(), 1).second) continue;
          if (ball.size() * g.n() >= guard)
            throw std::runtime_error("ball subgraph: vertex guard exceeded");
          ball.push_back(std::move(next));
        }
      }
    }
    frontier_begin = frontier_end;
  }
  std::vector<Element> copies;
  copies.reserve(ball.size());
  for (const Element& h : ball) copies.push_back(h * center.conj);
  return detail::build_union_of_copies(
      g, copies,
      "ball[" + center.str() + "; radius=" + std::to_string(radius) + "]",
      /*distance_exact=*/false, guard);
}

// ---------------------------------------------------------------------------
// Exact distances.

enum class DistanceMode { Auto, Chain, Lambda };

// Exact extension-graph distance between two vertices.  The pair is first
// translated so that x sits in the base copy; the remaining displacement g
// determines the finite convex subgraph searched: the chain of nf(g) when a
// single chain is distance-exact (girth >= 6, or displacement support
// pairwise non-commuting), or the union of chains over all decompositions
// otherwise (or as forced by `mode`).  Forcing Chain outside the exact
// regimes is rejected because a single chain then only bounds the distance.
inline int ext_distance(const ExtVertex& x, const ExtVertex& y,
                        DistanceMode mode = DistanceMode::Auto,
                        int lambda_cap = kDefaultDecompositionCap,
                        size_t guard = kDefaultSubgraphGuard) {
  if (x.graph != y.graph)
    throw std::invalid_argument("extension vertices on different graphs");
  const SimplicialGraph& g = *x.graph;
  ExtVertex x0(g, x.base, Element::identity(g));
  ExtVertex y0(g, y.base, y.conj * x.conj.inverse());
  const Element& disp = y0.canonical;
  if (disp.is_identity()) {
    // Both vertices lie in one copy of the defining graph, whose geodesics
    // remain geodesics in the extension graph.
    return g.distance(x0.base, y0.base);
  }
  const bool chain_exact = g.metrics().girth.at_least(6) ||
                           pairwise_noncommuting(disp.syllables(), g);
  DistanceMode resolved = mode;
  if (resolved == DistanceMode::Auto)
    resolved = chain_exact ? DistanceMode::Chain : DistanceMode::Lambda;
  if (resolved == DistanceMode::Chain && !chain_exact)
    throw std::invalid_argument(
        "ext_distance: chain mode needs girth >= 6 or pairwise "
        "non-commuting support for exactness; use lambda");

  ExtSubgraph sub;
  if (resolved == DistanceMode::Chain) {
    SyllableSeq s{&g, disp.syllables()};
    sub = build_chain(g, s, guard);
  } else {
    sub = build_lambda(g, disp, lambda_cap, guard);
  }
  int a = sub.require(x0);
  int b = sub.require(y0);
  int d = sub.bfs_distance(a, b);
  if (d < 0)
    throw std::logic_error("ext_distance: subgraph unexpectedly disconnected");
  return d;
}

}  // namespace raag
