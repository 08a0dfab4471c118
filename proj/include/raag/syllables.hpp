// raagkit — computing in right-angled Artin groups and their extension graphs.
// Syllable-level combinatorics on top of the word engine: enumerating the
// reduced syllable decompositions of an element, cyclic syllable reduction,
// the elliptic/loxodromic classification, and star length.
//
// Distributed under the MIT license; see LICENSE at the repository root.

#pragma once

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "raag/word.hpp"

namespace raag {

// A concrete reduced syllable sequence s_n ... s_1 spelling an element,
// stored leftmost-first (index 0 = s_n, back = s_1 = first factor applied).
struct SyllableSeq {
  const SimplicialGraph* graph = nullptr;
  std::vector<Syllable> syl;

  int size() const { return static_cast<int>(syl.size()); }

  // 1-based access from the right: from_right(1) = s_1.
  const Syllable& from_right(int i) const {
    if (i < 1 || i > size())
      throw std::out_of_range("syllable sequence: index out of range");
    return syl[syl.size() - static_cast<size_t>(i)];
  }

  Element element() const { return Element::from_syllables(*graph, syl); }

  // The product s_i s_{i-1} ... s_1 (i = 0 gives the identity); conjugating
  // by prefix_conjugator(i) moves the base copy to depth i along this
  // sequence.
  Element prefix_conjugator(int i) const {
    if (i < 0 || i > size())
      throw std::out_of_range("syllable sequence: prefix index out of range");
    std::vector<Syllable> tail(syl.end() - i, syl.end());
    return Element::from_syllables(*graph, tail);
  }

  std::string str() const {
    std::string s;
    for (size_t i = 0; i < syl.size(); ++i) {
      if (i) s += ' ';
      s += graph->name(syl[i].v);
      if (syl[i].e != 1) s += "^" + std::to_string(syl[i].e);
    }
    return s.empty() ? std::string("1") : s;
  }
};

// True when every pair of *distinct* support vertices fails to commute.
// Such a word is order-rigid at every power: distinct-letter position pairs
// are ordered directly, and two positions carrying the same letter are
// ordered through the letter in between (consecutive letters of a reduced
// word differ, and here every other letter is non-commuting).  The
// dependence order of any concatenation of copies is therefore total, so
// every power admits exactly one reduced syllable decomposition.
inline bool pairwise_noncommuting(const std::vector<Syllable>& w,
                                  const SimplicialGraph& g) {
  std::vector<int> support;
  for (const Syllable& s : w)
    if (std::find(support.begin(), support.end(), s.v) == support.end())
      support.push_back(s.v);
  for (size_t i = 0; i < support.size(); ++i)
    for (size_t j = i + 1; j < support.size(); ++j)
      if (g.commute(support[i], support[j])) return false;
  return true;
}

// Every linearization of a reduced sequence, as permutations of its
// positions: orders[k][p] = index into `w` of the syllable placed at output
// position p.  Enumeration is cut off after `cap` results; `overflow` then
// reports that more exist.
struct LinearizationSet {
  std::vector<std::vector<int>> orders;
  bool overflow = false;
};

inline LinearizationSet enumerate_linearizations(
    const std::vector<Syllable>& w, const SimplicialGraph& g, int cap) {
  if (cap <= 0)
    throw std::invalid_argument("linearizations: cap must be positive");
  const int n = static_cast<int>(w.size());
  LinearizationSet out;
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.commute(w[i].v, w[j].v)) {
        succ[i].push_back(j);
        ++indeg[j];
      }
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> used(n, 0);
  // Depth-first over topological orders, positions tried in ascending order
  // so the output is deterministic and starts with the input order's
  // lexicographic family.
  auto rec = [&](auto&& self) -> void {
    if (out.overflow) return;
    if (static_cast<int>(order.size()) == n) {
      if (static_cast<int>(out.orders.size()) == cap) {
        out.overflow = true;
        return;
      }
      out.orders.push_back(order);
      return;
    }
    for (int j = 0; j < n && !out.overflow; ++j) {
      if (used[j] || indeg[j] != 0) continue;
      used[j] = 1;
      for (int k : succ[j]) --indeg[k];
      order.push_back(j);
      self(self);
      order.pop_back();
      for (int k : succ[j]) ++indeg[k];
      used[j] = 0;
    }
  };
  rec(rec);
  return out;
}

// All reduced syllable decompositions of an element: the linearizations of
// its normal form.  Distinct linearizations of a reduced sequence spell
// distinct sequences (same-vertex syllables are never interchangeable), so
// no deduplication is needed.
struct DecompositionSet {
  std::vector<SyllableSeq> seqs;
  bool overflow = false;
};

inline DecompositionSet enumerate_syllable_decompositions(const Element& x,
                                                          int cap) {
  if (cap <= 0)
    throw std::invalid_argument("decompositions: cap must be positive");
  const auto& w = x.syllables();
  LinearizationSet lin = enumerate_linearizations(w, x.graph(), cap);
  DecompositionSet out;
  out.overflow = lin.overflow;
  out.seqs.reserve(lin.orders.size());
  for (const auto& order : lin.orders) {
    SyllableSeq s;
    s.graph = &x.graph();
    for (int p : order) s.syl.push_back(w[p]);
    out.seqs.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cyclic syllable reduction.

struct CyclicReduction {
  Element reduced;     // a conjugate of the input of minimal syllable count
  Element conjugator;  // reduced == input.conjugate(conjugator)
};

namespace detail {

inline bool sequence_less(const std::vector<Syllable>& a,
                          const std::vector<Syllable>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].v != b[i].v) return a[i].v < b[i].v;
    if (a[i].e != b[i].e) return a[i].e < b[i].e;
  }
  return false;
}

}  // namespace detail

// Search the rotation graph of an element: one move conjugates by a
// front-movable syllable (g = s h  ->  g^s = h s), which never increases the
// syllable count and sometimes merges syllables.  The search visits every
// state reachable without increasing the count and returns the
// lexicographically least sequence of minimal count, so the result doubles
// as a conjugacy-class key for cyclically reduced elements (two cyclically
// reduced conjugates are connected by such rotations).
inline CyclicReduction cyclic_syllable_reduce(const Element& x) {
  struct State {
    Element elem;
    Element conj;
  };
  const SimplicialGraph& g = x.graph();
  std::map<std::string, State> seen;
  std::deque<std::string> queue;
  seen.emplace(x.key(), State{x, Element::identity(g)});
  queue.push_back(x.key());
  constexpr size_t kStateGuard = 200000;
  while (!queue.empty()) {
    const std::string key = queue.front();
    queue.pop_front();
    const State cur = seen.at(key);  // copy: `seen` may rehash on insert
    for (int p : front_movable_positions(cur.elem.syllables(), g)) {
      const Syllable s = cur.elem.syllables()[p];
      const Element rot = Element::generator(g, s.v, s.e);
      Element next = cur.elem.conjugate(rot);
      if (next.syllable_count() > cur.elem.syllable_count())
        throw std::logic_error("cyclic reduction: rotation grew the word");
      std::string nk = next.key();
      if (seen.count(nk)) continue;
      if (seen.size() >= kStateGuard)
        throw std::runtime_error("cyclic reduction: state guard exceeded");
      seen.emplace(nk, State{next, cur.conj * rot});
      queue.push_back(nk);
    }
  }
  const State* best = nullptr;
  for (const auto& [key, st] : seen) {
    if (!best || st.elem.syllable_count() < best->elem.syllable_count() ||
        (st.elem.syllable_count() == best->elem.syllable_count() &&
         detail::sequence_less(st.elem.syllables(), best->elem.syllables())))
      best = &st;
  }
  return CyclicReduction{best->elem, best->conj};
}

inline bool is_cyclically_reduced(const Element& x) {
  return cyclic_syllable_reduce(x).reduced.syllable_count() ==
         x.syllable_count();
}

// ---------------------------------------------------------------------------
// Elliptic/loxodromic classification.

// An element is elliptic on the extension graph exactly when the support of
// its cyclically reduced form lies in a join of the defining graph; that
// happens when the support is a single vertex, when the complement graph
// induced on the support is disconnected (the two sides are fully joined),
// or when some outside vertex dominates the whole support.  Loxodromic
// elements carry the refuting certificates for both conditions.
struct Classification {
  bool loxodromic = false;

  // Elliptic witnesses (at most one is set):
  bool small_support = false;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> join;
  std::optional<int> dominating_vertex;

  // Loxodromic certificates:
  std::vector<std::pair<int, int>> complement_tree_edges;
  std::vector<std::pair<int, int>> non_domination;  // (outside w, s not in lk(w))

  Element reduced;     // cyclically reduced representative actually examined
  Element conjugator;  // reduced == input.conjugate(conjugator)

  explicit Classification(const SimplicialGraph& g)
      : reduced(g), conjugator(g) {}
};

inline Classification classify(const Element& x) {
  const SimplicialGraph& g = x.graph();
  Classification out(g);
  CyclicReduction cr = cyclic_syllable_reduce(x);
  out.reduced = cr.reduced;
  out.conjugator = cr.conjugator;
  const std::vector<int> sup = cr.reduced.support();

  if (sup.size() <= 1) {
    out.small_support = true;
    return out;
  }
  InducedSubgraph comp = g.complement_induced(sup);
  if (!comp.connected()) {
    std::vector<int> a = comp.components.front();
    std::vector<int> b;
    for (size_t c = 1; c < comp.components.size(); ++c)
      b.insert(b.end(), comp.components[c].begin(), comp.components[c].end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    out.join = std::make_pair(std::move(a), std::move(b));
    return out;
  }
  uint64_t sup_mask = cr.reduced.support_mask();
  for (int w = 0; w < g.n(); ++w) {
    if (sup_mask & (uint64_t{1} << w)) continue;
    if ((sup_mask & g.lk_mask(w)) == sup_mask) {
      out.dominating_vertex = w;
      return out;
    }
  }

  out.loxodromic = true;
  // Spanning tree of the (connected) complement induced on the support.
  {
    std::vector<char> reached(sup.size(), 0);
    std::vector<int> where(g.n(), -1);
    for (size_t i = 0; i < sup.size(); ++i) where[sup[i]] = static_cast<int>(i);
    std::deque<int> q{0};
    reached[0] = 1;
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (size_t j = 0; j < sup.size(); ++j) {
        if (reached[j] || g.adjacent(sup[i], sup[j]) || i == static_cast<int>(j))
          continue;
        reached[j] = 1;
        out.complement_tree_edges.emplace_back(sup[i], sup[j]);
        q.push_back(static_cast<int>(j));
      }
    }
  }
  for (int w = 0; w < g.n(); ++w) {
    if (sup_mask & (uint64_t{1} << w)) continue;
    uint64_t missing = sup_mask & ~g.lk_mask(w);
    int s = std::countr_zero(missing);
    out.non_domination.emplace_back(w, s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Star length.

// A factorization g = w_n ... w_1 with each factor supported in the star of
// one vertex; factors and their star centers are stored leftmost-first
// (index 0 = w_n).
struct StarDecomposition {
  std::vector<Element> factors;
  std::vector<int> centers;
  int length() const { return static_cast<int>(factors.size()); }
};

namespace detail {

// The largest suffix subtrace of `w` all of whose vertices lie in st(c):
// positions whose every dependence-descendant (themselves included) carries
// a star vertex.  Returned as a sorted position list.
inline std::vector<int> max_star_suffix(const std::vector<Syllable>& w,
                                        const SimplicialGraph& g, int c) {
  const int n = static_cast<int>(w.size());
  std::vector<char> bad(n, 0);
  for (int p = n - 1; p >= 0; --p) {
    if (!(w[p].v == c || g.adjacent(w[p].v, c))) {
      bad[p] = 1;
      continue;
    }
    for (int q = p + 1; q < n && !bad[p]; ++q)
      if (!g.commute(w[p].v, w[q].v) && bad[q]) bad[p] = 1;
  }
  std::vector<int> out;
  for (int p = 0; p < n; ++p)
    if (!bad[p]) out.push_back(p);
  return out;
}

}  // namespace detail

// Minimal star factorization by breadth-first search over remainders.
// From a remainder, the only extraction worth trying per vertex c is the
// *maximal* suffix subtrace supported in st(c): deleting a suffix subtrace
// never increases star length (restrict each factor of a factorization to
// the surviving letters), and widening the rightmost factor to the maximal
// extraction only deletes more, so some minimal factorization uses maximal
// extractions throughout.  Splitting a syllable's exponent across factors
// never helps either — the pieces could be merged back into one factor
// without changing any factor's support — so whole-syllable extraction is
// complete.  Breadth-first order finds the fewest factors; states are
// canonical remainders, so equal remainders reached along different
// extraction orders are merged.  Greedy largest-first extraction is NOT
// minimal in general (a tie can strand two letters sharing no star), which
// is why the search is exhaustive.
inline StarDecomposition star_factorization(const Element& x) {
  const SimplicialGraph& g = x.graph();
  StarDecomposition out;
  if (x.is_identity()) return out;  // the empty product
  struct Step {
    Element rest;        // remainder still to be factored
    std::string parent;  // key of the remainder this was extracted from
    int center;          // star center of the factor extracted to reach rest
    Element factor;      // the extracted factor itself
  };
  std::map<std::string, Step> seen;
  std::deque<std::string> frontier;
  const std::string root = x.str();
  seen.emplace(root, Step{x, std::string(), -1, Element::identity(g)});
  frontier.push_back(root);
  std::string goal;
  bool found = false;
  while (!found) {
    if (frontier.empty())
      throw std::logic_error("star length: search exhausted before factoring");
    if (seen.size() > 200000)
      throw std::length_error("star length: state guard exceeded");
    const std::string key = frontier.front();
    frontier.pop_front();
    const Element rest_elt = seen.at(key).rest;
    const std::vector<Syllable>& rest = rest_elt.syllables();
    for (int c = 0; c < g.n() && !found; ++c) {
      const std::vector<int> pos = detail::max_star_suffix(rest, g, c);
      if (pos.empty()) continue;
      std::vector<Syllable> factor, remainder;
      std::vector<char> take(rest.size(), 0);
      for (int p : pos) take[p] = 1;
      for (size_t p = 0; p < rest.size(); ++p)
        (take[p] ? factor : remainder).push_back(rest[p]);
      Element f = Element::from_syllables(g, factor);
      Element r = Element::from_syllables(g, remainder);
      // Splitting off a suffix subtrace keeps both parts reduced, and their
      // product restores the remainder; verified here because it is cheap.
      if (r * f != rest_elt)
        throw std::logic_error("star length: extraction broke the product");
      const std::string rk = r.str();
      if (seen.count(rk)) continue;  // first arrival is the shallowest
      seen.emplace(rk, Step{r, key, c, f});
      if (r.is_identity()) {
        goal = rk;
        found = true;
      } else {
        frontier.push_back(rk);
      }
    }
  }
  // Walk back from the fully factored state.  Each step records the
  // rightmost factor of its parent, so the walk emits factors
  // leftmost-first, as the decomposition stores them.
  for (std::string key = goal; key != root; key = seen.at(key).parent) {
    const Step& s = seen.at(key);
    out.factors.push_back(s.factor);
    out.centers.push_back(s.center);
  }
  return out;
}

inline int star_length(const Element& x) {
  return star_factorization(x).length();
}

}  // namespace raag
