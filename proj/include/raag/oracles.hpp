// raagkit — computing in right-angled Artin groups and their extension graphs.
// Independent brute-force oracles.  Each routine here recomputes a quantity
// by undirected search over elementary rewriting moves, deliberately sharing
// no logic with the production algorithms it cross-checks; the test suite
// pins the fast paths against these on small instances.
//
// Distributed under the MIT license; see LICENSE at the repository root.

#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "raag/word.hpp"

namespace raag {

namespace oracle {

inline std::string sequence_key(const std::vector<Syllable>& w) {
  std::string k;
  for (const Syllable& s : w) {
    k += std::to_string(s.v);
    k += ':';
    k += std::to_string(s.e);
    k += ';';
  }
  return k;
}

// Minimal syllable count of the element spelled by `w`, found by exhaustive
// breadth-first search over single rewriting moves: swapping two adjacent
// syllables whose vertices span an edge, and merging two adjacent
// same-vertex syllables (dropping a cancelled one).  No normal-form
// machinery is involved.
inline int rewriting_min_syllable_count(const std::vector<Syllable>& w0,
                                        const SimplicialGraph& g,
                                        size_t state_guard = 2000000) {
  std::vector<Syllable> start;
  for (const Syllable& s : w0)
    if (s.e != 0) start.push_back(s);
  std::set<std::string> seen{sequence_key(start)};
  std::deque<std::vector<Syllable>> queue{start};
  int best = static_cast<int>(start.size());
  while (!queue.empty()) {
    std::vector<Syllable> cur = std::move(queue.front());
    queue.pop_front();
    best = std::min(best, static_cast<int>(cur.size()));
    const int n = static_cast<int>(cur.size());
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<Syllable> next;
      if (cur[i].v == cur[i + 1].v) {
        next = cur;
        next[i].e += next[i + 1].e;
        next.erase(next.begin() + i + 1);
        if (next[i].e == 0) next.erase(next.begin() + i);
      } else if (g.adjacent(cur[i].v, cur[i + 1].v)) {
        next = cur;
        std::swap(next[i], next[i + 1]);
      } else {
        continue;
      }
      std::string k = sequence_key(next);
      if (!seen.insert(k).second) continue;
      if (seen.size() > state_guard)
        throw std::runtime_error("rewriting oracle: state guard exceeded");
      queue.push_back(std::move(next));
    }
  }
  return best;
}

// Enumerate every group element of word length at most `radius` (breadth
// first over right multiplication by generators, deduplicated by normal
// form).
inline std::vector<Element> enumerate_ball(const SimplicialGraph& g,
                                           int radius,
                                           size_t guard = 5000000) {
  std::vector<Element> all{Element::identity(g)};
  std::set<std::string> seen{all[0].key()};
  size_t frontier_begin = 0;
  for (int layer = 1; layer <= radius; ++layer) {
    size_t frontier_end = all.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (int v = 0; v < g.n(); ++v) {
        for (long long e : {1LL, -1LL}) {
          Element next = all[i] * Element::generator(g, v, e);
          if (next.word_length() != layer) continue;
          if (!seen.insert(next.key()).second) continue;
          if (all.size() >= guard)
            throw std::runtime_error("ball enumeration: guard exceeded");
          all.push_back(std::move(next));
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return all;
}

// Minimal syllable count among all conjugates g^h with |h| <= radius.
inline int brute_min_syllable_conjugate(const Element& x, int radius) {
  int best = x.syllable_count();
  for (const Element& h : enumerate_ball(x.graph(), radius))
    best = std::min(best, x.conjugate(h).syllable_count());
  return best;
}

// Does the vertex set S lie inside a join?  Exhaustively tries all
// assignments of every graph vertex to {A, B, outside}: A and B must be
// nonempty, disjoint by construction, fully joined, and S must land in
// A union B.  Only feasible for small graphs.
inline bool exhaustive_join_search(const SimplicialGraph& g,
                                   const std::vector<int>& s) {
  const int n = g.n();
  if (n > 12)
    throw std::invalid_argument("join search: graph too large (max 12)");
  std::vector<int> side(n, 0);  // 0 = outside, 1 = A, 2 = B
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    bool has_a = false, has_b = false;
    for (int i = 0; i < n; ++i) {
      side[i] = static_cast<int>(c % 3);
      c /= 3;
      has_a = has_a || side[i] == 1;
      has_b = has_b || side[i] == 2;
    }
    if (!has_a || !has_b) continue;
    bool ok = true;
    for (int v : s)
      if (side[v] == 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (side[i] == 1 && side[j] == 2 && !g.adjacent(i, j)) ok = false;
    if (ok) return true;
  }
  return false;
}

// Minimal number of star-supported factors needed to spell `x` as a product
// of suffix subtraces, by breadth-first search over every admissible
// extraction (not just maximal ones).  Exponential; small elements only.
inline int brute_star_length(const Element& x, size_t state_guard = 200000) {
  if (x.is_identity()) return 0;  // the empty product
  const SimplicialGraph& g = x.graph();
  std::map<std::string, int> depth{{x.key(), 0}};
  std::deque<Element> queue{x};
  while (!queue.empty()) {
    Element cur = std::move(queue.front());
    queue.pop_front();
    const int d = depth.at(cur.key());
    const auto& w = cur.syllables();
    const int n = static_cast<int>(w.size());
    // Direct dependence successors, for the upward-closure test.
    std::vector<std::vector<int>> succ(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!g.commute(w[i].v, w[j].v)) succ[i].push_back(j);
    for (int c = 0; c < g.n(); ++c) {
      // Candidate positions: any syllable lying in st(c).  The closure test
      // below rejects subsets that are not extractable suffix subtraces.
      std::vector<int> allowed;
      for (int p = 0; p < n; ++p)
        if (w[p].v == c || g.adjacent(w[p].v, c)) allowed.push_back(p);
      const int k = static_cast<int>(allowed.size());
      if (k == 0) continue;
      if (k > 20)
        throw std::runtime_error("star length oracle: extraction too wide");
      for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<char> take(n, 0);
        for (int b = 0; b < k; ++b)
          if (mask & (1u << b)) take[allowed[b]] = 1;
        bool closed = true;
        for (int p = 0; p < n && closed; ++p)
          if (take[p])
            for (int q : succ[p])
              if (!take[q]) {
                closed = false;
                break;
              }
        if (!closed) continue;
        std::vector<Syllable> remainder;
        for (int p = 0; p < n; ++p)
          if (!take[p]) remainder.push_back(w[p]);
        Element rest = Element::from_syllables(g, remainder);
        if (rest.is_identity()) return d + 1;
        auto it = depth.find(rest.key());
        if (it != depth.end()) continue;
        if (depth.size() > state_guard)
          throw std::runtime_error("star length oracle: state guard exceeded");
        depth.emplace(rest.key(), d + 1);
        queue.push_back(std::move(rest));
      }
    }
  }
  throw std::logic_error("star length oracle: search exhausted unexpectedly");
}

// Girth recomputed edge by edge: the shortest cycle through edge (u, v) is
// 1 + the u-v distance with that edge deleted.  Entirely independent of the
// BFS-with-parents computation in GraphMetrics.
inline Girth girth_by_edge_removal(const SimplicialGraph& g) {
  int best = -1;
  const int n = g.n();
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      // BFS from u avoiding the edge u-v.
      std::vector<int> dist(n, -1);
      std::deque<int> q{u};
      dist[u] = 0;
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : g.neighbors(x)) {
          if ((x == u && y == v) || (x == v && y == u)) continue;
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            q.push_back(y);
          }
        }
      }
      if (dist[v] >= 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
  }
  return best < 0 ? Girth::infinite() : Girth::finite(best);
}

}  // namespace oracle

}  // namespace raag
