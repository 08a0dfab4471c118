// raagkit — computing in right-angled Artin groups and their extension graphs.
// Bundled structural checks.  Each check instantiates one proved statement
// about extension graphs on concrete finite instances and reports expected
// versus computed; the test suite and the CLI both run these.  Failures are
// reports, never exceptions, and carry a minimal reproducing instance.
//
// Distributed under the MIT license; see LICENSE at the repository root.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "raag/ext_graph.hpp"
#include "raag/oracles.hpp"
#include "raag/syllables.hpp"
#include "raag/word.hpp"

namespace raag {

struct OracleReport {
  std::string check;
  std::string instance;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct LemmaSuiteParams {
  std::vector<std::string> words;  // extra test words (parsed on the graph)
  int auto_word_limit = 12;        // per-check cap on auto-derived words
  int power = 2;                   // m for the power-of-g checks
  int linearization_cap = 2000;
  int max_linearizations_checked = 48;
  int ball_radius = 2;
  int axial_window = 1;
  int axial_word_limit = 3;
  size_t guard = kDefaultSubgraphGuard;
};

namespace detail {

inline OracleReport make_report(std::string check, std::string instance,
                                std::string expected, std::string computed) {
  OracleReport r;
  r.check = std::move(check);
  r.instance = std::move(instance);
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  r.pass = (r.expected == r.computed);
  return r;
}

inline bool has_central_vertex(const SimplicialGraph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == g.n() - 1) return true;
  return false;
}

inline bool is_star_word(const Element& x) {
  const uint64_t sup = x.support_mask();
  if (sup == 0) return true;
  for (int c = 0; c < x.graph().n(); ++c)
    if ((sup & ~x.graph().st_mask(c)) == 0) return true;
  return false;
}

// First `limit` distinct nonidentity elements spelled by syllable sequences
// of length <= 3 with exponents +-1, in depth-first order, optionally
// filtered; explicit extra words come first.
inline std::vector<Element> derive_words(
    const SimplicialGraph& g, const std::vector<std::string>& extra,
    int limit, const std::function<bool(const Element&)>& keep) {
  std::vector<Element> out;
  std::set<std::string> seen;
  for (const std::string& w : extra) {
    Element x = Element::parse(g, w);
    if (x.is_identity() || !seen.insert(x.key()).second) continue;
    if (keep(x)) out.push_back(x);
  }
  long long scanned = 0;
  const long long scan_cap = 60000;
  auto rec = [&](auto&& self, const Element& cur, int depth) -> void {
    if (static_cast<int>(out.size()) >= limit || scanned > scan_cap) return;
    if (depth == 3) return;
    for (int v = 0; v < g.n(); ++v) {
      for (long long e : {1LL, -1LL}) {
        if (static_cast<int>(out.size()) >= limit || ++scanned > scan_cap)
          return;
        Element next = cur * Element::generator(g, v, e);
        if (!next.is_identity() && seen.insert(next.key()).second &&
            keep(next))
          out.push_back(next);
        self(self, next, depth + 1);
      }
    }
  };
  rec(rec, Element::identity(g), 0);
  if (static_cast<int>(out.size()) > limit)
    out.erase(out.begin() + limit, out.end());
  return out;
}

}  // namespace detail

// -- Check: st(v) = Gamma ∩ Gamma^(v^l) on graphs without a central vertex. -
inline OracleReport check_star_conjugate_intersection(
    const SimplicialGraph& g) {
  std::string fail;
  for (int v = 0; v < g.n() && fail.empty(); ++v) {
    for (int l = 1; l <= 2 && fail.empty(); ++l) {
      const Element h = Element::generator(g, v, l);
      std::vector<int> got;
      for (int w = 0; w < g.n(); ++w) {
        ExtVertex plain(g, w, Element::identity(g));
        ExtVertex moved(g, w, h);
        if (w == v || ext_vertex_equal(plain, moved)) got.push_back(w);
      }
      if (got != g.star(v))
        fail = "v=" + g.name(v) + " l=" + std::to_string(l);
    }
  }
  return detail::make_report(
      "star-conjugate-intersection",
      "all vertices, l in {1,2}", "fixed set equals st(v) everywhere",
      fail.empty() ? "fixed set equals st(v) everywhere"
                   : "mismatch at " + fail);
}

// -- Check: deleting st(z_i) disconnects Gamma from Gamma^g in the chain. ---
inline OracleReport check_pivot_star_separation(const SimplicialGraph& g,
                                                const Element& x,
                                                size_t guard) {
  SyllableSeq seq{&g, x.syllables()};
  ExtSubgraph chain = build_chain(g, seq, guard);
  std::vector<ExtVertex> pivots = pivot_points(seq);
  std::string fail;
  for (size_t i = 0; i < pivots.size() && fail.empty(); ++i) {
    std::vector<char> removed(chain.vertices.size(), 0);
    for (size_t id = 0; id < chain.vertices.size(); ++id)
      if (ext_vertex_equal(chain.vertices[id], pivots[i]) ||
          ext_adjacent(chain.vertices[id], pivots[i]))
        removed[id] = 1;
    // Sides: the base copy and the fully shifted copy, minus the deletion.
    std::vector<int> side_a, side_b;
    for (int w = 0; w < g.n(); ++w) {
      int a = chain.find(ExtVertex(g, w, Element::identity(g)));
      int b = chain.find(ExtVertex(g, w, x));
      if (a >= 0 && !removed[a]) side_a.push_back(a);
      if (b >= 0 && !removed[b]) side_b.push_back(b);
    }
    std::vector<char> from_a(chain.vertices.size(), 0);
    std::deque<int> q;
    for (int a : side_a) {
      from_a[a] = 1;
      q.push_back(a);
    }
    while (!q.empty()) {
      int c = q.front();
      q.pop_front();
      for (int d : chain.adj[c])
        if (!removed[d] && !from_a[d]) {
          from_a[d] = 1;
          q.push_back(d);
        }
    }
    for (int b : side_b)
      if (from_a[b]) {
        // Vertices shared between both copies sit in st(z_j) intersections;
        // reaching a genuinely shifted vertex is the failure.
        bool also_in_base = false;
        for (int w = 0; w < g.n() && !also_in_base; ++w)
          also_in_base =
              (chain.find(ExtVertex(g, w, Element::identity(g))) == b);
        if (!also_in_base) {
          fail = "word=" + x.str() + " pivot " + std::to_string(i + 1) +
                 " (" + pivots[i].str() + ")";
          break;
        }
      }
  }
  return detail::make_report(
      "pivot-star-separation", "word=" + x.str(),
      "chain splits at every pivot star",
      fail.empty() ? "chain splits at every pivot star" : "leak at " + fail);
}

// -- Check: pivots are permutation invariants of the decomposition. ---------
inline OracleReport check_pivot_invariance(const SimplicialGraph& g,
                                           const Element& x, int cap,
                                           int max_checked) {
  SyllableSeq ref{&g, x.syllables()};
  std::vector<ExtVertex> zs = pivot_points(ref);
  const int n = ref.size();
  LinearizationSet lin = enumerate_linearizations(ref.syl, g, cap);
  std::string fail;
  int checked = 0;
  for (const auto& order : lin.orders) {
    if (checked++ >= max_checked) break;
    SyllableSeq s{&g, {}};
    for (int p : order) s.syl.push_back(ref.syl[p]);
    std::vector<ExtVertex> zs2 = pivot_points(s);
    // Output position p (0-based, leftmost) holds original syllable
    // order[p]; in right-based indexing the new pivot at n - p must equal
    // the original pivot n - order[p].
    for (int p = 0; p < n; ++p) {
      const ExtVertex& mine = zs2[n - p - 1];
      const ExtVertex& theirs = zs[n - order[p] - 1];
      if (!ext_vertex_equal(mine, theirs)) {
        fail = "word=" + x.str() + " reordering " + s.str() + " slot " +
               std::to_string(p);
        break;
      }
    }
    if (!fail.empty()) break;
  }
  return detail::make_report(
      "pivot-permutation-invariance",
      "word=" + x.str() + ", " + std::to_string(checked) + " reorderings",
      "pivots agree across reorderings",
      fail.empty() ? "pivots agree across reorderings" : "mismatch: " + fail);
}

// -- Check: syllable length of powers is multiplicative. --------------------
inline OracleReport check_power_syllable_length(const std::vector<Element>& ws,
                                                int max_power) {
  std::string fail;
  int tried = 0;
  for (const Element& x : ws) {
    ++tried;
    for (int m = -max_power; m <= max_power && fail.empty(); ++m) {
      if (m == -1 || m == 0 || m == 1) continue;
      const long long expect =
          static_cast<long long>(std::abs(m)) * x.syllable_count();
      if (x.power(m).syllable_count() != expect)
        fail = "word=" + x.str() + " m=" + std::to_string(m);
    }
    if (!fail.empty()) break;
  }
  return detail::make_report(
      "power-syllable-length",
      std::to_string(tried) + " cyclically reduced non-star words, powers up "
                              "to " + std::to_string(max_power),
      "syllable length multiplies",
      fail.empty() ? "syllable length multiplies" : "broken at " + fail);
}

// -- Check: syllable permutations displace indices by at most n|V|. ---------
inline OracleReport check_permutation_displacement(const SimplicialGraph& g,
                                                   const std::vector<Element>& ws,
                                                   int m, int cap) {
  // The sharper bound suggested by the underlying argument would replace
  // |V(Gamma)| with the diameter of the complement; the stated bound n|V| is
  // what this check asserts.
  std::string fail;
  int tried = 0;
  for (const Element& x : ws) {
    ++tried;
    const int n = x.syllable_count();
    const long long bound = static_cast<long long>(n) * g.n();
    std::vector<Syllable> cat;
    for (int i = 0; i < m; ++i)
      cat.insert(cat.end(), x.syllables().begin(), x.syllables().end());
    if (Element::from_syllables(g, cat).syllable_count() !=
        static_cast<int>(cat.size()))
      continue;  // power collapsed; not a valid instance
    LinearizationSet lin = enumerate_linearizations(cat, g, cap);
    for (const auto& order : lin.orders) {
      for (size_t p = 0; p < order.size(); ++p) {
        long long disp = std::llabs(static_cast<long long>(p) - order[p]);
        if (disp > bound) {
          fail = "word=" + x.str() + " m=" + std::to_string(m) +
                 " displacement " + std::to_string(disp);
          break;
        }
      }
      if (!fail.empty()) break;
    }
    if (!fail.empty()) break;
  }
  return detail::make_report(
      "syllable-permutation-displacement",
      std::to_string(tried) + " words, power " + std::to_string(m),
      "displacement within n·|V|",
      fail.empty() ? "displacement within n·|V|" : "exceeded at " + fail);
}

// -- Check: closed 2-neighborhoods in a vertex ball are acyclic. ------------
inline OracleReport check_two_neighborhood_acyclic(const SimplicialGraph& g,
                                                   int radius, size_t guard) {
  ExtVertex center(g, 0, Element::identity(g));
  ExtSubgraph ball = build_ball(g, center, radius, guard);
  std::string fail;
  const int nv = static_cast<int>(ball.vertices.size());
  for (int x = 0; x < nv && fail.empty(); ++x) {
    // Vertices within distance 2 of x inside the ball.
    std::vector<int> dist(nv, -1);
    std::vector<int> members;
    std::deque<int> q{x};
    dist[x] = 0;
    members.push_back(x);
    while (!q.empty()) {
      int c = q.front();
      q.pop_front();
      if (dist[c] == 2) continue;
      for (int d : ball.adj[c])
        if (dist[d] < 0) {
          dist[d] = dist[c] + 1;
          members.push_back(d);
          q.push_back(d);
        }
    }
    // Acyclicity of the induced subgraph: edges < vertices per component.
    std::vector<int> comp(nv, -1);
    long long edges = 0;
    for (int u : members)
      for (int v : ball.adj[u])
        if (dist[v] >= 0 && v > u) ++edges;
    int comps = 0;
    for (int u : members) {
      if (comp[u] >= 0) continue;
      ++comps;
      std::deque<int> qq{u};
      comp[u] = comps;
      while (!qq.empty()) {
        int c = qq.front();
        qq.pop_front();
        for (int d : ball.adj[c])
          if (dist[d] >= 0 && comp[d] < 0) {
            comp[d] = comps;
            qq.push_back(d);
          }
      }
    }
    if (edges != static_cast<long long>(members.size()) - comps)
      fail = "vertex " + ball.vertices[x].str();
  }
  return detail::make_report(
      "two-neighborhood-acyclic",
      "ball radius " + std::to_string(radius) + ", " + std::to_string(nv) +
          " vertices",
      "every 2-neighborhood is a forest",
      fail.empty() ? "every 2-neighborhood is a forest"
                   : "cycle near " + fail);
}

// -- Check: lk(v_1) separates the two sides of an axial window. -------------
inline OracleReport check_axial_end_separation(const SimplicialGraph& g,
                                               const Element& x, int window,
                                               size_t guard) {
  SyllableSeq seq{&g, x.syllables()};
  ExtSubgraph axial = build_axial(g, seq, window, guard);
  const int n = seq.size();
  const int v1 = seq.from_right(1).v;

  std::vector<char> removed(axial.vertices.size(), 0);
  for (int u : g.neighbors(v1)) {
    int id = axial.find(ExtVertex(g, u, Element::identity(g)));
    if (id >= 0) removed[id] = 1;
  }
  // Side membership by copy, excluding anything also present in the base
  // copy (copy intersections across the middle live inside Gamma).
  std::vector<char> in_base(axial.vertices.size(), 0);
  for (int w = 0; w < g.n(); ++w) {
    int id = axial.find(ExtVertex(g, w, Element::identity(g)));
    if (id >= 0) in_base[id] = 1;
  }
  auto copy_ids = [&](int m) {
    long long q = m >= 0 ? m / n : -((-static_cast<long long>(m) + n - 1) / n);
    int r = static_cast<int>(m - q * n);
    Element conj = seq.prefix_conjugator(r) * x.power(q);
    std::vector<int> ids;
    for (int w = 0; w < g.n(); ++w) {
      int id = axial.find(ExtVertex(g, w, conj));
      if (id >= 0) ids.push_back(id);
    }
    return ids;
  };
  std::vector<char> neg(axial.vertices.size(), 0), pos(axial.vertices.size(), 0);
  for (int m = 1; m <= n * window; ++m) {
    for (int id : copy_ids(-m))
      if (!in_base[id] && !removed[id]) neg[id] = 1;
    for (int id : copy_ids(m))
      if (!in_base[id] && !removed[id]) pos[id] = 1;
  }
  std::deque<int> q;
  std::vector<char> seen(axial.vertices.size(), 0);
  for (size_t id = 0; id < axial.vertices.size(); ++id)
    if (neg[id]) {
      seen[id] = 1;
      q.push_back(static_cast<int>(id));
    }
  std::string fail;
  while (!q.empty() && fail.empty()) {
    int c = q.front();
    q.pop_front();
    for (int d : axial.adj[c]) {
      if (removed[d] || seen[d]) continue;
      if (pos[d]) {
        fail = "reached " + axial.vertices[d].str();
        break;
      }
      seen[d] = 1;
      q.push_back(d);
    }
  }
  return detail::make_report(
      "axial-link-end-separation",
      "word=" + x.str() + ", window " + std::to_string(window),
      "link of the first pivot separates the sides",
      fail.empty() ? "link of the first pivot separates the sides"
                   : "leak: " + fail);
}

// -- Check: distance formulas along an odd cycle. ---------------------------
inline OracleReport check_cycle_distance_formulas(const SimplicialGraph& g) {
  const int k = g.n();
  // Recover the cyclic order by walking the cycle.
  std::vector<int> order{0};
  std::vector<char> used(k, 0);
  used[0] = 1;
  while (static_cast<int>(order.size()) < k) {
    bool advanced = false;
    for (int v : g.neighbors(order.back()))
      if (!used[v]) {
        order.push_back(v);
        used[v] = 1;
        advanced = true;
        break;
      }
    if (!advanced) break;
  }
  auto vtx = [&](long long a) {
    long long idx = ((a - 1) % k + k) % k;
    return order[static_cast<size_t>(idx)];
  };
  const int l = (k + 1) / 2;
  std::string fail;
  for (int j = 0; j < k && fail.empty(); ++j) {
    struct Case {
      long long a, b;
      int expect;
    };
    const Case cases[] = {
        {static_cast<long long>(j) * l - 1, static_cast<long long>(j + 1) * l + 1, k - l - 2},
        {static_cast<long long>(j) * l + 1, static_cast<long long>(j + 1) * l - 1, l - 2},
        {static_cast<long long>(j) * l - 1, static_cast<long long>(j + 1) * l - 1, k - l},
        {static_cast<long long>(j) * l + 1, static_cast<long long>(j + 1) * l + 1, k - l},
    };
    for (const Case& c : cases) {
      int got = g.distance(vtx(c.a), vtx(c.b));
      if (got != c.expect) {
        fail = "j=" + std::to_string(j) + " d(" + g.name(vtx(c.a)) + "," +
               g.name(vtx(c.b)) + ")=" + std::to_string(got) +
               " expected " + std::to_string(c.expect);
        break;
      }
    }
  }
  return detail::make_report(
      "odd-cycle-distance-formulas", "k=" + std::to_string(k),
      "all four formulas hold",
      fail.empty() ? "all four formulas hold" : fail);
}

// ---------------------------------------------------------------------------

inline std::vector<OracleReport> run_lemma_suite(
    const SimplicialGraph& g, const LemmaSuiteParams& p = {}) {
  std::vector<OracleReport> out;
  const GraphMetrics metrics = g.metrics();

  if (!detail::has_central_vertex(g))
    out.push_back(check_star_conjugate_intersection(g));

  auto any = [](const Element&) { return true; };
  auto cyc_nonstar = [](const Element& x) {
    return !detail::is_star_word(x) && is_cyclically_reduced(x);
  };
  auto cyc_lox = [](const Element& x) {
    return is_cyclically_reduced(x) && classify(x).loxodromic;
  };

  std::vector<Element> general =
      detail::derive_words(g, p.words, p.auto_word_limit, any);
  std::vector<Element> power_words =
      detail::derive_words(g, p.words, p.auto_word_limit, cyc_nonstar);
  std::vector<Element> lox_words =
      detail::derive_words(g, p.words, p.auto_word_limit, cyc_lox);

  for (const Element& x : general) {
    out.push_back(check_pivot_star_separation(g, x, p.guard));
    out.push_back(check_pivot_invariance(g, x, p.linearization_cap,
                                         p.max_linearizations_checked));
  }
  if (!power_words.empty())
    out.push_back(
        check_power_syllable_length(power_words, std::max(2, p.power)));
  if (!lox_words.empty())
    out.push_back(
        check_permutation_displacement(g, lox_words, p.power,
                                       p.linearization_cap));
  if (metrics.girth.at_least(6))
    out.push_back(check_two_neighborhood_acyclic(g, p.ball_radius, p.guard));
  {
    // The axial window exists (and the separation claim is made) when the
    // girth is at least 6 or the word's support is pairwise non-commuting.
    int done = 0;
    for (const Element& x : lox_words) {
      if (done >= p.axial_word_limit) break;
      if (!metrics.girth.at_least(6) &&
          !pairwise_noncommuting(x.syllables(), g))
        continue;
      ++done;
      out.push_back(check_axial_end_separation(g, x, p.axial_window, p.guard));
    }
  }
  {
    bool two_regular = true;
    for (int v = 0; v < g.n(); ++v) two_regular = two_regular && g.degree(v) == 2;
    if (two_regular && g.n() % 2 == 1 && g.n() >= 5)
      out.push_back(check_cycle_distance_formulas(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracle/main agreement.

struct AgreementParams {
  int full_depth = 3;        // exhaustive over sequences up to this length
  int sampled_depth = 5;     // deterministic stride sample up to this length
  int sample_stride = 37;
  int per_depth_sample_cap = 800;
  int element_cap = 250;     // distinct elements for the per-element checks
  int conjugate_radius = 3;
  int star_length_max_syllables = 4;
};

inline std::vector<OracleReport> run_oracle_agreement(
    const SimplicialGraph& g, const AgreementParams& p = {}) {
  std::vector<OracleReport> out;

  // Deterministic corpus of syllable sequences.
  std::vector<std::vector<Syllable>> sequences;
  {
    std::vector<Syllable> cur;
    long long counter = 0;
    std::vector<int> taken_at_depth(p.sampled_depth + 1, 0);
    auto rec = [&](auto&& self, int depth) -> void {
      if (depth > 0) {
        if (depth <= p.full_depth) {
          sequences.push_back(cur);
        } else if (counter % p.sample_stride == 0 &&
                   taken_at_depth[depth] < p.per_depth_sample_cap) {
          sequences.push_back(cur);
          ++taken_at_depth[depth];
        }
      }
      if (depth == p.sampled_depth) return;
      for (int v = 0; v < g.n(); ++v) {
        for (long long e : {1LL, -1LL}) {
          ++counter;
          cur.push_back({v, e});
          self(self, depth + 1);
          cur.pop_back();
        }
      }
    };
    rec(rec, 0);
  }

  // Normal-form syllable count == exhaustive rewriting minimum.
  {
    std::string fail;
    long long tried = 0;
    for (const auto& seq : sequences) {
      ++tried;
      Element x = Element::from_syllables(g, seq);
      int fast = x.syllable_count();
      int slow = oracle::rewriting_min_syllable_count(seq, g);
      if (fast != slow) {
        fail = "sequence " + oracle::sequence_key(seq) + ": nf " +
               std::to_string(fast) + " vs rewriting " + std::to_string(slow);
        break;
      }
    }
    out.push_back(detail::make_report(
        "syllable-length-vs-rewriting",
        std::to_string(tried) + " sequences",
        "normal form attains the rewriting minimum",
        fail.empty() ? "normal form attains the rewriting minimum" : fail));
  }

  // Distinct elements for the per-element checks.
  std::vector<Element> elements;
  {
    std::set<std::string> seen;
    for (const auto& seq : sequences) {
      Element x = Element::from_syllables(g, seq);
      if (x.is_identity() || !seen.insert(x.key()).second) continue;
      elements.push_back(std::move(x));
      if (static_cast<int>(elements.size()) >= p.element_cap) break;
    }
  }

  // Cyclic reduction == brute minimum over conjugators of bounded length.
  {
    std::vector<Element> ball = oracle::enumerate_ball(g, p.conjugate_radius);
    std::string fail;
    for (const Element& x : elements) {
      int fast = cyclic_syllable_reduce(x).reduced.syllable_count();
      int slow = x.syllable_count();
      for (const Element& h : ball)
        slow = std::min(slow, x.conjugate(h).syllable_count());
      if (fast != slow) {
        fail = "word " + x.str() + ": reduce " + std::to_string(fast) +
               " vs brute " + std::to_string(slow);
        break;
      }
    }
    out.push_back(detail::make_report(
        "cyclic-reduction-vs-brute-conjugates",
        std::to_string(elements.size()) + " elements, radius " +
            std::to_string(p.conjugate_radius),
        "cyclic reduction attains the conjugate minimum",
        fail.empty() ? "cyclic reduction attains the conjugate minimum"
                     : fail));
  }

  // classify == the join-membership criterion, via exhaustive search.
  if (g.n() <= 12) {
    std::string fail;
    for (const Element& x : elements) {
      Classification cls = classify(x);
      std::vector<int> sup = cls.reduced.support();
      bool elliptic_oracle =
          sup.size() <= 1 || oracle::exhaustive_join_search(g, sup);
      if (cls.loxodromic != !elliptic_oracle) {
        fail = "word " + x.str();
        break;
      }
    }
    out.push_back(detail::make_report(
        "classification-vs-join-search",
        std::to_string(elements.size()) + " elements",
        "classification matches the join criterion",
        fail.empty() ? "classification matches the join criterion" : fail));
  }

  // Search-based star length == brute-force minimum over all extractions.
  {
    std::string fail;
    long long tried = 0;
    for (const Element& x : elements) {
      if (x.syllable_count() > p.star_length_max_syllables) continue;
      ++tried;
      int fast = star_length(x);
      int slow = oracle::brute_star_length(x);
      if (fast != slow) {
        fail = "word " + x.str() + ": search " + std::to_string(fast) +
               " vs brute " + std::to_string(slow);
        break;
      }
    }
    out.push_back(detail::make_report(
        "star-length-vs-brute",
        std::to_string(tried) + " elements",
        "star factorization is minimal",
        fail.empty() ? "star factorization is minimal" : fail));
  }

  // Girth by BFS == girth by edge removal.
  {
    Girth a = g.metrics().girth;
    Girth b = oracle::girth_by_edge_removal(g);
    out.push_back(detail::make_report("girth-vs-edge-removal", "whole graph",
                                      a.str(), b.str()));
  }

  return out;
}

}  // namespace raag
