// raagkit — computing in right-angled Artin groups and their extension graphs.
// Asymptotic translation lengths on the extension graph, computed exactly as
// rationals with machine-checkable certificates: elliptic elements, trees,
// two-syllable elements, the girth >= 6 link sweep, and certified upper
// bounds as the fallback.  A budgeted spectrum scan sits on top.
//
// Distributed under the MIT license; see LICENSE at the repository root.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "raag/ext_graph.hpp"
#include "raag/rational.hpp"
#include "raag/syllables.hpp"
#include "raag/word.hpp"

namespace raag {

enum class TauMethod { Elliptic, Tree, Syllable2, Girth6, BoundsOnly };

inline std::string tau_method_name(TauMethod m) {
  switch (m) {
    case TauMethod::Elliptic: return "elliptic";
    case TauMethod::Tree: return "tree";
    case TauMethod::Syllable2: return "syllable2";
    case TauMethod::Girth6: return "girth6";
    case TauMethod::BoundsOnly: return "bounds";
  }
  return "?";
}

// Certificates carry everything needed to recheck the reported value with
// independent distance computations.
struct Girth6Certificate {
  std::string witness;   // link vertex u of the pivot syllable vertex
  int power = 0;         // m with d(u, u^(g^m)) = m * tau
  long long distance = 0;
  std::string chain;     // provenance of the chain the distance was read from
  std::string pivot;     // the pivot syllable's vertex (v_1 of the rotation)
};

struct TreeCertificate {
  std::string basepoint;
  long long d1 = 0;  // d(x, x^g)
  long long d2 = 0;  // d(x, x^(g^2))
};

struct Syllable2Certificate {
  std::string v1;
  std::string v2;
  long long graph_distance = 0;  // tau = 2 d - 4
};

struct BoundsCertificate {
  std::string basepoint;
  std::vector<std::pair<int, Rational>> upper_bounds;  // (n, d(x,x^(g^n))/n)
  int best_power = 0;
};

struct TauResult {
  Rational value;
  TauMethod method = TauMethod::Elliptic;
  bool exact = true;
  std::optional<Girth6Certificate> girth6;
  std::optional<TreeCertificate> tree;
  std::optional<Syllable2Certificate> syllable2;
  std::optional<BoundsCertificate> bounds;
  Element reduced;     // cyclically reduced representative examined
  Element conjugator;  // reduced == input.conjugate(conjugator)

  explicit TauResult(const SimplicialGraph& g) : reduced(g), conjugator(g) {}
};

struct TauOptions {
  int lambda_cap = kDefaultDecompositionCap;
  int bounds_powers = 3;    // N for the upper-bound fallback
  int bounds_basepoint = -1;  // vertex index; -1 = least support vertex
  size_t guard = kDefaultSubgraphGuard;
};

// ---------------------------------------------------------------------------
// Exact value by the pivot-link sweep (the `Girth6` method).

// For a cyclically reduced loxodromic g, rotate the normal form so that a
// syllable of minimum vertex degree comes first (s_1, vertex v_1).  The link
// of v_1 separates the two ends of the axial subgraph, and some power g^m
// with m <= deg(v_1) preserves a bi-infinite geodesic on it; that geodesic
// crosses lk(v_1), so
//     tau = min { d(u, u^(g^m)) / m : u in lk(v_1), 1 <= m <= deg(v_1) },
// and every candidate ratio is an upper bound >= tau by subadditivity.  All
// distances are read from the single chain of the D-fold concatenated
// rotation (D = deg(v_1)), which contains (u, u^(g^m)) for all m <= D.
//
// The sweep is exact in two regimes, and rejects inputs outside both:
//  - girth(G) >= 6: a chain on such a graph is weakly convex, hence
//    distance-exact for every pair it contains, and the end-separation /
//    pigeonhole argument above applies to the chain ends.
//  - pairwise non-commuting support (any girth): every power of g then has
//    exactly one reduced syllable decomposition, so the decomposition chain
//    is the union of all decomposition chains of g^m and contains a true
//    geodesic between the swept endpoints; as a subgraph it never reports
//    less than the ambient distance, so each candidate is exact.  The
//    star-separation of the pivots needs no girth hypothesis, and neither
//    does the count of pairwise disjoint invariant geodesics, so the witness
//    power m <= deg(v_1) is still attained.
inline TauResult tau_girth6(const Element& input,
                            const TauOptions& opts = {}) {
  const SimplicialGraph& g = input.graph();
  TauResult out(g);
  if (!g.metrics().girth.at_least(6) &&
      !pairwise_noncommuting(input.syllables(), g))
    throw std::invalid_argument(
        "tau_girth6: requires girth >= 6 or pairwise non-commuting support");
  CyclicReduction cr = cyclic_syllable_reduce(input);
  if (cr.reduced.syllable_count() != input.syllable_count())
    throw std::invalid_argument(
        "tau_girth6: element must be cyclically syllable-reduced");
  Classification cls = classify(input);
  if (!cls.loxodromic)
    throw std::invalid_argument("tau_girth6: element must be loxodromic");
  out.reduced = input;
  out.conjugator = Element::identity(g);

  const std::vector<Syllable> w = input.syllables();
  const int n = static_cast<int>(w.size());
  // Pivot choice: minimum degree, ties to the syllable nearest the right end
  // (so an already-suitable s_1 stays put).
  int pick = -1;
  for (int i = 1; i <= n; ++i) {
    const int v = w[n - i].v;
    if (pick < 0 || g.degree(v) < g.degree(w[n - pick].v)) pick = i;
  }
  const int p = n - pick;  // 0-based position of the chosen syllable
  std::vector<Syllable> rot(w.begin() + p + 1, w.end());
  rot.insert(rot.end(), w.begin(), w.begin() + p + 1);
  const int v1 = w[p].v;
  const int d1v = g.degree(v1);

  // D-fold concatenation; a cyclically reduced loxodromic has multiplicative
  // powers at the syllable level, so this spells a reduced decomposition.
  SyllableSeq seq{&g, {}};
  for (int m = 0; m < d1v; ++m)
    seq.syl.insert(seq.syl.end(), rot.begin(), rot.end());
  Element rot_elem = Element::from_syllables(g, rot);
  if (seq.element().syllable_count() != n * d1v)
    throw std::logic_error("tau_girth6: power lost syllables unexpectedly");

  ExtSubgraph chain = build_chain(g, seq, opts.guard);

  std::optional<Rational> best;
  Girth6Certificate cert;
  for (int u : g.neighbors(v1)) {
    ExtVertex source(g, u, Element::identity(g));
    std::vector<int> dist = chain.bfs_from(chain.require(source));
    Element power = Element::identity(g);
    for (int m = 1; m <= d1v; ++m) {
      power = power * rot_elem;
      ExtVertex target(g, u, power);
      int d = dist[chain.require(target)];
      if (d < 0)
        throw std::logic_error("tau_girth6: chain unexpectedly disconnected");
      Rational cand(d, m);
      if (!best || cand < *best) {
        best = cand;
        cert.witness = g.name(u);
        cert.power = m;
        cert.distance = d;
        cert.pivot = g.name(v1);
      }
    }
  }
  cert.chain = chain.provenance;
  out.value = *best;
  out.method = TauMethod::Girth6;
  out.exact = true;
  out.girth6 = std::move(cert);
  return out;
}

// ---------------------------------------------------------------------------
// Trees.

// On a tree defining graph the extension graph is a tree, where an isometry
// satisfies tau = d(x, x^(g^2)) - d(x, x^g) for every basepoint x.
inline TauResult tau_tree(const Element& input,
                          const TauOptions& opts = {}) {
  const SimplicialGraph& g = input.graph();
  TauResult out(g);
  if (!g.metrics().is_tree)
    throw std::invalid_argument("tau_tree: defining graph is not a tree");
  CyclicReduction cr = cyclic_syllable_reduce(input);
  if (cr.reduced.syllable_count() != input.syllable_count())
    throw std::invalid_argument(
        "tau_tree: element must be cyclically syllable-reduced");
  if (!classify(input).loxodromic)
    throw std::invalid_argument("tau_tree: element must be loxodromic");
  out.reduced = input;
  out.conjugator = Element::identity(g);

  const std::vector<int> sup = input.support();
  const int x = sup.front();
  ExtVertex base(g, x, Element::identity(g));
  ExtVertex first(g, x, input);
  ExtVertex second(g, x, input.power(2));
  long long d1 = ext_distance(base, first, DistanceMode::Auto,
                              opts.lambda_cap, opts.guard);
  long long d2 = ext_distance(base, second, DistanceMode::Auto,
                              opts.lambda_cap, opts.guard);
  long long tau = d2 - d1;
  if (tau <= 0 || tau % 2 != 0)
    throw std::logic_error("tau_tree: non-positive or odd length (elliptic "
                           "input, or tree-of-copies structure violated)");
  out.value = Rational(tau);
  out.method = TauMethod::Tree;
  out.exact = true;
  out.tree = TreeCertificate{g.name(x), d1, d2};
  return out;
}

// ---------------------------------------------------------------------------
// Certified upper bounds (any girth).

inline std::vector<std::pair<int, Rational>> tau_bounds(
    const Element& input, int powers, int basepoint = -1,
    const TauOptions& opts = {}) {
  const SimplicialGraph& g = input.graph();
  if (powers < 1)
    throw std::invalid_argument("tau_bounds: need at least one power");
  Classification cls = classify(input);
  if (!cls.loxodromic)
    throw std::invalid_argument("tau_bounds: element must be loxodromic");
  const Element& r = cls.reduced;
  int x = basepoint;
  if (x < 0) x = r.support().front();
  if (x >= g.n()) throw std::invalid_argument("tau_bounds: bad basepoint");
  std::vector<std::pair<int, Rational>> out;
  ExtVertex base(g, x, Element::identity(g));
  for (int k = 1; k <= powers; ++k) {
    ExtVertex target(g, x, r.power(k));
    int d = ext_distance(base, target, DistanceMode::Auto, opts.lambda_cap,
                         opts.guard);
    out.emplace_back(k, Rational(d, k));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dispatcher.

// Exact wherever the theory provides exactness, certified upper bounds
// otherwise; never an uncertified number.
inline TauResult tau(const Element& input,
                     const TauOptions& opts = {}) {
  const SimplicialGraph& g = input.graph();
  Classification cls = classify(input);
  if (!cls.loxodromic) {
    TauResult out(g);
    out.value = Rational(0);
    out.method = TauMethod::Elliptic;
    out.exact = true;
    out.reduced = cls.reduced;
    out.conjugator = cls.conjugator;
    return out;
  }
  const Element& r = cls.reduced;

  if (g.metrics().is_tree) {
    TauResult out = tau_tree(r, opts);
    out.conjugator = cls.conjugator;
    return out;
  }

  if (r.syllable_count() == 2) {
    // Two non-commuting syllables v_2^b v_1^a: tau = 2 d(v_1, v_2) - 4,
    // independent of the exponents.  Loxodromic forces d >= 3.
    const int v2 = r.syllables()[0].v;
    const int v1 = r.syllables()[1].v;
    long long d = g.distance(v1, v2);
    if (d < 3)
      throw std::logic_error("tau: two-syllable loxodromic with d < 3");
    TauResult out(g);
    out.value = Rational(2 * d - 4);
    out.method = TauMethod::Syllable2;
    out.exact = true;
    out.syllable2 = Syllable2Certificate{g.name(v1), g.name(v2), d};
    out.reduced = r;
    out.conjugator = cls.conjugator;
    return out;
  }

  if (g.metrics().girth.at_least(6) ||
      pairwise_noncommuting(r.syllables(), g)) {
    TauResult out = tau_girth6(r, opts);
    out.conjugator = cls.conjugator;
    return out;
  }

  // Fallback: certified upper bounds from exact distances in the
  // union-of-chains subgraphs.
  TauResult out(g);
  auto bounds = tau_bounds(r, opts.bounds_powers, opts.bounds_basepoint,
                           opts);
  BoundsCertificate cert;
  cert.basepoint =
      g.name(opts.bounds_basepoint >= 0 ? opts.bounds_basepoint
                                        : r.support().front());
  cert.upper_bounds = bounds;
  std::optional<Rational> best;
  for (const auto& [k, u] : bounds)
    if (!best || u < *best) {
      best = u;
      cert.best_power = k;
    }
  out.value = *best;
  out.method = TauMethod::BoundsOnly;
  out.exact = false;
  out.bounds = std::move(cert);
  out.reduced = r;
  out.conjugator = cls.conjugator;
  return out;
}

// ---------------------------------------------------------------------------
// Spectrum scan.

struct SpectrumBudget {
  int max_syllables = 4;
  std::vector<long long> exponents = {1, -1};
  bool injective_support = false;   // use each vertex at most once
  long long max_sequences = 5000000;
};

struct SpectrumEntry {
  Element representative;  // lex-least cyclically reduced class element
  TauResult tau;
};

struct SpectrumReport {
  SpectrumBudget budget;
  std::vector<SpectrumEntry> entries;  // one per conjugacy class, sorted
  long long elements_enumerated = 0;   // distinct elements, before class dedup
  // Aggregates over the exact entries only:
  bool all_even = true;
  bool all_integer = true;
  long long max_denominator = 1;
  std::optional<Rational> min_positive;
  bool has_inexact = false;
};

// Enumerate every element spelled by a syllable sequence within the budget,
// dedupe by conjugacy (cyclic reduction provides a class key), and compute
// tau for one representative per class.
inline SpectrumReport spectrum_scan(const SimplicialGraph& g,
                                    const SpectrumBudget& budget,
                                    const TauOptions& opts = {}) {
  if (budget.max_syllables < 1)
    throw std::invalid_argument("spectrum: max_syllables must be >= 1");
  if (budget.exponents.empty())
    throw std::invalid_argument("spectrum: exponent set is empty");
  for (long long e : budget.exponents)
    if (e == 0)
      throw std::invalid_argument("spectrum: zero exponent in budget");

  SpectrumReport report;
  report.budget = budget;

  std::map<std::string, Element> elements;
  long long sequences = 0;
  // Depth-first over syllable sequences (vertex, exponent)^depth.
  std::vector<Element> stack{Element::identity(g)};
  std::vector<uint64_t> used{0};
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == budget.max_syllables) return;
    for (int v = 0; v < g.n(); ++v) {
      if (budget.injective_support && (used.back() & (uint64_t{1} << v)))
        continue;
      for (long long e : budget.exponents) {
        if (++sequences > budget.max_sequences)
          throw std::runtime_error("spectrum: sequence budget exceeded");
        Element next = stack.back() * Element::generator(g, v, e);
        if (!next.is_identity()) elements.emplace(next.key(), next);
        stack.push_back(std::move(next));
        used.push_back(used.back() | (uint64_t{1} << v));
        self(self, depth + 1);
        used.pop_back();
        stack.pop_back();
      }
    }
  };
  rec(rec, 0);
  report.elements_enumerated = static_cast<long long>(elements.size());

  std::map<std::string, Element> classes;
  for (const auto& [key, x] : elements) {
    CyclicReduction cr = cyclic_syllable_reduce(x);
    classes.emplace(cr.reduced.key(), cr.reduced);
  }

  for (const auto& [key, rep] : classes) {
    SpectrumEntry entry{rep, tau(rep, opts)};
    const TauResult& t = entry.tau;
    if (t.exact) {
      if (t.value.den() != 1) {
        report.all_integer = false;
        report.all_even = false;
      } else if (t.value.num() % 2 != 0) {
        report.all_even = false;
      }
      report.max_denominator = std::max(report.max_denominator, t.value.den());
      if (t.value > Rational(0) &&
          (!report.min_positive || t.value < *report.min_positive))
        report.min_positive = t.value;
    } else {
      report.has_inexact = true;
    }
    report.entries.push_back(std::move(entry));
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              if (a.tau.value != b.tau.value) return a.tau.value < b.tau.value;
              if (a.representative.syllable_count() !=
                  b.representative.syllable_count())
                return a.representative.syllable_count() <
                       b.representative.syllable_count();
              return a.representative.key() < b.representative.key();
            });
  return report;
}

}  // namespace raag
