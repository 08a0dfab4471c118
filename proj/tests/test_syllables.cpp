// Tests for syllable combinatorics: decomposition enumeration, cyclic
// syllable reduction, elliptic/loxodromic classification, and star length.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/oracles.hpp"
#include "raag/syllables.hpp"
#include "raag/word.hpp"

using namespace raag;

TEST_CASE("decomposition enumeration") {
  SimplicialGraph g = make_cycle(7);
  // Non-commuting pair: a single decomposition.
  CHECK(enumerate_syllable_decompositions(Element::parse(g, "v_1 v_4"), 100)
            .seqs.size() == 1);
  // Commuting pair: both orders.
  CHECK(enumerate_syllable_decompositions(Element::parse(g, "v_1 v_2"), 100)
            .seqs.size() == 2);
  // v_1 commutes with v_2 and v_7; v_2 and v_7 do not commute with each
  // other, so v_1 floats freely: 3 decompositions.
  DecompositionSet ds =
      enumerate_syllable_decompositions(Element::parse(g, "v_2 v_1 v_7"), 100);
  CHECK(ds.seqs.size() == 3);
  CHECK_FALSE(ds.overflow);

  // Every decomposition spells the same element; all are distinct.
  Element x = Element::parse(g, "v_2 v_1 v_7");
  std::set<std::string> spellings;
  for (const SyllableSeq& s : ds.seqs) {
    CHECK(s.element() == x);
    spellings.insert(s.str());
  }
  CHECK(spellings.size() == 3);
}

TEST_CASE("decomposition count matches brute-force permutation check") {
  SimplicialGraph g = make_path(4);
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> pick_v(0, g.n() - 1);
  for (int trial = 0; trial < 25; ++trial) {
    Element x = Element::identity(g);
    for (int i = 0; i < 4; ++i)
      x = x * Element::generator(g, pick_v(rng), 1);
    if (x.is_identity()) continue;
    DecompositionSet ds = enumerate_syllable_decompositions(x, 100000);
    REQUIRE_FALSE(ds.overflow);
    // Brute force: try every permutation of the normal form's syllables and
    // keep those spelling the same element without merging.
    const auto& w = x.syllables();
    std::vector<int> perm(w.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::set<std::string> found;
    do {
      std::vector<Syllable> arranged;
      for (int p : perm) arranged.push_back(w[p]);
      if (Element::from_syllables(g, arranged).syllable_count() !=
          static_cast<int>(arranged.size()))
        continue;
      if (Element::from_syllables(g, arranged) == x) {
        SyllableSeq s{&g, arranged};
        found.insert(s.str());
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::set<std::string> enumerated;
    for (const SyllableSeq& s : ds.seqs) enumerated.insert(s.str());
    CHECK(enumerated == found);
  }
}

TEST_CASE("decomposition cap raises the overflow flag") {
  SimplicialGraph g = make_star(3);
  // The center commutes with every leaf, so "c l1" has two decompositions;
  // a cap of one truncates and marks overflow.
  Element x = Element::parse(g, "c l1");
  DecompositionSet ds = enumerate_syllable_decompositions(x, 1);
  CHECK(ds.overflow);
  CHECK(ds.seqs.size() == 1);
  CHECK_THROWS_AS(enumerate_syllable_decompositions(x, 0),
                  std::invalid_argument);
}

TEST_CASE("prefix conjugators read from the right") {
  SimplicialGraph g = make_path(4);
  Element x = Element::parse(g, "d a");
  SyllableSeq s{&g, x.syllables()};
  REQUIRE(s.size() == 2);
  CHECK(s.prefix_conjugator(0).is_identity());
  CHECK(s.prefix_conjugator(1) == Element::parse(g, "a"));
  CHECK(s.prefix_conjugator(2) == Element::parse(g, "d a"));
  CHECK(s.from_right(1).v == g.index("a"));
  CHECK(s.from_right(2).v == g.index("d"));
}

TEST_CASE("cyclic syllable reduction") {
  SimplicialGraph g = make_path(4);

  // "a c a" is conjugate to "a^2 c", dropping to 2 syllables.
  Element x = Element::parse(g, "a c a");
  CyclicReduction cr = cyclic_syllable_reduce(x);
  CHECK(cr.reduced.syllable_count() == 2);
  CHECK(cr.reduced == x.conjugate(cr.conjugator));
  CHECK(cr.reduced.support() ==
        std::vector<int>{g.index("a"), g.index("c")});

  // "d a" is already cyclically reduced (no conjugate is shorter), but the
  // canonical representative of its rotation class is the lexicographically
  // least rotation "a d"; the returned conjugator witnesses the rotation and
  // the canonical form is a fixed point of the reduction.
  Element y = Element::parse(g, "d a");
  CyclicReduction cr2 = cyclic_syllable_reduce(y);
  CHECK(cr2.reduced.syllable_count() == 2);
  CHECK(cr2.reduced == Element::parse(g, "a d"));
  CHECK(cr2.reduced == y.conjugate(cr2.conjugator));
  CyclicReduction cr2b = cyclic_syllable_reduce(cr2.reduced);
  CHECK(cr2b.reduced == cr2.reduced);
  CHECK(cr2b.conjugator.is_identity());
  CHECK(is_cyclically_reduced(y));
  CHECK_FALSE(is_cyclically_reduced(x));

  // Conjugation wrappers cancel: "c d a c^-1" reduces to the "d a" class.
  Element z = Element::parse(g, "c d a c^-1");
  CyclicReduction cr3 = cyclic_syllable_reduce(z);
  CHECK(cr3.reduced.syllable_count() == 2);
  CHECK(cr3.reduced == z.conjugate(cr3.conjugator));
  CHECK(cyclic_syllable_reduce(cr3.reduced).reduced == cr3.reduced);

  // The identity reduces to itself.
  CHECK(cyclic_syllable_reduce(Element::identity(g)).reduced.is_identity());
}

TEST_CASE("cyclic reduction matches brute conjugate search") {
  SimplicialGraph g = make_path(4);
  for (const char* text : {"a c a", "c d a c^-1", "b a c b^-1", "d a",
                           "a b c", "c a c^-1 b", "a^2 c a^-1"}) {
    Element x = Element::parse(g, text);
    CHECK(cyclic_syllable_reduce(x).reduced.syllable_count() ==
          oracle::brute_min_syllable_conjugate(x, 2));
  }
}

TEST_CASE("conjugacy keys identify conjugate pairs") {
  SimplicialGraph g = make_path(4);
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> pick_v(0, g.n() - 1);
  std::uniform_int_distribution<int> pick_e(-1, 1);
  for (int trial = 0; trial < 30; ++trial) {
    Element x = Element::identity(g);
    for (int i = 0; i < 3; ++i) {
      int e = pick_e(rng);
      x = x * Element::generator(g, pick_v(rng), e == 0 ? 1 : e);
    }
    Element h = Element::identity(g);
    for (int i = 0; i < 2; ++i) {
      int e = pick_e(rng);
      h = h * Element::generator(g, pick_v(rng), e == 0 ? 1 : e);
    }
    // Conjugates share the canonical cyclic-reduction key.
    CHECK(cyclic_syllable_reduce(x).reduced.key() ==
          cyclic_syllable_reduce(x.conjugate(h)).reduced.key());
  }
}

TEST_CASE("classification witnesses") {
  SimplicialGraph g = make_path(4);

  // Single-vertex support.
  Classification c1 = classify(Element::parse(g, "b^3"));
  CHECK_FALSE(c1.loxodromic);
  CHECK(c1.small_support);

  // "d a": the complement restricted to {a, d} is connected and nothing
  // dominates both ends of the path.
  Classification c2 = classify(Element::parse(g, "d a"));
  CHECK(c2.loxodromic);
  CHECK_FALSE(c2.complement_tree_edges.empty());
  for (auto [w, s] : c2.non_domination) {
    CHECK_FALSE(g.adjacent(w, s));
    CHECK(w != s);
  }

  // Star word: "a c" lies in st(b).
  Classification c3 = classify(Element::parse(g, "a c"));
  CHECK_FALSE(c3.loxodromic);
  REQUIRE(c3.dominating_vertex.has_value());
  CHECK(*c3.dominating_vertex == g.index("b"));

  // On cycle(4), {v_1, v_3} lies inside st(v_2).
  SimplicialGraph c4 = make_cycle(4);
  Classification c5 = classify(Element::parse(c4, "v_1 v_3"));
  CHECK_FALSE(c5.loxodromic);
  REQUIRE(c5.dominating_vertex.has_value());
  CHECK(*c5.dominating_vertex == c4.index("v_2"));

  // Classification happens after cyclic reduction: wrapping a loxodromic
  // element in a conjugation does not change the verdict.
  Classification c6 = classify(Element::parse(g, "c d a c^-1"));
  CHECK(c6.loxodromic);
  CHECK(c6.reduced.syllable_count() == 2);
}

TEST_CASE("classification agrees with the exhaustive join search") {
  for (const SimplicialGraph& g :
       {make_path(4), make_cycle(5), make_star(3)}) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick_v(0, g.n() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      Element x = Element::identity(g);
      for (int i = 0; i < 3; ++i)
        x = x * Element::generator(g, pick_v(rng), 1);
      if (x.is_identity()) continue;
      Classification cls = classify(x);
      std::vector<int> sup = cls.reduced.support();
      bool elliptic = sup.size() <= 1 || oracle::exhaustive_join_search(g, sup);
      CHECK(cls.loxodromic == !elliptic);
    }
  }
}

TEST_CASE("star length") {
  SimplicialGraph g = make_path(4);
  // {a, c} ⊆ st(b): a single star word.
  CHECK(star_length(Element::parse(g, "a c")) == 1);
  CHECK(star_length(Element::parse(g, "a^2")) == 1);
  // {a, d} shares no star: length 2.
  CHECK(star_length(Element::parse(g, "a d")) == 2);
  CHECK(star_length(Element::parse(g, "d a")) == 2);

  SimplicialGraph gg = make_gamma(2);
  // No two of t, v, u share a star.
  CHECK(star_length(Element::parse(gg, "t v u")) == 3);

  // The factorization multiplies back to the element and counts letters
  // additively.
  Element x = Element::parse(g, "d c b a");
  StarDecomposition sd = star_factorization(x);
  Element prod = Element::identity(g);
  for (auto it = sd.factors.rbegin(); it != sd.factors.rend(); ++it)
    prod = *it * prod;
  CHECK(prod == x);
  long long letters = 0;
  for (const Element& f : sd.factors) letters += f.word_length();
  CHECK(letters == x.word_length());
  CHECK(sd.length() == star_length(x));
}

TEST_CASE("star length matches the brute-force oracle") {
  SimplicialGraph g = make_path(4);
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> pick_v(0, g.n() - 1);
  std::uniform_int_distribution<int> pick_e(-1, 1);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Element x = Element::identity(g);
    for (int i = 0; i < 4; ++i) {
      int e = pick_e(rng);
      x = x * Element::generator(g, pick_v(rng), e == 0 ? 1 : e);
    }
    if (x.is_identity()) continue;
    ++checked;
    CHECK(star_length(x) == oracle::brute_star_length(x));
  }
  CHECK(checked > 30);
}

TEST_CASE("power multiplicativity for cyclically reduced non-star words") {
  SimplicialGraph g = make_path(4);
  for (const char* text : {"d a", "c a", "d a c", "d b a c"}) {
    Element x = Element::parse(g, text);
    if (!is_cyclically_reduced(x)) continue;
    for (int m = 2; m <= 4; ++m) {
      CHECK(x.power(m).syllable_count() == m * x.syllable_count());
      CHECK(x.power(-m).syllable_count() == m * x.syllable_count());
    }
  }
}
