// raagkit — computing in right-angled Artin groups and their extension graphs.
// Group elements in syllable normal form.  An element is stored as its
// canonical reduced syllable sequence: reduced means no two same-vertex
// syllables can be brought together by swapping adjacent commuting syllables,
// and canonical means the lexicographically least such sequence under the
// graph's fixed vertex order.  Equality of normal forms decides the word
// problem.
//
// Distributed under the MIT license; see LICENSE at the repository root.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// One syllable v^e, e != 0.  Sequences are stored leftmost-first: in the
// sequence s_n ... s_1 (group elements acting on the right), index 0 holds
// s_n and the back holds s_1.
struct Syllable {
  int v;
  long long e;
  bool operator==(const Syllable& o) const { return v == o.v && e == o.e; }
};

namespace detail {

// Append one syllable to a reduced sequence, keeping it reduced.  Scanning
// from the right end, the first same-vertex syllable whose interposed
// syllables all commute with it absorbs the exponent; if the merged exponent
// vanishes the syllable is deleted and the displaced suffix is re-pushed,
// which catches cascading merges.
inline void push_syllable(std::vector<Syllable>& out, Syllable s,
                          const SimplicialGraph& g) {
  if (s.e == 0) return;
  for (int j = static_cast<int>(out.size()) - 1; j >= 0; --j) {
    if (out[j].v == s.v) {
      out[j].e += s.e;
      if (out[j].e == 0) {
        std::vector<Syllable> tail(out.begin() + j + 1, out.end());
        out.resize(j);
        for (const Syllable& t : tail) push_syllable(out, t, g);
      }
      return;
    }
    if (!g.adjacent(out[j].v, s.v)) break;
  }
  out.push_back(s);
}

inline std::vector<Syllable> reduce_sequence(const std::vector<Syllable>& in,
                                             const SimplicialGraph& g) {
  std::vector<Syllable> out;
  out.reserve(in.size());
  for (const Syllable& s : in) push_syllable(out, s, g);
  return out;
}

// Rewrite a reduced sequence into the lexicographically least equivalent
// sequence: greedily emit, among the syllables whose left context commutes
// with them entirely, the one with the least vertex index.  In a reduced
// sequence two same-vertex syllables are never simultaneously emittable (a
// non-commuting blocker separates them), so vertex indices break all ties.
inline void canonicalize_sequence(std::vector<Syllable>& w,
                                  const SimplicialGraph& g) {
  const int n = static_cast<int>(w.size());
  if (n <= 1) return;
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.commute(w[i].v, w[j].v)) {
        succ[i].push_back(j);
        ++indeg[j];
      }
  std::vector<Syllable> out;
  out.reserve(n);
  std::vector<char> used(n, 0);
  for (int round = 0; round < n; ++round) {
    int best = -1;
    for (int j = 0; j < n; ++j)
      if (!used[j] && indeg[j] == 0 && (best < 0 || w[j].v < w[best].v))
        best = j;
    used[best] = 1;
    out.push_back(w[best]);
    for (int k : succ[best]) --indeg[k];
  }
  w = std::move(out);
}

}  // namespace detail

// A group element of the right-angled Artin group on a defining graph.
// Immutable; every operation returns a fresh element in canonical normal
// form.  The defining graph must outlive all of its elements.
class Element {
 public:
  explicit Element(const SimplicialGraph& g) : g_(&g) { check_graph(); }

  static Element identity(const SimplicialGraph& g) { return Element(g); }

  static Element generator(const SimplicialGraph& g, int v, long long e = 1) {
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("element: vertex index out of range");
    Element x(g);
    if (e != 0) x.syl_.push_back({v, e});
    return x;
  }

  static Element from_syllables(const SimplicialGraph& g,
                                const std::vector<Syllable>& w) {
    for (const Syllable& s : w)
      if (s.v < 0 || s.v >= g.n())
        throw std::invalid_argument("element: vertex index out of range");
    Element x(g);
    x.syl_ = detail::reduce_sequence(w, g);
    detail::canonicalize_sequence(x.syl_, g);
    return x;
  }

  // Parse a whitespace-separated word, leftmost token = leftmost syllable.
  // Tokens are "name" or "name^k" with integer k; "1" or the empty string
  // denotes the identity.
  static Element parse(const SimplicialGraph& g, const std::string& text) {
    std::vector<std::string> tokens;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
      while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i >= n) break;
      size_t j = i;
      while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      tokens.push_back(text.substr(i, j - i));
      i = j;
    }
    if (tokens.empty())
      throw std::invalid_argument("word: empty input (write 1 for the identity)");
    if (tokens.size() == 1 && tokens[0] == "1") return identity(g);
    std::vector<Syllable> w;
    for (const std::string& tok : tokens) {
      long long e = 1;
      auto caret = tok.find('^');
      std::string name = tok;
      if (caret != std::string::npos) {
        name = tok.substr(0, caret);
        const std::string exp = tok.substr(caret + 1);
        try {
          size_t used = 0;
          e = std::stoll(exp, &used);
          if (used != exp.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw std::invalid_argument("word: bad exponent in token '" + tok +
                                      "'");
        }
      }
      if (name.empty())
        throw std::invalid_argument("word: empty vertex name in token '" +
                                    tok + "'");
      if (e == 0)
        throw std::invalid_argument("word: zero exponent in token '" + tok +
                                    "'");
      w.push_back({g.index(name), e});
    }
    return from_syllables(g, w);
  }

  const SimplicialGraph& graph() const { return *g_; }
  const std::vector<Syllable>& syllables() const { return syl_; }
  int syllable_count() const { return static_cast<int>(syl_.size()); }
  bool is_identity() const { return syl_.empty(); }

  // Word length: total number of letters, i.e. the sum of |exponent|.
  long long word_length() const {
    long long t = 0;
    for (const Syllable& s : syl_) t += s.e < 0 ? -s.e : s.e;
    return t;
  }

  uint64_t support_mask() const {
    uint64_t m = 0;
    for (const Syllable& s : syl_) m |= (uint64_t{1} << s.v);
    return m;
  }
  std::vector<int> support() const {
    std::vector<char> in(g_->n(), 0);
    for (const Syllable& s : syl_) in[s.v] = 1;
    std::vector<int> sup;
    for (int v = 0; v < g_->n(); ++v)
      if (in[v]) sup.push_back(v);
    return sup;
  }

  Element operator*(const Element& o) const {
    require_same_graph(o);
    std::vector<Syllable> w = syl_;
    for (const Syllable& s : o.syl_) detail::push_syllable(w, s, *g_);
    detail::canonicalize_sequence(w, *g_);
    Element x(*g_);
    x.syl_ = std::move(w);
    return x;
  }

  Element inverse() const {
    std::vector<Syllable> w(syl_.rbegin(), syl_.rend());
    for (Syllable& s : w) s.e = -s.e;
    detail::canonicalize_sequence(w, *g_);  // reversal keeps reducedness
    Element x(*g_);
    x.syl_ = std::move(w);
    return x;
  }

  // Right conjugation: g^h = h^-1 g h, so (g^h)^k = g^(hk).
  Element conjugate(const Element& h) const {
    require_same_graph(h);
    return h.inverse() * (*this) * h;
  }

  Element power(long long k) const {
    if (k < 0) return inverse().power(-k);
    Element acc = identity(*g_);
    Element base = *this;
    long long m = k;
    while (m > 0) {
      if (m & 1) acc = acc * base;
      m >>= 1;
      if (m > 0) base = base * base;
    }
    return acc;
  }

  bool operator==(const Element& o) const {
    return g_ == o.g_ && syl_ == o.syl_;
  }
  bool operator!=(const Element& o) const { return !(*this == o); }

  // Stable text form, e.g. "a b^-2 c"; the identity prints as "1".
  std::string str() const {
    if (syl_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < syl_.size(); ++i) {
      if (i) s += ' ';
      s += g_->name(syl_[i].v);
      if (syl_[i].e != 1) s += "^" + std::to_string(syl_[i].e);
    }
    return s;
  }

  // Canonical hash key; equal exactly for equal elements of one graph.
  std::string key() const {
    std::string s;
    for (const Syllable& t : syl_) {
      s += std::to_string(t.v);
      s += ':';
      s += std::to_string(t.e);
      s += ';';
    }
    return s;
  }

 private:
  void check_graph() const {
    if (g_->n() > kMaxWordVertices)
      throw std::invalid_argument(
          "element: word computations need a graph with at most 64 vertices");
  }
  void require_same_graph(const Element& o) const {
    if (g_ != o.g_)
      throw std::invalid_argument(
          "element: operands belong to different defining graphs");
  }

  const SimplicialGraph* g_;
  std::vector<Syllable> syl_;
};

// Positions of the syllables that commute with their entire left context and
// can therefore be cycled to the front.  Valid for reduced sequences.
inline std::vector<int> front_movable_positions(const std::vector<Syllable>& w,
                                                const SimplicialGraph& g) {
  std::vector<int> out;
  for (int p = 0; p < static_cast<int>(w.size()); ++p) {
    bool movable = true;
    for (int q = 0; q < p && movable; ++q)
      movable = g.commute(w[q].v, w[p].v);
    if (movable) out.push_back(p);
  }
  return out;
}

// Mirror image: syllables commuting with their entire right context.
inline std::vector<int> rear_movable_positions(const std::vector<Syllable>& w,
                                               const SimplicialGraph& g) {
  std::vector<int> out;
  const int n = static_cast<int>(w.size());
  for (int p = 0; p < n; ++p) {
    bool movable = true;
    for (int q = p + 1; q < n && movable; ++q)
      movable = g.commute(w[q].v, w[p].v);
    if (movable) out.push_back(p);
  }
  return out;
}

}  // namespace raag
