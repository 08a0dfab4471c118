// raagkit — computing in right-angled Artin groups and their extension graphs.
// Defining graphs: a small simplicial-graph type with the metric invariants
// (girth, diameter, degrees), star/link queries, complement-induced
// subgraphs, and the built-in graph families used throughout the test suite.
//
// Distributed under the MIT license; see LICENSE at the repository root.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace raag {

// Largest vertex count for which group-element computations are supported;
// vertex subsets are tracked as 64-bit masks.
inline constexpr int kMaxWordVertices = 64;

// Girth with an explicit infinite state (forests), never a sentinel integer.
class Girth {
 public:
  static Girth infinite() { return Girth(); }
  static Girth finite(int v) {
    if (v < 3) throw std::invalid_argument("Girth: finite girth must be >= 3");
    Girth g;
    g.value_ = v;
    return g;
  }

  bool is_infinite() const { return !value_.has_value(); }
  int value() const {
    if (!value_) throw std::logic_error("Girth: infinite girth has no value");
    return *value_;
  }
  // Forests vacuously satisfy every lower bound.
  bool at_least(int k) const { return !value_ || *value_ >= k; }
  std::string str() const {
    return value_ ? std::to_string(*value_) : std::string("infinite");
  }
  bool operator==(const Girth& o) const { return value_ == o.value_; }

 private:
  Girth() = default;
  std::optional<int> value_;
};

struct GraphMetrics {
  Girth girth = Girth::infinite();
  int max_degree = 0;
  int diameter = 0;
  bool is_tree = false;
  bool bipartite = true;
};

// An induced subgraph handed back by complement_induced(); vertices are
// identified by their indices in the parent graph.
struct InducedSubgraph {
  std::vector<int> vertices;                 // parent indices, ascending
  std::vector<std::pair<int, int>> edges;    // pairs of parent indices
  std::vector<std::vector<int>> components;  // partition of `vertices`
  bool connected() const { return components.size() <= 1; }
};

// A finite simplicial graph with named vertices.  The defining graph of a
// group must be connected and is validated on construction; use of the
// word-level machinery additionally requires at most kMaxWordVertices
// vertices (checked where masks are first needed, not here).
class SimplicialGraph {
 public:
  SimplicialGraph(std::vector<std::string> names,
                  const std::vector<std::pair<std::string, std::string>>& edges,
                  bool require_connected = true)
      : names_(std::move(names)) {
    const int n = static_cast<int>(names_.size());
    if (n == 0) throw std::invalid_argument("graph: no vertices");
    for (int i = 0; i < n; ++i) {
      validate_name(names_[i]);
      if (!index_.emplace(names_[i], i).second)
        throw std::invalid_argument("graph: duplicate vertex name '" +
                                    names_[i] + "'");
    }
    nbr_.assign(n, {});
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : edges) {
      const int i = index(a), j = index(b);
      if (i == j)
        throw std::invalid_argument("graph: self-loop at '" + a + "'");
      if (seen[i][j])
        throw std::invalid_argument("graph: duplicate edge " + a + "-" + b);
      seen[i][j] = seen[j][i] = 1;
      nbr_[i].push_back(j);
      nbr_[j].push_back(i);
    }
    for (auto& v : nbr_) std::sort(v.begin(), v.end());
    adj_mask_.assign(n, 0);
    if (n <= kMaxWordVertices) {
      for (int i = 0; i < n; ++i)
        for (int j : nbr_[i]) adj_mask_[i] |= (uint64_t{1} << j);
    }
    if (require_connected && !connected_from(0))
      throw std::invalid_argument("graph: defining graph must be connected");
  }

  int n() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  bool has_vertex(const std::string& name) const {
    return index_.count(name) > 0;
  }
  int index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      throw std::invalid_argument("graph: unknown vertex '" + name + "'");
    return it->second;
  }

  bool adjacent(int i, int j) const {
    if (i == j) return false;
    const auto& v = nbr_[i];
    return std::binary_search(v.begin(), v.end(), j);
  }
  const std::vector<int>& neighbors(int i) const { return nbr_.at(i); }
  int degree(int i) const { return static_cast<int>(nbr_.at(i).size()); }

  // Two generators commute exactly when their vertices coincide or span an
  // edge of the defining graph.
  bool commute(int i, int j) const { return i == j || adjacent(i, j); }

  // Bit masks over vertex indices; require n() <= kMaxWordVertices.
  uint64_t lk_mask(int i) const {
    require_mask_support();
    return adj_mask_[i];
  }
  uint64_t st_mask(int i) const {
    require_mask_support();
    return adj_mask_[i] | (uint64_t{1} << i);
  }

  std::vector<int> link(int i) const { return nbr_.at(i); }
  std::vector<int> star(int i) const {
    std::vector<int> s = nbr_.at(i);
    s.insert(std::lower_bound(s.begin(), s.end(), i), i);
    return s;
  }

  std::vector<int> bfs_distances(int root) const {
    std::vector<int> dist(n(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : nbr_[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
    }
    return dist;
  }

  int distance(int a, int b) const {
    int d = bfs_distances(a)[b];
    if (d < 0) throw std::logic_error("graph: vertices in distinct components");
    return d;
  }

  GraphMetrics metrics() const {
    GraphMetrics m;
    const int n_ = n();
    long long edge_count = 0;
    for (int i = 0; i < n_; ++i) {
      m.max_degree = std::max(m.max_degree, degree(i));
      edge_count += degree(i);
    }
    edge_count /= 2;

    // Girth: a BFS from every root; every non-tree edge closes a candidate
    // cycle of length dist[x] + dist[y] + 1.  Candidates never undercut a
    // true cycle, and rooting at a vertex of a shortest cycle attains it.
    int best = -1;
    for (int r = 0; r < n_; ++r) {
      std::vector<int> dist(n_, -1), parent(n_, -1);
      std::queue<int> q;
      dist[r] = 0;
      q.push(r);
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : nbr_[x]) {
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            parent[y] = x;
            q.push(y);
          } else if (y != parent[x]) {
            int c = dist[x] + dist[y] + 1;
            if (best < 0 || c < best) best = c;
          }
        }
      }
    }
    m.girth = best < 0 ? Girth::infinite() : Girth::finite(best);
    m.is_tree = (best < 0) && edge_count == n_ - 1;

    // Diameter over all BFS roots (defining graphs are connected).
    for (int r = 0; r < n_; ++r) {
      auto dist = bfs_distances(r);
      for (int d : dist) m.diameter = std::max(m.diameter, d);
    }

    // Bipartite <=> no odd girth (two-coloring check kept independent).
    std::vector<int> color(n_, -1);
    for (int r = 0; r < n_ && m.bipartite; ++r) {
      if (color[r] >= 0) continue;
      color[r] = 0;
      std::queue<int> q;
      q.push(r);
      while (!q.empty() && m.bipartite) {
        int x = q.front();
        q.pop();
        for (int y : nbr_[x]) {
          if (color[y] < 0) {
            color[y] = color[x] ^ 1;
            q.push(y);
          } else if (color[y] == color[x]) {
            m.bipartite = false;
            break;
          }
        }
      }
    }
    return m;
  }

  // The subgraph of the complement graph induced on `subset`: an edge joins
  // two subset vertices exactly when they are distinct and NOT adjacent here.
  InducedSubgraph complement_induced(std::vector<int> subset) const {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    InducedSubgraph out;
    out.vertices = subset;
    const int k = static_cast<int>(subset.size());
    std::vector<std::vector<int>> adj(k);
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (!adjacent(subset[a], subset[b])) {
          out.edges.emplace_back(subset[a], subset[b]);
          adj[a].push_back(b);
          adj[b].push_back(a);
        }
    std::vector<int> comp(k, -1);
    for (int s = 0; s < k; ++s) {
      if (comp[s] >= 0) continue;
      comp[s] = static_cast<int>(out.components.size());
      out.components.emplace_back();
      std::queue<int> q;
      q.push(s);
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        out.components.back().push_back(subset[x]);
        for (int y : adj[x])
          if (comp[y] < 0) {
            comp[y] = comp[s];
            q.push(y);
          }
      }
    }
    return out;
  }

 private:
  static void validate_name(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("graph: empty vertex name");
    for (char c : s)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw std::invalid_argument(
            "graph: vertex name '" + s +
            "' may contain only letters, digits and underscores");
  }

  void require_mask_support() const {
    if (n() > kMaxWordVertices)
      throw std::invalid_argument(
          "graph: word-level operations support at most 64 vertices");
  }

  bool connected_from(int root) const {
    auto dist = bfs_distances(root);
    return std::none_of(dist.begin(), dist.end(),
                        [](int d) { return d < 0; });
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> nbr_;
  std::vector<uint64_t> adj_mask_;
};

// ---------------------------------------------------------------------------
// Built-in families.

// Path on n vertices named a, b, c, ... (n <= 26).
inline SimplicialGraph make_path(int n) {
  if (n < 1 || n > 26)
    throw std::invalid_argument("path: size must be between 1 and 26");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(names[i], names[i + 1]);
  return SimplicialGraph(std::move(names), edges);
}

// Cycle on n >= 3 vertices named v_1 ... v_n.
inline SimplicialGraph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: size must be at least 3");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) names.push_back("v_" + std::to_string(i));
  for (int i = 0; i < n; ++i) edges.emplace_back(names[i], names[(i + 1) % n]);
  return SimplicialGraph(std::move(names), edges);
}

// Star with center c and leaves l1 ... ln.
inline SimplicialGraph make_star(int n) {
  if (n < 1) throw std::invalid_argument("star: needs at least one leaf");
  std::vector<std::string> names{"c"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) {
    names.push_back("l" + std::to_string(i));
    edges.emplace_back("c", names.back());
  }
  return SimplicialGraph(std::move(names), edges);
}

// The girth-6 family used for the 3 + 1/k translation lengths: three star
// centers u, v, t with leaf rows u_i, v_i, t_i (i = 1..k), rows linked by
// u_i - v_i, v_i - t_i, t_i - u_{i+1}, and the seam closed through an extra
// vertex w via t_k - w - u_1.
inline SimplicialGraph make_gamma(int k) {
  if (k < 2) throw std::invalid_argument("gamma: k must be at least 2");
  std::vector<std::string> names{"u", "v", "t"};
  std::vector<std::pair<std::string, std::string>> edges;
  auto row = [&](const std::string& p) {
    for (int i = 1; i <= k; ++i) names.push_back(p + "_" + std::to_string(i));
  };
  row("u");
  row("v");
  row("t");
  names.push_back("w");
  auto nm = [&](const std::string& p, int i) {
    return p + "_" + std::to_string(i);
  };
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back("u", nm("u", i));
    edges.emplace_back("v", nm("v", i));
    edges.emplace_back("t", nm("t", i));
    edges.emplace_back(nm("u", i), nm("v", i));
    edges.emplace_back(nm("v", i), nm("t", i));
    if (i < k) edges.emplace_back(nm("t", i), nm("u", i + 1));
  }
  edges.emplace_back(nm("t", k), "w");
  edges.emplace_back("w", nm("u", 1));
  return SimplicialGraph(std::move(names), edges);
}

// Parse a family descriptor of the form "path:4", "cycle:7", "star:3",
// "gamma:2".  Loading a graph from a JSON file lives in serialize.hpp.
inline SimplicialGraph make_family(const std::string& desc) {
  auto colon = desc.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("graph family: expected 'name:size', got '" +
                                desc + "'");
  const std::string fam = desc.substr(0, colon);
  int size = 0;
  try {
    size_t used = 0;
    size = std::stoi(desc.substr(colon + 1), &used);
    if (used != desc.size() - colon - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("graph family: bad size in '" + desc + "'");
  }
  if (fam == "path") return make_path(size);
  if (fam == "cycle") return make_cycle(size);
  if (fam == "star") return make_star(size);
  if (fam == "gamma") return make_gamma(size);
  throw std::invalid_argument("graph family: unknown family '" + fam + "'");
}

}  // namespace raag
