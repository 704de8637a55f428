#pragma once

// Undirected simple graphs and their block (biconnected component) structure.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace genuslab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always first < second

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Self-loops and out-of-range endpoints are rejected; duplicate edges
  /// collapse.
  SimpleGraph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {})
      : n_(vertex_count), labels_(std::move(labels)) {
    if (n_ < 0) throw GraphError("negative vertex count");
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_))
      throw GraphError("label count does not match vertex count");
    for (auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw GraphError("edge {" + std::to_string(u) + ", " + std::to_string(v) + "} out of range");
      if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  bool operator==(const SimpleGraph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
};

inline SimpleGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return SimpleGraph(n, std::move(edges));
}

/// Parts are {0..m-1} and {m..m+n-1}.
inline SimpleGraph complete_bipartite(int m, int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
  return SimpleGraph(m + n, std::move(edges));
}

inline SimpleGraph complement(const SimpleGraph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return SimpleGraph(g.vertex_count(), std::move(edges), g.labels());
}

/// Vertex i of the result is vertices[i] of g.
inline SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<Vertex>& vertices) {
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 0 || v >= g.vertex_count()) throw GraphError("vertex " + std::to_string(v) + " out of range");
    if (local[v] != -1) throw GraphError("vertex " + std::to_string(v) + " listed twice");
    local[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (Vertex v : vertices) labels.push_back(g.labels()[v]);
  return SimpleGraph(static_cast<int>(vertices.size()), std::move(edges), std::move(labels));
}

inline SimpleGraph disjoint_union(const std::vector<SimpleGraph>& parts) {
  std::vector<Edge> edges;
  int offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) edges.emplace_back(u + offset, v + offset);
    offset += p.vertex_count();
  }
  return SimpleGraph(offset, std::move(edges));
}

/// Component id per vertex, numbered by smallest member.
inline std::vector<int> component_labels(const SimpleGraph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

/// Vertex sets of the connected components, each ascending.
inline std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) {
  const auto comp = component_labels(g);
  const int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<Vertex>> out(count);
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[comp[v]].push_back(v);
  return out;
}

inline bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

/// A block with the parent index of each local vertex.
struct Block {
  SimpleGraph graph;
  std::vector<Vertex> vertex_map;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;  // ascending
};

/// Biconnected components by iterative depth-first lowpoint computation.
/// Isolated vertices become single-vertex blocks, bridges become K2 blocks.
inline BlockDecomposition blocks(const SimpleGraph& g) {
  const int n = g.vertex_count();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<bool> is_cut(n, false);
  std::vector<Edge> edge_stack;
  int time = 0;

  auto emit_block = [&](Edge until) {
    std::vector<Edge> local_edges;
    std::vector<Vertex> verts;
    while (true) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      local_edges.push_back(e);
      verts.push_back(e.first);
      verts.push_back(e.second);
      if (e == until) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<Edge> mapped;
    for (auto [u, v] : local_edges) {
      const int a = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), u) - verts.begin());
      const int b = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
      mapped.emplace_back(std::min(a, b), std::max(a, b));
    }
    out.blocks.push_back({SimpleGraph(static_cast<int>(verts.size()), std::move(mapped)), std::move(verts)});
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    if (g.degree(root) == 0) {
      disc[root] = time++;
      out.blocks.push_back({SimpleGraph(1, {}), {root}});
      continue;
    }
    int root_children = 0;
    std::vector<Vertex> stack{root};
    disc[root] = low[root] = time++;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      const auto& nbrs = g.neighbors(v);
      if (next_child[v] < nbrs.size()) {
        const Vertex w = nbrs[next_child[v]++];
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = time++;
          edge_stack.emplace_back(std::min(v, w), std::max(v, w));
          if (v == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          edge_stack.emplace_back(std::min(v, w), std::max(v, w));
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        const Vertex p = parent[v];
        if (p == -1) continue;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
          if (p != root) is_cut[p] = true;
          emit_block(Edge(std::min(p, v), std::max(p, v)));
        }
      }
    }
    if (root_children > 1) is_cut[root] = true;
  }
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

/// Side sizes when g is connected and complete bipartite (smaller first).
inline std::optional<std::pair<int, int>> complete_bipartite_parts(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n < 2 || !is_connected(g)) return std::nullopt;
  std::vector<int> side(n, -1);
  side[0] = 0;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (side[w] == -1) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return std::nullopt;
      }
    }
  }
  const int a = static_cast<int>(std::count(side.begin(), side.end(), 0));
  const int b = n - a;
  if (g.edge_count() != static_cast<std::size_t>(a) * static_cast<std::size_t>(b)) return std::nullopt;
  return std::pair{std::min(a, b), std::max(a, b)};
}

inline bool is_complete(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

/// Length of a shortest cycle, or nullopt for forests.
inline std::optional<int> girth(const SimpleGraph& g) {
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), from(n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    from[s] = -1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          from[w] = v;
          queue.push_back(w);
        } else if (w != from[v]) {
          const int len = dist[v] + dist[w] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

/// A "# vertices N" header, then one "u v" line per edge, 0-based, lexicographic.
inline void write_edge_list(std::ostream& os, const SimpleGraph& g) {
  os << "# vertices " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline void write_dot(std::ostream& os, const SimpleGraph& g, const std::string& name = "G") {
  os << "graph \"" << name << "\" {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (!g.labels().empty()) os << " [label=\"" << g.labels()[v] << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

/// Parses "u v" lines; blank lines and '#' comments are skipped. The vertex
/// count is one more than the largest endpoint unless given explicitly by a
/// leading "# vertices N" line.
inline SimpleGraph read_edge_list(std::istream& is) {
  std::vector<Edge> edges;
  int max_vertex = -1, declared = -1, line_no = 0;
  std::string line;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      std::string key;
      int value = 0;
      if (ls >> key >> value && key == "vertices") declared = value;
      continue;
    }
    std::istringstream fs(first);
    long u = 0, v = 0;
    std::string rest;
    if (!(fs >> u) || !(ls >> v) || (ls >> rest) || u < 0 || v < 0)
      throw GraphError("edge list line " + std::to_string(line_no) + ": expected two non-negative integers");
    if (u == v) throw GraphError("edge list line " + std::to_string(line_no) + ": self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_vertex = std::max<int>(max_vertex, static_cast<int>(std::max(u, v)));
  }
  const int n = std::max(declared, max_vertex + 1);
  return SimpleGraph(n, std::move(edges));
}

}  // namespace genuslab
