#pragma once

// Brute-force oracles, random generators and a small property runner shared
// by the test binaries. Nothing here calls into the algorithms it checks.

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "genuslab/genuslab.hpp"

namespace oracle {

using genuslab::Edge;
using genuslab::Element;
using genuslab::SimpleGraph;
using genuslab::Vertex;
using Table = std::vector<std::vector<Element>>;

/// Group axioms with identity at index 0, by exhaustive scan.
inline bool is_group_table(const Table& t) {
  const std::size_t n = t.size();
  if (n == 0) return false;
  for (const auto& row : t) {
    if (row.size() != n) return false;
    for (Element x : row)
      if (x >= n) return false;
  }
  for (std::size_t a = 0; a < n; ++a)
    if (t[0][a] != a || t[a][0] != a) return false;
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b)
      if (t[a][b] == 0 && t[b][a] == 0) found = true;
    if (!found) return false;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

inline Table table_of(const genuslab::FiniteGroup& g) { return g.rows(); }

inline std::size_t centre_size(const Table& t) {
  std::size_t z = 0;
  for (std::size_t a = 0; a < t.size(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < t.size(); ++b) central = central && t[a][b] == t[b][a];
    z += central;
  }
  return z;
}

inline std::size_t centraliser_size(const Table& t, Element x) {
  std::size_t c = 0;
  for (std::size_t b = 0; b < t.size(); ++b) c += t[x][b] == t[b][x];
  return c;
}

/// Number of conjugacy classes via Burnside: k = (1/|G|) * sum |C(x)|.
inline std::size_t class_count(const Table& t) {
  std::size_t s = 0;
  for (std::size_t x = 0; x < t.size(); ++x) s += centraliser_size(t, Element(x));
  return s / t.size();
}

inline std::size_t order_of(const Table& t, Element x) {
  std::size_t k = 1;
  for (Element p = x; p != 0; p = t[p][x]) ++k;
  return k;
}

/// Whether some bijection G -> H preserves products, by trying every image
/// of a generating set.
inline bool isomorphic(const Table& g, const Table& h) {
  const std::size_t n = g.size();
  if (h.size() != n) return false;
  std::vector<Element> gens;
  std::set<Element> span{0};
  auto close = [&] {
    std::vector<Element> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      Element x = frontier.back();
      frontier.pop_back();
      for (Element s : gens)
        if (span.insert(g[x][s]).second) frontier.push_back(g[x][s]);
    }
  };
  for (Element x = 1; x < n && span.size() < n; ++x)
    if (!span.count(x)) {
      gens.push_back(x);
      close();
    }
  std::vector<Element> image(gens.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == gens.size()) {
      std::vector<long> phi(n, -1);
      phi[0] = 0;
      std::vector<Element> queue{0};
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Element x = queue[head];
        for (std::size_t s = 0; s < gens.size(); ++s) {
          Element y = g[x][gens[s]];
          Element img = h[phi[x]][image[s]];
          if (phi[y] == -1) {
            phi[y] = img;
            queue.push_back(y);
          } else if (phi[y] != static_cast<long>(img)) {
            return false;
          }
        }
      }
      std::set<long> values(phi.begin(), phi.end());
      if (values.size() != n) return false;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (phi[g[a][b]] != static_cast<long>(h[phi[a]][phi[b]])) return false;
      return true;
    }
    const std::size_t ord = order_of(g, gens[i]);
    for (Element y = 0; y < n; ++y) {
      if (order_of(h, y) != ord) continue;
      image[i] = y;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

/// All k-subsets of `pool` that are pairwise adjacent under `adjacent`.
inline std::vector<std::vector<int>> cliques_of_size(const std::vector<int>& pool, int k,
                                                     const std::function<bool(int, int)>& adjacent) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      bool ok = true;
      for (int c : cur) ok = ok && adjacent(c, pool[i]);
      if (!ok) continue;
      cur.push_back(pool[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline int clique_number(const SimpleGraph& g) {
  std::vector<int> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  int best = g.vertex_count() ? 1 : 0;
  for (int k = 2; k <= g.vertex_count(); ++k) {
    if (cliques_of_size(all, k, [&](int a, int b) { return g.has_edge(a, b); }).empty()) break;
    best = k;
  }
  return best;
}

// -- Embeddings -------------------------------------------------------------

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

/// Faces of a signed rotation system, counted as orbits of the flag group
/// generated by "other end of the edge" and "next edge around the vertex".
inline int count_faces(const SimpleGraph& g, const std::vector<std::vector<Vertex>>& rotation,
                       const std::vector<int>& signature) {
  std::map<std::pair<Vertex, Vertex>, int> dart;  // (v, w) -> id
  std::vector<std::pair<Vertex, Vertex>> darts;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : rotation[v]) {
      dart[{v, w}] = static_cast<int>(darts.size());
      darts.push_back({v, w});
    }
  std::map<std::pair<Vertex, Vertex>, int> sign;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    auto [u, v] = g.edges()[i];
    sign[{u, v}] = sign[{v, u}] = signature[i];
  }
  const int flags = 2 * static_cast<int>(darts.size());
  Dsu dsu(flags);
  for (std::size_t d = 0; d < darts.size(); ++d) {
    auto [v, w] = darts[d];
    const auto& rot = rotation[v];
    const std::size_t i = std::find(rot.begin(), rot.end(), w) - rot.begin();
    const Vertex next = rot[(i + 1) % rot.size()];
    // Side 0 of v->w faces the rotation successor; side 1 of the successor faces back.
    dsu.unite(2 * static_cast<int>(d), 2 * dart[{v, next}] + 1);
    const int back = dart[{w, v}];
    for (int s = 0; s < 2; ++s) {
      const int s2 = sign[{v, w}] > 0 ? 1 - s : s;
      dsu.unite(2 * static_cast<int>(d) + s, 2 * back + s2);
    }
  }
  std::set<int> roots;
  for (int f = 0; f < flags; ++f) roots.insert(dsu.find(f));
  return static_cast<int>(roots.size());
}

/// Whether flipping vertices can make every edge sign positive.
inline bool orientable_signature(const SimpleGraph& g, const std::vector<int>& signature) {
  std::vector<int> colour(g.vertex_count(), -1);
  std::vector<std::vector<std::pair<Vertex, int>>> adj(g.vertex_count());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    auto [u, v] = g.edges()[i];
    const int parity = signature[i] < 0;
    adj[u].push_back({v, parity});
    adj[v].push_back({u, parity});
  }
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (auto [w, p] : adj[v]) {
        if (colour[w] == -1) {
          colour[w] = colour[v] ^ p;
          stack.push_back(w);
        } else if (colour[w] != (colour[v] ^ p)) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Euler genus 2 - V + E - F of an embedding of a connected graph.
inline int euler_genus_of(const SimpleGraph& g, const std::vector<std::vector<Vertex>>& rotation,
                          const std::vector<int>& signature) {
  return 2 - g.vertex_count() + static_cast<int>(g.edge_count()) - count_faces(g, rotation, signature);
}

inline bool valid_rotation(const SimpleGraph& g, const std::vector<std::vector<Vertex>>& rotation) {
  if (static_cast<int>(rotation.size()) != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto r = rotation[v];
    std::sort(r.begin(), r.end());
    if (r != g.neighbors(v)) return false;
  }
  return true;
}

inline double rotation_count(const SimpleGraph& g) {
  double c = 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (int k = 2; k < g.degree(v); ++k) c *= k;
  return c;
}

/// Calls visit on every rotation system (first neighbour fixed per vertex).
inline void for_each_rotation(const SimpleGraph& g,
                              const std::function<void(const std::vector<std::vector<Vertex>>&)>& visit) {
  std::vector<std::vector<Vertex>> rot(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) rot[v] = g.neighbors(v);
  std::function<void(Vertex)> rec = [&](Vertex v) {
    if (v == g.vertex_count()) {
      visit(rot);
      return;
    }
    if (rot[v].size() <= 2) {
      rec(v + 1);
      return;
    }
    std::sort(rot[v].begin() + 1, rot[v].end());
    do {
      rec(v + 1);
    } while (std::next_permutation(rot[v].begin() + 1, rot[v].end()));
  };
  rec(0);
}

/// Genus and crosscap of a connected graph by exhaustive enumeration of
/// rotations and, for the crosscap, of signs on non-tree edges.
struct BruteSurface {
  int genus = 0;
  int crosscap = 0;  // 0 when planar
};

inline BruteSurface brute_surface(const SimpleGraph& g, bool with_crosscap = true) {
  const int e = static_cast<int>(g.edge_count());
  std::vector<bool> tree(e, false);
  {
    Dsu dsu(g.vertex_count());
    for (int i = 0; i < e; ++i) {
      auto [u, v] = g.edges()[i];
      if (dsu.find(u) != dsu.find(v)) {
        dsu.unite(u, v);
        tree[i] = true;
      }
    }
  }
  std::vector<int> cotree;
  for (int i = 0; i < e; ++i)
    if (!tree[i]) cotree.push_back(i);
  int best_orientable = 1 << 20, best_twisted = 1 << 20;
  std::vector<int> sig(e, 1);
  for_each_rotation(g, [&](const std::vector<std::vector<Vertex>>& rot) {
    const std::uint32_t masks = with_crosscap ? (1u << cotree.size()) : 1u;
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      for (std::size_t j = 0; j < cotree.size(); ++j) sig[cotree[j]] = (mask >> j & 1) ? -1 : 1;
      const int eg = euler_genus_of(g, rot, sig);
      if (mask == 0) best_orientable = std::min(best_orientable, eg);
      else best_twisted = std::min(best_twisted, eg);
    }
  });
  BruteSurface out;
  out.genus = best_orientable / 2;
  out.crosscap = !with_crosscap || out.genus == 0 ? 0 : std::min(best_twisted, best_orientable + 1);
  return out;
}

/// Smooths degree-2 vertices of the witness and checks that K5 or K3,3
/// remains.
inline bool is_kuratowski_subdivision(const SimpleGraph& host, const std::vector<Edge>& edges,
                                      genuslab::embed::KuratowskiKind kind) {
  std::map<Vertex, std::multiset<Vertex>> adj;
  for (auto [u, v] : edges) {
    if (!host.has_edge(u, v)) return false;
    adj[u].insert(v);
    adj[v].insert(u);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = adj.begin(); it != adj.end(); ++it) {
      if (it->second.size() != 2) continue;
      const Vertex v = it->first;
      const Vertex a = *it->second.begin(), b = *std::next(it->second.begin());
      if (a == b || adj[a].count(b)) continue;
      adj[a].erase(adj[a].find(v));
      adj[b].erase(adj[b].find(v));
      adj[a].insert(b);
      adj[b].insert(a);
      adj.erase(it);
      changed = true;
      break;
    }
  }
  std::vector<Vertex> verts;
  for (auto& [v, nb] : adj) {
    if (std::set<Vertex>(nb.begin(), nb.end()).size() != nb.size()) return false;
    verts.push_back(v);
  }
  if (kind == genuslab::embed::KuratowskiKind::k5) {
    if (verts.size() != 5) return false;
    for (auto& [v, nb] : adj)
      if (nb.size() != 4) return false;
    return true;
  }
  if (verts.size() != 6) return false;
  for (auto& [v, nb] : adj)
    if (nb.size() != 3) return false;
  // Bipartite with parts of size three.
  std::map<Vertex, int> side{{verts[0], 0}};
  std::vector<Vertex> stack{verts[0]};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!side.count(w)) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return false;
      }
    }
  }
  int left = 0;
  for (auto& [v, s] : side) left += s == 0;
  return side.size() == 6 && left == 3;
}

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;
using genuslab::FiniteGroup;
using genuslab::SimpleGraph;

inline SimpleGraph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<genuslab::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return SimpleGraph(n, edges);
}

inline SimpleGraph random_connected_graph(Rng& rng, int n, double p) {
  std::vector<genuslab::Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return SimpleGraph(n, edges);
}

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// A small group from one of several constructions, at most ~60 elements.
inline genuslab::FiniteGroup random_group(Rng& rng) {
  using namespace genuslab;
  switch (pick(rng, 0, 4)) {
    case 0: return cyclic_group(pick(rng, 1, 20));
    case 1: return dihedral_group(pick(rng, 2, 12));
    case 2: {
      // Z_n : Z_m with a valid action t.
      for (;;) {
        const std::size_t n = pick(rng, 2, 10), m = pick(rng, 2, 6), t = pick(rng, 1, n - 1);
        if (std::gcd(t, n) != 1) continue;
        std::size_t p = 1;
        for (std::size_t i = 0; i < m; ++i) p = p * t % n;
        if (p != 1 % n) continue;
        return semidirect_product_cyclic(n, m, t, "rand");
      }
    }
    case 3: return direct_product(dihedral_group(pick(rng, 2, 5)), cyclic_group(pick(rng, 1, 3)));
    default: {
      const std::size_t degree = pick(rng, 2, 5);
      std::vector<Permutation> gens;
      const std::size_t count = pick(rng, 1, 2);
      for (std::size_t i = 0; i < count; ++i) {
        Permutation p(degree);
        std::iota(p.begin(), p.end(), 0u);
        std::shuffle(p.begin(), p.end(), rng);
        gens.push_back(p);
      }
      return from_permutation_generators(degree, gens, "rand");
    }
  }
}

inline genuslab::FiniteGroup random_nonabelian_group(Rng& rng) {
  for (;;) {
    auto g = random_group(rng);
    if (genuslab::center(g).size() != g.order()) return g;
  }
}

}  // namespace gen

/// Runs `property` on `cases` seeded generators; a failure message names the
/// case index so it can be replayed.
inline void check_property(const std::string& name, int cases, std::uint64_t seed,
                           const std::function<std::optional<std::string>(gen::Rng&)>& property) {
  for (int i = 0; i < cases; ++i) {
    gen::Rng rng(seed + static_cast<std::uint64_t>(i) * 0x9E3779B97F4A7C15ull);
    if (auto failure = property(rng)) {
      ADD_FAILURE() << name << ": case " << i << " (seed " << seed << ") failed: " << *failure;
      return;
    }
  }
}
