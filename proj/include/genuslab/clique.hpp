#pragma once

// Exact clique search by branch and bound with a greedy colouring bound.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "genuslab/graph.hpp"

namespace genuslab {

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }
  int next(int v) const {
    ++v;
    if (v >= n_) return -1;
    std::size_t i = static_cast<std::size_t>(v >> 6);
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (w) return static_cast<int>(i * 64) + std::countr_zero(w);
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }

  VertexSet operator&(const VertexSet& o) const {
    VertexSet r(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  VertexSet without(const VertexSet& o) const {
    VertexSet r(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

class CliqueSearch {
 public:
  explicit CliqueSearch(const SimpleGraph& g) : n_(g.vertex_count()) {
    adj_.assign(n_, VertexSet(n_));
    for (auto [u, v] : g.edges()) {
      adj_[u].set(v);
      adj_[v].set(u);
    }
  }

  VertexSet all() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v) s.set(v);
    return s;
  }

  /// A clique of exactly `size` vertices inside `allowed`, or nullopt when
  /// none exists.
  std::optional<std::vector<Vertex>> find(int size, const VertexSet& allowed) const {
    std::optional<std::vector<Vertex>> found;
    std::vector<Vertex> current;
    enumerate(size, allowed, current, [&](const std::vector<Vertex>& c) {
      found = c;
      return true;
    });
    return found;
  }

  std::optional<std::vector<Vertex>> find(int size) const { return find(size, all()); }

  /// `count` pairwise disjoint cliques of `size` vertices each.
  std::optional<std::vector<std::vector<Vertex>>> find_disjoint(int size, int count) const {
    std::vector<std::vector<Vertex>> chosen;
    if (disjoint_rec(size, count, all(), -1, chosen)) return chosen;
    return std::nullopt;
  }

  /// Calls `visit` on each `size`-clique in `allowed` in lexicographic order
  /// until it returns true. Returns whether a visit returned true.
  bool enumerate(int size, const VertexSet& allowed, std::vector<Vertex>& current,
                 const std::function<bool(const std::vector<Vertex>&)>& visit) const {
    if (static_cast<int>(current.size()) == size) return visit(current);
    if (static_cast<int>(current.size()) + colour_bound(allowed, size - static_cast<int>(current.size())) < size)
      return false;
    for (int v = allowed.first(); v != -1; v = allowed.next(v)) {
      VertexSet rest = allowed & adj_[v];
      // Restrict to vertices after v so each clique is produced once.
      for (int w = rest.first(); w != -1 && w < v; w = rest.next(w)) rest.reset(w);
      current.push_back(v);
      const bool stop = enumerate(size, rest, current, visit);
      current.pop_back();
      if (stop) return true;
    }
    return false;
  }

 private:
  // Number of colour classes in a greedy colouring of `candidates`, capped
  // at `need` since larger values never prune.
  int colour_bound(const VertexSet& candidates, int need) const {
    VertexSet uncoloured = candidates;
    int colours = 0;
    while (!uncoloured.none() && colours < need) {
      ++colours;
      VertexSet avail = uncoloured;
      for (int v = avail.first(); v != -1; v = avail.next(v)) {
        uncoloured.reset(v);
        avail = avail.without(adj_[v]);
      }
    }
    return colours;
  }

  bool disjoint_rec(int size, int remaining, const VertexSet& allowed, int min_first,
                    std::vector<std::vector<Vertex>>& chosen) const {
    if (remaining == 0) return true;
    VertexSet pool = allowed;
    for (int w = pool.first(); w != -1 && w <= min_first; w = pool.next(w)) pool.reset(w);
    std::vector<Vertex> current;
    return enumerate(size, pool, current, [&](const std::vector<Vertex>& c) {
      VertexSet used(n_);
      for (Vertex v : c) used.set(v);
      chosen.push_back(c);
      // Later cliques start after this one's first vertex.
      if (disjoint_rec(size, remaining - 1, allowed.without(used), c.front(), chosen)) return true;
      chosen.pop_back();
      return false;
    });
  }

  int n_;
  std::vector<VertexSet> adj_;
};

}  // namespace genuslab
