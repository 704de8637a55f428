#pragma once

// Exhaustive rotation-system search deciding whether a connected graph embeds
// in S_g or N_k.
//
// Faces are traced while the rotation system is being chosen: a corner of the
// rotation at a vertex is fixed only when a face walk first needs it, so every
// partial assignment is a prefix of face walks. The search prunes as soon as
// the faces closed so far plus the most faces the untraversed edge sides could
// still form falls short of the face count Euler's formula demands.
//
// Non-orientable embeddings carry a sign per edge. Signs on a BFS spanning tree
// are normalised to +1 (local switching), the rest are branched on the first
// time a face walk crosses the edge. Walks run over flags (dart, side); a flag
// and its mirror (the same edge side walked backwards) always belong to the
// same face, so both are consumed together.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "genuslab/graph.hpp"

namespace genuslab::embed {

enum class Decision { no, yes, unknown };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::no: return "no";
    case Decision::yes: return "yes";
    case Decision::unknown: return "unknown";
  }
  return "unknown";
}

struct SearchLimits {
  std::chrono::milliseconds timeout{std::chrono::seconds(60)};
};

/// Embedding scheme. rotation[v] lists the neighbours of v in cyclic order;
/// signature holds +1/-1 per edge of graph.edges() (all +1 when orientable).
struct RotationState {
  std::vector<std::vector<Vertex>> rotation;
  std::vector<int> signature;
};

struct EmbeddingResult {
  Decision decision = Decision::unknown;
  std::optional<RotationState> embedding;  // set when decision == yes
  std::uint64_t nodes = 0;
};

class RotationSearch {
 public:
  RotationSearch(const SimpleGraph& g, bool nonorientable) : g_(g), nonorientable_(nonorientable) {
    if (!is_connected(g)) throw GraphError("rotation search needs a connected graph");
    n_ = g.vertex_count();
    const int m = static_cast<int>(g.edge_count());
    darts_ = 2 * m;
    tail_.resize(darts_);
    out_.assign(n_, {});
    for (int e = 0; e < m; ++e) {
      const auto [u, v] = g.edges()[e];
      tail_[2 * e] = u;
      tail_[2 * e + 1] = v;
      out_[u].push_back(2 * e);
      out_[v].push_back(2 * e + 1);
    }
    // Face walks have length >= girth once no vertex has degree 1.
    int min_deg = n_ > 0 ? g.degree(0) : 0;
    for (Vertex v = 0; v < n_; ++v) min_deg = std::min(min_deg, g.degree(v));
    const auto gi = girth(g);
    min_face_ = (min_deg >= 2 && gi) ? *gi : 1;

    root_ = 0;
    for (Vertex v = 0; v < n_; ++v)
      if (g.degree(v) > g.degree(root_)) root_ = v;

    tree_edge_.assign(m, false);
    std::vector<bool> seen(n_, false);
    std::vector<Vertex> queue{root_};
    seen[root_] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int d : out_[queue[h]]) {
        const Vertex w = tail_[d ^ 1];
        if (!seen[w]) {
          seen[w] = true;
          tree_edge_[d >> 1] = true;
          queue.push_back(w);
        }
      }
    }
  }

  /// Searches for an embedding with Euler characteristic >= chi. For the
  /// non-orientable search an embedding counts if it is non-orientable, or
  /// orientable with Euler characteristic >= chi + 1.
  EmbeddingResult search(int chi, const SearchLimits& limits) {
    EmbeddingResult result;
    if (darts_ == 0) {
      // A single vertex (or nothing) sits in any surface.
      result.decision = Decision::yes;
      result.embedding = RotationState{std::vector<std::vector<Vertex>>(n_), {}};
      return result;
    }
    target_ = chi - n_ + darts_ / 2;
    deadline_ = std::chrono::steady_clock::now() + limits.timeout;
    aborted_ = false;
    nodes_ = 0;
    reset();

    const int root_deg = static_cast<int>(out_[root_].size());
    std::vector<int> rest(out_[root_].begin() + 1, out_[root_].end());
    bool found = false;
    // Root rotation fixed up to cyclic shift (first dart pinned) and
    // reflection (second dart before last).
    do {
      if (root_deg >= 3 && rest.front() > rest.back()) continue;
      const std::size_t mark = trail_.size();
      int prev = out_[root_][0];
      for (int d : rest) {
        link(prev, d);
        prev = d;
      }
      link(prev, out_[root_][0]);
      found = run(State{});
      if (found) break;
      undo(mark);
      if (aborted_) break;
    } while (std::next_permutation(rest.begin(), rest.end()));

    result.nodes = nodes_;
    if (found) {
      result.decision = Decision::yes;
      result.embedding = extract();
    } else {
      result.decision = aborted_ ? Decision::unknown : Decision::no;
    }
    return result;
  }

 private:
  struct State {
    int start = -1;
    int cur = -1;
    bool in_progress = false;
    int faces = 0;
    int traversed = 0;
    int length = 0;
  };

  enum class ChangeKind : std::uint8_t { link, use, sign };
  struct Change {
    ChangeKind kind;
    int a, b, s, e;
  };

  void reset() {
    succ_.assign(darts_, -1);
    pred_.assign(darts_, -1);
    other_end_.resize(darts_);
    std::iota(other_end_.begin(), other_end_.end(), 0);
    assigned_.assign(n_, 0);
    used_.assign(2 * darts_, false);
    sign_.assign(darts_ / 2, 0);
    for (int e = 0; e < darts_ / 2; ++e)
      if (!nonorientable_ || tree_edge_[e]) sign_[e] = 1;
    trail_.clear();
  }

  // succ[a] = b keeps the rotation at their vertex a union of paths, closing
  // into a single cycle only with the last corner.
  bool can_link(int a, int b) const {
    if (succ_[a] != -1 || pred_[b] != -1) return false;
    if (other_end_[a] == b) return assigned_[tail_[a]] + 1 == static_cast<int>(out_[tail_[a]].size());
    return true;
  }

  void link(int a, int b) {
    const int s = other_end_[a];
    const int e = other_end_[b];
    succ_[a] = b;
    pred_[b] = a;
    ++assigned_[tail_[a]];
    if (s != b) {
      other_end_[s] = e;
      other_end_[e] = s;
    }
    trail_.push_back({ChangeKind::link, a, b, s, e});
  }

  void use(int flag) {
    used_[flag] = true;
    trail_.push_back({ChangeKind::use, flag, 0, 0, 0});
  }

  void set_sign(int edge, int value) {
    sign_[edge] = value;
    trail_.push_back({ChangeKind::sign, edge, 0, 0, 0});
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Change c = trail_.back();
      trail_.pop_back();
      switch (c.kind) {
        case ChangeKind::link:
          succ_[c.a] = -1;
          pred_[c.b] = -1;
          --assigned_[tail_[c.a]];
          if (c.s != c.b) {
            other_end_[c.s] = c.a;
            other_end_[c.e] = c.b;
          }
          break;
        case ChangeKind::use: used_[c.a] = false; break;
        case ChangeKind::sign: sign_[c.a] = 0; break;
      }
    }
  }

  int upper_bound(const State& s) const {
    const int remaining = darts_ - s.traversed;
    if (!s.in_progress) return s.faces + remaining / min_face_;
    const int still_needed = std::max(0, min_face_ - s.length);
    return s.faces + 1 + std::max(0, remaining - still_needed) / min_face_;
  }

  // Next corner from flag (d, side): the side after crossing d, and the dart
  // leaving head(d) it leads to (-1 while the corner is unassigned).
  int next_dart(int d, int side) const {
    const int x = d ^ 1;
    return side == 0 ? succ_[x] : pred_[x];
  }

  // Prefers a start whose first corner is already fixed.
  int pick_start() const {
    int fallback = -1;
    for (int f = 0; f < 2 * darts_; ++f) {
      if (used_[f]) continue;
      const int d = f >> 1;
      const int sg = sign_[d >> 1];
      if (sg != 0) {
        const int side = (f & 1) ^ (sg < 0 ? 1 : 0);
        if (next_dart(d, side) != -1) return f;
      }
      if (fallback == -1) fallback = f;
    }
    return fallback;
  }

  bool advance(State& s, int flag) {
    if (flag == s.start) {
      ++s.faces;
      s.in_progress = false;
      return true;
    }
    if (used_[flag]) return false;
    use(flag);
    s.cur = flag;
    return true;
  }

  bool complete(const State& s) const {
    if (!nonorientable_) return s.faces >= target_;
    bool twisted = false;
    for (int e = 0; e < darts_ / 2 && !twisted; ++e) twisted = sign_[e] < 0;
    return twisted ? s.faces >= target_ : s.faces >= target_ + 1;
  }

  bool run(State s) {
    while (true) {
      if ((nodes_++ & 0xFFF) == 0 && std::chrono::steady_clock::now() >= deadline_) aborted_ = true;
      if (aborted_) return false;
      if (!s.in_progress) {
        if (s.traversed == darts_) return complete(s);
        if (upper_bound(s) < target_) return false;
        const int f = pick_start();
        use(f);
        s.start = s.cur = f;
        s.in_progress = true;
        s.length = 0;
      }
      const int d = s.cur >> 1;
      const int side = s.cur & 1;
      const int edge = d >> 1;
      if (sign_[edge] == 0) {
        for (int value : {1, -1}) {
          const std::size_t mark = trail_.size();
          set_sign(edge, value);
          if (run(s)) return true;
          undo(mark);
          if (aborted_) return false;
        }
        return false;
      }
      const int twist = sign_[edge] < 0 ? 1 : 0;
      const int mirror = ((d ^ 1) << 1) | (side ^ twist ^ 1);
      if (used_[mirror]) return false;
      use(mirror);
      ++s.traversed;
      ++s.length;
      if (upper_bound(s) < target_) return false;

      const int new_side = side ^ twist;
      const int x = d ^ 1;
      const int nxt = next_dart(d, new_side);
      if (nxt != -1) {
        if (!advance(s, (nxt << 1) | new_side)) return false;
        continue;
      }
      for (int c : out_[tail_[x]]) {
        if (new_side == 0 ? !can_link(x, c) : !can_link(c, x)) continue;
        const int flag = (c << 1) | new_side;
        if (flag != s.start && used_[flag]) continue;
        const std::size_t mark = trail_.size();
        if (new_side == 0) link(x, c);
        else link(c, x);
        State t = s;
        if (advance(t, flag) && run(t)) return true;
        undo(mark);
        if (aborted_) return false;
      }
      return false;
    }
  }

  RotationState extract() const {
    RotationState r;
    r.rotation.assign(n_, {});
    for (Vertex v = 0; v < n_; ++v) {
      if (out_[v].empty()) continue;
      int d = out_[v][0];
      do {
        r.rotation[v].push_back(tail_[d ^ 1]);
        d = succ_[d];
      } while (d != out_[v][0] && d != -1);
    }
    r.signature.assign(sign_.begin(), sign_.end());
    for (auto& s : r.signature)
      if (s == 0) s = 1;
    return r;
  }

  const SimpleGraph& g_;
  bool nonorientable_;
  int n_ = 0;
  int darts_ = 0;
  int min_face_ = 1;
  Vertex root_ = 0;
  int target_ = 0;
  std::vector<Vertex> tail_;
  std::vector<std::vector<int>> out_;
  std::vector<bool> tree_edge_;

  std::vector<int> succ_, pred_, other_end_, assigned_, sign_;
  std::vector<bool> used_;
  std::vector<Change> trail_;

  std::chrono::steady_clock::time_point deadline_;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
};

/// Whether the connected graph g embeds in the orientable surface of the
/// given genus.
inline EmbeddingResult embeds_in_orientable(const SimpleGraph& g, int genus, const SearchLimits& limits = {}) {
  if (genus < 0) throw GraphError("genus target must be non-negative");
  return RotationSearch(g, false).search(2 - 2 * genus, limits);
}

/// Whether the connected graph g embeds in N_k, the sphere with k crosscaps.
inline EmbeddingResult embeds_in_nonorientable(const SimpleGraph& g, int crosscap, const SearchLimits& limits = {}) {
  if (crosscap < 1) throw GraphError("crosscap target must be at least 1");
  return RotationSearch(g, true).search(2 - crosscap, limits);
}

}  // namespace genuslab::embed
