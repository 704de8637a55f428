#pragma once

// Genus and crosscap of arbitrary graphs, assembled from planarity tests,
// closed forms for complete and complete bipartite pieces, Euler bounds and
// the rotation search.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "genuslab/embed/bounds.hpp"
#include "genuslab/embed/planarity.hpp"
#include "genuslab/embed/rotation_search.hpp"
#include "genuslab/graph.hpp"

namespace genuslab::embed {

/// Integer known to lie in [lower, upper]; upper is absent when unknown.
struct Bound {
  int lower = 0;
  std::optional<int> upper;

  static Bound exactly(int v) { return {v, v}; }
  bool exact() const { return upper && *upper == lower; }

  Bound operator+(const Bound& o) const {
    Bound r{lower + o.lower, std::nullopt};
    if (upper && o.upper) r.upper = *upper + *o.upper;
    return r;
  }
  bool operator==(const Bound&) const = default;
};

inline std::string to_string(const Bound& b) {
  if (b.exact()) return std::to_string(b.lower);
  if (b.upper) return std::to_string(b.lower) + ".." + std::to_string(*b.upper);
  return ">=" + std::to_string(b.lower);
}

struct SurfaceOptions {
  SearchLimits limits;
  // Once a value is known to be >= ceiling it is left as a lower bound.
  std::optional<int> ceiling;
};

struct GenusResult {
  Bound value;
  std::vector<std::string> provenance;
};

struct CrosscapResult {
  Bound value;  // 0 means planar: crosscap not applicable
  std::vector<std::string> provenance;
};

struct SurfaceVerdict {
  bool planar = true;
  Bound genus;
  Bound crosscap;  // 0 when planar
  Bound euler_genus;
  std::vector<std::string> provenance;

  bool exact() const { return genus.exact() && crosscap.exact(); }
  bool toroidal() const { return genus.exact() && genus.lower == 1; }
  bool projective() const { return crosscap.exact() && crosscap.lower == 1; }
};

namespace detail {

inline std::string shape_name(const SimpleGraph& g) {
  return std::to_string(g.vertex_count()) + "v/" + std::to_string(g.edge_count()) + "e";
}

/// Repeatedly deletes degree-1 vertices; neither genus nor crosscap change.
inline SimpleGraph two_core(const SimpleGraph& g) {
  std::vector<int> deg(g.vertex_count());
  std::vector<bool> removed(g.vertex_count(), false);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (removed[v]) continue;
    removed[v] = true;
    for (Vertex w : g.neighbors(v))
      if (!removed[w] && --deg[w] <= 1) stack.push_back(w);
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!removed[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

// Genus of a single block.
inline Bound block_genus(const SimpleGraph& b, const SurfaceOptions& opts, std::vector<std::string>& notes) {
  if (b.edge_count() < 3 || is_planar(b).planar) return Bound::exactly(0);
  if (is_complete(b)) {
    notes.push_back("block K" + std::to_string(b.vertex_count()) + ": closed form");
    return Bound::exactly(genus_formula_Kn(b.vertex_count()));
  }
  if (auto parts = complete_bipartite_parts(b)) {
    notes.push_back("block K" + std::to_string(parts->first) + "," + std::to_string(parts->second) +
                    ": closed form");
    return Bound::exactly(genus_formula_Kmn(parts->first, parts->second));
  }
  const int lb = std::max(1, genus_lower_bound(b));
  for (int target = lb;; ++target) {
    if (opts.ceiling && target >= *opts.ceiling) {
      notes.push_back("block " + shape_name(b) + ": genus >= " + std::to_string(target) +
                      (target == lb ? " (Euler bound)" : " (search)"));
      return {target, std::nullopt};
    }
    const auto r = embeds_in_orientable(b, target, opts.limits);
    if (r.decision == Decision::yes) {
      notes.push_back("block " + shape_name(b) + ": genus " + std::to_string(target) + " by search from bound " +
                      std::to_string(lb));
      return Bound::exactly(target);
    }
    if (r.decision == Decision::unknown) {
      notes.push_back("block " + shape_name(b) + ": search timed out at S" + std::to_string(target));
      return {target, std::nullopt};
    }
  }
}

/// Lower bound on the Euler genus of a block; Euler genus adds over blocks
/// and never exceeds the crosscap.
inline int block_euler_lower_bound(const SimpleGraph& b) {
  if (b.edge_count() < 3 || is_planar(b).planar) return 0;
  if (is_complete(b))
    return std::min(2 * genus_formula_Kn(b.vertex_count()), crosscap_formula_Kn(b.vertex_count()));
  if (auto parts = complete_bipartite_parts(b))
    return std::min(2 * genus_formula_Kmn(parts->first, parts->second),
                    crosscap_formula_Kmn(parts->first, parts->second));
  return std::max(1, crosscap_lower_bound(b));
}

// Crosscap of a connected graph, 0 when planar.
inline Bound connected_crosscap(const SimpleGraph& component, const SurfaceOptions& opts,
                                std::vector<std::string>& notes) {
  const SimpleGraph g = two_core(component);
  if (g.edge_count() < 3 || is_planar(g).planar) return Bound::exactly(0);
  if (is_complete(g)) {
    notes.push_back("component K" + std::to_string(g.vertex_count()) + ": closed form");
    return Bound::exactly(crosscap_formula_Kn(g.vertex_count()));
  }
  if (auto parts = complete_bipartite_parts(g)) {
    notes.push_back("component K" + std::to_string(parts->first) + "," + std::to_string(parts->second) +
                    ": closed form");
    return Bound::exactly(crosscap_formula_Kmn(parts->first, parts->second));
  }
  int block_sum = 0;
  for (const auto& b : blocks(g).blocks) block_sum += block_euler_lower_bound(b.graph);
  const int lb = std::max({1, crosscap_lower_bound(g), block_sum});
  for (int target = lb;; ++target) {
    if (opts.ceiling && target >= *opts.ceiling) {
      notes.push_back("component " + shape_name(g) + ": crosscap >= " + std::to_string(target) +
                      (target != lb ? " (search)" : lb == block_sum ? " (Euler genus over blocks)" : " (Euler bound)"));
      return {target, std::nullopt};
    }
    const auto r = embeds_in_nonorientable(g, target, opts.limits);
    if (r.decision == Decision::yes) {
      notes.push_back("component " + shape_name(g) + ": crosscap " + std::to_string(target) +
                      " by search from bound " + std::to_string(lb));
      return Bound::exactly(target);
    }
    if (r.decision == Decision::unknown) {
      notes.push_back("component " + shape_name(g) + ": search timed out at N" + std::to_string(target));
      return {target, std::nullopt};
    }
  }
}

}  // namespace detail

/// Sum of block genera. With a ceiling, blocks are only resolved while the
/// running total stays below it.
inline GenusResult genus(const SimpleGraph& g, const SurfaceOptions& opts = {}) {
  GenusResult out;
  const BlockDecomposition dec = blocks(g);
  std::vector<const Block*> open;
  out.value = Bound::exactly(0);
  // Cheap pieces first so the ceiling can cut the search short.
  for (const auto& b : dec.blocks) {
    const auto& bg = b.graph;
    if (bg.edge_count() < 3) continue;
    if (is_complete(bg) || complete_bipartite_parts(bg) || is_planar(bg).planar) {
      SurfaceOptions no_ceiling = opts;
      no_ceiling.ceiling.reset();
      const Bound v = detail::block_genus(bg, no_ceiling, out.provenance);
      out.value = out.value + v;
    } else {
      open.push_back(&b);
    }
  }
  int pending_lb = 0;
  for (const Block* b : open) pending_lb += std::max(1, genus_lower_bound(b->graph));
  for (const Block* b : open) {
    if (opts.ceiling && out.value.lower + pending_lb >= *opts.ceiling) {
      // Remaining blocks only need their Euler bound.
      const int lb = std::max(1, genus_lower_bound(b->graph));
      out.provenance.push_back("block " + detail::shape_name(b->graph) + ": genus >= " + std::to_string(lb) +
                               " (Euler bound)");
      out.value = out.value + Bound{lb, std::nullopt};
      pending_lb -= lb;
      continue;
    }
    pending_lb -= std::max(1, genus_lower_bound(b->graph));
    SurfaceOptions local = opts;
    if (opts.ceiling) local.ceiling = *opts.ceiling - out.value.lower - pending_lb;
    out.value = out.value + detail::block_genus(b->graph, local, out.provenance);
  }
  return out;
}

/// Crosscap (0 for planar graphs). Connected pieces are searched directly;
/// pieces combine by Euler-genus additivity, plus one when no piece reaches
/// its Euler genus non-orientably.
inline CrosscapResult crosscap(const SimpleGraph& g, const SurfaceOptions& opts = {}) {
  CrosscapResult out;
  struct Piece {
    SimpleGraph graph;
    Bound crosscap;
  };
  std::vector<Piece> pieces;
  for (const auto& comp : connected_components(g)) {
    SimpleGraph cg = induced_subgraph(g, comp);
    if (cg.edge_count() < 3 || is_planar(cg).planar) continue;
    pieces.push_back({std::move(cg), {}});
  }
  if (pieces.empty()) {
    out.value = Bound::exactly(0);
    return out;
  }
  if (pieces.size() == 1) {
    // A lone non-planar component carries the whole crosscap.
    out.value = detail::connected_crosscap(pieces[0].graph, opts, out.provenance);
    return out;
  }
  const int count = static_cast<int>(pieces.size());
  if (opts.ceiling && count >= *opts.ceiling) {
    out.provenance.push_back(std::to_string(count) + " non-planar components: Euler genus >= " +
                             std::to_string(count));
    out.value = {count, std::nullopt};
    return out;
  }
  SurfaceOptions exact = opts;
  exact.ceiling.reset();
  Bound euler = Bound::exactly(0);
  bool any_nonorientable = false, all_known = true;
  for (auto& p : pieces) {
    p.crosscap = detail::connected_crosscap(p.graph, exact, out.provenance);
    const Bound gen = genus(p.graph, exact).value;
    if (!p.crosscap.exact() || !gen.exact()) {
      all_known = false;
      euler = euler + Bound{std::min(2 * gen.lower, p.crosscap.lower), std::nullopt};
      continue;
    }
    const int eg = std::min(2 * gen.lower, p.crosscap.lower);
    if (p.crosscap.lower == eg) any_nonorientable = true;
    euler = euler + Bound::exactly(eg);
  }
  if (!all_known) {
    out.value = {euler.lower, std::nullopt};
    out.provenance.push_back("disconnected rule: crosscap >= sum of component Euler genera " +
                             std::to_string(euler.lower));
    return out;
  }
  const int value = euler.lower + (any_nonorientable ? 0 : 1);
  out.provenance.push_back("disconnected rule: Euler genus " + std::to_string(euler.lower) +
                           (any_nonorientable ? ", attained non-orientably" : ", orientable components only, +1"));
  out.value = Bound::exactly(value);
  return out;
}

inline SurfaceVerdict surface_verdict(const SimpleGraph& g, const SurfaceOptions& opts = {}) {
  SurfaceVerdict v;
  v.planar = is_planar(g).planar;
  if (v.planar) {
    v.genus = v.crosscap = v.euler_genus = Bound::exactly(0);
    v.provenance.push_back("planarity test: planar; crosscap not applicable");
    return v;
  }
  v.provenance.push_back("planarity test: non-planar");
  GenusResult gr = genus(g, opts);
  CrosscapResult cr = crosscap(g, opts);
  v.genus = gr.value;
  v.crosscap = cr.value;
  v.genus.lower = std::max(v.genus.lower, 1);
  v.crosscap.lower = std::max(v.crosscap.lower, 1);
  if (v.genus.upper) {
    const int cap = 2 * *v.genus.upper + 1;
    if (!v.crosscap.upper || *v.crosscap.upper > cap) v.crosscap.upper = cap;
  }
  v.euler_genus.lower = std::min(2 * v.genus.lower, v.crosscap.lower);
  if (v.genus.upper && v.crosscap.upper) v.euler_genus.upper = std::min(2 * *v.genus.upper, *v.crosscap.upper);
  else if (v.genus.upper) v.euler_genus.upper = 2 * *v.genus.upper;
  else if (v.crosscap.upper) v.euler_genus.upper = *v.crosscap.upper;
  v.provenance.insert(v.provenance.end(), gr.provenance.begin(), gr.provenance.end());
  v.provenance.insert(v.provenance.end(), cr.provenance.begin(), cr.provenance.end());
  return v;
}

}  // namespace genuslab::embed
