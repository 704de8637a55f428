#pragma once

// Planarity test with an optional Kuratowski subgraph, backed by the
// Boyer-Myrvold implementation in Boost.Graph.

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "genuslab/graph.hpp"

namespace genuslab::embed {

enum class KuratowskiKind { k5, k33 };

struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::k5;
  std::vector<Edge> edges;             // a subdivision of K5 or K3,3, ascending
  std::vector<Vertex> branch_vertices;  // degree >= 3 within the subdivision
};

struct PlanarityResult {
  bool planar = true;
  std::optional<KuratowskiWitness> witness;
};

inline PlanarityResult is_planar(const SimpleGraph& g, bool want_witness = false) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  BoostGraph bg(static_cast<std::size_t>(g.vertex_count()));
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  int idx = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(boost::edge_index, bg, *it, idx++);

  PlanarityResult result;
  if (!want_witness) {
    result.planar = boost::boyer_myrvold_planarity_test(bg);
    return result;
  }
  std::vector<boost::graph_traits<BoostGraph>::edge_descriptor> kuratowski;
  result.planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                      boost::boyer_myrvold_params::kuratowski_subgraph =
                                                          std::back_inserter(kuratowski));
  if (result.planar) return result;

  KuratowskiWitness w;
  for (const auto& e : kuratowski) {
    const auto s = static_cast<Vertex>(boost::source(e, bg));
    const auto t = static_cast<Vertex>(boost::target(e, bg));
    w.edges.emplace_back(std::min(s, t), std::max(s, t));
  }
  std::sort(w.edges.begin(), w.edges.end());
  w.edges.erase(std::unique(w.edges.begin(), w.edges.end()), w.edges.end());
  // The extracted subgraph can carry spare edges; drop each one whose
  // removal keeps it non-planar.
  auto planar_without = [&](std::size_t skip) {
    BoostGraph h(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < w.edges.size(); ++i)
      if (i != skip) boost::add_edge(w.edges[i].first, w.edges[i].second, h);
    return boost::boyer_myrvold_planarity_test(h);
  };
  for (std::size_t i = w.edges.size(); i-- > 0;)
    if (!planar_without(i)) w.edges.erase(w.edges.begin() + static_cast<std::ptrdiff_t>(i));
  std::map<Vertex, int> deg;
  for (auto [s, t] : w.edges) {
    ++deg[s];
    ++deg[t];
  }
  for (auto [v, d] : deg)
    if (d >= 3) w.branch_vertices.push_back(v);
  w.kind = w.branch_vertices.size() == 5 ? KuratowskiKind::k5 : KuratowskiKind::k33;
  result.witness = std::move(w);
  return result;
}

}  // namespace genuslab::embed
