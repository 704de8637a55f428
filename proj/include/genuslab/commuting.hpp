#pragma once

// Commuting and non-commuting graphs of a finite group, and commuting-subset
// searches run on them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "genuslab/clique.hpp"
#include "genuslab/graph.hpp"
#include "genuslab/group.hpp"

namespace genuslab {

/// Graph on a subset of group elements; vertex i is element elements[i].
struct ElementGraph {
  SimpleGraph graph;
  std::vector<Element> elements;
  bool not_applicable = false;  // abelian input: empty vertex set

  std::optional<Vertex> vertex_of(Element x) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == x) return static_cast<Vertex>(i);
    return std::nullopt;
  }
};

namespace detail {

inline ElementGraph commuting_on(const FiniteGroup& g, std::vector<Element> elements) {
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    labels.push_back(std::to_string(elements[i]));
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (g.commute(elements[i], elements[j])) edges.emplace_back(int(i), int(j));
  }
  const int n = static_cast<int>(elements.size());
  return {SimpleGraph(n, std::move(edges), std::move(labels)), std::move(elements), false};
}

}  // namespace detail

/// Vertices are the non-central elements in ascending index order; edge
/// {x, y} iff xy = yx.
inline ElementGraph commuting_graph(const FiniteGroup& g) {
  const ElementSet z = center(g);
  std::vector<Element> verts;
  for (Element x = 0; x < g.order(); ++x)
    if (!z.contains(x)) verts.push_back(x);
  ElementGraph out = detail::commuting_on(g, std::move(verts));
  out.not_applicable = out.elements.empty();
  return out;
}

inline ElementGraph non_commuting_graph(const FiniteGroup& g) {
  ElementGraph out = commuting_graph(g);
  out.graph = complement(out.graph);
  return out;
}

struct EdgeCountIdentity {
  long long lhs = 0;  // 2 |E(non-commuting graph)|
  long long rhs = 0;  // |G|^2 - |G| k(G)
  bool equal = false;
};

inline EdgeCountIdentity edge_count_identity_check(const FiniteGroup& g) {
  const long long n = static_cast<long long>(g.order());
  const long long k = static_cast<long long>(conjugacy_classes(g).size());
  EdgeCountIdentity r;
  r.lhs = 2 * static_cast<long long>(non_commuting_graph(g).graph.edge_count());
  r.rhs = n * n - n * k;
  r.equal = r.lhs == r.rhs;
  return r;
}

enum class SearchDomain {
  non_central,   // G \ Z(G): the commuting-graph vertex set
  non_identity,  // G \ {1}
};

inline ElementGraph commuting_domain_graph(const FiniteGroup& g, SearchDomain domain) {
  if (domain == SearchDomain::non_central) return commuting_graph(g);
  std::vector<Element> verts;
  for (Element x = 1; x < g.order(); ++x) verts.push_back(x);
  return detail::commuting_on(g, std::move(verts));
}

/// A pairwise-commuting subset of the given size drawn from the domain, or
/// nullopt when an exhaustive clique search proves there is none.
inline std::optional<ElementSet> find_commuting_subset(const FiniteGroup& g, std::size_t size,
                                                       SearchDomain domain = SearchDomain::non_central) {
  const ElementGraph eg = commuting_domain_graph(g, domain);
  if (size > eg.elements.size()) return std::nullopt;
  const auto clique = CliqueSearch(eg.graph).find(static_cast<int>(size));
  if (!clique) return std::nullopt;
  std::vector<Element> members;
  for (Vertex v : *clique) members.push_back(eg.elements[v]);
  return ElementSet(std::move(members));
}

/// `count` pairwise disjoint commuting subsets of G \ Z(G), each of `size`
/// elements.
inline std::optional<std::vector<ElementSet>> find_disjoint_commuting_subsets(const FiniteGroup& g, std::size_t size,
                                                                              std::size_t count) {
  const ElementGraph eg = commuting_graph(g);
  if (size * count > eg.elements.size()) return std::nullopt;
  const auto cliques = CliqueSearch(eg.graph).find_disjoint(static_cast<int>(size), static_cast<int>(count));
  if (!cliques) return std::nullopt;
  std::vector<ElementSet> out;
  for (const auto& c : *cliques) {
    std::vector<Element> members;
    for (Vertex v : c) members.push_back(eg.elements[v]);
    out.emplace_back(std::move(members));
  }
  return out;
}

}  // namespace genuslab
