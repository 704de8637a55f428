#pragma once

// Groups named in the planar / toroidal / projective classification lists,
// plus negative controls. Entries are built from the generator data below and
// validated against the group axioms and their expected order when loaded.

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genuslab/group.hpp"

namespace genuslab {

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};

namespace detail {

struct CatalogSource {
  std::string name;
  std::size_t order;
  std::function<FiniteGroup()> build;
};

inline FiniteGroup perm(std::string name, std::size_t degree, std::vector<Permutation> gens) {
  return from_permutation_generators(degree, gens, std::move(name));
}

// Right-regular or natural permutation representations.
inline const std::vector<Permutation> kQ8 = {{1, 5, 0, 7, 6, 2, 3, 4}, {3, 6, 7, 5, 0, 4, 2, 1}};
inline const std::vector<Permutation> kQ16 = {{1, 5, 0, 9, 10, 12, 3, 4, 2, 14, 13, 15, 11, 6, 7, 8},
                                              {3, 6, 9, 11, 0, 13, 15, 1, 14, 12, 2, 4, 10, 8, 5, 7}};
// <a, b | a^4 = b^2 = (ab)^4 = [a^2, b] = 1>
inline const std::vector<Permutation> kOrder16a = {{1, 4, 0, 7, 2, 10, 11, 9, 3, 8, 6, 5, 14, 15, 13, 12},
                                                   {3, 5, 6, 0, 9, 1, 2, 12, 13, 4, 14, 15, 7, 8, 10, 11}};
// <a, b, c | a^2 = b^2 = c^4 = [a, c] = [b, c] = 1, [a, b] = c^2>
inline const std::vector<Permutation> kOrder16b = {{1, 0, 8, 6, 7, 12, 3, 4, 2, 14, 13, 15, 5, 10, 9, 11},
                                                   {2, 5, 0, 9, 10, 1, 13, 14, 15, 3, 4, 12, 11, 6, 7, 8},
                                                   {3, 6, 9, 11, 0, 13, 15, 1, 14, 12, 2, 4, 10, 8, 5, 7}};
// SL(2,3) on the eight non-zero vectors of F_3^2.
inline const std::vector<Permutation> kSL23 = {{3, 7, 2, 6, 1, 5, 0, 4}, {5, 2, 0, 6, 3, 1, 7, 4}};
// Unitriangular 3x3 matrices over F_3 acting on affine points (x, y).
inline const std::vector<Permutation> kHeisenberg27 = {{0, 4, 8, 3, 7, 2, 6, 1, 5}, {1, 2, 0, 4, 5, 3, 7, 8, 6}};

inline std::vector<CatalogSource> catalog_sources() {
  std::vector<CatalogSource> s = {
      {"S3", 6, [] { return perm("S3", 3, {{1, 2, 0}, {1, 0, 2}}); }},
      {"D8", 8, [] { return dihedral_group(4, "D8"); }},
      {"Q8", 8, [] { return perm("Q8", 8, kQ8); }},
      {"A4", 12, [] { return perm("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }},
      {"D10", 10, [] { return dihedral_group(5, "D10"); }},
      {"D12", 12, [] { return dihedral_group(6, "D12"); }},
      {"D8xZ2", 16, [] { return direct_product(dihedral_group(4, "D8"), cyclic_group(2), "D8xZ2"); }},
      {"Q8xZ2", 16, [] { return direct_product(perm("Q8", 8, kQ8), cyclic_group(2), "Q8xZ2"); }},
      {"S4", 24, [] { return perm("S4", 4, {{1, 2, 3, 0}, {1, 0, 2, 3}}); }},
      {"SL(2,3)", 24, [] { return perm("SL(2,3)", 8, kSL23); }},
      {"A5", 60, [] { return perm("A5", 5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}); }},
      {"Z3:Z4", 12, [] { return semidirect_product_cyclic(3, 4, 2, "Z3:Z4"); }},
      {"Z4:Z4", 16, [] { return semidirect_product_cyclic(4, 4, 3, "Z4:Z4"); }},
      {"Z8:Z2", 16, [] { return semidirect_product_cyclic(8, 2, 5, "Z8:Z2"); }},
      {"(Z4xZ2):Z2-a", 16, [] { return perm("(Z4xZ2):Z2-a", 16, kOrder16a); }},
      {"(Z4xZ2):Z2-b", 16, [] { return perm("(Z4xZ2):Z2-b", 16, kOrder16b); }},
      {"Z5:Z4", 20, [] { return semidirect_product_cyclic(5, 4, 3, "Z5:Z4"); }},
      {"D14", 14, [] { return dihedral_group(7, "D14"); }},
      {"D16", 16, [] { return dihedral_group(8, "D16"); }},
      {"Q16", 16, [] { return perm("Q16", 16, kQ16); }},
      {"QD16", 16, [] { return semidirect_product_cyclic(8, 2, 3, "QD16"); }},
      {"A4xZ2", 24,
       [] { return direct_product(perm("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}), cyclic_group(2), "A4xZ2"); }},
      {"Z7:Z3", 21, [] { return semidirect_product_cyclic(7, 3, 2, "Z7:Z3"); }},
      {"Z3xD8", 24, [] { return direct_product(cyclic_group(3), dihedral_group(4, "D8"), "Z3xD8"); }},
      {"Z3xQ8", 24, [] { return direct_product(cyclic_group(3), perm("Q8", 8, kQ8), "Z3xQ8"); }},
      {"D18", 18, [] { return dihedral_group(9, "D18"); }},
      {"D20", 20, [] { return dihedral_group(10, "D20"); }},
      {"D22", 22, [] { return dihedral_group(11, "D22"); }},
      {"D24", 24, [] { return dihedral_group(12, "D24"); }},
      {"He27", 27, [] { return perm("He27", 9, kHeisenberg27); }},
      {"Z9:Z3", 27, [] { return semidirect_product_cyclic(9, 3, 4, "Z9:Z3"); }},
      {"Z2", 2, [] { return cyclic_group(2); }},
  };
  return s;
}

inline std::vector<CatalogEntry> load_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& src : catalog_sources()) {
    try {
      FiniteGroup g = src.build();
      g.validate();
      if (g.order() != src.order) {
        throw GroupError(GroupErrorKind::catalog_corrupt, src.name + " has order " + std::to_string(g.order()) +
                                                              ", expected " + std::to_string(src.order));
      }
      out.push_back({src.name, std::move(g)});
    } catch (const GroupError& e) {
      if (e.kind() == GroupErrorKind::catalog_corrupt) throw;
      throw GroupError(GroupErrorKind::catalog_corrupt, src.name + ": " + e.what());
    }
  }
  return out;
}

inline const std::vector<std::pair<std::string, std::string>> kAliases = {{"Z7xZ3", "Z7:Z3"}};

}  // namespace detail

/// All catalog groups, loaded and validated once.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::load_catalog();
  return entries;
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog()) names.push_back(e.name);
  return names;
}

class UnknownGroupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline const FiniteGroup& catalog_group(std::string_view name) {
  std::string key(name);
  for (const auto& [alias, target] : detail::kAliases)
    if (key == alias) key = target;
  for (const auto& e : catalog())
    if (e.name == key) return e.group;
  std::string msg = "unknown catalog group '" + std::string(name) + "'; available:";
  for (const auto& e : catalog()) msg += " " + e.name;
  throw UnknownGroupError(msg);
}

}  // namespace genuslab
