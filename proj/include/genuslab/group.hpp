#pragma once

// Finite groups stored as full Cayley tables over indexed elements.
// Element 0 is always the identity.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace genuslab {

using Element = std::uint32_t;
constexpr Element kIdentity = 0;

enum class GroupErrorKind {
  not_closed,
  no_identity,
  no_inverse,
  not_associative,
  bad_shape,
  not_a_permutation,
  order_cap_exceeded,
  invalid_action,
  catalog_corrupt,
};

inline const char* to_string(GroupErrorKind kind) {
  switch (kind) {
    case GroupErrorKind::not_closed: return "NotClosed";
    case GroupErrorKind::no_identity: return "NoIdentity";
    case GroupErrorKind::no_inverse: return "NoInverse";
    case GroupErrorKind::not_associative: return "NotAssociative";
    case GroupErrorKind::bad_shape: return "BadShape";
    case GroupErrorKind::not_a_permutation: return "NotAPermutation";
    case GroupErrorKind::order_cap_exceeded: return "OrderCapExceeded";
    case GroupErrorKind::invalid_action: return "InvalidAction";
    case GroupErrorKind::catalog_corrupt: return "CatalogCorrupt";
  }
  return "Unknown";
}

class GroupError : public std::runtime_error {
 public:
  GroupError(GroupErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  GroupErrorKind kind() const noexcept { return kind_; }

 private:
  GroupErrorKind kind_;
};

/// Sorted, duplicate-free list of element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Element> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  }

  const std::vector<Element>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(Element x) const { return std::binary_search(indices_.begin(), indices_.end(), x); }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }

  bool operator==(const ElementSet&) const = default;

 private:
  std::vector<Element> indices_;
};

struct GroupStats {
  std::size_t center_size = 0;
  std::size_t class_count = 0;
  std::vector<std::size_t> spectrum;  // ascending
  std::size_t exponent = 1;
  bool is_abelian = false;
};

/// Immutable group given by its multiplication table. table(i, j) is the
/// index of x_i * x_j.
class FiniteGroup {
 public:
  /// Validates all three group laws; throws GroupError naming the first
  /// violating entry or triple.
  static FiniteGroup from_table(std::vector<std::vector<Element>> rows, std::string name) {
    const std::size_t n = rows.size();
    if (n == 0) throw GroupError(GroupErrorKind::bad_shape, "empty table");
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw GroupError(GroupErrorKind::bad_shape,
                         "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(n));
      }
      flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    FiniteGroup g(n, std::move(flat), std::move(name));
    g.validate();
    return g;
  }

  /// Builds without the O(n^3) associativity scan; for tables that are
  /// associative by construction (composition of permutations, products).
  static FiniteGroup trusted(std::size_t n, std::vector<Element> flat, std::string name) {
    FiniteGroup g(n, std::move(flat), std::move(name));
    g.validate(/*check_associativity=*/false);
    return g;
  }

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
  std::span<const Element> row(Element a) const { return {table_.data() + a * order_, order_}; }

  std::vector<std::vector<Element>> rows() const {
    std::vector<std::vector<Element>> out(order_);
    for (std::size_t i = 0; i < order_; ++i) out[i].assign(row(Element(i)).begin(), row(Element(i)).end());
    return out;
  }

  FiniteGroup renamed(std::string name) const {
    FiniteGroup g = *this;
    g.name_ = std::move(name);
    return g;
  }

  /// Re-runs every axiom check, including associativity.
  void validate(bool check_associativity = true) {
    const std::size_t n = order_;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (table_[i * n + j] >= n) {
          throw GroupError(GroupErrorKind::not_closed, "table[" + std::to_string(i) + "][" +
                                                           std::to_string(j) + "] = " +
                                                           std::to_string(table_[i * n + j]) + " out of range");
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[j] != j || table_[j * n] != j) {
        throw GroupError(GroupErrorKind::no_identity,
                         "element 0 is not a two-sided identity (fails at element " + std::to_string(j) + ")");
      }
    }
    inverse_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t hits = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (table_[i * n + j] == kIdentity) {
          ++hits;
          inverse_[i] = Element(j);
        }
      }
      if (hits != 1 || table_[inverse_[i] * n + i] != kIdentity) {
        throw GroupError(GroupErrorKind::no_inverse,
                         "element " + std::to_string(i) + " has " + std::to_string(hits) + " right inverses");
      }
    }
    if (!check_associativity) return;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t ij = table_[i * n + j];
        for (std::size_t k = 0; k < n; ++k) {
          if (table_[ij * n + k] != table_[i * n + table_[j * n + k]]) {
            throw GroupError(GroupErrorKind::not_associative,
                             "(" + std::to_string(i) + "*" + std::to_string(j) + ")*" + std::to_string(k) +
                                 " != " + std::to_string(i) + "*(" + std::to_string(j) + "*" +
                                 std::to_string(k) + ")");
          }
        }
      }
    }
  }

 private:
  FiniteGroup(std::size_t n, std::vector<Element> flat, std::string name)
      : order_(n), table_(std::move(flat)), name_(std::move(name)) {}

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::string name_;
};

inline FiniteGroup from_cayley_table(std::vector<std::vector<Element>> table, std::string name) {
  return FiniteGroup::from_table(std::move(table), std::move(name));
}

constexpr std::size_t kDefaultOrderCap = 10000;

using Permutation = std::vector<std::uint32_t>;

/// Breadth-first closure of the generators. Products compose left to right:
/// point p under x*y is y[x[p]].
inline FiniteGroup from_permutation_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                               std::string name, std::size_t order_cap = kDefaultOrderCap) {
  if (degree == 0) throw GroupError(GroupErrorKind::not_a_permutation, "degree must be positive");
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& perm = generators[g];
    std::vector<bool> seen(degree, false);
    bool ok = perm.size() == degree;
    for (std::size_t p = 0; ok && p < perm.size(); ++p) {
      if (perm[p] >= degree || seen[perm[p]]) ok = false;
      else seen[perm[p]] = true;
    }
    if (!ok) {
      throw GroupError(GroupErrorKind::not_a_permutation,
                       "generator " + std::to_string(g) + " is not a bijection on " + std::to_string(degree) +
                           " points");
    }
  }

  auto compose = [degree](const Permutation& x, const Permutation& y) {
    Permutation out(degree);
    for (std::size_t p = 0; p < degree; ++p) out[p] = y[x[p]];
    return out;
  };

  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0u);
  std::vector<Permutation> elements{identity};
  std::map<Permutation, Element> index{{identity, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = compose(elements[head], gen);
      if (index.contains(next)) continue;
      if (elements.size() >= order_cap) {
        throw GroupError(GroupErrorKind::order_cap_exceeded,
                         "closure exceeds the order cap of " + std::to_string(order_cap));
      }
      index.emplace(next, Element(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = index.at(compose(elements[i], elements[j]));
  return FiniteGroup::trusted(n, std::move(flat), std::move(name));
}

/// Pairs (g, h) ordered lexicographically; index is g * |H| + h.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::string name = {}) {
  const std::size_t m = g.order(), k = h.order(), n = m * k;
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Element left = g.mul(Element(a / k), Element(b / k));
      const Element right = h.mul(Element(a % k), Element(b % k));
      flat[a * n + b] = Element(left * k + right);
    }
  }
  if (name.empty()) name = g.name() + "x" + h.name();
  return FiniteGroup::trusted(n, std::move(flat), std::move(name));
}

/// <a, b | a^n = b^m = 1, b^-1 a b = a^t>, elements a^i b^j at index i * m + j.
inline FiniteGroup semidirect_product_cyclic(std::size_t n, std::size_t m, std::size_t t, std::string name) {
  if (n == 0 || m == 0) throw GroupError(GroupErrorKind::invalid_action, "factor orders must be positive");
  t %= n;
  if (std::gcd(t, n) != 1 && n > 1) {
    throw GroupError(GroupErrorKind::invalid_action,
                     "gcd(" + std::to_string(t) + ", " + std::to_string(n) + ") != 1");
  }
  std::size_t power = 1 % n;
  for (std::size_t i = 0; i < m; ++i) power = power * t % n;
  if (power != 1 % n) {
    throw GroupError(GroupErrorKind::invalid_action,
                     std::to_string(t) + "^" + std::to_string(m) + " != 1 mod " + std::to_string(n));
  }
  // b^j a^k = a^(k u^j) b^j where u = t^-1 mod n.
  std::size_t u = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (c * t % n == 1 % n) {
      u = c;
      break;
    }
  }
  std::vector<std::size_t> u_pow(m);
  u_pow[0] = 1 % n;
  for (std::size_t j = 1; j < m; ++j) u_pow[j] = u_pow[j - 1] * u % n;

  const std::size_t order = n * m;
  std::vector<Element> flat(order * order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          const std::size_t a_exp = (i + k * u_pow[j]) % n;
          const std::size_t b_exp = (j + l) % m;
          flat[(i * m + j) * order + (k * m + l)] = Element(a_exp * m + b_exp);
        }
  return FiniteGroup::trusted(order, std::move(flat), std::move(name));
}

inline ElementSet centralizer(const FiniteGroup& g, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < g.order(); ++y)
    if (g.commute(x, y)) out.push_back(y);
  return ElementSet(std::move(out));
}

inline ElementSet center(const FiniteGroup& g) {
  std::vector<Element> out;
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.commute(z, y);
    if (central) out.push_back(z);
  }
  return ElementSet(std::move(out));
}

inline std::size_t element_order(const FiniteGroup& g, Element x) {
  std::size_t k = 1;
  for (Element p = x; p != kIdentity; p = g.mul(p, x)) ++k;
  return k;
}

/// Conjugacy classes as a partition of the element indices; classes are
/// listed by smallest member.
inline std::vector<ElementSet> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<ElementSet> classes;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Element> orbit;
    for (Element y = 0; y < g.order(); ++y) {
      const Element c = g.mul(g.mul(y, x), g.inverse(y));
      if (!seen[c]) {
        seen[c] = true;
        orbit.push_back(c);
      }
    }
    classes.emplace_back(std::move(orbit));
  }
  return classes;
}

inline GroupStats stats(const FiniteGroup& g) {
  GroupStats s;
  s.center_size = center(g).size();
  s.class_count = conjugacy_classes(g).size();
  std::set<std::size_t> orders;
  for (Element x = 0; x < g.order(); ++x) orders.insert(element_order(g, x));
  s.spectrum.assign(orders.begin(), orders.end());
  s.exponent = 1;
  for (auto o : s.spectrum) s.exponent = std::lcm(s.exponent, o);
  s.is_abelian = s.center_size == g.order();
  return s;
}

/// Coset of each element modulo a normal subgroup, numbered in order of
/// first (smallest) representative; the identity coset is 0.
inline std::vector<Element> coset_labels(const FiniteGroup& g, const ElementSet& normal) {
  constexpr Element unset = ~Element{0};
  std::vector<Element> label(g.order(), unset);
  Element next = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (label[x] != unset) continue;
    for (Element z : normal) label[g.mul(x, z)] = next;
    ++next;
  }
  return label;
}

inline FiniteGroup quotient_by_center(const FiniteGroup& g, std::string name = {}) {
  const ElementSet z = center(g);
  const std::vector<Element> label = coset_labels(g, z);
  const std::size_t n = g.order() / z.size();
  std::vector<Element> rep(n);
  for (Element x = g.order(); x-- > 0;) rep[label[x]] = x;
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = label[g.mul(rep[a], rep[b])];
  if (name.empty()) name = g.name() + "/Z";
  return FiniteGroup::trusted(n, std::move(flat), std::move(name));
}

inline FiniteGroup cyclic_group(std::size_t n, std::string name = {}) {
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = Element((a + b) % n);
  if (name.empty()) name = "Z" + std::to_string(n);
  return FiniteGroup::trusted(n, std::move(flat), std::move(name));
}

/// Dihedral group of order 2n acting on the n-gon.
inline FiniteGroup dihedral_group(std::size_t n, std::string name = {}) {
  Permutation rotation(n), reflection(n);
  for (std::size_t p = 0; p < n; ++p) {
    rotation[p] = std::uint32_t((p + 1) % n);
    reflection[p] = std::uint32_t((n - p) % n);
  }
  if (name.empty()) name = "D" + std::to_string(2 * n);
  return from_permutation_generators(n, {rotation, reflection}, std::move(name));
}

}  // namespace genuslab
