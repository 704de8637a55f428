#pragma once

// Closed-form genus and crosscap values for complete and complete bipartite
// graphs, and Euler-formula lower bounds.

#include <stdexcept>
#include <string>

#include "genuslab/graph.hpp"

namespace genuslab::embed {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

constexpr long long ceil_div(long long a, long long b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace detail

inline int genus_formula_Kn(int n) {
  if (n < 3) throw DomainError("genus formula for K_n needs n >= 3, got " + std::to_string(n));
  return static_cast<int>(detail::ceil_div(static_cast<long long>(n - 3) * (n - 4), 12));
}

inline int genus_formula_Kmn(int m, int n) {
  if (m < 2 || n < 2)
    throw DomainError("genus formula for K_{m,n} needs m, n >= 2, got " + std::to_string(m) + ", " +
                      std::to_string(n));
  return static_cast<int>(detail::ceil_div(static_cast<long long>(m - 2) * (n - 2), 4));
}

inline int crosscap_formula_Kn(int n) {
  if (n < 3) throw DomainError("crosscap formula for K_n needs n >= 3, got " + std::to_string(n));
  if (n == 7) return 3;
  return static_cast<int>(detail::ceil_div(static_cast<long long>(n - 3) * (n - 4), 6));
}

inline int crosscap_formula_Kmn(int m, int n) {
  if (m < 2 || n < 2)
    throw DomainError("crosscap formula for K_{m,n} needs m, n >= 2, got " + std::to_string(m) + ", " +
                      std::to_string(n));
  return static_cast<int>(detail::ceil_div(static_cast<long long>(m - 2) * (n - 2), 2));
}

/// Sum over components with at least four vertices of ceil((e - 3v)/6 + 1).
inline int genus_lower_bound(const SimpleGraph& g) {
  int total = 0;
  for (const auto& comp : connected_components(g)) {
    const long long v = static_cast<long long>(comp.size());
    if (v < 4) continue;
    long long e = 0;
    for (Vertex x : comp) e += g.degree(x);
    e /= 2;
    const long long b = detail::ceil_div(e - 3 * v + 6, 6);
    if (b > 0) total += static_cast<int>(b);
  }
  return total;
}

/// Sum over components with at least three vertices of
/// ceil((e - 3v + 6)/3), from e <= 3(v - 2 + k) on N_k. Each term bounds the
/// component's Euler genus, and crosscap is at least their sum.
inline int crosscap_lower_bound(const SimpleGraph& g) {
  int total = 0;
  for (const auto& comp : connected_components(g)) {
    const long long v = static_cast<long long>(comp.size());
    if (v < 3) continue;
    long long e = 0;
    for (Vertex x : comp) e += g.degree(x);
    e /= 2;
    const long long b = detail::ceil_div(e - 3 * v + 6, 3);
    if (b > 0) total += static_cast<int>(b);
  }
  return total;
}

}  // namespace genuslab::embed
