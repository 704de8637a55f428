#pragma once

// Surface classification of commuting and non-commuting graphs, checked
// against the published group lists, together with the arithmetic and
// subgraph facts the classification proofs rest on.

#include <algorithm>
#include <cstddef>
#include <future>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "genuslab/catalog.hpp"
#include "genuslab/clique.hpp"
#include "genuslab/commuting.hpp"
#include "genuslab/embed/surface.hpp"
#include "genuslab/graph.hpp"
#include "genuslab/group.hpp"

namespace genuslab::classify {

using embed::Bound;
using embed::SearchLimits;
using embed::SurfaceVerdict;

enum class GraphKind { commuting, non_commuting };
enum class SurfaceLabel { planar, toroidal_and_projective, neither };

inline const char* to_string(GraphKind k) { return k == GraphKind::commuting ? "commuting" : "non-commuting"; }

inline const char* to_string(SurfaceLabel l) {
  switch (l) {
    case SurfaceLabel::planar: return "planar";
    case SurfaceLabel::toroidal_and_projective: return "toroidal-and-projective";
    case SurfaceLabel::neither: return "neither";
  }
  return "neither";
}

// Groups whose commuting graph is planar.
inline const std::vector<std::string> kPlanarCommuting = {
    "S3",     "D8",    "Q8",    "A4",    "D10",          "D12",          "D8xZ2", "Q8xZ2", "S4",
    "SL(2,3)", "A5",   "Z3:Z4", "Z4:Z4", "Z8:Z2", "(Z4xZ2):Z2-a", "(Z4xZ2):Z2-b", "Z5:Z4"};
// Groups whose commuting graph is toroidal, equivalently projective.
inline const std::vector<std::string> kToroidalCommuting = {"D14", "D16", "Q16", "QD16", "A4xZ2", "Z7:Z3"};
// Groups whose non-commuting graph is planar; none is toroidal or projective.
inline const std::vector<std::string> kPlanarNonCommuting = {"S3", "D8", "Q8"};

inline bool listed(const std::vector<std::string>& list, const std::string& name) {
  return std::find(list.begin(), list.end(), name) != list.end();
}

struct ClassificationReport {
  std::string group_name;
  std::size_t order = 0;
  std::size_t center_size = 0;
  GraphKind kind = GraphKind::commuting;
  int vertex_count = 0;
  std::size_t edge_count = 0;
  SurfaceVerdict verdict;
  SurfaceLabel computed = SurfaceLabel::neither;
  SurfaceLabel expected = SurfaceLabel::neither;
  bool listed = false;
  bool confirmed = false;  // every decision behind the label was resolved
  bool match = false;
  std::vector<std::string> notes;
};

struct ClassifyOptions {
  SearchLimits limits;
  int jobs = 1;
};

namespace detail {

inline ClassificationReport classify_graph(const FiniteGroup& g, const std::string& name, GraphKind kind,
                                           const ClassifyOptions& opts) {
  ClassificationReport r;
  r.group_name = name;
  r.order = g.order();
  r.kind = kind;
  ElementGraph eg = kind == GraphKind::commuting ? commuting_graph(g) : non_commuting_graph(g);
  r.center_size = g.order() - eg.elements.size();
  r.vertex_count = eg.graph.vertex_count();
  r.edge_count = eg.graph.edge_count();

  // Labels only need to know whether genus and crosscap are 0, 1 or more.
  embed::SurfaceOptions sopts{opts.limits, 2};
  r.verdict = embed::surface_verdict(eg.graph, sopts);
  const auto& v = r.verdict;
  const bool genus_known = v.genus.exact() || v.genus.lower >= 2;
  const bool crosscap_known = v.crosscap.exact() || v.crosscap.lower >= 2;
  r.confirmed = v.planar || (genus_known && crosscap_known);
  if (v.planar) r.computed = SurfaceLabel::planar;
  else if (v.toroidal() && v.projective()) r.computed = SurfaceLabel::toroidal_and_projective;
  else r.computed = SurfaceLabel::neither;
  if (!r.confirmed) r.notes.push_back("unconfirmed: a surface decision timed out");
  return r;
}

}  // namespace detail

inline ClassificationReport classify_commuting(const FiniteGroup& g, const std::string& name,
                                               const ClassifyOptions& opts = {}) {
  ClassificationReport r = detail::classify_graph(g, name, GraphKind::commuting, opts);
  if (listed(kPlanarCommuting, name)) {
    r.expected = SurfaceLabel::planar;
    r.listed = true;
  } else if (listed(kToroidalCommuting, name)) {
    r.expected = SurfaceLabel::toroidal_and_projective;
    r.listed = true;
  } else {
    r.expected = SurfaceLabel::neither;
    r.notes.push_back("unlisted: the classification is an if-and-only-if, so neither is expected");
  }
  r.match = r.confirmed && r.computed == r.expected;
  return r;
}

inline ClassificationReport classify_non_commuting(const FiniteGroup& g, const std::string& name,
                                                   const ClassifyOptions& opts = {}) {
  ClassificationReport r = detail::classify_graph(g, name, GraphKind::non_commuting, opts);
  r.listed = listed(kPlanarNonCommuting, name);
  r.expected = r.listed ? SurfaceLabel::planar : SurfaceLabel::neither;
  // Neither toroidal nor projective may occur, whatever the label says.
  const bool forbidden = !r.verdict.planar && (r.verdict.toroidal() || r.verdict.projective());
  if (forbidden) r.notes.push_back("non-commuting graph is toroidal or projective");
  r.match = r.confirmed && r.computed == r.expected && !forbidden;
  return r;
}

// ---------------------------------------------------------------------------
// Arithmetic skeleton of the "no toroidal non-commuting graph" argument.

struct BoundExample {
  long long order = 0;
  long long class_count = 0;
  bool survives = false;
};

struct BoundDerivation {
  long long max_order_swept = 0;
  bool euler_bound_matches_inequality = true;  // bound <= 1  <=>  n(n-k-6) + 6z <= 0
  bool inequality_implies_k_bound = true;      // ... => k >= n - 5
  long long largest_surviving_order = 0;       // with k <= 5n/8 as well
  std::vector<BoundExample> examples;
  std::vector<std::string> survivors;  // catalog groups passing the filter
  bool survivors_planar = true;
  bool ok = false;
  std::vector<std::string> notes;
};

/// Whether order n and class count k pass k >= n - 5 and k/n <= 5/8.
inline bool survives_bound_filter(long long n, long long k) { return k >= n - 5 && 8 * k <= 5 * n; }

inline BoundDerivation verify_theorem_bound_3_2(const ClassifyOptions& opts = {}, long long max_order = 400) {
  BoundDerivation d;
  d.max_order_swept = max_order;
  for (long long n = 2; n <= max_order; ++n) {
    for (long long z = 1; z < n; ++z) {
      if (n % z) continue;
      for (long long k = z; k <= n; ++k) {
        // Non-commuting graph: v = n - z vertices, 2e = n^2 - nk edges.
        const long long v = n - z;
        const long long twice_e = n * n - n * k;
        if (twice_e % 2) continue;
        const long long e = twice_e / 2;
        const bool inequality = n * (n - k - 6) + 6 * z <= 0;
        if (v >= 4) {
          const long long bound = embed::detail::ceil_div(e - 3 * v + 6, 6);
          if ((bound <= 1) != inequality) d.euler_bound_matches_inequality = false;
        }
        if (inequality && k < n - 5) d.inequality_implies_k_bound = false;
      }
    }
    for (long long k = 1; k <= n; ++k)
      if (survives_bound_filter(n, k)) d.largest_surviving_order = std::max(d.largest_surviving_order, n);
  }
  for (auto [n, k] : std::vector<std::pair<long long, long long>>{{14, 9}, {6, 3}, {13, 8}}) {
    d.examples.push_back({n, k, survives_bound_filter(n, k)});
  }
  d.notes.push_back("no non-abelian group of order 13 exists, so the boundary order 13 is arithmetic only");

  for (const auto& entry : catalog()) {
    const FiniteGroup& g = entry.group;
    const GroupStats s = stats(g);
    if (s.is_abelian) continue;
    const auto n = static_cast<long long>(g.order());
    if (!survives_bound_filter(n, static_cast<long long>(s.class_count))) continue;
    d.survivors.push_back(entry.name);
    const auto r = classify_non_commuting(g, entry.name, opts);
    if (!r.verdict.planar) d.survivors_planar = false;
  }
  d.ok = d.euler_bound_matches_inequality && d.inequality_implies_k_bound && d.largest_surviving_order == 13 &&
         d.survivors_planar;
  return d;
}

// ---------------------------------------------------------------------------
// Commuting subsets in p-groups.

struct LemmaRecord {
  std::string group_name;
  std::size_t order = 0;
  int part = 0;  // 1: odd p-group; 2: non-abelian 2-group of order >= 32; 0: not applicable
  bool found = false;
  std::vector<ElementSet> witness;
  std::string note;
};

/// Prime p and exponent n with order = p^n, or nullopt.
inline std::optional<std::pair<std::size_t, int>> prime_power(std::size_t order) {
  if (order < 2) return std::nullopt;
  std::size_t p = 2;
  while (order % p) ++p;
  int n = 0;
  while (order % p == 0) {
    order /= p;
    ++n;
  }
  if (order != 1) return std::nullopt;
  return std::pair{p, n};
}

inline LemmaRecord verify_lemma_2_1(const FiniteGroup& g, const std::string& name) {
  LemmaRecord r;
  r.group_name = name;
  r.order = g.order();
  const auto pp = prime_power(g.order());
  const bool abelian = center(g).size() == g.order();
  if (pp && pp->first > 2 && pp->second > 1) {
    r.part = 1;
    const std::size_t size = pp->first * pp->first - 1;
    // Commuting subsets here may include central elements other than 1.
    if (auto s = find_commuting_subset(g, size, SearchDomain::non_identity)) {
      r.found = true;
      r.witness.push_back(*s);
    }
    r.note = "commuting subset of size " + std::to_string(size) + " in G \\ {1}";
  } else if (pp && pp->first == 2 && pp->second >= 5 && !abelian) {
    r.part = 2;
    if (auto s = find_disjoint_commuting_subsets(g, 6, 2)) {
      r.found = true;
      r.witness = *s;
    }
    r.note = "two disjoint commuting 6-subsets in G \\ Z(G)";
  } else {
    r.note = "not applicable";
  }
  return r;
}

inline constexpr std::size_t kNonAbelianOrder32 = 44;  // of the 51 groups of order 32

// ---------------------------------------------------------------------------
// Individual checks gathered into the summary.

struct CheckRecord {
  std::string name;
  bool passed = false;
  bool confirmed = true;
  std::string detail;
};

/// Smallest genus found by running the orientable search from 0 upwards.
inline std::optional<int> searched_genus(const SimpleGraph& g, const SearchLimits& limits, int max_genus = 8) {
  for (int t = 0; t <= max_genus; ++t) {
    const auto r = embed::embeds_in_orientable(g, t, limits);
    if (r.decision == embed::Decision::yes) return t;
    if (r.decision == embed::Decision::unknown) return std::nullopt;
  }
  return std::nullopt;
}

/// Crosscap by search (0 when the orientable search embeds g in the sphere).
inline std::optional<int> searched_crosscap(const SimpleGraph& g, const SearchLimits& limits, int max_k = 8) {
  const auto planar = embed::embeds_in_orientable(g, 0, limits);
  if (planar.decision == embed::Decision::unknown) return std::nullopt;
  if (planar.decision == embed::Decision::yes) return 0;
  for (int k = 1; k <= max_k; ++k) {
    const auto r = embed::embeds_in_nonorientable(g, k, limits);
    if (r.decision == embed::Decision::yes) return k;
    if (r.decision == embed::Decision::unknown) return std::nullopt;
  }
  return std::nullopt;
}

inline std::vector<CheckRecord> formula_cross_checks(const SearchLimits& limits) {
  std::vector<CheckRecord> out;
  auto record = [&](const std::string& what, std::optional<int> searched, int formula) {
    CheckRecord c;
    c.name = what;
    c.confirmed = searched.has_value();
    c.passed = searched && *searched == formula;
    c.detail = "formula " + std::to_string(formula) + ", search " + (searched ? std::to_string(*searched) : "unknown");
    out.push_back(c);
  };
  for (int n = 3; n <= 7; ++n) {
    const SimpleGraph k = complete_graph(n);
    record("genus K" + std::to_string(n), searched_genus(k, limits), embed::genus_formula_Kn(n));
    record("crosscap K" + std::to_string(n), searched_crosscap(k, limits), embed::crosscap_formula_Kn(n));
  }
  for (int m = 2; m <= 4; ++m) {
    for (int n = m; n <= 5; ++n) {
      const SimpleGraph k = complete_bipartite(m, n);
      const std::string tag = "K" + std::to_string(m) + "," + std::to_string(n);
      record("genus " + tag, searched_genus(k, limits), embed::genus_formula_Kmn(m, n));
      record("crosscap " + tag, searched_crosscap(k, limits), embed::crosscap_formula_Kmn(m, n));
    }
  }
  return out;
}

/// Sizes of the components when every component is complete, else empty.
inline std::vector<int> clique_component_sizes(const SimpleGraph& g) {
  std::vector<int> sizes;
  for (const auto& comp : connected_components(g)) {
    if (!is_complete(induced_subgraph(g, comp))) return {};
    sizes.push_back(static_cast<int>(comp.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Observable conclusions of the case analysis on |Z(G)| for groups whose
/// commuting graph is planar, toroidal or projective.
inline CheckRecord proof_step_check(const FiniteGroup& g, const std::string& name) {
  CheckRecord c;
  c.name = "center-size case analysis: " + name;
  const GroupStats s = stats(g);
  const std::size_t z = s.center_size, n = g.order();
  std::vector<std::string> failures;
  if (z > 7) failures.push_back("|Z(G)| > 7");
  if (z >= 4) {
    const GroupStats q = stats(quotient_by_center(g));
    if (q.exponent > 2) failures.push_back("G/Z(G) not elementary abelian");
    if (n != 16) failures.push_back("|G| != 16 with |Z(G)| >= 4");
  }
  if (z == 3 && n != 18) failures.push_back("|G| != 18 with |Z(G)| = 3");
  if (z == 2) {
    const GroupStats q = stats(quotient_by_center(g));
    if (q.spectrum.back() > 4) failures.push_back("G/Z(G) has an element of order > 4");
    if (48 % n) failures.push_back("|G| does not divide 48");
  }
  if (z == 1) {
    if (s.spectrum.back() > 8) failures.push_back("element of order > 8");
    if ((16 * 3 * 5 * 7) % n) failures.push_back("|G| does not divide 2^4*3*5*7");
  }
  c.passed = failures.empty();
  c.detail = "|G| = " + std::to_string(n) + ", |Z(G)| = " + std::to_string(z);
  for (const auto& f : failures) c.detail += "; " + f;
  return c;
}

/// Complete bipartite subgraphs of the non-commuting graph used to rule out
/// projective embeddings: xZ(G) u yZ(G) induces K_{|Z|,|Z|}, and the
/// generators of <x> are joined to every element of <x>y.
inline CheckRecord non_commuting_subgraph_check(const FiniteGroup& g, const std::string& name) {
  CheckRecord c;
  c.name = "non-commuting complete bipartite subgraphs: " + name;
  const ElementGraph nc = non_commuting_graph(g);
  const ElementSet z = center(g);
  bool ok = true;
  std::size_t pairs = 0;
  for (Element x : nc.elements) {
    Element y = 0;
    bool have_y = false;
    for (Element cand : nc.elements)
      if (!g.commute(x, cand)) {
        y = cand;
        have_y = true;
        break;
      }
    if (!have_y) continue;
    ++pairs;
    std::vector<Element> xz, yz;
    for (Element c0 : z) {
      xz.push_back(g.mul(x, c0));
      yz.push_back(g.mul(y, c0));
    }
    auto vert = [&](Element e) { return *nc.vertex_of(e); };
    for (Element a : xz)
      for (Element b : yz) ok = ok && nc.graph.has_edge(vert(a), vert(b));
    for (std::size_t i = 0; i < xz.size(); ++i)
      for (std::size_t j = i + 1; j < xz.size(); ++j)
        ok = ok && !nc.graph.has_edge(vert(xz[i]), vert(xz[j])) && !nc.graph.has_edge(vert(yz[i]), vert(yz[j]));

    const std::size_t ord = element_order(g, x);
    std::vector<Element> gens, coset;
    Element p = kIdentity;
    for (std::size_t i = 0; i < ord; ++i) {
      if (std::gcd(i, ord) == 1) gens.push_back(p);
      coset.push_back(g.mul(p, y));
      p = g.mul(p, x);
    }
    for (Element a : gens)
      for (Element b : coset) ok = ok && nc.graph.has_edge(vert(a), vert(b));
  }
  c.passed = ok;
  c.detail = std::to_string(pairs) + " (x, y) pairs checked";
  return c;
}

// ---------------------------------------------------------------------------

struct EdgeIdentityRecord {
  std::string group_name;
  EdgeCountIdentity identity;
};

struct VerifyScope {
  bool commuting = true;      // planar and toroidal/projective commuting lists
  bool non_commuting = true;  // planar non-commuting list, no toroidal or projective ones
  bool bound_3_2 = true;
  bool subgraphs_3_3 = true;
  bool lemma_2_1 = true;
  bool formulas = true;

  static VerifyScope all() { return {}; }
  static VerifyScope none() { return {false, false, false, false, false, false}; }
};

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

struct VerificationSummary {
  std::vector<ClassificationReport> reports;
  std::size_t matched = 0, mismatched = 0, unconfirmed = 0;
  std::size_t planar_commuting = 0, toroidal_projective_commuting = 0, planar_non_commuting = 0;
  std::size_t toroidal_non_commuting = 0, projective_non_commuting = 0;
  std::vector<EdgeIdentityRecord> edge_identity;
  std::optional<BoundDerivation> bound_3_2;
  std::vector<LemmaRecord> lemma_2_1;
  std::size_t order32_ingested = 0;
  std::vector<CheckRecord> checks;

  bool ok() const {
    if (mismatched || unconfirmed) return false;
    for (const auto& c : checks)
      if (!c.passed) return false;
    for (const auto& e : edge_identity)
      if (!e.identity.equal) return false;
    for (const auto& l : lemma_2_1)
      if (l.part != 0 && !l.found) return false;
    if (bound_3_2 && !bound_3_2->ok) return false;
    return true;
  }
};

inline std::vector<NamedGroup> catalog_groups() {
  std::vector<NamedGroup> out;
  for (const auto& e : catalog()) out.push_back({e.name, e.group});
  return out;
}

/// Runs the selected suites over the catalog plus any extra (ingested)
/// groups. Reports are sorted by group order, then name, then graph kind.
inline VerificationSummary verify(const VerifyScope& scope, const std::vector<NamedGroup>& extra = {},
                                  const ClassifyOptions& opts = {}) {
  VerificationSummary sum;
  std::vector<NamedGroup> groups = catalog_groups();
  groups.insert(groups.end(), extra.begin(), extra.end());
  std::stable_sort(groups.begin(), groups.end(), [](const NamedGroup& a, const NamedGroup& b) {
    return a.group.order() != b.group.order() ? a.group.order() < b.group.order() : a.name < b.name;
  });

  struct Job {
    const NamedGroup* group;
    GraphKind kind;
  };
  std::vector<Job> jobs;
  for (const auto& ng : groups) {
    if (center(ng.group).size() == ng.group.order()) continue;  // abelian: not applicable
    if (scope.commuting) jobs.push_back({&ng, GraphKind::commuting});
    if (scope.non_commuting) jobs.push_back({&ng, GraphKind::non_commuting});
  }
  auto run_job = [&opts](const Job& j) {
    return j.kind == GraphKind::commuting ? classify_commuting(j.group->group, j.group->name, opts)
                                          : classify_non_commuting(j.group->group, j.group->name, opts);
  };
  sum.reports.resize(jobs.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(1, opts.jobs));
  for (std::size_t start = 0; start < jobs.size(); start += workers) {
    std::vector<std::future<ClassificationReport>> batch;
    for (std::size_t i = start; i < std::min(jobs.size(), start + workers); ++i)
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, run_job, jobs[i]));
    for (std::size_t i = 0; i < batch.size(); ++i) sum.reports[start + i] = batch[i].get();
  }

  std::set<std::string> genus_one, crosscap_one;
  for (const auto& r : sum.reports) {
    if (!r.confirmed) ++sum.unconfirmed;
    else if (r.match) ++sum.matched;
    else ++sum.mismatched;
    if (r.kind == GraphKind::commuting) {
      if (r.computed == SurfaceLabel::planar) ++sum.planar_commuting;
      if (r.computed == SurfaceLabel::toroidal_and_projective) ++sum.toroidal_projective_commuting;
      if (r.verdict.toroidal()) genus_one.insert(r.group_name);
      if (r.verdict.projective()) crosscap_one.insert(r.group_name);
    } else {
      if (r.computed == SurfaceLabel::planar) ++sum.planar_non_commuting;
      if (!r.verdict.planar && r.verdict.toroidal()) ++sum.toroidal_non_commuting;
      if (!r.verdict.planar && r.verdict.projective()) ++sum.projective_non_commuting;
    }
  }
  if (scope.commuting) {
    sum.checks.push_back({"genus-1 commuting graphs are exactly the crosscap-1 ones", genus_one == crosscap_one, true,
                          std::to_string(genus_one.size()) + " toroidal, " + std::to_string(crosscap_one.size()) +
                              " projective"});
    for (const char* name : {"Z3xD8", "Z3xQ8"}) {
      const SimpleGraph cg = commuting_graph(catalog_group(name)).graph;
      const auto sizes = clique_component_sizes(cg);
      const embed::SurfaceOptions exact{opts.limits, std::nullopt};
      const Bound gen = embed::genus(cg, exact).value, cc = embed::crosscap(cg, exact).value;
      sum.checks.push_back({std::string("commuting graph of ") + name + " is 3K6 with genus 3 and crosscap 3",
                            sizes == std::vector<int>{6, 6, 6} && gen == Bound::exactly(3) && cc == Bound::exactly(3),
                            true, "genus " + to_string(gen) + ", crosscap " + to_string(cc)});
    }
    {
      const SimpleGraph d18 = commuting_graph(catalog_group("D18")).graph;
      const bool has_k8 = CliqueSearch(d18).find(8).has_value();
      sum.checks.push_back({"commuting graph of D18 contains K8", has_k8, true, ""});
    }
    for (const auto& r : sum.reports) {
      if (r.kind != GraphKind::commuting || r.computed == SurfaceLabel::neither) continue;
      for (const auto& ng : groups)
        if (ng.name == r.group_name) sum.checks.push_back(proof_step_check(ng.group, ng.name));
    }
  }
  if (scope.non_commuting || scope.bound_3_2) {
    for (const auto& ng : groups) sum.edge_identity.push_back({ng.name, edge_count_identity_check(ng.group)});
  }
  if (scope.bound_3_2) sum.bound_3_2 = verify_theorem_bound_3_2(opts);
  if (scope.subgraphs_3_3) {
    for (const auto& ng : groups) {
      if (center(ng.group).size() == ng.group.order()) continue;
      sum.checks.push_back(non_commuting_subgraph_check(ng.group, ng.name));
    }
    const auto k36 = embed::embeds_in_nonorientable(complete_bipartite(3, 6), 1, opts.limits);
    sum.checks.push_back({"K3,6 does not embed in the projective plane (search)", k36.decision == embed::Decision::no,
                          k36.decision != embed::Decision::unknown, to_string(k36.decision)});
  }
  if (scope.lemma_2_1) {
    for (const auto& ng : groups) {
      LemmaRecord rec = verify_lemma_2_1(ng.group, ng.name);
      if (rec.part == 2 && ng.group.order() == 32) ++sum.order32_ingested;
      if (rec.part != 0) sum.lemma_2_1.push_back(std::move(rec));
    }
  }
  if (scope.formulas) {
    auto checks = formula_cross_checks(opts.limits);
    sum.checks.insert(sum.checks.end(), checks.begin(), checks.end());
  }
  for (const auto& c : sum.checks)
    if (!c.confirmed) ++sum.unconfirmed;
  return sum;
}

inline VerificationSummary verify_all(const std::vector<NamedGroup>& extra = {}, const ClassifyOptions& opts = {}) {
  return verify(VerifyScope::all(), extra, opts);
}

// ---------------------------------------------------------------------------
// JSON output.

inline nlohmann::json to_json(const Bound& b) {
  nlohmann::json j{{"lower", b.lower}};
  j["upper"] = b.upper ? nlohmann::json(*b.upper) : nlohmann::json(nullptr);
  j["exact"] = b.exact();
  return j;
}

inline nlohmann::json to_json(const SurfaceVerdict& v) {
  return {{"planar", v.planar},
          {"genus", to_json(v.genus)},
          {"crosscap", v.planar ? nlohmann::json("not-applicable") : to_json(v.crosscap)},
          {"euler_genus", to_json(v.euler_genus)},
          {"bounds_used", v.provenance}};
}

inline nlohmann::json to_json(const ClassificationReport& r) {
  return {{"group_name", r.group_name},
          {"order", r.order},
          {"center_size", r.center_size},
          {"graph_kind", to_string(r.kind)},
          {"vertex_count", r.vertex_count},
          {"edge_count", r.edge_count},
          {"verdict", to_json(r.verdict)},
          {"computed_label", to_string(r.computed)},
          {"expected_label", to_string(r.expected)},
          {"listed", r.listed},
          {"confirmed", r.confirmed},
          {"match", r.match},
          {"notes", r.notes}};
}

inline nlohmann::json to_json(const CheckRecord& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"confirmed", c.confirmed}, {"detail", c.detail}};
}

inline nlohmann::json to_json(const LemmaRecord& l) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& s : l.witness) w.push_back(s.indices());
  return {{"group_name", l.group_name}, {"order", l.order}, {"part", l.part},
          {"found", l.found},           {"witness", w},       {"note", l.note}};
}

inline nlohmann::json to_json(const BoundDerivation& d) {
  nlohmann::json ex = nlohmann::json::array();
  for (const auto& e : d.examples) ex.push_back({{"order", e.order}, {"class_count", e.class_count}, {"survives", e.survives}});
  return {{"max_order_swept", d.max_order_swept},
          {"euler_bound_matches_inequality", d.euler_bound_matches_inequality},
          {"inequality_implies_k_bound", d.inequality_implies_k_bound},
          {"largest_surviving_order", d.largest_surviving_order},
          {"examples", ex},
          {"survivors", d.survivors},
          {"survivors_planar", d.survivors_planar},
          {"ok", d.ok},
          {"notes", d.notes}};
}

inline nlohmann::json to_json(const VerificationSummary& s) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : s.edge_identity)
    edges.push_back({{"group_name", e.group_name},
                     {"lhs", e.identity.lhs},
                     {"rhs", e.identity.rhs},
                     {"equal", e.identity.equal}});
  nlohmann::json lemma = nlohmann::json::array();
  for (const auto& l : s.lemma_2_1) lemma.push_back(to_json(l));
  nlohmann::json out{{"reports", reports},
                     {"summary",
                      {{"matched", s.matched},
                       {"mismatched", s.mismatched},
                       {"unconfirmed", s.unconfirmed},
                       {"planar_commuting", s.planar_commuting},
                       {"toroidal_projective_commuting", s.toroidal_projective_commuting},
                       {"planar_non_commuting", s.planar_non_commuting},
                       {"toroidal_non_commuting", s.toroidal_non_commuting},
                       {"projective_non_commuting", s.projective_non_commuting},
                       {"ok", s.ok()}}},
                     {"checks", checks},
                     {"edge_count_identity", edges},
                     {"commuting_subsets", lemma}};
  if (s.bound_3_2) out["class_count_bound"] = to_json(*s.bound_3_2);
  if (s.lemma_2_1.size() || s.order32_ingested) {
    out["order32_coverage"] = {{"ingested", s.order32_ingested},
                               {"non_abelian_total", kNonAbelianOrder32},
                               {"complete", s.order32_ingested >= kNonAbelianOrder32}};
  }
  return out;
}

}  // namespace genuslab::classify
