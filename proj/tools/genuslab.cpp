// genuslab: inspect groups, export commuting graphs, decide surface
// embeddings and check the surface classification of commuting graphs.
//
// Exit status: 0 success, 1 verification mismatch, 2 usage or input error,
// 3 a decision timed out.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "genuslab/genuslab.hpp"

namespace {

using namespace genuslab;
using nlohmann::json;

constexpr int kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitTimeout = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  double timeout_s = 60;
  int jobs = 1;

  embed::SearchLimits limits() const {
    return {std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000))};
  }
};

struct GroupSource {
  std::string catalog;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* c = cmd->add_option("--catalog", catalog, "Catalog group name");
    auto* f = cmd->add_option("--file", file, "Group file (JSON Cayley table or permutation generators)")
                  ->check(CLI::ExistingFile);
    c->excludes(f);
  }
  bool given() const { return !catalog.empty() || !file.empty(); }

  std::pair<std::string, FiniteGroup> load() const {
    if (!catalog.empty()) return {catalog, catalog_group(catalog)};
    if (!file.empty()) {
      FiniteGroup g = read_group_file(file);
      return {g.name(), g};
    }
    throw InputError("one of --catalog or --file is required");
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

// -- group-info --------------------------------------------------------------

int cmd_group_info(const GroupSource& src, const std::string& format) {
  const auto [name, g] = src.load();
  const GroupStats s = stats(g);
  if (format == "json") {
    json j{{"name", name},        {"order", g.order()},        {"center_size", s.center_size},
           {"class_count", s.class_count}, {"spectrum", s.spectrum}, {"exponent", s.exponent},
           {"is_abelian", s.is_abelian}};
    j["commuting_graph"] = s.is_abelian ? json("not-applicable") : json("defined");
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "name: " << name << '\n'
            << "order: " << g.order() << '\n'
            << "center: " << s.center_size << '\n'
            << "classes: " << s.class_count << '\n'
            << "element orders: " << join(s.spectrum) << '\n'
            << "exponent: " << s.exponent << '\n'
            << "abelian: " << (s.is_abelian ? "true" : "false") << '\n';
  if (s.is_abelian) std::cout << "commuting graph: not applicable (abelian)\n";
  return kExitOk;
}

// -- graph -------------------------------------------------------------------

ElementGraph group_graph(const FiniteGroup& g, const std::string& kind) {
  return kind == "commuting" ? commuting_graph(g) : non_commuting_graph(g);
}

void write_graph(std::ostream& os, const SimpleGraph& g, const std::string& name, const std::string& format) {
  if (format == "dot") {
    write_dot(os, g, name);
  } else if (format == "json") {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    os << json{{"name", name}, {"vertices", g.vertex_count()}, {"labels", g.labels()}, {"edges", edges}}.dump(2)
       << '\n';
  } else if (format == "text") {
    os << name << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  } else {
    write_edge_list(os, g);
  }
}

int cmd_graph(const GroupSource& src, const std::string& kind, const std::string& format, const std::string& out) {
  const auto [name, g] = src.load();
  const ElementGraph eg = group_graph(g, kind);
  if (eg.not_applicable) std::cerr << name << " is abelian: the graph has no vertices\n";
  const std::string title = name + " " + (kind == "commuting" ? "commuting" : "non-commuting");
  if (out.empty()) {
    write_graph(std::cout, eg.graph, title, format);
  } else {
    std::ofstream f(out);
    if (!f) throw InputError(out + ": cannot write");
    write_graph(f, eg.graph, title, format);
  }
  return kExitOk;
}

// -- surface -----------------------------------------------------------------

struct SurfaceArgs {
  GroupSource group;
  std::string kind = "commuting";
  std::string edgelist;
  int kn = 0;
  std::vector<int> kmn;
  bool genus = false, crosscap = false, planar = false;
  std::optional<int> embeds_orientable, embeds_nonorientable;
  std::string format = "text";
};

std::pair<std::string, SimpleGraph> surface_input(const SurfaceArgs& a) {
  int given = a.group.given() + !a.edgelist.empty() + (a.kn > 0) + !a.kmn.empty();
  if (given != 1) throw InputError("give exactly one of --catalog, --file, --edgelist, --kn, --kmn");
  if (a.group.given()) {
    const auto [name, g] = a.group.load();
    return {name + " " + a.kind, group_graph(g, a.kind).graph};
  }
  if (!a.edgelist.empty()) {
    std::ifstream in(a.edgelist);
    if (!in) throw InputError(a.edgelist + ": cannot open");
    try {
      return {a.edgelist, read_edge_list(in)};
    } catch (const GraphError& e) {
      throw InputError(a.edgelist + ": " + e.what());
    }
  }
  if (a.kn > 0) return {"K" + std::to_string(a.kn), complete_graph(a.kn)};
  if (a.kmn.size() != 2 || a.kmn[0] < 1 || a.kmn[1] < 1) throw InputError("--kmn takes two positive sizes");
  return {"K" + std::to_string(a.kmn[0]) + "," + std::to_string(a.kmn[1]), complete_bipartite(a.kmn[0], a.kmn[1])};
}

/// "true", "false" or "unknown" for value <= target given a bound.
std::string at_most(const embed::Bound& b, int target) {
  if (b.upper && *b.upper <= target) return "true";
  if (b.lower > target) return "false";
  return "unknown";
}

int cmd_surface(const SurfaceArgs& a, const Common& common) {
  const auto [name, g] = surface_input(a);
  const embed::SurfaceOptions opts{common.limits(), std::nullopt};
  json j{{"graph", name}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  std::vector<std::string> lines, provenance;
  bool unknown = false;
  const bool any_query = a.genus || a.crosscap || a.planar || a.embeds_orientable || a.embeds_nonorientable;

  std::optional<embed::GenusResult> gr;
  std::optional<embed::CrosscapResult> cr;
  auto need_genus = [&]() -> const embed::Bound& {
    if (!gr) {
      gr = embed::genus(g, opts);
      provenance.insert(provenance.end(), gr->provenance.begin(), gr->provenance.end());
    }
    return gr->value;
  };
  auto need_crosscap = [&]() -> const embed::Bound& {
    if (!cr) {
      cr = embed::crosscap(g, opts);
      provenance.insert(provenance.end(), cr->provenance.begin(), cr->provenance.end());
    }
    return cr->value;
  };

  if (!any_query) {
    const auto v = embed::surface_verdict(g, opts);
    j["verdict"] = classify::to_json(v);
    lines.push_back(std::string("planar: ") + (v.planar ? "true" : "false"));
    lines.push_back("genus: " + embed::to_string(v.genus));
    lines.push_back("crosscap: " + (v.planar ? std::string("not applicable (planar)") : embed::to_string(v.crosscap)));
    lines.push_back("euler genus: " + embed::to_string(v.euler_genus));
    provenance = v.provenance;
    unknown = !v.exact();
  }
  if (a.planar) {
    const auto p = embed::is_planar(g, true);
    j["planar"] = p.planar;
    lines.push_back(std::string("planar: ") + (p.planar ? "true" : "false"));
    if (p.witness) {
      json w = json::array();
      for (auto [u, v] : p.witness->edges) w.push_back({u, v});
      j["kuratowski"] = {{"kind", p.witness->kind == embed::KuratowskiKind::k5 ? "K5" : "K3,3"}, {"edges", w}};
      lines.push_back(std::string("kuratowski subgraph: ") +
                      (p.witness->kind == embed::KuratowskiKind::k5 ? "K5" : "K3,3") + " subdivision with " +
                      std::to_string(p.witness->edges.size()) + " edges");
    }
  }
  if (a.genus) {
    const auto& b = need_genus();
    j["genus"] = classify::to_json(b);
    lines.push_back("genus: " + embed::to_string(b));
    unknown = unknown || !b.exact();
  }
  if (a.crosscap) {
    const auto& b = need_crosscap();
    j["crosscap"] = b == embed::Bound::exactly(0) ? json("not-applicable") : classify::to_json(b);
    lines.push_back("crosscap: " + (b == embed::Bound::exactly(0) ? std::string("not applicable (planar)")
                                                                  : embed::to_string(b)));
    unknown = unknown || !b.exact();
  }
  if (a.embeds_orientable) {
    const int t = *a.embeds_orientable;
    if (t < 0) throw InputError("--embeds-orientable needs a non-negative genus");
    const std::string ans = at_most(need_genus(), t);
    j["embeds_orientable"] = {{"genus", t}, {"answer", ans}};
    lines.push_back("embeds in S" + std::to_string(t) + ": " + ans);
    unknown = unknown || ans == "unknown";
  }
  if (a.embeds_nonorientable) {
    const int t = *a.embeds_nonorientable;
    if (t < 1) throw InputError("--embeds-nonorientable needs a crosscap number of at least 1");
    const std::string ans = at_most(need_crosscap(), t);
    j["embeds_nonorientable"] = {{"crosscap", t}, {"answer", ans}};
    lines.push_back("embeds in N" + std::to_string(t) + ": " + ans);
    unknown = unknown || ans == "unknown";
  }
  j["provenance"] = provenance;
  if (a.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << name << " (" << g.vertex_count() << " vertices, " << g.edge_count() << " edges)\n";
    for (const auto& l : lines) std::cout << l << '\n';
    for (const auto& p : provenance) std::cout << "  " << p << '\n';
  }
  if (unknown) {
    std::cerr << "timeout: some decisions are unresolved; bounds shown are partial\n";
    return kExitTimeout;
  }
  return kExitOk;
}

// -- verify ------------------------------------------------------------------

struct VerifyArgs {
  bool all = false;
  std::vector<std::string> theorems;
  std::vector<std::string> lemmas;
  std::vector<std::string> inputs;
  std::string report;
  std::string format = "text";
};

classify::VerifyScope verify_scope(const VerifyArgs& a) {
  if (a.all || (a.theorems.empty() && a.lemmas.empty())) return classify::VerifyScope::all();
  auto s = classify::VerifyScope::none();
  for (const auto& t : a.theorems) {
    if (t == "2.2" || t == "2.3") s.commuting = true;
    if (t == "3.1" || t == "3.2" || t == "3.3") s.non_commuting = true;
    if (t == "3.2") s.bound_3_2 = true;
    if (t == "3.3") s.subgraphs_3_3 = true;
    if (t == "1.1" || t == "1.3") s.formulas = true;
  }
  for (const auto& l : a.lemmas)
    if (l == "2.1") s.lemma_2_1 = true;
  return s;
}

void print_summary(const classify::VerificationSummary& s, const classify::VerifyScope& scope) {
  using classify::GraphKind;
  using classify::SurfaceLabel;
  auto names = [&](GraphKind kind, SurfaceLabel label) {
    std::string out;
    for (const auto& r : s.reports)
      if (r.kind == kind && r.computed == label) out += (out.empty() ? "" : ", ") + r.group_name;
    return out.empty() ? std::string("none") : out;
  };
  for (const auto& r : s.reports) {
    std::cout << (r.match ? "ok        " : r.confirmed ? "MISMATCH  " : "UNCONFIRMED ") << r.group_name << " "
              << to_string(r.kind) << ": " << to_string(r.computed) << " (expected " << to_string(r.expected)
              << ", genus " << embed::to_string(r.verdict.genus) << ", crosscap "
              << (r.verdict.planar ? std::string("n/a") : embed::to_string(r.verdict.crosscap)) << ")\n";
  }
  if (scope.commuting) {
    std::cout << "planar commuting (" << s.planar_commuting
              << "): " << names(GraphKind::commuting, SurfaceLabel::planar) << '\n';
    std::cout << "toroidal and projective commuting (" << s.toroidal_projective_commuting
              << "): " << names(GraphKind::commuting, SurfaceLabel::toroidal_and_projective) << '\n';
  }
  if (scope.non_commuting) {
    std::cout << "planar non-commuting (" << s.planar_non_commuting
              << "): " << names(GraphKind::non_commuting, SurfaceLabel::planar) << '\n';
    std::cout << "toroidal non-commuting: " << s.toroidal_non_commuting
              << ", projective non-commuting: " << s.projective_non_commuting << '\n';
  }
  for (const auto& e : s.edge_identity)
    if (!e.identity.equal) std::cout << "EDGE IDENTITY FAILS " << e.group_name << '\n';
  if (s.bound_3_2) {
    const auto& d = *s.bound_3_2;
    std::cout << "class-count bound: " << (d.ok ? "ok" : "FAILED") << ", largest surviving order "
              << d.largest_surviving_order << ", survivors:";
    for (const auto& n : d.survivors) std::cout << ' ' << n;
    std::cout << '\n';
  }
  for (const auto& l : s.lemma_2_1) {
    std::cout << (l.found ? "found     " : "NOT FOUND ") << l.group_name << ": " << l.note;
    for (const auto& w : l.witness) {
      std::cout << " {";
      for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w.indices()[i];
      std::cout << '}';
    }
    std::cout << '\n';
  }
  if (scope.lemma_2_1 && s.order32_ingested < classify::kNonAbelianOrder32)
    std::cout << "order-32 coverage: " << s.order32_ingested << " of " << classify::kNonAbelianOrder32
              << " non-abelian groups ingested\n";
  for (const auto& c : s.checks)
    std::cout << (c.passed ? "ok        " : c.confirmed ? "FAILED    " : "UNCONFIRMED ") << c.name
              << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
  std::cout << "matched: " << s.matched << ", mismatched: " << s.mismatched << ", unconfirmed: " << s.unconfirmed
            << '\n';
}

int cmd_verify(const VerifyArgs& a, const Common& common) {
  std::vector<classify::NamedGroup> extra;
  for (const auto& path : a.inputs) {
    FiniteGroup g = read_group_file(path);
    extra.push_back({g.name(), g});
  }
  const auto scope = verify_scope(a);
  classify::ClassifyOptions opts{common.limits(), common.jobs};
  const auto s = classify::verify(scope, extra, opts);
  const json j = classify::to_json(s);
  if (!a.report.empty()) {
    std::ofstream f(a.report);
    if (!f) throw InputError(a.report + ": cannot write");
    f << j.dump(2) << '\n';
  }
  if (a.format == "json") std::cout << j.dump(2) << '\n';
  else print_summary(s, scope);

  bool failed = s.mismatched > 0;
  for (const auto& c : s.checks) failed = failed || (c.confirmed && !c.passed);
  for (const auto& e : s.edge_identity) failed = failed || !e.identity.equal;
  for (const auto& l : s.lemma_2_1) failed = failed || !l.found;
  if (s.bound_3_2) failed = failed || !s.bound_3_2->ok;
  if (failed) return kExitMismatch;
  if (s.unconfirmed > 0) return kExitTimeout;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groups, commuting graphs and their surface embeddings"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  if (const char* env = std::getenv("GENUSLAB_TIMEOUT")) {
    try {
      common.timeout_s = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "GENUSLAB_TIMEOUT must be a number of seconds\n";
      return kExitUsage;
    }
    if (common.timeout_s <= 0) {
      std::cerr << "GENUSLAB_TIMEOUT must be positive\n";
      return kExitUsage;
    }
  }
  app.add_option("--timeout", common.timeout_s, "Budget per embedding decision in seconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", common.jobs, "Worker threads for verification")->check(CLI::Range(1, 256));

  const std::vector<std::string> text_json{"text", "json"};

  auto* info = app.add_subcommand("group-info", "Order, centre, class number, element orders and exponent");
  GroupSource info_src;
  std::string info_format = "text";
  info_src.attach(info);
  info->add_option("--format", info_format)->check(CLI::IsMember(text_json));

  auto* graph = app.add_subcommand("graph", "Export the commuting or non-commuting graph");
  GroupSource graph_src;
  std::string graph_kind = "commuting", graph_format = "edgelist", graph_out;
  graph_src.attach(graph);
  graph->add_option("--kind", graph_kind)
      ->check(CLI::IsMember({"commuting", "noncommuting", "non-commuting"}));
  graph->add_option("--format", graph_format)->check(CLI::IsMember({"edgelist", "dot", "json", "text"}));
  graph->add_option("--output,-o", graph_out, "Write to a file instead of stdout");

  auto* surface = app.add_subcommand("surface", "Planarity, genus, crosscap and embedding decisions");
  SurfaceArgs sa;
  sa.group.attach(surface);
  surface->add_option("--kind", sa.kind)->check(CLI::IsMember({"commuting", "noncommuting", "non-commuting"}));
  surface->add_option("--edgelist", sa.edgelist, "Graph as an edge-list file")->check(CLI::ExistingFile);
  surface->add_option("--kn", sa.kn, "Complete graph K_n")->check(CLI::PositiveNumber);
  surface->add_option("--kmn", sa.kmn, "Complete bipartite graph K_{m,n}")->expected(2)->delimiter(',');
  surface->add_flag("--genus", sa.genus);
  surface->add_flag("--crosscap", sa.crosscap);
  surface->add_flag("--planar", sa.planar);
  surface->add_option("--embeds-orientable", sa.embeds_orientable, "Decide embedding in S_g");
  surface->add_option("--embeds-nonorientable", sa.embeds_nonorientable, "Decide embedding in N_k");
  surface->add_option("--format", sa.format)->check(CLI::IsMember(text_json));

  auto* verify = app.add_subcommand("verify", "Check the classification against the catalog");
  VerifyArgs va;
  verify->add_flag("--all", va.all, "Every suite (the default)");
  verify->add_option("--theorem", va.theorems, "Suite to run: 1.1, 1.3, 2.2, 2.3, 3.1, 3.2 or 3.3")
      ->check(CLI::IsMember({"1.1", "1.3", "2.2", "2.3", "3.1", "3.2", "3.3"}));
  verify->add_option("--lemma", va.lemmas, "Commuting-subset suite: 2.1")->check(CLI::IsMember({"2.1"}));
  verify->add_option("--input", va.inputs, "Extra group files")->check(CLI::ExistingFile);
  verify->add_option("--report", va.report, "Write the JSON report here");
  verify->add_option("--format", va.format)->check(CLI::IsMember(text_json));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*info) return cmd_group_info(info_src, info_format);
    if (*graph) return cmd_graph(graph_src, graph_kind == "commuting" ? "commuting" : "non-commuting", graph_format,
                                 graph_out);
    if (*surface) {
      if (sa.kind != "commuting") sa.kind = "non-commuting";
      return cmd_surface(sa, common);
    }
    if (*verify) return cmd_verify(va, common);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownGroupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FileFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
