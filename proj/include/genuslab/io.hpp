#pragma once

// JSON group files.
//   Cayley table:  {"name": s, "order": n, "table": [[int]]}  row i = left factor
//   Generators:    {"name": s, "degree": d, "generators": [[int]]}  g maps p to g[p]

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "genuslab/group.hpp"

namespace genuslab {

class FileFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline FiniteGroup group_from_json(const nlohmann::json& doc, const std::string& origin = "<json>") {
  auto fail = [&](const std::string& msg) { throw FileFormatError(origin + ": " + msg); };
  if (!doc.is_object()) fail("expected a JSON object");
  const std::string name = doc.value("name", std::string("unnamed"));
  try {
    if (doc.contains("table")) {
      auto table = doc.at("table").get<std::vector<std::vector<long long>>>();
      std::vector<std::vector<Element>> rows;
      for (const auto& r : table) {
        std::vector<Element> row;
        for (long long v : r) {
          if (v < 0) fail("negative table entry");
          row.push_back(static_cast<Element>(v));
        }
        rows.push_back(std::move(row));
      }
      if (doc.contains("order") && doc.at("order").get<std::size_t>() != rows.size())
        fail("\"order\" is " + doc.at("order").dump() + " but the table has " + std::to_string(rows.size()) +
             " rows");
      return from_cayley_table(std::move(rows), name);
    }
    if (doc.contains("generators")) {
      const auto degree = doc.at("degree").get<std::size_t>();
      auto gens = doc.at("generators").get<std::vector<Permutation>>();
      return from_permutation_generators(degree, gens, name);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
  fail("expected a \"table\" or \"generators\" field");
  return cyclic_group(1);
}

inline FiniteGroup read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError(path.string() + ": cannot open");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FileFormatError(path.string() + ": " + e.what());
  }
  return group_from_json(doc, path.string());
}

inline nlohmann::json cayley_json(const FiniteGroup& g) {
  return {{"name", g.name()}, {"order", g.order()}, {"table", g.rows()}};
}

}  // namespace genuslab
