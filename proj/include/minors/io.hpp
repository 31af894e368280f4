#ifndef MINORS_IO_HPP
#define MINORS_IO_HPP

#include "minors/minor_model.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace minors {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
};

/// Edge-list text format: header "p <v> <e>", then one "u v" line per edge,
/// 0-indexed. Blank lines and lines starting with '#' are ignored.
inline Graph read_edge_list(std::istream &in) {
  int lineno = 0;
  int n = -1;
  long long m = -1;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ss(line);
    if (n < 0) {
      char p;
      if (!(ss >> p >> n >> m) || p != 'p' || n < 0 || m < 0)
        throw ParseError(lineno, "expected header \"p <v> <e>\"");
      continue;
    }
    int u, v;
    if (!(ss >> u >> v)) throw ParseError(lineno, "expected edge \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(lineno, "vertex id out of range [0," + std::to_string(n) + ")");
    if (u == v) throw ParseError(lineno, "loop edge");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError(lineno, "missing header \"p <v> <e>\"");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(lineno, "header announced " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  return Graph(n, edges);
}

/// Writes the edge-list format. If the graph's ids are not already 0..v-1,
/// vertices are renumbered in ascending id order and the mapping is emitted
/// as comments.
inline void write_edge_list(std::ostream &out, const Graph &g) {
  const auto &ids = g.vertices();
  bool contiguous = ids.empty() || (ids.front() == 0 && ids.back() == g.v() - 1);
  std::map<int, int> remap;
  for (int i = 0; i < g.v(); ++i) remap[ids[i]] = i;
  out << "p " << g.v() << " " << g.e() << "\n";
  if (!contiguous)
    for (int i = 0; i < g.v(); ++i)
      out << "# vertex " << i << " was " << ids[i] << "\n";
  for (auto [u, v] : g.edge_list())
    out << remap[u] << " " << remap[v] << "\n";
}

inline nlohmann::json model_to_json(const MinorModel &model) {
  nlohmann::json bs = nlohmann::json::object();
  for (const auto &[pid, set] : model.branch_sets)
    bs[std::to_string(pid)] = set;
  nlohmann::json re = nlohmann::json::array();
  for (auto [a, b] : realized_edges(model)) re.push_back({a, b});
  return {{"host_vertices", model.host.v()},
          {"branch_sets", bs},
          {"realized_edges", re}};
}

/// Rebuilds a model against the given host graph. The host is supplied by
/// the caller; the JSON only records its vertex count, which must match.
inline MinorModel model_from_json(const nlohmann::json &j, const Graph &host) {
  if (j.at("host_vertices").get<int>() != host.v())
    throw std::invalid_argument("model_from_json: host vertex count mismatch");
  MinorModel m;
  m.host = host;
  for (const auto &[key, val] : j.at("branch_sets").items())
    m.branch_sets[std::stoi(key)] = val.get<std::vector<int>>();
  return m;
}

} // namespace minors

#endif
