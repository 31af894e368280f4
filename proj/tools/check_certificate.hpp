#ifndef TOOLS_CHECK_CERTIFICATE_HPP
#define TOOLS_CHECK_CERTIFICATE_HPP

// Standalone certificate re-verification. Deliberately does not reuse the
// library's verify_model / model_edge_count helpers: an extraction bug and a
// matching verification bug should not be able to cancel out.

#include "minors/graph.hpp"
#include "minors/rational.hpp"

#include <json.hpp>

#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

inline bool check_certificate(const minors::Graph &g, const nlohmann::json &cert,
                              std::string *reason) {
  using minors::Rational;
  auto fail = [&](const std::string &why) {
    if (reason) *reason = why;
    return false;
  };
  if (!cert.contains("t") || !cert.contains("bound_num") || !cert.contains("bound_den") ||
      !cert.contains("achieved") || !cert.contains("model"))
    return fail("missing certificate field");

  const nlohmann::json &model = cert.at("model");
  if (model.at("host_vertices").get<int>() != g.v())
    return fail("host vertex count mismatch");

  int t = cert.at("t").get<int>();
  const nlohmann::json &bs = model.at("branch_sets");
  if (static_cast<int>(bs.size()) != t)
    return fail("branch set count differs from t");

  std::set<int> used;
  std::map<int, std::vector<int>> sets;
  for (const auto &[key, val] : bs.items()) {
    std::vector<int> set = val.get<std::vector<int>>();
    if (set.empty()) return fail("empty branch set " + key);
    for (int u : set) {
      if (!g.has_vertex(u)) return fail("branch set " + key + " uses unknown vertex");
      if (!used.insert(u).second)
        return fail("branch sets overlap at vertex " + std::to_string(u));
    }
    // connectivity by plain BFS inside the set
    std::set<int> members(set.begin(), set.end());
    std::set<int> seen{set.front()};
    std::queue<int> q;
    q.push(set.front());
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u))
        if (members.count(w) && seen.insert(w).second) q.push(w);
    }
    if (seen.size() != members.size())
      return fail("branch set " + key + " is not connected");
    sets[std::stoi(key)] = std::move(set);
  }

  // recount realized pattern edges
  long long realized = 0;
  for (auto a = sets.begin(); a != sets.end(); ++a)
    for (auto b = std::next(a); b != sets.end(); ++b) {
      bool joined = false;
      for (int u : a->second) {
        for (int w : g.neighbors(u))
          if (std::find(b->second.begin(), b->second.end(), w) != b->second.end()) {
            joined = true;
            break;
          }
        if (joined) break;
      }
      if (joined) ++realized;
    }

  long long achieved = cert.at("achieved").get<long long>();
  if (realized != achieved)
    return fail("achieved recount mismatch: certificate says " + std::to_string(achieved) +
                ", model realizes " + std::to_string(realized));

  Rational bound = Rational::parse(cert.at("bound_num").get<std::string>() + "/" +
                                   cert.at("bound_den").get<std::string>());
  if (Rational(achieved) < bound)
    return fail("achieved edge count below the certified bound");
  return true;
}

#endif
