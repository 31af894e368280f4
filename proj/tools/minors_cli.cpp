// Batch front end: construct the extremal families, run the reduction and
// extraction pipeline, query the brute-force engines, and re-verify emitted
// certificates.

#include "minors/constructions.hpp"
#include "minors/extraction.hpp"
#include "minors/io.hpp"
#include "minors/oracle.hpp"
#include "minors/reduction.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "check_certificate.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <queue>
#include <set>

using nlohmann::json;
using namespace minors;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int enum_cap() {
  if (const char *s = std::getenv("MINORS_ENUM_CAP")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return 8;
}

Graph load_graph(const std::string &path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void emit(const std::string &path, const std::function<void(std::ostream &)> &fn) {
  if (path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  fn(out);
}

json load_json(const std::string &path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

json certificate_to_json(int t, const DensityCertificate &cert) {
  return {{"t", t},
          {"bound_num", cert.guaranteed_bound.num().str()},
          {"bound_den", cert.guaranteed_bound.den().str()},
          {"achieved", cert.achieved_edges},
          {"case_path", cert.case_path},
          {"model", model_to_json(cert.model)}};
}

json report_to_json(const Report &rep) {
  return {{"checked", rep.checked},
          {"violations", rep.violations},
          {"runtime_ms", rep.runtime_ms}};
}

int finish_report(const Report &rep) {
  std::cout << report_to_json(rep).dump(2) << "\n";
  return rep.pass() ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"graph minor toolkit"};
  app.require_subcommand(1);
  std::string out_path = "-";
  app.add_option("-o,--output", out_path, "output path, - for stdout");

  // construct
  auto *construct = app.add_subcommand("construct", "generate a named graph family");
  construct->require_subcommand(1);
  int k = 2, r = 1, s = 1, n = 5, copies = 2;
  std::string base_name = "k5minus", attach = "star";

  auto *c_sgraph = construct->add_subcommand("s-graph", "clique joined to disjoint cliques");
  c_sgraph->add_option("--k", k)->required();
  c_sgraph->add_option("--r", r)->required();
  c_sgraph->add_option("--s", s)->required();

  auto *c_pp = construct->add_subcommand("path-power", "k-th power of a path");
  c_pp->add_option("--n", n)->required();
  c_pp->add_option("--k", k)->required();

  auto *c_cockade = construct->add_subcommand("cockade", "copies glued along k-cliques");
  c_cockade->add_option("--base", base_name, "k4, k5minus, or k5");
  c_cockade->add_option("--k", k)->required();
  c_cockade->add_option("--copies", copies)->required();
  c_cockade->add_option("--attach", attach, "star or chain");

  auto *c_lc = construct->add_subcommand("line-complete", "line graph of K_n");
  c_lc->add_option("--n", n)->required();

  // reduce / extract
  std::string graph_path = "-", graph2_path, cert_path;
  int t = 5;
  auto *reduce = app.add_subcommand("reduce", "contraction pass raising neighborhood density");
  reduce->add_option("graph", graph_path, "edge-list file, - for stdin");

  auto *extract = app.add_subcommand("extract", "dense t-vertex minor with certificate");
  extract->add_option("--t", t)->required();
  extract->add_option("graph", graph_path, "edge-list file, - for stdin");

  // oracle
  auto *oracle = app.add_subcommand("oracle", "exact brute-force queries");
  oracle->require_subcommand(1);
  auto *o_max = oracle->add_subcommand("max-minor", "densest t-vertex minor");
  o_max->add_option("--t", t)->required();
  o_max->add_option("graph", graph_path);
  auto *o_has = oracle->add_subcommand("has-minor", "minor containment with model");
  o_has->add_option("graph", graph_path)->required();
  o_has->add_option("pattern", graph2_path)->required();

  // verify
  auto *verify = app.add_subcommand("verify", "exhaustive theorem sweeps");
  verify->require_subcommand(1);
  int nmax = 7;
  auto *v_small = verify->add_subcommand("small", "guaranteed minor edges for t in 2..6");
  v_small->add_option("--t", t)->required();
  v_small->add_option("--nmax", nmax)->required();
  auto *v_ex11 = verify->add_subcommand("extremal11", "11-edge 6-vertex minors above 5v/2-7/2");
  v_ex11->add_option("--nmax", nmax)->required();
  auto *v_6v = verify->add_subcommand("6v12e", "6 vertices, 12 edges: 3-connected or K5");
  auto *v_l32 = verify->add_subcommand("lemma32", "minor = subgraph on clique-star hosts");
  v_l32->add_option("--k", k)->required();
  v_l32->add_option("--r", r)->required();
  v_l32->add_option("--s", s)->required();
  int h_max = -1;
  v_l32->add_option("--hmax", h_max, "max pattern size, default min(5, v(host))");

  auto *check = app.add_subcommand("check-cert", "independently re-verify a certificate");
  check->add_option("graph", graph_path)->required();
  check->add_option("certificate", cert_path)->required();

  // let a trailing -o after any subcommand reach the global option
  auto enable_fallthrough = [](auto &&self, CLI::App *a) -> void {
    for (CLI::App *sub : a->get_subcommands([](const CLI::App *) { return true; })) {
      sub->fallthrough();
      self(self, sub);
    }
  };
  enable_fallthrough(enable_fallthrough, &app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (c_sgraph->parsed()) {
      Graph g = s_graph({k, r, s});
      emit(out_path, [&](std::ostream &o) { write_edge_list(o, g); });
      return kExitPass;
    }
    if (c_pp->parsed()) {
      Graph g = path_power(n, k);
      emit(out_path, [&](std::ostream &o) { write_edge_list(o, g); });
      return kExitPass;
    }
    if (c_cockade->parsed()) {
      CockadeSpec spec;
      if (base_name == "k4") spec.base = Graph::complete(4);
      else if (base_name == "k5minus") spec.base = k5_minus();
      else if (base_name == "k5") spec.base = Graph::complete(5);
      else throw CLI::ValidationError("--base must be k4, k5minus, or k5");
      if (attach == "star") spec.attachment = CockadeSpec::Attachment::Star;
      else if (attach == "chain") spec.attachment = CockadeSpec::Attachment::Chain;
      else throw CLI::ValidationError("--attach must be star or chain");
      spec.k = k;
      spec.copies = copies;
      Graph g = cockade(spec);
      emit(out_path, [&](std::ostream &o) { write_edge_list(o, g); });
      return kExitPass;
    }
    if (c_lc->parsed()) {
      Graph g = line_graph_complete(n);
      emit(out_path, [&](std::ostream &o) { write_edge_list(o, g); });
      return kExitPass;
    }
    if (reduce->parsed()) {
      Graph g = load_graph(graph_path);
      ReductionResult res = mader_reduce(g);
      emit(out_path, [&](std::ostream &o) { write_edge_list(o, res.reduced); });
      return kExitPass;
    }
    if (extract->parsed()) {
      Graph g = load_graph(graph_path);
      DensityCertificate cert = extract_dense_minor(g, t);
      json j = certificate_to_json(t, cert);
      emit(out_path, [&](std::ostream &o) { o << j.dump(2) << "\n"; });
      return kExitPass;
    }
    if (o_max->parsed()) {
      Graph g = load_graph(graph_path);
      SearchResult res = max_minor_edges(g, t);
      json j = {{"optimum", res.optimum},
                {"explored", res.explored},
                {"exhaustive", res.exhaustive},
                {"model", model_to_json(*res.witness_model)}};
      emit(out_path, [&](std::ostream &o) { o << j.dump(2) << "\n"; });
      return kExitPass;
    }
    if (o_has->parsed()) {
      Graph g = load_graph(graph_path);
      Graph h = load_graph(graph2_path);
      auto [found, model] = has_minor(g, h);
      json j = {{"has_minor", found}};
      if (found) j["model"] = model_to_json(*model);
      emit(out_path, [&](std::ostream &o) { o << j.dump(2) << "\n"; });
      return found ? kExitPass : kExitFail;
    }
    if (v_small->parsed()) return finish_report(verify_small_theorem(t, nmax, enum_cap()));
    if (v_ex11->parsed()) return finish_report(verify_extremal11(nmax, enum_cap()));
    if (v_6v->parsed()) {
      Report rep;
      verify_6v12e_claim(&rep);
      return finish_report(rep);
    }
    if (v_l32->parsed()) {
      SGraphSpec spec{k, r, s};
      int hm = h_max > 0 ? h_max : std::min(5, spec.k + spec.r * spec.s);
      return finish_report(verify_lemma32(spec, hm, enum_cap()));
    }
    if (check->parsed()) {
      Graph g = load_graph(graph_path);
      json cert = load_json(cert_path);
      std::string reason;
      if (check_certificate(g, cert, &reason)) {
        std::cout << "certificate ok\n";
        return kExitPass;
      }
      std::cerr << "certificate rejected: " << reason << "\n";
      return kExitFail;
    }
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
