#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "raag/autos.hpp"
#include "raag/corpus.hpp"
#include "raag/graph.hpp"
#include "raag/intmat.hpp"
#include "raag/io.hpp"
#include "raag/rigidity.hpp"
#include "raag/series.hpp"
#include "raag/word.hpp"

namespace {

using nlohmann::json;
using namespace raag;

int max_degree_env() {
  const char* raw = std::getenv("RAAG_MAX_DEGREE");
  if (!raw || !*raw) return 8;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 64)
    throw Error(errc::bad_argument, "RAAG_MAX_DEGREE must be an integer in 1..64");
  return static_cast<int>(v);
}

int clamp_degree(int requested, const char* flag) {
  int cap = max_degree_env();
  if (requested > cap)
    throw Error(errc::cap_exceeded, std::string(flag) + " " + std::to_string(requested) +
                                        " exceeds RAAG_MAX_DEGREE (" + std::to_string(cap) + ")");
  if (requested < 1) throw Error(errc::bad_argument, std::string(flag) + " must be >= 1");
  return requested;
}

json labels_of(const Graph& g, const VertexSet& s) {
  json a = json::array();
  for (int v : s) a.push_back(g.label(v));
  return a;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Display name for a Torelli generator: partial conjugation of the component
// of v_i by v_j prints as K<i><j> with i the least component member;
// commutator transvections print as K<i><j><k>. Indices are 1-based.
std::string torelli_name(const Generator& gen) {
  if (gen.kind == Generator::Kind::PartialConj)
    return "K" + std::to_string(gen.components[0][0] + 1) + std::to_string(gen.j + 1);
  if (gen.kind == Generator::Kind::Kijk)
    return "K" + std::to_string(gen.i + 1) + std::to_string(gen.j + 1) +
           std::to_string(gen.k + 1);
  return "?";
}

const char* kind_name(DecompNode::Kind k) {
  switch (k) {
    case DecompNode::Kind::Disconnected: return "disconnected";
    case DecompNode::Kind::CenterSplit: return "center_split";
    case DecompNode::Kind::CenterlessProjection: return "centerless_projection";
    case DecompNode::Kind::LeafGL: return "gl";
    case DecompNode::Kind::LeafOutF: return "out_free";
    default: return "trivial";
  }
}

json decomp_json(const DecompNode& n) {
  json j;
  j["kind"] = kind_name(n.kind);
  j["vertices"] = n.vertices;
  switch (n.kind) {
    case DecompNode::Kind::Disconnected:
      j["free_rank"] = n.free_rank;
      break;
    case DecompNode::Kind::CenterSplit:
      j["center_class"] = n.center_class;
      j["gl_size"] = n.gl_size;
      j["tr_rank"] = n.tr_rank;
      break;
    case DecompNode::Kind::CenterlessProjection:
      j["maximal_classes"] = n.child_classes;
      j["kernel"] = n.kernel_note;
      break;
    case DecompNode::Kind::LeafGL:
      j["gl_size"] = n.gl_size;
      break;
    case DecompNode::Kind::LeafOutF:
      j["free_rank"] = n.free_rank;
      break;
    default:
      break;
  }
  if (!n.children.empty()) {
    j["children"] = json::array();
    for (const auto& c : n.children) j["children"].push_back(decomp_json(*c));
  }
  return j;
}

std::string block_signature(const SubgroupSpec& spec) {
  std::string s;
  for (const Block& b : block_profile(spec))
    s += "[" + std::to_string(b.size) + (b.abelian ? "a" : "n") + "]";
  return s;
}

std::vector<Generator> parse_generator_list(const Graph& g, const std::string& text) {
  std::vector<Generator> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t semi = text.find(';', start);
    std::string item = text.substr(start, semi == std::string::npos ? semi : semi - start);
    size_t a = item.find_first_not_of(" \t");
    size_t b = item.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(parse_generator(g, item.substr(a, b - a + 1)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

json mapped_set_json(const Graph& g, const std::vector<Generator>& gens, const MappedSet& m) {
  json images = json::array();
  for (size_t i = 0; i < gens.size(); ++i) {
    json row;
    row["from"] = generator_to_string(g, gens[i]);
    row["to"] = m.images[i] ? json(generator_to_string(*m.target.graph, *m.images[i]))
                            : json("identity");
    images.push_back(std::move(row));
  }
  json j;
  j["target"] = graph_to_json(*m.target.graph);
  j["images"] = std::move(images);
  j["d_before"] = m.d_before;
  j["d_after"] = m.d_after;
  j["monotone"] = m.d_after <= m.d_before;
  j["block_signature"] = block_signature(m.spec);
  return j;
}

json cmd_analyze(const std::string& path) {
  Graph::Ptr g = load_graph_file(path);
  PreorderAnalysis pre = preorder_analysis(*g);
  json classes = json::array();
  for (size_t c = 0; c < pre.classes.size(); ++c) {
    json e;
    e["vertices"] = labels_of(*g, pre.classes[c]);
    e["abelian"] = pre.abelian[c];
    e["maximal"] = std::find(pre.maximal_classes.begin(), pre.maximal_classes.end(),
                             static_cast<int>(c)) != pre.maximal_classes.end();
    classes.push_back(std::move(e));
  }
  json maximal = json::array();
  for (int c : pre.maximal_classes) maximal.push_back(labels_of(*g, pre.classes[c]));
  json order = json::array();
  for (int v : pre.order) order.push_back(g->label(v));

  json payload;
  payload["classes"] = std::move(classes);
  payload["maximal_classes"] = std::move(maximal);
  payload["center"] = labels_of(*g, graph_center(*g));
  payload["admissible_order"] = std::move(order);
  payload["d_sl"] = sl_dimension(*g);
  payload["f_gamma"] = static_cast<int>(max_independent_set(*g).size());
  payload["block_signature"] = block_signature(build_subgroup_spec(g, out0_generators(*g)));
  auto tree = decomposition_tree(g);
  payload["decomposition"] = decomp_json(*tree);
  payload["leaves"] = tree_leaves(*tree);
  return make_report("analyze", *g, std::move(payload));
}

json cmd_nf(const std::string& path, const std::string& word) {
  Graph::Ptr g = load_graph_file(path);
  GroupElement a = parse_word(g, word);
  json payload;
  payload["input"] = word;
  payload["canonical"] = word_to_string(a);
  payload["length"] = a.length();
  payload["support"] = labels_of(*g, a.support());
  return make_report("nf", *g, std::move(payload));
}

json cmd_magnus(const std::string& path, const std::string& word, int degree, int64_t mod) {
  Graph::Ptr g = load_graph_file(path);
  GroupElement a = parse_word(g, word);
  int cap = degree >= 0 ? clamp_degree(degree, "--degree")
                        : std::min(max_degree_env(), std::max(1, a.length()));
  json payload;
  payload["word"] = word_to_string(a);
  payload["series"] = series_to_json(magnus(a, cap, mod));
  return make_report("magnus", *g, std::move(payload));
}

json cmd_depth(const std::string& path, const std::string& word, int cap) {
  Graph::Ptr g = load_graph_file(path);
  GroupElement a = parse_word(g, word);
  int use = cap >= 0 ? clamp_degree(cap, "--cap")
                     : std::min(max_degree_env(), std::max(8, a.length()));
  LcsDepth d = lcs_depth(a, use);
  json payload;
  payload["word"] = word_to_string(a);
  payload["cap"] = use;
  payload["depth"] = depth_to_string(d);
  payload["kind"] = d.kind == LcsDepth::Kind::Finite
                        ? "finite"
                        : (d.kind == LcsDepth::Kind::AtLeast ? "at_least" : "infinite");
  if (d.kind != LcsDepth::Kind::Infinite) payload["value"] = d.value;
  return make_report("depth", *g, std::move(payload));
}

json cmd_torelli(const std::string& path, bool with_tau1, bool with_h1) {
  Graph::Ptr g = load_graph_file(path);
  auto gens = torelli_generators(*g);
  json list = json::array();
  for (const Generator& gen : gens) {
    json e;
    e["name"] = torelli_name(gen);
    e["text"] = generator_to_string(*g, gen);
    if (with_tau1) {
      IntMatrix formula = tau1_formula(*g, gen);
      IntMatrix series = tau1_matrix(Automorphism::from_generator(g, gen));
      e["tau1_formula"] = matrix_json(formula);
      e["tau1_magnus"] = matrix_json(series);
      e["agree"] = formula == series;
    }
    list.push_back(std::move(e));
  }
  json payload;
  payload["count"] = static_cast<int>(gens.size());
  payload["generators"] = std::move(list);
  if (with_tau1) {
    json basis = json::array();
    for (auto [i, j] : l2_basis(*g))
      basis.push_back(json::array({g->label(i), g->label(j)}));
    payload["l2_basis"] = std::move(basis);
  }
  if (with_h1) {
    H1Report rep = torelli_h1_report(*g);
    payload["h1"]["generators"] = rep.generators;
    payload["h1"]["rank"] = rep.rank;
    payload["h1"]["ambient"] = rep.ambient;
  }
  return make_report("torelli", *g, std::move(payload));
}

json cmd_project(const std::string& path, const std::string& cls, const std::string& gens_text) {
  Graph::Ptr g = load_graph_file(path);
  int v = g->require(cls);
  std::vector<Generator> gens =
      gens_text.empty() ? out0_generators(*g) : parse_generator_list(*g, gens_text);
  MappedSet m = project_generator_set(g, v, gens);
  json payload = mapped_set_json(*g, gens, m);
  payload["class"] = labels_of(*g, preorder_analysis(*g).classes[preorder_analysis(*g).class_of[v]]);
  return make_report("project", *g, std::move(payload));
}

json cmd_restrict(const std::string& path, const std::string& comp, bool to_free,
                  const std::string& gens_text) {
  Graph::Ptr g = load_graph_file(path);
  std::vector<Generator> gens =
      gens_text.empty() ? out0_generators(*g) : parse_generator_list(*g, gens_text);
  MappedSet m;
  if (to_free) {
    m = exclude_generator_set(g, gens);
  } else {
    if (comp.empty())
      throw Error(errc::bad_argument, "restrict needs --component <vertex> or --free");
    int v = g->require(comp);
    VertexSet target;
    for (const VertexSet& c : connected_components(*g))
      if (vs_contains(c, v)) target = c;
    m = restrict_generator_set(g, target, gens);
  }
  json payload = mapped_set_json(*g, gens, m);
  return make_report(to_free ? "restrict --free" : "restrict", *g, std::move(payload));
}

json cmd_rank_bound(const std::string& path, int rank) {
  Graph::Ptr g = load_graph_file(path);
  RankBoundVerdict v = rank_bound_check(*g, rank);
  ObligationsReport ob = tmain_obligations(build_subgroup_spec(g, out0_generators(*g)));
  json payload;
  payload["d_sl"] = v.d_sl;
  payload["f_gamma"] = v.f_gamma;
  payload["real_rank"] = v.real_rank;
  payload["hypothesis_met"] = v.hypothesis_met;
  payload["applies"] = v.applies;
  payload["statement"] = v.statement;
  payload["obligations"]["m"] = ob.m;
  payload["obligations"]["f"] = ob.f;
  payload["obligations"]["list"] = ob.obligations;
  return make_report("rank-bound", *g, std::move(payload));
}

json cmd_corpus(int k, bool serial, bool& failures) {
  auto entries = run_corpus(k, !serial);
  json matrix = json::array();
  failures = false;
  for (const CorpusEntry& e : entries) {
    json row;
    row["id"] = e.id;
    row["graph"] = graph_to_json(*e.graph);
    row["pass"] = e.all_pass;
    json checks = json::array();
    for (const CheckResult& c : e.checks) {
      json ce;
      ce["name"] = c.name;
      ce["pass"] = c.pass;
      if (!c.pass) ce["detail"] = c.detail;
      checks.push_back(std::move(ce));
    }
    row["checks"] = std::move(checks);
    if (!e.all_pass) failures = true;
    matrix.push_back(std::move(row));
  }
  json payload;
  payload["max_vertices"] = k;
  payload["graphs"] = static_cast<int>(entries.size());
  payload["all_pass"] = !failures;
  payload["matrix"] = std::move(matrix);
  return make_report("corpus", std::move(payload));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in right-angled Artin groups and their automorphism groups"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON report");

  std::string graph_path, word_text, class_vertex, component_vertex, gens_text;
  int degree = -1, cap = -1, rank = -1, max_vertices = 4;
  bool with_tau1 = false, with_h1 = false, to_free = false, serial = false;

  auto* analyze = app.add_subcommand("analyze", "classes, center, d_SL, F, decomposition tree");
  analyze->add_option("graph", graph_path, "graph file (JSON or DOT)")->required();

  auto* nf = app.add_subcommand("nf", "canonical normal form of a word");
  nf->add_option("graph", graph_path)->required();
  nf->add_option("word", word_text, "word like \"v1 v2^-1\"")->required();

  auto* magnus_cmd = app.add_subcommand("magnus", "truncated Magnus expansion of a word");
  magnus_cmd->add_option("graph", graph_path)->required();
  magnus_cmd->add_option("word", word_text)->required();
  magnus_cmd->add_option("--degree", degree, "truncation degree (default: word length)");
  int64_t mod = 0;
  magnus_cmd->add_option("--mod", mod, "coefficient modulus (0 = integers)");

  auto* depth_cmd = app.add_subcommand("depth", "lower central series depth of a word");
  depth_cmd->add_option("graph", graph_path)->required();
  depth_cmd->add_option("word", word_text)->required();
  depth_cmd->add_option("--cap", cap, "search depth cap (default: max(8, length))");

  auto* torelli = app.add_subcommand("torelli", "Torelli generating set, tau1, H1 rank");
  torelli->add_option("graph", graph_path)->required();
  torelli->add_flag("--tau1", with_tau1, "include tau1 matrices (both routes)");
  torelli->add_flag("--h1", with_h1, "include the (generators, rank, ambient) triple");

  auto* tau1 = app.add_subcommand("tau1", "alias for torelli --tau1");
  tau1->add_option("graph", graph_path)->required();
  tau1->add_flag("--h1", with_h1);

  auto* project = app.add_subcommand("project", "project generators to the link of a maximal class");
  project->add_option("graph", graph_path)->required();
  project->add_option("--class", class_vertex, "a vertex of the maximal class")->required();
  project->add_option("--gens", gens_text, "semicolon-separated generators (default: Out^0 set)");

  auto* restrict_cmd = app.add_subcommand("restrict", "restrict generators to a component or the free part");
  restrict_cmd->add_option("graph", graph_path)->required();
  restrict_cmd->add_option("--component", component_vertex, "a vertex of the component");
  restrict_cmd->add_flag("--free", to_free, "map onto the isolated-vertex free group");
  restrict_cmd->add_option("--gens", gens_text);

  auto* rank_bound = app.add_subcommand("rank-bound", "rigidity verdict for a given real rank");
  rank_bound->add_option("graph", graph_path)->required();
  rank_bound->add_option("--rank", rank, "real rank of the acting group")->required();

  auto* corpus = app.add_subcommand("corpus", "invariant suite over all graphs on k vertices");
  corpus->add_option("--max-vertices", max_vertices, "vertex count (guarded at 6)")->required();
  corpus->add_flag("--serial", serial, "disable the parallel runner");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    nlohmann::json err;
    err["error"]["code"] = raag::errc::bad_argument;
    err["error"]["message"] = e.what();
    std::cout << raag::render_json(err, pretty);
    return 2;
  }

  int rc = 0;
  try {
    json report;
    if (app.got_subcommand(analyze)) {
      report = cmd_analyze(graph_path);
    } else if (app.got_subcommand(nf)) {
      report = cmd_nf(graph_path, word_text);
    } else if (app.got_subcommand(magnus_cmd)) {
      report = cmd_magnus(graph_path, word_text, degree, mod);
    } else if (app.got_subcommand(depth_cmd)) {
      report = cmd_depth(graph_path, word_text, cap);
    } else if (app.got_subcommand(torelli)) {
      report = cmd_torelli(graph_path, with_tau1, with_h1);
    } else if (app.got_subcommand(tau1)) {
      report = cmd_torelli(graph_path, true, with_h1);
    } else if (app.got_subcommand(project)) {
      report = cmd_project(graph_path, class_vertex, gens_text);
    } else if (app.got_subcommand(restrict_cmd)) {
      report = cmd_restrict(graph_path, component_vertex, to_free, gens_text);
    } else if (app.got_subcommand(rank_bound)) {
      report = cmd_rank_bound(graph_path, rank);
    } else if (app.got_subcommand(corpus)) {
      bool failures = false;
      report = cmd_corpus(max_vertices, serial, failures);
      if (failures) rc = 1;
    }
    std::cout << render_json(report, pretty);
  } catch (const Error& e) {
    std::cout << render_json(error_json(e), pretty);
    return 1;
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"]["code"] = "internal";
    err["error"]["message"] = e.what();
    std::cout << render_json(err, pretty);
    return 3;
  }
  return rc;
}
