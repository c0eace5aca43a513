#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "choosekit/classifier.hpp"
#include "choosekit/flat.hpp"
#include "choosekit/witnesses.hpp"
#include "json.hpp"

using namespace choosekit;
using nlohmann::json;

namespace {

constexpr int kYes = 0, kNo = 1, kUsage = 2;

struct Inputs {
  std::string graph_file, named, lists_file;
  int a = 4, b = 2, pot_bound = 8, workers = 0, depth = kDefaultFlatDepth;
  bool json_out = false;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const Inputs& in) {
  if (in.graph_file.empty() == in.named.empty()) throw InputError("give exactly one of --graph and --named");
  return in.named.empty() ? parse_edge_list(read_file(in.graph_file)) : build_named(in.named);
}

ParsedLists load_lists(const Inputs& in, const Graph& g) {
  if (in.lists_file.empty()) throw InputError("--lists is required");
  return parse_lists(g, read_file(in.lists_file));
}

json lists_json(const Graph& g, const ListAssignment& L) {
  json j = json::object();
  for (int v = 0; v < g.num_vertices(); ++v) j[g.name(v)] = set_colors(L[v]);
  return j;
}

void emit(const Inputs& in, const json& j, const std::string& text) {
  if (in.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string counts_text(const std::map<int, std::uint64_t>& counts) {
  std::string s;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it)
    s += (s.empty() ? "" : ",") + std::to_string(it->first) + ":" + std::to_string(it->second);
  return s;
}

json counts_json(const std::map<int, std::uint64_t>& counts) {
  json j = json::object();
  for (auto& [k, v] : counts) j[std::to_string(k)] = v;
  return j;
}

std::map<int, std::uint64_t> parse_counts(const std::string& s) {
  std::map<int, std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("expected pot:count pairs, got '" + item + "'");
    try {
      out[std::stoi(item.substr(0, colon))] = std::stoull(item.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw InputError("expected pot:count pairs, got '" + item + "'");
    }
  }
  return out;
}

EnumOptions enum_options(const Inputs& in, bool exact) {
  EnumOptions o;
  o.depth = in.depth;
  o.workers = in.workers;
  o.exact_flat = exact;
  return o;
}

int cmd_classify(const Inputs& in) {
  Graph g = load_graph(in);
  if (in.a == 2 && in.b == 1) {
    json comps = json::array();
    bool ok = true;
    std::string text;
    for (const auto& comp : connected_components(g)) {
      auto r = classify_21(induced_subgraph(g, comp));
      ok &= r.choosable;
      comps.push_back({{"verdict", r.choosable ? "choosable" : "not_choosable"}, {"form", r.form}, {"params", r.params}});
      text += (r.choosable ? "choosable: " : "not choosable: ") + r.form + "\n";
    }
    json j = comps.size() == 1 ? comps[0] : json{{"verdict", ok ? "choosable" : "not_choosable"}, {"components", comps}};
    emit(in, j, text);
    return ok ? kYes : kNo;
  }
  if (in.a != 4 || in.b != 2) throw InputError("classify supports (a,b) = (4,2) or (2,1)");
  auto comps = connected_components(g);
  json parts = json::array();
  bool ok = true;
  std::string text;
  for (const auto& comp : comps) {
    Graph h = induced_subgraph(g, comp);
    auto r = classify_42(h);
    ok &= r.choosable;
    parts.push_back(to_json(h, r));
    if (r.choosable) {
      text += "choosable, case (" + r.case_tag + ")";
      for (auto& [k, v] : r.params) text += " " + k + "=" + std::to_string(v);
      text += "\n";
    } else {
      text += "not choosable: " + r.obstruction->kind + " " + r.obstruction->name + "\n";
    }
  }
  json j = comps.size() == 1 ? parts[0] : json{{"verdict", ok ? "choosable" : "not_choosable"}, {"components", parts}};
  if (!ok && in.json_out) {
    auto w = find_witness(g);
    if (w) j["witness"] = to_json(*w);
  }
  emit(in, j, text);
  return ok ? kYes : kNo;
}

int cmd_solve(const Inputs& in, bool b_given) {
  Graph g = load_graph(in);
  auto pl = load_lists(in, g);
  int b = b_given ? in.b : pl.b.value_or(in.b);
  auto phi = find_bfold_coloring(g, pl.lists, b);
  json j = {{"b", b}, {"coloring", phi ? lists_json(g, *phi) : json(nullptr)}};
  std::string text;
  if (phi)
    for (int v = 0; v < g.num_vertices(); ++v) text += g.name(v) + ": " + format_set((*phi)[v]) + "\n";
  else
    text = "no " + std::to_string(b) + "-fold coloring\n";
  emit(in, j, text);
  return phi ? kYes : kNo;
}

int cmd_verify(const Inputs& in) {
  Graph g = load_graph(in);
  auto c = verify_choosable(g, in.a, in.b, in.pot_bound, enum_options(in, false));
  json j = {{"choosable", c.choosable},
            {"pot_bound", in.pot_bound},
            {"checked", c.checked},
            {"leaves", c.stats.leaves},
            {"canonical", c.stats.canonical}};
  std::string text;
  if (c.choosable) {
    text = "certified: every locally flat " + std::to_string(in.a) + "-assignment with pot <= " +
           std::to_string(in.pot_bound) + " is colourable (" + std::to_string(c.checked) + " checked)\n";
  } else {
    j["counterexample"] = lists_json(g, *c.counterexample);
    text = "counterexample: " + format_assignment(g, *c.counterexample) + "\n";
  }
  emit(in, j, text);
  return c.choosable ? kYes : kNo;
}

int cmd_enumerate(const Inputs& in) {
  Graph g = load_graph(in);
  auto c = enumerate_flat(g, in.a, in.pot_bound, enum_options(in, true));
  json reps = json::array();
  std::string text;
  for (const auto& L : c.representatives) {
    reps.push_back(format_assignment(g, L));
    text += format_assignment(g, L) + "\n";
  }
  text += "counts " + counts_text(c.counts) + "\n";
  emit(in, {{"counts", counts_json(c.counts)}, {"representatives", reps}}, text);
  return kYes;
}

int cmd_census(const Inputs& in, const std::string& expect) {
  Graph g = load_graph(in);
  auto c = enumerate_flat(g, in.a, in.pot_bound, enum_options(in, true));
  json j = {{"counts", counts_json(c.counts)}, {"total", c.representatives.size()}};
  std::string text = counts_text(c.counts) + "\n";
  int code = kYes;
  if (!expect.empty()) {
    bool match = parse_counts(expect) == c.counts;
    j["expected"] = counts_json(parse_counts(expect));
    j["match"] = match;
    text += match ? "matches expected\n" : "differs from expected " + expect + "\n";
    code = match ? kYes : kNo;
  }
  emit(in, j, text);
  return code;
}

int cmd_forcing(const Inputs& in, const std::string& vertex) {
  Graph g = load_graph(in);
  auto pl = load_lists(in, g);
  std::vector<int> targets;
  if (vertex.empty()) {
    for (int v = 0; v < g.num_vertices(); ++v) targets.push_back(v);
  } else {
    int v = g.find(vertex);
    if (v < 0) throw InputError("unknown vertex " + vertex);
    targets.push_back(v);
  }
  json arr = json::array();
  std::string text;
  for (int v : targets) {
    auto r = forcing_analysis(g, pl.lists, v, in.b);
    std::vector<std::string> allowed;
    for (ColorSet s : r.allowed) allowed.push_back(format_set(s));
    arr.push_back({{"vertex", g.name(v)}, {"shape", r.shape}, {"k", r.k}, {"allowed", allowed}});
    text += g.name(v) + ": " + r.shape + " {";
    for (size_t i = 0; i < allowed.size(); ++i) text += (i ? "," : "") + allowed[i];
    text += "}\n";
  }
  emit(in, arr, text);
  return kYes;
}

int cmd_witness(const Inputs& in) {
  Graph g = load_graph(in);
  auto w = find_witness(g);
  if (!w) {
    emit(in, {{"witness", nullptr}, {"verdict", "choosable"}}, "choosable: no witness exists\n");
    return kYes;
  }
  std::string text = format_lists(g, w->lists);
  for (const auto& p : w->provenance) text += "# " + p + "\n";
  emit(in, to_json(*w), text);
  return kNo;
}

int cmd_construct(const Inputs& in, int m) {
  auto c = construct_non_2mm(m);
  std::optional<MultiColoring> phi;
  std::string method;
  if (m <= 2) {
    phi = path_dp_solve(c.graph, c.lists, m);
    method = "path_dp";
  } else {
    phi = find_bfold_coloring(c.graph, c.lists, m);
    method = "backtracking";
  }
  json j = {{"m", m},
            {"vertices", c.graph.num_vertices()},
            {"graph", to_edge_list(c.graph)},
            {"lists", lists_json(c.graph, c.lists)},
            {"solver", method},
            {"colorable", phi.has_value()}};
  std::string text = format_lists(c.graph, c.lists);
  text += phi ? "# unexpected: a coloring exists\n" : "# no " + std::to_string(m) + "-fold coloring (" + method + ")\n";
  emit(in, j, text);
  return phi ? kNo : kYes;
}

int cmd_catalogue(const Inputs& in) {
  auto rep = verify_catalogue();
  json arr = json::array();
  std::string text;
  for (const auto& e : rep.entries) {
    arr.push_back({{"id", e.id}, {"ok", e.ok}, {"messages", e.messages}});
    text += e.id + ": " + (e.ok ? "ok" : "FAILED");
    for (const auto& m : e.messages) text += "; " + m;
    text += "\n";
  }
  emit(in, {{"ok", rep.ok()}, {"entries", arr}}, text);
  return rep.ok() ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"list-colouring choosability toolkit"};
  app.require_subcommand(1);
  Inputs in;
  auto graph_opts = [&](CLI::App* s) {
    s->add_option("--graph", in.graph_file, "edge-list file, - for stdin");
    s->add_option("--named", in.named, "named graph, e.g. theta(2,2,4)");
    s->add_flag("--json", in.json_out, "machine-readable output");
  };
  auto search_opts = [&](CLI::App* s) {
    s->add_option("--a", in.a, "list size")->check(CLI::Range(1, 8));
    s->add_option("--b", in.b, "colours per vertex")->check(CLI::Range(1, 8));
    s->add_option("--pot-bound", in.pot_bound, "largest pot searched")->check(CLI::Range(1, kMaxColor));
    s->add_option("--workers", in.workers, "OpenMP threads (default CHOOSEKIT_WORKERS)")->check(CLI::NonNegativeNumber);
    s->add_option("--depth", in.depth, "flattening sequence depth, -1 unbounded")->check(CLI::Range(-1, 16));
  };

  auto* classify = app.add_subcommand("classify", "decide (4,2)- or (2,1)-choosability");
  graph_opts(classify);
  classify->add_option("--a", in.a, "list size");
  classify->add_option("--b", in.b, "colours per vertex");

  auto* solve = app.add_subcommand("solve", "find a b-fold list coloring");
  graph_opts(solve);
  solve->add_option("--lists", in.lists_file, "list file (text or JSON)");
  auto* solve_b = solve->add_option("--b", in.b, "colours per vertex")->check(CLI::Range(1, 16));

  auto* verify = app.add_subcommand("verify", "certify choosability over flat assignments");
  graph_opts(verify);
  search_opts(verify);

  auto* enumerate = app.add_subcommand("enumerate-flat", "list flat assignments up to isomorphism");
  graph_opts(enumerate);
  search_opts(enumerate);

  std::string expect;
  auto* census = app.add_subcommand("census", "count flat assignments by pot size");
  graph_opts(census);
  search_opts(census);
  census->add_option("--expect", expect, "expected counts, e.g. 6:1,5:2,4:1");

  std::string vertex;
  auto* forcing = app.add_subcommand("forcing", "allowed colorings of a vertex");
  graph_opts(forcing);
  forcing->add_option("--lists", in.lists_file, "list file (text or JSON)");
  forcing->add_option("--vertex", vertex, "vertex name; all vertices when omitted");
  forcing->add_option("--b", in.b, "colours per vertex")->check(CLI::Range(1, 16));

  bool autow = false;
  auto* witness = app.add_subcommand("witness", "bad 4-assignment for a non-choosable graph");
  graph_opts(witness);
  witness->add_flag("--auto", autow, "locate the obstruction and lift a catalogue witness")->required();

  int m = 1;
  auto* construct = app.add_subcommand("construct", "graph that is not (2m,m)-choosable");
  construct->add_option("--m", m, "m")->required()->check(CLI::Range(1, 4));
  construct->add_flag("--json", in.json_out, "machine-readable output");

  auto* check = app.add_subcommand("catalogue-check", "verify every catalogue entry");
  check->add_flag("--json", in.json_out, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    if (*classify) return cmd_classify(in);
    if (*solve) return cmd_solve(in, solve_b->count() > 0);
    if (*verify) return cmd_verify(in);
    if (*enumerate) return cmd_enumerate(in);
    if (*census) return cmd_census(in, expect);
    if (*forcing) return cmd_forcing(in, vertex);
    if (*witness) return cmd_witness(in);
    if (*construct) return cmd_construct(in, m);
    if (*check) return cmd_catalogue(in);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
