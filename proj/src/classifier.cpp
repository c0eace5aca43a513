#include "choosekit/classifier.hpp"

#include <algorithm>
#include <set>

namespace choosekit {

// ---------------------------------------------------------------- minor steps

ReplayResult replay_steps(const Graph& g, const std::vector<MinorStep>& steps) {
  int n = g.num_vertices();
  std::vector<std::set<int>> adj(n);
  std::vector<char> alive(n, 1);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  ReplayResult r;
  auto check = [&](int v) {
    if (v < 0 || v >= static_cast<int>(alive.size()) || !alive[v])
      throw InputError("minor step refers to a missing vertex " + std::to_string(v));
  };
  for (const auto& s : steps) {
    r.created.push_back(-1);
    r.merged.emplace_back();
    switch (s.op) {
      case MinorStep::Op::delete_vertex:
        check(s.v);
        for (int w : adj[s.v]) adj[w].erase(s.v);
        adj[s.v].clear();
        alive[s.v] = 0;
        break;
      case MinorStep::Op::delete_edge:
        check(s.v);
        check(s.w);
        if (!adj[s.v].count(s.w)) throw InputError("minor step deletes a missing edge");
        adj[s.v].erase(s.w);
        adj[s.w].erase(s.v);
        break;
      case MinorStep::Op::identify: {
        check(s.v);
        if (adj[s.v].empty()) throw InputError("identify step on a vertex without neighbours");
        std::vector<int> nb(adj[s.v].begin(), adj[s.v].end());
        for (int w : nb) adj[w].erase(s.v);
        adj[s.v].clear();
        alive[s.v] = 0;
        int z = static_cast<int>(alive.size());
        alive.push_back(1);
        adj.emplace_back();
        std::set<int> group(nb.begin(), nb.end());
        for (int w : nb) {
          for (int x : adj[w])
            if (!group.count(x)) {
              adj[z].insert(x);
              adj[x].erase(w);
              adj[x].insert(z);
            }
          adj[w].clear();
          alive[w] = 0;
        }
        r.created.back() = z;
        r.merged.back() = nb;
        break;
      }
    }
  }
  std::vector<int> idx(alive.size(), -1);
  for (int v = 0; v < static_cast<int>(alive.size()); ++v)
    if (alive[v]) {
      idx[v] = r.graph.add_vertex(v < n ? g.name(v) : "#" + std::to_string(v));
      r.ids.push_back(v);
    }
  for (int v = 0; v < static_cast<int>(alive.size()); ++v)
    for (int w : adj[v])
      if (v < w) r.graph.add_edge(idx[v], idx[w]);
  return r;
}

// ---------------------------------------------------------------- recognizers

namespace {

// walks from `from` through `first` along degree-2 vertices; returns (end, interior)
std::pair<int, std::vector<int>> walk(const Graph& g, int from, int first) {
  std::vector<int> interior;
  int prev = from, cur = first;
  while (g.degree(cur) == 2) {
    interior.push_back(cur);
    int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
    prev = cur;
    cur = next;
    if (cur == from && g.degree(cur) == 2) break;
    if (static_cast<int>(interior.size()) > g.num_vertices()) break;
  }
  return {cur, interior};
}

bool is_cycle_graph(const Graph& g) {
  if (g.num_vertices() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

}  // namespace

std::optional<std::vector<int>> recognize_theta(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  std::vector<int> branch;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) < 2) return std::nullopt;
    if (g.degree(v) > 2) branch.push_back(v);
  }
  if (branch.size() != 2) return std::nullopt;
  int v = branch[0], w = branch[1];
  int k = g.degree(v);
  if (g.degree(w) != k || (k != 3 && k != 4)) return std::nullopt;
  std::vector<int> lens;
  for (int x : g.neighbors(v)) {
    auto [end, interior] = walk(g, v, x);
    if (end != w) return std::nullopt;
    lens.push_back(static_cast<int>(interior.size()) + 1);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

MixedForm recognize_mixed(const Graph& g) {
  MixedForm out;
  if (!is_connected(g)) return out;
  std::vector<int> branch;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) < 2 || g.degree(v) > 3) return out;
    if (g.degree(v) == 3) branch.push_back(v);
  }
  if (branch.size() != 4) return out;
  auto bp = bipartition(g);
  if (!bp.bipartite) return out;
  struct Path {
    int a, b;
    std::vector<int> interior;
  };
  std::vector<Path> paths;
  std::set<std::pair<int, int>> pairs;
  for (int v : branch)
    for (int x : g.neighbors(v)) {
      auto [end, interior] = walk(g, v, x);
      if (end == v || g.degree(end) != 3) return out;
      if (v < end) {
        if (!pairs.insert({v, end}).second) return out;
        paths.push_back({v, end, interior});
      }
    }
  if (paths.size() != 6) return out;
  int side0 = 0;
  for (int v : branch) side0 += bp.side[v] == 0;
  if (side0 != 2) return out;
  std::vector<const Path*> even, odd;
  for (const auto& p : paths) (bp.side[p.a] == bp.side[p.b] ? even : odd).push_back(&p);
  bool odd_short = true;
  for (const auto* p : odd) odd_short &= p->interior.empty();
  auto len = [](const Path* p) { return static_cast<int>(p->interior.size()) + 1; };
  if (len(even[0]) > len(even[1])) std::swap(even[0], even[1]);
  if (odd_short && len(even[0]) == 2) {
    out.kind = MixedForm::Kind::allowed;
    out.length = len(even[1]) - 2;
    out.subdivided.push_back(even[1]->a);
    for (int x : even[1]->interior) out.subdivided.push_back(x);
    out.subdivided.push_back(even[1]->b);
    return out;
  }
  out.kind = MixedForm::Kind::disallowed;
  out.pattern = odd_short ? "figZ" : "figY";
  return out;
}

// ---------------------------------------------------------------- classification

namespace {

struct BlockInfo {
  std::vector<int> verts;   // core vertices
  Graph graph;
  std::vector<int> attach;  // cut vertices of the core inside this block
  std::string type;         // C<len>, theta222, other
  int cycle_len = 0;
};

std::string describe(const BlockInfo& b) { return b.type; }

void fail(ClassificationResult& r, const std::string& kind, const std::string& name, const std::string& detail,
          std::vector<int> verts) {
  r.choosable = false;
  ObstructionDescriptor o;
  o.kind = kind;
  o.name = name;
  o.detail = detail;
  o.vertices = std::move(verts);
  r.obstruction = std::move(o);
}

std::vector<int> to_orig(const ClassificationResult& r, const std::vector<int>& vs) {
  std::vector<int> out;
  for (int v : vs) out.push_back(r.core_to_original[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ClassificationResult classify_42(const Graph& g, bool locate_obstruction) {
  if (g.num_vertices() == 0) throw InputError("empty graph");
  if (!is_connected(g)) throw InputError("graph is disconnected; classify each component");
  ClassificationResult r;
  Core c = core(g);
  r.core = c.graph;
  r.core_to_original = c.to_original;
  const Graph& h = r.core;
  r.trace.push_back("core has " + std::to_string(h.num_vertices()) + " vertices and " +
                    std::to_string(h.num_edges()) + " edges");
  if (h.num_vertices() == 1) {
    r.choosable = true;
    r.case_tag = "i";
    r.trace.push_back("core is K1");
    return r;
  }
  auto bp = bipartition(h);
  if (!bp.bipartite) {
    std::vector<int> cyc(bp.odd_cycle.begin(), bp.odd_cycle.end() - 1);
    fail(r, "odd_cycle", "C" + std::to_string(cyc.size()), "odd cycle of length " + std::to_string(cyc.size()),
         to_orig(r, cyc));
    r.trace.push_back("not bipartite");
    if (locate_obstruction) r.obstruction = find_obstruction(g);
    return r;
  }
  r.trace.push_back("bipartite");
  auto bd = blocks(h);
  std::vector<BlockInfo> cyc;
  for (const auto& b : bd.blocks) {
    if (b.size() < 3) continue;
    BlockInfo bi;
    bi.verts = b;
    bi.graph = induced_subgraph(h, b);
    for (int v : b)
      if (bd.block_count[v] >= 2) bi.attach.push_back(v);
    if (is_cycle_graph(bi.graph)) {
      bi.cycle_len = bi.graph.num_vertices();
      bi.type = "C" + std::to_string(bi.cycle_len);
    } else if (auto th = recognize_theta(bi.graph); th && *th == std::vector<int>{2, 2, 2}) {
      bi.type = "theta222";
    } else {
      bi.type = "other";
    }
    cyc.push_back(std::move(bi));
  }
  r.trace.push_back(std::to_string(cyc.size()) + " cyclic block(s)");
  auto all_verts = [&](std::initializer_list<const BlockInfo*> bs) {
    std::vector<int> vs;
    for (auto* b : bs) vs.insert(vs.end(), b->verts.begin(), b->verts.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return to_orig(r, vs);
  };

  auto locate = [&]() {
    if (locate_obstruction) {
      auto keep = r.obstruction;
      r.obstruction = find_obstruction(g);
      if (keep && r.obstruction->kind != "gbad_member" && r.obstruction->kind != "gcycles_member" &&
          r.obstruction->kind != "mixed_violation") {
        keep->embedding = r.obstruction->embedding;
        r.obstruction = keep;
      }
    }
  };

  if (cyc.size() == 1) {
    const Graph& b = cyc[0].graph;
    if (b.num_vertices() != h.num_vertices()) throw std::logic_error("core with one cyclic block has extra vertices");
    if (cyc[0].cycle_len) {
      r.choosable = true;
      r.case_tag = "ii";
      r.params["s"] = cyc[0].cycle_len / 2;
      r.trace.push_back("even cycle");
      return r;
    }
    if (auto th = recognize_theta(h)) {
      const auto& L = *th;
      if (L.size() == 3) {
        r.trace.push_back("theta(" + std::to_string(L[0]) + "," + std::to_string(L[1]) + "," + std::to_string(L[2]) + ")");
        if (L[0] == 2) {
          r.choosable = true;
          r.case_tag = "iii";
          r.params["s"] = L[1] / 2;
          r.params["t"] = L[2] / 2;
          return r;
        }
        if (L[0] == 1) {
          r.choosable = true;
          r.case_tag = "iv";
          r.params["s"] = (L[1] - 1) / 2;
          r.params["t"] = (L[2] - 1) / 2;
          return r;
        }
      } else {
        r.trace.push_back("theta with four paths");
        if (L == std::vector<int>{2, 2, 2, 2}) {
          r.choosable = true;
          r.case_tag = "v";
          return r;
        }
      }
    }
    auto mx = recognize_mixed(h);
    if (mx.kind == MixedForm::Kind::allowed) {
      r.choosable = true;
      r.case_tag = "vi";
      r.params["length"] = mx.length;
      r.trace.push_back("subdivided K33-e, added length " + std::to_string(mx.length));
      return r;
    }
    r.choosable = false;
    if (mx.kind == MixedForm::Kind::disallowed) {
      r.trace.push_back("subdivided K33-e outside the allowed form");
      fail(r, "mixed_violation", mx.pattern, "subdivided K33-e outside the allowed form", r.core_to_original);
    }
    if (locate_obstruction) r.obstruction = find_obstruction(g);
    if (!r.obstruction) fail(r, "block_shape", "2-connected", "2-connected core of no allowed form", r.core_to_original);
    return r;
  }

  if (cyc.size() == 2) {
    const BlockInfo *a = &cyc[0], *b = &cyc[1];
    r.trace.push_back("blocks " + describe(*a) + ", " + describe(*b));
    if (a->cycle_len && b->cycle_len) {
      r.choosable = true;
      r.case_tag = "vii";
      r.params["s"] = std::min(a->cycle_len, b->cycle_len) / 2;
      r.params["t"] = std::max(a->cycle_len, b->cycle_len) / 2;
      return r;
    }
    if (b->type == "theta222") std::swap(a, b);
    if (a->type == "theta222" && b->cycle_len) {
      r.choosable = true;
      r.case_tag = "viii";
      r.params["s"] = b->cycle_len / 2;
      return r;
    }
    fail(r, "block_shape", describe(*a) + "+" + describe(*b), "two cyclic blocks other than two cycles or theta222 with a cycle",
         all_verts({a, b}));
    locate();
    return r;
  }

  if (cyc.size() == 3) {
    r.trace.push_back("blocks " + describe(cyc[0]) + ", " + describe(cyc[1]) + ", " + describe(cyc[2]));
    int middle = -1, ends = 0;
    for (int i = 0; i < 3; ++i) {
      if (cyc[i].attach.size() == 2 && middle < 0)
        middle = i;
      else if (cyc[i].attach.size() == 1)
        ++ends;
    }
    auto all3 = all_verts({&cyc[0], &cyc[1], &cyc[2]});
    if (middle < 0 || ends != 2) {
      fail(r, "block_shape", "branching", "cyclic blocks do not form a path", all3);
      locate();
      return r;
    }
    for (const auto& b : cyc)
      if (!b.cycle_len) {
        fail(r, "block_shape", b.type, "three cyclic blocks must all be cycles", all3);
        locate();
        return r;
      }
    const BlockInfo& mid = cyc[middle];
    if (mid.cycle_len != 4) {
      fail(r, "c4_position", mid.type, "middle block of the block path is not a 4-cycle", all3);
      locate();
      return r;
    }
    if (h.has_edge(mid.attach[0], mid.attach[1])) {
      fail(r, "adjacent_cut_vertices", "C4", "cut vertices of the middle 4-cycle are adjacent", all3);
      locate();
      return r;
    }
    std::vector<int> lens;
    for (int i = 0; i < 3; ++i)
      if (i != middle) lens.push_back(cyc[i].cycle_len / 2);
    std::sort(lens.begin(), lens.end());
    r.choosable = true;
    r.case_tag = "ix";
    r.params["s"] = lens[0];
    r.params["t"] = lens[1];
    return r;
  }

  std::vector<int> vs;
  for (const auto& b : cyc) vs.insert(vs.end(), b.verts.begin(), b.verts.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  fail(r, "block_count", std::to_string(cyc.size()), "more than three cyclic blocks", to_orig(r, vs));
  locate();
  return r;
}

bool classify_42_components(const Graph& g, std::vector<ClassificationResult>* per) {
  bool ok = true;
  for (const auto& comp : connected_components(g)) {
    Graph h = induced_subgraph(g, comp);
    auto r = classify_42(h, per != nullptr);
    ok &= r.choosable;
    if (per) per->push_back(std::move(r));
    if (!ok && !per) break;
  }
  return ok;
}

Classification21 classify_21(const Graph& g) {
  if (!is_connected(g)) throw InputError("graph is disconnected; classify each component");
  Classification21 r;
  Graph h = core(g).graph;
  if (h.num_vertices() == 1) {
    r.choosable = true;
    r.form = "K1";
    return r;
  }
  if (is_cycle_graph(h)) {
    r.choosable = h.num_vertices() % 2 == 0;
    r.form = r.choosable ? "C2s" : "odd cycle";
    if (r.choosable) r.params["s"] = h.num_vertices() / 2;
    return r;
  }
  if (auto th = recognize_theta(h); th && th->size() == 3 && (*th)[0] == 2 && (*th)[1] == 2 && (*th)[2] % 2 == 0) {
    r.choosable = true;
    r.form = "theta(2,2,2s)";
    r.params["s"] = (*th)[2] / 2;
    return r;
  }
  r.form = "core is not K1, an even cycle or theta(2,2,2s)";
  return r;
}

ReductionTrace reduce_instance(const Graph& g) {
  if (!is_connected(g)) throw InputError("graph is disconnected");
  ReductionTrace t;
  Core c = core(g);
  t.graph = c.graph;
  t.to_original = c.to_original;
  t.steps.push_back("core: removed " + std::to_string(g.num_vertices() - c.graph.num_vertices()) + " vertices");
  t.stages.push_back(t.graph);
  while (true) {
    const Graph& h = t.graph;
    std::optional<Contraction> next;
    std::string what;
    for (int v = 0; v < h.num_vertices() && !next; ++v)
      if (is_degree2_path_center(h, v)) {
        next = contract_degree2_path(h, v);
        what = "contract degree-2 path at " + h.name(v);
      }
    if (!next)
      for (auto [u, v] : h.edges())
        if (is_cut_edge(h, u, v)) {
          next = contract_cut_edge(h, u, v);
          what = "contract cut edge " + h.name(u) + " " + h.name(v);
          break;
        }
    if (!next) break;
    std::vector<int> orig(next->graph.num_vertices(), -1);
    for (int v = 0; v < h.num_vertices(); ++v) {
      int nv = next->to_new[v];
      if (nv >= 0 && orig[nv] < 0) orig[nv] = t.to_original[v];
    }
    t.graph = next->graph;
    t.to_original = orig;
    t.steps.push_back(what);
    t.stages.push_back(t.graph);
  }
  return t;
}

// ---------------------------------------------------------------- JSON

nlohmann::json to_json(const Graph& g, const ObstructionDescriptor& o) {
  nlohmann::json j;
  j["kind"] = o.kind;
  j["name"] = o.name;
  if (!o.detail.empty()) j["detail"] = o.detail;
  std::vector<std::string> vs;
  for (int v : o.vertices) vs.push_back(g.name(v));
  j["vertices"] = vs;
  if (o.embedding) {
    auto name = [&](int id) { return id < g.num_vertices() ? g.name(id) : "#" + std::to_string(id); };
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : o.embedding->steps) {
      switch (s.op) {
        case MinorStep::Op::delete_vertex:
          steps.push_back({{"op", "delete_vertex"}, {"v", name(s.v)}});
          break;
        case MinorStep::Op::delete_edge:
          steps.push_back({{"op", "delete_edge"}, {"v", name(s.v)}, {"w", name(s.w)}});
          break;
        case MinorStep::Op::identify:
          steps.push_back({{"op", "identify"}, {"v", name(s.v)}});
          break;
      }
    }
    j["embedding"] = {{"steps", steps}, {"target", to_edge_list(o.embedding->target)}};
  }
  return j;
}

nlohmann::json to_json(const Graph& g, const ClassificationResult& r) {
  nlohmann::json j;
  j["verdict"] = r.choosable ? "choosable" : "not_choosable";
  j["case"] = r.choosable ? nlohmann::json(r.case_tag) : nlohmann::json(nullptr);
  j["params"] = r.params;
  if (r.obstruction) j["obstruction"] = to_json(g, *r.obstruction);
  j["trace"] = r.trace;
  return j;
}

}  // namespace choosekit
