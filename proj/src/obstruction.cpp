#include <algorithm>

#include "choosekit/classifier.hpp"
#include "choosekit/witnesses.hpp"

namespace choosekit {

namespace {

using Op = MinorStep::Op;

bool two_connected(const Graph& h) {
  return h.num_vertices() >= 3 && is_connected(h) && blocks(h).blocks.size() == 1;
}

// Appends deletions keeping the first non-choosable component, then peels leaves.
// Returns false when every component is choosable.
bool tidy(const Graph& g, std::vector<MinorStep>& steps, ReplayResult& r) {
  r = replay_steps(g, steps);
  if (r.graph.num_vertices() == 0) return false;
  std::vector<int> keep;
  for (const auto& comp : connected_components(r.graph)) {
    Graph h = induced_subgraph(r.graph, comp);
    if (!classify_42(h, false).choosable) {
      keep = comp;
      break;
    }
  }
  if (keep.empty()) return false;
  Graph h = induced_subgraph(r.graph, keep);
  Core c = core(h);
  std::vector<char> stay(r.graph.num_vertices(), 0);
  for (int v : c.to_original) stay[keep[v]] = 1;
  bool changed = false;
  for (int v = 0; v < r.graph.num_vertices(); ++v)
    if (!stay[v]) {
      steps.push_back({Op::delete_vertex, r.ids[v], -1});
      changed = true;
    }
  if (changed) r = replay_steps(g, steps);
  return true;
}

std::vector<MinorStep> candidate_ops(const ReplayResult& r) {
  const Graph& h = r.graph;
  std::vector<MinorStep> ops;
  for (int v = 0; v < h.num_vertices(); ++v) ops.push_back({Op::delete_vertex, r.ids[v], -1});
  for (auto [u, v] : h.edges()) ops.push_back({Op::delete_edge, r.ids[u], r.ids[v]});
  for (int v = 0; v < h.num_vertices(); ++v)
    if (h.degree(v) == 2) ops.push_back({Op::identify, r.ids[v], -1});
  for (int v = 0; v < h.num_vertices(); ++v)
    if (h.degree(v) > 2) ops.push_back({Op::identify, r.ids[v], -1});
  return ops;
}

// greedy descent to a minimal non-choosable strong minor
StrongMinorEmbedding descend(const Graph& g, bool keep_2conn) {
  std::vector<MinorStep> steps;
  ReplayResult r;
  if (!tidy(g, steps, r)) throw InputError("graph is (4,2)-choosable; no obstruction exists");
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& op : candidate_ops(r)) {
      auto trial = steps;
      trial.push_back(op);
      ReplayResult tr;
      if (!tidy(g, trial, tr)) continue;
      if (keep_2conn && !two_connected(tr.graph)) continue;
      steps = std::move(trial);
      r = std::move(tr);
      progress = true;
      break;
    }
  }
  return {steps, r.graph, r.ids};
}

const CatalogueEntry* match_catalogue(const Graph& h) {
  for (const auto& e : catalogue()) {
    if (e.kind != CatalogueEntry::Kind::bad) continue;
    if (e.graph.num_vertices() != h.num_vertices() || e.graph.num_edges() != h.num_edges()) continue;
    if (is_isomorphic(e.graph, h)) return &e;
  }
  return nullptr;
}

std::vector<int> original_vertices(const Graph& g, const StrongMinorEmbedding& emb) {
  std::vector<int> vs;
  for (int id : emb.target_ids)
    if (id < g.num_vertices()) vs.push_back(id);
  std::sort(vs.begin(), vs.end());
  return vs;
}

ObstructionDescriptor odd_cycle_obstruction(const Graph& g, const Bipartition& bp) {
  std::vector<int> cyc(bp.odd_cycle.begin(), bp.odd_cycle.end() - 1);
  // shorten through chords until the cycle is induced
  bool again = true;
  while (again) {
    again = false;
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k && !again; ++i)
      for (int j = i + 2; j < k && !again; ++j) {
        if (i == 0 && j == k - 1) continue;
        if (!g.has_edge(cyc[i], cyc[j])) continue;
        // the chord splits the cycle in two; one part is odd
        std::vector<int> a(cyc.begin() + i, cyc.begin() + j + 1);
        std::vector<int> b(cyc.begin() + j, cyc.end());
        b.insert(b.end(), cyc.begin(), cyc.begin() + i + 1);
        cyc = a.size() % 2 == 1 ? a : b;
        again = true;
      }
  }
  StrongMinorEmbedding emb;
  std::vector<char> on(g.num_vertices(), 0);
  for (int v : cyc) on[v] = 1;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!on[v]) emb.steps.push_back({Op::delete_vertex, v, -1});
  auto r = replay_steps(g, emb.steps);
  emb.target = r.graph;
  emb.target_ids = r.ids;
  ObstructionDescriptor o;
  o.kind = "odd_cycle";
  o.name = "C" + std::to_string(cyc.size());
  o.detail = "odd cycle of length " + std::to_string(cyc.size());
  o.vertices = cyc;
  std::sort(o.vertices.begin(), o.vertices.end());
  o.embedding = std::move(emb);
  return o;
}

}  // namespace

ObstructionDescriptor find_obstruction(const Graph& g) {
  if (g.num_vertices() == 0) throw InputError("empty graph");
  auto bp = bipartition(g);
  if (!bp.bipartite) return odd_cycle_obstruction(g, bp);
  if (classify_42_components(g)) throw InputError("graph is (4,2)-choosable; no obstruction exists");

  std::vector<StrongMinorEmbedding> tries;
  bool biconnected_core = is_connected(g) && two_connected(core(g).graph);
  if (biconnected_core) tries.push_back(descend(g, true));
  if (tries.empty() || !match_catalogue(tries.back().target)) tries.push_back(descend(g, false));

  for (auto& emb : tries) {
    if (const auto* e = match_catalogue(emb.target)) {
      ObstructionDescriptor o;
      o.kind = e->family == "gbad" ? "gbad_member" : e->family == "gcycles" ? "gcycles_member" : "mixed_violation";
      o.name = e->member.empty() ? e->id : e->member;
      o.detail = "strong minor isomorphic to catalogue entry " + e->id;
      o.vertices = original_vertices(g, emb);
      o.embedding = emb;
      return o;
    }
  }
  // no catalogue graph reached: report the block rule on the minimal graph
  auto& emb = tries.back();
  auto cr = classify_42(emb.target, false);
  ObstructionDescriptor o;
  if (cr.obstruction) {
    o = *cr.obstruction;
  } else {
    o.kind = "block_shape";
    o.name = "unmatched";
  }
  o.detail = (o.detail.empty() ? "" : o.detail + "; ") + "minimal strong minor has " +
             std::to_string(emb.target.num_vertices()) + " vertices";
  o.vertices = original_vertices(g, emb);
  o.embedding = emb;
  return o;
}

}  // namespace choosekit
