#include "choosekit/witnesses.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "choosekit/figure_data.hpp"
#include "choosekit/flat.hpp"

namespace choosekit {

// ---------------------------------------------------------------- catalogue

namespace {

struct ChainSpec {
  const char* root;
  const char* set;
  std::vector<std::pair<const char*, const char*>> steps;  // "" set = no colouring left
};

struct EntrySpec {
  const char* id;
  const char* family;
  const char* member;
  std::vector<std::tuple<const char*, const char*, std::vector<const char*>>> claims;
  std::vector<ChainSpec> chains;
};

const std::vector<EntrySpec>& entry_specs() {
  static const std::vector<EntrySpec> specs = {
      {"figS", "gcycles", "", {}, {}},
      {"figT", "gcycles", "", {}, {}},
      {"figU", "gcycles", "", {}, {}},
      {"figP", "gcycles", "", {}, {}},
      {"figR", "gcycles", "", {}, {}},
      {"figE", "gbad", "K(3,3)", {}, {}},
      {"figN", "gbad", "K(2,5)", {}, {}},
      {"figQ", "gbad", "cube_minus_vertex", {}, {}},
      {"figY", "mixed", "", {},
       {{"x", "12", {{"w", "34"}, {"v", "15"}, {"u", "26"}, {"t", "13"}, {"y", ""}}},
        {"x", "14", {{"s", "56"}, {"r", "13"}, {"w", ""}}},
        {"x", "15", {{"y", "23"}, {"t", "16"}, {"s", ""}}},
        {"x", "24", {{"w", "13"}, {"r", "56"}, {"s", ""}}},
        {"x", "25", {{"y", "13"}, {"t", "26"}, {"u", "15"}, {"v", "34"}, {"w", ""}}},
        {"x", "45", {{"s", "16"}, {"t", "23"}, {"y", ""}}}}},
      {"figZ", "mixed", "", {},
       {{"t", "12", {{"s", "34"}, {"r", "15"}, {"q", "23"}, {"p", "14"}, {"u", ""}}},
        {"t", "14", {{"y", "35"}, {"x", "46"}, {"w", "23"}, {"v", "15"}, {"u", ""}}},
        {"t", "15", {{"u", "24"}, {"p", "13"}, {"y", ""}}},
        {"t", "24", {{"u", "15"}, {"v", "23"}, {"w", "46"}, {"x", "35"}, {"y", ""}}},
        {"t", "25", {{"u", "14"}, {"p", "23"}, {"q", "15"}, {"r", "34"}, {"s", ""}}},
        {"t", "45", {{"y", "13"}, {"p", "24"}, {"u", ""}}}}},
      {"figWW", "forcing", "", {{"v1", "3_in", {"14", "24", "34"}}, {"v2", "3_out", {"12", "13", "23"}}}, {}},
      {"figXX", "forcing", "", {{"v1", "3_out", {"13", "14", "34"}}, {"v2", "3_in", {"12", "23", "24"}}}, {}},
      {"figUU", "forcing", "", {{"r", "2_in", {"14", "24"}}, {"w", "2_in", {"13", "23"}}}, {}},
      {"figVV", "forcing", "", {{"v", "2_in", {"14", "24"}}},
       {{"v", "12", {{"w", "35"}, {"x", "14"}, {"s", "26"}, {"t", ""}}},
        {"v", "13", {{"w", "25"}, {"t", "16"}, {"u", ""}}},
        {"v", "23", {{"w", "15"}, {"t", "26"}, {"s", "14"}, {"x", ""}}},
        {"v", "34", {{"u", "16"}, {"t", "25"}, {"w", ""}}}}},
      {"figAA", "forcing", "",
       {{"w", "2_in", {"14", "24"}}, {"r", "2_in", {"15", "25"}}, {"v", "2_in", {"13", "23"}}},
       {{"w", "12", {{"v", "34"}, {"u", "15"}, {"t", "23"}, {"s", "14"}, {"r", ""}}},
        {"w", "15", {{"r", "24"}, {"s", "13"}, {"x", ""}}},
        {"w", "25", {{"r", "14"}, {"s", "23"}, {"t", "15"}, {"u", "34"}, {"v", ""}}},
        {"w", "45", {{"x", "13"}, {"s", "24"}, {"r", ""}}}}},
      {"figBB", "forcing", "", {{"u", "1", {"36"}}},
       {{"u", "35", {{"t", "14"}, {"s", "23"}, {"x", "15"}, {"w", "26"}, {"v", ""}}},
        {"u", "45", {{"v", "26"}, {"w", "15"}, {"x", "23"}, {"s", "14"}, {"t", ""}}},
        {"u", "46", {{"v", "25"}, {"w", "16"}, {"r", "24"}, {"s", "13"}, {"t", ""}}}}},
      {"C4lem", "forcing", "",
       {{"v1", "4_out", {"12", "13", "23", "14"}}, {"v2", "4_out", {"23", "14", "24", "34"}}}, {}},
  };
  return specs;
}

// assignments found by exhaustive search over flat assignments; vertex order of build_named
const std::vector<std::tuple<const char*, const char*, const char*>>& searched_entries() {
  static const std::vector<std::tuple<const char*, const char*, const char*>> list = {
      {"theta333", "theta(3,3,3)", "1234 1234 1345 1245 2345 1345 1245 2345"},
      {"theta2224", "theta4(2,2,2,4)", "1234 4567 1256 1347 2347 3456 3567 4567"},
  };
  return list;
}

std::vector<CatalogueEntry> build_catalogue() {
  std::vector<CatalogueEntry> out;
  for (const auto& s : entry_specs()) {
    const FigureData* f = find_figure(s.id);
    if (!f) throw std::logic_error(std::string("missing figure ") + s.id);
    CatalogueEntry e;
    e.id = s.id;
    e.family = s.family;
    e.member = s.member;
    e.source = "figure";
    e.kind = e.family == "forcing" ? CatalogueEntry::Kind::forcing : CatalogueEntry::Kind::bad;
    e.graph = parse_edge_list(f->edges);
    e.lists = parse_lists(e.graph, f->lists).lists;
    for (const auto& [v, shape, sets] : s.claims) {
      ForcingClaim c{v, shape, {}};
      for (const char* t : sets) c.allowed.push_back(parse_set(t));
      std::sort(c.allowed.begin(), c.allowed.end());
      e.claims.push_back(std::move(c));
    }
    for (const auto& ch : s.chains) {
      CaseChain c{ch.root, parse_set(ch.set), {}};
      for (const auto& [v, set] : ch.steps) c.steps.push_back({v, *set ? parse_set(set) : ColorSet{0}});
      e.chains.push_back(std::move(c));
    }
    out.push_back(std::move(e));
  }
  for (const auto& [id, spec, lists] : searched_entries()) {
    CatalogueEntry e;
    e.id = id;
    e.family = "gbad";
    e.member = spec;
    e.source = "search";
    e.graph = build_named(spec);
    std::istringstream in(lists);
    std::string tok;
    while (in >> tok) e.lists.push_back(parse_set(tok));
    if (static_cast<int>(e.lists.size()) != e.graph.num_vertices()) throw std::logic_error("bad catalogue list");
    out.push_back(std::move(e));
  }
  return out;
}

std::string format_coloring(const Graph& g, const MultiColoring& phi) {
  std::string s;
  for (int v = 0; v < g.num_vertices(); ++v) s += (v ? " " : "") + g.name(v) + "=" + format_set(phi[v]);
  return s;
}

std::string format_sets(const std::vector<ColorSet>& sets) {
  std::string s = "{";
  for (size_t i = 0; i < sets.size(); ++i) s += (i ? "," : "") + format_set(sets[i]);
  return s + "}";
}

}  // namespace

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> entries = build_catalogue();
  return entries;
}

const CatalogueEntry* find_entry(const std::string& id) {
  for (const auto& e : catalogue())
    if (e.id == id) return &e;
  return nullptr;
}

bool CatalogueReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const CatalogueCheck& c) { return c.ok; });
}

std::string replay_chain(const Graph& g, const ListAssignment& L, const CaseChain& chain) {
  std::vector<ColorSet> phi(g.num_vertices(), 0);
  int root = g.find(chain.root);
  if (root < 0) return "unknown vertex " + chain.root;
  if ((chain.root_set & ~L[root]) || set_size(chain.root_set) != 2) return "root set outside the list";
  phi[root] = chain.root_set;
  std::string where = chain.root + "=" + format_set(chain.root_set);
  for (const auto& [name, claimed] : chain.steps) {
    int v = g.find(name);
    if (v < 0) return "unknown vertex " + name;
    ColorSet left = L[v];
    for (int w : g.neighbors(v)) left &= ~phi[w];
    if (claimed == 0) {
      if (set_size(left) > 1) return where + ": " + name + " keeps " + format_set(left);
      return {};
    }
    if (left != claimed) return where + ": " + name + " has " + format_set(left) + ", expected " + format_set(claimed);
    phi[v] = claimed;
  }
  return where + ": chain does not end in an uncolourable vertex";
}

CatalogueReport verify_catalogue() {
  CatalogueReport rep;
  for (const auto& e : catalogue()) {
    CatalogueCheck c;
    c.id = e.id;
    auto fail = [&](const std::string& m) {
      c.ok = false;
      c.messages.push_back(m);
    };
    if (uniform_size(e.lists) != 4) fail("not a 4-assignment");
    if (e.kind == CatalogueEntry::Kind::bad) {
      if (auto phi = find_bfold_coloring(e.graph, e.lists, 2))
        fail("coloring found: " + format_coloring(e.graph, *phi));
      else
        c.messages.push_back("no 2-fold coloring");
    }
    for (const auto& cl : e.claims) {
      int v = e.graph.find(cl.vertex);
      auto fr = forcing_analysis(e.graph, e.lists, v, 2);
      auto allowed = fr.allowed;
      std::sort(allowed.begin(), allowed.end());
      if (allowed != cl.allowed) fail(cl.vertex + ": allowed " + format_sets(allowed) + ", claimed " + format_sets(cl.allowed));
      if (fr.shape != cl.shape) fail(cl.vertex + ": shape " + fr.shape + ", claimed " + cl.shape);
      if (allowed == cl.allowed && fr.shape == cl.shape)
        c.messages.push_back(cl.vertex + ": " + fr.shape + " " + format_sets(allowed));
    }
    for (const auto& ch : e.chains) {
      std::string err = replay_chain(e.graph, e.lists, ch);
      if (!err.empty()) fail(err);
      PartialConstraint pc;
      pc.forced[e.graph.find(ch.root)] = ch.root_set;
      if (auto phi = find_bfold_coloring(e.graph, e.lists, 2, pc))
        fail(ch.root + "=" + format_set(ch.root_set) + " extends: " + format_coloring(e.graph, *phi));
    }
    if (!e.chains.empty()) c.messages.push_back(std::to_string(e.chains.size()) + " case chains replayed");
    rep.entries.push_back(std::move(c));
  }
  return rep;
}

// ---------------------------------------------------------------- lifting

WitnessBundle lift_witness(const Graph& h, const ListAssignment& lh, const Graph& g,
                           const StrongMinorEmbedding& embedding, int m) {
  if (static_cast<int>(lh.size()) != h.num_vertices()) throw InputError("list assignment does not match the minor");
  auto r = replay_steps(g, embedding.steps);
  auto iso = find_isomorphism(r.graph, h);
  if (!iso) throw InputError("embedding does not reach a graph isomorphic to the minor");
  ColorSet fixed = 0;
  for (int c = 1; c <= 2 * m; ++c) fixed |= color_bit(c);
  std::map<int, ColorSet> L;
  for (int t = 0; t < r.graph.num_vertices(); ++t) L[r.ids[t]] = lh[(*iso)[t]];
  for (int j = static_cast<int>(embedding.steps.size()) - 1; j >= 0; --j) {
    const auto& s = embedding.steps[j];
    if (s.op == MinorStep::Op::delete_vertex) {
      L.try_emplace(s.v, fixed);
    } else if (s.op == MinorStep::Op::identify) {
      auto it = L.find(r.created[j]);
      ColorSet lz = it == L.end() ? fixed : it->second;
      L[s.v] = lz;
      for (int w : r.merged[j]) L[w] = lz;
    }
  }
  WitnessBundle out;
  out.graph = g;
  out.lists.assign(g.num_vertices(), fixed);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (auto it = L.find(v); it != L.end()) out.lists[v] = it->second;
  out.provenance.push_back("lifted through " + std::to_string(embedding.steps.size()) + " minor steps");
  if (find_bfold_coloring(g, out.lists, m)) throw std::logic_error("lifted assignment is colourable");
  return out;
}

// ---------------------------------------------------------------- composition

namespace {

// bijection colours of `from` -> colours of `to` (both 4-sets), one per permutation index
std::vector<std::array<int, 4>> all_perms4() {
  std::vector<std::array<int, 4>> out;
  std::array<int, 4> p{0, 1, 2, 3};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void check_parts(const Graph& g, int v, const std::vector<int>& p1, const std::vector<int>& p2) {
  std::vector<int> owner(g.num_vertices(), 0);
  for (int x : p1) owner[x] |= 1;
  for (int x : p2) owner[x] |= 2;
  for (int x = 0; x < g.num_vertices(); ++x) {
    if (owner[x] == 0) throw InputError("vertex " + g.name(x) + " is in neither part");
    if (owner[x] == 3 && x != v) throw InputError("parts meet outside the cut vertex");
  }
  if (owner[v] != 3) throw InputError("cut vertex must lie in both parts");
  for (auto [a, b] : g.edges())
    if ((owner[a] | owner[b]) == 3 && a != v && b != v) throw InputError("edge joins the two parts");
}

}  // namespace

std::optional<WitnessBundle> compose_forcing(const Graph& g, int v, const std::vector<int>& part1,
                                             const ListAssignment& l1, const std::vector<int>& part2,
                                             const ListAssignment& l2) {
  check_parts(g, v, part1, part2);
  Graph g1 = induced_subgraph(g, part1), g2 = induced_subgraph(g, part2);
  if (static_cast<int>(l1.size()) != g1.num_vertices() || static_cast<int>(l2.size()) != g2.num_vertices())
    throw InputError("list assignment does not match its part");
  int v1 = static_cast<int>(std::find(part1.begin(), part1.end(), v) - part1.begin());
  int v2 = static_cast<int>(std::find(part2.begin(), part2.end(), v) - part2.begin());
  if (set_size(l1[v1]) != 4 || set_size(l2[v2]) != 4) throw InputError("cut vertex lists must have 4 colours");
  auto a1 = forcing_analysis(g1, l1, v1, 2).allowed;
  auto a2 = forcing_analysis(g2, l2, v2, 2).allowed;
  std::set<ColorSet> s1(a1.begin(), a1.end());
  auto from = set_colors(l2[v2]), to = set_colors(l1[v1]);
  int top = 0;
  for (int c : set_colors(pot(l1))) top = std::max(top, c);
  auto rest = set_colors(pot(l2) & ~l2[v2]);
  if (top + static_cast<int>(rest.size()) > kMaxColor) return std::nullopt;
  for (const auto& p : all_perms4()) {
    ColorPermutation sigma(kMaxColor + 1, 0);
    for (int i = 0; i < 4; ++i) sigma[from[i]] = to[p[i]];
    int fresh = top;
    for (int c : rest) sigma[c] = ++fresh;
    bool disjoint = true;
    for (ColorSet s : a2) disjoint &= !s1.count(relabel_set(s, sigma));
    if (!disjoint) continue;
    ListAssignment L(g.num_vertices(), 0);
    for (size_t i = 0; i < part1.size(); ++i) L[part1[i]] = l1[i];
    for (size_t i = 0; i < part2.size(); ++i)
      if (part2[i] != v) L[part2[i]] = relabel_set(l2[i], sigma);
    if (find_bfold_coloring(g, L, 2)) continue;
    WitnessBundle w;
    w.graph = g;
    w.lists = std::move(L);
    w.provenance.push_back("part 1 allows " + format_sets(a1) + " at " + g.name(v));
    w.provenance.push_back("part 2 relabelled to allow a disjoint set of " + std::to_string(a2.size()));
    return w;
  }
  return std::nullopt;
}

ListAssignment shift_forcing(const Graph& h, int x, const ListAssignment& l_prime) {
  if (x < 0 || x >= h.num_vertices()) throw InputError("vertex out of range");
  if (h.degree(x) != 1) throw InputError("shift needs a vertex of degree 1");
  if (static_cast<int>(l_prime.size()) != h.num_vertices()) throw InputError("list assignment size mismatch");
  ListAssignment L = l_prime;
  L[x] = l_prime[h.neighbors(x)[0]];
  return L;
}

// ---------------------------------------------------------------- (2m,m) construction

Construction base_gadget(int m) {
  if (m < 1) throw InputError("m must be positive");
  Construction c;
  c.m = m;
  c.graph = build_named("cycle(4)");
  ColorSet low = 0;
  for (int i = 1; i <= 2 * m; ++i) low |= color_bit(i);
  ColorSet top = color_bit(2 * m + 1);
  c.lists = {low, low, (low & ~color_bit(1)) | top, (low & ~color_bit(2 * m)) | top};
  return c;
}

Construction construct_non_2mm(int m) {
  if (m < 1) throw InputError("m must be positive");
  if (m > 4) throw InputError("m > 4 is not supported");
  Construction base = base_gadget(m);
  Construction c;
  c.m = m;
  c.graph = Graph(1);
  c.graph.set_name(0, "hub");
  c.lists = {base.lists[0]};
  int k = 0;
  for (ColorSet s : subsets_of_size(base.lists[0], m)) {
    ColorPermutation pi(kMaxColor + 1, 0);
    for (int i = 1; i <= kMaxColor; ++i) pi[i] = i;
    auto in = set_colors(s), out = set_colors(base.lists[0] & ~s);
    for (int i = 0; i < m; ++i) {
      pi[i + 1] = in[i];
      pi[m + i + 1] = out[i];
    }
    std::string tag = std::to_string(k++);
    int v2 = c.graph.add_vertex("a" + tag), v3 = c.graph.add_vertex("b" + tag), v4 = c.graph.add_vertex("c" + tag);
    c.graph.add_edge(0, v2);
    c.graph.add_edge(v2, v3);
    c.graph.add_edge(v3, v4);
    c.graph.add_edge(v4, 0);
    for (int j = 1; j <= 3; ++j) c.lists.push_back(relabel_set(base.lists[j], pi));
  }
  return c;
}

// ---------------------------------------------------------------- block composition

namespace {

// a subtree assignment with the attachment list normalized to 1234; mask over the six pairs
struct MenuEntry {
  unsigned mask;
  ListAssignment lists;  // indexed by g, 0 outside the subtree
};

const std::vector<ColorSet>& base_pairs() {
  static const std::vector<ColorSet> p = subsets_of_size(0xF, 2);
  return p;
}

int pair_index(ColorSet list, ColorSet pair) {
  auto ps = subsets_of_size(list, 2);
  return static_cast<int>(std::find(ps.begin(), ps.end(), pair) - ps.begin());
}

// colour c of a 1234-normalized subtree -> colour of `target` (4-set) through permutation p;
// colours above 4 go to colours missing from target in increasing order
ColorPermutation plug_perm(ColorSet target, const std::array<int, 4>& p) {
  ColorPermutation perm(kMaxColor + 1, 0);
  auto t = set_colors(target);
  for (int i = 0; i < 4; ++i) perm[i + 1] = t[p[i]];
  int next = 1;
  for (int c = 5; c <= kMaxColor; ++c) {
    while (next <= kMaxColor && (target & color_bit(next))) ++next;
    perm[c] = next <= kMaxColor ? next++ : 0;
  }
  return perm;
}

ColorSet relabel_partial(ColorSet s, const ColorPermutation& perm) {
  ColorSet out = 0;
  for (int c : set_colors(s)) {
    if (!perm[c]) throw std::runtime_error("colour budget exceeded while composing blocks");
    out |= color_bit(perm[c]);
  }
  return out;
}

unsigned permute_mask(unsigned mask, const std::array<int, 4>& p) {
  static const auto& pairs = base_pairs();
  unsigned out = 0;
  for (int k = 0; k < 6; ++k)
    if (mask >> k & 1) {
      ColorSet img = 0;
      for (int c : set_colors(pairs[k])) img |= color_bit(p[c - 1] + 1);
      out |= 1u << pair_index(0xF, img);
    }
  return out;
}

class BlockComposer {
 public:
  BlockComposer(const Graph& g, int pot_bound) : g_(g), pot_bound_(pot_bound), perms_(all_perms4()) {
    bd_ = blocks(g);
    of_vertex_.assign(g.num_vertices(), {});
    for (int b = 0; b < static_cast<int>(bd_.blocks.size()); ++b)
      for (int v : bd_.blocks[b]) of_vertex_[v].push_back(b);
    cand_.resize(bd_.blocks.size());
  }

  std::optional<ListAssignment> run() {
    for (int r : bd_.cut_vertices) {
      found_.reset();
      vertex_menu(r, -1);
      if (found_) return found_;
    }
    return std::nullopt;
  }

 private:
  const Graph& g_;
  int pot_bound_;
  std::vector<std::array<int, 4>> perms_;
  BlockDecomposition bd_;
  std::vector<std::vector<int>> of_vertex_;
  std::vector<std::optional<std::vector<ListAssignment>>> cand_;
  std::optional<ListAssignment> found_;

  void complete(ListAssignment L) {
    for (auto& s : L)
      if (!s) s = 0xF;
    if (!find_bfold_coloring(g_, L, 2)) found_ = std::move(L);
  }

  const std::vector<ListAssignment>& candidates(int b) {
    if (cand_[b]) return *cand_[b];
    Graph h = induced_subgraph(g_, bd_.blocks[b]);
    std::set<ListAssignment> all;
    if (h.num_vertices() == 2) {
      all.insert({0xF, 0xF});
    } else {
      std::vector<ListAssignment> seeds =
          enumerate_flat(h, 4, pot_bound_, {.exact_flat = false}).representatives;
      for (const auto& e : catalogue())
        if (e.kind == CatalogueEntry::Kind::forcing && e.graph.num_vertices() == h.num_vertices())
          if (auto iso = find_isomorphism(h, e.graph)) {
            ListAssignment L(h.num_vertices());
            for (int v = 0; v < h.num_vertices(); ++v) L[v] = e.lists[(*iso)[v]];
            seeds.push_back(L);
          }
      auto auts = automorphisms(h);
      for (const auto& L : seeds)
        for (const auto& s : auts) {
          ListAssignment M(h.num_vertices());
          for (int v = 0; v < h.num_vertices(); ++v) M[v] = L[s[v]];
          all.insert(M);
        }
    }
    cand_[b] = std::vector<ListAssignment>(all.begin(), all.end());
    return *cand_[b];
  }

  // menus are kept small: only masks not containing the image of another
  static void prune(std::vector<MenuEntry>& menu, const std::vector<std::array<int, 4>>& perms) {
    std::vector<MenuEntry> out;
    std::sort(menu.begin(), menu.end(),
              [](const MenuEntry& a, const MenuEntry& b) { return __builtin_popcount(a.mask) < __builtin_popcount(b.mask); });
    for (auto& e : menu) {
      bool covered = false;
      for (const auto& o : out)
        for (const auto& p : perms)
          if ((permute_mask(o.mask, p) & ~e.mask) == 0) {
            covered = true;
            break;
          }
      if (!covered) out.push_back(std::move(e));
    }
    menu = std::move(out);
  }

  std::vector<MenuEntry> vertex_menu(int v, int parent_block) {
    std::vector<MenuEntry> cur{{0x3F, ListAssignment(g_.num_vertices(), 0)}};
    cur[0].lists[v] = 0xF;
    for (int b : of_vertex_[v]) {
      if (b == parent_block) continue;
      auto menu = block_menu(b, v);
      if (found_) return {};
      std::map<unsigned, MenuEntry> next;
      for (const auto& s : cur)
        for (const auto& e : menu)
          for (const auto& p : perms_) {
            unsigned m = s.mask & permute_mask(e.mask, p);
            if (next.count(m)) continue;
            ColorPermutation perm = plug_perm(0xF, p);
            ListAssignment L = s.lists;
            for (int x = 0; x < g_.num_vertices(); ++x)
              if (e.lists[x] && x != v) L[x] = relabel_partial(e.lists[x], perm);
            if (m == 0) {
              complete(L);
              if (found_) return {};
            }
            next.emplace(m, MenuEntry{m, std::move(L)});
          }
      cur.clear();
      for (auto& [m, e] : next) cur.push_back(std::move(e));
      prune(cur, perms_);
    }
    return cur;
  }

  std::vector<MenuEntry> block_menu(int b, int p) {
    const auto& verts = bd_.blocks[b];
    int n = static_cast<int>(verts.size());
    int lp = static_cast<int>(std::find(verts.begin(), verts.end(), p) - verts.begin());
    std::vector<int> kids;  // local indices of child attachments
    std::vector<std::vector<MenuEntry>> kid_menus;
    for (int i = 0; i < n; ++i)
      if (i != lp && of_vertex_[verts[i]].size() >= 2) {
        kids.push_back(i);
        kid_menus.push_back(vertex_menu(verts[i], b));
        if (found_) return {};
      }
    Graph h = induced_subgraph(g_, verts);
    std::map<unsigned, MenuEntry> menu;
    for (const auto& LB : candidates(b)) {
      // colourings grouped by the pair indices at the child attachments
      std::map<std::vector<int>, unsigned> table;
      for_each_bfold_coloring(h, LB, 2, [&](const MultiColoring& phi) {
        std::vector<int> key;
        for (int k : kids) key.push_back(pair_index(LB[k], phi[k]));
        table[key] |= 1u << pair_index(LB[lp], phi[lp]);
        return true;
      });
      // per child: distinct allowed masks in the frame of LB[k], with the entry and permutation
      struct Option {
        unsigned mask;
        int entry;
        int perm;
      };
      std::vector<std::vector<Option>> opts(kids.size());
      size_t combos = 1;
      for (size_t i = 0; i < kids.size(); ++i) {
        std::set<unsigned> seen;
        ColorSet target = LB[kids[i]];
        for (int e = 0; e < static_cast<int>(kid_menus[i].size()); ++e)
          for (int q = 0; q < static_cast<int>(perms_.size()); ++q) {
            ColorPermutation perm = plug_perm(target, perms_[q]);
            unsigned m = 0;
            for (int k = 0; k < 6; ++k)
              if (kid_menus[i][e].mask >> k & 1) m |= 1u << pair_index(target, relabel_set(base_pairs()[k], perm));
            if (seen.insert(m).second) opts[i].push_back({m, e, q});
          }
        combos *= opts[i].size();
      }
      if (combos > 200000) continue;
      std::vector<int> choice(kids.size(), 0);
      while (true) {
        unsigned pm = 0;
        for (const auto& [key, m] : table) {
          bool ok = true;
          for (size_t i = 0; i < kids.size() && ok; ++i) ok = opts[i][choice[i]].mask >> key[i] & 1;
          if (ok) pm |= m;
        }
        if (!menu.count(pm) || pm == 0) {
          ListAssignment L(g_.num_vertices(), 0);
          for (size_t i = 0; i < kids.size(); ++i) {
            const auto& o = opts[i][choice[i]];
            ColorPermutation perm = plug_perm(LB[kids[i]], perms_[o.perm]);
            const auto& sub = kid_menus[i][o.entry].lists;
            for (int x = 0; x < g_.num_vertices(); ++x)
              if (sub[x]) L[x] = relabel_partial(sub[x], perm);
          }
          for (int i = 0; i < n; ++i) L[verts[i]] = LB[i];
          if (pm == 0) {
            complete(L);
            if (found_) return {};
          } else {
            // normalize so that the attachment list is 1234
            ColorPermutation norm(kMaxColor + 1, 0);
            int next = 5, k = 1;
            for (int c : set_colors(LB[lp])) norm[c] = k++;
            ColorSet all = 0;
            for (ColorSet s : L) all |= s;
            for (int c : set_colors(all & ~LB[lp])) norm[c] = next++;
            for (auto& s : L)
              if (s) s = relabel_set(s, norm);
            menu.emplace(pm, MenuEntry{pm, std::move(L)});
          }
        }
        size_t i = 0;
        while (i < kids.size() && ++choice[i] == static_cast<int>(opts[i].size())) choice[i++] = 0;
        if (i == kids.size()) break;
      }
    }
    std::vector<MenuEntry> out;
    for (auto& [m, e] : menu) out.push_back(std::move(e));
    prune(out, perms_);
    return out;
  }
};

}  // namespace

std::optional<ListAssignment> compose_blocks(const Graph& g, int pot_bound) {
  if (!is_connected(g)) throw InputError("graph is disconnected");
  return BlockComposer(g, pot_bound).run();
}

// ---------------------------------------------------------------- auto witness

std::optional<WitnessBundle> find_witness(const Graph& g) {
  if (g.num_vertices() == 0) throw InputError("empty graph");
  if (bipartition(g).bipartite && classify_42_components(g)) return std::nullopt;
  ObstructionDescriptor o = find_obstruction(g);
  const auto& emb = *o.embedding;
  const Graph& h = emb.target;
  std::string origin;
  std::optional<ListAssignment> lh;
  if (o.kind == "odd_cycle") {
    lh = ListAssignment(h.num_vertices(), 0xF);
    origin = "odd cycle with every list 1234";
  } else {
    for (const auto& e : catalogue()) {
      if (e.kind != CatalogueEntry::Kind::bad || e.graph.num_vertices() != h.num_vertices()) continue;
      if (auto iso = find_isomorphism(h, e.graph)) {
        lh = ListAssignment(h.num_vertices());
        for (int v = 0; v < h.num_vertices(); ++v) (*lh)[v] = e.lists[(*iso)[v]];
        origin = "catalogue entry " + e.id;
        break;
      }
    }
    if (!lh && is_connected(h)) {
      lh = compose_blocks(h);
      origin = "block composition";
    }
    if (!lh && h.num_vertices() <= 10) {
      lh = verify_choosable(h, 4, 2, 8).counterexample;
      origin = "flat search on the minimal graph";
    }
  }
  if (!lh) throw std::runtime_error("no witness found for obstruction " + o.kind);
  WitnessBundle w = lift_witness(h, *lh, g, emb, 2);
  w.provenance.insert(w.provenance.begin(), origin);
  w.provenance.insert(w.provenance.begin(), "obstruction " + o.kind + " " + o.name);
  return w;
}

nlohmann::json to_json(const WitnessBundle& w) {
  nlohmann::json lists = nlohmann::json::object();
  for (int v = 0; v < w.graph.num_vertices(); ++v) lists[w.graph.name(v)] = set_colors(w.lists[v]);
  return {{"graph", to_edge_list(w.graph)}, {"lists", lists}, {"b", 2}, {"provenance", w.provenance}};
}

}  // namespace choosekit
