#include <algorithm>

#include "choosekit/flat.hpp"
#include "choosekit/witnesses.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace choosekit;

namespace {

struct Joined {
  Graph g;
  int v = -1;
  std::vector<int> part1, part2;
  ListAssignment l1, l2;
};

// identify vertex a of entry x with vertex b of entry y
Joined join(const CatalogueEntry& x, const std::string& a, const CatalogueEntry& y, const std::string& b) {
  Joined j;
  j.g = Graph(x.graph.num_vertices());
  for (auto [u, w] : x.graph.edges()) j.g.add_edge(u, w);
  for (int u = 0; u < x.graph.num_vertices(); ++u) j.part1.push_back(u);
  j.l1 = x.lists;
  j.v = x.graph.find(a);
  int yb = y.graph.find(b);
  std::vector<int> map(y.graph.num_vertices());
  for (int u = 0; u < y.graph.num_vertices(); ++u) map[u] = u == yb ? j.v : j.g.add_vertex();
  for (auto [u, w] : y.graph.edges()) j.g.add_edge(map[u], map[w]);
  j.part2 = map;
  j.l2 = y.lists;
  return j;
}

const CatalogueEntry* entry_for(const std::string& name) {
  for (const auto& e : catalogue())
    if (e.id == name || e.member == name) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("catalogue contents") {
  int bad = 0, forcing = 0;
  for (const auto& e : catalogue()) (e.kind == CatalogueEntry::Kind::bad ? bad : forcing)++;
  CHECK(bad >= 9);
  CHECK(forcing >= 7);
  const auto* s = find_entry("figS");
  REQUIRE(s);
  CHECK(s->graph.num_vertices() == 8);
  CHECK(s->graph.num_edges() == 10);
  CHECK(is_isomorphic(find_entry("figE")->graph, build_named("K(3,3)")));
  CHECK(is_isomorphic(find_entry("figN")->graph, build_named("K(2,5)")));
  CHECK(is_isomorphic(find_entry("figQ")->graph, build_named("cube_minus_vertex")));
  CHECK(find_entry("nope") == nullptr);
}

TEST_CASE("catalogue verifies") {
  auto rep = verify_catalogue();
  for (const auto& c : rep.entries) {
    CAPTURE(c.id);
    CHECK(c.ok);
  }
  CHECK(rep.ok());
  // bad entries really are uncolourable, by plain enumeration
  for (const auto& e : catalogue())
    if (e.kind == CatalogueEntry::Kind::bad && e.graph.num_vertices() <= 9) {
      CAPTURE(e.id);
      CHECK_FALSE(oracle::colorable(e.graph, e.lists, 2));
    }
}

TEST_CASE("case chains") {
  const auto* y = find_entry("figY");
  REQUIRE(y->chains.size() == 6);
  for (const auto& ch : y->chains) CHECK(replay_chain(y->graph, y->lists, ch).empty());
  CaseChain broken = y->chains[0];
  broken.steps.front().second = parse_set("56");
  CHECK_FALSE(replay_chain(y->graph, y->lists, broken).empty());
}

TEST_CASE("lifting") {
  const auto* t = find_entry("theta333");
  StrongMinorEmbedding id;
  id.target = t->graph;
  for (int v = 0; v < t->graph.num_vertices(); ++v) id.target_ids.push_back(v);
  auto same = lift_witness(t->graph, t->lists, t->graph, id);
  CHECK(same.lists == t->lists);

  Graph g = build_named("theta(3,3,5)");
  auto o = find_obstruction(g);
  REQUIRE(o.embedding);
  const auto* e = entry_for(o.name);
  REQUIRE(e);
  auto w = lift_witness(e->graph, e->lists, g, *o.embedding);
  CHECK(uniform_size(w.lists) == 4);
  CHECK_FALSE(find_bfold_coloring(g, w.lists, 2));
  CHECK_FALSE(oracle::colorable(g, w.lists, 2));
}

TEST_CASE("find_witness") {
  for (const char* spec : {"cycle(5)", "theta(3,3,3)", "theta(3,5,7)", "K(3,3)", "figure(figZ)", "chain(4,4,4,4)",
                           "glued(theta(2,2,2),theta(2,2,2),0)", "glued(K(2,4),cycle(4),0)"}) {
    Graph g = build_named(spec);
    CAPTURE(spec);
    auto w = find_witness(g);
    REQUIRE(w);
    CHECK(uniform_size(w->lists) == 4);
    CHECK_FALSE(find_bfold_coloring(g, w->lists, 2));
    CHECK_FALSE(w->provenance.empty());
  }
  // two 6-cycles through one vertex joined by a path
  Graph c6 = parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 6\n6 7\n7 8\n8 9\n9 10\n10 0\n3 11\n11 8\n");
  auto w = find_witness(c6);
  REQUIRE(w);
  CHECK_FALSE(find_bfold_coloring(c6, w->lists, 2));
  for (const char* spec : {"cycle(4)", "theta(2,4,6)", "figure(figGG2)", "K(2,4)"})
    CHECK_FALSE(find_witness(build_named(spec)));
  auto j = to_json(*w);
  CHECK(j["lists"].size() == 12);
}

TEST_CASE("composing forcing assignments") {
  // K(2,4) forcing a 2-set pair at r, glued to the C4lem assignment
  auto a = join(*find_entry("figUU"), "r", *find_entry("C4lem"), "v1");
  auto w = compose_forcing(a.g, a.v, a.part1, a.l1, a.part2, a.l2);
  REQUIRE(w);
  CHECK_FALSE(find_bfold_coloring(a.g, w->lists, 2));
  CHECK_FALSE(oracle::colorable(a.g, w->lists, 2));

  auto b = join(*find_entry("figWW"), "v1", *find_entry("figXX"), "v1");
  auto wb = compose_forcing(b.g, b.v, b.part1, b.l1, b.part2, b.l2);
  REQUIRE(wb);
  CHECK_FALSE(find_bfold_coloring(b.g, wb->lists, 2));

  // an unconstrained C4 never combines into a witness
  CatalogueEntry plain;
  plain.graph = build_named("cycle(4)");
  plain.lists = ListAssignment(4, parse_set("1234"));
  plain.graph.set_name(0, "p");
  auto c = join(*find_entry("figWW"), "v1", plain, "p");
  CHECK_FALSE(compose_forcing(c.g, c.v, c.part1, c.l1, c.part2, c.l2));
  CHECK_THROWS_AS(compose_forcing(c.g, c.v, c.part1, c.l1, c.part1, c.l1), InputError);
}

TEST_CASE("shifting a forcing vertex along a pendant edge") {
  // pendant x on the forcing vertex v1 of figWW
  const auto* ww = find_entry("figWW");
  Graph h = ww->graph;
  int x = h.add_vertex("x");
  int v1 = h.find("v1");
  h.add_edge(x, v1);
  ListAssignment lp = ww->lists;
  lp.push_back(parse_set("5678"));
  auto L = shift_forcing(h, x, lp);
  CHECK(L[x] == ww->lists[v1]);
  auto r = forcing_analysis(h, L, x);
  // 3_in at v1 becomes 3_out at x
  CHECK(forcing_analysis(h, L, v1).shape == "3_in");
  CHECK(r.shape == "3_out");
  CHECK_THROWS_AS(shift_forcing(h, v1, lp), InputError);
  CHECK_THROWS_AS(shift_forcing(h, x, ww->lists), InputError);

  // 3_out at v2 of figXX shifts to 3_in
  const auto* xx = find_entry("figXX");
  Graph h2 = xx->graph;
  int y = h2.add_vertex("y");
  h2.add_edge(y, h2.find("v1"));
  ListAssignment lp2 = xx->lists;
  lp2.push_back(0);
  auto L2 = shift_forcing(h2, y, lp2);
  CHECK(forcing_analysis(h2, L2, y).shape == "3_in");
}

TEST_CASE("(2m,m) constructions") {
  for (int m = 1; m <= 3; ++m) {
    auto base = base_gadget(m);
    auto r = forcing_analysis(base.graph, base.lists, 0, m);
    ColorSet low = 0;
    for (int i = 1; i <= m; ++i) low |= color_bit(i);
    CAPTURE(m);
    CHECK(std::count(r.forbidden.begin(), r.forbidden.end(), low) == 1);
    if (m == 1) CHECK(r.forbidden == std::vector<ColorSet>{low});
  }
  // the m=2 gadget also blocks 13: v2=24, v4=25 leaves v3 only colour 3
  auto g2 = base_gadget(2);
  CHECK(forcing_analysis(g2.graph, g2.lists, 0, 2).forbidden == std::vector<ColorSet>{parse_set("12"), parse_set("13")});
  auto c1 = construct_non_2mm(1);
  CHECK(c1.graph.num_vertices() == 7);
  CHECK_FALSE(find_bfold_coloring(c1.graph, c1.lists, 1));
  CHECK_FALSE(oracle::colorable(c1.graph, c1.lists, 1));
  auto c2 = construct_non_2mm(2);
  CHECK(c2.graph.num_vertices() == 19);
  CHECK(uniform_size(c2.lists) == 4);
  CHECK_FALSE(path_dp_solve(c2.graph, c2.lists, 2));
  CHECK_FALSE(find_bfold_coloring(c2.graph, c2.lists, 2));
  CHECK_THROWS_AS(construct_non_2mm(5), InputError);
  CHECK_THROWS_AS(construct_non_2mm(0), InputError);
}
