#include <algorithm>
#include <random>

#include "choosekit/coloring.hpp"
#include "choosekit/witnesses.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace choosekit;

namespace {

ListAssignment lists(std::initializer_list<const char*> sets) {
  ListAssignment L;
  for (const char* s : sets) L.push_back(parse_set(s));
  return L;
}

ListAssignment random_lists(std::mt19937& rng, int n, int a, int pot_size) {
  std::vector<int> colors(pot_size);
  for (int i = 0; i < pot_size; ++i) colors[i] = i + 1;
  ListAssignment L(n);
  for (auto& s : L) {
    std::shuffle(colors.begin(), colors.end(), rng);
    s = 0;
    for (int i = 0; i < a; ++i) s |= color_bit(colors[i]);
  }
  return L;
}

ColorPermutation random_perm(std::mt19937& rng, int k) {
  std::vector<int> img(k);
  for (int i = 0; i < k; ++i) img[i] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  ColorPermutation p(k + 1, 0);
  for (int i = 0; i < k; ++i) p[i + 1] = img[i];
  return p;
}

}  // namespace

TEST_CASE("colour sets") {
  CHECK(parse_set("1235") == make_set({1, 2, 3, 5}));
  CHECK(format_set(make_set({1, 2, 13})) == "1,2,13");
  CHECK(format_set(parse_set("2413")) == "1234");
  CHECK(subsets_of_size(parse_set("1234"), 2).size() == 6);
  CHECK_THROWS_AS(parse_set("12a"), InputError);
}

TEST_CASE("list parsing") {
  Graph g = build_named("cycle(4)");
  auto p = parse_lists(g, "0: 1 2 3 4\n1: 1 2 3 4\n2: 1 2 3 5\n3: 2 3 4 5\n");
  CHECK(p.lists == lists({"1234", "1234", "1235", "2345"}));
  auto j = parse_lists(g, R"({"lists": {"0": [1,2,3,4], "1": [1,2,3,4], "2": [1,2,3,4], "3": [1,2,3,4]}, "b": 2})");
  CHECK(j.b == 2);
  CHECK(pot(j.lists) == parse_set("1234"));
  CHECK_THROWS_AS(parse_lists(g, "0: 1 2 3 4\n1: 1 2 3 4\n2: 1 2 3 4\n"), InputError);
  CHECK_THROWS_AS(parse_lists(g, "0: 1 2 3 4\n1: 1 2 3 4\n2: 1 2 3 4\n9: 1 2 3 4\n"), InputError);
  CHECK_THROWS_AS(parse_lists(g, "0: 1 2 3 4\n0: 1 2 3 4\n1: 1 2 3 4\n2: 1 2 3 4\n3: 1 2 3 4\n"), InputError);
  CHECK_THROWS_AS(parse_lists(g, "0: 1 2 3 40\n1: 1 2 3 4\n2: 1 2 3 4\n3: 1 2 3 4\n"), InputError);
  CHECK_THROWS_AS(parse_lists(g, "0: 1 2 3\n1: 1 2 3 4\n2: 1 2 3 4\n3: 1 2 3 4\n"), InputError);
}

TEST_CASE("validate") {
  Graph g = build_named("cycle(4)");
  ListAssignment L(4, parse_set("1234"));
  MultiColoring phi = lists({"12", "34", "12", "34"});
  CHECK_FALSE(validate(g, L, 2, phi));
  phi[1] = parse_set("12");
  auto v = validate(g, L, 2, phi);
  REQUIRE(v);
  CHECK(v->kind == Violation::Kind::edge);
  phi = lists({"15", "34", "12", "34"});
  REQUIRE(validate(g, L, 2, phi));
  CHECK(validate(g, L, 2, phi)->kind == Violation::Kind::subset);
  phi = lists({"123", "4", "12", "34"});
  CHECK(validate(g, L, 2, phi)->kind == Violation::Kind::size);
}

TEST_CASE("solver examples") {
  Graph c4 = build_named("cycle(4)");
  ListAssignment all(4, parse_set("1234"));
  auto phi = find_bfold_coloring(c4, all, 2);
  REQUIRE(phi);
  CHECK_FALSE(validate(c4, all, 2, *phi));
  CHECK(count_bfold_colorings(c4, all, 2) == 6);
  CHECK(count_bfold_colorings(build_named("K1"), {parse_set("1234")}, 2) == 6);

  ListAssignment lem = lists({"1234", "1234", "1235", "2345"});
  PartialConstraint pc;
  pc.forced[0] = parse_set("24");
  CHECK_FALSE(find_bfold_coloring(c4, lem, 2, pc));
  PartialConstraint bad;
  bad.forced[9] = parse_set("12");
  CHECK_THROWS_AS(find_bfold_coloring(c4, lem, 2, bad), InputError);

  const auto* s = find_entry("figS");
  CHECK_FALSE(find_bfold_coloring(s->graph, s->lists, 2));
  CHECK(pot(s->lists) == parse_set("123456"));
  CHECK(pot(find_entry("figWW")->lists) == parse_set("123456"));

  const auto* ww = find_entry("figWW");
  CHECK(count_bfold_colorings(ww->graph, ww->lists, 2) == oracle::count_colorings(ww->graph, ww->lists, 2));
}

TEST_CASE("solver agrees with exhaustive enumeration") {
  std::mt19937 rng(11);
  const char* specs[] = {"cycle(4)", "cycle(5)", "theta(2,2,2)", "K(2,3)", "theta(1,3,3)", "path(4)", "k33_minus_edge"};
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = build_named(specs[trial % 7]);
    int pot_size = 4 + trial % 4;
    auto L = random_lists(rng, g.num_vertices(), 4, pot_size);
    CAPTURE(trial);
    std::uint64_t want = oracle::count_colorings(g, L, 2);
    CHECK(count_bfold_colorings(g, L, 2) == want);
    auto phi = find_bfold_coloring(g, L, 2);
    CHECK(phi.has_value() == (want > 0));
    if (phi) CHECK_FALSE(validate(g, L, 2, *phi));
    std::uint64_t visited = 0;
    for_each_bfold_coloring(g, L, 2, [&](const MultiColoring& c) {
      CHECK_FALSE(validate(g, L, 2, c));
      ++visited;
      return true;
    });
    CHECK(visited == want);
  }
}

TEST_CASE("forcing analysis") {
  const auto* ww = find_entry("figWW");
  int v1 = ww->graph.find("v1");
  auto r = forcing_analysis(ww->graph, ww->lists, v1);
  CHECK(r.shape == "3_in");
  CHECK(r.allowed == oracle::allowed_sets(ww->graph, ww->lists, v1, 2));
  std::vector<ColorSet> want = {parse_set("14"), parse_set("24"), parse_set("34")};
  auto got = r.allowed;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);

  const auto* uu = find_entry("figUU");
  auto ru = forcing_analysis(uu->graph, uu->lists, uu->graph.find("r"));
  CHECK(ru.shape == "2_in");
  CHECK(ru.k == 2);

  const auto* lem = find_entry("C4lem");
  auto rl = forcing_analysis(lem->graph, lem->lists, lem->graph.find("v1"));
  CHECK(rl.shape == "4_out");
  std::sort(rl.forbidden.begin(), rl.forbidden.end());
  CHECK(rl.forbidden == std::vector<ColorSet>{parse_set("24"), parse_set("34")});

  CHECK(forcing_shape(parse_set("1234"), {parse_set("12"), parse_set("34")}, 2) == "2_comp");
  CHECK(forcing_shape(parse_set("1234"), {parse_set("12"), parse_set("13"), parse_set("23")}, 2) == "3_out");
  CHECK(forcing_shape(parse_set("1234"), {parse_set("12"), parse_set("13"), parse_set("34")}, 2) == "3_other");
}

TEST_CASE("forcing is equivariant under colour permutations") {
  std::mt19937 rng(3);
  std::vector<const CatalogueEntry*> entries;
  for (const auto& e : catalogue())
    if (e.kind == CatalogueEntry::Kind::forcing) entries.push_back(&e);
  for (int trial = 0; trial < 100; ++trial) {
    const auto* e = entries[trial % entries.size()];
    int k = 0;
    for (int c : set_colors(pot(e->lists))) k = std::max(k, c);
    auto perm = random_perm(rng, k);
    auto M = relabel_colors(e->lists, perm);
    int v = trial % e->graph.num_vertices();
    auto a = forcing_analysis(e->graph, e->lists, v);
    auto b = forcing_analysis(e->graph, M, v);
    std::vector<ColorSet> mapped;
    for (ColorSet s : a.allowed) mapped.push_back(relabel_set(s, perm));
    std::sort(mapped.begin(), mapped.end());
    std::sort(b.allowed.begin(), b.allowed.end());
    CHECK(mapped == b.allowed);
    CHECK(a.shape == b.shape);
  }
}

TEST_CASE("relabelling") {
  const auto* ww = find_entry("figWW");
  ColorPermutation id(7);
  for (int i = 0; i < 7; ++i) id[i] = i;
  CHECK(relabel_colors(ww->lists, id) == ww->lists);
  ColorPermutation swap = id;
  swap[1] = 5;
  swap[5] = 1;
  auto M = relabel_colors(ww->lists, swap);
  auto r = forcing_analysis(ww->graph, M, ww->graph.find("v1"));
  std::sort(r.allowed.begin(), r.allowed.end());
  std::vector<ColorSet> want = {parse_set("45"), parse_set("24"), parse_set("34")};
  std::sort(want.begin(), want.end());
  CHECK(r.allowed == want);
  ColorPermutation bad = id;
  bad[1] = 2;
  CHECK_THROWS_AS(relabel_colors(ww->lists, bad), InputError);
}

TEST_CASE("path dp agrees with backtracking") {
  std::mt19937 rng(5);
  CHECK(path_dp_solve(build_named("cycle(100)"), ListAssignment(100, parse_set("1234")), 2).has_value());
  int some = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int a = 1 + trial % 13, b = 1 + (trial / 13) % 17, c = 1 + (trial / 7) % 23;
    if (a == 1 && b == 1) b = 2;
    Graph g = build_named("theta(" + std::to_string(2 * a) + "," + std::to_string(2 * b) + "," + std::to_string(c + 1) + ")");
    auto L = random_lists(rng, g.num_vertices(), 4, 5 + trial % 3);
    auto dp = path_dp_solve(g, L, 2);
    auto bt = find_bfold_coloring(g, L, 2);
    CAPTURE(trial);
    REQUIRE(dp.has_value() == bt.has_value());
    if (dp) CHECK_FALSE(validate(g, L, 2, *dp));
    some += dp.has_value();
  }
  CHECK(some > 0);
  const auto* t = find_entry("theta333");
  CHECK_FALSE(path_dp_solve(t->graph, t->lists, 2).has_value());
  // two 4-cycles joined by a long path
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = build_named("glued(cycle(4),cycle(4)," + std::to_string(3 + trial) + ")");
    auto L = random_lists(rng, g.num_vertices(), 4, 5);
    CHECK(path_dp_solve(g, L, 2).has_value() == find_bfold_coloring(g, L, 2).has_value());
  }
  CHECK_THROWS_AS(path_dp_solve(build_named("K(3,3)"), ListAssignment(6, parse_set("1234")), 2, 2), InputError);
}

TEST_CASE("pot reduction") {
  Graph g2 = build_named("figure(figGG2)");
  auto X = find_pot_separator(g2);
  REQUIRE(X);
  ListAssignment small(g2.num_vertices(), parse_set("1234"));
  CHECK(reduce_pot(g2, small, *X).lists == small);
  CHECK_THROWS_AS(reduce_pot(g2, small, {0}), InputError);

  std::mt19937 rng(9);
  for (const char* spec : {"figure(figGG1)", "figure(figGG2)", "figure(figGG3)"}) {
    Graph g = build_named(spec);
    auto sep = find_pot_separator(g);
    REQUIRE(sep);
    for (int trial = 0; trial < 60; ++trial) {
      auto L = random_lists(rng, g.num_vertices(), 4, 10 + trial % 3);
      // the lists on X must fit in the budget
      ColorSet xl = L[(*sep)[0]] | L[(*sep)[1]];
      if (set_size(xl) > 8) continue;
      auto r = reduce_pot(g, L, *sep);
      CHECK(set_size(pot(r.lists)) <= 8);
      CHECK(uniform_size(r.lists) == 4);
      auto phi = find_bfold_coloring(g, r.lists, 2);
      // a coloring of the reduced lists gives one of the original lists
      if (phi) CHECK(find_bfold_coloring(g, L, 2).has_value());
    }
  }
}

TEST_CASE("duplication and majority projection") {
  Graph c4 = build_named("cycle(4)");
  ListAssignment L2 = lists({"12", "34", "12", "34"});
  auto L6 = duplicate_lists(L2, 3);
  CHECK(L6[0] == parse_set("123456"));
  CHECK(L6[1] == make_set({7, 8, 9, 10, 11, 12}));
  std::uint64_t seen = 0;
  for_each_bfold_coloring(c4, L6, 3, [&](const MultiColoring& phi) {
    auto p = majority_project(c4, L2, 3, phi);
    CHECK_FALSE(validate(c4, L2, 1, p));
    ++seen;
    return true;
  });
  CHECK(seen == oracle::count_colorings(c4, L6, 3));
  auto one = duplicate_lists(L2, 1);
  CHECK(one == L2);
  MultiColoring phi1 = lists({"1", "3", "2", "4"});
  CHECK(majority_project(c4, L2, 1, phi1) == phi1);
  CHECK_THROWS_AS(majority_project(c4, L2, 2, phi1), InputError);
}
