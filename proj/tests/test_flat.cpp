#include <algorithm>
#include <random>
#include <set>

#include "appendix.hpp"
#include "choosekit/flat.hpp"
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

}  // namespace

TEST_CASE("colour class components") {
  Graph p = build_named("path(4)");
  ListAssignment L = lists({"1234", "1256", "1234", "1256"});
  auto c1 = color_class_components(p, L, 1);
  CHECK(c1 == std::vector<std::vector<int>>{{0, 1, 2, 3}});
  auto c3 = color_class_components(p, L, 3);
  CHECK(c3 == std::vector<std::vector<int>>{{0}, {2}});
  CHECK(color_class_components(p, L, 9).empty());
}

TEST_CASE("apply_move") {
  Graph p = build_named("path(3)");
  ListAssignment L = lists({"1234", "1256", "3478"});
  auto M = apply_move(p, L, {5, 3, {1}});
  CHECK(M == lists({"1234", "1236", "3478"}));
  // beta already present on the component
  CHECK_THROWS_AS(apply_move(p, L, {1, 2, {0, 1}}), InputError);
  // not a full component of G_alpha
  CHECK_THROWS_AS(apply_move(p, L, {1, 7, {0}}), InputError);
  CHECK_THROWS_AS(apply_move(p, L, {7, 8, {0}}), InputError);
}

TEST_CASE("flat score and flatten") {
  Graph c4 = build_named("cycle(4)");
  ListAssignment all(4, parse_set("1234"));
  CHECK(flat_score(c4, all) == FlatScore{4, 4});
  CHECK(is_flat(c4, all));
  auto sc = oracle::score(c4, all);
  CHECK(sc == std::pair<int, int>{4, 4});

  // colour 5 occurs once and can be renamed to a colour of a neighbour
  ListAssignment L = lists({"1235", "1234", "1234", "1234"});
  CHECK_FALSE(is_flat(c4, L));
  auto fr = flatten(c4, L);
  CHECK(flat_score(c4, fr.lists) < flat_score(c4, L));
  CHECK(is_flat(c4, fr.lists));
  CHECK(oracle::flat(c4, fr.lists, 2));
  CHECK(set_size(pot(fr.lists)) == 4);
}

TEST_CASE("lift_coloring undoes flattening") {
  std::mt19937 rng(17);
  const char* specs[] = {"cycle(4)", "K(2,3)", "theta(2,2,4)", "cycle(6)"};
  int lifted = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = build_named(specs[trial % 4]);
    std::vector<int> colors = {1, 2, 3, 4, 5, 6, 7};
    ListAssignment L(g.num_vertices());
    for (auto& s : L) {
      std::shuffle(colors.begin(), colors.end(), rng);
      s = make_set({colors[0], colors[1], colors[2], colors[3]});
    }
    auto fr = flatten(g, L);
    CHECK(flat_score(g, fr.lists) <= flat_score(g, L));
    auto phi = find_bfold_coloring(g, fr.lists, 2);
    if (!phi) continue;
    auto back = lift_coloring(g, L, fr.moves, *phi, 2);
    CHECK_FALSE(validate(g, L, 2, back));
    ++lifted;
  }
  CHECK(lifted > 40);
}

TEST_CASE("census agrees with the oracle") {
  Graph c4 = build_named("cycle(4)");
  auto c = enumerate_flat(c4, 4, 6, {.depth = 2});
  CHECK(c.counts == oracle::flat_census(c4, 4, 6, 2));
  CHECK(c.counts == std::map<int, std::uint64_t>{{4, 1}, {5, 2}, {6, 2}});

  Graph k23 = build_named("K(2,3)");
  auto k = enumerate_flat(k23, 4, 5, {.depth = 2});
  CHECK(k.counts == oracle::flat_census(k23, 4, 5, 2));

  Graph p3 = build_named("path(3)");
  CHECK(enumerate_flat(p3, 2, 4).counts == oracle::flat_census(p3, 2, 4, 2));
  Graph c5 = build_named("cycle(5)");
  CHECK(enumerate_flat(c5, 2, 4).counts == oracle::flat_census(c5, 2, 4, 2));
}

TEST_CASE("census contains the appendix representatives") {
  Graph k23 = build_named("K(2,3)");
  auto k = enumerate_flat(k23, 4, 8);
  std::set<std::vector<ColorSet>> found;
  for (const auto& r : k.representatives) found.insert(oracle::canonical(k23, r, 8));
  for (const auto& a : appendix::k23()) {
    CHECK(found.count(oracle::canonical(k23, a, 8)) == 1);
    CHECK(oracle::flat(k23, a, 2));
  }
  Graph c4 = build_named("cycle(4)");
  auto c = enumerate_flat(c4, 4, 8);
  std::set<std::vector<ColorSet>> cfound;
  for (const auto& r : c.representatives) cfound.insert(oracle::canonical(c4, r, 8));
  for (const auto& a : appendix::c4()) CHECK(cfound.count(oracle::canonical(c4, a, 8)) == 1);
}

TEST_CASE("depth settings agree on the small censuses") {
  for (const char* spec : {"cycle(4)", "K(2,3)"}) {
    Graph g = build_named(spec);
    auto d1 = enumerate_flat(g, 4, 8, {.depth = 1});
    auto d2 = enumerate_flat(g, 4, 8, {.depth = 2});
    auto du = enumerate_flat(g, 4, 8, {.depth = kUnboundedDepth});
    CHECK(d1.counts == d2.counts);
    CHECK(d2.counts == du.counts);
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  for (const char* spec : {"cycle(4)", "K(2,3)", "theta(2,2,4)"}) {
    Graph g = build_named(spec);
    auto s = enumerate_flat(g, 4, 7, {.parallel = false});
    auto p1 = enumerate_flat(g, 4, 7, {.workers = 1});
    auto p3 = enumerate_flat(g, 4, 7, {.workers = 3});
    CHECK(s.counts == p1.counts);
    CHECK(s.counts == p3.counts);
    CHECK(s.representatives == p1.representatives);
    CHECK(s.representatives == p3.representatives);
    CHECK(s.stats.leaves == p3.stats.leaves);
  }
  CHECK_THROWS_AS(enumerate_flat(build_named("cycle(13)"), 4, 6), InputError);
}

TEST_CASE("verify_choosable") {
  Graph c4 = build_named("cycle(4)");
  auto ok = verify_choosable(c4, 4, 2, 8);
  CHECK(ok.choosable);
  CHECK_FALSE(ok.counterexample);
  CHECK(ok.checked >= 5);

  Graph t = build_named("theta(3,3,3)");
  auto bad = verify_choosable(t, 4, 2, 8);
  CHECK_FALSE(bad.choosable);
  REQUIRE(bad.counterexample);
  CHECK(uniform_size(*bad.counterexample) == 4);
  CHECK_FALSE(oracle::colorable(t, *bad.counterexample, 2));

  // (2,1): odd cycles and theta(2,2,3) fail, theta(2,2,4) passes
  CHECK_FALSE(verify_choosable(build_named("cycle(5)"), 2, 1, 4).choosable);
  CHECK(verify_choosable(build_named("theta(2,2,4)"), 2, 1, 6).choosable);
  CHECK_FALSE(verify_choosable(build_named("theta(2,3,3)"), 2, 1, 6).choosable);
}

TEST_CASE("forcing bounds on C4 and K(2,3)") {
  Graph c4 = build_named("cycle(4)");
  auto reps = enumerate_flat(c4, 4, 8).representatives;
  CHECK(verify_forcing_bound(c4, reps, -1, 4, "C4 has no 3-forcing").ok());
  auto strong = verify_c4_strong_claims(c4, reps);
  CHECK(strong.ok());
  CHECK(strong.assignments == reps.size());

  Graph k23 = build_named("K(2,3)");
  auto kreps = enumerate_flat(k23, 4, 8).representatives;
  CHECK(verify_forcing_bound(k23, kreps, -1, 3, "K23 has no 2-forcing").ok());
  // a false claim is reported
  auto wrong = verify_forcing_bound(c4, reps, -1, 6, "C4 never forces");
  CHECK_FALSE(wrong.ok());
}

TEST_CASE("formatting") {
  Graph c4 = build_named("cycle(4)");
  CHECK(format_assignment(c4, lists({"1234", "1256", "3456", "3456"})) == "1234 1256 3456 3456");
}
