#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "choosekit/graph.hpp"

namespace choosekit {

// bit (c-1) set <=> colour c present; colours are 1..32
using ColorSet = std::uint32_t;
constexpr int kMaxColor = 32;

inline ColorSet color_bit(int c) { return ColorSet{1} << (c - 1); }
inline int set_size(ColorSet s) { return __builtin_popcount(s); }
ColorSet make_set(std::initializer_list<int> colors);
ColorSet parse_set(std::string_view digits);  // "1235" -> {1,2,3,5}
std::vector<int> set_colors(ColorSet s);
std::string format_set(ColorSet s);  // "1235", or "1,2,13" once a colour exceeds 9
// all b-element subsets of s in increasing bitmask order
std::vector<ColorSet> subsets_of_size(ColorSet s, int b);

using ListAssignment = std::vector<ColorSet>;
using MultiColoring = std::vector<ColorSet>;

// "v: 1 2 3 4" per line, or JSON {"lists": {"v": [..]}, "b": 2}
struct ParsedLists {
  ListAssignment lists;
  std::optional<int> b;
};
ParsedLists parse_lists(const Graph& g, std::string_view text);
std::string format_lists(const Graph& g, const ListAssignment& L);

ColorSet pot(const ListAssignment& L);
// common list size, or -1 when sizes differ
int uniform_size(const ListAssignment& L);

struct Violation {
  enum class Kind { size, subset, edge } kind;
  int u = -1, v = -1;
  std::string message;
};
std::optional<Violation> validate(const Graph& g, const ListAssignment& L, int b, const MultiColoring& phi);

// per-vertex restriction of the admissible b-subsets
struct PartialConstraint {
  std::map<int, ColorSet> forced;
  std::map<int, std::vector<ColorSet>> forbidden;
  std::map<int, std::vector<ColorSet>> only;  // allowed subsets, anything else is excluded
};

std::optional<MultiColoring> find_bfold_coloring(const Graph& g, const ListAssignment& L, int b,
                                                 const PartialConstraint& c = {});
std::uint64_t count_bfold_colorings(const Graph& g, const ListAssignment& L, int b,
                                    const PartialConstraint& c = {});
// visits every b-fold coloring in vertex order; the visitor returns false to stop
void for_each_bfold_coloring(const Graph& g, const ListAssignment& L, int b,
                             const std::function<bool(const MultiColoring&)>& visit);

struct ForcingReport {
  int vertex = -1;
  std::vector<ColorSet> allowed;
  std::vector<ColorSet> forbidden;
  int k = 0;
  std::string shape;
};
std::string forcing_shape(ColorSet list, const std::vector<ColorSet>& allowed, int b);
ForcingReport forcing_analysis(const Graph& g, const ListAssignment& L, int v, int b = 2,
                               const PartialConstraint& c = {});

// perm[c] = image of colour c (index 0 unused); must be a bijection on pot(L)
using ColorPermutation = std::vector<int>;
ColorSet relabel_set(ColorSet s, const ColorPermutation& perm);
ListAssignment relabel_colors(const ListAssignment& L, const ColorPermutation& perm);
ColorPermutation compose(const ColorPermutation& tau, const ColorPermutation& sigma);  // tau after sigma

// replace alpha by beta on every vertex of `component`
struct FlatteningMove {
  int alpha = 0, beta = 0;
  std::vector<int> component;
};

struct PotReduction {
  ListAssignment lists;
  std::vector<FlatteningMove> moves;
};
// X must hold two vertices whose removal leaves paths on at most 3 vertices
PotReduction reduce_pot(const Graph& g, const ListAssignment& L, const std::vector<int>& X, int budget = 8);
// first pair X satisfying the reduce_pot structural precondition
std::optional<std::vector<int>> find_pot_separator(const Graph& g);

constexpr int kPathDpMaxHigh = 8;
std::optional<MultiColoring> path_dp_solve(const Graph& g, const ListAssignment& L, int m,
                                           int max_high = kPathDpMaxHigh);

// colour c of a 2-assignment becomes (c-1)*m+1 .. c*m
ListAssignment duplicate_lists(const ListAssignment& L2, int m);
MultiColoring majority_project(const Graph& g, const ListAssignment& L2, int m, const MultiColoring& phi);

}  // namespace choosekit
