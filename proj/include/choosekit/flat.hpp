#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "choosekit/coloring.hpp"

namespace choosekit {

// connected components of G_alpha, each sorted, ordered by smallest vertex
std::vector<std::vector<int>> color_class_components(const Graph& g, const ListAssignment& L, int alpha);

// errors when beta already appears on the component or the component is not one of G_alpha
ListAssignment apply_move(const Graph& g, const ListAssignment& L, const FlatteningMove& move);

// (|pot|, total number of colour-class components); flattening lowers this lexicographically
struct FlatScore {
  int pot = 0;
  int components = 0;
  auto operator<=>(const FlatScore&) const = default;
};
FlatScore flat_score(const Graph& g, const ListAssignment& L);

// depth = maximum length of move sequences explored; -1 means unbounded
constexpr int kDefaultFlatDepth = 2;
constexpr int kUnboundedDepth = -1;

// shortest move sequence (up to `depth`) reaching a strictly better score, if any
std::optional<std::vector<FlatteningMove>> find_improving_sequence(const Graph& g, const ListAssignment& L,
                                                                   int depth = kDefaultFlatDepth);
bool is_flat(const Graph& g, const ListAssignment& L, int depth = kDefaultFlatDepth);

struct FlattenResult {
  ListAssignment lists;
  std::vector<FlatteningMove> moves;
};
// greedy single improving moves, then deeper improving sequences, until none is found
FlattenResult flatten(const Graph& g, const ListAssignment& L, int depth = kDefaultFlatDepth);

// maps a coloring of the flattened lists back to one of L, undoing moves in reverse
MultiColoring lift_coloring(const Graph& g, const ListAssignment& L, const std::vector<FlatteningMove>& moves,
                            const MultiColoring& phi_flat, int b);

struct EnumOptions {
  int depth = kDefaultFlatDepth;
  int workers = 0;        // 0: CHOOSEKIT_WORKERS or the OpenMP default
  bool parallel = true;   // false runs the serial reference
  bool exact_flat = true; // false keeps every locally flat candidate
};

struct EnumStats {
  std::uint64_t leaves = 0;     // multisets reaching the last vertex
  std::uint64_t canonical = 0;  // leaves surviving the isomorphism filter
  std::uint64_t flat = 0;       // canonical leaves passing the flatness filter
  std::uint64_t units = 0;      // parallel work units
};

struct FlatCensus {
  std::map<int, std::uint64_t> counts;  // pot size -> number of classes
  std::vector<ListAssignment> representatives;
  EnumStats stats;
};
FlatCensus enumerate_flat(const Graph& g, int a, int pot_bound, const EnumOptions& opt = {});

struct ChoosabilityCertificate {
  bool choosable = false;
  std::optional<ListAssignment> counterexample;
  EnumStats stats;
  std::uint64_t checked = 0;  // solver calls
};
// EnumOptions::exact_flat defaults off here: checking the locally flat superset is still sound
ChoosabilityCertificate verify_choosable(const Graph& g, int a, int b, int pot_bound, EnumOptions opt = {.exact_flat = false});

int resolve_workers(int requested);

struct ForcingClaimReport {
  std::string claim;
  std::uint64_t assignments = 0;
  std::uint64_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
// no flat a-assignment restricts `vertex` (or any vertex when -1) to fewer than min_allowed subsets
ForcingClaimReport verify_forcing_bound(const Graph& g, const std::vector<ListAssignment>& flat_reps, int vertex,
                                        int min_allowed, const std::string& claim);
// C4 only: 4-forcing assignments forbid two sets sharing a colour, and the opposite-vertex trichotomy
ForcingClaimReport verify_c4_strong_claims(const Graph& c4, const std::vector<ListAssignment>& flat_reps);

std::string format_assignment(const Graph& g, const ListAssignment& L);  // "1234 1234 1256 ..."

}  // namespace choosekit
