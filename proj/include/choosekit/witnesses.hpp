#pragma once

#include <optional>
#include <string>
#include <vector>

#include "choosekit/classifier.hpp"
#include "choosekit/coloring.hpp"
#include "json.hpp"

namespace choosekit {

struct ForcingClaim {
  std::string vertex;
  std::string shape;             // as produced by forcing_shape
  std::vector<ColorSet> allowed; // exact allowed set
};

// Fix phi(root)=root_set, then each step's vertex has exactly `set` left
// (or at most one colour when set == 0) after removing colours of fixed neighbours.
struct CaseChain {
  std::string root;
  ColorSet root_set = 0;
  std::vector<std::pair<std::string, ColorSet>> steps;
};

struct CatalogueEntry {
  enum class Kind { bad, forcing } kind = Kind::bad;
  std::string id;
  std::string family;  // gbad, gcycles, mixed, forcing
  std::string member;  // e.g. K(3,3); empty for gcycles and forcing
  std::string source;  // figure or search
  Graph graph;
  ListAssignment lists;
  std::vector<ForcingClaim> claims;
  std::vector<CaseChain> chains;
};

const std::vector<CatalogueEntry>& catalogue();
const CatalogueEntry* find_entry(const std::string& id);

struct CatalogueCheck {
  std::string id;
  bool ok = true;
  std::vector<std::string> messages;
};
struct CatalogueReport {
  std::vector<CatalogueCheck> entries;
  bool ok() const;
};
CatalogueReport verify_catalogue();
// replays one chain; returns an error message or empty
std::string replay_chain(const Graph& g, const ListAssignment& L, const CaseChain& chain);

struct WitnessBundle {
  Graph graph;
  ListAssignment lists;
  std::vector<std::string> provenance;
};
nlohmann::json to_json(const WitnessBundle& w);

// L_H on h; embedding.target must be isomorphic to h; m = half the list size
WitnessBundle lift_witness(const Graph& h, const ListAssignment& lh, const Graph& g,
                           const StrongMinorEmbedding& embedding, int m = 2);

// parts are vertex sets of g meeting exactly in v; lists indexed like induced_subgraph(g, part)
std::optional<WitnessBundle> compose_forcing(const Graph& g, int v, const std::vector<int>& part1,
                                             const ListAssignment& l1, const std::vector<int>& part2,
                                             const ListAssignment& l2);

// x has degree 1 in h; l_prime covers every vertex of h, its entry for x is ignored
ListAssignment shift_forcing(const Graph& h, int x, const ListAssignment& l_prime);

struct Construction {
  Graph graph;  // vertex 0 is the hub
  ListAssignment lists;
  int m = 0;
};
Construction construct_non_2mm(int m);
// C4 v1 v2 v3 v4 with the base lists; v1 = vertex 0
Construction base_gadget(int m);

// multi-block search: combines flat block assignments at cut vertices
std::optional<ListAssignment> compose_blocks(const Graph& g, int pot_bound = 8);

// find_obstruction, then catalogue lifting or block composition; nullopt when choosable
std::optional<WitnessBundle> find_witness(const Graph& g);

}  // namespace choosekit
