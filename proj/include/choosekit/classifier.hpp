#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "choosekit/graph.hpp"
#include "json.hpp"

namespace choosekit {

// One reduction step on a graph whose vertex ids stay stable; identify creates a fresh id.
struct MinorStep {
  enum class Op { delete_vertex, delete_edge, identify } op;
  int v = -1;
  int w = -1;  // second endpoint for delete_edge
};

struct StrongMinorEmbedding {
  std::vector<MinorStep> steps;
  Graph target;                 // graph reached after the steps, vertices in increasing id order
  std::vector<int> target_ids;  // target vertex -> workspace id
};

struct ReplayResult {
  Graph graph;
  std::vector<int> ids;                    // graph vertex -> workspace id
  std::vector<std::vector<int>> merged;    // per identify step: neighbours that were merged
  std::vector<int> created;                // per step: new id created by identify, else -1
};
// throws InputError on a step that does not apply
ReplayResult replay_steps(const Graph& g, const std::vector<MinorStep>& steps);

struct ObstructionDescriptor {
  // odd_cycle, gbad_member, gcycles_member, mixed_violation, block_count, block_shape,
  // c4_position, adjacent_cut_vertices
  std::string kind;
  std::string name;    // catalogue id or rule detail
  std::string detail;
  std::vector<int> vertices;  // vertices of the input graph involved (cycle, blocks, ...)
  std::optional<StrongMinorEmbedding> embedding;
};

struct ClassificationResult {
  bool choosable = false;
  std::string case_tag;  // i .. ix when choosable
  std::map<std::string, int> params;
  std::optional<ObstructionDescriptor> obstruction;
  Graph core;
  std::vector<int> core_to_original;
  std::vector<std::string> trace;
};

// G must be connected
ClassificationResult classify_42(const Graph& g, bool locate_obstruction = true);
// every component must be choosable
bool classify_42_components(const Graph& g, std::vector<ClassificationResult>* per_component = nullptr);

struct Classification21 {
  bool choosable = false;
  std::string form;  // K1, C2s, theta(2,2,2s), or the reason it fails
  std::map<std::string, int> params;
};
Classification21 classify_21(const Graph& g);

// sorted path lengths of a theta graph with 3 or 4 paths
std::optional<std::vector<int>> recognize_theta(const Graph& g);

struct MixedForm {
  enum class Kind { none, allowed, disallowed } kind = Kind::none;
  int length = 0;                  // added length on the subdivided path (allowed)
  std::vector<int> subdivided;     // vertices of the long even path (allowed)
  std::string pattern;             // figY or figZ (disallowed)
};
MixedForm recognize_mixed(const Graph& g);

struct ReductionTrace {
  Graph graph;
  std::vector<int> to_original;  // reduced vertex -> one original vertex it came from
  std::vector<std::string> steps;
  std::vector<Graph> stages;     // graph after core and after every contraction
};
ReductionTrace reduce_instance(const Graph& g);

// requires classify_42(g) to be negative
ObstructionDescriptor find_obstruction(const Graph& g);

nlohmann::json to_json(const Graph& g, const ClassificationResult& r);
nlohmann::json to_json(const Graph& g, const ObstructionDescriptor& o);

}  // namespace choosekit
