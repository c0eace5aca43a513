#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace choosekit {

class InputError : public std::runtime_error {
 public:
  InputError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Simple undirected graph with optional symbolic vertex names.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int add_vertex(const std::string& name = {});
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return m_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  std::vector<std::pair<int, int>> edges() const;

  const std::string& name(int v) const { return names_[v]; }
  void set_name(int v, const std::string& name);
  int find(const std::string& name) const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  int m_ = 0;
};

Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// cycle(n), path(n), theta(a,b,c), theta4(a,b,c,d), K(p,q), complete_bipartite(p,q),
// cube_minus_vertex, k33_minus_edge, figure(id), lollipop(c,t), glued(s1,s2,len), K1,
// chain(l1,..,lk), chain_adj(l1,..,lk)
Graph build_named(std::string_view spec);

struct Bipartition {
  bool bipartite = true;
  std::vector<int> side;       // 0/1 per vertex when bipartite
  std::vector<int> odd_cycle;  // closed walk v0..vk (v0 repeated at end) otherwise
};
Bipartition bipartition(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

// vertices listed in `keep` (in that order) become 0..k-1
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

struct Core {
  Graph graph;
  std::vector<int> to_original;
};
// repeatedly deletes degree-1 vertices; a tree reduces to K1
Core core(const Graph& g);

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // vertex sets, sorted
  std::vector<int> cut_vertices;         // sorted
  std::vector<int> block_count;          // per vertex: number of blocks containing it
};
BlockDecomposition blocks(const Graph& g);
// blocks with at least 3 vertices
std::vector<std::vector<int>> cyclic_blocks(const Graph& g);

// An ear is a vertex sequence; the first ear is a cycle (first == last), later
// ears are paths whose endpoints (only) lie on earlier ears.
using Ear = std::vector<int>;
std::vector<Ear> ear_decomposition(const Graph& g, const std::vector<Ear>& start = {});
bool is_valid_ear_decomposition(const Graph& g, const std::vector<Ear>& ears);

// mapping[v of g] = vertex of h
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);
bool is_isomorphic(const Graph& g, const Graph& h);
std::vector<std::vector<int>> automorphisms(const Graph& g);

struct Contraction {
  Graph graph;
  std::vector<int> to_new;  // old vertex -> new vertex (-1 if deleted)
};
// precondition: uv is an edge lying on no cycle
Contraction contract_cut_edge(const Graph& g, int u, int v);
// precondition: center is the middle of a 5-vertex path of degree-2 vertices;
// deletes center and merges its two neighbours
Contraction contract_degree2_path(const Graph& g, int center);
bool is_cut_edge(const Graph& g, int u, int v);
bool is_degree2_path_center(const Graph& g, int center);

}  // namespace choosekit
