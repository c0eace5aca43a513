#include <cctype>

#include "choosekit/figure_data.hpp"
#include "choosekit/graph.hpp"

namespace choosekit {

namespace {

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// splits "name(a, b(c,d), e)" into name and top-level args
void split_call(std::string_view spec, std::string& name, std::vector<std::string>& args) {
  std::string s = trim(spec);
  auto open = s.find('(');
  if (open == std::string::npos) {
    name = s;
    return;
  }
  if (s.back() != ')') throw InputError("unbalanced parentheses in '" + s + "'");
  name = trim(std::string_view(s).substr(0, open));
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  int depth = 0;
  std::string cur;
  for (char c : inner) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw InputError("unbalanced parentheses in '" + s + "'");
    if (c == ',' && depth == 0) {
      args.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw InputError("unbalanced parentheses in '" + s + "'");
  if (!trim(cur).empty() || !args.empty()) args.push_back(trim(cur));
}

int to_int(const std::string& s) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw InputError("expected an integer, got '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw InputError("expected an integer, got '" + s + "'");
  }
}

void add_path(Graph& g, int from, int to, int len) {
  int prev = from;
  for (int i = 1; i < len; ++i) {
    int x = g.add_vertex();
    g.add_edge(prev, x);
    prev = x;
  }
  g.add_edge(prev, to);
}

Graph theta(const std::vector<int>& lens) {
  int ones = 0;
  for (int l : lens) {
    if (l < 1) throw InputError("theta path lengths must be positive");
    ones += l == 1;
  }
  if (ones > 1) throw InputError("theta graph with two paths of length 1 is not simple");
  Graph g(2);
  for (int l : lens) add_path(g, 0, 1, l);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle length must be at least 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// graph whose vertex 0 is the first vertex of a, then path, then b
Graph glue(const Graph& a, const Graph& b, int len) {
  if (len < 0) throw InputError("glue path length must be non-negative");
  Graph g(a.num_vertices());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  int end = 0;
  for (int i = 0; i < len; ++i) {
    int x = g.add_vertex();
    g.add_edge(end, x);
    end = x;
  }
  std::vector<int> map(b.num_vertices());
  map[0] = end;
  for (int v = 1; v < b.num_vertices(); ++v) map[v] = g.add_vertex();
  for (auto [u, v] : b.edges()) g.add_edge(map[u], map[v]);
  return g;
}

}  // namespace

Graph build_named(std::string_view spec) {
  std::string name;
  std::vector<std::string> args;
  split_call(spec, name, args);
  auto need = [&](size_t k) {
    if (args.size() != k)
      throw InputError(name + " expects " + std::to_string(k) + " argument(s), got " + std::to_string(args.size()));
  };
  if (name == "K1") {
    need(0);
    return Graph(1);
  }
  if (name == "cycle" || name == "C") {
    need(1);
    return cycle(to_int(args[0]));
  }
  if (name == "path" || name == "P") {
    need(1);
    int n = to_int(args[0]);
    if (n < 1) throw InputError("path needs at least one vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
  }
  if (name == "theta") {
    need(3);
    return theta({to_int(args[0]), to_int(args[1]), to_int(args[2])});
  }
  if (name == "theta4") {
    need(4);
    return theta({to_int(args[0]), to_int(args[1]), to_int(args[2]), to_int(args[3])});
  }
  if (name == "K" || name == "complete_bipartite") {
    need(2);
    int p = to_int(args[0]), q = to_int(args[1]);
    if (p < 1 || q < 1) throw InputError("complete_bipartite needs positive sides");
    Graph g(p + q);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
    return g;
  }
  if (name == "cube_minus_vertex") {
    need(0);
    // vertices are the non-zero 3-bit masks
    Graph g(7);
    for (int a = 1; a < 8; ++a)
      for (int bit = 0; bit < 3; ++bit) {
        int b = a ^ (1 << bit);
        if (b > a) g.add_edge(a - 1, b - 1);
      }
    return g;
  }
  if (name == "k33_minus_edge") {
    need(0);
    Graph g(6);
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j)
        if (!(i == 2 && j == 5)) g.add_edge(i, j);
    return g;
  }
  if (name == "figure") {
    need(1);
    const FigureData* f = find_figure(args[0]);
    if (!f) throw InputError("unknown figure '" + args[0] + "'");
    return parse_edge_list(f->edges);
  }
  if (name == "lollipop") {
    need(2);
    int c = to_int(args[0]), t = to_int(args[1]);
    if (t < 0) throw InputError("lollipop tail length must be non-negative");
    // vertex 0 is the free end of the tail
    Graph tail(1);
    return glue(tail, cycle(c), t);
  }
  if (name == "chain" || name == "chain_adj") {
    // cycles joined in a path; each cycle leaves from the vertex opposite
    // (chain) or next to (chain_adj) the one it was entered at
    if (args.empty()) throw InputError(name + " needs at least one cycle length");
    Graph g;
    int entry = -1;
    for (const auto& a : args) {
      int len = to_int(a);
      if (len < 3) throw InputError("cycle length must be at least 3");
      std::vector<int> c(len);
      c[0] = entry >= 0 ? entry : g.add_vertex();
      for (int i = 1; i < len; ++i) c[i] = g.add_vertex();
      for (int i = 0; i < len; ++i) g.add_edge(c[i], c[(i + 1) % len]);
      entry = c[name == "chain" ? len / 2 : 1];
    }
    return g;
  }
  if (name == "glued") {
    need(3);
    return glue(build_named(args[0]), build_named(args[1]), to_int(args[2]));
  }
  throw InputError("unknown named graph '" + name + "'");
}

}  // namespace choosekit
