#include "choosekit/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace choosekit {

Graph::Graph(int n) : adj_(n), names_(n) {
  for (int i = 0; i < n; ++i) {
    names_[i] = std::to_string(i);
    index_[names_[i]] = i;
  }
}

int Graph::add_vertex(const std::string& name) {
  int v = num_vertices();
  std::string nm = name.empty() ? std::to_string(v) : name;
  if (index_.count(nm)) throw InputError("duplicate vertex name '" + nm + "'");
  adj_.emplace_back();
  names_.push_back(nm);
  index_[nm] = v;
  return v;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw InputError("loop at vertex " + names_[u]);
  if (has_edge(u, v)) throw InputError("duplicate edge " + names_[u] + " " + names_[v]);
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < num_vertices(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_name(int v, const std::string& name) {
  if (names_[v] == name) return;
  if (index_.count(name)) throw InputError("duplicate vertex name '" + name + "'");
  index_.erase(names_[v]);
  names_[v] = name;
  index_[name] = v;
}

int Graph::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

// ---------------------------------------------------------------- parsing

static std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

Graph parse_edge_list(std::string_view text) {
  Graph g;
  auto vertex = [&](const std::string& nm) {
    int v = g.find(nm);
    return v >= 0 ? v : g.add_vertex(nm);
  };
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "vertex") {
      if (tok.size() != 2) throw InputError("malformed vertex line", lineno);
      vertex(tok[1]);
      continue;
    }
    if (tok.size() != 2) throw InputError("expected 'u v', got '" + std::string(line) + "'", lineno);
    if (tok[0] == tok[1]) throw InputError("loop at vertex " + tok[0], lineno);
    int u = vertex(tok[0]), v = vertex(tok[1]);
    if (g.has_edge(u, v)) throw InputError("duplicate edge " + tok[0] + " " + tok[1], lineno);
    g.add_edge(u, v);
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) out += "vertex " + g.name(v) + "\n";
  for (auto [u, v] : g.edges()) out += g.name(u) + " " + g.name(v) + "\n";
  return out;
}

// ---------------------------------------------------------------- basic structure

Bipartition bipartition(const Graph& g) {
  int n = g.num_vertices();
  Bipartition res;
  res.side.assign(n, -1);
  std::vector<int> parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (res.side[s] >= 0) continue;
    res.side[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : g.neighbors(u)) {
        if (res.side[v] < 0) {
          res.side[v] = 1 - res.side[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push_back(v);
        } else if (res.side[v] == res.side[u]) {
          std::vector<int> a{u}, b{v};
          int x = u, y = v;
          while (x != y) {
            if (depth[x] >= depth[y]) {
              x = parent[x];
              a.push_back(x);
            } else {
              y = parent[y];
              b.push_back(y);
            }
          }
          b.pop_back();
          std::reverse(b.begin(), b.end());
          a.insert(a.end(), b.begin(), b.end());
          a.push_back(a.front());
          res.bipartite = false;
          res.odd_cycle = a;
          res.side.clear();
          return res;
        }
      }
    }
  }
  return res;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.num_vertices();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s}, st{s};
    seen[s] = 1;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
          st.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.num_vertices() > 0 && connected_components(g).size() == 1; }

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  Graph h;
  std::vector<int> idx(g.num_vertices(), -1);
  for (int v : keep) idx[v] = h.add_vertex(g.name(v));
  for (int v : keep)
    for (int w : g.neighbors(v))
      if (idx[w] > idx[v]) h.add_edge(idx[v], idx[w]);
  return h;
}

Core core(const Graph& g) {
  if (!is_connected(g)) throw InputError("core needs a connected graph");
  int n = g.num_vertices();
  std::vector<int> deg(n), alive(n, 1);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> q;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) q.push_back(v);
  int remaining = n;
  while (!q.empty() && remaining > 1) {
    int v = q.back();
    q.pop_back();
    if (!alive[v] || deg[v] != 1) continue;
    alive[v] = 0;
    --remaining;
    for (int w : g.neighbors(v))
      if (alive[w] && --deg[w] == 1) q.push_back(w);
  }
  Core c;
  for (int v = 0; v < n; ++v)
    if (alive[v]) c.to_original.push_back(v);
  c.graph = induced_subgraph(g, c.to_original);
  return c;
}

BlockDecomposition blocks(const Graph& g) {
  int n = g.num_vertices();
  BlockDecomposition bd;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> estack;
  int timer = 0;
  struct Frame {
    int v, parent;
    size_t next;
  };
  for (int s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    if (g.degree(s) == 0) {
      bd.blocks.push_back({s});
      disc[s] = timer++;
      continue;
    }
    std::vector<Frame> st{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!st.empty()) {
      Frame& f = st.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        int w = nb[f.next++];
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          estack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          st.push_back({w, f.v, 0});
        } else if (disc[w] < disc[f.v]) {
          estack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v, p = f.parent;
        st.pop_back();
        if (p < 0) continue;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
          std::vector<int> blk;
          while (true) {
            auto e = estack.back();
            estack.pop_back();
            blk.push_back(e.first);
            blk.push_back(e.second);
            if (e.first == p && e.second == v) break;
          }
          std::sort(blk.begin(), blk.end());
          blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
          bd.blocks.push_back(std::move(blk));
        }
      }
    }
  }
  std::sort(bd.blocks.begin(), bd.blocks.end());
  bd.block_count.assign(n, 0);
  for (const auto& b : bd.blocks)
    for (int v : b) ++bd.block_count[v];
  for (int v = 0; v < n; ++v)
    if (bd.block_count[v] >= 2) bd.cut_vertices.push_back(v);
  return bd;
}

std::vector<std::vector<int>> cyclic_blocks(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (auto& b : blocks(g).blocks)
    if (b.size() >= 3) out.push_back(b);
  return out;
}

// ---------------------------------------------------------------- ear decompositions

static std::vector<int> find_cycle(const Graph& g) {
  int n = g.num_vertices();
  std::vector<int> parent(n, -2), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (parent[s] != -2) continue;
    parent[s] = -1;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : g.neighbors(u)) {
        if (v == parent[u]) continue;
        if (parent[v] == -2) {
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push_back(v);
          continue;
        }
        std::vector<int> a{u}, b{v};
        int x = u, y = v;
        while (x != y) {
          if (depth[x] >= depth[y]) {
            x = parent[x];
            a.push_back(x);
          } else {
            y = parent[y];
            b.push_back(y);
          }
        }
        b.pop_back();
        std::reverse(b.begin(), b.end());
        a.insert(a.end(), b.begin(), b.end());
        a.push_back(a.front());
        return a;
      }
    }
  }
  return {};
}

std::vector<Ear> ear_decomposition(const Graph& g, const std::vector<Ear>& start) {
  int n = g.num_vertices();
  std::vector<Ear> ears = start;
  std::vector<char> covered(n, 0);
  std::vector<std::vector<char>> used(n);
  for (int v = 0; v < n; ++v) used[v].assign(g.degree(v), 0);
  auto mark_edge = [&](int a, int b) {
    auto ia = std::lower_bound(g.neighbors(a).begin(), g.neighbors(a).end(), b) - g.neighbors(a).begin();
    auto ib = std::lower_bound(g.neighbors(b).begin(), g.neighbors(b).end(), a) - g.neighbors(b).begin();
    used[a][ia] = used[b][ib] = 1;
  };
  if (ears.empty()) {
    auto c = find_cycle(g);
    if (c.empty()) throw InputError("graph has no cycle");
    ears.push_back(c);
  }
  for (const auto& e : ears) {
    for (int v : e) covered[v] = 1;
    for (size_t i = 0; i + 1 < e.size(); ++i) mark_edge(e[i], e[i + 1]);
  }
  while (true) {
    bool found = false;
    for (int u = 0; u < n && !found; ++u) {
      if (!covered[u]) continue;
      const auto& nb = g.neighbors(u);
      for (size_t k = 0; k < nb.size() && !found; ++k) {
        if (used[u][k]) continue;
        int x = nb[k];
        Ear ear{u};
        if (covered[x]) {
          ear.push_back(x);
        } else {
          std::vector<int> parent(n, -1);
          parent[x] = x;
          std::deque<int> q{x};
          int hit = -1, last = -1;
          while (!q.empty() && hit < 0) {
            int a = q.front();
            q.pop_front();
            for (int b : g.neighbors(a)) {
              if (covered[b]) {
                if (b != u) {
                  hit = b;
                  last = a;
                  break;
                }
              } else if (parent[b] < 0) {
                parent[b] = a;
                q.push_back(b);
              }
            }
          }
          if (hit < 0) throw InputError("graph is not 2-connected");
          std::vector<int> mid;
          for (int a = last;; a = parent[a]) {
            mid.push_back(a);
            if (a == x) break;
          }
          std::reverse(mid.begin(), mid.end());
          ear.insert(ear.end(), mid.begin(), mid.end());
          ear.push_back(hit);
        }
        for (int v : ear) covered[v] = 1;
        for (size_t i = 0; i + 1 < ear.size(); ++i) mark_edge(ear[i], ear[i + 1]);
        ears.push_back(std::move(ear));
        found = true;
      }
    }
    if (!found) break;
  }
  for (int v = 0; v < n; ++v)
    if (!covered[v]) throw InputError("graph is not 2-connected");
  return ears;
}

bool is_valid_ear_decomposition(const Graph& g, const std::vector<Ear>& ears) {
  int n = g.num_vertices();
  if (ears.empty()) return false;
  std::vector<char> covered(n, 0);
  std::vector<std::pair<int, int>> seen;
  auto use = [&](int a, int b) {
    if (a < 0 || b < 0 || a >= n || b >= n || !g.has_edge(a, b)) return false;
    auto e = std::minmax(a, b);
    if (std::find(seen.begin(), seen.end(), std::pair<int, int>(e)) != seen.end()) return false;
    seen.emplace_back(e);
    return true;
  };
  const Ear& c = ears[0];
  if (c.size() < 4 || c.front() != c.back()) return false;
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    if (covered[c[i]]) return false;
    covered[c[i]] = 1;
    if (!use(c[i], c[i + 1])) return false;
  }
  for (size_t k = 1; k < ears.size(); ++k) {
    const Ear& e = ears[k];
    if (e.size() < 2 || e.front() == e.back()) return false;
    if (!covered[e.front()] || !covered[e.back()]) return false;
    for (size_t i = 1; i + 1 < e.size(); ++i)
      if (covered[e[i]]) return false;
    for (size_t i = 0; i + 1 < e.size(); ++i)
      if (!use(e[i], e[i + 1])) return false;
    for (int v : e) covered[v] = 1;
  }
  return static_cast<int>(seen.size()) == g.num_edges() &&
         std::all_of(covered.begin(), covered.end(), [](char x) { return x != 0; });
}

// ---------------------------------------------------------------- isomorphism

static std::vector<int> refine(const Graph& g, std::vector<int> col) {
  int n = g.num_vertices();
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{col[v]};
      std::vector<int> nc;
      for (int w : g.neighbors(v)) nc.push_back(col[w]);
      std::sort(nc.begin(), nc.end());
      s.insert(s.end(), nc.begin(), nc.end());
      sig[v] = {s, v};
    }
    std::vector<std::vector<int>> keys;
    for (auto& p : sig) keys.push_back(p.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    if (next == col) break;
    col = next;
  }
  return col;
}

namespace {
struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> cg, ch, order, map, used;
  std::function<bool(const std::vector<int>&)> on_found;

  bool run(size_t i) {
    if (i == order.size()) return on_found(map);
    int v = order[i];
    for (int w = 0; w < h.num_vertices(); ++w) {
      if (used[w] || ch[w] != cg[v]) continue;
      bool ok = true;
      for (int u : g.neighbors(v))
        if (map[u] >= 0 && !h.has_edge(map[u], w)) {
          ok = false;
          break;
        }
      if (ok) {
        int cnt = 0;
        for (int u : g.neighbors(v)) cnt += map[u] >= 0;
        int cnt2 = 0;
        for (int x : h.neighbors(w)) cnt2 += used[x];
        ok = cnt == cnt2;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (run(i + 1)) return true;
      map[v] = -1;
      used[w] = 0;
    }
    return false;
  }
};

std::optional<IsoSearch> prepare(const Graph& g, const Graph& h) {
  int n = g.num_vertices();
  if (n != h.num_vertices() || g.num_edges() != h.num_edges()) return std::nullopt;
  // refine jointly on the disjoint union so colour ids are comparable
  Graph u(2 * n);
  for (auto [a, b] : g.edges()) u.add_edge(a, b);
  for (auto [a, b] : h.edges()) u.add_edge(n + a, n + b);
  std::vector<int> init(2 * n);
  for (int v = 0; v < 2 * n; ++v) init[v] = u.degree(v);
  auto col = refine(u, init);
  std::vector<int> cg(col.begin(), col.begin() + n), ch(col.begin() + n, col.end());
  auto a = cg, b = ch;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;
  IsoSearch s{g, h, cg, ch, {}, std::vector<int>(n, -1), std::vector<int>(n, 0), {}};
  // BFS order from the rarest colour keeps the search connected
  std::vector<int> freq(2 * n + 1, 0);
  for (int c : cg) ++freq[c];
  std::vector<char> placed(n, 0);
  while (static_cast<int>(s.order.size()) < n) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && (best < 0 || freq[cg[v]] < freq[cg[best]])) best = v;
    std::deque<int> q{best};
    placed[best] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      s.order.push_back(x);
      for (int y : g.neighbors(x))
        if (!placed[y]) {
          placed[y] = 1;
          q.push_back(y);
        }
    }
  }
  return s;
}
}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  auto s = prepare(g, h);
  if (!s) return std::nullopt;
  std::optional<std::vector<int>> out;
  s->on_found = [&](const std::vector<int>& m) {
    out = m;
    return true;
  };
  s->run(0);
  return out;
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

std::vector<std::vector<int>> automorphisms(const Graph& g) {
  auto s = prepare(g, g);
  std::vector<std::vector<int>> out;
  s->on_found = [&](const std::vector<int>& m) {
    out.push_back(m);
    return false;
  };
  s->run(0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- contractions

bool is_cut_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) return false;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> st{u};
  seen[u] = 1;
  while (!st.empty()) {
    int a = st.back();
    st.pop_back();
    for (int b : g.neighbors(a)) {
      if ((a == u && b == v) || (a == v && b == u)) continue;
      if (b == v) return false;
      if (!seen[b]) {
        seen[b] = 1;
        st.push_back(b);
      }
    }
  }
  return true;
}

static Contraction merge(const Graph& g, int keep, int gone, int deleted) {
  Contraction c;
  c.to_new.assign(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v == gone || v == deleted) continue;
    c.to_new[v] = c.graph.add_vertex(g.name(v));
  }
  c.to_new[gone] = c.to_new[keep];
  for (auto [a, b] : g.edges()) {
    if (a == deleted || b == deleted) continue;
    int x = c.to_new[a], y = c.to_new[b];
    if (x != y && !c.graph.has_edge(x, y)) c.graph.add_edge(x, y);
  }
  return c;
}

Contraction contract_cut_edge(const Graph& g, int u, int v) {
  if (!is_cut_edge(g, u, v)) throw InputError("edge " + g.name(u) + " " + g.name(v) + " lies on a cycle");
  return merge(g, u, v, -1);
}

bool is_degree2_path_center(const Graph& g, int c) {
  if (c < 0 || c >= g.num_vertices() || g.degree(c) != 2) return false;
  int a = g.neighbors(c)[0], b = g.neighbors(c)[1];
  if (g.degree(a) != 2 || g.degree(b) != 2) return false;
  int a2 = g.neighbors(a)[0] == c ? g.neighbors(a)[1] : g.neighbors(a)[0];
  int b2 = g.neighbors(b)[0] == c ? g.neighbors(b)[1] : g.neighbors(b)[0];
  if (g.degree(a2) != 2 || g.degree(b2) != 2) return false;
  std::vector<int> five{a2, a, c, b, b2};
  std::sort(five.begin(), five.end());
  return std::adjacent_find(five.begin(), five.end()) == five.end();
}

Contraction contract_degree2_path(const Graph& g, int center) {
  if (!is_degree2_path_center(g, center))
    throw InputError("vertex " + g.name(center) + " is not the middle of a 5-vertex path of degree-2 vertices");
  int a = g.neighbors(center)[0], b = g.neighbors(center)[1];
  return merge(g, a, b, center);
}

}  // namespace choosekit
