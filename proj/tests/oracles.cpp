#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace oracle {

namespace {

std::vector<ColorSet> subsets(ColorSet s, int b) {
  std::vector<ColorSet> out;
  for (ColorSet t = s;; t = (t - 1) & s) {
    if (__builtin_popcount(t) == b) out.push_back(t);
    if (t == 0) break;
  }
  return out;
}

bool proper(const Graph& g, const std::vector<ColorSet>& phi) {
  for (auto [u, v] : g.edges())
    if (phi[u] & phi[v]) return false;
  return true;
}

void each_coloring(const Graph& g, const ListAssignment& L, int b, const std::function<void(const std::vector<ColorSet>&)>& f) {
  int n = g.num_vertices();
  std::vector<std::vector<ColorSet>> opts(n);
  for (int v = 0; v < n; ++v) opts[v] = subsets(L[v], b);
  std::vector<size_t> idx(n, 0);
  for (int v = 0; v < n; ++v)
    if (opts[v].empty()) return;
  std::vector<ColorSet> phi(n);
  while (true) {
    for (int v = 0; v < n; ++v) phi[v] = opts[v][idx[v]];
    if (proper(g, phi)) f(phi);
    int v = 0;
    while (v < n && ++idx[v] == opts[v].size()) idx[v++] = 0;
    if (v == n) return;
  }
}

int components(const Graph& g, const std::vector<char>& alive) {
  int n = g.num_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : g.edges())
    if (alive[u] && alive[v]) parent[find(u)] = find(v);
  int c = 0;
  for (int v = 0; v < n; ++v) c += alive[v] && find(v) == v;
  return c;
}

}  // namespace

std::uint64_t count_colorings(const Graph& g, const ListAssignment& L, int b) {
  std::uint64_t c = 0;
  each_coloring(g, L, b, [&](const std::vector<ColorSet>&) { ++c; });
  return c;
}

bool colorable(const Graph& g, const ListAssignment& L, int b) { return count_colorings(g, L, b) > 0; }

std::vector<ColorSet> allowed_sets(const Graph& g, const ListAssignment& L, int v, int b) {
  std::set<ColorSet> s;
  each_coloring(g, L, b, [&](const std::vector<ColorSet>& phi) { s.insert(phi[v]); });
  return {s.begin(), s.end()};
}

std::vector<std::vector<int>> automorphisms(const Graph& g) {
  int n = g.num_vertices();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!g.has_edge(p[u], p[v])) {
        ok = false;
        break;
      }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool isomorphic(const Graph& g, const Graph& h) {
  int n = g.num_vertices();
  if (n != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!h.has_edge(p[u], p[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

int cut_vertex_count(const Graph& g) {
  int n = g.num_vertices();
  std::vector<char> alive(n, 1);
  int base = components(g, alive), cuts = 0;
  for (int v = 0; v < n; ++v) {
    alive[v] = 0;
    cuts += components(g, alive) > base;
    alive[v] = 1;
  }
  return cuts;
}

int cyclic_block_count(const Graph& g) {
  // edges on a common simple cycle share a block; enumerate all simple cycles
  auto edges = g.edges();
  int m = static_cast<int>(edges.size()), n = g.num_vertices();
  auto eid = [&](int u, int v) {
    for (int i = 0; i < m; ++i)
      if ((edges[i].first == u && edges[i].second == v) || (edges[i].first == v && edges[i].second == u)) return i;
    return -1;
  };
  std::vector<int> cls(m);
  std::iota(cls.begin(), cls.end(), 0);
  std::vector<char> on_cycle(m, 0);
  std::function<int(int)> find = [&](int x) { return cls[x] == x ? x : cls[x] = find(cls[x]); };
  std::vector<int> path;
  std::vector<char> used(n, 0);
  // cycles whose smallest vertex is the start
  std::function<void(int, int)> dfs = [&](int start, int u) {
    for (int w : g.neighbors(u)) {
      if (w == start && path.size() >= 3) {
        int first = eid(path.back(), start);
        on_cycle[first] = 1;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
          int e = eid(path[i], path[i + 1]);
          on_cycle[e] = 1;
          cls[find(e)] = find(first);
        }
      }
      if (w > start && !used[w]) {
        used[w] = 1;
        path.push_back(w);
        dfs(start, w);
        path.pop_back();
        used[w] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = 1;
    path = {s};
    dfs(s, s);
    used[s] = 0;
  }
  std::set<int> roots;
  for (int i = 0; i < m; ++i)
    if (on_cycle[i]) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

std::vector<ColorSet> canonical(const Graph& g, const ListAssignment& L, int k) {
  auto auts = oracle::automorphisms(g);
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ColorSet> best;
  int n = g.num_vertices();
  do {
    std::vector<ColorSet> img(n);
    for (int v = 0; v < n; ++v) {
      ColorSet s = 0;
      for (int c = 0; c < k; ++c)
        if (L[v] >> c & 1) s |= ColorSet{1} << perm[c];
      img[v] = s;
    }
    for (const auto& a : auts) {
      std::vector<ColorSet> cand(n);
      for (int v = 0; v < n; ++v) cand[v] = img[a[v]];
      if (best.empty() || cand < best) best = cand;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::pair<int, int> score(const Graph& g, const ListAssignment& L) {
  ColorSet p = 0;
  for (ColorSet s : L) p |= s;
  int comps = 0;
  for (int c = 1; c <= 32; ++c) {
    if (!(p >> (c - 1) & 1)) continue;
    std::vector<char> alive(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) alive[v] = L[v] >> (c - 1) & 1;
    comps += components(g, alive);
  }
  return {__builtin_popcount(p), comps};
}

namespace {

bool improves(const Graph& g, const ListAssignment& L, std::pair<int, int> target, int depth) {
  if (depth == 0) return false;
  ColorSet p = 0;
  for (ColorSet s : L) p |= s;
  int n = g.num_vertices();
  for (int a = 1; a <= 32; ++a) {
    if (!(p >> (a - 1) & 1)) continue;
    // components of G_a by repeated search
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
      if (!(L[s] >> (a - 1) & 1) || comp[s] >= 0) continue;
      std::vector<int> st{s};
      comp[s] = nc;
      while (!st.empty()) {
        int u = st.back();
        st.pop_back();
        for (int w : g.neighbors(u))
          if ((L[w] >> (a - 1) & 1) && comp[w] < 0) {
            comp[w] = nc;
            st.push_back(w);
          }
      }
      ++nc;
    }
    for (int c = 0; c < nc; ++c) {
      ColorSet used = 0;
      for (int v = 0; v < n; ++v)
        if (comp[v] == c) used |= L[v];
      for (int b = 1; b <= 32; ++b) {
        if (!(p >> (b - 1) & 1) || (used >> (b - 1) & 1)) continue;
        ListAssignment M = L;
        for (int v = 0; v < n; ++v)
          if (comp[v] == c) M[v] = (M[v] & ~(ColorSet{1} << (a - 1))) | (ColorSet{1} << (b - 1));
        if (score(g, M) < target) return true;
        if (improves(g, M, target, depth - 1)) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool flat(const Graph& g, const ListAssignment& L, int depth) { return !improves(g, L, score(g, L), depth); }

std::map<int, std::uint64_t> flat_census(const Graph& g, int a, int k, int depth) {
  int n = g.num_vertices();
  auto lists = subsets((ColorSet{1} << k) - 1, a);
  std::set<std::vector<ColorSet>> classes;
  std::vector<size_t> idx(n, 0);
  ListAssignment L(n);
  while (true) {
    for (int v = 0; v < n; ++v) L[v] = lists[idx[v]];
    // only the first representative of each colour pattern is canonicalized:
    // colours must first appear in increasing order
    ColorSet seen = 0;
    int next = 0;
    bool normal = true;
    for (int v = 0; v < n && normal; ++v)
      for (int c = 0; c < k; ++c)
        if ((L[v] >> c & 1) && !(seen >> c & 1)) {
          if (c != next) {
            normal = false;
            break;
          }
          seen |= ColorSet{1} << c;
          ++next;
        }
    if (normal) classes.insert(canonical(g, L, k));
    int v = 0;
    while (v < n && ++idx[v] == lists.size()) idx[v++] = 0;
    if (v == n) break;
  }
  std::map<int, std::uint64_t> out;
  for (const auto& c : classes)
    if (flat(g, c, depth)) ++out[score(g, c).first];
  return out;
}

}  // namespace oracle
