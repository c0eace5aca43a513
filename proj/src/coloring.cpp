#include "choosekit/coloring.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace choosekit {

ColorSet make_set(std::initializer_list<int> colors) {
  ColorSet s = 0;
  for (int c : colors) s |= color_bit(c);
  return s;
}

ColorSet parse_set(std::string_view digits) {
  ColorSet s = 0;
  for (char ch : digits) {
    if (ch < '1' || ch > '9') throw InputError("bad colour digit '" + std::string(1, ch) + "'");
    s |= color_bit(ch - '0');
  }
  return s;
}

std::vector<int> set_colors(ColorSet s) {
  std::vector<int> out;
  for (int c = 1; c <= kMaxColor; ++c)
    if (s & color_bit(c)) out.push_back(c);
  return out;
}

std::string format_set(ColorSet s) {
  auto cs = set_colors(s);
  bool wide = !cs.empty() && cs.back() > 9;
  std::string out;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (wide && i) out += ',';
    out += std::to_string(cs[i]);
  }
  return out;
}

std::vector<ColorSet> subsets_of_size(ColorSet s, int b) {
  std::vector<ColorSet> out;
  auto cs = set_colors(s);
  int a = static_cast<int>(cs.size());
  if (b < 0 || b > a) return out;
  std::vector<int> idx(b);
  for (int i = 0; i < b; ++i) idx[i] = i;
  while (true) {
    ColorSet t = 0;
    for (int i : idx) t |= color_bit(cs[i]);
    out.push_back(t);
    int i = b - 1;
    while (i >= 0 && idx[i] == a - b + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < b; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- list I/O

ParsedLists parse_lists(const Graph& g, std::string_view text) {
  ParsedLists out;
  int n = g.num_vertices();
  out.lists.assign(n, 0);
  std::vector<char> seen(n, 0);
  auto set_list = [&](const std::string& name, const std::vector<long long>& colors, int line) {
    int v = g.find(name);
    if (v < 0) throw InputError("unknown vertex '" + name + "'", line);
    if (seen[v]) throw InputError("vertex '" + name + "' listed twice", line);
    seen[v] = 1;
    for (long long c : colors) {
      if (c < 1 || c > kMaxColor) throw InputError("colour " + std::to_string(c) + " outside 1..32", line);
      if (out.lists[v] & color_bit(static_cast<int>(c)))
        throw InputError("colour " + std::to_string(c) + " repeated in list of '" + name + "'", line);
      out.lists[v] |= color_bit(static_cast<int>(c));
    }
  };
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed JSON lists: ") + e.what());
    }
    if (!j.contains("lists") || !j["lists"].is_object()) throw InputError("JSON lists need a \"lists\" object");
    for (auto& [k, val] : j["lists"].items()) {
      if (!val.is_array()) throw InputError("list of '" + k + "' is not an array");
      std::vector<long long> cs;
      for (auto& c : val) {
        if (!c.is_number_integer()) throw InputError("non-integer colour in list of '" + k + "'");
        cs.push_back(c.get<long long>());
      }
      set_list(k, cs, 0);
    }
    if (j.contains("b")) out.b = j["b"].get<int>();
  } else {
    int lineno = 0;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      auto colon = line.find(':');
      if (colon == std::string::npos) throw InputError("expected 'v: c1 c2 ...'", lineno);
      std::string name = line.substr(0, colon);
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      std::istringstream rest(line.substr(colon + 1));
      std::vector<long long> cs;
      std::string tok;
      while (rest >> tok) {
        try {
          size_t used = 0;
          cs.push_back(std::stoll(tok, &used));
          if (used != tok.size()) throw InputError("bad colour '" + tok + "'", lineno);
        } catch (const std::logic_error&) {
          throw InputError("bad colour '" + tok + "'", lineno);
        }
      }
      set_list(name, cs, lineno);
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw InputError("no list given for vertex '" + g.name(v) + "'");
  if (n > 0 && uniform_size(out.lists) < 0) throw InputError("lists have different sizes");
  return out;
}

std::string format_lists(const Graph& g, const ListAssignment& L) {
  std::string out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    out += g.name(v) + ":";
    for (int c : set_colors(L[v])) out += " " + std::to_string(c);
    out += "\n";
  }
  return out;
}

ColorSet pot(const ListAssignment& L) {
  ColorSet s = 0;
  for (ColorSet x : L) s |= x;
  return s;
}

int uniform_size(const ListAssignment& L) {
  if (L.empty()) return 0;
  int a = set_size(L[0]);
  for (ColorSet x : L)
    if (set_size(x) != a) return -1;
  return a;
}

std::optional<Violation> validate(const Graph& g, const ListAssignment& L, int b, const MultiColoring& phi) {
  if (static_cast<int>(phi.size()) != g.num_vertices() || static_cast<int>(L.size()) != g.num_vertices())
    return Violation{Violation::Kind::size, -1, -1, "colouring does not cover the vertex set"};
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (set_size(phi[v]) != b)
      return Violation{Violation::Kind::size, v, -1, "vertex " + g.name(v) + " gets " + std::to_string(set_size(phi[v])) + " colours"};
    if ((phi[v] & ~L[v]) != 0)
      return Violation{Violation::Kind::subset, v, -1, "vertex " + g.name(v) + " uses colours outside its list"};
  }
  for (auto [u, v] : g.edges())
    if (phi[u] & phi[v])
      return Violation{Violation::Kind::edge, u, v, "edge " + g.name(u) + " " + g.name(v) + " shares a colour"};
  return std::nullopt;
}

// ---------------------------------------------------------------- solver

namespace {

constexpr int kDomWords = 4;
struct Domain {
  std::array<std::uint64_t, kDomWords> w{};
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  bool empty() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  Domain& operator&=(const Domain& o) {
    for (int i = 0; i < kDomWords; ++i) w[i] &= o.w[i];
    return *this;
  }
  bool operator==(const Domain& o) const { return w == o.w; }
};

class Solver {
 public:
  Solver(const Graph& g, const ListAssignment& L, int b, const PartialConstraint& c) : g_(g) {
    int n = g.num_vertices();
    if (static_cast<int>(L.size()) != n) throw InputError("list assignment does not match the graph");
    cand_.resize(n);
    dom_.resize(n);
    for (int v = 0; v < n; ++v) {
      cand_[v] = subsets_of_size(L[v], b);
      if (static_cast<int>(cand_[v].size()) > 64 * kDomWords) throw InputError("too many b-subsets per list for the solver");
      for (size_t i = 0; i < cand_[v].size(); ++i) dom_[v].set(static_cast<int>(i));
    }
    auto check_vertex = [&](int v) {
      if (v < 0 || v >= n) throw InputError("constraint references unknown vertex " + std::to_string(v));
    };
    for (auto& [v, s] : c.forced) {
      check_vertex(v);
      Domain d;
      for (size_t i = 0; i < cand_[v].size(); ++i)
        if (cand_[v][i] == s) d.set(static_cast<int>(i));
      dom_[v] &= d;
    }
    for (auto& [v, xs] : c.forbidden) {
      check_vertex(v);
      for (size_t i = 0; i < cand_[v].size(); ++i)
        if (std::find(xs.begin(), xs.end(), cand_[v][i]) != xs.end()) dom_[v].reset(static_cast<int>(i));
    }
    for (auto& [v, xs] : c.only) {
      check_vertex(v);
      for (size_t i = 0; i < cand_[v].size(); ++i)
        if (std::find(xs.begin(), xs.end(), cand_[v][i]) == xs.end()) dom_[v].reset(static_cast<int>(i));
    }
    // compat_[v][k][i]: candidates of the k-th neighbour disjoint from cand_[v][i]
    compat_.resize(n);
    for (int v = 0; v < n; ++v) {
      const auto& nb = g.neighbors(v);
      compat_[v].resize(nb.size());
      for (size_t k = 0; k < nb.size(); ++k) {
        int w = nb[k];
        compat_[v][k].resize(cand_[v].size());
        for (size_t i = 0; i < cand_[v].size(); ++i)
          for (size_t j = 0; j < cand_[w].size(); ++j)
            if (!(cand_[v][i] & cand_[w][j])) compat_[v][k][i].set(static_cast<int>(j));
      }
    }
    assigned_.assign(n, -1);
  }

  std::optional<MultiColoring> find() {
    for (auto& d : dom_)
      if (d.empty()) return std::nullopt;
    if (!search()) return std::nullopt;
    MultiColoring phi(g_.num_vertices());
    for (int v = 0; v < g_.num_vertices(); ++v) phi[v] = cand_[v][assigned_[v]];
    return phi;
  }

  std::uint64_t count() {
    for (auto& d : dom_)
      if (d.empty()) return 0;
    return count_rec();
  }

 private:
  int pick() const {
    int best = -1, best_c = 1 << 30, best_deg = -1;
    for (int v = 0; v < g_.num_vertices(); ++v) {
      if (assigned_[v] >= 0) continue;
      int c = dom_[v].count();
      int d = g_.degree(v);
      if (c < best_c || (c == best_c && d > best_deg)) {
        best = v;
        best_c = c;
        best_deg = d;
      }
    }
    return best;
  }

  // assigns v=i and filters unassigned neighbours; false on a wipe-out
  bool assign(int v, int i, size_t& mark) {
    mark = trail_.size();
    assigned_[v] = i;
    const auto& nb = g_.neighbors(v);
    for (size_t k = 0; k < nb.size(); ++k) {
      int w = nb[k];
      if (assigned_[w] >= 0) continue;
      Domain nd = dom_[w];
      nd &= compat_[v][k][i];
      if (nd == dom_[w]) continue;
      trail_.emplace_back(w, dom_[w]);
      dom_[w] = nd;
      if (nd.empty()) return false;
    }
    return true;
  }

  void undo(int v, size_t mark) {
    while (trail_.size() > mark) {
      dom_[trail_.back().first] = trail_.back().second;
      trail_.pop_back();
    }
    assigned_[v] = -1;
  }

  bool search() {
    int v = pick();
    if (v < 0) return true;
    for (size_t i = 0; i < cand_[v].size(); ++i) {
      if (!dom_[v].test(static_cast<int>(i))) continue;
      size_t mark;
      bool ok = assign(v, static_cast<int>(i), mark);
      if (ok && search()) return true;
      undo(v, mark);
    }
    return false;
  }

  std::uint64_t count_rec() {
    int v = pick();
    if (v < 0) return 1;
    bool isolated = true;
    for (int w : g_.neighbors(v))
      if (assigned_[w] < 0) isolated = false;
    if (isolated) {
      std::uint64_t k = dom_[v].count();
      int first = -1;
      for (size_t i = 0; i < cand_[v].size() && first < 0; ++i)
        if (dom_[v].test(static_cast<int>(i))) first = static_cast<int>(i);
      size_t mark;
      assign(v, first, mark);
      std::uint64_t rest = count_rec();
      undo(v, mark);
      return k * rest;
    }
    std::uint64_t total = 0;
    for (size_t i = 0; i < cand_[v].size(); ++i) {
      if (!dom_[v].test(static_cast<int>(i))) continue;
      size_t mark;
      if (assign(v, static_cast<int>(i), mark)) total += count_rec();
      undo(v, mark);
    }
    return total;
  }

  const Graph& g_;
  std::vector<std::vector<ColorSet>> cand_;
  std::vector<Domain> dom_;
  std::vector<std::vector<std::vector<Domain>>> compat_;
  std::vector<int> assigned_;
  std::vector<std::pair<int, Domain>> trail_;
};

}  // namespace

std::optional<MultiColoring> find_bfold_coloring(const Graph& g, const ListAssignment& L, int b,
                                                 const PartialConstraint& c) {
  return Solver(g, L, b, c).find();
}

std::uint64_t count_bfold_colorings(const Graph& g, const ListAssignment& L, int b, const PartialConstraint& c) {
  return Solver(g, L, b, c).count();
}

void for_each_bfold_coloring(const Graph& g, const ListAssignment& L, int b,
                             const std::function<bool(const MultiColoring&)>& visit) {
  int n = g.num_vertices();
  if (static_cast<int>(L.size()) != n) throw InputError("list assignment size does not match the graph");
  std::vector<std::vector<ColorSet>> options(n);
  for (int v = 0; v < n; ++v) options[v] = subsets_of_size(L[v], b);
  MultiColoring phi(n, 0);
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return visit(phi);
    for (ColorSet s : options[v]) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (w < v && (phi[w] & s)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      phi[v] = s;
      if (!rec(v + 1)) return false;
    }
    phi[v] = 0;
    return true;
  };
  rec(0);
}

std::string forcing_shape(ColorSet list, const std::vector<ColorSet>& allowed, int b) {
  int k = static_cast<int>(allowed.size());
  int total = static_cast<int>(subsets_of_size(list, b).size());
  if (k == 0) return "0";
  if (set_size(list) != 4 || b != 2) return k == total ? "unforced" : std::to_string(k);
  ColorSet common = list, uni = 0;
  for (ColorSet s : allowed) {
    common &= s;
    uni |= s;
  }
  switch (k) {
    case 1:
      return "1";
    case 2:
      return common ? "2_in" : "2_comp";
    case 3:
      if (common) return "3_in";
      return set_size(uni) == 3 ? "3_out" : "3_other";
    case 4: {
      ColorSet fc = list;
      for (ColorSet s : subsets_of_size(list, 2))
        if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) fc &= s;
      return fc ? "4_out" : "4_other";
    }
    case 5:
      return "5";
    default:
      return "6_unforced";
  }
}

ForcingReport forcing_analysis(const Graph& g, const ListAssignment& L, int v, int b, const PartialConstraint& c) {
  if (v < 0 || v >= g.num_vertices()) throw InputError("forcing vertex out of range");
  ForcingReport r;
  r.vertex = v;
  for (ColorSet s : subsets_of_size(L[v], b)) {
    PartialConstraint cc = c;
    if (auto it = cc.forced.find(v); it != cc.forced.end() && it->second != s) {
      r.forbidden.push_back(s);
      continue;
    }
    cc.forced[v] = s;
    if (find_bfold_coloring(g, L, b, cc))
      r.allowed.push_back(s);
    else
      r.forbidden.push_back(s);
  }
  r.k = static_cast<int>(r.allowed.size());
  r.shape = forcing_shape(L[v], r.allowed, b);
  return r;
}

// ---------------------------------------------------------------- relabelling

ColorSet relabel_set(ColorSet s, const ColorPermutation& perm) {
  ColorSet out = 0;
  for (int c : set_colors(s)) {
    if (c >= static_cast<int>(perm.size()) || perm[c] < 1 || perm[c] > kMaxColor)
      throw InputError("permutation does not map colour " + std::to_string(c));
    out |= color_bit(perm[c]);
  }
  return out;
}

ListAssignment relabel_colors(const ListAssignment& L, const ColorPermutation& perm) {
  ColorSet p = pot(L), img = 0;
  for (int c : set_colors(p)) {
    ColorSet b = relabel_set(color_bit(c), perm);
    if (img & b) throw InputError("colour permutation is not injective on the pot");
    img |= b;
  }
  ListAssignment out(L.size());
  for (size_t v = 0; v < L.size(); ++v) out[v] = relabel_set(L[v], perm);
  return out;
}

ColorPermutation compose(const ColorPermutation& tau, const ColorPermutation& sigma) {
  ColorPermutation out(sigma.size(), 0);
  for (size_t c = 1; c < sigma.size(); ++c)
    if (sigma[c] > 0 && sigma[c] < static_cast<int>(tau.size())) out[c] = tau[sigma[c]];
  return out;
}

// ---------------------------------------------------------------- pot reduction

namespace {

std::vector<std::vector<int>> colour_components(const Graph& g, const ListAssignment& L, int alpha) {
  int n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
  ColorSet bit = color_bit(alpha);
  for (int s = 0; s < n; ++s) {
    if (seen[s] || !(L[s] & bit)) continue;
    std::vector<int> comp{s}, st{s};
    seen[s] = 1;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int w : g.neighbors(u))
        if (!seen[w] && (L[w] & bit)) {
          seen[w] = 1;
          comp.push_back(w);
          st.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::string separator_problem(const Graph& g, const std::vector<int>& X) {
  int n = g.num_vertices();
  std::vector<char> inx(n, 0);
  for (int x : X) {
    if (x < 0 || x >= n) return "vertex out of range";
    inx[x] = 1;
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!inx[v]) rest.push_back(v);
  Graph h = induced_subgraph(g, rest);
  for (const auto& comp : connected_components(h)) {
    if (comp.size() > 3) return "G-X has a component with more than 3 vertices";
    int edges = 0;
    for (int a : comp) edges += h.degree(a);
    edges /= 2;
    if (edges != static_cast<int>(comp.size()) - 1) return "G-X has a component that is not a path";
    if (comp.size() == 3) {
      for (int a : comp)
        if (h.degree(a) == 2 && g.degree(rest[a]) != 2) return "middle vertex of a 3-vertex path has a neighbour in X";
    }
  }
  return {};
}

}  // namespace

std::optional<std::vector<int>> find_pot_separator(const Graph& g) {
  int n = g.num_vertices();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (separator_problem(g, {a, b}).empty()) return std::vector<int>{a, b};
  return std::nullopt;
}

PotReduction reduce_pot(const Graph& g, const ListAssignment& L, const std::vector<int>& X, int budget) {
  std::string why = separator_problem(g, X);
  std::string xs;
  for (int x : X) xs += (xs.empty() ? "" : ",") + g.name(x);
  if (!why.empty()) throw InputError("X = {" + xs + "}: " + why);
  ColorSet xl = 0;
  for (int x : X) xl |= L[x];
  if (set_size(xl) > budget) throw InputError("X = {" + xs + "}: lists on X exceed the budget");
  PotReduction r{L, {}};
  if (set_size(pot(L)) <= budget) return r;
  int n = g.num_vertices();
  std::vector<char> inx(n, 0);
  for (int x : X) inx[x] = 1;
  auto apply = [&](int alpha, int beta, const std::vector<int>& comp) {
    for (int v : comp) r.lists[v] = (r.lists[v] & ~color_bit(alpha)) | color_bit(beta);
    r.moves.push_back({alpha, beta, comp});
  };
  // isolated occurrences outside X borrow a colour from a neighbour
  for (bool changed = true; changed;) {
    changed = false;
    for (int alpha : set_colors(pot(r.lists))) {
      for (const auto& comp : colour_components(g, r.lists, alpha)) {
        int v = comp[0];
        if (comp.size() != 1 || inx[v] || g.degree(v) == 0) continue;
        ColorSet nb = 0;
        for (int w : g.neighbors(v)) nb |= r.lists[w];
        ColorSet options = nb & ~r.lists[v];
        if (!options) continue;
        apply(alpha, __builtin_ctz(options) + 1, comp);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  ColorSet S = xl;
  for (int c : set_colors(pot(r.lists))) {
    if (set_size(S) >= budget) break;
    S |= color_bit(c);
  }
  for (size_t limit : {size_t{2}, size_t{3}}) {
    for (bool changed = true; changed;) {
      changed = false;
      for (int alpha : set_colors(pot(r.lists) & ~S)) {
        for (const auto& comp : colour_components(g, r.lists, alpha)) {
          if (comp.size() > limit) continue;
          ColorSet used = 0;
          for (int v : comp) used |= r.lists[v];
          ColorSet options = S & ~used;
          if (!options) throw InputError("no free colour in S for a small component");
          apply(alpha, __builtin_ctz(options) + 1, comp);
          changed = true;
          break;
        }
        if (changed) break;
      }
    }
  }
  if (set_size(pot(r.lists)) > budget) throw InputError("pot reduction did not reach the budget");
  return r;
}

// ---------------------------------------------------------------- path DP

std::optional<MultiColoring> path_dp_solve(const Graph& g, const ListAssignment& L, int m, int max_high) {
  int n = g.num_vertices();
  if (m < 1) throw InputError("fold must be positive");
  for (int v = 0; v < n; ++v)
    if (set_size(L[v]) != 2 * m) throw InputError("path DP needs lists of size 2m");
  std::vector<int> high;
  std::vector<int> hidx(n, -1);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 3) {
      hidx[v] = static_cast<int>(high.size());
      high.push_back(v);
    }
  if (static_cast<int>(high.size()) > max_high)
    throw InputError(std::to_string(high.size()) + " vertices of degree >= 3 exceed the path DP limit of " +
                     std::to_string(max_high) + "; use the generic solver");
  std::vector<std::vector<ColorSet>> cand(n);
  for (int v = 0; v < n; ++v) cand[v] = subsets_of_size(L[v], m);

  struct Piece {
    std::vector<int> verts;
    bool cycle = false;
    std::vector<int> xa, xb;  // high neighbours of the first / last vertex
    int ready = -1;           // index in `high` after which every attached high vertex is coloured
    // pred[i][c1 * C + ci] = candidate of verts[i-1], -1 unreachable, -2 start
    std::vector<std::vector<int>> pred;
  };
  std::vector<Piece> pieces;
  std::vector<char> seen(n, 0);
  auto low_nb = [&](int v) {
    std::vector<int> out;
    for (int w : g.neighbors(v))
      if (hidx[w] < 0) out.push_back(w);
    return out;
  };
  for (int s = 0; s < n; ++s) {
    if (hidx[s] >= 0 || seen[s]) continue;
    std::vector<int> comp, st{s};
    seen[s] = 1;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      comp.push_back(u);
      for (int w : low_nb(u))
        if (!seen[w]) {
          seen[w] = 1;
          st.push_back(w);
        }
    }
    Piece p;
    int start = -1;
    for (int u : comp)
      if (low_nb(u).size() <= 1 && (start < 0 || u < start)) start = u;
    if (start < 0) {
      p.cycle = true;
      start = *std::min_element(comp.begin(), comp.end());
    }
    int prev = -1, cur = start;
    while (true) {
      p.verts.push_back(cur);
      int next = -1;
      for (int w : low_nb(cur))
        if (w != prev && w != start) next = w;
      if (next < 0 || (p.cycle && next == start)) break;
      if (static_cast<int>(p.verts.size()) > static_cast<int>(comp.size())) break;
      prev = cur;
      cur = next;
    }
    for (int w : g.neighbors(p.verts.front()))
      if (hidx[w] >= 0) p.xa.push_back(w);
    for (int w : g.neighbors(p.verts.back()))
      if (hidx[w] >= 0) p.xb.push_back(w);
    for (int w : p.xa) p.ready = std::max(p.ready, hidx[w]);
    for (int w : p.xb) p.ready = std::max(p.ready, hidx[w]);
    pieces.push_back(std::move(p));
  }

  // endpoint-pair reachability tables
  for (auto& p : pieces) {
    int k = static_cast<int>(p.verts.size());
    int c1n = static_cast<int>(cand[p.verts[0]].size());
    p.pred.resize(k);
    for (int i = 0; i < k; ++i) {
      int ci = static_cast<int>(cand[p.verts[i]].size());
      p.pred[i].assign(static_cast<size_t>(c1n) * ci, -1);
    }
    for (int a = 0; a < c1n; ++a) p.pred[0][a * c1n + a] = -2;
    for (int i = 1; i < k; ++i) {
      const auto& cp = cand[p.verts[i - 1]];
      const auto& cc = cand[p.verts[i]];
      int np = static_cast<int>(cp.size()), nc = static_cast<int>(cc.size());
      for (int a = 0; a < c1n; ++a)
        for (int x = 0; x < np; ++x) {
          if (p.pred[i - 1][a * np + x] == -1) continue;
          for (int y = 0; y < nc; ++y)
            if (!(cp[x] & cc[y]) && p.pred[i][a * nc + y] == -1) p.pred[i][a * nc + y] = x;
        }
    }
  }

  std::vector<ColorSet> hc(high.size(), 0);
  // returns chosen (c1, ck) for a piece under the current high colouring, or {-1,-1}
  auto endpoints = [&](const Piece& p) -> std::pair<int, int> {
    int k = static_cast<int>(p.verts.size());
    const auto& c1 = cand[p.verts[0]];
    const auto& ck = cand[p.verts[k - 1]];
    ColorSet ba = 0, bb = 0;
    for (int w : p.xa) ba |= hc[hidx[w]];
    for (int w : p.xb) bb |= hc[hidx[w]];
    int nk = static_cast<int>(ck.size());
    for (int a = 0; a < static_cast<int>(c1.size()); ++a) {
      if (c1[a] & ba) continue;
      for (int z = 0; z < nk; ++z) {
        if (p.pred[k - 1][a * nk + z] == -1) continue;
        if (ck[z] & bb) continue;
        if (k == 1 && z != a) continue;
        if (p.cycle && k > 1 && (c1[a] & ck[z])) continue;
        return {a, z};
      }
    }
    return {-1, -1};
  };
  std::vector<std::vector<int>> due(high.size() + 1);
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i) due[pieces[i].ready + 1].push_back(i);
  for (int i : due[0])
    if (endpoints(pieces[i]).first < 0) return std::nullopt;

  std::vector<std::vector<ColorSet>> hcand(high.size());
  for (size_t i = 0; i < high.size(); ++i) hcand[i] = cand[high[i]];
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == high.size()) return true;
    int v = high[i];
    for (ColorSet s : hcand[i]) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (hidx[w] >= 0 && hidx[w] < static_cast<int>(i) && (hc[hidx[w]] & s)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      hc[i] = s;
      for (int pi : due[i + 1])
        if (endpoints(pieces[pi]).first < 0) {
          ok = false;
          break;
        }
      if (ok && rec(i + 1)) return true;
    }
    hc[i] = 0;
    return false;
  };
  if (!rec(0)) return std::nullopt;

  MultiColoring phi(n, 0);
  for (size_t i = 0; i < high.size(); ++i) phi[high[i]] = hc[i];
  for (const auto& p : pieces) {
    auto [a, z] = endpoints(p);
    int k = static_cast<int>(p.verts.size());
    int cur = z;
    for (int i = k - 1; i >= 0; --i) {
      phi[p.verts[i]] = cand[p.verts[i]][cur];
      if (i == 0) break;
      int nc = static_cast<int>(cand[p.verts[i]].size());
      cur = p.pred[i][a * nc + cur];
    }
  }
  return phi;
}

// ---------------------------------------------------------------- majority projection

ListAssignment duplicate_lists(const ListAssignment& L2, int m) {
  ListAssignment out(L2.size(), 0);
  for (size_t v = 0; v < L2.size(); ++v)
    for (int c : set_colors(L2[v]))
      for (int i = 1; i <= m; ++i) {
        int d = (c - 1) * m + i;
        if (d > kMaxColor) throw InputError("duplicated colours exceed the colour universe");
        out[v] |= color_bit(d);
      }
  return out;
}

MultiColoring majority_project(const Graph& g, const ListAssignment& L2, int m, const MultiColoring& phi) {
  if (m % 2 == 0) throw InputError("majority projection needs odd m");
  if (auto bad = validate(g, duplicate_lists(L2, m), m, phi)) throw InputError("input colouring invalid: " + bad->message);
  MultiColoring out(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    int best = 0, best_cnt = -1;
    for (int c : set_colors(L2[v])) {
      int cnt = 0;
      for (int i = 1; i <= m; ++i) cnt += (phi[v] & color_bit((c - 1) * m + i)) != 0;
      if (cnt > best_cnt) {
        best = c;
        best_cnt = cnt;
      }
    }
    out[v] = color_bit(best);
  }
  return out;
}

}  // namespace choosekit
