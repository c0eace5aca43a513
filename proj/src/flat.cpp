#include "choosekit/flat.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>

namespace choosekit {

std::vector<std::vector<int>> color_class_components(const Graph& g, const ListAssignment& L, int alpha) {
  int n = g.num_vertices();
  ColorSet bit = color_bit(alpha);
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
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

ListAssignment apply_move(const Graph& g, const ListAssignment& L, const FlatteningMove& mv) {
  if (mv.component.empty()) throw InputError("flattening move with an empty component");
  if (!(pot(L) & color_bit(mv.beta))) throw InputError("replacement colour " + std::to_string(mv.beta) + " is not in the pot");
  auto comps = color_class_components(g, L, mv.alpha);
  std::vector<int> c = mv.component;
  std::sort(c.begin(), c.end());
  if (std::find(comps.begin(), comps.end(), c) == comps.end())
    throw InputError("move component is not a component of the colour class of " + std::to_string(mv.alpha));
  ListAssignment out = L;
  for (int v : c) {
    if (L[v] & color_bit(mv.beta))
      throw InputError("colour " + std::to_string(mv.beta) + " already in the list of " + g.name(v));
    out[v] = (L[v] & ~color_bit(mv.alpha)) | color_bit(mv.beta);
  }
  return out;
}

FlatScore flat_score(const Graph& g, const ListAssignment& L) {
  FlatScore s;
  for (int c : set_colors(pot(L))) {
    ++s.pot;
    s.components += static_cast<int>(color_class_components(g, L, c).size());
  }
  return s;
}

namespace {

// colour-free key: sorted vertex masks of the colour classes
std::vector<std::uint64_t> column_key(const ListAssignment& L) {
  std::vector<std::uint64_t> key;
  for (int c : set_colors(pot(L))) {
    std::uint64_t m = 0;
    for (size_t v = 0; v < L.size(); ++v)
      if (L[v] & color_bit(c)) m |= std::uint64_t{1} << v;
    key.push_back(m);
  }
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

std::optional<std::vector<FlatteningMove>> find_improving_sequence(const Graph& g, const ListAssignment& L, int depth) {
  if (g.num_vertices() > 64) throw InputError("flatness search supports at most 64 vertices");
  FlatScore s0 = flat_score(g, L);
  struct Node {
    ListAssignment lists;
    int parent;
    FlatteningMove move;
    int depth;
  };
  std::vector<Node> nodes{{L, -1, {}, 0}};
  std::set<std::vector<std::uint64_t>> seen{column_key(L)};
  for (size_t qi = 0; qi < nodes.size(); ++qi) {
    if (depth >= 0 && nodes[qi].depth >= depth) continue;
    ListAssignment cur = nodes[qi].lists;
    ColorSet p = pot(cur);
    for (int alpha : set_colors(p)) {
      for (const auto& comp : color_class_components(g, cur, alpha)) {
        ColorSet used = 0;
        for (int v : comp) used |= cur[v];
        for (int beta : set_colors(p & ~used)) {
          FlatteningMove mv{alpha, beta, comp};
          ListAssignment next = cur;
          for (int v : comp) next[v] = (next[v] & ~color_bit(alpha)) | color_bit(beta);
          if (flat_score(g, next) < s0) {
            std::vector<FlatteningMove> seq{mv};
            for (int at = static_cast<int>(qi); nodes[at].parent >= 0; at = nodes[at].parent)
              seq.push_back(nodes[at].move);
            std::reverse(seq.begin(), seq.end());
            return seq;
          }
          if (seen.insert(column_key(next)).second)
            nodes.push_back({std::move(next), static_cast<int>(qi), mv, nodes[qi].depth + 1});
        }
      }
    }
  }
  return std::nullopt;
}

bool is_flat(const Graph& g, const ListAssignment& L, int depth) { return !find_improving_sequence(g, L, depth); }

FlattenResult flatten(const Graph& g, const ListAssignment& L, int depth) {
  FlattenResult r{L, {}};
  while (true) {
    auto seq = find_improving_sequence(g, r.lists, 1);
    if (!seq && depth != 0 && depth != 1) seq = find_improving_sequence(g, r.lists, depth);
    if (!seq) break;
    for (const auto& mv : *seq) {
      r.lists = apply_move(g, r.lists, mv);
      r.moves.push_back(mv);
    }
  }
  return r;
}

MultiColoring lift_coloring(const Graph& g, const ListAssignment& L, const std::vector<FlatteningMove>& moves,
                            const MultiColoring& phi_flat, int b) {
  std::vector<ListAssignment> stages{L};
  for (const auto& mv : moves) stages.push_back(apply_move(g, stages.back(), mv));
  if (auto bad = validate(g, stages.back(), b, phi_flat)) throw InputError("coloring of the flattened lists is invalid: " + bad->message);
  MultiColoring phi = phi_flat;
  for (size_t i = moves.size(); i-- > 0;) {
    const auto& mv = moves[i];
    for (int v : mv.component)
      if (phi[v] & color_bit(mv.beta)) phi[v] = (phi[v] & ~color_bit(mv.beta)) | color_bit(mv.alpha);
  }
  if (auto bad = validate(g, L, b, phi)) throw std::logic_error("lifted coloring invalid: " + bad->message);
  return phi;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CHOOSEKIT_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  return std::max(1, omp_get_max_threads());
}

// ---------------------------------------------------------------- column enumeration

namespace {

using Bits = std::vector<std::uint64_t>;

// Assignments up to colour renaming are multisets of colour classes (columns).
// Column lists are generated vertex by vertex: at vertex u we add the columns
// whose smallest vertex is u until u is covered a times.
class ColumnEnumerator {
 public:
  ColumnEnumerator(const Graph& g, int a, int pot_bound) : g_(g), a_(a), pot_bound_(pot_bound) {
    n_ = g.num_vertices();
    if (n_ < 1) throw InputError("enumeration needs a non-empty graph");
    if (n_ > 12) throw InputError("flat enumeration supports at most 12 vertices");
    if (a < 1 || pot_bound < a || pot_bound > kMaxColor) throw InputError("invalid list size or pot bound");
    order_vertices();
    build_columns();
    build_automorphisms();
  }

  using Leaf = std::function<bool(const std::vector<int>&)>;  // return true to stop

  // a work unit fixes the first column at vertex 0
  std::vector<int> units() const {
    std::vector<int> out;
    for (int c = group_begin_[0]; c < group_begin_[1]; ++c) out.push_back(c);
    return out;
  }

  // runs one unit; returns true if the leaf callback asked to stop
  bool run_unit(int first, EnumStats& stats, const Leaf& leaf) {
    State st = initial();
    add(st, first);
    int need = a_ - 1;
    for (int w = 1; w < n_; ++w) need = std::max(need, a_ - st.cover[w]);
    if (1 + need > pot_bound_) return false;
    return pick(st, 0, a_ - 1, first, [&](State& s) { return rec(s, 1, stats, leaf); });
  }

  bool run_all(EnumStats& stats, const Leaf& leaf) {
    State st = initial();
    return rec(st, 0, stats, leaf);
  }

  ListAssignment to_lists(const std::vector<int>& chosen) const {
    int n = n_;
    ListAssignment L(n, 0);
    std::vector<int> colour(chosen.size(), 0);
    int next = 1;
    for (int v = 0; v < n; ++v) {
      int hv = pos_[v];
      for (size_t i = 0; i < chosen.size(); ++i)
        if (cols_[chosen[i]] & (1u << hv)) {
          if (!colour[i]) colour[i] = next++;
          L[v] |= color_bit(colour[i]);
        }
    }
    return L;
  }

 private:
  struct State {
    std::vector<int> chosen;
    std::vector<int> cover;
    std::vector<Bits> allowed;  // allowed[k] after k columns chosen
  };

  void order_vertices() {
    std::vector<char> seen(n_, 0);
    while (static_cast<int>(order_.size()) < n_) {
      int s = -1;
      for (int v = 0; v < n_; ++v)
        if (!seen[v] && (s < 0 || g_.degree(v) > g_.degree(s))) s = v;
      seen[s] = 1;
      std::deque<int> q{s};
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        order_.push_back(u);
        std::vector<int> nb;
        for (int w : g_.neighbors(u))
          if (!seen[w]) nb.push_back(w);
        std::stable_sort(nb.begin(), nb.end(), [&](int x, int y) { return g_.degree(x) > g_.degree(y); });
        for (int w : nb) {
          seen[w] = 1;
          q.push_back(w);
        }
      }
    }
    pos_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) pos_[order_[i]] = i;
    adj_.assign(n_, 0);
    for (auto [u, v] : g_.edges()) {
      adj_[pos_[u]] |= 1u << pos_[v];
      adj_[pos_[v]] |= 1u << pos_[u];
    }
  }

  std::vector<std::uint32_t> components(std::uint32_t mask) const {
    std::vector<std::uint32_t> out;
    while (mask) {
      std::uint32_t comp = mask & (~mask + 1), frontier = comp;
      while (frontier) {
        std::uint32_t grow = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) grow |= adj_[__builtin_ctz(f)];
        grow &= mask & ~comp;
        comp |= grow;
        frontier = grow;
      }
      out.push_back(comp);
      mask &= ~comp;
    }
    return out;
  }

  std::uint32_t neighbourhood(std::uint32_t c) const {
    std::uint32_t nb = 0;
    for (std::uint32_t f = c; f; f &= f - 1) nb |= adj_[__builtin_ctz(f)];
    return nb & ~c;
  }

  // no single move from class A to class B improves the score
  bool one_way_ok(std::uint32_t A, std::uint32_t B) const {
    auto comps = components(A);
    for (std::uint32_t c : comps) {
      if (c & B) continue;
      if (comps.size() == 1) return false;
      if (neighbourhood(c) & B) return false;
    }
    return true;
  }

  void build_columns() {
    index_.assign(std::size_t{1} << n_, -1);
    group_begin_.assign(n_ + 1, 0);
    for (int u = 0; u < n_; ++u) {
      group_begin_[u] = static_cast<int>(cols_.size());
      // masks with lowest vertex u
      for (std::uint32_t rest = 0; rest < (1u << (n_ - u - 1)); ++rest) {
        std::uint32_t m = (1u << u) | (rest << (u + 1));
        bool ok = true;
        for (std::uint32_t c : components(m))
          if (__builtin_popcount(c) == 1 && adj_[__builtin_ctz(c)] != 0) ok = false;
        if (!ok) continue;
        index_[m] = static_cast<int>(cols_.size());
        cols_.push_back(m);
      }
    }
    group_begin_[n_] = static_cast<int>(cols_.size());
    int k = static_cast<int>(cols_.size());
    words_ = (k + 63) / 64;
    compat_.assign(k, Bits(words_, 0));
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j)
        if (one_way_ok(cols_[i], cols_[j]) && one_way_ok(cols_[j], cols_[i])) {
          compat_[i][j >> 6] |= std::uint64_t{1} << (j & 63);
          compat_[j][i >> 6] |= std::uint64_t{1} << (i & 63);
        }
  }

  void build_automorphisms() {
    Graph h(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adj_[u] & (1u << v)) h.add_edge(u, v);
    for (const auto& p : automorphisms(h)) {
      bool identity = true;
      for (int v = 0; v < n_; ++v) identity &= p[v] == v;
      if (identity) continue;
      std::vector<int> m(cols_.size());
      for (size_t i = 0; i < cols_.size(); ++i) {
        std::uint32_t img = 0;
        for (std::uint32_t f = cols_[i]; f; f &= f - 1) img |= 1u << p[__builtin_ctz(f)];
        m[i] = index_[img];
      }
      autmap_.push_back(std::move(m));
    }
  }

  State initial() const {
    State st;
    st.cover.assign(n_, 0);
    st.allowed.assign(1, Bits(words_, ~std::uint64_t{0}));
    return st;
  }

  void add(State& st, int c) {
    for (std::uint32_t f = cols_[c]; f; f &= f - 1) ++st.cover[__builtin_ctz(f)];
    Bits next = st.allowed.back();
    for (int w = 0; w < words_; ++w) next[w] &= compat_[c][w];
    st.allowed.push_back(std::move(next));
    st.chosen.push_back(c);
  }

  void remove(State& st) {
    int c = st.chosen.back();
    for (std::uint32_t f = cols_[c]; f; f &= f - 1) --st.cover[__builtin_ctz(f)];
    st.allowed.pop_back();
    st.chosen.pop_back();
  }

  bool canonical(const std::vector<int>& chosen) const {
    std::vector<int> img(chosen.size());
    for (const auto& m : autmap_) {
      for (size_t i = 0; i < chosen.size(); ++i) img[i] = m[chosen[i]];
      std::sort(img.begin(), img.end());
      if (img < chosen) return false;
    }
    return true;
  }

  // chooses `remaining` more columns for vertex u, indices >= from, then continues
  template <class Next>
  bool pick(State& st, int u, int remaining, int from, Next&& next) {
    if (remaining == 0) return next(st);
    int max_need = remaining - 1;
    for (int c = from; c < group_begin_[u + 1]; ++c) {
      const Bits& al = st.allowed.back();
      if (!((al[c >> 6] >> (c & 63)) & 1)) continue;
      std::uint32_t m = cols_[c];
      bool fits = true;
      for (std::uint32_t f = m; f; f &= f - 1)
        if (st.cover[__builtin_ctz(f)] >= a_) fits = false;
      if (!fits) continue;
      add(st, c);
      int need = max_need;
      for (int w = u + 1; w < n_; ++w) need = std::max(need, a_ - st.cover[w]);
      bool stop = false;
      if (static_cast<int>(st.chosen.size()) + need <= pot_bound_) stop = pick(st, u, remaining - 1, c, next);
      remove(st);
      if (stop) return true;
    }
    return false;
  }

  bool rec(State& st, int u, EnumStats& stats, const Leaf& leaf) {
    if (u == n_) {
      ++stats.leaves;
      if (!canonical(st.chosen)) return false;
      ++stats.canonical;
      return leaf(st.chosen);
    }
    return pick(st, u, a_ - st.cover[u], group_begin_[u], [&](State& s) { return rec(s, u + 1, stats, leaf); });
  }

  const Graph& g_;
  int n_, a_, pot_bound_;
  std::vector<int> order_, pos_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::uint32_t> cols_;
  std::vector<int> index_, group_begin_;
  int words_ = 0;
  std::vector<Bits> compat_;
  std::vector<std::vector<int>> autmap_;
};

void add_stats(EnumStats& into, const EnumStats& s) {
  into.leaves += s.leaves;
  into.canonical += s.canonical;
  into.flat += s.flat;
}

}  // namespace

FlatCensus enumerate_flat(const Graph& g, int a, int pot_bound, const EnumOptions& opt) {
  ColumnEnumerator en(g, a, pot_bound);
  using Found = std::pair<std::vector<int>, ListAssignment>;
  auto make_leaf = [&](std::vector<Found>& out, EnumStats& stats) {
    return [&](const std::vector<int>& chosen) {
      ListAssignment L = en.to_lists(chosen);
      if (opt.exact_flat && !is_flat(g, L, opt.depth)) return false;
      ++stats.flat;
      out.push_back({chosen, std::move(L)});
      return false;
    };
  };
  FlatCensus census;
  std::vector<Found> found;
  if (!opt.parallel) {
    census.stats.units = 1;
    en.run_all(census.stats, make_leaf(found, census.stats));
  } else {
    auto units = en.units();
    census.stats.units = units.size();
    std::vector<std::vector<Found>> per(units.size());
    std::vector<EnumStats> st(units.size());
    int workers = resolve_workers(opt.workers);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::size_t i = 0; i < units.size(); ++i) en.run_unit(units[i], st[i], make_leaf(per[i], st[i]));
    for (std::size_t i = 0; i < units.size(); ++i) {
      add_stats(census.stats, st[i]);
      for (auto& f : per[i]) found.push_back(std::move(f));
    }
  }
  std::sort(found.begin(), found.end(), [](const Found& x, const Found& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  for (auto& [cols, L] : found) {
    ++census.counts[static_cast<int>(cols.size())];
    census.representatives.push_back(std::move(L));
  }
  return census;
}

ChoosabilityCertificate verify_choosable(const Graph& g, int a, int b, int pot_bound, EnumOptions opt) {
  ColumnEnumerator en(g, a, pot_bound);
  ChoosabilityCertificate cert;
  auto check = [&](const std::vector<int>& chosen, EnumStats& stats, std::uint64_t& checked,
                   std::optional<ListAssignment>& bad) {
    ListAssignment L = en.to_lists(chosen);
    if (opt.exact_flat && !is_flat(g, L, opt.depth)) return false;
    ++stats.flat;
    ++checked;
    if (find_bfold_coloring(g, L, b)) return false;
    bad = std::move(L);
    return true;
  };
  if (!opt.parallel) {
    cert.stats.units = 1;
    en.run_all(cert.stats, [&](const std::vector<int>& c) { return check(c, cert.stats, cert.checked, cert.counterexample); });
  } else {
    auto units = en.units();
    cert.stats.units = units.size();
    std::vector<EnumStats> st(units.size());
    std::vector<std::uint64_t> checked(units.size(), 0);
    std::vector<std::optional<ListAssignment>> bad(units.size());
    std::atomic<std::size_t> first_bad{units.size()};
    int workers = resolve_workers(opt.workers);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::size_t i = 0; i < units.size(); ++i) {
      if (i > first_bad.load()) continue;
      bool hit = en.run_unit(units[i], st[i], [&](const std::vector<int>& c) {
        if (i > first_bad.load()) return true;
        return check(c, st[i], checked[i], bad[i]);
      });
      if (hit && bad[i]) {
        std::size_t cur = first_bad.load();
        while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
        }
      }
    }
    // stats only over units at or before the first counterexample, so they do not depend on scheduling
    std::size_t last = std::min(first_bad.load(), units.size() - 1);
    for (std::size_t i = 0; i <= last && i < units.size(); ++i) {
      add_stats(cert.stats, st[i]);
      cert.checked += checked[i];
    }
    if (first_bad.load() < units.size()) cert.counterexample = bad[first_bad.load()];
  }
  cert.choosable = !cert.counterexample;
  return cert;
}

// ---------------------------------------------------------------- forcing claims

std::string format_assignment(const Graph& g, const ListAssignment& L) {
  std::string out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v) out += ' ';
    out += format_set(L[v]);
  }
  return out;
}

ForcingClaimReport verify_forcing_bound(const Graph& g, const std::vector<ListAssignment>& reps, int vertex,
                                        int min_allowed, const std::string& claim) {
  ForcingClaimReport r;
  r.claim = claim;
  for (const auto& L : reps) {
    ++r.assignments;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (vertex >= 0 && v != vertex) continue;
      auto f = forcing_analysis(g, L, v, 2);
      ++r.checks;
      if (f.k < min_allowed)
        r.violations.push_back("L = " + format_assignment(g, L) + ", vertex " + g.name(v) + " has only " +
                               std::to_string(f.k) + " allowed colourings");
    }
  }
  return r;
}

ForcingClaimReport verify_c4_strong_claims(const Graph& c4, const std::vector<ListAssignment>& reps) {
  ForcingClaimReport r;
  r.claim = "C4 4-forcing pairs share a colour; opposite vertex keeps 3 colourings or two disjoint ones";
  if (c4.num_vertices() != 4 || c4.num_edges() != 4) throw InputError("expected a 4-cycle");
  for (const auto& L : reps) {
    ++r.assignments;
    for (int v1 = 0; v1 < 4; ++v1) {
      int v3 = -1;
      for (int w = 0; w < 4; ++w)
        if (w != v1 && !c4.has_edge(v1, w)) v3 = w;
      auto f = forcing_analysis(c4, L, v1, 2);
      ++r.checks;
      if (f.k == 4 && !(f.forbidden[0] & f.forbidden[1]))
        r.violations.push_back("L = " + format_assignment(c4, L) + ": forbidden pair at " + c4.name(v1) +
                               " is disjoint");
      auto subsets = subsets_of_size(L[v1], 2);
      for (size_t i = 0; i < subsets.size(); ++i)
        for (size_t j = i + 1; j < subsets.size(); ++j) {
          if (!(subsets[i] & subsets[j])) continue;
          PartialConstraint pc;
          pc.forbidden[v1] = {subsets[i], subsets[j]};
          auto at3 = forcing_analysis(c4, L, v3, 2, pc);
          ++r.checks;
          bool ok = at3.k >= 3 || (at3.k == 2 && !(at3.allowed[0] & at3.allowed[1]));
          if (!ok)
            r.violations.push_back("L = " + format_assignment(c4, L) + ", forbidding " + format_set(subsets[i]) + "," +
                                   format_set(subsets[j]) + " at " + c4.name(v1) + " leaves " +
                                   std::to_string(at3.k) + " colourings at " + c4.name(v3));
        }
    }
  }
  return r;
}

}  // namespace choosekit
