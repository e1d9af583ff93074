#include "wordrep/orientation.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "wordrep/errors.hpp"

namespace wordrep {

Orientation::Orientation(Graph g, const std::vector<Edge>& arcs)
    : g_(std::move(g)), arcs_(g_.edge_count()), out_(g_.vertex_count()) {
  if (arcs.size() != g_.edge_count()) {
    throw UsageError("orientation must direct every edge exactly once");
  }
  const auto& edges = g_.edges();
  std::vector<bool> used(edges.size(), false);
  for (auto [t, h] : arcs) {
    Edge key{std::min(t, h), std::max(t, h)};
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key) {
      throw UsageError("arc " + std::to_string(t) + "->" + std::to_string(h) +
                       " is not an edge of the graph");
    }
    auto i = static_cast<std::size_t>(it - edges.begin());
    if (used[i]) throw UsageError("edge directed twice");
    used[i] = true;
    arcs_[i] = {t, h};
    out_[t].push_back(h);
  }
  for (auto& l : out_) std::sort(l.begin(), l.end());
}

Orientation Orientation::from_ranks(Graph g, const std::vector<int>& rank) {
  if (static_cast<int>(rank.size()) != g.vertex_count()) {
    throw UsageError("rank vector size mismatch");
  }
  std::vector<Edge> arcs;
  for (auto [u, v] : g.edges()) {
    if (rank[u] == rank[v]) throw UsageError("equal ranks on an edge");
    arcs.push_back(rank[u] < rank[v] ? Edge{u, v} : Edge{v, u});
  }
  return Orientation(std::move(g), arcs);
}

bool Orientation::has_arc(Vertex tail, Vertex head) const {
  const auto& l = out_[tail];
  return std::binary_search(l.begin(), l.end(), head);
}

Orientation Orientation::reversed() const {
  std::vector<Edge> arcs;
  for (auto [t, h] : arcs_) arcs.emplace_back(h, t);
  return Orientation(g_, arcs);
}

namespace {

std::optional<std::vector<Vertex>> topological_order(const Orientation& o) {
  const int n = o.graph().vertex_count();
  std::vector<int> indeg(n, 0);
  for (auto [t, h] : o.arcs()) ++indeg[h];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<Vertex> order;
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex h : o.out(v))
      if (--indeg[h] == 0) ready.push(h);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

// Small dynamic bitset; enough for reachability on arbitrary graph sizes.
class Bits {
 public:
  explicit Bits(int n = 0) : w_((n + 63) / 64, 0) {}
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

 private:
  std::vector<std::uint64_t> w_;
};

std::vector<Bits> descendants(const Orientation& o, const std::vector<Vertex>& topo) {
  const int n = o.graph().vertex_count();
  std::vector<Bits> reach(n, Bits(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    for (Vertex h : o.out(*it)) {
      reach[*it].set(h);
      reach[*it] |= reach[h];
    }
  }
  return reach;
}

class ShortcutFinder {
 public:
  ShortcutFinder(const Orientation& o, const std::vector<Bits>& reach)
      : o_(o), g_(o.graph()), reach_(reach) {}

  std::optional<ShortcutWitness> between(Vertex u, Vertex w) {
    w_ = w;
    path_.assign(1, u);
    if (!dfs(u)) return std::nullopt;
    // path_ ends at the vertex that broke the clique; walk on to w.
    Vertex c = path_.back();
    while (c != w_) {
      for (Vertex s : o_.out(c)) {
        if (leads_to_target(s)) {
          c = s;
          break;
        }
      }
      path_.push_back(c);
    }
    return ShortcutWitness{path_, {u, w}, missing_};
  }

 private:
  bool leads_to_target(Vertex s) const { return s == w_ || reach_[s].test(w_); }

  // Extends a clique prefix; stops at the first vertex that breaks it.
  bool dfs(Vertex c) {
    for (Vertex s : o_.out(c)) {
      if (!leads_to_target(s)) continue;
      for (Vertex y : path_) {
        if (!g_.adjacent(y, s)) {
          missing_ = {y, s};
          path_.push_back(s);
          return true;
        }
      }
      if (s == w_) continue;
      path_.push_back(s);
      if (dfs(s)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Orientation& o_;
  const Graph& g_;
  const std::vector<Bits>& reach_;
  Vertex w_ = 0;
  std::vector<Vertex> path_;
  Edge missing_{};
};

}  // namespace

bool is_acyclic(const Orientation& o) { return topological_order(o).has_value(); }

int longest_path_vertices(const Orientation& o) {
  auto topo = topological_order(o);
  if (!topo) throw PreconditionError("longest_path_vertices: orientation is cyclic");
  std::vector<int> best(o.graph().vertex_count(), 1);
  int longest = o.graph().vertex_count() > 0 ? 1 : 0;
  for (Vertex v : *topo) {
    for (Vertex h : o.out(v)) {
      best[h] = std::max(best[h], best[v] + 1);
      longest = std::max(longest, best[h]);
    }
  }
  return longest;
}

std::optional<ShortcutWitness> find_shortcut(const Orientation& o) {
  auto topo = topological_order(o);
  if (!topo) throw PreconditionError("find_shortcut: orientation is cyclic");
  auto reach = descendants(o, *topo);
  ShortcutFinder finder(o, reach);
  for (auto [u, w] : o.arcs()) {
    if (auto wit = finder.between(u, w)) return wit;
  }
  return std::nullopt;
}

bool witness_valid(const Orientation& o, const ShortcutWitness& w) {
  const auto& p = w.path;
  if (p.size() < 4) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!o.has_arc(p[i], p[i + 1])) return false;
  }
  if (w.shortcutting_edge != Edge{p.front(), p.back()}) return false;
  if (!o.has_arc(p.front(), p.back())) return false;
  auto on_path = [&](Vertex v) { return std::find(p.begin(), p.end(), v) != p.end(); };
  auto [a, b] = w.missing_pair;
  return a != b && on_path(a) && on_path(b) && !o.graph().adjacent(a, b);
}

bool is_semi_transitive(const Orientation& o) {
  return is_acyclic(o) && !find_shortcut(o).has_value();
}

namespace {

// Backtracking over edge directions with reachability bitmasks. Every
// partial orientation is kept acyclic and free of shortcuts built from
// decided arcs only; both properties are monotone, so pruning is exact.
class OrientationSearch {
 public:
  OrientationSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {
    n_ = g.vertex_count();
    adj_.assign(n_, 0);
    for (auto [u, v] : g.edges()) {
      adj_[u] |= bit(v);
      adj_[v] |= bit(u);
    }
    order_edges();
  }

  SearchResult run() {
    State root;
    root.dir.assign(edges_.size(), 0);
    int r = solve(root, 0, true);
    SearchResult res{SearchStatus::NotRepresentable, std::nullopt, nodes_};
    if (r == kFound) {
      std::vector<Edge> arcs;
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [t, h] = edges_[i];
        arcs.push_back(found_dir_[i] > 0 ? Edge{t, h} : Edge{h, t});
      }
      Orientation o(g_, arcs);
      if (!is_semi_transitive(o)) {
        throw std::logic_error("orientation search produced a non-semi-transitive result");
      }
      res.status = SearchStatus::Found;
      res.orientation = std::move(o);
    } else if (r == kBudget) {
      res.status = SearchStatus::Undecided;
    }
    res.nodes = std::min(nodes_, budget_);
    return res;
  }

 private:
  static constexpr int kExhausted = 0, kFound = 1, kBudget = 2;

  struct State {
    std::uint64_t out[64] = {};
    std::uint64_t reach[64] = {};
    std::vector<std::int8_t> dir;  // +1: edges_[i].first -> second
  };

  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  // BFS from a maximum-degree vertex, neighbours by descending degree;
  // edges sorted by the later BFS position of their endpoints. Each edge's
  // "forward" direction goes from the earlier to the later endpoint.
  void order_edges() {
    std::vector<int> pos(n_, -1);
    int next = 0;
    auto by_degree = [&](Vertex a, Vertex b) {
      return g_.degree(a) != g_.degree(b) ? g_.degree(a) > g_.degree(b) : a < b;
    };
    std::vector<Vertex> roots(n_);
    for (int v = 0; v < n_; ++v) roots[v] = v;
    std::stable_sort(roots.begin(), roots.end(), by_degree);
    for (Vertex r : roots) {
      if (pos[r] >= 0) continue;
      std::queue<Vertex> q;
      q.push(r);
      pos[r] = next++;
      while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        std::vector<Vertex> nb = g_.neighbors(u);
        std::stable_sort(nb.begin(), nb.end(), by_degree);
        for (Vertex v : nb) {
          if (pos[v] < 0) {
            pos[v] = next++;
            q.push(v);
          }
        }
      }
    }
    for (auto [u, v] : g_.edges()) {
      edges_.push_back(pos[u] < pos[v] ? Edge{u, v} : Edge{v, u});
    }
    std::stable_sort(edges_.begin(), edges_.end(), [&](const Edge& a, const Edge& b) {
      auto ka = std::pair{pos[a.second], pos[a.first]};
      auto kb = std::pair{pos[b.second], pos[b.first]};
      return ka < kb;
    });
  }

  std::uint64_t ancestors(const State& s, Vertex v) const {
    std::uint64_t m = 0;
    for (int x = 0; x < n_; ++x)
      if (s.reach[x] & bit(v)) m |= bit(x);
    return m;
  }

  bool clique_dfs(const State& s, Vertex c, std::uint64_t path, Vertex w,
                  std::uint64_t targets) const {
    std::uint64_t cand = s.out[c] & targets;
    while (cand) {
      Vertex x = std::countr_zero(cand);
      cand &= cand - 1;
      if (path & ~adj_[x]) return true;
      if (x != w && clique_dfs(s, x, path | bit(x), w, targets)) return true;
    }
    return false;
  }

  bool has_shortcut_over(const State& s, Vertex u, Vertex w) const {
    std::uint64_t targets = ancestors(s, w) | bit(w);
    return clique_dfs(s, u, bit(u), w, targets);
  }

  // Adds t -> h; false if it closes a cycle or completes a shortcut.
  bool add_arc(State& s, std::size_t e, Vertex t, Vertex h) const {
    if (s.reach[h] & bit(t)) return false;
    s.dir[e] = (edges_[e].first == t) ? 1 : -1;
    s.out[t] |= bit(h);
    const std::uint64_t gained = bit(h) | s.reach[h];
    const std::uint64_t anc = ancestors(s, t) | bit(t);
    for (int x = 0; x < n_; ++x)
      if (anc & bit(x)) s.reach[x] |= gained;

    const std::uint64_t desc = bit(h) | s.reach[h];
    std::uint64_t us = anc;
    while (us) {
      Vertex u = std::countr_zero(us);
      us &= us - 1;
      std::uint64_t ws = s.out[u] & desc;
      while (ws) {
        Vertex w = std::countr_zero(ws);
        ws &= ws - 1;
        if (has_shortcut_over(s, u, w)) return false;
      }
    }
    return true;
  }

  // Directs every undecided edge whose direction is forced by reachability.
  bool propagate(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (s.dir[e] != 0) continue;
        auto [a, b] = edges_[e];
        if (s.reach[a] & bit(b)) {
          if (!add_arc(s, e, a, b)) return false;
          changed = true;
        } else if (s.reach[b] & bit(a)) {
          if (!add_arc(s, e, b, a)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  int solve(const State& s, std::size_t from, bool first_branch) {
    if (++nodes_ > budget_) return kBudget;
    std::size_t e = from;
    while (e < edges_.size() && s.dir[e] != 0) ++e;
    if (e == edges_.size()) {
      found_dir_ = s.dir;
      return kFound;
    }
    auto [a, b] = edges_[e];
    // Reversing a semi-transitive orientation keeps it semi-transitive, so
    // the very first free edge only needs its forward direction.
    const int options = first_branch ? 1 : 2;
    for (int k = 0; k < options; ++k) {
      State c = s;
      Vertex t = k == 0 ? a : b, h = k == 0 ? b : a;
      if (add_arc(c, e, t, h) && propagate(c)) {
        int r = solve(c, e + 1, false);
        if (r != kExhausted) return r;
      }
    }
    return kExhausted;
  }

  const Graph& g_;
  std::uint64_t budget_;
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<Edge> edges_;
  std::uint64_t nodes_ = 0;
  std::vector<std::int8_t> found_dir_;
};

}  // namespace

SearchResult search_semi_transitive(const Graph& g, std::uint64_t budget) {
  if (g.vertex_count() > 64) {
    throw UsageError("search_semi_transitive supports at most 64 vertices");
  }
  return OrientationSearch(g, budget).run();
}

ColorDag ColorDag::complete_from_order(const std::vector<int>& order) {
  ColorDag dag;
  dag.color_count = static_cast<int>(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) dag.arcs.emplace_back(order[i], order[j]);
  return dag;
}

bool ColorDag::precedes(int a, int b) const {
  return std::find(arcs.begin(), arcs.end(), Edge{a, b}) != arcs.end();
}

bool ColorDag::related(int a, int b) const { return precedes(a, b) || precedes(b, a); }

Orientation orient_by_color_order(const Graph& g, const std::vector<int>& coloring,
                                  const ColorDag& dag) {
  if (static_cast<int>(coloring.size()) != g.vertex_count()) {
    throw UsageError("coloring must assign a color to every vertex");
  }
  for (int c : coloring) {
    if (c < 0 || c >= dag.color_count) throw UsageError("color id outside the dag");
  }
  {
    std::vector<Edge> dag_edges;
    for (auto [a, b] : dag.arcs) {
      if (a == b || a < 0 || b < 0 || a >= dag.color_count || b >= dag.color_count ||
          dag.precedes(b, a)) {
        throw UsageError("color dag is malformed");
      }
      dag_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(dag_edges.begin(), dag_edges.end());
    dag_edges.erase(std::unique(dag_edges.begin(), dag_edges.end()), dag_edges.end());
    if (!is_acyclic(Orientation(Graph(dag.color_count, dag_edges), dag.arcs))) {
      throw UsageError("color dag is cyclic");
    }
  }
  std::vector<Edge> arcs;
  for (auto [u, v] : g.edges()) {
    int cu = coloring[u], cv = coloring[v];
    if (dag.precedes(cu, cv)) {
      arcs.emplace_back(u, v);
    } else if (dag.precedes(cv, cu)) {
      arcs.emplace_back(v, u);
    } else {
      throw HomomorphismError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                              " joins colors " + std::to_string(cu) + " and " +
                              std::to_string(cv) + " which the dag does not relate");
    }
  }
  return Orientation(g, arcs);
}

std::string to_dot(const Orientation& o, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 0; v < o.graph().vertex_count(); ++v) os << "  " << v << ";\n";
  std::vector<Edge> arcs = o.arcs();
  std::sort(arcs.begin(), arcs.end());
  for (auto [t, h] : arcs) os << "  " << t << " -> " << h << ";\n";
  os << "}\n";
  return os.str();
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "Found";
    case SearchStatus::NotRepresentable:
      return "NotRepresentable";
    case SearchStatus::Undecided:
      return "Undecided";
  }
  return "?";
}

}  // namespace wordrep
