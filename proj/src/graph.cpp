#include "wordrep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "wordrep/errors.hpp"
#include "wordrep/numtheory.hpp"

namespace wordrep {

namespace nt = numtheory;

CirculantSpec::CirculantSpec(std::int64_t n_vertices, std::vector<std::int64_t> jumps)
    : n_(n_vertices), jumps_(std::move(jumps)) {
  if (n_ < 1) throw SpecError("n_vertices must be positive");
  if (jumps_.empty()) throw SpecError("jump set must be nonempty");
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    if (jumps_[i] < 1) throw SpecError("jumps must be positive");
    if (2 * jumps_[i] > n_) {
      throw SpecError("jump " + std::to_string(jumps_[i]) + " exceeds floor(" +
                      std::to_string(n_) + "/2)");
    }
    if (i > 0 && jumps_[i] <= jumps_[i - 1]) {
      throw SpecError("jumps must be strictly increasing without duplicates");
    }
  }
}

CirculantSpec CirculantSpec::canonical(std::int64_t n_vertices,
                                       const std::vector<std::int64_t>& raw_jumps) {
  if (n_vertices < 1) throw SpecError("n_vertices must be positive");
  std::vector<std::int64_t> jumps;
  for (std::int64_t r : raw_jumps) {
    std::int64_t m = ((r % n_vertices) + n_vertices) % n_vertices;
    std::int64_t c = std::min(m, n_vertices - m);
    if (c == 0) throw SpecError("jump " + std::to_string(r) + " is 0 modulo n");
    jumps.push_back(c);
  }
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
  return CirculantSpec(n_vertices, std::move(jumps));
}

int CirculantSpec::degree() const {
  int k = static_cast<int>(jumps_.size());
  return has_antipodal_jump() ? 2 * k - 1 : 2 * k;
}

std::string CirculantSpec::to_string() const {
  std::ostringstream os;
  os << "C_" << n_ << "(";
  for (std::size_t i = 0; i < jumps_.size(); ++i) os << (i ? "," : "") << jumps_[i];
  os << ")";
  return os.str();
}

CirculantSpec five_regular_spec(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 3) throw SpecError("5-regular shape needs n >= 3");
  if (!(0 < a && a < b && b < n)) {
    throw SpecError("5-regular shape needs 0 < a < b < n (got n=" + std::to_string(n) +
                    ", a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
  }
  CirculantSpec spec(2 * n, {a, b, n});
  if (spec.degree() != 5) throw SpecError("degree formula does not yield 5");
  return spec;
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges)
    : n_(vertex_count),
      adj_(static_cast<std::size_t>(vertex_count) * vertex_count, 0),
      nbrs_(vertex_count) {
  if (vertex_count < 0) throw UsageError("vertex_count must be non-negative");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw UsageError("edge endpoint out of range");
    if (u == v) throw UsageError("self loops are not allowed");
    std::size_t k = static_cast<std::size_t>(u) * n_ + v;
    if (adj_[k]) throw UsageError("duplicate edge");
    adj_[k] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& l : nbrs_) std::sort(l.begin(), l.end());
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw UsageError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

VertexMap VertexMap::identity(int n) {
  VertexMap m;
  m.image.resize(n);
  std::iota(m.image.begin(), m.image.end(), 0);
  return m;
}

void VertexMap::validate() const {
  std::vector<bool> seen(image.size(), false);
  for (Vertex v : image) {
    if (v < 0 || static_cast<std::size_t>(v) >= image.size() || seen[v]) {
      throw UsageError("vertex map is not a permutation");
    }
    seen[v] = true;
  }
}

Graph build_circulant(const CirculantSpec& spec) {
  const std::int64_t n = spec.n_vertices();
  std::vector<Edge> edges;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t r : spec.jumps()) {
      std::int64_t j = (i + r) % n;
      // The antipodal jump reaches each pair from both ends; keep one.
      if (2 * r == n && j < i) continue;
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(static_cast<int>(n), edges);
}

namespace {

std::int64_t spec_gcd(const CirculantSpec& spec) {
  std::vector<std::int64_t> vals = spec.jumps();
  vals.push_back(spec.n_vertices());
  return nt::gcd_all(vals);
}

}  // namespace

bool is_connected_circulant(const CirculantSpec& spec) { return spec_gcd(spec) == 1; }

ComponentDecomposition component_decomposition(const CirculantSpec& spec) {
  std::int64_t d = spec_gcd(spec);
  if (d == 1) return {1, spec};
  std::vector<std::int64_t> reduced;
  for (std::int64_t r : spec.jumps()) reduced.push_back(r / d);
  return {d, CirculantSpec(spec.n_vertices() / d, std::move(reduced))};
}

bool is_bipartite_circulant(const CirculantSpec& spec) {
  if (!is_connected_circulant(spec)) {
    throw PreconditionError(spec.to_string() + " is disconnected");
  }
  if (spec.n_vertices() % 2 != 0) return false;
  return std::all_of(spec.jumps().begin(), spec.jumps().end(),
                     [](std::int64_t r) { return r % 2 == 1; });
}

PeriodicCycles periodic_cycles(const CirculantSpec& spec, std::int64_t r) {
  const auto& j = spec.jumps();
  if (std::find(j.begin(), j.end(), r) == j.end()) {
    throw UsageError(std::to_string(r) + " is not a jump of " + spec.to_string());
  }
  std::int64_t g = std::gcd(spec.n_vertices(), r);
  return {spec.n_vertices() / g, g, 2 * r == spec.n_vertices()};
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(g1.edge_count() * n2 + g2.edge_count() * n1);
  for (int u = 0; u < n1; ++u) {
    for (auto [a, b] : g2.edges()) edges.emplace_back(u * n2 + a, u * n2 + b);
  }
  for (auto [a, b] : g1.edges()) {
    for (int v = 0; v < n2; ++v) edges.emplace_back(a * n2 + v, b * n2 + v);
  }
  return Graph(n1 * n2, edges);
}

Normalization normalize_to_unit_jump(std::int64_t n, std::int64_t a, std::int64_t b) {
  five_regular_spec(n, std::min(a, b), std::max(a, b));
  const nt::Modulus m(2 * n);
  std::int64_t gen = 0, other = 0;
  if (std::gcd(b, 2 * n) == 1) {
    gen = b;
    other = a;
  } else if (std::gcd(a, 2 * n) == 1) {
    gen = a;
    other = b;
  } else {
    throw NotNormalizable("neither " + std::to_string(a) + " nor " + std::to_string(b) +
                          " is a unit modulo " + std::to_string(2 * n));
  }
  std::int64_t x = nt::solve_linear_congruence(gen, other, m);
  x = std::min(x, 2 * n - x);

  // i*gen -> i, i.e. v -> v * gen^{-1}.
  std::int64_t inv = nt::mod_inverse(gen, m);
  VertexMap map;
  map.image.resize(2 * n);
  for (std::int64_t v = 0; v < 2 * n; ++v) {
    map.image[v] = static_cast<Vertex>(m.reduce(v * inv));
  }
  return {x, gen, std::move(map)};
}

std::optional<Normalization> unit_jump_form(std::int64_t n, std::int64_t a,
                                           std::int64_t b) {
  five_regular_spec(n, a, b);
  if (a == 1) return Normalization{b, 1, VertexMap::identity(static_cast<int>(2 * n))};
  try {
    return normalize_to_unit_jump(n, a, b);
  } catch (const NotNormalizable&) {
    return std::nullopt;
  }
}

bool check_isomorphism_by_map(const Graph& g1, const Graph& g2, const VertexMap& map) {
  const int n = g1.vertex_count();
  if (g2.vertex_count() != n || static_cast<int>(map.image.size()) != n) {
    throw UsageError("check_isomorphism_by_map: size mismatch");
  }
  map.validate();
  if (g1.edge_count() != g2.edge_count()) return false;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g1.adjacent(u, v) != g2.adjacent(map.image[u], map.image[v])) return false;
    }
  }
  return true;
}

std::vector<int> connected_components(const Graph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  int next = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = next;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (comp[v] < 0) {
          comp[v] = next;
          q.push(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace wordrep
