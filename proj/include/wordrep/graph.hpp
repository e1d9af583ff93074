#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wordrep {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Modulus and sorted jump set describing C_n(R). Jumps satisfy
// 0 < r_1 < ... < r_k <= n/2, so r_k == n/2 is the antipodal jump.
class CirculantSpec {
 public:
  // Validates strictly; throws SpecError naming the violated invariant.
  CirculantSpec(std::int64_t n_vertices, std::vector<std::int64_t> jumps);

  // Reduces every raw jump to min(r mod n, n - r mod n), then sorts and
  // dedups. A jump that reduces to 0 is a SpecError.
  static CirculantSpec canonical(std::int64_t n_vertices,
                                 const std::vector<std::int64_t>& raw_jumps);

  std::int64_t n_vertices() const { return n_; }
  const std::vector<std::int64_t>& jumps() const { return jumps_; }

  bool has_antipodal_jump() const { return 2 * jumps_.back() == n_; }
  int degree() const;

  std::string to_string() const;

  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;

 private:
  std::int64_t n_;
  std::vector<std::int64_t> jumps_;
};

// Shape (2n, {a, b, n}) with 0 < a < b < n. Throws SpecError otherwise.
CirculantSpec five_regular_spec(std::int64_t n, std::int64_t a, std::int64_t b);

// Immutable simple undirected graph on vertices 0..vertex_count-1.
class Graph {
 public:
  Graph() = default;
  // Rejects self loops, duplicate edges and out-of-range endpoints.
  Graph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }

  // Each edge once as (min, max), lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<Edge> edges_;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// image[j] is the image of vertex j. Must be a permutation.
struct VertexMap {
  std::vector<Vertex> image;

  static VertexMap identity(int n);
  // Throws UsageError unless image is a permutation of 0..size-1.
  void validate() const;
};

Graph build_circulant(const CirculantSpec& spec);

bool is_connected_circulant(const CirculantSpec& spec);

struct ComponentDecomposition {
  std::int64_t copies;
  CirculantSpec reduced;
};
ComponentDecomposition component_decomposition(const CirculantSpec& spec);

// Throws PreconditionError for disconnected specs.
bool is_bipartite_circulant(const CirculantSpec& spec);

struct PeriodicCycles {
  std::int64_t length;
  std::int64_t count;
  bool degenerate;  // r == n/2: each "cycle" is a single antipodal edge
};
PeriodicCycles periodic_cycles(const CirculantSpec& spec, std::int64_t r);

// Vertex (u, v) is encoded as u * |g2| + v.
Graph cartesian_product(const Graph& g1, const Graph& g2);

struct Normalization {
  std::int64_t x;          // canonical jump of C_{2n}(x, 1, n)
  std::int64_t generator;  // the unit (b, or a after swapping) used
  VertexMap map;           // C_{2n}(a, b, n) -> C_{2n}(x, 1, n)
};
// a and b may come in either order. Throws NotNormalizable when neither is a
// unit mod 2n.
Normalization normalize_to_unit_jump(std::int64_t n, std::int64_t a, std::int64_t b);

// Unit-jump form used by the classifier: the identity when a == 1 (the spec
// already reads C_{2n}(1, b, n)), otherwise normalize_to_unit_jump. Empty when
// neither jump is a unit.
std::optional<Normalization> unit_jump_form(std::int64_t n, std::int64_t a, std::int64_t b);

bool check_isomorphism_by_map(const Graph& g1, const Graph& g2, const VertexMap& map);

// Connected components by BFS; returns component id per vertex.
std::vector<int> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Proper 2-coloring if one exists.
std::optional<std::vector<int>> two_coloring(const Graph& g);

std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace wordrep
