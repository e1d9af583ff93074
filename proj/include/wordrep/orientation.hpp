#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Direction for every edge of a graph. arcs()[i] orients graph().edges()[i].
class Orientation {
 public:
  // arcs must orient each edge of g exactly once; order is free.
  Orientation(Graph g, const std::vector<Edge>& arcs);

  // Orients every edge from lower to higher rank. Ranks must differ on edges.
  static Orientation from_ranks(Graph g, const std::vector<int>& rank);

  const Graph& graph() const { return g_; }
  const std::vector<Edge>& arcs() const { return arcs_; }
  const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
  bool has_arc(Vertex tail, Vertex head) const;

  Orientation reversed() const;

 private:
  Graph g_;
  std::vector<Edge> arcs_;
  std::vector<std::vector<Vertex>> out_;
};

struct ShortcutWitness {
  std::vector<Vertex> path;  // v_0 -> v_1 -> ... -> v_k, k >= 3
  Edge shortcutting_edge;    // (v_0, v_k)
  Edge missing_pair;         // two path vertices, non-adjacent in the graph
};

bool is_acyclic(const Orientation& o);

// Length (in vertices) of the longest directed path. Requires acyclicity.
int longest_path_vertices(const Orientation& o);

// A shortcut witness if one exists. Throws PreconditionError when cyclic.
std::optional<ShortcutWitness> find_shortcut(const Orientation& o);

// Checks every ShortcutWitness invariant against o.
bool witness_valid(const Orientation& o, const ShortcutWitness& w);

bool is_semi_transitive(const Orientation& o);

enum class SearchStatus { Found, NotRepresentable, Undecided };

struct SearchResult {
  SearchStatus status;
  std::optional<Orientation> orientation;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

// Exhaustive search for a semi-transitive orientation. Graphs above 64
// vertices are rejected with UsageError.
SearchResult search_semi_transitive(const Graph& g,
                                    std::uint64_t budget = kDefaultSearchBudget);

// Acyclic relation on color ids 0..color_count-1.
struct ColorDag {
  int color_count = 0;
  std::vector<Edge> arcs;

  // Transitive tournament following the given topological order.
  static ColorDag complete_from_order(const std::vector<int>& order);
  bool related(int a, int b) const;
  // Tail-to-head direction: true if a -> b is an arc.
  bool precedes(int a, int b) const;
};

// Throws HomomorphismError when an edge joins equal or unrelated colors,
// UsageError on a partial coloring or cyclic dag.
Orientation orient_by_color_order(const Graph& g, const std::vector<int>& coloring,
                                  const ColorDag& dag);

std::string to_dot(const Orientation& o, const std::string& name = "G");

const char* to_string(SearchStatus s);

}  // namespace wordrep
