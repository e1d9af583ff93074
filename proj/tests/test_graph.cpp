#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "wordrep/errors.hpp"
#include "wordrep/graph.hpp"

using namespace wordrep;

namespace {

int bfs_component_count(const Graph& g) {
  auto comp = connected_components(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

// Adjacency straight from the definition: |i - j| mod n (either way) in R.
bool circulant_adjacent(const CirculantSpec& s, int i, int j) {
  const std::int64_t n = s.n_vertices();
  std::int64_t d = ((i - j) % n + n) % n;
  for (std::int64_t r : s.jumps())
    if (d == r || d == n - r) return true;
  return false;
}

// All strictly increasing jump sets of size <= 3 valid for order n.
std::vector<CirculantSpec> small_specs(std::int64_t n) {
  std::vector<CirculantSpec> out;
  const std::int64_t h = n / 2;
  for (std::int64_t a = 1; a <= h; ++a) {
    out.emplace_back(n, std::vector<std::int64_t>{a});
    for (std::int64_t b = a + 1; b <= h; ++b) {
      out.emplace_back(n, std::vector<std::int64_t>{a, b});
      for (std::int64_t c = b + 1; c <= h; ++c)
        out.emplace_back(n, std::vector<std::int64_t>{a, b, c});
    }
  }
  return out;
}

}  // namespace

TEST(CirculantSpec, Validation) {
  EXPECT_THROW(CirculantSpec(6, {}), SpecError);
  EXPECT_THROW(CirculantSpec(6, {0}), SpecError);
  EXPECT_THROW(CirculantSpec(6, {4}), SpecError);
  EXPECT_THROW(CirculantSpec(6, {2, 1}), SpecError);
  EXPECT_THROW(CirculantSpec(6, {1, 1}), SpecError);
  EXPECT_NO_THROW(CirculantSpec(6, {1, 3}));
}

TEST(CirculantSpec, Canonical) {
  auto s = CirculantSpec::canonical(10, {8, 3, -3, 5});
  EXPECT_EQ(s.jumps(), (std::vector<std::int64_t>{2, 3, 5}));
  EXPECT_THROW(CirculantSpec::canonical(10, {10}), SpecError);
}

TEST(FiveRegularSpec, Shape) {
  EXPECT_EQ(five_regular_spec(4, 1, 2).jumps(), (std::vector<std::int64_t>{1, 2, 4}));
  EXPECT_THROW(five_regular_spec(4, 2, 2), SpecError);
  EXPECT_THROW(five_regular_spec(4, 3, 2), SpecError);
  EXPECT_THROW(five_regular_spec(4, 1, 4), SpecError);
  EXPECT_THROW(five_regular_spec(2, 1, 1), SpecError);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), UsageError);
  EXPECT_THROW(Graph(3, {{0, 3}}), UsageError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), UsageError);
}

TEST(BuildCirculant, Examples) {
  Graph k6 = build_circulant(CirculantSpec(6, {1, 2, 3}));
  EXPECT_EQ(k6, complete_graph(6));
  EXPECT_EQ(build_circulant(CirculantSpec(4, {1})), cycle_graph(4));
  Graph g = build_circulant(CirculantSpec(8, {2, 3, 4}));
  EXPECT_EQ(g.edge_count(), 20u);
  for (int v = 0; v < 8; ++v) EXPECT_EQ(g.degree(v), 5);
}

TEST(BuildCirculant, DefinitionRotationAndDegree) {
  for (std::int64_t n = 2; n <= 40; n += (n < 16 ? 1 : 7)) {
    for (const auto& s : small_specs(n)) {
      Graph g = build_circulant(s);
      for (int i = 0; i < n; ++i) {
        EXPECT_EQ(g.degree(i), s.degree());
        for (int j = 0; j < n; ++j)
          if (i != j) ASSERT_EQ(g.adjacent(i, j), circulant_adjacent(s, i, j));
      }
      for (int shift = 1; shift < n; ++shift) {
        VertexMap rot;
        for (int v = 0; v < n; ++v) rot.image.push_back(static_cast<int>((v + shift) % n));
        ASSERT_TRUE(check_isomorphism_by_map(g, g, rot));
      }
    }
  }
}

TEST(Connectivity, Examples) {
  EXPECT_FALSE(is_connected_circulant(CirculantSpec(12, {2, 4, 6})));
  EXPECT_TRUE(is_connected_circulant(CirculantSpec(10, {2, 5})));
  EXPECT_TRUE(is_connected_circulant(CirculantSpec(6, {1})));
}

TEST(Connectivity, AgreesWithBfs) {
  for (std::int64_t n = 2; n <= 30; ++n) {
    for (const auto& s : small_specs(n)) {
      Graph g = build_circulant(s);
      EXPECT_EQ(is_connected_circulant(s), is_connected(g)) << s.to_string();
      if (!is_connected(g)) {
        EXPECT_THROW(is_bipartite_circulant(s), PreconditionError);
      } else {
        EXPECT_EQ(is_bipartite_circulant(s), two_coloring(g).has_value()) << s.to_string();
      }
    }
  }
}

TEST(Bipartite, Examples) {
  EXPECT_TRUE(is_bipartite_circulant(CirculantSpec(10, {1, 3, 5})));
  EXPECT_FALSE(is_bipartite_circulant(CirculantSpec(10, {2, 5})));
  EXPECT_TRUE(is_bipartite_circulant(CirculantSpec(6, {1})));
}

TEST(Components, Examples) {
  auto d = component_decomposition(CirculantSpec(12, {2, 4, 6}));
  EXPECT_EQ(d.copies, 2);
  EXPECT_EQ(d.reduced, CirculantSpec(6, {1, 2, 3}));
  d = component_decomposition(CirculantSpec(10, {1, 5}));
  EXPECT_EQ(d.copies, 1);
  EXPECT_EQ(d.reduced, CirculantSpec(10, {1, 5}));
  d = component_decomposition(CirculantSpec(18, {3, 6, 9}));
  EXPECT_EQ(d.copies, 3);
  EXPECT_EQ(d.reduced, CirculantSpec(6, {1, 2, 3}));
}

TEST(Components, EachComponentIsTheReducedCirculant) {
  for (std::int64_t n = 2; n <= 30; ++n) {
    for (const auto& s : small_specs(n)) {
      auto [d, red] = component_decomposition(s);
      EXPECT_EQ(d * red.n_vertices(), n);
      Graph g = build_circulant(s);
      ASSERT_EQ(bfs_component_count(g), d) << s.to_string();
      Graph rg = build_circulant(red);
      // Component c holds the vertices congruent to c mod d; i -> (c + i*d).
      for (std::int64_t c = 0; c < d; ++c) {
        for (int i = 0; i < rg.vertex_count(); ++i)
          for (int j = 0; j < rg.vertex_count(); ++j)
            if (i != j) {
              ASSERT_EQ(rg.adjacent(i, j),
                        g.adjacent(static_cast<int>(c + i * d), static_cast<int>(c + j * d)));
            }
      }
    }
  }
}

TEST(PeriodicCycles, Examples) {
  auto p = periodic_cycles(CirculantSpec(12, {2, 4, 6}), 4);
  EXPECT_EQ(p.length, 3);
  EXPECT_EQ(p.count, 4);
  EXPECT_FALSE(p.degenerate);
  p = periodic_cycles(CirculantSpec(10, {1, 5}), 1);
  EXPECT_EQ(p.length, 10);
  EXPECT_EQ(p.count, 1);
  p = periodic_cycles(CirculantSpec(10, {1, 5}), 5);
  EXPECT_EQ(p.length, 2);
  EXPECT_EQ(p.count, 5);
  EXPECT_TRUE(p.degenerate);
  EXPECT_THROW(periodic_cycles(CirculantSpec(10, {1, 5}), 2), UsageError);
}

TEST(PeriodicCycles, WalkEnumeration) {
  for (std::int64_t n = 3; n <= 30; ++n) {
    for (std::int64_t r = 1; 2 * r < n; ++r) {
      std::set<std::int64_t> seen;
      std::int64_t cycles = 0, len = 0;
      for (std::int64_t s = 0; s < n; ++s) {
        if (seen.count(s)) continue;
        ++cycles;
        std::int64_t v = s, l = 0;
        do {
          seen.insert(v);
          v = (v + r) % n;
          ++l;
        } while (v != s);
        len = l;
      }
      auto p = periodic_cycles(CirculantSpec(n, {r}), r);
      EXPECT_EQ(p.length, len);
      EXPECT_EQ(p.count, cycles);
    }
  }
}

TEST(CartesianProduct, Examples) {
  Graph p2 = path_graph(2);
  Graph sq = cartesian_product(p2, p2);
  EXPECT_EQ(sq.edge_count(), 4u);
  EXPECT_TRUE(check_isomorphism_by_map(sq, cycle_graph(4), {{0, 1, 3, 2}}));
  Graph prism = cartesian_product(complete_graph(2), cycle_graph(5));
  EXPECT_EQ(prism.vertex_count(), 10);
  EXPECT_EQ(prism.edge_count(), 15u);
  Graph c33 = cartesian_product(cycle_graph(3), cycle_graph(3));
  EXPECT_EQ(c33.edge_count(), 18u);
  for (int v = 0; v < 9; ++v) EXPECT_EQ(c33.degree(v), 4);
}

TEST(CartesianProduct, EdgeCountAndRowMajor) {
  std::vector<Graph> gs = {path_graph(3), cycle_graph(4), complete_graph(4),
                           build_circulant(CirculantSpec(7, {1, 3}))};
  for (const auto& g1 : gs)
    for (const auto& g2 : gs) {
      Graph p = cartesian_product(g1, g2);
      EXPECT_EQ(p.edge_count(), g1.edge_count() * g2.vertex_count() +
                                    g2.edge_count() * g1.vertex_count());
      const int n2 = g2.vertex_count();
      for (int u = 0; u < p.vertex_count(); ++u)
        for (int v = 0; v < p.vertex_count(); ++v) {
          if (u == v) continue;
          int u1 = u / n2, u2 = u % n2, v1 = v / n2, v2 = v % n2;
          bool want = (u1 == v1 && g2.adjacent(u2, v2)) || (u2 == v2 && g1.adjacent(u1, v1));
          ASSERT_EQ(p.adjacent(u, v), want);
        }
    }
}

TEST(Normalize, Examples) {
  auto nm = normalize_to_unit_jump(5, 4, 3);
  EXPECT_EQ(nm.x, 2);
  EXPECT_TRUE(check_isomorphism_by_map(build_circulant(CirculantSpec(10, {3, 4, 5})),
                                       build_circulant(CirculantSpec(10, {1, 2, 5})), nm.map));
  auto id = normalize_to_unit_jump(4, 3, 1);
  EXPECT_EQ(id.x, 3);
  EXPECT_EQ(id.map.image, VertexMap::identity(8).image);
  EXPECT_THROW(normalize_to_unit_jump(6, 2, 4), NotNormalizable);
}

TEST(Normalize, MapIsIsomorphismForAllUnitSpecs) {
  for (std::int64_t n = 3; n <= 30; ++n)
    for (std::int64_t a = 1; a < n; ++a)
      for (std::int64_t b = a + 1; b < n; ++b) {
        std::optional<Normalization> nm;
        try {
          nm = normalize_to_unit_jump(n, a, b);
        } catch (const NotNormalizable&) {
          EXPECT_NE(std::gcd(a, 2 * n), 1);
          EXPECT_NE(std::gcd(b, 2 * n), 1);
          continue;
        }
        EXPECT_TRUE(1 < nm->x && nm->x < n);
        EXPECT_EQ(nm->generator, std::gcd(b, 2 * n) == 1 ? b : a);
        Graph src = build_circulant(five_regular_spec(n, a, b));
        Graph dst = build_circulant(five_regular_spec(n, 1, nm->x));
        ASSERT_TRUE(check_isomorphism_by_map(src, dst, nm->map)) << n << ' ' << a << ' ' << b;
      }
}

TEST(UnitJumpForm, IdentityWhenAIsOne) {
  auto f = unit_jump_form(4, 1, 3);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->x, 3);
  EXPECT_EQ(f->map.image, VertexMap::identity(8).image);
  EXPECT_FALSE(unit_jump_form(6, 2, 4));
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(check_isomorphism_by_map(complete_graph(4), complete_graph(4),
                                       VertexMap::identity(4)));
  EXPECT_FALSE(check_isomorphism_by_map(cycle_graph(4), cycle_graph(4), {{0, 2, 1, 3}}));
  EXPECT_THROW(check_isomorphism_by_map(cycle_graph(4), cycle_graph(5), VertexMap::identity(4)),
               UsageError);
  EXPECT_THROW(check_isomorphism_by_map(cycle_graph(4), cycle_graph(4), {{0, 0, 1, 2}}),
               UsageError);
}

TEST(Dot, SortedAndComplete) {
  std::string dot = to_dot(build_circulant(CirculantSpec(6, {1, 2, 3})));
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '-') / 2, 15);
  EXPECT_LT(dot.find("0 -- 1;"), dot.find("0 -- 2;"));
  EXPECT_LT(dot.find("0 -- 5;"), dot.find("1 -- 2;"));
}
