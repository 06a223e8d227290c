#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "sard/barycentric.hpp"
#include "sard/builtins.hpp"
#include "sard/errors.hpp"
#include "sard/graph.hpp"
#include "sard/simplicial_complex.hpp"

using namespace sard;

namespace {

Graph cycle_graph(int n) {
  std::vector<int> v;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    v.push_back(i);
    e.push_back({i, (i + 1) % n});
  }
  return Graph::from_edges(v, e);
}

Graph path_graph(int n) {
  std::vector<int> v;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    v.push_back(i);
    if (i) e.push_back({i - 1, i});
  }
  return Graph::from_edges(v, e);
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("graph construction sorts and deduplicates") {
  Graph g = Graph::from_edges({3, 1, 2, 1}, {{3, 1}, {1, 3}, {2, 3}});
  CHECK(g.vertices() == std::vector<int>{1, 2, 3});
  CHECK(g.num_edges() == 2);
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK(!g.has_edge(1, 2));
  CHECK(g.neighbors(3) == std::vector<int>{1, 2});
}

TEST_CASE("induced subgraph and unit sphere") {
  Graph oct = cross_polytope(2);
  int v = oct.vertices()[0];
  Graph s = oct.unit_sphere(v);
  CHECK(s.num_vertices() == 4);
  CHECK(s.num_edges() == 4);  // the equatorial 4-cycle
  for (int w : s.vertices()) CHECK(oct.has_edge(v, w));
  Graph sub = oct.induced({v});
  CHECK(sub.num_vertices() == 1);
  CHECK(sub.num_edges() == 0);
}

TEST_CASE("zykov join counts vertices and cross edges") {
  Graph a = path_graph(3);
  Graph b = cycle_graph(4);
  Graph j = zykov_join(a, b);
  CHECK(j.num_vertices() == 7);
  CHECK(j.num_edges() == a.num_edges() + b.num_edges() + 3 * 4);
}

TEST_CASE("cross polytope family") {
  CHECK(cross_polytope(-1).is_empty());
  CHECK(cross_polytope(0).num_vertices() == 2);
  CHECK(cross_polytope(0).num_edges() == 0);
  // f_k = 2^(k+1) C(d+1, k+1): every k-cell picks one vertex per axis
  for (int d = 1; d <= 5; ++d) {
    FVector f = SimplicialComplex::whitney(cross_polytope(d)).f_vector();
    REQUIRE(f.dimension() == d);
    for (int k = 0; k <= d; ++k)
      CHECK(f.counts[k] == (std::int64_t(1) << (k + 1)) * binom(d + 1, k + 1));
  }
}

TEST_CASE("whitney complex of a triangle free graph is the graph") {
  for (int n : {4, 5, 9}) {
    SimplicialComplex c = SimplicialComplex::whitney(cycle_graph(n));
    CHECK(c.f_vector() == FVector({n, n}));
  }
}

TEST_CASE("skeleton inverts whitney") {
  for (const Graph& g : {cross_polytope(2), torus_flat_graph(4), cycle_graph(6)}) {
    Graph back = SimplicialComplex::whitney(g).skeleton();
    CHECK(back.vertices() == g.vertices());
    CHECK(back.num_edges() == g.num_edges());
  }
}

TEST_CASE("generate closes downward and is idempotent") {
  SimplicialComplex c = SimplicialComplex::generate({{0, 1, 2}, {2, 3}});
  CHECK(c.f_vector() == FVector({4, 4, 1}));
  SimplicialComplex again = SimplicialComplex::generate(c.facets());
  CHECK(c == again);

  std::vector<SimplicialComplex::Cell> all;
  for (std::size_t id = 0; id < c.size(); ++id) all.push_back(c.cell(id));
  CHECK(SimplicialComplex::from_cells(all) == c);
}

TEST_CASE("generate rejects bad facets") {
  CHECK_THROWS_AS(SimplicialComplex::generate({{}}), InvalidInput);
  CHECK_THROWS_AS(SimplicialComplex::generate({{-1, 0}}), InvalidInput);
  // missing the edge {0,1}
  CHECK_THROWS_AS(SimplicialComplex::from_cells({{0}, {1}, {0, 1}, {0, 2}}),
                  InvalidInput);
}

TEST_CASE("cell ids enumerate by dimension then lexicographic order") {
  SimplicialComplex c = SimplicialComplex::whitney(cross_polytope(3));
  std::size_t id = 0;
  for (int k = 0; k <= c.dimension(); ++k) {
    SimplicialComplex::Cell prev;
    for (std::size_t i = 0; i < c.num_cells(k); ++i, ++id) {
      CHECK(c.cell_dim(id) == k);
      SimplicialComplex::Cell cur = c.cell(id);
      CHECK(int(cur.size()) == k + 1);
      CHECK(std::is_sorted(cur.begin(), cur.end()));
      if (i) CHECK(prev < cur);
      prev = cur;
      auto found = c.find(cur);
      REQUIRE(found.has_value());
      CHECK(*found == id);
    }
  }
  CHECK(id == c.size());
  CHECK(!c.find({0, 99}).has_value());
}

TEST_CASE("faces and cofaces are mutually consistent") {
  SimplicialComplex c = SimplicialComplex::whitney(cross_polytope(2));
  const auto& faces = c.face_ids();
  const auto& cofaces = c.coface_ids();
  REQUIRE(faces.size() == c.size());
  for (std::size_t id = 0; id < c.size(); ++id) {
    for (std::uint32_t f : faces[id]) {
      CHECK(c.cell_dim(f) < c.cell_dim(id));
      const auto& back = cofaces[f];
      CHECK(std::find(back.begin(), back.end(), id) != back.end());
    }
  }
  // a triangle has 3 vertices and 3 edges below it
  std::size_t top = c.size() - 1;
  CHECK(faces[top].size() == 6);
  CHECK(cofaces[top].empty());
}

TEST_CASE("suspension complements the euler characteristic") {
  for (const Graph& g : {cycle_graph(5), path_graph(4), cross_polytope(2)}) {
    std::int64_t chi = SimplicialComplex::whitney(g).euler_characteristic();
    std::int64_t schi =
        SimplicialComplex::whitney(suspension(g)).euler_characteristic();
    CHECK(schi == 2 - chi);
  }
}

TEST_CASE("realization graph connects strictly nested cells") {
  SimplicialComplex c = SimplicialComplex::whitney(cycle_graph(4));
  Graph r = realization_graph(c);
  CHECK(r.num_vertices() == int(c.size()));
  for (int x : r.vertices())
    for (int y : r.neighbors(x)) {
      auto a = c.cell(x), b = c.cell(y);
      if (a.size() > b.size()) std::swap(a, b);
      CHECK(a.size() < b.size());
      CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
  // each of the 4 edges picks up its 2 endpoints
  CHECK(r.num_edges() == 8);
}

TEST_CASE("sphere decomposition joins back to the unit sphere") {
  Realization r = realize(std::make_shared<SimplicialComplex>(
      SimplicialComplex::whitney(cross_polytope(3))));
  for (int v : {0, 5, 12}) {
    auto [sub, super] = sphere_decomposition(r, v);
    Graph s = r.graph.unit_sphere(v);
    Graph joined = zykov_join(sub, super);
    CHECK(joined.num_vertices() == s.num_vertices());
    CHECK(joined.num_edges() == s.num_edges());
    FVector fj = SimplicialComplex::whitney(joined).f_vector();
    FVector fs = SimplicialComplex::whitney(s).f_vector();
    CHECK(fj == fs);
  }
}

TEST_CASE("whitney handles graphs past the dense adjacency cutoff") {
  // 22500 vertices forces the sparse clique walk
  Graph big = torus_flat_graph(150);
  SimplicialComplex wc = SimplicialComplex::whitney(big);
  CHECK(wc.f_vector() == FVector({22500, 67500, 45000}));
  CHECK(wc.euler_characteristic() == 0);
  // same construction under the dense path, same shape
  SimplicialComplex small = SimplicialComplex::whitney(torus_flat_graph(10));
  CHECK(small.f_vector() == FVector({100, 300, 200}));
}

TEST_CASE("stirling numbers") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  CHECK(stirling2(6, 1) == 1);
  CHECK(stirling2(3, 4) == 0);
}

TEST_CASE("barycentric operator matches an actual refinement") {
  for (const Graph& g :
       {cross_polytope(2), cross_polytope(3), torus_flat_graph(4)}) {
    SimplicialComplex c = SimplicialComplex::whitney(g);
    auto op = barycentric_operator(c.dimension());
    FVector predicted = apply_barycentric_operator(op, c.f_vector());
    FVector actual = SimplicialComplex::whitney(barycentric(g)).f_vector();
    CHECK(predicted == actual);
  }
}

TEST_CASE("barycentric operator on the 4 sphere counts") {
  auto op = barycentric_operator(4);
  FVector f({10, 40, 80, 80, 32});
  FVector once = apply_barycentric_operator(op, f);
  CHECK(once == FVector({242, 2640, 8160, 9600, 3840}));
  FVector twice = apply_barycentric_operator(op, once);
  CHECK(twice == FVector({24482, 303840, 970560, 1152000, 460800}));
  // refinement preserves the euler characteristic
  CHECK(once.euler() == f.euler());
  CHECK(twice.euler() == f.euler());
}

TEST_CASE("barycentric vertex count equals the cell count") {
  Graph g = cross_polytope(2);
  SimplicialComplex c = SimplicialComplex::whitney(g);
  Graph b = barycentric(g);
  CHECK(b.num_vertices() == int(c.size()));
  CHECK(SimplicialComplex::whitney(b).f_vector() == FVector({26, 72, 48}));
}

TEST_CASE("flat torus grid") {
  CHECK_THROWS_AS(torus_flat_graph(3), InvalidInput);
  for (int n : {4, 6}) {
    Graph t = torus_flat_graph(n);
    CHECK(t.num_vertices() == n * n);
    CHECK(t.num_edges() == 3 * n * n);
    for (int v : t.vertices()) CHECK(int(t.neighbors(v).size()) == 6);
  }
}
