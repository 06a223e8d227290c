#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "sard/builtins.hpp"
#include "sard/errors.hpp"
#include "sard/graph.hpp"
#include "sard/recognition.hpp"

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

Graph complete_graph(int n) {
  std::vector<int> v;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    v.push_back(i);
    for (int j = 0; j < i; ++j) e.push_back({j, i});
  }
  return Graph::from_edges(v, e);
}

// two triangles sharing exactly one vertex
Graph wedge_of_triangles() {
  return Graph::from_edges({0, 1, 2, 3, 4},
                           {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
}

}  // namespace

TEST_CASE("contractibility of cones paths and cliques") {
  CHECK(!is_contractible(Graph()));
  CHECK(is_contractible(complete_graph(1)));
  CHECK(is_contractible(complete_graph(4)));
  for (int n : {2, 5, 9}) CHECK(is_contractible(path_graph(n)));
  for (int n : {4, 5, 8}) CHECK(!is_contractible(cycle_graph(n)));
  // a cone over anything contractible-or-not collapses to its apex
  for (const Graph& g : {cycle_graph(6), wedge_of_triangles(), cross_polytope(2)})
    CHECK(is_contractible(zykov_join(g, complete_graph(1))));
}

TEST_CASE("contraction witness is a full removal order") {
  std::vector<int> witness;
  Graph g = path_graph(6);
  REQUIRE(is_contractible(g, &witness));
  REQUIRE(witness.size() == std::size_t(g.num_vertices()));
  std::vector<int> sorted = witness;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == g.vertices());
  // peeling the first witness vertex keeps the rest contractible
  std::vector<int> rest(witness.begin() + 1, witness.end());
  CHECK(is_contractible(g.induced(rest)));
}

TEST_CASE("sphere dimensions across the cross polytope family") {
  for (int d = -1; d <= 4; ++d) {
    auto s = is_sphere(cross_polytope(d));
    REQUIRE(s.has_value());
    CHECK(*s == d);
  }
  for (int n : {4, 5, 7}) CHECK(is_sphere(cycle_graph(n)) == 1);
  CHECK(!is_sphere(complete_graph(3)).has_value());
  CHECK(!is_sphere(path_graph(4)).has_value());
  CHECK(!is_sphere(wedge_of_triangles()).has_value());
  // disjoint circles form a manifold but not a sphere
  std::vector<int> v;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    v.push_back(i);
    e.push_back({i, (i + 1) % 5});
  }
  for (int i = 0; i < 6; ++i) {
    v.push_back(10 + i);
    e.push_back({10 + i, 10 + (i + 1) % 6});
  }
  Graph pair = Graph::from_edges(v, e);
  CHECK(is_manifold(pair) == 1);
  CHECK(!is_sphere(pair).has_value());
}

TEST_CASE("manifold recognition on the catalog") {
  for (const std::string& name : builtin_names()) {
    Builtin b = resolve_complex(name);
    auto d = is_manifold(b.graph);
    REQUIRE_MESSAGE(d.has_value(), name);
    CHECK_MESSAGE(*d == b.manifold_dim, name);
  }
}

TEST_CASE("non manifolds are rejected") {
  CHECK(!is_manifold(Graph()).has_value());
  CHECK(!is_manifold(wedge_of_triangles()).has_value());
  CHECK(!is_manifold(path_graph(3)).has_value());
  CHECK(!is_manifold(complete_graph(3)).has_value());
  // isolated vertices are 0-manifolds
  CHECK(is_manifold(Graph::from_edges({7}, {})) == 0);
  CHECK(is_manifold(Graph::from_edges({1, 2}, {})) == 0);
}

TEST_CASE("balls and manifolds with boundary") {
  CHECK(is_ball(complete_graph(1)) == 0);
  CHECK(is_ball(path_graph(5)) == 1);
  auto mwb = is_manifold_with_boundary(path_graph(5));
  REQUIRE(mwb.has_value());
  CHECK(mwb->dim == 1);
  CHECK(mwb->boundary_vertices == std::vector<int>{0, 4});
  CHECK(mwb->boundary.num_edges() == 0);

  // closed manifolds qualify with empty boundary
  auto closed = is_manifold_with_boundary(cross_polytope(2));
  REQUIRE(closed.has_value());
  CHECK(closed->dim == 2);
  CHECK(closed->boundary_vertices.empty());

  // two triangles along an edge: every vertex link is a path or an edge
  Graph k4e = Graph::from_edges({0, 1, 2, 3},
                                {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto folded = is_manifold_with_boundary(k4e);
  REQUIRE(folded.has_value());
  CHECK(folded->dim == 2);
  CHECK(folded->boundary_vertices.size() == 4);
  // its boundary keeps the interior chord, so it never closes into a circle
  CHECK(!is_ball(k4e).has_value());
  CHECK(!is_ball(complete_graph(3)).has_value());
  CHECK(!is_manifold_with_boundary(wedge_of_triangles()).has_value());
}

TEST_CASE("classify summarizes and is repeatable") {
  clear_recognition_cache();
  Classification a = classify(cross_polytope(3));
  CHECK(!a.contractible);
  CHECK(a.sphere_dim == 3);
  CHECK(a.manifold_dim == 3);
  CHECK(a.boundary_manifold_dim == 3);
  Classification b = classify(cross_polytope(3));
  CHECK(a.sphere_dim == b.sphere_dim);
  CHECK(a.manifold_dim == b.manifold_dim);

  Classification p = classify(path_graph(4));
  CHECK(p.contractible);
  CHECK(!p.sphere_dim.has_value());
  CHECK(!p.manifold_dim.has_value());
  CHECK(p.boundary_manifold_dim == 1);
}

TEST_CASE("size limits raise instead of grinding") {
  std::vector<int> verts(100001);
  for (int i = 0; i < 100001; ++i) verts[i] = i;
  Graph huge = Graph::from_edges(verts, {});
  CHECK_THROWS_AS(is_manifold(huge), LimitError);
  RecognitionConfig relaxed;
  relaxed.max_graph_vertices = 200000;
  CHECK(is_manifold(huge, relaxed) == 0);
}

TEST_CASE("unit spheres of a manifold recognize as spheres") {
  Builtin b = resolve_complex("rp3");
  for (int v : {0, 40, 100}) {
    auto s = is_sphere(b.graph.unit_sphere(b.graph.vertices()[v]));
    REQUIRE(s.has_value());
    CHECK(*s == 2);
  }
}
