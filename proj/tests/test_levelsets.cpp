#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>
#include <vector>

#include "sard/builtins.hpp"
#include "sard/errors.hpp"
#include "sard/levelset.hpp"
#include "sard/recognition.hpp"

using namespace sard;

namespace {

std::shared_ptr<const SimplicialComplex> host_of(const std::string& name) {
  return resolve_complex(name).complex;
}

VertexFunction constant(const std::vector<int>& verts, double value) {
  VertexFunction f;
  f.k = 1;
  for (int v : verts) f.values[v] = {value};
  return f;
}

}  // namespace

TEST_CASE("random sign functions are deterministic and valued in plus minus one") {
  std::vector<int> verts{1, 2, 5, 9};
  VertexFunction a = VertexFunction::random_signs(verts, 2, 7);
  VertexFunction b = VertexFunction::random_signs(verts, 2, 7);
  VertexFunction c = VertexFunction::random_signs(verts, 2, 8);
  CHECK(a.values == b.values);
  CHECK(a.values != c.values);
  for (int v : verts) {
    REQUIRE(a.at(v).size() == 2);
    for (double x : a.at(v)) CHECK(std::abs(x) == 1.0);
  }
  CHECK(a.at(5, 1) == a.at(5)[1]);
  CHECK_THROWS_AS(VertexFunction::random_signs(verts, 0, 1), InvalidInput);
}

TEST_CASE("random injective functions permute one through n") {
  std::vector<int> verts{3, 4, 8, 11, 12};
  VertexFunction f = VertexFunction::random_injective(verts, 5);
  std::set<double> seen;
  for (int v : verts) seen.insert(f.at(v, 0));
  CHECK(seen == std::set<double>{1, 2, 3, 4, 5});
}

TEST_CASE("sign square combinatorics") {
  CHECK(sign_square_vertices().size() == 4);
  CHECK(sign_square_edges().size() == 6);
  CHECK(sign_square_triangles().size() == 4);
  auto edge = default_sign_edge();
  CHECK(edge.first == SignVec{-1, 1});
  CHECK(edge.second == SignVec{1, -1});
  auto tris = triangles_through(edge);
  REQUIRE(tris.size() == 2);
  for (const auto& t : tris) {
    REQUIRE(t.size() == 3);
    CHECK(std::count(t.begin(), t.end(), edge.first) == 1);
    CHECK(std::count(t.begin(), t.end(), edge.second) == 1);
  }
}

TEST_CASE("anchor patterns") {
  auto a1 = default_anchors(1);
  REQUIRE(a1.size() == 1);
  CHECK(a1[0] == SignVec{-1});
  auto a3 = default_anchors(3);
  REQUIRE(a3.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(a3[i][j] == (i == j ? -1 : 1));
  CHECK(anchor_choice_count(1) == 1);
  CHECK(anchor_choice_count(2) == 6);
  CHECK(anchor_choice_count(3) == 28);
  CHECK_THROWS_AS(anchor_choice_count(0), InvalidInput);
}

TEST_CASE("level sets never select vertices and are always open") {
  auto host = host_of("cross_polytope(3)");
  auto verts = host->vertex_ids();
  std::size_t v_count = host->num_cells(0);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    VertexFunction f1 = VertexFunction::random_signs(verts, 1, seed);
    LevelSet real = level_set_real(host, f1, 0.0);
    VertexFunction f2 = VertexFunction::random_signs(verts, 2, seed);
    LevelSet comp = level_set_complex(host, f2, {0.0, 0.0});
    for (const LevelSet* ls : {&real, &comp}) {
      CHECK(is_open_set(*ls));
      for (std::size_t id : ls->cells) CHECK(id >= v_count);
      CHECK(std::is_sorted(ls->cells.begin(), ls->cells.end()));
    }
  }
}

TEST_CASE("openness fails when a coface is dropped") {
  auto host = host_of("cross_polytope(3)");
  VertexFunction f = VertexFunction::random_signs(host->vertex_ids(), 1, 3);
  LevelSet ls = level_set_real(host, f, 0.0);
  REQUIRE(!ls.empty());
  CHECK(is_open_set(ls));
  LevelSet chopped = ls;
  chopped.cells.pop_back();  // some top cell still has its faces selected
  CHECK(!is_open_set(chopped));
}

TEST_CASE("constant functions give empty level sets") {
  auto host = host_of("octahedron");
  LevelSet ls = level_set_real(host, constant(host->vertex_ids(), 1.0), 0.0);
  CHECK(ls.empty());
  CHECK(!level_set_manifold_dim(ls).has_value());
  CHECK(ls.cell_f_vector().total() == 0);
}

TEST_CASE("a vertex hit raises a regular value violation") {
  auto host = host_of("octahedron");
  auto verts = host->vertex_ids();
  VertexFunction f = constant(verts, 1.0);
  f.values[verts[2]] = {0.0};
  f.values[verts[4]] = {0.0};
  try {
    level_set_real(host, f, 0.0);
    FAIL("expected RegularValueViolation");
  } catch (const RegularValueViolation& e) {
    CHECK(e.offending_vertices() == std::vector<int>{verts[2], verts[4]});
  }
}

TEST_CASE("level set dimension drops by the arity") {
  struct Case {
    const char* name;
    int dim;
  };
  for (Case c : {Case{"cross_polytope(3)", 3}, Case{"cross_polytope(4)", 4},
                 Case{"torus_flat(4)", 2}}) {
    auto host = host_of(c.name);
    auto verts = host->vertex_ids();
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      VertexFunction f = VertexFunction::random_signs(verts, 1, seed);
      LevelSet ls = level_set_real(host, f, 0.0);
      if (!ls.empty()) CHECK(level_set_manifold_dim(ls) == c.dim - 1);
      if (c.dim >= 2) {
        VertexFunction g = VertexFunction::random_signs(verts, 2, seed);
        LevelSet ls2 = level_set_complex(host, g, {0.0, 0.0});
        if (!ls2.empty()) CHECK(level_set_manifold_dim(ls2) == c.dim - 2);
      }
    }
  }
}

TEST_CASE("multi variant agrees with the dedicated low arity forms") {
  auto host = host_of("cross_polytope(4)");
  auto verts = host->vertex_ids();
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    VertexFunction f1 = VertexFunction::random_signs(verts, 1, seed);
    CHECK(level_set_multi(host, f1, {0.0}, default_anchors(1)).cells ==
          level_set_real(host, f1, 0.0).cells);
    VertexFunction f2 = VertexFunction::random_signs(verts, 2, seed);
    CHECK(level_set_multi(host, f2, {0.0, 0.0}, default_anchors(2)).cells ==
          level_set_complex(host, f2, {0.0, 0.0}).cells);
  }
}

TEST_CASE("level sets are invariant under a global sign flip") {
  auto host = host_of("cross_polytope(3)");
  auto verts = host->vertex_ids();
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    VertexFunction f = VertexFunction::random_signs(verts, 1, seed);
    VertexFunction nf = f;
    for (auto& [v, val] : nf.values) val[0] = -val[0];
    CHECK(level_set_real(host, f, 0.0).cells ==
          level_set_real(host, nf, 0.0).cells);
  }
}

TEST_CASE("realization carries cell ids and matches the cell count") {
  auto host = host_of("cross_polytope(3)");
  VertexFunction f = VertexFunction::random_signs(host->vertex_ids(), 1, 2);
  LevelSet ls = level_set_real(host, f, 0.0);
  REQUIRE(!ls.empty());
  const Graph& rz = ls.realization();
  CHECK(rz.num_vertices() == int(ls.cells.size()));
  for (int v : rz.vertices()) CHECK(ls.contains(std::size_t(v)));
  CHECK(is_manifold(rz) == 2);
  // f-vector by host dimension sums to the same count
  CHECK(ls.cell_f_vector().total() == std::int64_t(ls.cells.size()));
  CHECK(ls.cell_f_vector().counts[0] == 0);
}

TEST_CASE("triangle preimages glue along the shared edge") {
  auto host = host_of("cross_polytope(4)");
  auto verts = host->vertex_ids();
  auto tris = triangles_through(default_sign_edge());
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    VertexFunction psi = VertexFunction::random_signs(verts, 2, seed);
    LevelSet edge_ls = level_set_complex(host, psi, {0.0, 0.0});
    LevelSet t1 = triangle_preimage(host, psi, tris[0]);
    LevelSet t2 = triangle_preimage(host, psi, tris[1]);
    CHECK(is_open_set(t1));
    CHECK(is_open_set(t2));
    std::set<std::size_t> both(t1.cells.begin(), t1.cells.end());
    both.insert(t2.cells.begin(), t2.cells.end());
    CHECK(std::vector<std::size_t>(both.begin(), both.end()) == edge_ls.cells);
    if (t1.empty()) continue;
    ++checked;
    auto mwb = is_manifold_with_boundary(t1.realization());
    REQUIRE(mwb.has_value());
    CHECK(mwb->dim == 2);
    Graph bd = boundary_of(t1);
    if (bd.num_vertices() > 0) CHECK(is_manifold(bd) == 1);
  }
  CHECK(checked > 0);
}

TEST_CASE("boundary extraction rejects closed level sets") {
  auto host = host_of("cross_polytope(3)");
  VertexFunction f = VertexFunction::random_signs(host->vertex_ids(), 1, 1);
  LevelSet ls = level_set_real(host, f, 0.0);
  REQUIRE(!ls.empty());
  // a closed surface is a manifold with empty boundary
  Graph bd = boundary_of(ls);
  CHECK(bd.num_vertices() == 0);
}
