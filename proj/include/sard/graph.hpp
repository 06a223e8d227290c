#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace sard {

/// Finite simple graph over non-negative integer vertex ids.  Vertices and
/// edges are kept sorted, so equal graphs compare equal structurally and all
/// iteration orders are deterministic.  Instances are immutable; every
/// operation returns a new graph.
class Graph {
 public:
  Graph() = default;

  /// Vertices may appear in any order and duplicates are ignored.  Edges must
  /// connect listed vertices; loops are rejected.
  static Graph from_edges(std::vector<int> vertices,
                          std::vector<std::pair<int, int>> edges);

  static Graph empty_graph() { return Graph(); }
  static Graph single_vertex(int id);
  static Graph cycle(int n);       // C_n on 0..n-1, n >= 3
  static Graph path(int n);        // P_n on 0..n-1, n >= 1
  static Graph complete(int n);    // K_n on 0..n-1
  static Graph edgeless(int n);    // n isolated vertices 0..n-1

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  std::size_t num_edges() const { return edges_.size(); }
  bool is_empty() const { return vertices_.empty(); }

  bool has_vertex(int v) const;
  bool has_edge(int a, int b) const;
  /// Sorted neighbour list.  Throws InvalidInput for unknown vertices.
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;

  /// Induced subgraph on the given vertices (ids are preserved; unknown ids
  /// are ignored).
  Graph induced(const std::vector<int>& verts) const;
  Graph without_vertex(int v) const;

  /// Induced subgraph on the neighbours of v.
  Graph unit_sphere(int v) const;

  bool connected() const;
  int max_vertex_id() const;

  bool operator==(const Graph& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_;
  }

 private:
  std::vector<int> vertices_;                  // sorted
  std::vector<std::pair<int, int>> edges_;     // sorted, first < second
  std::vector<std::vector<int>> adjacency_;    // parallel to vertices_
  int index_of(int v) const;                   // -1 if absent

  friend Graph zykov_join(const Graph&, const Graph&);
};

/// Zykov join: disjoint union plus all cross edges.  If vertex ids collide,
/// the second operand is shifted past max_vertex_id() of the first; the
/// result is reported through the returned graph's vertex list.
Graph zykov_join(const Graph& a, const Graph& b);

/// Join with two fresh isolated vertices.
Graph suspension(const Graph& g);

/// d-fold suspension of the empty graph: the d-dimensional cross polytope
/// (d >= -1; d = -1 gives the empty graph, d = 0 two isolated vertices).
Graph cross_polytope(int d);

/// Exact isomorphism test via canonical certificates.  Intended for small
/// graphs; throws LimitError if the canonical search budget is exhausted.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace sard
