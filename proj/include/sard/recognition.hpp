#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sard/graph.hpp"

namespace sard {

/// Budgets for the recursive classifiers.  Exceeding a budget raises
/// LimitError rather than returning a wrong answer.
struct RecognitionConfig {
  int max_depth = 512;
  std::size_t max_memo_entries = 1u << 21;
  long canon_node_budget = 200'000;  // per canonical labelling
  int max_graph_vertices = 100'000;  // refuse larger inputs outright
};

/// Collapsibility in the inductive sense: a graph with one vertex is
/// contractible, and g is contractible when some vertex has a contractible
/// unit sphere and a contractible complement g - v.  The empty graph is not
/// contractible.  When a witness pointer is given and the answer is true, it
/// receives a vertex removal order certifying the collapse.
bool is_contractible(const Graph& g, std::vector<int>* witness = nullptr,
                     const RecognitionConfig& cfg = {});

/// Sphere dimension: -1 for the empty graph, else d when g is a d-manifold
/// and deleting some vertex leaves a contractible graph.  nullopt when g is
/// not a sphere.
std::optional<int> is_sphere(const Graph& g, const RecognitionConfig& cfg = {});

/// Manifold dimension: d when every unit sphere is a (d-1)-sphere for one
/// common d.  The empty graph is not a manifold.
std::optional<int> is_manifold(const Graph& g, const RecognitionConfig& cfg = {});

struct ManifoldWithBoundary {
  int dim;
  std::vector<int> boundary_vertices;  // vertices whose unit sphere is a ball
  Graph boundary;                      // induced subgraph on those vertices
};

/// Manifold-with-boundary: every unit sphere is a (d-1)-sphere or a
/// (d-1)-ball.  A d-ball is a contractible d-manifold-with-boundary whose
/// boundary is a (d-1)-sphere; the one-point graph is the 0-ball.  Closed
/// manifolds qualify with an empty boundary.
std::optional<ManifoldWithBoundary> is_manifold_with_boundary(
    const Graph& g, const RecognitionConfig& cfg = {});

/// Ball dimension, or nullopt.
std::optional<int> is_ball(const Graph& g, const RecognitionConfig& cfg = {});

/// Summary used by the command line front end.
struct Classification {
  bool contractible = false;
  std::optional<int> sphere_dim;
  std::optional<int> manifold_dim;
  std::optional<int> boundary_manifold_dim;
};

Classification classify(const Graph& g, const RecognitionConfig& cfg = {});

/// Drops all memoized classifications (mainly for tests measuring cold runs).
void clear_recognition_cache();

}  // namespace sard
