#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sard/graph.hpp"
#include "sard/simplicial_complex.hpp"

namespace sard {

/// A resolved complex expression: the simplicial complex, the graph carrying
/// its manifold structure, and the dimension the pair is declared to have.
struct Builtin {
  std::string name;
  std::shared_ptr<const SimplicialComplex> complex;
  Graph graph;
  int manifold_dim = -1;
};

/// The concrete catalog instances the golden file pins.
std::vector<std::string> builtin_names();

/// Resolve a catalog name or expression.  Accepted forms:
///   octahedron | rp3 | poincare_sphere | torus2d | klein_bottle
///   cross_polytope(d)  for -1 <= d <= 5
///   cycle(n)           for n >= 4
///   torus_flat(n)      for n >= 4
///   bary(expr)         containment graph on the cells of expr's complex
///   product(e1, e2)    graph realization of the cell product
/// rp3 and poincare_sphere pair their facet complex with the containment
/// graph on all cells, because their skeletons pick up cliques that are not
/// simplices and therefore fail manifold recognition.
Builtin resolve_complex(const std::string& expr);

/// Triangulated flat n x n torus: grid with wraparound plus one diagonal per
/// square; n >= 4 keeps the identification free of parallel edges.
Graph torus_flat_graph(int n);

}  // namespace sard
