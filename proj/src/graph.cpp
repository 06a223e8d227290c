#include "sard/graph.hpp"

#include <algorithm>
#include <string>

#include "sard/errors.hpp"

namespace sard {

namespace {

void normalize_edge(std::pair<int, int>& e) {
  if (e.first > e.second) std::swap(e.first, e.second);
}

}  // namespace

Graph Graph::from_edges(std::vector<int> vertices,
                        std::vector<std::pair<int, int>> edges) {
  Graph g;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (!vertices.empty() && vertices.front() < 0)
    throw InvalidInput("graph vertex ids must be non-negative");
  g.vertices_ = std::move(vertices);

  for (auto& e : edges) normalize_edge(e);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.adjacency_.assign(g.vertices_.size(), {});
  for (const auto& e : edges) {
    if (e.first == e.second)
      throw InvalidInput("graph has a loop at vertex " + std::to_string(e.first));
    int ia = g.index_of(e.first), ib = g.index_of(e.second);
    if (ia < 0 || ib < 0)
      throw InvalidInput("edge uses a vertex missing from the vertex list");
    g.adjacency_[ia].push_back(e.second);
    g.adjacency_[ib].push_back(e.first);
  }
  g.edges_ = std::move(edges);
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
  return g;
}

Graph Graph::single_vertex(int id) { return from_edges({id}, {}); }

Graph Graph::cycle(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  std::vector<int> verts(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    verts[i] = i;
    edges.emplace_back(i, (i + 1) % n);
  }
  return from_edges(std::move(verts), std::move(edges));
}

Graph Graph::path(int n) {
  if (n < 1) throw InvalidInput("path needs at least 1 vertex");
  std::vector<int> verts(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    verts[i] = i;
    if (i + 1 < n) edges.emplace_back(i, i + 1);
  }
  return from_edges(std::move(verts), std::move(edges));
}

Graph Graph::complete(int n) {
  std::vector<int> verts(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    verts[i] = i;
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return from_edges(std::move(verts), std::move(edges));
}

Graph Graph::edgeless(int n) {
  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i;
  return from_edges(std::move(verts), {});
}

int Graph::index_of(int v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

bool Graph::has_vertex(int v) const { return index_of(v) >= 0; }

bool Graph::has_edge(int a, int b) const {
  int ia = index_of(a);
  if (ia < 0) return false;
  const auto& nb = adjacency_[ia];
  return std::binary_search(nb.begin(), nb.end(), b);
}

const std::vector<int>& Graph::neighbors(int v) const {
  int i = index_of(v);
  if (i < 0)
    throw InvalidInput("unknown vertex " + std::to_string(v));
  return adjacency_[i];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

Graph Graph::induced(const std::vector<int>& verts) const {
  std::vector<int> keep;
  keep.reserve(verts.size());
  for (int v : verts)
    if (has_vertex(v)) keep.push_back(v);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  std::vector<std::pair<int, int>> edges;
  for (int v : keep) {
    const auto& nb = neighbors(v);
    // intersect the (sorted) neighbour list with keep
    auto it = keep.begin();
    for (int u : nb) {
      while (it != keep.end() && *it < u) ++it;
      if (it == keep.end()) break;
      if (*it == u && v < u) edges.emplace_back(v, u);
    }
  }
  return from_edges(std::move(keep), std::move(edges));
}

Graph Graph::without_vertex(int v) const {
  if (!has_vertex(v)) throw InvalidInput("unknown vertex " + std::to_string(v));
  std::vector<int> keep;
  keep.reserve(vertices_.size() - 1);
  for (int u : vertices_)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Graph Graph::unit_sphere(int v) const { return induced(neighbors(v)); }

bool Graph::connected() const {
  if (vertices_.empty()) return false;
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int u : adjacency_[i]) {
      int j = index_of(u);
      if (!seen[j]) {
        seen[j] = 1;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == vertices_.size();
}

int Graph::max_vertex_id() const {
  return vertices_.empty() ? -1 : vertices_.back();
}

Graph zykov_join(const Graph& a, const Graph& b) {
  int shift = 0;
  if (!a.vertices_.empty() && !b.vertices_.empty()) {
    // shift b's ids when the ranges collide
    bool collide = false;
    for (int v : b.vertices_)
      if (a.has_vertex(v)) {
        collide = true;
        break;
      }
    if (collide) shift = a.max_vertex_id() + 1 - b.vertices_.front();
    if (shift < 0) shift = 0;
  }

  std::vector<int> verts = a.vertices_;
  for (int v : b.vertices_) verts.push_back(v + shift);
  std::vector<std::pair<int, int>> edges = a.edges_;
  for (const auto& e : b.edges_)
    edges.emplace_back(e.first + shift, e.second + shift);
  for (int va : a.vertices_)
    for (int vb : b.vertices_) edges.emplace_back(va, vb + shift);
  return Graph::from_edges(std::move(verts), std::move(edges));
}

Graph suspension(const Graph& g) {
  int base = g.max_vertex_id() + 1;
  Graph poles = Graph::from_edges({base, base + 1}, {});
  return zykov_join(g, poles);
}

Graph cross_polytope(int d) {
  if (d < -1) throw InvalidInput("cross polytope dimension must be >= -1");
  Graph g;  // (-1)-sphere
  for (int i = 0; i <= d; ++i) g = suspension(g);
  return g;
}

}  // namespace sard
