#include "sard/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <string>

#include "bitgraph.hpp"
#include "sard/errors.hpp"

namespace sard {

namespace {

constexpr int kMaxFacetSize = 24;

// lexicographic compare of two equal-length tuples
int cmp_cells(const std::int32_t* a, const std::int32_t* b, int len) {
  for (int i = 0; i < len; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// sorts a flat tuple array lexicographically and removes duplicates
std::vector<std::int32_t> sort_unique_flat(std::vector<std::int32_t> flat,
                                           int len) {
  const std::size_t n = flat.size() / len;
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return cmp_cells(&flat[std::size_t(x) * len], &flat[std::size_t(y) * len],
                     len) < 0;
  });
  std::vector<std::int32_t> out;
  out.reserve(flat.size());
  for (std::size_t k = 0; k < n; ++k) {
    const std::int32_t* c = &flat[std::size_t(order[k]) * len];
    if (k > 0 && cmp_cells(c, &out[out.size() - len], len) == 0) continue;
    out.insert(out.end(), c, c + len);
  }
  return out;
}

}  // namespace

void SimplicialComplex::finalize(std::vector<std::vector<std::int32_t>> flat) {
  while (!flat.empty() && flat.back().empty()) flat.pop_back();
  cells_ = std::move(flat);
  offset_.assign(cells_.size() + 1, 0);
  for (std::size_t k = 0; k < cells_.size(); ++k)
    offset_[k + 1] = offset_[k] + cells_[k].size() / (k + 1);
  total_ = offset_.empty() ? 0 : offset_.back();
}

SimplicialComplex SimplicialComplex::generate(const std::vector<Cell>& facets) {
  std::vector<std::vector<std::int32_t>> flat;
  for (const Cell& f : facets) {
    Cell s(f);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw InvalidInput("facet with no vertices");
    if (!s.empty() && s.front() < 0)
      throw InvalidInput("negative vertex id in facet");
    const int m = static_cast<int>(s.size());
    if (m > kMaxFacetSize)
      throw InvalidInput("facet with more than " +
                         std::to_string(kMaxFacetSize) + " vertices");
    if (static_cast<int>(flat.size()) < m) flat.resize(m);
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      int size = std::popcount(mask);
      auto& bucket = flat[size - 1];
      for (int b = 0; b < m; ++b)
        if (mask & (1u << b)) bucket.push_back(s[b]);
    }
  }
  SimplicialComplex c;
  for (std::size_t k = 0; k < flat.size(); ++k)
    flat[k] = sort_unique_flat(std::move(flat[k]), static_cast<int>(k) + 1);
  c.finalize(std::move(flat));
  return c;
}

SimplicialComplex SimplicialComplex::from_cells(const std::vector<Cell>& cells) {
  std::vector<std::vector<std::int32_t>> flat;
  for (const Cell& raw : cells) {
    Cell s(raw);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw InvalidInput("cell with no vertices");
    if (s.front() < 0) throw InvalidInput("negative vertex id in cell");
    const int m = static_cast<int>(s.size());
    if (m > kMaxFacetSize)
      throw InvalidInput("cell with more than " +
                         std::to_string(kMaxFacetSize) + " vertices");
    if (static_cast<int>(flat.size()) < m) flat.resize(m);
    for (int v : s) flat[m - 1].push_back(v);
  }
  SimplicialComplex c;
  for (std::size_t k = 0; k < flat.size(); ++k)
    flat[k] = sort_unique_flat(std::move(flat[k]), static_cast<int>(k) + 1);
  c.finalize(std::move(flat));

  // downward closure check: every one-step face must be present
  for (std::size_t id = 0; id < c.size(); ++id) {
    auto span = c.cell_span(id);
    const int len = static_cast<int>(span.size());
    if (len == 1) continue;
    std::vector<std::int32_t> face(len - 1);
    for (int drop = 0; drop < len; ++drop) {
      int w = 0;
      for (int i = 0; i < len; ++i)
        if (i != drop) face[w++] = span[i];
      if (!c.find(face.data(), len - 1))
        throw InvalidInput("cell list is not downward closed");
    }
  }
  return c;
}

namespace {

// Dense adjacency above this size is not worth the quadratic footprint; the
// clique complex is then built by ordered extension over sorted neighbour
// lists instead.
constexpr int kDenseCliqueLimit = 16384;

// Emits every clique extending `clique` by candidates from `cand`, in
// lexicographic order.  `cand` holds exactly the common neighbours of the
// current clique that are larger than its last vertex, so each clique is
// produced once and each per-size bucket comes out sorted.
void extend_cliques(const Graph& g, std::vector<std::int32_t>& clique,
                    const std::vector<std::int32_t>& cand,
                    std::vector<std::vector<std::int32_t>>& flat) {
  if (flat.size() < clique.size()) flat.resize(clique.size());
  auto& bucket = flat[clique.size() - 1];
  bucket.insert(bucket.end(), clique.begin(), clique.end());
  std::vector<std::int32_t> next;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const std::int32_t w = cand[i];
    const auto& nw = g.neighbors(w);
    next.clear();
    std::set_intersection(cand.begin() + i + 1, cand.end(), nw.begin(),
                          nw.end(), std::back_inserter(next));
    clique.push_back(w);
    extend_cliques(g, clique, next, flat);
    clique.pop_back();
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::whitney(const Graph& g) {
  if (g.num_vertices() == 0) return SimplicialComplex();
  if (g.num_vertices() > kDenseCliqueLimit) {
    std::vector<std::vector<std::int32_t>> flat;
    std::vector<std::int32_t> clique(1);
    for (int v : g.vertices()) {
      const auto& nb = g.neighbors(v);
      std::vector<std::int32_t> cand(
          std::upper_bound(nb.begin(), nb.end(), v), nb.end());
      clique.assign(1, v);
      extend_cliques(g, clique, cand, flat);
    }
    SimplicialComplex c;
    c.finalize(std::move(flat));
    return c;
  }
  detail::BitGraph bg(g);
  auto cliques = detail::maximal_cliques(bg);
  std::vector<Cell> facets;
  facets.reserve(cliques.size());
  for (const auto& c : cliques) {
    Cell f;
    f.reserve(c.size());
    for (int v : c) f.push_back(bg.label(v));
    facets.push_back(std::move(f));
  }
  return generate(facets);
}

FVector SimplicialComplex::f_vector() const {
  std::vector<std::int64_t> counts(cells_.size());
  for (std::size_t k = 0; k < cells_.size(); ++k)
    counts[k] = static_cast<std::int64_t>(cells_[k].size() / (k + 1));
  return FVector(std::move(counts));
}

std::size_t SimplicialComplex::num_cells(int k) const {
  if (k < 0 || k > dimension()) return 0;
  return cells_[k].size() / (k + 1);
}

int SimplicialComplex::cell_dim(std::size_t id) const {
  for (std::size_t k = 0; k + 1 < offset_.size(); ++k)
    if (id < offset_[k + 1]) return static_cast<int>(k);
  throw InvalidInput("cell id out of range");
}

std::span<const std::int32_t> SimplicialComplex::cell_span(std::size_t id) const {
  int k = cell_dim(id);
  std::size_t local = id - offset_[k];
  return {&cells_[k][local * (k + 1)], static_cast<std::size_t>(k + 1)};
}

SimplicialComplex::Cell SimplicialComplex::cell(std::size_t id) const {
  auto s = cell_span(id);
  return Cell(s.begin(), s.end());
}

std::optional<std::size_t> SimplicialComplex::find(const std::int32_t* verts,
                                                   int count) const {
  int k = count - 1;
  if (k < 0 || k > dimension()) return std::nullopt;
  const auto& flat = cells_[k];
  std::size_t lo = 0, hi = flat.size() / count;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (cmp_cells(&flat[mid * count], verts, count) < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < flat.size() / std::size_t(count) &&
      cmp_cells(&flat[lo * count], verts, count) == 0)
    return offset_[k] + lo;
  return std::nullopt;
}

std::optional<std::size_t> SimplicialComplex::find(const Cell& cell) const {
  std::vector<std::int32_t> tmp(cell.begin(), cell.end());
  return find(tmp.data(), static_cast<int>(tmp.size()));
}

std::vector<int> SimplicialComplex::vertex_ids() const {
  std::vector<int> out;
  if (!cells_.empty())
    out.assign(cells_[0].begin(), cells_[0].end());
  return out;
}

std::vector<SimplicialComplex::Cell> SimplicialComplex::facets() const {
  const auto& cof = coface_ids();
  std::vector<Cell> out;
  for (std::size_t id = 0; id < total_; ++id)
    if (cof[id].empty()) out.push_back(cell(id));
  return out;
}

Graph SimplicialComplex::skeleton() const {
  std::vector<int> verts = vertex_ids();
  std::vector<std::pair<int, int>> edges;
  if (dimension() >= 1) {
    const auto& e = cells_[1];
    for (std::size_t i = 0; i + 1 < e.size(); i += 2)
      edges.emplace_back(e[i], e[i + 1]);
  }
  return Graph::from_edges(std::move(verts), std::move(edges));
}

const SimplicialComplex::Incidence& SimplicialComplex::incidence() const {
  static std::mutex build_mutex;
  {
    std::lock_guard<std::mutex> lock(build_mutex);
    if (incidence_) return *incidence_;
    auto inc = std::make_shared<Incidence>();
    inc->faces.resize(total_);
    inc->cofaces.resize(total_);
    std::vector<std::int32_t> sub;
    for (std::size_t id = 0; id < total_; ++id) {
      auto span = cell_span(id);
      const int m = static_cast<int>(span.size());
      if (m == 1) continue;
      auto& faces = inc->faces[id];
      for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
        sub.clear();
        for (int b = 0; b < m; ++b)
          if (mask & (1u << b)) sub.push_back(span[b]);
        auto fid = find(sub.data(), static_cast<int>(sub.size()));
        // closed complex: every subset is present
        faces.push_back(static_cast<std::uint32_t>(*fid));
      }
      std::sort(faces.begin(), faces.end());
      for (auto f : faces)
        inc->cofaces[f].push_back(static_cast<std::uint32_t>(id));
    }
    // coface lists come out already sorted because ids are visited in order
    incidence_ = std::move(inc);
  }
  return *incidence_;
}

const std::vector<std::vector<std::uint32_t>>& SimplicialComplex::face_ids()
    const {
  return incidence().faces;
}

const std::vector<std::vector<std::uint32_t>>& SimplicialComplex::coface_ids()
    const {
  return incidence().cofaces;
}

Graph realization_graph(const SimplicialComplex& c) {
  std::vector<int> verts(c.size());
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<std::pair<int, int>> edges;
  const auto& faces = c.face_ids();
  for (std::size_t id = 0; id < c.size(); ++id)
    for (auto f : faces[id])
      edges.emplace_back(static_cast<int>(f), static_cast<int>(id));
  return Graph::from_edges(std::move(verts), std::move(edges));
}

Realization realize(std::shared_ptr<const SimplicialComplex> c) {
  Realization r;
  r.graph = realization_graph(*c);
  r.complex = std::move(c);
  return r;
}

std::pair<Graph, Graph> sphere_decomposition(const Realization& r, int vertex) {
  auto target = r.complex->cell_span(static_cast<std::size_t>(vertex));
  std::vector<int> sub, super;
  for (int u : r.graph.neighbors(vertex)) {
    auto other = r.complex->cell_span(static_cast<std::size_t>(u));
    if (other.size() < target.size())
      sub.push_back(u);
    else
      super.push_back(u);
  }
  return {r.graph.induced(sub), r.graph.induced(super)};
}

Graph barycentric(const Graph& g) {
  return realization_graph(SimplicialComplex::whitney(g));
}

}  // namespace sard
