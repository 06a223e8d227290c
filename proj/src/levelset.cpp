#include "sard/levelset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>

#include "bitgraph.hpp"
#include "recognition_detail.hpp"
#include "sard/errors.hpp"
#include "sard/parallel.hpp"
#include "sard/rng.hpp"

namespace sard {

VertexFunction VertexFunction::random_signs(const std::vector<int>& vertices,
                                            int arity, std::uint64_t seed) {
  if (arity < 1) throw InvalidInput("arity must be positive");
  VertexFunction f;
  f.k = arity;
  SplitMix64 rng(seed);
  for (int v : vertices) {
    std::vector<double> vals(arity);
    for (int i = 0; i < arity; ++i) vals[i] = double(rng.sign());
    f.values.emplace(v, std::move(vals));
  }
  return f;
}

VertexFunction VertexFunction::random_injective(const std::vector<int>& vertices,
                                                std::uint64_t seed) {
  VertexFunction f;
  f.k = 1;
  std::vector<int> perm(vertices.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = int(i) + 1;
  SplitMix64 rng(seed);
  rng.shuffle(perm);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    f.values.emplace(vertices[i], std::vector<double>{double(perm[i])});
  return f;
}

const std::vector<double>& VertexFunction::at(int v) const {
  auto it = values.find(v);
  if (it == values.end())
    throw InvalidInput("function value missing at vertex " + std::to_string(v));
  return it->second;
}

double VertexFunction::at(int v, int comp) const {
  const auto& vals = at(v);
  if (comp < 0 || comp >= int(vals.size()))
    throw InvalidInput("function component out of range");
  return vals[comp];
}

// ---------------------------------------------------------------------------
// sign square combinatorics (arity 2)

std::vector<SignVec> sign_square_vertices() {
  return {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
}

std::vector<std::pair<SignVec, SignVec>> sign_square_edges() {
  auto verts = sign_square_vertices();
  std::vector<std::pair<SignVec, SignVec>> out;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      out.emplace_back(verts[i], verts[j]);
  return out;
}

std::vector<std::vector<SignVec>> sign_square_triangles() {
  auto verts = sign_square_vertices();
  std::vector<std::vector<SignVec>> out;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      for (std::size_t l = j + 1; l < verts.size(); ++l)
        out.push_back({verts[i], verts[j], verts[l]});
  return out;
}

std::pair<SignVec, SignVec> default_sign_edge() {
  return {{-1, 1}, {1, -1}};
}

std::vector<std::vector<SignVec>> triangles_through(
    const std::pair<SignVec, SignVec>& edge) {
  std::vector<std::vector<SignVec>> out;
  for (auto& t : sign_square_triangles()) {
    bool a = std::find(t.begin(), t.end(), edge.first) != t.end();
    bool b = std::find(t.begin(), t.end(), edge.second) != t.end();
    if (a && b) out.push_back(t);
  }
  return out;
}

std::vector<SignVec> default_anchors(int k) {
  if (k < 1) throw InvalidInput("arity must be positive");
  std::vector<SignVec> out;
  for (int i = 0; i < k; ++i) {
    SignVec v(k, 1);
    v[i] = -1;
    out.push_back(std::move(v));
  }
  return out;
}

std::int64_t anchor_choice_count(int k) {
  if (k < 1 || k > 31) throw InvalidInput("arity out of range");
  return (std::int64_t(1) << (k - 1)) * ((std::int64_t(1) << k) - 1);
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxArity = 6;  // sign images fit in one 64-bit mask

int sign_code(const SignVec& s, int k) {
  if (int(s.size()) != k) throw InvalidInput("sign vector arity mismatch");
  int code = 0;
  for (int i = 0; i < k; ++i) {
    if (s[i] != 1 && s[i] != -1)
      throw InvalidInput("sign vectors must have +1/-1 entries");
    if (s[i] > 0) code |= 1 << i;
  }
  return code;
}

// per-vertex sign codes; throws naming every vertex that hits c
std::vector<std::int16_t> vertex_codes(const SimplicialComplex& host,
                                       const VertexFunction& f,
                                       const std::vector<double>& c) {
  int k = f.k;
  if (k < 1 || k > kMaxArity)
    throw InvalidInput("supported arities are 1 through 6");
  if (int(c.size()) != k) throw InvalidInput("target arity mismatch");
  std::vector<int> verts = host.vertex_ids();
  std::vector<int> offending;
  int max_id = verts.empty() ? -1 : verts.back();
  std::vector<std::int16_t> table(max_id + 1, -1);
  for (int v : verts) {
    const auto& vals = f.at(v);
    if (int(vals.size()) != k)
      throw InvalidInput("function arity mismatch at vertex " +
                         std::to_string(v));
    int code = 0;
    bool bad = false;
    for (int i = 0; i < k; ++i) {
      if (vals[i] == c[i]) bad = true;
      if (vals[i] > c[i]) code |= 1 << i;
    }
    if (bad)
      offending.push_back(v);
    else
      table[v] = std::int16_t(code);
  }
  if (!offending.empty()) {
    std::ostringstream msg;
    msg << "target value hits the function at " << offending.size()
        << " vertex(es):";
    for (std::size_t i = 0; i < offending.size() && i < 8; ++i)
      msg << ' ' << offending[i];
    if (offending.size() > 8) msg << " ...";
    throw RegularValueViolation(msg.str(), offending);
  }
  return table;
}

template <class Pred>
LevelSet select_cells(std::shared_ptr<const SimplicialComplex> host,
                      const VertexFunction& f, const std::vector<double>& c,
                      Pred&& pred) {
  if (!host) throw InvalidInput("null host complex");
  LevelSet ls;
  ls.host = host;
  ls.k = f.k;
  ls.c = c;
  if (host->is_empty()) return ls;
  std::vector<std::int16_t> codes = vertex_codes(*host, f, c);
  // dimension-0 cells carry one sign value and never qualify
  std::size_t start = host->num_cells(0);
  for (std::size_t id = start; id < host->size(); ++id) {
    std::uint64_t image = 0;
    for (std::int32_t v : host->cell_span(id)) image |= 1ull << codes[v];
    if (pred(image)) ls.cells.push_back(id);
  }
  return ls;
}

std::uint64_t anchors_mask(const std::vector<SignVec>& anchors, int k) {
  std::uint64_t m = 0;
  for (const auto& a : anchors) m |= 1ull << sign_code(a, k);
  return m;
}

}  // namespace

LevelSet level_set_real(std::shared_ptr<const SimplicialComplex> host,
                        const VertexFunction& f, double c) {
  if (f.k != 1) throw InvalidInput("level_set_real needs arity 1");
  return select_cells(std::move(host), f, {c},
                      [](std::uint64_t image) { return image == 3; });
}

LevelSet level_set_complex(std::shared_ptr<const SimplicialComplex> host,
                           const VertexFunction& psi,
                           std::pair<double, double> c,
                           const std::pair<SignVec, SignVec>& edge) {
  if (psi.k != 2) throw InvalidInput("level_set_complex needs arity 2");
  std::uint64_t e =
      (1ull << sign_code(edge.first, 2)) | (1ull << sign_code(edge.second, 2));
  if (std::popcount(e) != 2)
    throw InvalidInput("edge endpoints must be distinct sign pairs");
  return select_cells(std::move(host), psi, {c.first, c.second},
                      [e](std::uint64_t image) {
                        return (image & e) == e && std::popcount(image) >= 3;
                      });
}

LevelSet level_set_multi(std::shared_ptr<const SimplicialComplex> host,
                         const VertexFunction& f, const std::vector<double>& c,
                         const std::vector<SignVec>& anchors) {
  int k = f.k;
  if (int(anchors.size()) != k)
    throw InvalidInput("anchor count must equal the arity");
  std::uint64_t a = anchors_mask(anchors, k);
  if (std::popcount(a) != k) throw InvalidInput("anchors must be distinct");
  int need = k + 1;
  return select_cells(std::move(host), f, c, [a, need](std::uint64_t image) {
    return (image & a) == a && std::popcount(image) >= need;
  });
}

LevelSet triangle_preimage(std::shared_ptr<const SimplicialComplex> host,
                           const VertexFunction& psi,
                           const std::vector<SignVec>& t) {
  if (psi.k != 2) throw InvalidInput("triangle_preimage needs arity 2");
  if (t.size() != 3) throw InvalidInput("a triangle has three corners");
  std::uint64_t tm = anchors_mask(t, 2);
  if (std::popcount(tm) != 3)
    throw InvalidInput("triangle corners must be distinct sign pairs");
  return select_cells(std::move(host), psi, {0.0, 0.0},
                      [tm](std::uint64_t image) {
                        return (image & tm) == tm;
                      });
}

// ---------------------------------------------------------------------------

bool LevelSet::contains(std::size_t cell_id) const {
  return std::binary_search(cells.begin(), cells.end(), cell_id);
}

FVector LevelSet::cell_f_vector() const {
  FVector f;
  if (!host) return f;
  for (std::size_t id : cells) {
    int d = host->cell_dim(id);
    if (d >= int(f.counts.size())) f.counts.resize(d + 1, 0);
    ++f.counts[d];
  }
  return f;
}

const Graph& LevelSet::realization() const {
  if (realization_) return *realization_;
  std::vector<int> verts;
  verts.reserve(cells.size());
  std::vector<std::pair<int, int>> edges;
  if (host && !cells.empty()) {
    const auto& faces = host->face_ids();
    std::vector<std::uint8_t> in(host->size(), 0);
    for (std::size_t id : cells) in[id] = 1;
    for (std::size_t id : cells) {
      verts.push_back(int(id));
      for (std::uint32_t f : faces[id])
        if (in[f]) edges.push_back({int(f), int(id)});
    }
  }
  realization_ = std::make_shared<const Graph>(Graph::from_edges(verts, edges));
  return *realization_;
}

std::optional<int> level_set_manifold_dim(const LevelSet& ls,
                                          const RecognitionConfig& cfg) {
  if (!ls.host || ls.cells.empty()) return std::nullopt;
  const SimplicialComplex& host = *ls.host;
  const auto& faces = host.face_ids();
  const auto& cofaces = host.coface_ids();
  std::vector<std::uint8_t> in(host.size(), 0);
  for (std::size_t id : ls.cells) in[id] = 1;

  auto comparable = [&](std::size_t small, std::size_t big) {
    auto a = host.cell_span(small), b = host.cell_span(big);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) ++i, ++j;
      else if (a[i] > b[j]) ++j;
      else return false;
    }
    return i == a.size();
  };

  std::vector<std::int8_t> dims(ls.cells.size());
  parallel_for(ls.cells.size(), [&](std::size_t n) {
    std::size_t id = ls.cells[n];
    // realization link of this cell: comparable cells inside the level set
    boost::container::small_vector<std::uint32_t, 64> link;
    std::size_t nfaces = 0;
    for (std::uint32_t f : faces[id])
      if (in[f]) link.push_back(f), ++nfaces;
    for (std::uint32_t cf : cofaces[id])
      if (in[cf]) link.push_back(cf);
    detail::BitGraph bg(int(link.size()));
    for (std::size_t i = 0; i < link.size(); ++i)
      for (std::size_t j = i + 1; j < link.size(); ++j) {
        // faces come first: face x coface pairs are always chains
        bool edge = (i < nfaces && j >= nfaces) ||
                    (host.cell_dim(link[i]) != host.cell_dim(link[j]) &&
                     comparable(std::min<std::size_t>(link[i], link[j]),
                                std::max<std::size_t>(link[i], link[j])));
        if (edge) bg.add_edge(int(i), int(j));
      }
    auto s = detail::bitgraph_sphere_dim(bg, cfg);
    dims[n] = s ? std::int8_t(*s) : std::int8_t(-2);
  });

  int dim = -9;
  for (auto d : dims) {
    if (d == -2) return std::nullopt;
    if (dim == -9)
      dim = d;
    else if (dim != d)
      return std::nullopt;
  }
  return dim + 1;
}

Graph boundary_of(const LevelSet& ls) {
  auto mwb = is_manifold_with_boundary(ls.realization());
  if (!mwb)
    throw ClassificationError(
        "level set realization is not a manifold with boundary");
  return mwb->boundary;
}

bool is_open_set(const LevelSet& ls) {
  if (!ls.host) return true;
  const auto& cofaces = ls.host->coface_ids();
  std::vector<std::uint8_t> in(ls.host->size(), 0);
  for (std::size_t id : ls.cells) in[id] = 1;
  for (std::size_t id : ls.cells)
    for (std::uint32_t cf : cofaces[id])
      if (!in[cf]) return false;
  return true;
}

}  // namespace sard
