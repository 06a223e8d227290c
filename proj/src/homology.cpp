#include "sard/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "sard/errors.hpp"
#include "sard/recognition.hpp"

namespace sard {

namespace {

void verify_boundary_squares_to_zero(const ChainComplex& cc) {
  for (int k = 2; k <= cc.dimension(); ++k) {
    // column-wise composition d_{k-1} * d_k
    const SparseMatrix& dk = cc.boundary[k];
    const SparseMatrix& dk1 = cc.boundary[k - 1];
    std::vector<std::vector<std::pair<int, std::int64_t>>> cols(dk.cols);
    for (const auto& e : dk.entries) cols[e.col].push_back({e.row, e.value});
    std::vector<std::vector<std::pair<int, std::int64_t>>> mid(dk1.cols);
    for (const auto& e : dk1.entries) mid[e.col].push_back({e.row, e.value});
    std::map<int, std::int64_t> acc;
    for (int c = 0; c < dk.cols; ++c) {
      acc.clear();
      for (const auto& [m, s] : cols[c])
        for (const auto& [r, t] : mid[m]) acc[r] += s * t;
      for (const auto& [r, v] : acc)
        if (v != 0)
          throw InvalidInput("boundary of boundary is nonzero: broken faces");
    }
  }
}

}  // namespace

ChainComplex chain_complex(const DeltaSet& ds) {
  ChainComplex cc;
  int d = ds.dimension();
  if (d < 0) return cc;
  cc.sizes.resize(d + 1);
  cc.boundary.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    cc.sizes[k] = ds.num_cells(k);
    SparseMatrix& m = cc.boundary[k];
    m.rows = k == 0 ? 0 : ds.num_cells(k - 1);
    m.cols = ds.num_cells(k);
    if (k == 0) continue;
    for (int i = 0; i < ds.num_cells(k); ++i)
      for (const auto& f : ds.faces(k, i)) {
        if (f.sign != 1 && f.sign != -1)
          throw InvalidInput("face signs must be +1 or -1");
        m.add(f.index, i, f.sign);
      }
  }
  verify_boundary_squares_to_zero(cc);
  return cc;
}

ChainComplex chain_complex(const SimplicialComplex& c) {
  return chain_complex(DeltaSet::from_complex(c));
}

std::vector<std::int64_t> betti(const ChainComplex& cc,
                                const Coefficients& field) {
  int d = cc.dimension();
  std::vector<std::int64_t> out(std::max(0, d + 1));
  if (d < 0) return out;
  std::vector<int> ranks(d + 2, 0);  // ranks[k] = rank of d_k
  for (int k = 1; k <= d; ++k)
    ranks[k] = field.is_rational ? rank_rational(cc.boundary[k])
                                 : rank_mod_p(cc.boundary[k], field.prime);
  for (int k = 0; k <= d; ++k)
    out[k] = cc.sizes[k] - ranks[k] - ranks[k + 1];
  return out;
}

std::vector<std::int64_t> betti(const SimplicialComplex& c,
                                const Coefficients& field) {
  return betti(chain_complex(c), field);
}

std::vector<std::int64_t> betti(const DeltaSet& ds, const Coefficients& field) {
  return betti(chain_complex(ds), field);
}

SparseMatrix dirac(const ChainComplex& cc) {
  int d = cc.dimension();
  SparseMatrix out;
  std::int64_t n = cc.total();
  out.rows = out.cols = int(n);
  std::vector<std::int64_t> base(d + 2, 0);
  for (int k = 0; k <= d; ++k) base[k + 1] = base[k] + cc.sizes[k];
  for (int k = 1; k <= d; ++k)
    for (const auto& e : cc.boundary[k].entries) {
      int r = int(base[k - 1] + e.row), c = int(base[k] + e.col);
      out.add(r, c, e.value);
      out.add(c, r, e.value);
    }
  return out;
}

namespace {

// sparse product a*b with deterministic entry order
SparseMatrix sparse_multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw InvalidInput("matrix shape mismatch");
  std::vector<std::vector<std::pair<int, std::int64_t>>> arows(a.rows);
  for (const auto& e : a.entries) arows[e.row].push_back({e.col, e.value});
  std::vector<std::vector<std::pair<int, std::int64_t>>> bcols_by_row(b.rows);
  for (const auto& e : b.entries) bcols_by_row[e.row].push_back({e.col, e.value});
  // accumulate row r of the product: sum over a(r,m) * b(m,c)
  SparseMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  std::map<int, std::int64_t> acc;
  for (int r = 0; r < a.rows; ++r) {
    acc.clear();
    for (const auto& [m, s] : arows[r])
      for (const auto& [c, t] : bcols_by_row[m]) acc[c] += s * t;
    for (const auto& [c, v] : acc)
      if (v != 0) out.add(r, c, v);
  }
  return out;
}

SparseMatrix transpose(const SparseMatrix& m) {
  SparseMatrix out;
  out.rows = m.cols;
  out.cols = m.rows;
  for (const auto& e : m.entries) out.add(e.col, e.row, e.value);
  return out;
}

SparseMatrix sparse_add(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw InvalidInput("matrix shape mismatch");
  std::map<std::pair<int, int>, std::int64_t> acc;
  for (const auto& e : a.entries) acc[{e.row, e.col}] += e.value;
  for (const auto& e : b.entries) acc[{e.row, e.col}] += e.value;
  SparseMatrix out;
  out.rows = a.rows;
  out.cols = a.cols;
  for (const auto& [rc, v] : acc)
    if (v != 0) out.add(rc.first, rc.second, v);
  return out;
}

}  // namespace

SparseMatrix beltrami(const ChainComplex& cc) {
  SparseMatrix d = dirac(cc);
  return sparse_multiply(d, d);
}

SparseMatrix hodge_block(const ChainComplex& cc, int k) {
  if (k < 0 || k > cc.dimension()) throw InvalidInput("dimension out of range");
  int n = int(cc.sizes[k]);
  SparseMatrix zero;
  zero.rows = zero.cols = n;
  SparseMatrix low = zero, high = zero;
  if (k >= 1) {
    const SparseMatrix& dk = cc.boundary[k];
    low = sparse_multiply(transpose(dk), dk);
  }
  if (k + 1 <= cc.dimension()) {
    const SparseMatrix& dk1 = cc.boundary[k + 1];
    high = sparse_multiply(dk1, transpose(dk1));
  }
  return sparse_add(low, high);
}

HodgeDecomposition hodge_decomposition(const ChainComplex& cc) {
  HodgeDecomposition out;
  for (int k = 0; k <= cc.dimension(); ++k) {
    out.blocks.push_back(hodge_block(cc, k));
    out.betti.push_back(cc.sizes[k] - rank_rational(out.blocks.back()));
  }
  return out;
}

std::optional<Orientation> orientable(const Graph& g,
                                      const RecognitionConfig& cfg) {
  auto md = is_manifold(g, cfg);
  if (!md) throw ClassificationError("orientability requires a manifold");
  SimplicialComplex wc = SimplicialComplex::whitney(g);
  int d = wc.dimension();

  std::size_t base = 0;  // global id of the first d-cell
  for (int k = 0; k < d; ++k) base += wc.num_cells(k);
  const std::size_t nf = wc.num_cells(d);

  // (d-1)-face -> incident facets; a closed pseudomanifold has exactly two
  std::size_t face_base = 0;
  for (int k = 0; k + 1 < d; ++k) face_base += wc.num_cells(k);
  const std::size_t nfaces = d >= 1 ? wc.num_cells(d - 1) : 0;
  struct Side {
    int facet = -1;
    int drop = -1;  // vertex position removed from the facet
  };
  std::vector<std::pair<Side, Side>> sides(nfaces);
  std::vector<std::int32_t> buf;
  for (std::size_t i = 0; i < nf; ++i) {
    auto cell = wc.cell_span(base + i);
    buf.assign(cell.begin(), cell.end());
    for (int drop = 0; drop <= d; ++drop) {
      std::int32_t removed = buf[drop];
      buf.erase(buf.begin() + drop);
      auto fid = wc.find(buf.data(), d);
      if (!fid) throw ClassificationError("facet faces missing from complex");
      std::size_t fi = *fid - face_base;
      Side s{int(i), drop};
      if (sides[fi].first.facet < 0)
        sides[fi].first = s;
      else if (sides[fi].second.facet < 0)
        sides[fi].second = s;
      else
        throw ClassificationError("face shared by more than two facets");
      buf.insert(buf.begin() + drop, removed);
    }
  }
  for (const auto& [a, b] : sides)
    if (a.facet < 0 || b.facet < 0)
      throw ClassificationError("facet structure is not closed");

  // facet adjacency with the parity of the two drop positions
  std::vector<std::vector<std::pair<int, int>>> adj(nf);
  for (const auto& [a, b] : sides) {
    int parity = (a.drop + b.drop) % 2 == 0 ? 1 : -1;
    adj[a.facet].push_back({b.facet, parity});
    adj[b.facet].push_back({a.facet, parity});
  }

  // Propagate: adjacent facets must induce opposite signs on the shared
  // face, so sign(b) = -sign(a) * parity.
  std::vector<int> sign(nf, 0);
  std::vector<int> queue;
  for (std::size_t seed = 0; seed < nf; ++seed) {
    if (sign[seed] != 0) continue;
    sign[seed] = 1;
    queue.assign(1, int(seed));
    while (!queue.empty()) {
      int f = queue.back();
      queue.pop_back();
      for (const auto& [other, parity] : adj[f]) {
        int want = -sign[f] * parity;
        if (sign[other] == 0) {
          sign[other] = want;
          queue.push_back(other);
        } else if (sign[other] != want) {
          return std::nullopt;
        }
      }
    }
  }

  Orientation out;
  out.dim = d;
  out.facet_signs.reserve(nf);
  for (std::size_t i = 0; i < nf; ++i) {
    auto cell = wc.cell(base + i);
    out.facet_signs.emplace_back(std::move(cell), sign[i]);
  }
  return out;
}

std::int64_t dehn_sommerville_check(const FVector& f) {
  static constexpr std::int64_t kVector[5] = {0, -22, 33, -40, 45};
  if (f.counts.size() != 5)
    throw InvalidInput("Dehn-Sommerville check needs a 5-entry f-vector");
  std::int64_t dot = 0;
  for (int i = 0; i < 5; ++i) dot += kVector[i] * f.counts[i];
  return dot;
}

}  // namespace sard
