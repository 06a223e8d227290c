#include "sard/delta_set.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "sard/errors.hpp"

namespace sard {

int DeltaSet::num_cells(int dim) const {
  if (dim < 0 || dim >= int(faces_.size())) return 0;
  return int(faces_[dim].size());
}

FVector DeltaSet::f_vector() const {
  FVector f;
  for (const auto& layer : faces_) f.counts.push_back(std::int64_t(layer.size()));
  return f;
}

int DeltaSet::dim_of_flat(int flat) const {
  if (flat < 0 || flat >= total_) throw InvalidInput("cell id out of range");
  int dim = 0;
  while (dim + 1 < int(offsets_.size()) && offsets_[dim + 1] <= flat) ++dim;
  return dim;
}

int DeltaSet::index_of_flat(int flat) const {
  return flat - offsets_[dim_of_flat(flat)];
}

void DeltaSet::finish() {
  offsets_.assign(faces_.size(), 0);
  total_ = 0;
  for (std::size_t k = 0; k < faces_.size(); ++k) {
    offsets_[k] = total_;
    total_ += int(faces_[k].size());
  }
}

DeltaSet DeltaSet::from_complex(const SimplicialComplex& c) {
  DeltaSet ds;
  int d = c.dimension();
  if (d < 0) return ds;
  ds.faces_.resize(d + 1);
  ds.provenance_.resize(d + 1);

  std::vector<std::size_t> base(d + 1, 0);  // global id of first k-cell
  for (int k = 1; k <= d; ++k) base[k] = base[k - 1] + c.num_cells(k - 1);

  for (int k = 0; k <= d; ++k) {
    int n = int(c.num_cells(k));
    ds.faces_[k].resize(n);
    ds.provenance_[k].reserve(n);
    for (int i = 0; i < n; ++i) {
      std::size_t id = base[k] + i;
      auto cell = c.cell_span(id);
      auto& fl = ds.faces_[k][std::size_t(i)];
      if (k >= 1) {
        fl.reserve(k + 1);
        std::vector<std::int32_t> face(cell.begin(), cell.end());
        for (int drop = 0; drop <= k; ++drop) {
          std::int32_t removed = face[drop];
          face.erase(face.begin() + drop);
          auto fid = c.find(face.data(), k);
          if (!fid) throw InvalidInput("complex is not downward closed");
          fl.push_back({int(*fid - base[k - 1]), drop % 2 == 0 ? 1 : -1});
          face.insert(face.begin() + drop, removed);
        }
      }
      ds.provenance_[k].emplace_back(int(id), -1);
    }
  }
  ds.finish();
  return ds;
}

DeltaSet product_delta(const SimplicialComplex& a, const SimplicialComplex& b) {
  DeltaSet da = DeltaSet::from_complex(a);
  DeltaSet db = DeltaSet::from_complex(b);
  DeltaSet out;
  int dda = da.dimension(), ddb = db.dimension();
  if (dda < 0 || ddb < 0) return out;
  int d = dda + ddb;
  out.faces_.resize(d + 1);
  out.provenance_.resize(d + 1);

  // index of the pair (flat a-cell, flat b-cell) inside its dimension;
  // enumeration order (a-dim asc, a-index asc, b-index asc) fixes the ids
  std::unordered_map<std::int64_t, int> index;
  auto key = [&](int fa, int fb) {
    return std::int64_t(fa) * db.total_cells() + fb;
  };
  for (int k = 0; k <= d; ++k) {
    for (int i = std::max(0, k - ddb); i <= std::min(k, dda); ++i) {
      int j = k - i;
      for (int xi = 0; xi < da.num_cells(i); ++xi)
        for (int yi = 0; yi < db.num_cells(j); ++yi) {
          int id = int(out.provenance_[k].size());
          index.emplace(key(da.flat_id(i, xi), db.flat_id(j, yi)), id);
          out.provenance_[k].emplace_back(da.flat_id(i, xi), db.flat_id(j, yi));
        }
    }
  }
  for (int k = 0; k <= d; ++k) {
    out.faces_[k].resize(out.provenance_[k].size());
    for (std::size_t n = 0; n < out.provenance_[k].size(); ++n) {
      auto [fa, fb] = out.provenance_[k][n];
      int i = da.dim_of_flat(fa), xi = da.index_of_flat(fa);
      int j = db.dim_of_flat(fb), yi = db.index_of_flat(fb);
      auto& fl = out.faces_[k][n];
      for (const auto& fx : da.faces(i, xi))
        fl.push_back({index.at(key(da.flat_id(i - 1, fx.index), fb)), fx.sign});
      int twist = i % 2 == 0 ? 1 : -1;
      for (const auto& fy : db.faces(j, yi))
        fl.push_back(
            {index.at(key(fa, db.flat_id(j - 1, fy.index))), twist * fy.sign});
    }
  }
  out.finish();
  return out;
}

Graph delta_graph_realization(const DeltaSet& ds) {
  const int n = ds.total_cells();
  if (n == 0) return Graph();
  const int words = (n + 63) / 64;
  // reach[z] = iterated faces of z, built dimension by dimension
  std::vector<std::uint64_t> reach(std::size_t(n) * words, 0);
  std::vector<std::pair<int, int>> edges;
  for (int k = 1; k <= ds.dimension(); ++k) {
    for (int i = 0; i < ds.num_cells(k); ++i) {
      std::uint64_t* rz = reach.data() + std::size_t(ds.flat_id(k, i)) * words;
      for (const auto& f : ds.faces(k, i)) {
        int fw = ds.flat_id(k - 1, f.index);
        const std::uint64_t* rf = reach.data() + std::size_t(fw) * words;
        for (int w = 0; w < words; ++w) rz[w] |= rf[w];
        rz[fw >> 6] |= std::uint64_t(1) << (fw & 63);
      }
    }
  }
  std::vector<int> verts(n);
  for (int z = 0; z < n; ++z) {
    verts[z] = z;
    const std::uint64_t* rz = reach.data() + std::size_t(z) * words;
    for (int w = 0; w < words; ++w) {
      std::uint64_t x = rz[w];
      while (x) {
        int u = w * 64 + std::countr_zero(x);
        x &= x - 1;
        edges.push_back({u, z});
      }
    }
  }
  return Graph::from_edges(verts, edges);
}

}  // namespace sard
