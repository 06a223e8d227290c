#pragma once

#include <cstdint>
#include <vector>

namespace sard {

/// Sparse integer matrix in coordinate form.  Entries with the same (row,
/// col) are additive; callers normally emit each position once.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  struct Entry {
    int row;
    int col;
    std::int64_t value;
  };
  std::vector<Entry> entries;

  void add(int r, int c, std::int64_t v) { entries.push_back({r, c, v}); }
};

}  // namespace sard
