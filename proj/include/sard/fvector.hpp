#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

namespace sard {

/// Cell counts per dimension, counts[k] = number of k-dimensional cells.
/// Empty counts mean the empty complex.
struct FVector {
  std::vector<std::int64_t> counts;

  FVector() = default;
  explicit FVector(std::vector<std::int64_t> c) : counts(std::move(c)) {}

  int dimension() const { return static_cast<int>(counts.size()) - 1; }

  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }

  std::int64_t euler() const {
    std::int64_t chi = 0;
    int sign = 1;
    for (auto c : counts) {
      chi += sign * c;
      sign = -sign;
    }
    return chi;
  }

  bool operator==(const FVector& o) const { return counts == o.counts; }
  bool operator!=(const FVector& o) const { return counts != o.counts; }
};

inline std::ostream& operator<<(std::ostream& os, const FVector& f) {
  os << '(';
  for (std::size_t i = 0; i < f.counts.size(); ++i) {
    if (i) os << ',';
    os << f.counts[i];
  }
  return os << ')';
}

}  // namespace sard
