#include "sard/barycentric.hpp"

#include <algorithm>
#include <vector>

#include "sard/errors.hpp"

namespace sard {

std::int64_t stirling2(int n, int k) {
  if (n < 0 || k < 0) throw InvalidInput("stirling2 arguments must be >= 0");
  if (k > n) return 0;
  if (n == 0) return 1;  // S(0,0)
  if (k == 0) return 0;
  std::vector<std::int64_t> row(k + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j)
      row[j] = row[j] * j + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

std::vector<std::vector<std::int64_t>> barycentric_operator(int d) {
  if (d < 0) throw InvalidInput("operator dimension must be >= 0");
  std::vector<std::vector<std::int64_t>> op(d + 1,
                                            std::vector<std::int64_t>(d + 1, 0));
  std::int64_t factorial = 1;
  for (int k = 0; k <= d; ++k) {
    factorial *= (k + 1);
    for (int j = 0; j <= d; ++j) op[k][j] = stirling2(j + 1, k + 1) * factorial;
  }
  return op;
}

FVector apply_barycentric_operator(
    const std::vector<std::vector<std::int64_t>>& op, const FVector& f) {
  const int n = static_cast<int>(op.size());
  if (static_cast<int>(f.counts.size()) > n)
    throw InvalidInput("f-vector longer than the operator dimension");
  std::vector<std::int64_t> out(n, 0);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < static_cast<int>(f.counts.size()); ++j)
      out[k] += op[k][j] * f.counts[j];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return FVector(std::move(out));
}

}  // namespace sard
