#include "sard/rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "sard/errors.hpp"

namespace sard {

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t out = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) out = (__int128)out * base % p;
    base = (__int128)base * base % p;
    exp >>= 1;
  }
  return out;
}

// Row-major elimination state shared by both coefficient types.  Columns
// keep the set of rows touching them so pivot costs stay current.
template <class Scalar>
class Eliminator {
 public:
  Eliminator(const SparseMatrix& m, std::int64_t p) : p_(p) {
    rows_.resize(m.rows);
    col_rows_.resize(m.cols);
    for (const auto& e : m.entries) {
      if (e.row < 0 || e.row >= m.rows || e.col < 0 || e.col >= m.cols)
        throw InvalidInput("matrix entry out of range");
      Scalar v = reduce(Scalar(e.value));
      if (v == 0) continue;
      auto [it, fresh] = rows_[e.row].try_emplace(e.col, v);
      if (!fresh) {
        it->second = reduce(it->second + v);
        if (it->second == 0) rows_[e.row].erase(it);
      }
    }
    for (int r = 0; r < m.rows; ++r)
      for (const auto& [c, v] : rows_[r]) col_rows_[c].insert(r);
  }

  int run() {
    int rank = 0;
    while (true) {
      int pc = pick_column();
      if (pc < 0) break;
      int pr = pick_row(pc);
      eliminate(pr, pc);
      ++rank;
    }
    return rank;
  }

 private:
  Scalar reduce(Scalar v) const {
    if (p_ == 0) return v;
    if constexpr (std::is_same_v<Scalar, std::int64_t>) {
      v %= p_;
      if (v < 0) v += p_;
    }
    return v;
  }

  // smallest active column; ties to the smallest index for determinism
  int pick_column() const {
    int best = -1;
    std::size_t best_n = std::numeric_limits<std::size_t>::max();
    for (int c = 0; c < int(col_rows_.size()); ++c) {
      std::size_t n = col_rows_[c].size();
      if (n > 0 && n < best_n) {
        best_n = n;
        best = c;
        if (n == 1) break;
      }
    }
    return best;
  }

  int pick_row(int c) const {
    int best = -1;
    std::size_t best_n = std::numeric_limits<std::size_t>::max();
    for (int r : col_rows_[c]) {
      if (rows_[r].size() < best_n) {
        best_n = rows_[r].size();
        best = r;
      }
    }
    return best;
  }

  void eliminate(int pr, int pc) {
    Scalar pivot = rows_[pr].at(pc);
    Scalar inv = invert(pivot);
    std::vector<int> targets;
    for (int r : col_rows_[pc])
      if (r != pr) targets.push_back(r);
    for (int r : targets) {
      Scalar factor = reduce(rows_[r].at(pc) * inv);
      for (const auto& [c, v] : rows_[pr]) {
        Scalar delta = reduce(factor * v);
        auto [it, fresh] = rows_[r].try_emplace(c, Scalar(0));
        it->second = reduce(it->second - delta);
        if (it->second == 0) {
          rows_[r].erase(it);
          col_rows_[c].erase(r);
        } else if (fresh) {
          col_rows_[c].insert(r);
        }
      }
    }
    // drop the pivot row and column from the active sets
    for (const auto& [c, v] : rows_[pr]) {
      (void)v;
      col_rows_[c].erase(pr);
    }
    rows_[pr].clear();
    col_rows_[pc].clear();
  }

  Scalar invert(const Scalar& v) const {
    if constexpr (std::is_same_v<Scalar, std::int64_t>) {
      return mod_pow(v, p_ - 2, p_);
    } else {
      return Scalar(1) / v;
    }
  }

  std::int64_t p_;
  std::vector<std::map<int, Scalar>> rows_;
  std::vector<std::set<int>> col_rows_;
};

}  // namespace

int rank_mod_p(const SparseMatrix& m, std::int64_t p) {
  if (p < 2) throw InvalidInput("modulus must be a prime >= 2");
  Eliminator<std::int64_t> e(m, p);
  return e.run();
}

int rank_rational(const SparseMatrix& m) {
  Eliminator<boost::multiprecision::cpp_rational> e(m, 0);
  return e.run();
}

}  // namespace sard
