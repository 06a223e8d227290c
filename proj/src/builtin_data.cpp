#include "builtins_detail.hpp"

namespace sard::detail {

namespace {

constexpr int k_rp3[40][4] = {
    {1,2,3,4}, {1,2,3,5}, {1,2,4,6}, {1,2,5,6}, {1,3,4,7}, {1,3,5,7},
    {1,4,6,7}, {1,5,6,7}, {2,3,4,8}, {2,3,5,9}, {2,3,8,9}, {2,4,6,10},
    {2,4,8,10}, {2,5,6,11}, {2,5,9,11}, {2,6,10,11}, {2,7,8,9}, {2,7,8,10},
    {2,7,9,11}, {2,7,10,11}, {3,4,7,11}, {3,4,8,11}, {3,5,7,10}, {3,5,9,10},
    {3,6,8,9}, {3,6,8,11}, {3,6,9,10}, {3,6,10,11}, {3,7,10,11}, {4,5,8,10},
    {4,5,8,11}, {4,5,9,10}, {4,5,9,11}, {4,6,7,9}, {4,6,9,10}, {4,7,9,11},
    {5,6,7,8}, {5,6,8,11}, {5,7,8,10}, {6,7,8,9},
};

constexpr int k_poincare[130][4] = {
    {0,1,5,11}, {0,1,5,17}, {0,1,7,13}, {0,1,7,19}, {0,1,9,15}, {0,1,9,21},
    {0,1,11,13}, {0,1,15,19}, {0,1,17,21}, {0,2,6,12}, {0,2,6,18}, {0,2,7,13},
    {0,2,7,19}, {0,2,10,16}, {0,2,10,22}, {0,2,12,13}, {0,2,16,19}, {0,2,18,22},
    {0,3,8,14}, {0,3,8,20}, {0,3,9,15}, {0,3,9,21}, {0,3,10,16}, {0,3,10,22},
    {0,3,14,22}, {0,3,15,16}, {0,3,20,21}, {0,4,5,11}, {0,4,5,17}, {0,4,6,12},
    {0,4,6,18}, {0,4,8,14}, {0,4,8,20}, {0,4,11,12}, {0,4,14,18}, {0,4,17,20},
    {0,11,12,13}, {0,14,18,22}, {0,15,16,19}, {0,17,20,21}, {1,2,5,11}, {1,2,5,17},
    {1,2,8,14}, {1,2,8,20}, {1,2,10,16}, {1,2,10,22}, {1,2,11,14}, {1,2,16,20},
    {1,2,17,22}, {1,3,6,12}, {1,3,6,18}, {1,3,7,13}, {1,3,7,19}, {1,3,8,14},
    {1,3,8,20}, {1,3,12,20}, {1,3,13,14}, {1,3,18,19}, {1,4,6,12}, {1,4,6,18},
    {1,4,9,15}, {1,4,9,21}, {1,4,10,16}, {1,4,10,22}, {1,4,12,16}, {1,4,15,18},
    {1,4,21,22}, {1,11,13,14}, {1,12,16,20}, {1,15,18,19}, {1,17,21,22}, {2,3,5,11},
    {2,3,5,17}, {2,3,6,12}, {2,3,6,18}, {2,3,9,15}, {2,3,9,21}, {2,3,11,15},
    {2,3,12,21}, {2,3,17,18}, {2,4,7,13}, {2,4,7,19}, {2,4,8,14}, {2,4,8,20},
    {2,4,9,15}, {2,4,9,21}, {2,4,13,21}, {2,4,14,15}, {2,4,19,20}, {2,11,14,15},
    {2,12,13,21}, {2,16,19,20}, {2,17,18,22}, {3,4,5,11}, {3,4,5,17}, {3,4,7,13},
    {3,4,7,19}, {3,4,10,16}, {3,4,10,22}, {3,4,11,16}, {3,4,13,22}, {3,4,17,19},
    {3,11,15,16}, {3,12,20,21}, {3,13,14,22}, {3,17,18,19}, {4,11,12,16}, {4,13,21,22},
    {4,14,15,18}, {4,17,19,20}, {11,12,13,23}, {11,12,16,23}, {11,13,14,23}, {11,14,15,23},
    {11,15,16,23}, {12,13,21,23}, {12,16,20,23}, {12,20,21,23}, {13,14,22,23}, {13,21,22,23},
    {14,15,18,23}, {14,18,22,23}, {15,16,19,23}, {15,18,19,23}, {16,19,20,23}, {17,18,19,23},
    {17,18,22,23}, {17,19,20,23}, {17,20,21,23}, {17,21,22,23},
};

constexpr int k_torus2d[32][3] = {
    {0,1,5}, {0,1,12}, {0,3,4}, {0,3,15}, {0,4,5}, {0,12,15},
    {1,2,6}, {1,2,13}, {1,5,6}, {1,12,13}, {2,3,7}, {2,3,14},
    {2,6,7}, {2,13,14}, {3,4,7}, {3,14,15}, {4,5,9}, {4,7,8},
    {4,8,9}, {5,6,10}, {5,9,10}, {6,7,11}, {6,10,11}, {7,8,11},
    {8,9,13}, {8,11,12}, {8,12,13}, {9,10,14}, {9,13,14}, {10,11,15},
    {10,14,15}, {11,12,15},
};

constexpr int k_klein[48][3] = {
    {0,1,7}, {0,1,23}, {0,5,6}, {0,5,18}, {0,6,7}, {0,18,23},
    {1,2,8}, {1,2,22}, {1,7,8}, {1,22,23}, {2,3,9}, {2,3,21},
    {2,8,9}, {2,21,22}, {3,4,10}, {3,4,20}, {3,9,10}, {3,20,21},
    {4,5,11}, {4,5,19}, {4,10,11}, {4,19,20}, {5,6,11}, {5,18,19},
    {6,7,13}, {6,11,12}, {6,12,13}, {7,8,14}, {7,13,14}, {8,9,15},
    {8,14,15}, {9,10,16}, {9,15,16}, {10,11,17}, {10,16,17}, {11,12,17},
    {12,13,19}, {12,17,18}, {12,18,19}, {13,14,20}, {13,19,20}, {14,15,21},
    {14,20,21}, {15,16,22}, {15,21,22}, {16,17,23}, {16,22,23}, {17,18,23},
};

template <int N, int W>
std::vector<std::vector<int>> to_vec(const int (&a)[N][W]) {
  std::vector<std::vector<int>> out;
  out.reserve(N);
  for (const auto& row : a) out.emplace_back(row, row + W);
  return out;
}

}  // namespace

const std::vector<std::vector<int>>& rp3_facets() {
  static const auto v = to_vec(k_rp3);
  return v;
}

const std::vector<std::vector<int>>& poincare_facets() {
  static const auto v = to_vec(k_poincare);
  return v;
}

const std::vector<std::vector<int>>& torus2d_facets() {
  static const auto v = to_vec(k_torus2d);
  return v;
}

const std::vector<std::vector<int>>& klein_facets() {
  static const auto v = to_vec(k_klein);
  return v;
}

}  // namespace sard::detail