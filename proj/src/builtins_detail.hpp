#pragma once

#include <vector>

namespace sard::detail {

// embedded facet lists; regenerate only together with the golden catalog
const std::vector<std::vector<int>>& rp3_facets();
const std::vector<std::vector<int>>& poincare_facets();
const std::vector<std::vector<int>>& torus2d_facets();
const std::vector<std::vector<int>>& klein_facets();

}  // namespace sard::detail
