#pragma once

// Internal recognition entry points operating on prebuilt BitGraphs, for
// callers that assemble links themselves (level-set manifold scans).

#include <optional>

#include "bitgraph.hpp"
#include "sard/recognition.hpp"

namespace sard::detail {

std::optional<int> bitgraph_sphere_dim(const BitGraph& g,
                                       const RecognitionConfig& cfg);
std::optional<int> bitgraph_ball_dim(const BitGraph& g,
                                     const RecognitionConfig& cfg);

}  // namespace sard::detail
