// Internal convex hull kernels on chart coordinates (rank 0..3).
#ifndef LGTORIC_SRC_HULL_HPP
#define LGTORIC_SRC_HULL_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "lgtoric/numeric.hpp"

namespace lgtoric::detail {

struct HullFacet
{
    std::array<Integer, 3> normal; // inward, primitive in the first `rank` entries
    Integer offset;
    std::vector<std::size_t> vertices; // indices into the input; cyclic for rank 3
};

struct HullResult
{
    std::vector<std::size_t> vertices; // input indices of the extreme points
    std::vector<HullFacet> facets;
    std::vector<std::size_t> cycle;    // rank 2 only: counter-clockwise vertex order
};

/// Hull of distinct points spanning Z^rank (points use the first `rank` coords).
HullResult hull_in_chart(const std::vector<std::array<Integer, 3>>& points, std::size_t rank);

} // namespace lgtoric::detail

#endif
