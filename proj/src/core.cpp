#include "moea/core.hpp"

#include <algorithm>

namespace moea {

bool covers_front(std::span<const ObjectiveVector> points, const ParetoFrontSpec& front) {
    std::vector<ObjectiveVector> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : front.points)
        if (!std::binary_search(sorted.begin(), sorted.end(), p)) return false;
    return true;
}

}  // namespace moea
