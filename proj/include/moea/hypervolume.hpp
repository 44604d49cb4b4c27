#pragma once

#include <cstdint>
#include <span>

#include "moea/core.hpp"
#include "moea/random.hpp"
#include "moea/ranking.hpp"

namespace moea {

// Lower-left corner of the hypervolume box. Must be strictly dominated by
// every point it is used with; the benchmarks have min f_i = 0, so any
// negative coordinates work. Default (-1,-1).
struct ReferencePoint {
    std::int64_t r1 = -1;
    std::int64_t r2 = -1;
};

// Exact area of the union of boxes [r, p] over all points p. Points may
// contain duplicates and dominated entries; they contribute nothing. Throws
// std::invalid_argument if some point does not strictly dominate r.
std::int64_t hypervolume_2d(std::span<const ObjectiveVector> points, ReferencePoint r);

// Exclusive hypervolume contribution of one member: HV(front) - HV(front \ {x}).
// x must occur in front (else std::invalid_argument); if its objective vector
// occurs twice, the contribution is 0.
std::int64_t contribution(const ObjectiveVector& x, std::span<const ObjectiveVector> front,
                          ReferencePoint r);

// Contributions of every member of a mutually non-dominated front (may contain
// duplicate vectors), aligned with the front's member order.
std::vector<std::int64_t> front_contributions(std::span<const ObjectiveVector> front,
                                              ReferencePoint r);

// SMS-EMOA survival: drop one member of the last front of `partition`,
// choosing the smallest hypervolume contribution. Members whose objective
// vector attains the pool-wide maximum of f1 or of f2 are protected; if that
// protects the whole last front, fall back to all of it. Ties are broken
// uniformly at random. Returns the pool minus the removed member, order
// preserved.
Population smsemoa_remove(Population pool, const FrontPartition& partition, ReferencePoint r,
                          RandomSource& rng);

// Same removal rule, taking the last front directly as pool indices; the
// per-step hot path uses this to skip materializing a full partition.
Population smsemoa_remove_last_front(Population pool, std::span<const std::uint32_t> last_front,
                                     ReferencePoint r, RandomSource& rng);

}  // namespace moea
