#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "moea/core.hpp"

namespace moea {

// Partition of a pool into fronts R_1..R_v. Each front holds indices into the
// source pool, in stable input order; R_1 is the non-dominated set, each R_i
// is the non-dominated set once R_1..R_{i-1} are removed.
struct FrontPartition {
    std::vector<std::vector<std::uint32_t>> fronts;
};

// Crowding distance per front member, aligned with the front's member order.
struct CrowdingAssignment {
    std::vector<double> values;
};

// Rank (1-based front index) and crowding distance per individual of one
// population; the view binary tournaments select against.
struct RankedView {
    std::vector<std::uint32_t> rank;
    std::vector<double> crowding;
};

// Writes the 1-based front index of every point into `ranks` and returns the
// number of fronts. O(N log N) sweep; equivalent to peeling off non-dominated
// sets (see non_dominated_sort).
std::uint32_t front_ranks(std::span<const ObjectiveVector> objs, std::vector<std::uint32_t>& ranks);

FrontPartition non_dominated_sort(std::span<const ObjectiveVector> objs);
FrontPartition non_dominated_sort(std::span<const Individual> pool);

CrowdingAssignment crowding_distances(std::span<const ObjectiveVector> front);
CrowdingAssignment crowding_distances(std::span<const Individual> front);

RankedView ranked_view(std::span<const Individual> pop);

// Environmental selection: admit whole fronts while they fit, then fill the
// remainder from the critical front by descending crowding distance (the last
// mu - |P| members of the ascending crowding sort). pool.size() must be >= mu.
Population nsga2_survival(Population pool, std::size_t mu);

}  // namespace moea
