#pragma once

// Independent brute-force oracles used by the unit and acceptance tests.
// These are deliberately naive restatements of the definitions; the library
// implementations must match them exactly.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "moea/core.hpp"
#include "moea/hypervolume.hpp"

namespace oracle {

// Non-dominated sorting by repeated peeling: extract the set of points not
// dominated by any remaining point, in stable input order; repeat.
inline std::vector<std::vector<std::uint32_t>> peel_fronts(
    std::span<const moea::ObjectiveVector> objs) {
    std::vector<std::vector<std::uint32_t>> fronts;
    std::vector<std::uint32_t> remaining(objs.size());
    for (std::uint32_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    while (!remaining.empty()) {
        std::vector<std::uint32_t> front, rest;
        for (std::uint32_t i : remaining) {
            bool dominated = false;
            for (std::uint32_t j : remaining)
                if (moea::dominates(objs[j], objs[i])) {
                    dominated = true;
                    break;
                }
            (dominated ? rest : front).push_back(i);
        }
        fronts.push_back(std::move(front));
        remaining = std::move(rest);
    }
    return fronts;
}

// Hypervolume by counting unit lattice cells. Valid for integer coordinates;
// cell [x,x+1) x [y,y+1) lies in the dominated region of some point (a,b)
// with respect to reference r iff x >= r1, y >= r2, x < ... i.e. a >= x+1 and
// b >= y+1. Intended for small coordinate ranges only.
inline std::int64_t lattice_hypervolume(std::span<const moea::ObjectiveVector> points,
                                        moea::ReferencePoint r) {
    std::int64_t max1 = r.r1, max2 = r.r2;
    for (const auto& p : points) {
        max1 = std::max(max1, p.f1);
        max2 = std::max(max2, p.f2);
    }
    std::int64_t cells = 0;
    for (std::int64_t x = r.r1; x < max1; ++x)
        for (std::int64_t y = r.r2; y < max2; ++y)
            for (const auto& p : points)
                if (p.f1 >= x + 1 && p.f2 >= y + 1) {
                    ++cells;
                    break;
                }
    return cells;
}

// The distinct objective vectors of `history` not strictly dominated by any
// other vector in `history`, sorted ascending (f1, f2).
inline std::vector<moea::ObjectiveVector> non_dominated_filter(
    std::span<const moea::ObjectiveVector> history) {
    std::vector<moea::ObjectiveVector> distinct(history.begin(), history.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<moea::ObjectiveVector> out;
    for (const auto& p : distinct) {
        bool dominated = false;
        for (const auto& q : distinct)
            if (moea::dominates(q, p)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(p);
    }
    return out;
}

}  // namespace oracle
