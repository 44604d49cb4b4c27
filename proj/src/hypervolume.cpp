#include "moea/hypervolume.hpp"

#include <algorithm>
#include <stdexcept>

namespace moea {
namespace {

void check_dominates_reference(std::span<const ObjectiveVector> points, ReferencePoint r) {
    for (const auto& p : points)
        if (p.f1 <= r.r1 || p.f2 <= r.r2)
            throw std::invalid_argument("hypervolume: point does not strictly dominate the reference");
}

}  // namespace

// Disjoint-strip sum: keep the maximal distinct points, sorted by f1
// descending (f2 then strictly ascending), and add for each the strip between
// its f2 and the previous point's f2 across [r1, f1].
std::int64_t hypervolume_2d(std::span<const ObjectiveVector> points, ReferencePoint r) {
    check_dominates_reference(points, r);
    std::vector<ObjectiveVector> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
        if (a.f1 != b.f1) return a.f1 > b.f1;
        return a.f2 > b.f2;
    });
    std::int64_t hv = 0;
    std::int64_t prev_f2 = r.r2;
    for (const auto& p : sorted)
        if (p.f2 > prev_f2) {
            hv += (p.f1 - r.r1) * (p.f2 - prev_f2);
            prev_f2 = p.f2;
        }
    return hv;
}

std::int64_t contribution(const ObjectiveVector& x, std::span<const ObjectiveVector> front,
                          ReferencePoint r) {
    const auto it = std::find(front.begin(), front.end(), x);
    if (it == front.end())
        throw std::invalid_argument("contribution: x is not a member of the front");
    std::vector<ObjectiveVector> rest;
    rest.reserve(front.size() - 1);
    const auto pos = static_cast<std::size_t>(it - front.begin());
    for (std::size_t i = 0; i < front.size(); ++i)
        if (i != pos) rest.push_back(front[i]);
    return hypervolume_2d(front, r) - hypervolume_2d(std::span<const ObjectiveVector>(rest), r);
}

// For a mutually non-dominated front the distinct vectors form a strict
// staircase: sorted by f1 ascending, f2 is strictly descending. The exclusive
// box of a unique vector p_i is (f1_i - f1_{i-1}) x (f2_i - f2_{i+1}) with the
// reference point closing both ends; duplicated vectors contribute 0.
std::vector<std::int64_t> front_contributions(std::span<const ObjectiveVector> front,
                                              ReferencePoint r) {
    check_dominates_reference(front, r);
    const std::size_t k = front.size();
    std::vector<std::int64_t> out(k, 0);
    if (k == 0) return out;

    std::vector<std::uint32_t> idx(k);
    for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (front[a].f1 != front[b].f1) return front[a].f1 < front[b].f1;
        return front[a].f2 < front[b].f2;
    });

    std::size_t i = 0;
    while (i < k) {
        std::size_t j = i + 1;
        while (j < k && front[idx[j]] == front[idx[i]]) ++j;
        if (j == i + 1) {
            const auto& p = front[idx[i]];
            const std::int64_t left = i == 0 ? r.r1 : front[idx[i - 1]].f1;
            const std::int64_t below = j == k ? r.r2 : front[idx[j]].f2;
            out[idx[i]] = (p.f1 - left) * (p.f2 - below);
        }
        i = j;
    }
    return out;
}

Population smsemoa_remove(Population pool, const FrontPartition& partition, ReferencePoint r,
                          RandomSource& rng) {
    if (partition.fronts.empty() || pool.empty())
        throw std::invalid_argument("smsemoa_remove: empty pool or partition");
    return smsemoa_remove_last_front(std::move(pool), partition.fronts.back(), r, rng);
}

Population smsemoa_remove_last_front(Population pool, std::span<const std::uint32_t> last,
                                     ReferencePoint r, RandomSource& rng) {
    if (pool.empty() || last.empty())
        throw std::invalid_argument("smsemoa_remove: empty pool or last front");

    std::int64_t max_f1 = pool[0].objectives.f1, max_f2 = pool[0].objectives.f2;
    for (const auto& ind : pool) {
        max_f1 = std::max(max_f1, ind.objectives.f1);
        max_f2 = std::max(max_f2, ind.objectives.f2);
    }

    // Extreme objective vectors of the whole pool are never removed.
    thread_local std::vector<std::uint32_t> candidates;
    candidates.clear();
    for (std::uint32_t i : last) {
        const auto& o = pool[i].objectives;
        if (o.f1 != max_f1 && o.f2 != max_f2) candidates.push_back(i);
    }
    const bool all_protected = candidates.empty();
    if (all_protected) candidates.assign(last.begin(), last.end());

    thread_local std::vector<ObjectiveVector> last_objs;
    last_objs.clear();
    for (std::uint32_t i : last) last_objs.push_back(pool[i].objectives);
    const auto deltas = front_contributions(std::span<const ObjectiveVector>(last_objs), r);

    thread_local std::vector<std::int64_t> delta_of;  // keyed by pool index
    delta_of.assign(pool.size(), 0);
    for (std::size_t l = 0; l < last.size(); ++l) delta_of[last[l]] = deltas[l];

    std::int64_t best = delta_of[candidates[0]];
    for (std::uint32_t i : candidates) best = std::min(best, delta_of[i]);
    thread_local std::vector<std::uint32_t> ties;
    ties.clear();
    for (std::uint32_t i : candidates)
        if (delta_of[i] == best) ties.push_back(i);

    const std::uint32_t victim =
        ties.size() == 1 ? ties[0] : ties[rng.below(ties.size())];
    pool.erase(pool.begin() + victim);
    return pool;
}

}  // namespace moea
