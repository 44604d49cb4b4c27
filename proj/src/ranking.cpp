#include "moea/ranking.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace moea {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<ObjectiveVector> objectives_of(std::span<const Individual> pool) {
    std::vector<ObjectiveVector> objs(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) objs[i] = pool[i].objectives;
    return objs;
}

}  // namespace

// Sweep formulation of bi-objective non-dominated sorting. Process points in
// (f1 desc, f2 desc) order, grouping identical vectors (equal vectors never
// dominate each other, so they share a rank). Every possible dominator of a
// point precedes it in this order. Maintain h[k] = max f2 over points already
// assigned to front k+1; h is non-increasing in k, because the max-f2 member
// of front k+1 is dominated by some member of front k with f2 at least as
// large. A group with vector q therefore belongs to front
//   1 + (number of fronts k with h[k] >= q.f2),
// since a processed point with f2 >= q.f2 from a different vector group always
// dominates q. The count is found by binary search, giving O(N log N) overall.
std::uint32_t front_ranks(std::span<const ObjectiveVector> objs,
                          std::vector<std::uint32_t>& ranks) {
    const std::size_t n = objs.size();
    ranks.assign(n, 0);
    if (n == 0) return 0;

    // Scratch buffers are reused across calls; this function sits on the
    // per-step hot path of the steady-state algorithm.
    thread_local std::vector<std::uint32_t> order;
    thread_local std::vector<std::uint64_t> keys;
    thread_local std::vector<std::int64_t> h;
    h.clear();

    // Packed-key fast path: for objective values in [0, 2^20) and pools below
    // 2^20 points, one u64 sort key gives (f1 desc, f2 desc, index asc).
    std::int64_t max_val = 0;
    for (const auto& o : objs) max_val = std::max({max_val, o.f1, o.f2});
    std::int64_t min_val = 0;
    for (const auto& o : objs) min_val = std::min({min_val, o.f1, o.f2});
    constexpr std::int64_t kPackLimit = 1 << 20;
    if (min_val >= 0 && max_val < kPackLimit && n < (1u << 20)) {
        keys.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            keys[i] = (static_cast<std::uint64_t>(kPackLimit - 1 - objs[i].f1) << 40) |
                      (static_cast<std::uint64_t>(kPackLimit - 1 - objs[i].f2) << 20) |
                      static_cast<std::uint64_t>(i);
        std::sort(keys.begin(), keys.end());
        order.resize(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(keys[i] & 0xFFFFFu);
    } else {
        order.resize(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (objs[a].f1 != objs[b].f1) return objs[a].f1 > objs[b].f1;
            if (objs[a].f2 != objs[b].f2) return objs[a].f2 > objs[b].f2;
            return a < b;
        });
    }

    std::size_t i = 0;
    while (i < n) {
        const ObjectiveVector q = objs[order[i]];
        std::size_t j = i + 1;
        while (j < n && objs[order[j]] == q) ++j;
        const auto it = std::partition_point(h.begin(), h.end(),
                                             [&](std::int64_t v) { return v >= q.f2; });
        const auto k = static_cast<std::size_t>(it - h.begin());
        if (k == h.size())
            h.push_back(q.f2);
        else
            h[k] = std::max(h[k], q.f2);
        for (; i < j; ++i) ranks[order[i]] = static_cast<std::uint32_t>(k) + 1;
    }
    return static_cast<std::uint32_t>(h.size());
}

FrontPartition non_dominated_sort(std::span<const ObjectiveVector> objs) {
    std::vector<std::uint32_t> ranks;
    const std::uint32_t v = front_ranks(objs, ranks);
    FrontPartition part;
    part.fronts.resize(v);
    for (std::uint32_t i = 0; i < ranks.size(); ++i) part.fronts[ranks[i] - 1].push_back(i);
    return part;
}

FrontPartition non_dominated_sort(std::span<const Individual> pool) {
    return non_dominated_sort(std::span<const ObjectiveVector>(objectives_of(pool)));
}

// Normalized crowding distance. Per objective, the front is sorted ascending
// (stable, so ties keep input order); positional boundary members get
// infinity, interior member l adds (f_j(x^{l+1}) - f_j(x^{l-1})) / (max - min).
// A zero denominator contributes 0.
CrowdingAssignment crowding_distances(std::span<const ObjectiveVector> front) {
    const std::size_t k = front.size();
    CrowdingAssignment out;
    out.values.assign(k, 0.0);
    if (k == 0) return out;

    std::vector<std::uint32_t> idx(k);
    for (auto j : {0, 1}) {
        auto value = [&](std::uint32_t i) { return j == 0 ? front[i].f1 : front[i].f2; };
        for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return value(a) < value(b); });
        out.values[idx.front()] = kInf;
        out.values[idx.back()] = kInf;
        const auto denom = static_cast<double>(value(idx.back()) - value(idx.front()));
        if (denom == 0.0) continue;
        for (std::size_t l = 1; l + 1 < k; ++l)
            out.values[idx[l]] += static_cast<double>(value(idx[l + 1]) - value(idx[l - 1])) / denom;
    }
    return out;
}

CrowdingAssignment crowding_distances(std::span<const Individual> front) {
    return crowding_distances(std::span<const ObjectiveVector>(objectives_of(front)));
}

RankedView ranked_view(std::span<const Individual> pop) {
    const auto objs = objectives_of(pop);
    RankedView view;
    const std::uint32_t v = front_ranks(objs, view.rank);
    view.crowding.assign(pop.size(), 0.0);

    std::vector<std::vector<std::uint32_t>> fronts(v);
    for (std::uint32_t i = 0; i < pop.size(); ++i) fronts[view.rank[i] - 1].push_back(i);
    std::vector<ObjectiveVector> members;
    for (const auto& front : fronts) {
        members.clear();
        for (std::uint32_t i : front) members.push_back(objs[i]);
        const auto crowd = crowding_distances(std::span<const ObjectiveVector>(members));
        for (std::size_t l = 0; l < front.size(); ++l) view.crowding[front[l]] = crowd.values[l];
    }
    return view;
}

Population nsga2_survival(Population pool, std::size_t mu) {
    if (pool.size() < mu) throw std::invalid_argument("nsga2_survival: pool smaller than mu");
    const auto part = non_dominated_sort(std::span<const Individual>(pool));

    Population next;
    next.reserve(mu);
    for (const auto& front : part.fronts) {
        if (next.size() == mu) break;
        if (next.size() + front.size() <= mu) {
            for (std::uint32_t i : front) next.push_back(std::move(pool[i]));
            continue;
        }
        // Critical front: keep the most spread-out members. Stable ascending
        // sort by crowding, then admit the last mu - |next| entries.
        std::vector<ObjectiveVector> members(front.size());
        for (std::size_t l = 0; l < front.size(); ++l) members[l] = pool[front[l]].objectives;
        const auto crowd = crowding_distances(std::span<const ObjectiveVector>(members));
        std::vector<std::uint32_t> by_crowding(front.size());
        for (std::uint32_t l = 0; l < by_crowding.size(); ++l) by_crowding[l] = l;
        std::stable_sort(by_crowding.begin(), by_crowding.end(), [&](std::uint32_t a, std::uint32_t b) {
            return crowd.values[a] < crowd.values[b];
        });
        for (std::size_t l = by_crowding.size() - (mu - next.size()); l < by_crowding.size(); ++l)
            next.push_back(std::move(pool[front[by_crowding[l]]]));
        break;
    }
    return next;
}

}  // namespace moea
