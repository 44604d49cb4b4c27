#include "moea/archive.hpp"

#include <algorithm>

namespace moea {

InsertResult Archive::try_insert(Individual x) {
    const ObjectiveVector v = x.objectives;

    // First member with f1 >= v.f1. Because f2 is strictly descending, it has
    // the largest f2 among members with f1 >= v.f1, so it decides rejection:
    // a strict dominator needs f1 >= v.f1 and f2 >= v.f2 (and != v).
    const auto ge = std::lower_bound(members_.begin(), members_.end(), v.f1,
                                     [](const Individual& m, std::int64_t f1) {
                                         return m.objectives.f1 < f1;
                                     });
    if (ge != members_.end()) {
        const ObjectiveVector o = ge->objectives;
        if (o.f1 == v.f1 ? o.f2 > v.f2 : o.f2 >= v.f2) return InsertResult::rejected_dominated;
    }

    // Members weakly dominated by x form a contiguous run: those with
    // f2 <= v.f2 (a suffix start) up to those with f1 <= v.f1 (a prefix end).
    const auto first = std::lower_bound(members_.begin(), members_.end(), v.f2,
                                        [](const Individual& m, std::int64_t f2) {
                                            return m.objectives.f2 > f2;
                                        });
    const auto last = std::upper_bound(first, members_.end(), v.f1,
                                       [](std::int64_t f1, const Individual& m) {
                                           return f1 < m.objectives.f1;
                                       });
    const auto pos = members_.erase(first, last);
    members_.insert(pos, std::move(x));
    return InsertResult::inserted;
}

}  // namespace moea
