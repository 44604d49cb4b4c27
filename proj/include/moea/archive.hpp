#pragma once

#include <vector>

#include "moea/core.hpp"

namespace moea {

enum class InsertResult { inserted, rejected_dominated };

// Unbounded archive of mutually non-dominated individuals, at most one per
// objective vector. Members are kept sorted by f1 ascending; mutual
// non-domination then forces f1 values to be distinct and f2 to be strictly
// descending, so dominance queries are two binary searches.
//
// Update rule per offered solution x:
//   - if some member strictly dominates x, reject (archive unchanged);
//   - otherwise remove every member weakly dominated by x (an equal vector
//     counts, so the newcomer replaces it) and insert x.
class Archive {
  public:
    InsertResult try_insert(Individual x);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    // Sorted by f1 ascending.
    const std::vector<Individual>& members() const { return members_; }

    // The archived objective vectors, ascending by (f1, f2).
    std::vector<ObjectiveVector> objective_set() const {
        std::vector<ObjectiveVector> out;
        out.reserve(members_.size());
        for (const auto& m : members_) out.push_back(m.objectives);
        return out;
    }

  private:
    std::vector<Individual> members_;
};

}  // namespace moea
