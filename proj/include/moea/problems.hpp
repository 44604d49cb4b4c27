#pragma once

#include <cstdint>
#include <string_view>

#include "moea/core.hpp"

namespace moea {

enum class ProblemKind { one_min_max, leading_ones_trailing_zeroes };

constexpr std::string_view problem_name(ProblemKind kind) {
    return kind == ProblemKind::one_min_max ? "omm" : "lotz";
}

// One counter per run; incremented by Problem::evaluate and never reset.
struct EvaluationCounter {
    std::uint64_t count = 0;
};

// A pseudo-Boolean benchmark instance of dimension n. Both benchmarks share
// the Pareto front {(a, n-a) : a in 0..n}.
//
//   omm  (OneMinMax):              f(x) = (#zeros, #ones); every x is optimal.
//   lotz (LeadingOnesTrailingZeroes): f(x) = (LO(x), TZ(x)); optimal iff
//                                  x = 1^j 0^(n-j).
class Problem {
  public:
    Problem(ProblemKind kind, int n);

    // Parses "omm" / "lotz", case-insensitively. Throws std::invalid_argument
    // on unknown names or n < 1.
    static Problem parse(std::string_view name, int n);

    ProblemKind kind() const { return kind_; }
    int n() const { return n_; }
    std::string_view name() const;

    // Throws std::invalid_argument if x.size() != n. Increments the counter.
    ObjectiveVector evaluate(const Bitstring& x, EvaluationCounter& counter) const;

    ParetoFrontSpec pareto_front() const;

    bool is_pareto_optimal(const Bitstring& x) const;

  private:
    ProblemKind kind_;
    int n_;
};

}  // namespace moea
