#include "moea/problems.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace moea {

Problem::Problem(ProblemKind kind, int n) : kind_(kind), n_(n) {
    if (n < 1) throw std::invalid_argument("Problem: n must be >= 1");
}

Problem Problem::parse(std::string_view name, int n) {
    std::string lower;
    lower.reserve(name.size());
    for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "omm") return Problem(ProblemKind::one_min_max, n);
    if (lower == "lotz") return Problem(ProblemKind::leading_ones_trailing_zeroes, n);
    throw std::invalid_argument("Problem::parse: unknown problem name '" + std::string(name) + "'");
}

std::string_view Problem::name() const {
    return kind_ == ProblemKind::one_min_max ? "omm" : "lotz";
}

ObjectiveVector Problem::evaluate(const Bitstring& x, EvaluationCounter& counter) const {
    if (x.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("Problem::evaluate: bitstring length does not match n");
    ++counter.count;
    const auto n = static_cast<std::size_t>(n_);
    if (kind_ == ProblemKind::one_min_max) {
        std::int64_t ones = 0;
        for (std::size_t i = 0; i < n; ++i) ones += x[i];
        return {static_cast<std::int64_t>(n_) - ones, ones};
    }
    std::int64_t lo = 0;
    while (lo < n_ && x[static_cast<std::size_t>(lo)] == 1) ++lo;
    std::int64_t tz = 0;
    while (tz < n_ && x[n - 1 - static_cast<std::size_t>(tz)] == 0) ++tz;
    return {lo, tz};
}

ParetoFrontSpec Problem::pareto_front() const {
    ParetoFrontSpec front;
    front.points.reserve(static_cast<std::size_t>(n_) + 1);
    for (std::int64_t a = 0; a <= n_; ++a) front.points.push_back({a, n_ - a});
    return front;
}

bool Problem::is_pareto_optimal(const Bitstring& x) const {
    if (x.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("Problem::is_pareto_optimal: bitstring length does not match n");
    if (kind_ == ProblemKind::one_min_max) return true;
    // Optimal LOTZ points are exactly the strings 1^j 0^(n-j).
    std::size_t j = 0;
    while (j < x.size() && x[j] == 1) ++j;
    for (std::size_t i = j; i < x.size(); ++i)
        if (x[i] != 0) return false;
    return true;
}

}  // namespace moea
