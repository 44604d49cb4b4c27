#include "moea/variation.hpp"

#include <stdexcept>

namespace moea {

std::size_t binary_tournament(const Population& pop, const RankedView& view, RandomSource& rng) {
    if (pop.empty() || view.rank.size() != pop.size())
        throw std::invalid_argument("binary_tournament: view does not match population");
    const std::size_t a = rng.below(pop.size());
    const std::size_t b = rng.below(pop.size());
    if (a == b) return a;  // no contest, no coin
    if (view.rank[a] != view.rank[b]) return view.rank[a] < view.rank[b] ? a : b;
    if (view.crowding[a] != view.crowding[b]) return view.crowding[a] > view.crowding[b] ? a : b;
    return rng.coin() ? a : b;
}

std::size_t uniform_select(const Population& pop, RandomSource& rng) {
    if (pop.empty()) throw std::invalid_argument("uniform_select: empty population");
    return rng.below(pop.size());
}

static void check_crossover_args(const Bitstring& x, const Bitstring& y, std::size_t point) {
    if (x.size() != y.size())
        throw std::invalid_argument("one_point_crossover: parent lengths differ");
    if (x.size() == 0) throw std::invalid_argument("one_point_crossover: empty parents");
    if (point < 1 || point > x.size())
        throw std::invalid_argument("one_point_crossover: point out of range");
}

std::pair<Bitstring, Bitstring> one_point_crossover_pair_at(const Bitstring& x, const Bitstring& y,
                                                            std::size_t point) {
    check_crossover_args(x, y, point);
    Bitstring c1 = y, c2 = x;
    for (std::size_t i = point; i < x.size(); ++i) {
        c1[i] = x[i];
        c2[i] = y[i];
    }
    return {std::move(c1), std::move(c2)};
}

std::pair<Bitstring, Bitstring> one_point_crossover_pair(const Bitstring& x, const Bitstring& y,
                                                         RandomSource& rng) {
    if (x.size() != y.size())
        throw std::invalid_argument("one_point_crossover: parent lengths differ");
    return one_point_crossover_pair_at(x, y, 1 + rng.below(x.size()));
}

Bitstring one_point_crossover_single_at(const Bitstring& x, const Bitstring& y, std::size_t point) {
    check_crossover_args(x, y, point);
    Bitstring c = x;
    for (std::size_t i = point; i < x.size(); ++i) c[i] = y[i];
    return c;
}

Bitstring one_point_crossover_single(const Bitstring& x, const Bitstring& y, RandomSource& rng) {
    if (x.size() != y.size())
        throw std::invalid_argument("one_point_crossover: parent lengths differ");
    return one_point_crossover_single_at(x, y, 1 + rng.below(x.size()));
}

Bitstring bitwise_mutation(const Bitstring& x, double pm, RandomSource& rng) {
    Bitstring out = x;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (rng.bernoulli(pm)) out.flip(i);
    return out;
}

}  // namespace moea
