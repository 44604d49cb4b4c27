#pragma once

#include <cstddef>
#include <utility>

#include "moea/core.hpp"
#include "moea/random.hpp"
#include "moea/ranking.hpp"

namespace moea {

// Crossover probability and per-bit mutation rate. pm is set to 1/n by the
// callers that know n; pc defaults to 0.9.
struct VariationParams {
    double pc = 0.9;
    double pm = 0.0;
};

// Binary tournament over population slots: two contestants drawn independently
// with replacement; lower rank wins, then larger crowding distance; a full tie
// between two distinct draws is settled by a fair coin. Returns the winning
// slot. `view` must have been computed on `pop`.
std::size_t binary_tournament(const Population& pop, const RankedView& view, RandomSource& rng);

std::size_t uniform_select(const Population& pop, RandomSource& rng);

// One-point crossover at a drawn point i, uniform on 1..n. The pair variant
// exchanges the first i bits: child1 = y[1..i] + x[i+1..n], child2 =
// x[1..i] + y[i+1..n]. The single variant returns x[1..i] + y[i+1..n].
// The *_at forms take the point explicitly (for tests); i = n yields copies.
std::pair<Bitstring, Bitstring> one_point_crossover_pair(const Bitstring& x, const Bitstring& y,
                                                         RandomSource& rng);
std::pair<Bitstring, Bitstring> one_point_crossover_pair_at(const Bitstring& x, const Bitstring& y,
                                                            std::size_t point);
Bitstring one_point_crossover_single(const Bitstring& x, const Bitstring& y, RandomSource& rng);
Bitstring one_point_crossover_single_at(const Bitstring& x, const Bitstring& y, std::size_t point);

// Standard bit-wise mutation: each bit flips independently with probability pm.
Bitstring bitwise_mutation(const Bitstring& x, double pm, RandomSource& rng);

}  // namespace moea
