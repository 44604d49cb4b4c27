#pragma once

#include <cstdint>
#include <optional>

#include "moea/archive.hpp"
#include "moea/core.hpp"
#include "moea/hypervolume.hpp"
#include "moea/problems.hpp"
#include "moea/random.hpp"
#include "moea/variation.hpp"

namespace moea {

enum class AlgorithmKind { nsga2, smsemoa };

constexpr std::string_view algorithm_name(AlgorithmKind kind) {
    return kind == AlgorithmKind::nsga2 ? "nsga2" : "smsemoa";
}

struct AlgorithmConfig {
    AlgorithmKind kind = AlgorithmKind::nsga2;
    std::size_t mu = 4;
    bool use_archive = false;
    VariationParams params;
    ReferencePoint ref;
};

// pc = 0.9 and pm = 1/n unless told otherwise.
inline VariationParams default_params(int n, double pc = 0.9) {
    return {pc, 1.0 / static_cast<double>(n)};
}

// Throws std::invalid_argument before any evaluation happens. NSGA-II needs
// mu >= 4, SMS-EMOA mu >= 2; rates must lie in [0,1]; the reference point must
// be strictly below the objective minimum of 0 so hypervolume terms stay
// positive on these benchmarks.
void validate(const AlgorithmConfig& cfg);

// Records every evaluated objective vector, in evaluation order.
struct RunTrace {
    std::vector<ObjectiveVector> evaluations;
};

struct RunOutcome {
    // Exactly one of the two is meaningful: the evaluation count when the
    // Pareto front was first covered, or hit_cap when the budget ran out.
    std::optional<std::uint64_t> evaluations_at_success;
    bool hit_cap = false;
    Population final_population;
    std::optional<Archive> final_archive;
    std::uint64_t generations = 0;  // generations (NSGA-II) or steps (SMS-EMOA)
};

// mu individuals drawn uniformly from {0,1}^n, evaluated (counter +mu).
Population init_population(std::size_t mu, const Problem& problem, RandomSource& rng,
                           EvaluationCounter& counter, RunTrace* trace = nullptr);

// One NSGA-II generation: binary tournaments on the current population's
// ranked view, pairwise one-point crossover with probability pc, bit-wise
// mutation, mu offspring evaluated (counter +mu), the offspring batch offered
// to the archive if present, then survival over parents plus offspring.
Population nsga2_generation(Population state, const AlgorithmConfig& cfg, const Problem& problem,
                            RandomSource& rng, EvaluationCounter& counter,
                            Archive* archive = nullptr, RunTrace* trace = nullptr);

// One SMS-EMOA step: uniform parent, single-child crossover with probability
// pc, mutation, one evaluation (counter +1), archive offer if present, then
// removal of the weakest last-front member (extremes protected).
Population smsemoa_step(Population state, const AlgorithmConfig& cfg, const Problem& problem,
                        RandomSource& rng, EvaluationCounter& counter, Archive* archive = nullptr,
                        RunTrace* trace = nullptr);

// Full optimization run: initialize, offer the initial population to the
// archive if one is used, then iterate generations/steps until the success set
// (archive objective vectors if use_archive, else population objective
// vectors) covers the Pareto front or the counter reaches max_evals. Coverage
// is checked after initialization and after every generation/step.
RunOutcome run(const AlgorithmConfig& cfg, const Problem& problem, std::uint64_t seed,
               std::uint64_t max_evals, RunTrace* trace = nullptr);

}  // namespace moea
