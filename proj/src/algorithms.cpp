#include "moea/algorithms.hpp"

#include <stdexcept>

#include "moea/ranking.hpp"

namespace moea {
namespace {

Individual make_individual(const Problem& problem, Bitstring genotype, EvaluationCounter& counter,
                           RunTrace* trace) {
    const ObjectiveVector obj = problem.evaluate(genotype, counter);
    if (trace) trace->evaluations.push_back(obj);
    return {std::move(genotype), obj};
}

// Equivalent to covers_front against the canonical front {(a, n-a)}: mark
// which front vectors occur, then require all n+1 of them.
bool covers_canonical_front(std::span<const Individual> members, int n) {
    thread_local std::vector<std::uint8_t> seen;
    seen.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& m : members) {
        const auto& o = m.objectives;
        if (o.f1 >= 0 && o.f1 <= n && o.f1 + o.f2 == n) seen[static_cast<std::size_t>(o.f1)] = 1;
    }
    for (std::uint8_t s : seen)
        if (!s) return false;
    return true;
}

}  // namespace

void validate(const AlgorithmConfig& cfg) {
    if (cfg.kind == AlgorithmKind::nsga2 && cfg.mu < 4)
        throw std::invalid_argument("config: NSGA-II requires mu >= 4");
    if (cfg.kind == AlgorithmKind::smsemoa && cfg.mu < 2)
        throw std::invalid_argument("config: SMS-EMOA requires mu >= 2");
    if (!(cfg.params.pc >= 0.0 && cfg.params.pc <= 1.0))
        throw std::invalid_argument("config: pc must lie in [0,1]");
    if (!(cfg.params.pm >= 0.0 && cfg.params.pm <= 1.0))
        throw std::invalid_argument("config: pm must lie in [0,1]");
    if (cfg.ref.r1 >= 0 || cfg.ref.r2 >= 0)
        throw std::invalid_argument("config: reference point must be strictly negative");
}

Population init_population(std::size_t mu, const Problem& problem, RandomSource& rng,
                           EvaluationCounter& counter, RunTrace* trace) {
    Population pop;
    pop.reserve(mu);
    for (std::size_t i = 0; i < mu; ++i) {
        Bitstring g(static_cast<std::size_t>(problem.n()));
        for (std::size_t b = 0; b < g.size(); ++b) g[b] = rng.coin() ? 1 : 0;
        pop.push_back(make_individual(problem, std::move(g), counter, trace));
    }
    return pop;
}

Population nsga2_generation(Population state, const AlgorithmConfig& cfg, const Problem& problem,
                            RandomSource& rng, EvaluationCounter& counter, Archive* archive,
                            RunTrace* trace) {
    if (state.size() != cfg.mu)
        throw std::invalid_argument("nsga2_generation: state size does not match mu");
    const RankedView view = ranked_view(state);

    Population offspring;
    offspring.reserve(cfg.mu);
    while (offspring.size() < cfg.mu) {
        const auto& x = state[binary_tournament(state, view, rng)].genotype;
        const auto& y = state[binary_tournament(state, view, rng)].genotype;
        Bitstring c1, c2;
        if (rng.uniform01() < cfg.params.pc) {
            std::tie(c1, c2) = one_point_crossover_pair(x, y, rng);
        } else {
            c1 = x;
            c2 = y;
        }
        offspring.push_back(
            make_individual(problem, bitwise_mutation(c1, cfg.params.pm, rng), counter, trace));
        // With odd mu the final pairing contributes only its first child, so
        // the batch is exactly mu offspring / mu evaluations either way.
        if (offspring.size() < cfg.mu)
            offspring.push_back(
                make_individual(problem, bitwise_mutation(c2, cfg.params.pm, rng), counter, trace));
    }

    if (archive)
        for (const auto& child : offspring) archive->try_insert(child);

    Population pool = std::move(state);
    pool.reserve(pool.size() + offspring.size());
    for (auto& child : offspring) pool.push_back(std::move(child));
    return nsga2_survival(std::move(pool), cfg.mu);
}

Population smsemoa_step(Population state, const AlgorithmConfig& cfg, const Problem& problem,
                        RandomSource& rng, EvaluationCounter& counter, Archive* archive,
                        RunTrace* trace) {
    if (state.size() != cfg.mu)
        throw std::invalid_argument("smsemoa_step: state size does not match mu");
    const auto& x = state[uniform_select(state, rng)].genotype;
    Bitstring child;
    if (rng.uniform01() < cfg.params.pc) {
        const auto& y = state[uniform_select(state, rng)].genotype;
        child = one_point_crossover_single(x, y, rng);
    } else {
        child = x;
    }
    Individual offspring =
        make_individual(problem, bitwise_mutation(child, cfg.params.pm, rng), counter, trace);
    if (archive) archive->try_insert(offspring);

    Population pool = std::move(state);
    pool.push_back(std::move(offspring));

    thread_local std::vector<ObjectiveVector> objs;
    thread_local std::vector<std::uint32_t> ranks, last;
    objs.clear();
    for (const auto& ind : pool) objs.push_back(ind.objectives);
    const std::uint32_t v = front_ranks(objs, ranks);
    last.clear();
    for (std::uint32_t i = 0; i < ranks.size(); ++i)
        if (ranks[i] == v) last.push_back(i);
    return smsemoa_remove_last_front(std::move(pool), last, cfg.ref, rng);
}

RunOutcome run(const AlgorithmConfig& cfg, const Problem& problem, std::uint64_t seed,
               std::uint64_t max_evals, RunTrace* trace) {
    validate(cfg);
    RandomSource rng(seed);
    EvaluationCounter counter;
    std::optional<Archive> archive;
    if (cfg.use_archive) archive.emplace();

    Population pop = init_population(cfg.mu, problem, rng, counter, trace);
    if (archive)
        for (const auto& ind : pop) archive->try_insert(ind);

    const int n = problem.n();
    auto covered = [&]() {
        return archive ? covers_canonical_front(archive->members(), n)
                       : covers_canonical_front(pop, n);
    };

    RunOutcome out;
    bool success = covered();
    while (!success && counter.count < max_evals) {
        pop = cfg.kind == AlgorithmKind::nsga2
                  ? nsga2_generation(std::move(pop), cfg, problem, rng, counter,
                                     archive ? &*archive : nullptr, trace)
                  : smsemoa_step(std::move(pop), cfg, problem, rng, counter,
                                 archive ? &*archive : nullptr, trace);
        ++out.generations;
        success = covered();
    }

    if (success)
        out.evaluations_at_success = counter.count;
    else
        out.hit_cap = true;
    out.final_population = std::move(pop);
    out.final_archive = std::move(archive);
    return out;
}

}  // namespace moea
