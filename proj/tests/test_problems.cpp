#include <doctest.h>

#include "moea/problems.hpp"
#include "moea/random.hpp"
#include "oracles.hpp"

using namespace moea;

TEST_CASE("omm evaluation") {
    EvaluationCounter c;
    const Problem p(ProblemKind::one_min_max, 5);
    CHECK(p.evaluate(Bitstring::from_string("10110"), c) == ObjectiveVector{2, 3});
    CHECK(p.evaluate(Bitstring::from_string("00000"), c) == ObjectiveVector{5, 0});
    CHECK(p.evaluate(Bitstring::from_string("11111"), c) == ObjectiveVector{0, 5});
    CHECK(c.count == 3);
}

TEST_CASE("lotz evaluation") {
    EvaluationCounter c;
    const Problem p(ProblemKind::leading_ones_trailing_zeroes, 5);
    CHECK(p.evaluate(Bitstring::from_string("11010"), c) == ObjectiveVector{2, 1});
    CHECK(p.evaluate(Bitstring::from_string("10100"), c) == ObjectiveVector{1, 2});
    CHECK(p.evaluate(Bitstring::from_string("11100"), c) == ObjectiveVector{3, 2});
    CHECK(p.evaluate(Bitstring::from_string("00000"), c) == ObjectiveVector{0, 5});
    CHECK(p.evaluate(Bitstring::from_string("11111"), c) == ObjectiveVector{5, 0});
    CHECK(p.evaluate(Bitstring::from_string("01010"), c) == ObjectiveVector{0, 1});
    CHECK(c.count == 6);
}

TEST_CASE("evaluation rejects length mismatch without counting") {
    EvaluationCounter c;
    const Problem p(ProblemKind::one_min_max, 4);
    CHECK_THROWS_AS(p.evaluate(Bitstring::from_string("101"), c), std::invalid_argument);
    CHECK(c.count == 0);
}

TEST_CASE("problem parsing") {
    CHECK(Problem::parse("omm", 3).kind() == ProblemKind::one_min_max);
    CHECK(Problem::parse("OMM", 3).kind() == ProblemKind::one_min_max);
    CHECK(Problem::parse("LoTz", 3).kind() == ProblemKind::leading_ones_trailing_zeroes);
    CHECK_THROWS_AS(Problem::parse("onemax", 3), std::invalid_argument);
    CHECK_THROWS_AS(Problem::parse("omm", 0), std::invalid_argument);
    CHECK(Problem::parse("lotz", 7).name() == "lotz");
}

TEST_CASE("pareto front shape") {
    const Problem p1(ProblemKind::one_min_max, 1);
    CHECK(p1.pareto_front().points == std::vector<ObjectiveVector>{{0, 1}, {1, 0}});
    const Problem p2(ProblemKind::leading_ones_trailing_zeroes, 2);
    CHECK(p2.pareto_front().points == std::vector<ObjectiveVector>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(Problem(ProblemKind::one_min_max, 50).pareto_front().points.size() == 51);
}

TEST_CASE("pareto optimality") {
    const Problem omm(ProblemKind::one_min_max, 5);
    const Problem lotz(ProblemKind::leading_ones_trailing_zeroes, 5);
    CHECK(omm.is_pareto_optimal(Bitstring::from_string("10110")));
    CHECK(lotz.is_pareto_optimal(Bitstring::from_string("11100")));
    CHECK(lotz.is_pareto_optimal(Bitstring::from_string("00000")));
    CHECK(lotz.is_pareto_optimal(Bitstring::from_string("11111")));
    CHECK(!lotz.is_pareto_optimal(Bitstring::from_string("10100")));
    CHECK(!lotz.is_pareto_optimal(Bitstring::from_string("01110")));
}

// Exhaustive cross-check against the definitions for small n: the declared
// front must equal the non-dominated image of {0,1}^n, and is_pareto_optimal
// must agree with non-domination over the full space.
TEST_CASE("front and optimality agree with brute force for n <= 10") {
    for (const auto kind : {ProblemKind::one_min_max, ProblemKind::leading_ones_trailing_zeroes}) {
        for (int n = 1; n <= 10; ++n) {
            const Problem p(kind, n);
            EvaluationCounter c;
            std::vector<ObjectiveVector> image;
            std::vector<std::pair<Bitstring, ObjectiveVector>> all;
            for (std::uint64_t code = 0; code < (1ull << n); ++code) {
                Bitstring x(static_cast<std::size_t>(n));
                for (int b = 0; b < n; ++b) x[static_cast<std::size_t>(b)] = (code >> b) & 1;
                const auto obj = p.evaluate(x, c);
                image.push_back(obj);
                all.emplace_back(std::move(x), obj);
            }
            const auto nd = oracle::non_dominated_filter(image);
            CHECK(nd == p.pareto_front().points);
            for (const auto& [x, obj] : all) {
                bool dominated = false;
                for (const auto& other : image)
                    if (dominates(other, obj)) {
                        dominated = true;
                        break;
                    }
                CHECK(p.is_pareto_optimal(x) == !dominated);
            }
        }
    }
}

TEST_CASE("objective identities on random strings") {
    RandomSource rng(7);
    EvaluationCounter c;
    const Problem omm(ProblemKind::one_min_max, 23);
    const Problem lotz(ProblemKind::leading_ones_trailing_zeroes, 23);
    for (int trial = 0; trial < 500; ++trial) {
        Bitstring x(23);
        for (std::size_t b = 0; b < x.size(); ++b) x[b] = rng.coin() ? 1 : 0;
        const auto fo = omm.evaluate(x, c);
        CHECK(fo.f1 + fo.f2 == 23);  // omm objectives always sum to n
        const auto fl = lotz.evaluate(x, c);
        CHECK(fl.f1 + fl.f2 <= 23);
        CHECK((fl.f1 + fl.f2 == 23) == lotz.is_pareto_optimal(x));
    }
}
