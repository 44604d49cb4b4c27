#include <doctest.h>

#include "moea/core.hpp"
#include "moea/random.hpp"

using namespace moea;

TEST_CASE("dominance predicates on hand examples") {
    const ObjectiveVector a{2, 3}, b{2, 2}, c{3, 2}, d{2, 3};

    CHECK(weakly_dominates(a, b));
    CHECK(dominates(a, b));
    CHECK(!dominates(b, a));

    CHECK(weakly_dominates(a, d));
    CHECK(weakly_dominates(d, a));
    CHECK(!dominates(a, d));  // equal vectors never strictly dominate

    CHECK(incomparable(a, c));
    CHECK(incomparable(c, a));
    CHECK(!incomparable(a, b));
    CHECK(!incomparable(a, d));  // mutual weak dominance is not incomparability
}

TEST_CASE("dominance is a strict partial order on random vectors") {
    RandomSource rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto draw = [&]() {
            return ObjectiveVector{static_cast<std::int64_t>(rng.below(6)),
                                   static_cast<std::int64_t>(rng.below(6))};
        };
        const auto a = draw(), b = draw(), c = draw();
        CHECK(!dominates(a, a));
        if (dominates(a, b)) CHECK(!dominates(b, a));
        if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
        // exactly one of: a==b, a dom b, b dom a, incomparable
        const int cases = (a == b ? 1 : 0) + (dominates(a, b) ? 1 : 0) + (dominates(b, a) ? 1 : 0) +
                          (incomparable(a, b) ? 1 : 0);
        CHECK(cases == 1);
    }
}

TEST_CASE("bitstring parsing and printing") {
    const auto b = Bitstring::from_string("10110");
    CHECK(b.size() == 5);
    CHECK(b[0] == 1);
    CHECK(b[1] == 0);
    CHECK(b.to_string() == "10110");
    CHECK_THROWS_AS(Bitstring::from_string("10x"), std::invalid_argument);

    auto c = b;
    c.flip(1);
    CHECK(c.to_string() == "11110");
    CHECK(b.to_string() == "10110");  // value semantics
}

TEST_CASE("covers_front") {
    ParetoFrontSpec front;
    front.points = {{0, 3}, {1, 2}, {2, 1}, {3, 0}};

    const std::vector<ObjectiveVector> exact = {{1, 2}, {3, 0}, {0, 3}, {2, 1}};
    CHECK(covers_front(exact, front));

    const std::vector<ObjectiveVector> missing = {{1, 2}, {3, 0}, {0, 3}};
    CHECK(!covers_front(missing, front));

    // extras and duplicates are fine
    std::vector<ObjectiveVector> extras = exact;
    extras.push_back({1, 1});
    extras.push_back({1, 2});
    CHECK(covers_front(extras, front));

    CHECK(covers_front(exact, ParetoFrontSpec{}));  // empty front is always covered
    CHECK(!covers_front({}, front));
}
