#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace moea {

// Fixed-length bit vector. Elements are always 0 or 1; treat values as
// immutable after construction (operators return copies elsewhere).
struct Bitstring {
    std::vector<std::uint8_t> bits;

    Bitstring() = default;
    explicit Bitstring(std::size_t n) : bits(n, 0) {}

    static Bitstring from_string(std::string_view s) {
        Bitstring b(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                b.bits[i] = 1;
            else if (s[i] != '0')
                throw std::invalid_argument("Bitstring::from_string: character is not 0 or 1");
        }
        return b;
    }

    std::size_t size() const { return bits.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits[i]; }
    std::uint8_t& operator[](std::size_t i) { return bits[i]; }
    void flip(std::size_t i) { bits[i] ^= 1u; }

    std::string to_string() const {
        std::string s(bits.size(), '0');
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) s[i] = '1';
        return s;
    }

    friend bool operator==(const Bitstring&, const Bitstring&) = default;
};

// A point in bi-objective space. Both objectives are maximized. The defaulted
// <=> is plain lexicographic (f1, f2) order for containers and canonical
// sorting; it is unrelated to Pareto dominance.
struct ObjectiveVector {
    std::int64_t f1 = 0;
    std::int64_t f2 = 0;

    friend auto operator<=>(const ObjectiveVector&, const ObjectiveVector&) = default;
};

// a weakly dominates b: no worse in every component.
inline bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    return a.f1 >= b.f1 && a.f2 >= b.f2;
}

// a dominates b: weakly dominates and differs somewhere.
inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    return weakly_dominates(a, b) && a != b;
}

inline bool incomparable(const ObjectiveVector& a, const ObjectiveVector& b) {
    return !weakly_dominates(a, b) && !weakly_dominates(b, a);
}

// Evaluated search point. Evaluation happens exactly once, at creation.
struct Individual {
    Bitstring genotype;
    ObjectiveVector objectives;
};

// Multiset of evaluated individuals; capacity is the algorithm's mu.
using Population = std::vector<Individual>;

// The set of Pareto-optimal objective vectors of a problem instance,
// kept sorted ascending by (f1, f2) with no duplicates.
struct ParetoFrontSpec {
    std::vector<ObjectiveVector> points;

    bool contains(const ObjectiveVector& v) const {
        auto it = std::lower_bound(points.begin(), points.end(), v);
        return it != points.end() && *it == v;
    }
};

// True iff every front point appears among `points` (extra points are fine).
bool covers_front(std::span<const ObjectiveVector> points, const ParetoFrontSpec& front);

}  // namespace moea
