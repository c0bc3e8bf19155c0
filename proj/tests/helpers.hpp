#pragma once

// Shared fixtures for the test suites: literal-friendly constructors,
// a deterministic RNG, and the small weighted polytopes used throughout.

#include <initializer_list>
#include <random>
#include <vector>

#include "toric/lattice.hpp"

namespace tt {

using toric::Int;
using toric::IntMat;
using toric::IntVec;
using toric::Rat;
using toric::RatVec;

inline IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

inline IntMat im(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    IntMat m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

// columns given as vectors
inline IntMat from_cols(const std::vector<IntVec>& cols) {
    IntMat m(cols.empty() ? 0 : cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    long pick(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(g() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace tt
