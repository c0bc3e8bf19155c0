#pragma once

// Rational Betti numbers from moment-map Morse theory: a generic covector
// xi makes <xi, .> a perfect Morse function whose critical points are the
// vertices, with index twice the number of edges descending against xi.
// All indices are even, so the odd Betti numbers vanish and the even ones
// are the per-index vertex counts. Labels never enter: real-coefficient
// homology does not see the finite structure groups.

#include <optional>
#include <set>
#include <vector>

#include "toric/polytope.hpp"
#include "toric/weighted_polytope.hpp"

namespace toric {

namespace detail {

/// xi is generic when it separates all vertex values; that also forces a
/// nonzero pairing with every edge direction, but both are checked.
inline bool is_generic(const WeightedPolytope& w, const IntVec& xi) {
    std::set<Rat> values;
    for (const RatVec& v : w.base.vertices)
        if (!values.insert(dot(v, xi)).second) return false;
    for (std::size_t v = 0; v < w.base.vertices.size(); ++v)
        for (const Edge& e : edges_at_vertex(w.base, static_cast<int>(v)))
            if (dot(xi, e.direction) == 0) return false;
    return true;
}

}  // namespace detail

/// Deterministic generic covector: moments (1, t, t^2, ...) with t starting
/// at the coordinate spread plus one, increased until generic. Termination
/// is guaranteed: each bad pairing is a nonzero polynomial in t.
inline IntVec generic_direction(const WeightedPolytope& w) {
    int n = w.dim();
    Rat spread = 0;
    for (int j = 0; j < n; ++j) {
        Rat lo = w.base.vertices[0][static_cast<std::size_t>(j)], hi = lo;
        for (const RatVec& v : w.base.vertices) {
            const Rat& x = v[static_cast<std::size_t>(j)];
            if (x < lo) lo = x;
            if (x > hi) hi = x;
        }
        if (hi - lo > spread) spread = hi - lo;
    }
    for (Int t = rat_floor(spread) + 1;; ++t) {
        IntVec xi(static_cast<std::size_t>(n));
        Int power = 1;
        for (int j = 0; j < n; ++j) {
            xi[static_cast<std::size_t>(j)] = power;
            power *= t;
        }
        if (detail::is_generic(w, xi)) return xi;
    }
}

/// Morse index of the vertex: 2 x (number of edges descending against xi).
inline int vertex_index(const WeightedPolytope& w, int vertex, const IntVec& xi) {
    int down = 0;
    for (const Edge& e : edges_at_vertex(w.base, vertex)) {
        Int pairing = dot(xi, e.direction);
        if (pairing == 0) throw input_error("direction not generic");
        if (pairing < 0) ++down;
    }
    return 2 * down;
}

struct BettiProfile {
    int n = 0;                // half-dimension: the polytope dimension
    std::vector<long> b;      // b_0 .. b_{2n}; odd entries are zero
    IntVec xi_used;

    bool operator==(const BettiProfile& o) const = default;
};

inline BettiProfile betti_numbers(const WeightedPolytope& w,
                                  const std::optional<IntVec>& xi = std::nullopt) {
    IntVec direction;
    if (xi) {
        if (static_cast<int>(xi->size()) != w.dim())
            throw input_error("direction has wrong dimension");
        if (!detail::is_generic(w, *xi)) throw input_error("direction not generic");
        direction = *xi;
    } else {
        direction = generic_direction(w);
    }

    BettiProfile profile;
    profile.n = w.dim();
    profile.b.assign(static_cast<std::size_t>(2 * w.dim() + 1), 0);
    profile.xi_used = direction;
    for (std::size_t v = 0; v < w.base.vertices.size(); ++v)
        ++profile.b[static_cast<std::size_t>(vertex_index(w, static_cast<int>(v), direction))];
    return profile;
}

}  // namespace toric
