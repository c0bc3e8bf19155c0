#pragma once

// Standard polytopes used across the suites, plus the brute-force
// H-representation reconstruction oracle (facet detection from a vertex
// set) that the convexity self-checks compare against.

#include <vector>

#include "helpers.hpp"
#include "toric/polytope.hpp"
#include "toric/weighted_polytope.hpp"

namespace tt {

using toric::HalfSpace;
using toric::Polytope;
using toric::WeightedPolytope;

inline HalfSpace hs(std::initializer_list<long> normal, Rat offset) {
    return toric::normalize_half_space(iv(normal), offset);
}

inline std::vector<HalfSpace> interval_facets(Rat a = 0, Rat b = 1) {
    return {hs({1}, a), hs({-1}, -b)};
}

inline std::vector<HalfSpace> triangle_facets() {
    return {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, -1)};
}

inline std::vector<HalfSpace> square_facets() {
    return {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, 0}, -1), hs({0, -1}, -1)};
}

inline std::vector<HalfSpace> cube_facets() {
    return {hs({1, 0, 0}, 0),  hs({0, 1, 0}, 0),  hs({0, 0, 1}, 0),
            hs({-1, 0, 0}, -1), hs({0, -1, 0}, -1), hs({0, 0, -1}, -1)};
}

inline std::vector<HalfSpace> simplex_facets(int n) {
    std::vector<HalfSpace> f;
    for (int i = 0; i < n; ++i) {
        IntVec e(static_cast<std::size_t>(n), Int(0));
        e[static_cast<std::size_t>(i)] = 1;
        f.push_back(HalfSpace{e, Rat(0)});
    }
    f.push_back(HalfSpace{IntVec(static_cast<std::size_t>(n), Int(-1)), Rat(-1)});
    return f;
}

inline std::vector<HalfSpace> octahedron_facets() {
    std::vector<HalfSpace> f;
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int sz : {1, -1}) f.push_back(hs({sx, sy, sz}, -1));
    return f;
}

// square base [0,1]^2 at z = 0, apex (1/2, 1/2, 1): not simple at the apex
inline std::vector<HalfSpace> pyramid_facets() {
    return {hs({0, 0, 1}, 0), hs({2, 0, -1}, 0), hs({-2, 0, -1}, -2), hs({0, 2, -1}, 0),
            hs({0, -2, -1}, -2)};
}

/// Cartesian product of two H-polytopes (block-diagonal normals).
inline std::vector<HalfSpace> product_facets(const std::vector<HalfSpace>& a, int na,
                                             const std::vector<HalfSpace>& b, int nb) {
    std::vector<HalfSpace> f;
    for (const auto& h : a) {
        IntVec y(static_cast<std::size_t>(na + nb), Int(0));
        for (int j = 0; j < na; ++j) y[static_cast<std::size_t>(j)] = h.normal[j];
        f.push_back(HalfSpace{y, h.offset});
    }
    for (const auto& h : b) {
        IntVec y(static_cast<std::size_t>(na + nb), Int(0));
        for (int j = 0; j < nb; ++j) y[static_cast<std::size_t>(na + j)] = h.normal[j];
        f.push_back(HalfSpace{y, h.offset});
    }
    return f;
}

inline WeightedPolytope weighted(const std::vector<HalfSpace>& facets, int n,
                                 std::vector<Int> labels = {}) {
    if (labels.empty()) labels.assign(facets.size(), Int(1));
    toric::PolytopeSpec spec;
    spec.dim = n;
    for (std::size_t i = 0; i < facets.size(); ++i)
        spec.facets.push_back({facets[i].normal, facets[i].offset, labels[i]});
    return toric::make_weighted(spec);
}

/// The football/teardrop interval: [0,1] with labels (r, s).
inline WeightedPolytope football(long r, long s) {
    return weighted(interval_facets(), 1, {Int(r), Int(s)});
}

inline WeightedPolytope cp2() { return weighted(triangle_facets(), 2); }

inline WeightedPolytope unit_square() { return weighted(square_facets(), 2); }

/// Triangle with labels (1,1,2): one facet group Z/2, two vertex groups Z/2.
inline WeightedPolytope weighted_triangle() {
    return weighted(triangle_facets(), 2, {Int(1), Int(1), Int(2)});
}

/// Delzant trapezoid of the k-th Hirzebruch surface.
inline WeightedPolytope hirzebruch(long k) {
    return weighted({hs({1, 0}, 0), hs({0, 1}, 0), hs({0, -1}, -1), hs({-1, -k}, -(k + 1))}, 2);
}

/// Brute-force facet detection from a vertex set: every n-subset spanning a
/// hyperplane is tested as a supporting hyperplane with (n-1)-dimensional
/// contact. Independent of enumerate_vertices (works from coordinates only).
inline std::vector<HalfSpace> facets_from_vertices(const std::vector<RatVec>& vertices, int n) {
    std::vector<HalfSpace> found;
    auto push_unique = [&](const HalfSpace& h) {
        for (const auto& g : found)
            if (g == h) return;
        found.push_back(h);
    };

    auto try_subset = [&](const std::vector<int>& sub) {
        // integer row matrix of scaled differences v_i - v_0
        toric::IntMat diffs(sub.size() - 1, static_cast<std::size_t>(n));
        for (std::size_t r = 1; r < sub.size(); ++r) {
            Int scale = 1;
            RatVec d(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                d[static_cast<std::size_t>(j)] =
                    vertices[sub[r]][static_cast<std::size_t>(j)] -
                    vertices[sub[0]][static_cast<std::size_t>(j)];
                scale = boost::multiprecision::lcm(scale, denominator(d[static_cast<std::size_t>(j)]));
            }
            for (int j = 0; j < n; ++j) {
                Rat s = d[static_cast<std::size_t>(j)] * Rat(scale);
                diffs(r - 1, static_cast<std::size_t>(j)) = numerator(s);
            }
        }
        toric::IntMat k = toric::kernel_lattice(diffs);
        if (k.cols != 1) return;  // subset does not span a hyperplane
        IntVec y = k.col(0);
        Rat eta = toric::dot(vertices[sub[0]], y);
        bool all_ge = true, all_le = true;
        std::size_t contact = 0;
        for (const RatVec& v : vertices) {
            Rat val = toric::dot(v, y);
            if (val < eta) all_ge = false;
            if (val > eta) all_le = false;
            if (val == eta) ++contact;
        }
        if (!all_ge && !all_le) return;
        if (all_le && !all_ge) {
            for (Int& x : y) x = -x;
            eta = -eta;
        }
        // contact must be a facet, not a ridge: check affine dimension n-1
        std::vector<RatVec> on;
        for (const RatVec& v : vertices)
            if (toric::dot(v, y) == eta) on.push_back(v);
        if (on.size() < static_cast<std::size_t>(n)) return;
        toric::RatMat od(on.size() - 1, static_cast<std::size_t>(n));
        for (std::size_t r = 1; r < on.size(); ++r)
            for (int j = 0; j < n; ++j)
                od(r - 1, static_cast<std::size_t>(j)) =
                    on[r][static_cast<std::size_t>(j)] - on[0][static_cast<std::size_t>(j)];
        if (toric::rank(od) != static_cast<std::size_t>(n - 1)) return;
        push_unique(toric::normalize_half_space(y, eta));
    };

    toric::detail::for_each_subset(static_cast<int>(vertices.size()), n, try_subset);
    return found;
}

inline bool same_facet_set(std::vector<HalfSpace> a, std::vector<HalfSpace> b) {
    if (a.size() != b.size()) return false;
    for (const auto& h : a) {
        bool ok = false;
        for (const auto& g : b)
            if (g == h) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

}  // namespace tt
