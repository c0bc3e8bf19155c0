#pragma once

// Exact H-representation polytopes at desk scale: vertex enumeration by
// brute force over facet subsets, the face lattice of a simple polytope,
// and primitive edge directions at vertices. All geometry is rational and
// all predicates are exact.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/linalg.hpp"
#include "toric/normal_form.hpp"

namespace toric {

/// One inward half-space {alpha : <alpha, normal> >= offset}.
/// The stored normal is primitive; use normalize_half_space to build one.
struct HalfSpace {
    IntVec normal;
    Rat offset;

    bool operator==(const HalfSpace& o) const = default;
};

/// Divides the normal by its gcd and rescales the offset to keep the same
/// half-space. Rejects zero normals.
inline HalfSpace normalize_half_space(const IntVec& normal, const Rat& offset) {
    if (is_zero(normal)) throw input_error("facet has zero normal");
    Int g = gcd_all(normal);
    IntVec y(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) y[i] = normal[i] / g;
    return HalfSpace{std::move(y), offset / Rat(g)};
}

struct Polytope {
    int dim = 0;
    std::vector<HalfSpace> facets;
    std::vector<RatVec> vertices;                 // lexicographically sorted
    std::vector<std::vector<int>> vertex_facets;  // sorted active facet sets
};

/// A face identified by its active facet set; dim = ambient dim - |active|
/// once the polytope is simple.
struct Face {
    std::vector<int> active;  // sorted facet indices; empty = whole polytope
    int dim = 0;
    std::vector<int> vertex_indices;
};

namespace detail {

inline bool lex_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Visits all k-subsets of {0,...,n-1} in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& visit) {
    if (k == 0) {
        visit(std::vector<int>{});
        return;
    }
    if (k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// A direction d with <d, y_i> >= 0 for all facet normals, if one exists.
/// Nonzero recession directions are exactly what makes the polyhedron
/// unbounded (lineality from a rank-deficient normal set, or an extreme
/// ray cut out by some n-1 of the normals).
inline std::optional<IntVec> recession_direction(const std::vector<HalfSpace>& facets, int n) {
    int nf = static_cast<int>(facets.size());
    IntMat normals(nf, n);
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < n; ++j) normals(i, static_cast<std::size_t>(j)) = facets[i].normal[j];
    IntMat lineality = kernel_lattice(normals);
    if (lineality.cols > 0) return lineality.col(0);

    std::optional<IntVec> found;
    for_each_subset(nf, n - 1, [&](const std::vector<int>& subset) {
        if (found) return;
        IntMat m(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n));
        for (std::size_t r = 0; r < subset.size(); ++r)
            for (int j = 0; j < n; ++j) m(r, static_cast<std::size_t>(j)) = facets[subset[r]].normal[j];
        IntMat k = kernel_lattice(m);
        if (k.cols != 1) return;  // not a candidate ray (rank < n-1)
        IntVec d = k.col(0);
        for (int sign = 0; sign < 2; ++sign) {
            bool ok = true;
            for (const HalfSpace& f : facets)
                if (dot(d, f.normal) < 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                found = d;
                return;
            }
            for (Int& x : d) x = -x;
        }
    });
    return found;
}

}  // namespace detail

struct VertexEnumeration {
    std::vector<RatVec> vertices;
    std::vector<std::vector<int>> vertex_facets;
};

/// Solves every n-subset of facet equations exactly and keeps the feasible
/// solutions. Errors on empty or unbounded input; vertices come back in
/// lexicographic order with their full active facet sets.
inline VertexEnumeration enumerate_vertices(const std::vector<HalfSpace>& facets, int n) {
    if (n < 1) throw input_error("dimension must be positive");
    if (static_cast<int>(facets.size()) < n + 1)
        throw input_error("fewer than dim+1 half-spaces");
    for (const HalfSpace& f : facets)
        if (static_cast<int>(f.normal.size()) != n)
            throw input_error("facet normal has wrong dimension");

    if (detail::recession_direction(facets, n)) throw input_error("unbounded polytope");

    std::map<RatVec, std::vector<int>, decltype(&detail::lex_less)> found(&detail::lex_less);
    int nf = static_cast<int>(facets.size());
    detail::for_each_subset(nf, n, [&](const std::vector<int>& subset) {
        RatMat m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        RatVec rhs(static_cast<std::size_t>(n));
        for (std::size_t r = 0; r < subset.size(); ++r) {
            for (int j = 0; j < n; ++j) m(r, static_cast<std::size_t>(j)) = Rat(facets[subset[r]].normal[j]);
            rhs[r] = facets[subset[r]].offset;
        }
        auto sol = solve_square(m, rhs);
        if (!sol) return;
        for (const HalfSpace& f : facets)
            if (dot(*sol, f.normal) < f.offset) return;
        found.emplace(*sol, std::vector<int>{});
    });
    if (found.empty()) throw input_error("empty polytope");

    VertexEnumeration out;
    for (auto& [v, active] : found) {
        active.clear();
        for (int i = 0; i < nf; ++i)
            if (dot(v, facets[i].normal) == facets[i].offset) active.push_back(i);
        out.vertices.push_back(v);
        out.vertex_facets.push_back(active);
    }
    return out;
}

/// Full validation pipeline: normalization, duplicate and redundancy
/// rejection, boundedness/nonemptiness, full dimension. Simplicity is not
/// required here; check it with is_simple or let face_lattice insist.
inline Polytope make_polytope(std::vector<HalfSpace> facets, int n) {
    for (HalfSpace& f : facets) f = normalize_half_space(f.normal, f.offset);
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = i + 1; j < facets.size(); ++j)
            if (facets[i] == facets[j])
                throw input_error("duplicate facet: " + std::to_string(i) + " and " +
                                  std::to_string(j));

    VertexEnumeration ve = enumerate_vertices(facets, n);

    // facets active everywhere are implicit equalities: the polytope would
    // be lower-dimensional
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool everywhere = true;
        for (const auto& act : ve.vertex_facets)
            if (!std::binary_search(act.begin(), act.end(), static_cast<int>(i))) {
                everywhere = false;
                break;
            }
        if (everywhere)
            throw input_error("polytope is not full-dimensional (facet " + std::to_string(i) +
                              " is active everywhere)");
    }

    // each half-space must support a codimension-one face
    for (std::size_t i = 0; i < facets.size(); ++i) {
        std::vector<const RatVec*> on;
        for (std::size_t v = 0; v < ve.vertices.size(); ++v)
            if (std::binary_search(ve.vertex_facets[v].begin(), ve.vertex_facets[v].end(),
                                   static_cast<int>(i)))
                on.push_back(&ve.vertices[v]);
        std::size_t affine_dim = 0;
        if (!on.empty() && on.size() > 1) {
            RatMat diffs(on.size() - 1, static_cast<std::size_t>(n));
            for (std::size_t r = 1; r < on.size(); ++r)
                for (int j = 0; j < n; ++j)
                    diffs(r - 1, static_cast<std::size_t>(j)) = (*on[r])[j] - (*on[0])[j];
            affine_dim = rank(diffs);
        }
        if (on.empty() || affine_dim != static_cast<std::size_t>(n - 1))
            throw input_error("redundant half-space: facet " + std::to_string(i) +
                              " does not support a facet of the polytope");
    }

    return Polytope{n, std::move(facets), std::move(ve.vertices), std::move(ve.vertex_facets)};
}

struct SimplicityCheck {
    bool simple = false;
    int witness_vertex = -1;  // a vertex on more than dim facets, when not simple
};

/// Exactly dim facets must meet at every vertex.
inline SimplicityCheck is_simple(const Polytope& p) {
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
        if (p.vertex_facets[v].size() != static_cast<std::size_t>(p.dim))
            return {false, static_cast<int>(v)};
    return {true, -1};
}

/// All faces of a simple polytope, as intersections of vertex active sets
/// closed under pairwise meet, plus the whole polytope (empty active set).
/// Ordered by |active| then lexicographically.
inline std::vector<Face> face_lattice(const Polytope& p) {
    if (!is_simple(p).simple) throw input_error("polytope is not simple");

    std::set<std::vector<int>> sets(p.vertex_facets.begin(), p.vertex_facets.end());
    sets.insert(std::vector<int>{});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(sets.begin(), sets.end());
        for (std::size_t a = 0; a < snapshot.size(); ++a)
            for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
                std::vector<int> meet;
                std::set_intersection(snapshot[a].begin(), snapshot[a].end(),
                                      snapshot[b].begin(), snapshot[b].end(),
                                      std::back_inserter(meet));
                if (sets.insert(meet).second) grew = true;
            }
    }

    std::vector<Face> faces;
    for (const auto& s : sets) {
        Face f;
        f.active = s;
        f.dim = p.dim - static_cast<int>(s.size());
        for (std::size_t v = 0; v < p.vertices.size(); ++v)
            if (std::includes(p.vertex_facets[v].begin(), p.vertex_facets[v].end(), s.begin(),
                              s.end()))
                f.vertex_indices.push_back(static_cast<int>(v));
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.active.size() != b.active.size()) return a.active.size() < b.active.size();
        return a.active < b.active;
    });
    return faces;
}

/// One edge leaving a vertex: drop one active facet, keep the others.
struct Edge {
    IntVec direction;      // primitive, points away from the vertex
    int other_vertex = -1;
    int dropped_facet = -1;
};

/// The dim edges at a vertex of a simple polytope, ordered by dropped
/// facet index. The direction pairs to zero with every retained normal and
/// strictly positively with the dropped one.
inline std::vector<Edge> edges_at_vertex(const Polytope& p, int v) {
    const auto& active = p.vertex_facets[static_cast<std::size_t>(v)];
    if (active.size() != static_cast<std::size_t>(p.dim))
        throw input_error("polytope is not simple");

    std::vector<Edge> edges;
    for (int dropped : active) {
        std::vector<int> retained;
        for (int i : active)
            if (i != dropped) retained.push_back(i);

        IntMat m(retained.size(), static_cast<std::size_t>(p.dim));
        for (std::size_t r = 0; r < retained.size(); ++r)
            for (int j = 0; j < p.dim; ++j)
                m(r, static_cast<std::size_t>(j)) = p.facets[retained[r]].normal[j];
        IntMat k = kernel_lattice(m);
        if (k.cols != 1) throw internal_error("edge direction is not one-dimensional");
        IntVec d = k.col(0);
        Int against = dot(d, p.facets[dropped].normal);
        if (against == 0) throw internal_error("edge direction degenerate against dropped facet");
        if (against < 0)
            for (Int& x : d) x = -x;

        int other = -1;
        for (std::size_t w = 0; w < p.vertices.size(); ++w) {
            if (static_cast<int>(w) == v) continue;
            if (std::includes(p.vertex_facets[w].begin(), p.vertex_facets[w].end(),
                              retained.begin(), retained.end())) {
                other = static_cast<int>(w);
                break;
            }
        }
        if (other < 0) throw internal_error("edge has no second endpoint");
        edges.push_back(Edge{std::move(d), other, dropped});
    }
    return edges;
}

}  // namespace toric
