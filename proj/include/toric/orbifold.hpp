#pragma once

// Per-face orbifold invariants of the toric space classified by a weighted
// polytope. The structure group of the points over the open face with
// active set S is the finite abelian quotient
//
//     Gamma_S = ell_S / Z-span{ m_i y_i : i in S },
//
// where ell_S is the saturation of the normals' span in the ambient
// lattice. For a facet this is Z/m; for a vertex its order is
// |det[m_i y_i]|. Orbi-weights at a vertex are the dual basis of the
// scaled normals; they are rational, but |Gamma| times each one is
// integral.

#include <string>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/normal_form.hpp"
#include "toric/weighted_polytope.hpp"

namespace toric {

/// Invariant-factor form d1 | d2 | ..., every factor >= 2; the empty list
/// is the trivial group.
struct FiniteAbelianGroup {
    std::vector<Int> invariant_factors;

    bool trivial() const { return invariant_factors.empty(); }

    Int order() const {
        Int o = 1;
        for (const Int& d : invariant_factors) o *= d;
        return o;
    }

    /// "1" for the trivial group, otherwise "Z/d1 x Z/d2 x ...".
    std::string str() const {
        if (trivial()) return "1";
        std::string s;
        for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
            if (i) s += " x ";
            s += "Z/" + invariant_factors[i].str();
        }
        return s;
    }

    bool operator==(const FiniteAbelianGroup& o) const = default;
};

/// Cyclic group of order m (trivial when m = 1).
inline FiniteAbelianGroup cyclic_group(const Int& m) {
    if (m == 1) return {};
    return {{m}};
}

/// Drops unit factors from a Smith diagonal; zeros are rejected (the
/// quotient must be finite).
inline FiniteAbelianGroup group_from_diagonal(const std::vector<Int>& d) {
    FiniteAbelianGroup g;
    for (const Int& x : d) {
        if (x == 0) throw internal_error("quotient is not finite");
        if (x > 1) g.invariant_factors.push_back(x);
    }
    return g;
}

namespace detail {

inline void check_face(const WeightedPolytope& w, const Face& f) {
    if (f.vertex_indices.empty()) throw input_error("not a face of the polytope");
    for (int i : f.active)
        if (i < 0 || i >= static_cast<int>(w.facet_count()))
            throw input_error("not a face of the polytope");
    if (f.dim != w.dim() - static_cast<int>(f.active.size()))
        throw input_error("not a face of the polytope");
}

}  // namespace detail

/// Structure group of the points over the open face f.
inline FiniteAbelianGroup structure_group(const WeightedPolytope& w, const Face& f) {
    detail::check_face(w, f);
    if (f.active.empty()) return {};  // free stratum over the interior
    int n = w.dim();
    std::size_t k = f.active.size();

    IntMat normals(static_cast<std::size_t>(n), k);
    IntMat scaled(static_cast<std::size_t>(n), k);
    for (std::size_t j = 0; j < k; ++j) {
        const IntVec& y = w.base.facets[f.active[j]].normal;
        for (int r = 0; r < n; ++r) {
            normals(static_cast<std::size_t>(r), j) = y[static_cast<std::size_t>(r)];
            scaled(static_cast<std::size_t>(r), j) =
                y[static_cast<std::size_t>(r)] * w.labels[f.active[j]];
        }
    }

    IntMat lattice = saturate(normals);  // ell_S, rank k
    // coordinates of each m_i y_i in the basis of ell_S (always integral:
    // the scaled normals lie in ell_S)
    RatMat basis = to_rat(lattice);
    IntMat coords(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        auto x = solve_full_rank(basis, to_rat(scaled.col(j)));
        if (!x) throw internal_error("scaled normal escapes its saturation");
        auto xi = to_int(*x);
        if (!xi) throw internal_error("scaled normal has non-integer coordinates in ell_S");
        coords.set_col(j, *xi);
    }
    return group_from_diagonal(smith_normal_form(coords).d);
}

/// Orbi-weights at a vertex: alpha_j is dual to m_{i_j} y_{i_j} over the
/// vertex's active facets (sorted facet order).
struct OrbiWeights {
    int vertex = -1;
    std::vector<RatVec> weights;
};

inline OrbiWeights orbi_weights(const WeightedPolytope& w, int vertex) {
    int n = w.dim();
    const auto& active = w.base.vertex_facets[static_cast<std::size_t>(vertex)];
    if (active.size() != static_cast<std::size_t>(n)) throw input_error("polytope is not simple");

    RatMat m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < active.size(); ++j)
        for (int r = 0; r < n; ++r)
            m(static_cast<std::size_t>(r), j) =
                Rat(w.base.facets[active[j]].normal[static_cast<std::size_t>(r)] *
                    w.labels[active[j]]);
    auto inv = inverse(m);
    if (!inv) throw internal_error("vertex normals are degenerate");

    OrbiWeights out;
    out.vertex = vertex;
    for (int j = 0; j < n; ++j) out.weights.push_back(inv->row(static_cast<std::size_t>(j)));
    return out;
}

/// Labeled generators of the moment cone at a face. With verify set, checks
/// exactly that every facet outside the active set is inactive somewhere on
/// the face.
struct LocalCone {
    RatVec apex;
    std::vector<std::pair<IntVec, Int>> generators;  // (normal, label) per active facet
};

inline LocalCone local_cone(const WeightedPolytope& w, const Face& f, bool verify = false) {
    detail::check_face(w, f);
    LocalCone cone;
    // centroid of the face's vertices: a relative-interior point
    cone.apex.assign(static_cast<std::size_t>(w.dim()), Rat(0));
    for (int v : f.vertex_indices)
        for (int j = 0; j < w.dim(); ++j)
            cone.apex[static_cast<std::size_t>(j)] +=
                w.base.vertices[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
    for (int j = 0; j < w.dim(); ++j)
        cone.apex[static_cast<std::size_t>(j)] /= Rat(static_cast<long>(f.vertex_indices.size()));

    for (int i : f.active) cone.generators.emplace_back(w.base.facets[i].normal, w.labels[i]);

    if (verify) {
        for (std::size_t i = 0; i < w.facet_count(); ++i) {
            if (std::binary_search(f.active.begin(), f.active.end(), static_cast<int>(i)))
                continue;
            bool strict_somewhere = false;
            for (int v : f.vertex_indices)
                if (dot(w.base.vertices[static_cast<std::size_t>(v)], w.base.facets[i].normal) >
                    w.base.facets[i].offset) {
                    strict_somewhere = true;
                    break;
                }
            if (!strict_somewhere)
                throw internal_error("facet " + std::to_string(i) +
                                     " is active on the whole face but not in its active set");
        }
    }
    return cone;
}

/// Per-face singular-stratum table, in face-lattice order.
struct SingularLocusEntry {
    Face face;
    FiniteAbelianGroup group;

    int stabilizer_rank(int ambient_dim) const { return ambient_dim - face.dim; }
};

struct SingularLocusReport {
    std::vector<SingularLocusEntry> entries;
    bool smooth = true;  // Delzant case: every structure group trivial
};

inline SingularLocusReport singular_locus_report(const WeightedPolytope& w) {
    SingularLocusReport report;
    for (const Face& f : face_lattice(w.base)) {
        FiniteAbelianGroup g = structure_group(w, f);
        report.smooth = report.smooth && g.trivial();
        report.entries.push_back({f, std::move(g)});
    }
    return report;
}

}  // namespace toric
