#pragma once

// The classifying object: a rational simple compact full-dimensional
// polytope with a positive integer label on each facet. Isomorphism is
// "translation composed with a lattice-preserving linear map matching
// labels facet-by-facet"; the default linear group is SL (det +1), with a
// GL (det +-1) variant behind a flag.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// Raw, unvalidated input: what a polytope file deserializes to.
struct PolytopeSpec {
    struct Facet {
        IntVec normal;
        Rat offset;
        Int label = 1;
    };
    int dim = 0;
    std::vector<Facet> facets;
};

struct WeightedPolytope {
    Polytope base;
    std::vector<Int> labels;  // aligned with base.facets

    int dim() const { return base.dim; }
    std::size_t facet_count() const { return base.facets.size(); }
};

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool pass = true;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back({name, ok, detail});
        pass = pass && ok;
    }
};

/// Runs every classifying-data requirement as a pass/fail check. Never
/// throws on geometric failure: the report is the result.
inline ValidationReport validate(const PolytopeSpec& spec) {
    ValidationReport report;

    bool labels_ok = true;
    std::string label_detail;
    for (std::size_t i = 0; i < spec.facets.size(); ++i)
        if (spec.facets[i].label < 1) {
            labels_ok = false;
            label_detail = "facet " + std::to_string(i) + " has label " +
                           spec.facets[i].label.str();
            break;
        }
    report.add("labels positive", labels_ok, label_detail);

    if (spec.dim < 1) {
        report.add("dimension positive", false, "dim = " + std::to_string(spec.dim));
        return report;
    }

    std::vector<HalfSpace> facets;
    try {
        for (const auto& f : spec.facets) {
            if (static_cast<int>(f.normal.size()) != spec.dim)
                throw input_error("normal has wrong length");
            facets.push_back(normalize_half_space(f.normal, f.offset));
        }
        report.add("normals nonzero and rational", true);
    } catch (const input_error& e) {
        report.add("normals nonzero and rational", false, e.what());
        return report;
    }

    bool distinct = true;
    std::string dup_detail;
    for (std::size_t i = 0; i < facets.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < facets.size() && distinct; ++j)
            if (facets[i] == facets[j]) {
                distinct = false;
                dup_detail = "facets " + std::to_string(i) + " and " + std::to_string(j) +
                             " define the same half-space";
            }
    report.add("facets distinct", distinct, dup_detail);
    if (!distinct) return report;

    bool unbounded = detail::recession_direction(facets, spec.dim).has_value();
    report.add("bounded", !unbounded, unbounded ? "normals do not positively span the dual" : "");
    if (unbounded) return report;

    Polytope p;
    try {
        p = make_polytope(facets, spec.dim);
        report.add("nonempty", true);
        report.add("full-dimensional", true);
        report.add("facets irredundant", true);
    } catch (const input_error& e) {
        std::string what = e.what();
        if (what == "empty polytope") {
            report.add("nonempty", false, what);
        } else if (what.find("not full-dimensional") != std::string::npos) {
            report.add("nonempty", true);
            report.add("full-dimensional", false, what);
        } else {  // redundant half-space (make_polytope checks it last)
            report.add("nonempty", true);
            report.add("full-dimensional", true);
            report.add("facets irredundant", false, what);
        }
        return report;
    }

    auto sc = is_simple(p);
    report.add("simple", sc.simple,
               sc.simple ? ""
                         : "vertex " + vec_str(p.vertices[sc.witness_vertex]) + " lies on " +
                               std::to_string(p.vertex_facets[sc.witness_vertex].size()) +
                               " facets");
    return report;
}

/// Validates and builds; throws input_error naming the first failing check.
inline WeightedPolytope make_weighted(const PolytopeSpec& spec) {
    ValidationReport report = validate(spec);
    if (!report.pass) {
        for (const auto& c : report.checks)
            if (!c.pass)
                throw input_error("invalid weighted polytope: " + c.name +
                                  (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
    std::vector<HalfSpace> facets;
    std::vector<Int> labels;
    for (const auto& f : spec.facets) {
        facets.push_back(normalize_half_space(f.normal, f.offset));
        labels.push_back(f.label);
    }
    return WeightedPolytope{make_polytope(facets, spec.dim), std::move(labels)};
}

inline PolytopeSpec to_spec(const WeightedPolytope& w) {
    PolytopeSpec spec;
    spec.dim = w.dim();
    for (std::size_t i = 0; i < w.facet_count(); ++i)
        spec.facets.push_back({w.base.facets[i].normal, w.base.facets[i].offset, w.labels[i]});
    return spec;
}

enum class EquivGroup { SL, GL };

/// Witness for an isomorphism alpha |-> L alpha + c carrying facet i of the
/// source to facet sigma[i] of the target (same labels).
struct Isomorphism {
    IntMat L;
    RatVec c;
    std::vector<int> sigma;
};

/// Applies alpha |-> L alpha + c to a weighted polytope. L must be
/// unimodular; facet order is preserved.
inline WeightedPolytope transform(const WeightedPolytope& w, const IntMat& L, const RatVec& c) {
    IntMat pullback = inverse_unimodular(L).transposed();  // normals move contragradiently
    PolytopeSpec spec;
    spec.dim = w.dim();
    for (std::size_t i = 0; i < w.facet_count(); ++i) {
        IntVec y = pullback * w.base.facets[i].normal;
        Rat eta = w.base.facets[i].offset + dot(c, y);
        spec.facets.push_back({std::move(y), std::move(eta), w.labels[i]});
    }
    return make_weighted(spec);
}

namespace detail {

/// Multiset of |det[m_i y_i]| over all vertices: cheap isomorphism invariant
/// (the order of each vertex structure group).
inline std::vector<Int> vertex_order_multiset(const WeightedPolytope& w) {
    std::vector<Int> orders;
    int n = w.dim();
    for (const auto& active : w.base.vertex_facets) {
        IntMat m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (std::size_t j = 0; j < active.size(); ++j) {
            IntVec col = w.base.facets[active[j]].normal;
            for (int r = 0; r < n; ++r)
                m(static_cast<std::size_t>(r), j) = col[static_cast<std::size_t>(r)] *
                                                    w.labels[active[j]];
        }
        orders.push_back(boost::multiprecision::abs(det(m)));
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

inline std::vector<Int> sorted_labels(const WeightedPolytope& w) {
    std::vector<Int> l = w.labels;
    std::sort(l.begin(), l.end());
    return l;
}

}  // namespace detail

/// Searches for an affine lattice isomorphism from a onto b. Anchored at
/// the lexicographically first vertex of a: every isomorphism must carry it
/// to some vertex of b with some bijection of incident facets, and the
/// candidate linear map is forced by the normal correspondence. Candidates
/// are tried in lexicographic (target vertex, facet bijection) order and
/// the first verified one is returned, so the result is deterministic.
inline std::optional<Isomorphism> isomorphic(const WeightedPolytope& a, const WeightedPolytope& b,
                                             EquivGroup group = EquivGroup::SL) {
    int n = a.dim();
    if (n != b.dim()) return std::nullopt;
    if (a.facet_count() != b.facet_count()) return std::nullopt;
    if (a.base.vertices.size() != b.base.vertices.size()) return std::nullopt;
    if (detail::sorted_labels(a) != detail::sorted_labels(b)) return std::nullopt;
    if (detail::vertex_order_multiset(a) != detail::vertex_order_multiset(b)) return std::nullopt;

    const RatVec& v0 = a.base.vertices[0];
    const auto& act_a = a.base.vertex_facets[0];

    auto columns = [&](const WeightedPolytope& w, const std::vector<int>& idx) {
        RatMat m(static_cast<std::size_t>(n), idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (int r = 0; r < n; ++r)
                m(static_cast<std::size_t>(r), j) =
                    Rat(w.base.facets[idx[j]].normal[static_cast<std::size_t>(r)]);
        return m;
    };
    RatMat y_a = columns(a, act_a);

    for (std::size_t wi = 0; wi < b.base.vertices.size(); ++wi) {
        const auto& act_b = b.base.vertex_facets[wi];
        std::vector<int> perm = act_b;  // already sorted: lexicographic start
        do {
            // solve L^T * [y'_perm] = [y_a]  =>  L^T = y_a * inv(y'_perm)
            RatMat y_b = columns(b, perm);
            auto y_b_inv = inverse(y_b);
            if (!y_b_inv) continue;
            auto lt = to_int(y_a * *y_b_inv);
            if (!lt) continue;
            IntMat L = lt->transposed();
            Int d = det(L);
            if (group == EquivGroup::SL ? d != 1 : (d != 1 && d != -1)) continue;

            RatVec c = b.base.vertices[wi];
            RatVec lv = to_rat(L) * v0;
            for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j)] -= lv[static_cast<std::size_t>(j)];

            // verify the whole facet system maps facet-to-facet with labels
            IntMat pullback = inverse_unimodular(L).transposed();
            std::vector<int> sigma(a.facet_count(), -1);
            std::vector<bool> used(b.facet_count(), false);
            bool ok = true;
            for (std::size_t i = 0; i < a.facet_count() && ok; ++i) {
                IntVec y = pullback * a.base.facets[i].normal;
                Rat eta = a.base.facets[i].offset + dot(c, y);
                ok = false;
                for (std::size_t j = 0; j < b.facet_count(); ++j) {
                    if (used[j]) continue;
                    if (b.base.facets[j].normal == y && b.base.facets[j].offset == eta &&
                        b.labels[j] == a.labels[i]) {
                        sigma[i] = static_cast<int>(j);
                        used[j] = true;
                        ok = true;
                        break;
                    }
                }
            }
            if (ok) return Isomorphism{std::move(L), std::move(c), std::move(sigma)};
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
}

/// Translation-invariant fingerprint: the facet system rewritten so the
/// lexicographically least vertex sits at the origin, sorted and
/// serialized. Equal keys imply the polytopes are translates; distinct
/// keys say nothing about SL-equivalence.
inline std::string canonical_key(const WeightedPolytope& w) {
    const RatVec& v0 = w.base.vertices[0];
    std::vector<std::string> records;
    for (std::size_t i = 0; i < w.facet_count(); ++i) {
        const HalfSpace& f = w.base.facets[i];
        Rat eta = f.offset - dot(v0, f.normal);
        std::string rec;
        for (const Int& x : f.normal) rec += x.str() + ",";
        rec += "|" + rat_str(eta) + "|" + w.labels[i].str();
        records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end());
    std::string key = "d" + std::to_string(w.dim()) + ";N" + std::to_string(w.facet_count()) + ";";
    for (const auto& r : records) key += r + ";";
    return key;
}

}  // namespace toric
