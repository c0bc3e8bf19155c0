#pragma once

// Polytope file format and report generation.
//
// A polytope file is a JSON object:
//   { "dim": n,
//     "facets": [ { "normal": [ints, length n],
//                   "offset": int or "p/q" string,
//                   "label":  positive int (optional, default 1) }, ... ] }
// with the inward convention <alpha, normal> >= offset. Numbers may be
// given as strings when they exceed the range of JSON integers; the
// canonical serialization emits plain integers whenever they fit. All
// exact values in JSON reports are strings; floating point appears only
// in the verify section.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include "toric/delzant.hpp"
#include "toric/morse.hpp"
#include "toric/orbifold.hpp"
#include "toric/weighted_polytope.hpp"

namespace toric {

using json = nlohmann::json;

namespace io_detail {

inline Int parse_int(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw input_error(where + ": malformed integer '" + j.get<std::string>() + "'");
        }
    }
    throw input_error(where + ": expected an integer (floats are not exact)");
}

inline Rat parse_offset(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw input_error(where + ": expected an integer or a \"p/q\" string");
}

inline json int_json(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (x >= lo && x <= hi) return x.template convert_to<std::int64_t>();
    return x.str();
}

inline json rat_json(const Rat& q) {
    if (denominator(q) == 1) return int_json(numerator(q));
    return rat_str(q);
}

inline json vec_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

inline json vec_json(const RatVec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_str(x));
    return a;
}

inline json mat_json(const IntMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

inline json group_json(const FiniteAbelianGroup& g) {
    json factors = json::array();
    for (const Int& d : g.invariant_factors) factors.push_back(d.str());
    return json{{"group", g.str()}, {"invariant_factors", factors}, {"order", g.order().str()}};
}

}  // namespace io_detail

/// Schema-level parse: structure and exactness only. Geometric validation
/// is a separate step (validate / make_weighted).
inline PolytopeSpec parse_polytope_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("top level must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "dim" && key != "facets") throw input_error("unknown key '" + key + "'");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw input_error("missing or non-integer \"dim\"");
    if (!j.contains("facets") || !j["facets"].is_array() || j["facets"].empty())
        throw input_error("missing or empty \"facets\" array");

    PolytopeSpec spec;
    spec.dim = j["dim"].get<int>();
    int index = 0;
    for (const json& f : j["facets"]) {
        std::string where = "facet " + std::to_string(index);
        if (!f.is_object()) throw input_error(where + ": expected an object");
        for (const auto& [key, value] : f.items())
            if (key != "normal" && key != "offset" && key != "label")
                throw input_error(where + ": unknown key '" + key + "'");
        if (!f.contains("normal") || !f["normal"].is_array())
            throw input_error(where + ": missing \"normal\" array");
        if (!f.contains("offset")) throw input_error(where + ": missing \"offset\"");

        PolytopeSpec::Facet facet;
        for (const json& x : f["normal"])
            facet.normal.push_back(io_detail::parse_int(x, where + " normal"));
        if (static_cast<int>(facet.normal.size()) != spec.dim)
            throw input_error(where + ": normal has length " +
                              std::to_string(facet.normal.size()) + ", expected " +
                              std::to_string(spec.dim));
        facet.offset = io_detail::parse_offset(f["offset"], where + " offset");
        if (f.contains("label")) {
            facet.label = io_detail::parse_int(f["label"], where + " label");
            if (facet.label < 1)
                throw input_error(where + ": label must be a positive integer");
        }
        spec.facets.push_back(std::move(facet));
        ++index;
    }
    return spec;
}

/// Strict parse: schema, normalization, and full geometric validation.
inline WeightedPolytope parse_polytope(const std::string& text) {
    return make_weighted(parse_polytope_spec(text));
}

/// Canonical serialization: sorted keys, facets in input order, normals
/// primitive, two-space indent. parse(serialize(w)) == w byte-for-byte
/// after one normalization pass.
inline std::string serialize_polytope(const PolytopeSpec& spec) {
    json facets = json::array();
    for (const auto& f : spec.facets) {
        json normal = json::array();
        for (const Int& x : f.normal) normal.push_back(io_detail::int_json(x));
        facets.push_back(json{{"label", io_detail::int_json(f.label)},
                              {"normal", normal},
                              {"offset", io_detail::rat_json(f.offset)}});
    }
    json doc{{"dim", spec.dim}, {"facets", facets}};
    return doc.dump(2) + "\n";
}

inline std::string serialize_polytope(const WeightedPolytope& w) {
    return serialize_polytope(to_spec(w));
}

/// Everything the construction check produces in one record.
struct ConstructionVerification {
    bool image_ok = false;
    MomentSampleReport samples;
    bool pass = false;
};

inline ConstructionVerification verify_construction(const WeightedPolytope& w, int samples,
                                                    std::uint64_t seed, double tol) {
    ConstructionVerification v;
    DelzantData d = build_delzant(w);
    v.image_ok = recompute_image(d, w);
    v.samples = sample_moment_image(d, w, samples, seed, tol);
    v.pass = v.image_ok && v.samples.pass;
    return v;
}

inline json validation_json(const ValidationReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"pass", report.pass}, {"checks", checks}};
}

inline json faces_json(const std::vector<Face>& faces) {
    json a = json::array();
    for (const Face& f : faces)
        a.push_back(json{{"active", f.active}, {"dim", f.dim}, {"vertices", f.vertex_indices}});
    return a;
}

/// The aggregate report document ("toric-report/1"); see
/// docs/report.schema.json for the published schema.
inline json report_json(const WeightedPolytope& w) {
    json doc;
    doc["schema"] = "toric-report/1";
    doc["polytope"] = json::parse(serialize_polytope(w));
    doc["validate"] = validation_json(validate(to_spec(w)));

    json vertices = json::array();
    for (const RatVec& v : w.base.vertices) vertices.push_back(io_detail::vec_json(v));
    doc["vertices"] = vertices;

    auto faces = face_lattice(w.base);
    doc["faces"] = faces_json(faces);

    auto locus = singular_locus_report(w);
    json group_rows = json::array();
    for (const auto& e : locus.entries) {
        json row = io_detail::group_json(e.group);
        row["active"] = e.face.active;
        row["dim"] = e.face.dim;
        row["stabilizer_rank"] = e.stabilizer_rank(w.dim());
        group_rows.push_back(row);
    }
    doc["groups"] = json{{"smooth", locus.smooth}, {"faces", group_rows}};

    BettiProfile betti = betti_numbers(w);
    doc["betti"] = json{{"b", betti.b}, {"xi", io_detail::vec_json(betti.xi_used)}};

    DelzantData d = build_delzant(w);
    json preimages = json::array();
    for (std::size_t v = 0; v < w.base.vertices.size(); ++v) {
        VertexPreimage pre = vertex_preimage(d, w, static_cast<int>(v));
        preimages.push_back(json{{"vertex", pre.vertex},
                                 {"squared_moduli", io_detail::vec_json(pre.squared_moduli)}});
    }
    doc["delzant"] = json{{"N", d.N},
                          {"n", d.n},
                          {"A", io_detail::mat_json(d.A)},
                          {"kernel_basis", io_detail::mat_json(d.kernel_basis)},
                          {"component_group", io_detail::group_json(d.component_group)},
                          {"eta_scaled", io_detail::vec_json(d.eta_scaled)},
                          {"level", io_detail::vec_json(d.level)},
                          {"recompute_image", recompute_image(d, w)},
                          {"vertex_preimages", preimages}};

    // float values are confined to this section
    MomentSampleReport samples = sample_moment_image(d, w, 0, 0, 1e-9);
    doc["verify"] = json{{"samples", samples.requested},
                         {"seed", 0},
                         {"tol", samples.tol},
                         {"max_violation", samples.max_violation},
                         {"max_vertex_roundtrip", samples.max_vertex_roundtrip},
                         {"pass", samples.pass}};
    return doc;
}

inline std::string format_active(const std::vector<int>& active) {
    std::string s = "{";
    for (std::size_t i = 0; i < active.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(active[i]);
    }
    return s + "}";
}

inline std::string betti_line(const BettiProfile& profile) {
    std::string s = "b = [";
    for (std::size_t i = 0; i < profile.b.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(profile.b[i]);
    }
    return s + "]";
}

inline void print_matrix(std::ostream& out, const std::string& name, const IntMat& m) {
    out << name << " (" << m.rows << "x" << m.cols << "):\n";
    for (std::size_t i = 0; i < m.rows; ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) out << ", ";
            out << m(i, j).str();
        }
        out << "]\n";
    }
}

inline void print_validation(std::ostream& out, const ValidationReport& report) {
    for (const auto& c : report.checks) {
        out << "  " << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
        if (!c.pass && !c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
    }
    out << "validation: " << (report.pass ? "PASS" : "FAIL") << "\n";
}

inline void print_groups(std::ostream& out, const WeightedPolytope& w) {
    auto locus = singular_locus_report(w);
    out << "face        dim  group        order  stabilizer rank\n";
    for (const auto& e : locus.entries) {
        std::string active = format_active(e.face.active);
        out << active << std::string(active.size() < 12 ? 12 - active.size() : 1, ' ')
            << e.face.dim << "    " << e.group.str()
            << std::string(e.group.str().size() < 13 ? 13 - e.group.str().size() : 1, ' ')
            << e.group.order().str() << "      " << e.stabilizer_rank(w.dim()) << "\n";
    }
    out << "smooth (Delzant): " << (locus.smooth ? "yes" : "no") << "\n";
}

inline void print_delzant(std::ostream& out, const DelzantData& d, const WeightedPolytope& w) {
    out << "facets N = " << d.N << ", torus dim n = " << d.n << "\n";
    print_matrix(out, "A = [m_i y_i]", d.A);
    print_matrix(out, "kernel basis", d.kernel_basis);
    out << "component group pi_0(K): " << d.component_group.str() << "\n";
    out << "eta scaled: " << vec_str(d.eta_scaled) << "\n";
    out << "level: " << vec_str(d.level) << "\n";
    for (std::size_t v = 0; v < w.base.vertices.size(); ++v) {
        VertexPreimage pre = vertex_preimage(d, w, static_cast<int>(v));
        out << "vertex " << v << " " << vec_str(w.base.vertices[v])
            << ": |z|^2 = " << vec_str(pre.squared_moduli) << "\n";
    }
}

inline void print_report_text(std::ostream& out, const WeightedPolytope& w) {
    out << "== polytope ==\n";
    out << "dim " << w.dim() << ", " << w.facet_count() << " facets, "
        << w.base.vertices.size() << " vertices\n";
    for (std::size_t i = 0; i < w.facet_count(); ++i)
        out << "  facet " << i << ": normal " << vec_str(w.base.facets[i].normal) << ", offset "
            << rat_str(w.base.facets[i].offset) << ", label " << w.labels[i].str() << "\n";
    out << "== validate ==\n";
    print_validation(out, validate(to_spec(w)));
    out << "== vertices ==\n";
    for (std::size_t v = 0; v < w.base.vertices.size(); ++v)
        out << "  " << v << ": " << vec_str(w.base.vertices[v]) << " on facets "
            << format_active(w.base.vertex_facets[v]) << "\n";
    out << "== faces ==\n";
    for (const Face& f : face_lattice(w.base)) {
        out << "  dim " << f.dim << " active " << format_active(f.active) << " vertices [";
        for (std::size_t i = 0; i < f.vertex_indices.size(); ++i)
            out << (i ? " " : "") << f.vertex_indices[i];
        out << "]\n";
    }
    out << "== structure groups ==\n";
    print_groups(out, w);
    out << "== betti ==\n";
    BettiProfile betti = betti_numbers(w);
    out << betti_line(betti) << "  (xi = " << vec_str(betti.xi_used) << ")\n";
    out << "== delzant ==\n";
    DelzantData d = build_delzant(w);
    print_delzant(out, d, w);
    out << "recompute_image: " << (recompute_image(d, w) ? "ok" : "MISMATCH") << "\n";
}

}  // namespace toric
