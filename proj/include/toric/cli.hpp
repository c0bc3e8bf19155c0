#pragma once

// Command-line front end. Exit codes: 0 success (or "true" answers),
// 1 negative answers (not isomorphic / validation or verification failed),
// 2 malformed input (bad flags, bad files, invalid polytopes where a valid
// one is required), 3 internal inconsistency.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "toric/io.hpp"

namespace toric {

namespace cli_detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline IntVec parse_xi(const std::string& text) {
    IntVec xi;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ',')) {
        try {
            xi.push_back(Int(token));
        } catch (const std::exception&) {
            throw input_error("malformed --xi entry '" + token + "'");
        }
    }
    if (xi.empty()) throw input_error("--xi must list at least one integer");
    return xi;
}

inline double parse_tol(const std::string& text) {
    if (text.find('/') != std::string::npos)
        return parse_rat(text).template convert_to<double>();
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw input_error("malformed --tol value '" + text + "'");
    }
}

}  // namespace cli_detail

/// Runs one CLI invocation; args exclude the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for labeled moment polytopes"};
    app.name("toric");
    app.require_subcommand(1);

    std::string file, file_b;
    std::string xi_text, group_text = "sl", format = "text", tol_text = "1e-9";
    int samples = 1000;
    std::uint64_t seed = 1;

    CLI::App* c_validate = app.add_subcommand("validate", "check the classifying data");
    c_validate->add_option("file", file, "polytope JSON file")->required();

    CLI::App* c_faces = app.add_subcommand("faces", "list the face lattice");
    c_faces->add_option("file", file)->required();

    CLI::App* c_groups = app.add_subcommand("groups", "orbifold structure groups per face");
    c_groups->add_option("file", file)->required();

    CLI::App* c_betti = app.add_subcommand("betti", "rational Betti numbers");
    c_betti->add_option("file", file)->required();
    c_betti->add_option("--xi", xi_text, "covector as comma-separated integers");

    CLI::App* c_isom = app.add_subcommand("isom", "decide isomorphism of two files");
    c_isom->add_option("file_a", file)->required();
    c_isom->add_option("file_b", file_b)->required();
    c_isom->add_option("--group", group_text, "equivalence group")
        ->check(CLI::IsMember({"sl", "gl"}))
        ->capture_default_str();

    CLI::App* c_delzant = app.add_subcommand("delzant", "emit the reduction construction");
    c_delzant->add_option("file", file)->required();

    CLI::App* c_verify = app.add_subcommand("verify", "check the construction numerically");
    c_verify->add_option("file", file)->required();
    c_verify->add_option("--samples", samples, "points to sample on the level set")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    c_verify->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    c_verify->add_option("--tol", tol_text, "tolerance (decimal or p/q)")->capture_default_str();

    CLI::App* c_report = app.add_subcommand("report", "aggregate report");
    c_report->add_option("file", file)->required();
    c_report->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        auto chosen = app.get_subcommands();
        out << (chosen.empty() ? app.help() : chosen.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (app.got_subcommand(c_validate)) {
            PolytopeSpec spec = parse_polytope_spec(cli_detail::read_file(file));
            ValidationReport report = validate(spec);
            print_validation(out, report);
            return report.pass ? 0 : 1;
        }

        if (app.got_subcommand(c_faces)) {
            WeightedPolytope w = parse_polytope(cli_detail::read_file(file));
            auto faces = face_lattice(w.base);
            out << faces.size() << " faces\n";
            for (const Face& f : faces) {
                out << "  dim " << f.dim << " active " << format_active(f.active)
                    << " vertices [";
                for (std::size_t i = 0; i < f.vertex_indices.size(); ++i)
                    out << (i ? " " : "") << f.vertex_indices[i];
                out << "]\n";
            }
            return 0;
        }

        if (app.got_subcommand(c_groups)) {
            WeightedPolytope w = parse_polytope(cli_detail::read_file(file));
            print_groups(out, w);
            return 0;
        }

        if (app.got_subcommand(c_betti)) {
            WeightedPolytope w = parse_polytope(cli_detail::read_file(file));
            std::optional<IntVec> xi;
            if (!xi_text.empty()) xi = cli_detail::parse_xi(xi_text);
            BettiProfile profile = betti_numbers(w, xi);
            out << betti_line(profile) << "\n";
            out << "xi = " << vec_str(profile.xi_used) << "\n";
            return 0;
        }

        if (app.got_subcommand(c_isom)) {
            WeightedPolytope a = parse_polytope(cli_detail::read_file(file));
            WeightedPolytope b = parse_polytope(cli_detail::read_file(file_b));
            EquivGroup g = group_text == "gl" ? EquivGroup::GL : EquivGroup::SL;
            auto iso = isomorphic(a, b, g);
            if (!iso) {
                out << "not isomorphic\n";
                return 1;
            }
            out << "isomorphic\n";
            print_matrix(out, "L", iso->L);
            out << "c = " << vec_str(iso->c) << "\n";
            out << "sigma = [";
            for (std::size_t i = 0; i < iso->sigma.size(); ++i)
                out << (i ? " " : "") << iso->sigma[i];
            out << "]\n";
            return 0;
        }

        if (app.got_subcommand(c_delzant)) {
            WeightedPolytope w = parse_polytope(cli_detail::read_file(file));
            DelzantData d = build_delzant(w);
            print_delzant(out, d, w);
            return 0;
        }

        if (app.got_subcommand(c_verify)) {
            WeightedPolytope w = parse_polytope(cli_detail::read_file(file));
            double tol = cli_detail::parse_tol(tol_text);
            ConstructionVerification v = verify_construction(w, samples, seed, tol);
            out << "recompute_image: " << (v.image_ok ? "ok" : "MISMATCH") << "\n";
            out << "vertex preimages: strictly positive, roundtrip error "
                << v.samples.max_vertex_roundtrip << "\n";
            out << "samples: " << v.samples.accepted << " accepted, max violation "
                << v.samples.max_violation << " (tol " << tol << ")\n";
            out << "verify: " << (v.pass ? "PASS" : "FAIL") << "\n";
            return v.pass ? 0 : 1;
        }

        if (app.got_subcommand(c_report)) {
            WeightedPolytope w = parse_polytope(cli_detail::read_file(file));
            if (format == "json")
                out << report_json(w).dump(2) << "\n";
            else
                print_report_text(out, w);
            return 0;
        }
    } catch (const internal_error& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "unexpected error: " << e.what() << "\n";
        return 3;
    }
    return 2;  // unreachable: a subcommand is required
}

}  // namespace toric
