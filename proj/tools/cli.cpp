#include "cli.hpp"

#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weave/census.hpp"
#include "weave/formats.hpp"
#include "weave/hyperbolicity.hpp"
#include "weave/isotopy.hpp"

namespace weave {

namespace {

using nlohmann::json;

json moves_json(const MoveSequence& moves) {
    auto arr = json::array();
    for (const Move& mv : moves) arr.push_back(to_string(mv));
    return arr;
}

void print_moves(std::ostream& out, const MoveSequence& moves) {
    for (const Move& mv : moves) out << to_string(mv) << "\n";
}

json layers_json(const LayerVerdict& v) {
    auto layers = json::array();
    for (const auto& layer : v.layers) {
        auto one = json::array();
        for (const ComponentId& id : layer) one.push_back(to_string(id));
        layers.push_back(std::move(one));
    }
    return layers;
}

void print_layers(std::ostream& out, const LayerVerdict& v) {
    for (std::size_t l = 0; l < v.layers.size(); ++l) {
        out << "layer " << l + 1 << (l == 0 ? " (bottom):" : ":");
        for (const ComponentId& id : v.layers[l]) out << " " << to_string(id);
        out << "\n";
    }
}

const char* verdict_name(HyperbolicityVerdict::Kind kind) {
    switch (kind) {
        case HyperbolicityVerdict::Kind::Hyperbolic: return "hyperbolic";
        case HyperbolicityVerdict::Kind::NotHyperbolicLayered: return "not-hyperbolic-layered";
        case HyperbolicityVerdict::Kind::NotHyperbolicParallel: return "not-hyperbolic-parallel";
        case HyperbolicityVerdict::Kind::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

json census_json(const CensusRow& r) {
    return json{{"m", r.m},
                {"n", r.n},
                {"total", r.total},
                {"n_hyp", r.n_hyp},
                {"n_nc", r.n_nc},
                {"classes_isotopy", r.classes_isotopy},
                {"classes_isotopy_hyp", r.classes_isotopy_hyp},
                {"classes_homeo_hyp", r.classes_homeo_hyp},
                {"upper_bound", r.upper_bound},
                {"lower_bound", r.lower_bound}};
}

json piece_json(const JsjPiece& piece) {
    json j;
    auto ids = [](const std::vector<std::optional<ComponentId>>& slots) {
        auto arr = json::array();
        for (const auto& id : slots) {
            if (id)
                arr.push_back(to_string(*id));
            else
                arr.push_back(nullptr);  // core of a collapsed family
        }
        return arr;
    };
    switch (piece.type) {
        case JsjPiece::Type::HyperbolicWeave:
            j["type"] = "hyperbolic-weave";
            j["matrix"] = to_text(piece.matrix);
            j["warps"] = ids(piece.warp_ids);
            j["wefts"] = ids(piece.weft_ids);
            break;
        case JsjPiece::Type::AxisOnlyWeave:
            j["type"] = "axis-only-weave";
            j["m"] = piece.matrix.warps();
            j["n"] = piece.matrix.wefts();
            j["warps"] = ids(piece.warp_ids);
            j["wefts"] = ids(piece.weft_ids);
            break;
        case JsjPiece::Type::SolidTorusParallelFamily: {
            j["type"] = "solid-torus-parallel-family";
            j["kind"] = piece.family_kind == ComponentKind::Warp ? "warp" : "weft";
            j["multiplicity"] = piece.multiplicity;
            auto members = json::array();
            for (const ComponentId& id : piece.members) members.push_back(to_string(id));
            j["members"] = std::move(members);
            break;
        }
    }
    return j;
}

void print_piece(std::ostream& out, const JsjPiece& piece) {
    auto slot_list = [&out](const std::vector<std::optional<ComponentId>>& slots) {
        for (const auto& id : slots) out << " " << (id ? to_string(*id) : std::string("core"));
    };
    switch (piece.type) {
        case JsjPiece::Type::HyperbolicWeave:
            out << "hyperbolic weave " << piece.matrix.warps() << "x" << piece.matrix.wefts()
                << " [" << to_text(piece.matrix) << "]:";
            slot_list(piece.warp_ids);
            slot_list(piece.weft_ids);
            break;
        case JsjPiece::Type::AxisOnlyWeave:
            out << "axis weave " << piece.matrix.warps() << "x" << piece.matrix.wefts() << ":";
            slot_list(piece.warp_ids);
            slot_list(piece.weft_ids);
            break;
        case JsjPiece::Type::SolidTorusParallelFamily:
            out << "solid torus: " << piece.multiplicity << " parallel "
                << (piece.family_kind == ComponentKind::Warp ? "warps" : "wefts") << ":";
            for (const ComponentId& id : piece.members) out << " " << to_string(id);
            break;
    }
    out << "\n";
}

struct CliOptions {
    std::string matrix_a, matrix_b;
    std::size_t cap = kDefaultOrbitCap;
    bool with_json = false;
    bool with_witness = false;
    std::string csv_path;
    int jobs = 0;
    int census_m = 0, census_n = 0;
    std::string render_style = "ascii";
    std::string gen_family;
    std::vector<int> gen_params;
};

WeaveDocument generate(const CliOptions& opt) {
    const auto& p = opt.gen_params;
    if (opt.gen_family == "plain") {
        if (p.size() != 2) throw std::invalid_argument("usage: gen plain <m> <n>");
        return plain(p[0], p[1]);
    }
    if (opt.gen_family == "twill") {
        if (p.size() != 4) throw std::invalid_argument("usage: gen twill <m> <n> <over> <under>");
        return twill(p[0], p[1], p[2], p[3]);
    }
    if (opt.gen_family == "satin") {
        if (p.size() != 2) throw std::invalid_argument("usage: gen satin <n> <step>");
        return satin(p[0], p[1]);
    }
    throw std::invalid_argument("unknown family '" + opt.gen_family +
                                "' (expected plain, twill, or satin)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"weave: isotopy, hyperbolicity, and census of doubly periodic weaves"};
    app.require_subcommand(1);
    CliOptions opt;

    auto add_json = [&opt](CLI::App* sub) { sub->add_flag("--json", opt.with_json, "JSON output"); };
    auto add_cap = [&opt](CLI::App* sub) {
        sub->add_option("--cap", opt.cap, "orbit state budget")->capture_default_str();
    };

    CLI::App* canon = app.add_subcommand("canon", "canonical form of a diagram");
    canon->add_option("matrix", opt.matrix_a, "diagram, e.g. 01/10")->required();
    add_cap(canon);
    add_json(canon);

    CLI::App* homeo = app.add_subcommand("homeo-canon", "canonical form up to homeomorphism");
    homeo->add_option("matrix", opt.matrix_a)->required();
    add_cap(homeo);
    add_json(homeo);

    CLI::App* isotopic = app.add_subcommand("isotopic", "decide isotopy of two diagrams");
    isotopic->add_option("matrixA", opt.matrix_a)->required();
    isotopic->add_option("matrixB", opt.matrix_b)->required();
    isotopic->add_flag("--witness", opt.with_witness, "print a move sequence");
    add_cap(isotopic);
    add_json(isotopic);

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "enumerate the move orbit");
    orbit_cmd->add_option("matrix", opt.matrix_a)->required();
    orbit_cmd->add_flag("--witness", opt.with_witness, "moves to the canonical member");
    add_cap(orbit_cmd);
    add_json(orbit_cmd);

    CLI::App* hyp = app.add_subcommand("hyperbolic", "decide hyperbolicity");
    hyp->add_option("matrix", opt.matrix_a)->required();
    hyp->add_flag("--witness", opt.with_witness, "print the obstruction witness");
    add_json(hyp);

    CLI::App* layered_cmd = app.add_subcommand("layered", "decide layeredness");
    layered_cmd->add_option("matrix", opt.matrix_a)->required();
    add_json(layered_cmd);

    CLI::App* decomp = app.add_subcommand("decompose", "torus decomposition of the complement");
    decomp->add_option("matrix", opt.matrix_a)->required();
    add_json(decomp);

    CLI::App* census_cmd = app.add_subcommand("census", "exhaustive statistics for one shape");
    census_cmd->add_option("m", opt.census_m, "number of warps")->required();
    census_cmd->add_option("n", opt.census_n, "number of wefts")->required();
    census_cmd->add_option("--csv", opt.csv_path, "also write a CSV file");
    census_cmd->add_option("--jobs", opt.jobs, "worker threads (0 = all cores)");
    add_json(census_cmd);

    CLI::App* render_cmd = app.add_subcommand("render", "draw the diagram");
    render_cmd->add_option("matrix", opt.matrix_a)->required();
    render_cmd->add_option("--style", opt.render_style, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));
    add_json(render_cmd);

    CLI::App* gen = app.add_subcommand("gen", "generate a named weave family");
    gen->add_option("family", opt.gen_family, "plain | twill | satin")->required();
    gen->add_option("params", opt.gen_params, "family parameters");
    add_json(gen);

    std::vector<const char*> argv{"weave"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (canon->parsed() || homeo->parsed()) {
            const CrossingMatrix M = from_text(opt.matrix_a);
            const CanonicalForm cf = canon->parsed() ? canonical_form(M, opt.cap)
                                                     : homeo_canonical_form(M, opt.cap);
            if (opt.with_json) {
                out << json{{"canonical", cf.canonical}, {"class_size", cf.class_size}}.dump()
                    << "\n";
            } else {
                out << cf.canonical << "\n";
            }
        } else if (isotopic->parsed()) {
            const CrossingMatrix A = from_text(opt.matrix_a);
            const CrossingMatrix B = from_text(opt.matrix_b);
            const bool same = is_isotopic(A, B, opt.cap);
            json j{{"isotopic", same}};
            if (!opt.with_json) out << (same ? "isotopic" : "not isotopic") << "\n";
            if (same && opt.with_witness) {
                const MoveSequence moves = isotopy_witness(A, B, opt.cap);
                if (opt.with_json)
                    j["moves"] = moves_json(moves);
                else
                    print_moves(out, moves);
            }
            if (opt.with_json) out << j.dump() << "\n";
        } else if (orbit_cmd->parsed()) {
            const CrossingMatrix M = from_text(opt.matrix_a);
            const Orbit orb = orbit(M, opt.cap);
            const std::size_t canonical = orb.canonical_index();
            json j{{"canonical", to_text(orb.member(canonical))}, {"orbit_size", orb.size()}};
            if (!opt.with_json) {
                out << "size: " << orb.size() << "\n";
                out << "canonical: " << to_text(orb.member(canonical)) << "\n";
            }
            if (opt.with_witness) {
                const MoveSequence moves = orb.witness_to(canonical);
                if (opt.with_json)
                    j["moves"] = moves_json(moves);
                else
                    print_moves(out, moves);
            }
            if (opt.with_json) out << j.dump() << "\n";
        } else if (hyp->parsed()) {
            const CrossingMatrix M = from_text(opt.matrix_a);
            const HyperbolicityVerdict v = is_hyperbolic(M);
            if (opt.with_json) {
                json j{{"verdict", verdict_name(v.kind)},
                       {"volume_upper_bound", volume_upper_bound(M)}};
                if (v.layering) {
                    j["witness"] = json{{"kind", "layered"}, {"layers", layers_json(*v.layering)}};
                } else if (v.parallel) {
                    j["witness"] = json{
                        {"kind", v.parallel->kind == ComponentKind::Warp ? "warp" : "weft"},
                        {"indices", {v.parallel->first + 1, v.parallel->second + 1}},
                        {"moves", moves_json(v.parallel->moves)}};
                }
                out << j.dump() << "\n";
            } else {
                switch (v.kind) {
                    case HyperbolicityVerdict::Kind::Hyperbolic: out << "hyperbolic\n"; break;
                    case HyperbolicityVerdict::Kind::NotHyperbolicLayered:
                        out << "not hyperbolic: layered\n";
                        break;
                    case HyperbolicityVerdict::Kind::NotHyperbolicParallel:
                        out << "not hyperbolic: parallel components\n";
                        break;
                    case HyperbolicityVerdict::Kind::NotApplicable:
                        out << "not applicable (degenerate weave)\n";
                        break;
                }
                if (opt.with_witness) {
                    if (v.layering) print_layers(out, *v.layering);
                    if (v.parallel) {
                        const char* kind =
                            v.parallel->kind == ComponentKind::Warp ? "warps" : "wefts";
                        out << "parallel " << kind << ": " << v.parallel->first + 1 << " and "
                            << v.parallel->second + 1 << "\n";
                        print_moves(out, v.parallel->moves);
                    }
                }
            }
        } else if (layered_cmd->parsed()) {
            const CrossingMatrix M = from_text(opt.matrix_a);
            const LayerVerdict v = is_layered(M);
            if (opt.with_json) {
                out << json{{"layered", v.layered}, {"layers", layers_json(v)}}.dump() << "\n";
            } else {
                out << (v.layered ? "layered" : "not layered") << "\n";
                if (v.layered) print_layers(out, v);
            }
        } else if (decomp->parsed()) {
            const CrossingMatrix M = from_text(opt.matrix_a);
            const JsjReport report = jsj_report(M);
            if (opt.with_json) {
                auto pieces = json::array();
                for (const JsjPiece& piece : report.pieces) pieces.push_back(piece_json(piece));
                out << json{{"pieces", pieces}}.dump() << "\n";
            } else {
                for (const JsjPiece& piece : report.pieces) print_piece(out, piece);
            }
        } else if (census_cmd->parsed()) {
            const CensusRow row = census(opt.census_m, opt.census_n, opt.jobs);
            if (!opt.csv_path.empty()) {
                std::ofstream file(opt.csv_path);
                if (!file) throw std::runtime_error("cannot open " + opt.csv_path);
                file << census_csv_header() << "\n" << census_csv_line(row) << "\n";
            }
            if (opt.with_json) {
                out << census_json(row).dump() << "\n";
            } else {
                out << census_csv_header() << "\n" << census_csv_line(row) << "\n";
            }
        } else if (render_cmd->parsed()) {
            const WeaveDocument doc = parse_text(opt.matrix_a);
            const RenderStyle style =
                opt.render_style == "svg" ? RenderStyle::Svg : RenderStyle::Ascii;
            const std::string bytes = render(doc, style);
            if (opt.with_json) {
                out << json{{"style", opt.render_style}, {"output", bytes}}.dump() << "\n";
            } else {
                out << bytes;
                if (style == RenderStyle::Ascii) out << "\n";
            }
        } else if (gen->parsed()) {
            const WeaveDocument doc = generate(opt);
            if (opt.with_json) {
                out << to_json(doc) << "\n";
            } else {
                out << serialize_text(doc) << "\n";
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace weave
