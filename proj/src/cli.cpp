#include "sdmap/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdmap/antipodal.hpp"
#include "sdmap/derived.hpp"
#include "sdmap/duality.hpp"
#include "sdmap/error.hpp"
#include "sdmap/families.hpp"
#include "sdmap/io.hpp"
#include "sdmap/symmetry.hpp"

namespace sdmap {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct InputOptions {
    std::string in_path;
    std::vector<std::string> gen_spec;
    bool allow_nonspherical = false;
};

void add_input_options(CLI::App* cmd, InputOptions& input) {
    cmd->add_option("--in", input.in_path, "read a JSON map document (- for stdin)");
    cmd->add_option("--gen", input.gen_spec, "generate a map: wheel N | ear N | pancake N L | fixture NAME")
        ->expected(1, 3);
    cmd->add_flag("--allow-nonspherical", input.allow_nonspherical,
                  "accept maps with Euler characteristic != 2");
}

int parse_int(const std::string& text, const char* what) {
    try {
        size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        fail(Errc::BadParameter, std::string("expected an integer for ") + what + ", got '" +
                                     text + "'");
    }
}

CombinatorialMap generate(const std::vector<std::string>& spec) {
    if (spec.empty()) fail(Errc::BadParameter, "--gen needs a family name");
    const std::string& family = spec[0];
    if (family == "wheel") {
        if (spec.size() != 2) fail(Errc::BadParameter, "usage: --gen wheel N");
        return wheel(parse_int(spec[1], "wheel size"));
    }
    if (family == "ear") {
        if (spec.size() != 2) fail(Errc::BadParameter, "usage: --gen ear N");
        return ear(parse_int(spec[1], "ear size"));
    }
    if (family == "pancake") {
        if (spec.size() != 3) fail(Errc::BadParameter, "usage: --gen pancake N L");
        return pancake(parse_int(spec[1], "pancake size"), parse_int(spec[2], "pancake layers"));
    }
    if (family == "fixture") {
        if (spec.size() != 2) fail(Errc::BadParameter, "usage: --gen fixture NAME");
        return fixture(spec[1]);
    }
    fail(Errc::BadParameter, "unknown family '" + family + "'");
}

CombinatorialMap load_input(const InputOptions& input) {
    const bool has_file = !input.in_path.empty();
    const bool has_gen = !input.gen_spec.empty();
    if (has_file == has_gen)
        fail(Errc::BadParameter, "provide exactly one of --in or --gen");
    if (has_gen) return generate(input.gen_spec);
    std::string text;
    if (input.in_path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(input.in_path);
        if (!file) fail(Errc::BadParameter, "cannot open '" + input.in_path + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    return parse_map(text, input.allow_nonspherical);
}

void write_text(const std::string& out_path, const std::string& text, std::ostream& out) {
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) fail(Errc::BadParameter, "cannot write '" + out_path + "'");
    file << text;
}

ordered_json morphism_json(const MapMorphism& mor) {
    ordered_json node;
    node["dart_map"] = mor.dart_map;
    node["orientation"] = orientation_name(mor.orientation);
    return node;
}

ordered_json duality_json(const DualityWitness& w) {
    ordered_json node = morphism_json(w.morphism);
    node["vertex_to_face"] = w.vertex_to_face;
    node["face_to_vertex"] = w.face_to_vertex;
    node["edge_to_edge"] = w.edge_to_edge;
    node["involutive"] = w.involutive;
    node["strongly_involutive"] = w.strongly_involutive;
    return node;
}

ordered_json labeling_json(const InvolutiveLabeling& labeling) {
    ordered_json node;
    node["labels"] = labeling.labels;
    node["fixed_vertices"] = labeling.fixed_vertices;
    return node;
}

ordered_json element_json(const ElementRef& ref) {
    ordered_json node;
    node["kind"] = element_kind_name(ref.kind);
    node["index"] = ref.index;
    return node;
}

ordered_json map_summary_json(const CombinatorialMap& m) {
    ordered_json node;
    node["darts"] = m.dart_count();
    node["vertices"] = m.vertex_count();
    node["edges"] = m.edge_count();
    node["faces"] = m.face_count();
    node["euler"] = m.euler_characteristic();
    return node;
}

void emit_report(const ordered_json& report, bool json_mode, const std::string& human,
                 std::ostream& out) {
    if (json_mode) {
        out << report.dump(2) << "\n";
    } else {
        out << human;
    }
}

// ---- check subcommands ----------------------------------------------------

int check_self_dual(const CombinatorialMap& m, OrientationFilter filter, bool json_mode,
                    std::ostream& out) {
    const DerivedMap dm = dual(m);
    const auto isos = enumerate_isomorphisms(m, dm.map, filter);
    const auto autos = enumerate_automorphisms(m, filter);
    const bool verdict = !isos.empty();

    ordered_json report;
    report["command"] = "check self-dual";
    report["map"] = map_summary_json(m);
    report["verdict"] = verdict;
    report["duality_count"] = isos.size();
    report["automorphism_count"] = autos.size();
    if (verdict) report["witness"] = morphism_json(isos.front());

    std::ostringstream human;
    human << "self-dual: " << (verdict ? "yes" : "no") << "\n";
    human << "automorphisms: " << autos.size() << ", dualities: " << isos.size() << "\n";
    if (verdict) {
        human << "witness duality darts:";
        for (Dart d : isos.front().dart_map) human << " " << d;
        human << " (" << orientation_name(isos.front().orientation) << ")\n";
    }
    emit_report(report, json_mode, human.str(), out);
    return verdict ? kExitHolds : kExitFails;
}

int check_strong(const CombinatorialMap& m, bool json_mode, std::ostream& out) {
    const StrongInvolutivityResult result = is_strongly_involutive(m);

    ordered_json report;
    report["command"] = "check strong";
    report["map"] = map_summary_json(m);
    report["verdict"] = result.strongly_involutive;
    if (result.witness) report["witness"] = duality_json(*result.witness);

    std::ostringstream human;
    human << "strongly involutive: " << (result.strongly_involutive ? "yes" : "no") << "\n";
    if (result.witness) {
        human << "witness vertex->face:";
        for (int f : result.witness->vertex_to_face) human << " " << f;
        human << "\n";
    }
    emit_report(report, json_mode, human.str(), out);
    return result.strongly_involutive ? kExitHolds : kExitFails;
}

int check_antipodal(const CombinatorialMap& m, bool json_mode, std::ostream& out) {
    const AntipodalityResult result = is_antipodally_self_dual(m);
    const bool verdict = result.verdict == AntipodalVerdict::Antipodal;

    ordered_json report;
    report["command"] = "check antipodal";
    report["map"] = map_summary_json(m);
    report["verdict"] = verdict;
    report["status"] = antipodal_verdict_name(result.verdict);
    report["dualities"] = result.dualities_total;
    report["involutive_dualities"] = result.involutive_dualities;
    if (verdict) {
        report["witness"] = duality_json(*result.witness);
        report["incidence_automorphism"] = morphism_json(*result.incidence_automorphism);
        report["labeling"] = labeling_json(*result.labeling);
    } else if (result.verdict == AntipodalVerdict::SelfDualNotAntipodal) {
        ordered_json certificate;
        certificate["kind"] = "exhausted-dualities";
        certificate["detail"] = "all " + std::to_string(result.involutive_dualities) +
                                " involutive dualities extend with a fixed squares-graph vertex";
        ordered_json rejections = ordered_json::array();
        for (const RejectedDuality& r : result.rejections) {
            ordered_json item;
            item["duality_index"] = r.duality_index;
            item["involutive"] = r.involutive;
            if (r.first_fixed) item["first_fixed"] = element_json(*r.first_fixed);
            rejections.push_back(item);
        }
        certificate["rejections"] = rejections;
        report["certificate"] = certificate;
    }

    std::ostringstream human;
    human << "antipodally self-dual: " << (verdict ? "yes" : "no") << " ("
          << antipodal_verdict_name(result.verdict) << ")\n";
    if (verdict) {
        human << "witness duality darts:";
        for (Dart d : result.witness->morphism.dart_map) human << " " << d;
        human << "\nlabeling fixed vertices: none\n";
    } else if (result.verdict == AntipodalVerdict::SelfDualNotAntipodal) {
        human << "certificate: all " << result.involutive_dualities
              << " involutive dualities extend with a fixed squares-graph vertex\n";
    }
    emit_report(report, json_mode, human.str(), out);
    return verdict ? kExitHolds : kExitFails;
}

int check_obstruction(const CombinatorialMap& m, bool json_mode, std::ostream& out) {
    const ObstructionResult result = odd_edge_obstruction(m);

    ordered_json report;
    report["command"] = "check obstruction";
    report["map"] = map_summary_json(m);
    report["self_dual"] = result.self_dual;
    report["verdict"] = result.obstructed;
    if (result.obstructed) {
        report["witness_vertex"] = result.witness_vertex;
        report["corner_counts"] = result.corner_counts;
    }

    std::ostringstream human;
    human << "odd-edge obstruction: " << (result.obstructed ? "yes" : "no");
    if (!result.self_dual) human << " (map is not self-dual; verdict vacuous)";
    human << "\n";
    if (result.obstructed)
        human << "witness vertex: " << result.witness_vertex << "\n";
    emit_report(report, json_mode, human.str(), out);
    return result.obstructed ? kExitHolds : kExitFails;
}

int check_symmetric_cycles(const CombinatorialMap& m, int max_len, std::int64_t budget,
                           bool json_mode, std::ostream& out) {
    const DerivedMap inc = incidence(m);
    const SymmetricCycleLawReport summary = symmetric_cycle_law_report(m, max_len, budget);
    const SymmetricCycleEnumeration found = enumerate_symmetric_cycles(
        inc.map, max_len, budget, CycleWitnessPolicy::AnyAutomorphism);

    ordered_json report;
    report["command"] = "check symmetric-cycles";
    report["map"] = map_summary_json(m);
    report["incidence_map"] = map_summary_json(inc.map);
    report["antipodal_witness_lengths"] = summary.lengths;
    report["consistent"] = summary.consistent;
    report["any_witness_lengths"] = summary.any_witness_lengths;
    report["has_bad_any_witness_length"] = summary.has_bad_any_witness_length;
    report["budget_exceeded"] = summary.budget_exceeded;
    ordered_json cycles = ordered_json::array();
    for (const auto& w : found.witnesses) {
        ordered_json item;
        item["length"] = w.edges.size();
        item["edges"] = w.edges;
        item["automorphism"] = morphism_json(w.automorphism);
        cycles.push_back(item);
    }
    report["cycles"] = cycles;

    std::ostringstream human;
    human << "symmetric cycles in I(map), antipodal witnesses, lengths:";
    for (int len : summary.lengths) human << " " << len;
    human << "\nall witnesses, lengths:";
    for (int len : summary.any_witness_lengths) human << " " << len;
    human << "\nconsistent with length = 2 (mod 4): " << (summary.consistent ? "yes" : "no")
          << "\n";
    if (summary.budget_exceeded) human << "warning: search budget exceeded\n";
    emit_report(report, json_mode, human.str(), out);
    if (summary.budget_exceeded) return kExitBudget;
    return summary.consistent ? kExitHolds : kExitFails;
}

int check_antipodally_symmetric(const CombinatorialMap& m, bool json_mode, std::ostream& out) {
    const AntipodalSymmetryResult result = is_antipodally_symmetric(m);

    ordered_json report;
    report["command"] = "check antipodal-symmetric";
    report["map"] = map_summary_json(m);
    report["verdict"] = result.antipodally_symmetric;
    if (result.witness) report["witness"] = morphism_json(*result.witness);

    std::ostringstream human;
    human << "antipodally symmetric: " << (result.antipodally_symmetric ? "yes" : "no") << "\n";
    if (result.witness)
        human << "witness orientation: " << orientation_name(result.witness->orientation) << "\n";
    emit_report(report, json_mode, human.str(), out);
    return result.antipodally_symmetric ? kExitHolds : kExitFails;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"combinatorial sphere maps: derived maps, dualities, antipodality"};
    app.name("sdmap");
    app.require_subcommand(1);

    // gen -------------------------------------------------------------------
    auto* gen_app = app.add_subcommand("gen", "generate a family map");
    std::vector<std::string> gen_args;
    std::string gen_out;
    gen_app->add_option("family", gen_args, "wheel N | ear N | pancake N L | fixture NAME")
        ->expected(1, 3);
    gen_app->add_option("--out", gen_out, "output file (default stdout)");

    // derive ----------------------------------------------------------------
    auto* derive_app = app.add_subcommand("derive", "construct a derived map");
    std::string derive_what, derive_out, derive_format = "json";
    InputOptions derive_input;
    derive_app->add_option("what", derive_what, "dual | medial | incidence | square")->required();
    add_input_options(derive_app, derive_input);
    derive_app->add_option("--format", derive_format, "json | dot");
    derive_app->add_option("--out", derive_out, "output file, or literal 'dot'/'json'");

    // check -----------------------------------------------------------------
    auto* check_app = app.add_subcommand("check", "decide a property");
    std::string check_what;
    InputOptions check_input;
    bool check_json = false;
    int check_max_len = 0;
    std::int64_t check_budget = 1000000;
    std::string check_orientation = "both";
    check_app
        ->add_option("property", check_what,
                     "self-dual | strong | antipodal | obstruction | symmetric-cycles | "
                     "antipodal-symmetric")
        ->required();
    add_input_options(check_app, check_input);
    check_app->add_flag("--json", check_json, "emit the machine-readable JSON report");
    check_app->add_option("--max-len", check_max_len, "cap symmetric-cycle length (0 = unbounded)");
    check_app->add_option("--budget", check_budget, "cycle-search extensions per automorphism");
    check_app->add_option("--orientation", check_orientation,
                         "both | preserving | reversing (self-dual check)");

    // adhesion ---------------------------------------------------------------
    auto* adhesion_app = app.add_subcommand("adhesion", "glue a map with its dual at a corner");
    InputOptions adhesion_input;
    int adhesion_corner = 0;
    std::string adhesion_out;
    add_input_options(adhesion_app, adhesion_input);
    adhesion_app->add_option("--corner", adhesion_corner, "corner dart (default 0)");
    adhesion_app->add_option("--out", adhesion_out, "output file (default stdout)");

    // export -----------------------------------------------------------------
    auto* export_app = app.add_subcommand("export", "export a map");
    std::string export_format, export_out;
    InputOptions export_input;
    export_app->add_option("format", export_format, "dot")->required();
    add_input_options(export_app, export_input);
    export_app->add_option("--out", export_out, "output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitHolds;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen_app->parsed()) {
            const CombinatorialMap m = generate(gen_args);
            write_text(gen_out, serialize_map(m), out);
            return kExitHolds;
        }
        if (derive_app->parsed()) {
            const CombinatorialMap m = load_input(derive_input);
            DerivedMap derived;
            if (derive_what == "dual") derived = dual(m);
            else if (derive_what == "medial") derived = medial(m);
            else if (derive_what == "incidence") derived = incidence(m);
            else if (derive_what == "square") derived = square(m);
            else fail(Errc::BadParameter, "unknown derivation '" + derive_what + "'");

            std::string format = derive_format;
            std::string out_path = derive_out;
            if (out_path == "dot" || out_path == "json") {
                format = out_path;
                out_path.clear();
            }
            if (format == "dot") {
                write_text(out_path, to_dot(derived, derive_what), out);
            } else if (format == "json") {
                MapDocument doc;
                doc.map = derived.map;
                doc.vertex_labels = provenance_labels(derived);
                doc.metadata_json = std::string("{\"derived\":\"") + derive_what + "\"}";
                write_text(out_path, serialize_map_document(doc), out);
            } else {
                fail(Errc::BadParameter, "unknown format '" + format + "'");
            }
            return kExitHolds;
        }
        if (check_app->parsed()) {
            const CombinatorialMap m = load_input(check_input);
            if (check_what == "self-dual") {
                OrientationFilter filter = OrientationFilter::Both;
                if (check_orientation == "preserving") filter = OrientationFilter::Preserving;
                else if (check_orientation == "reversing") filter = OrientationFilter::Reversing;
                else if (check_orientation != "both")
                    fail(Errc::BadParameter, "unknown orientation '" + check_orientation + "'");
                return check_self_dual(m, filter, check_json, out);
            }
            if (check_what == "strong") return check_strong(m, check_json, out);
            if (check_what == "antipodal") return check_antipodal(m, check_json, out);
            if (check_what == "obstruction") return check_obstruction(m, check_json, out);
            if (check_what == "symmetric-cycles")
                return check_symmetric_cycles(m, check_max_len, check_budget, check_json, out);
            if (check_what == "antipodal-symmetric")
                return check_antipodally_symmetric(m, check_json, out);
            fail(Errc::BadParameter, "unknown property '" + check_what + "'");
        }
        if (adhesion_app->parsed()) {
            const CombinatorialMap m = load_input(adhesion_input);
            const CombinatorialMap glued = adhesion(m, corner_at(m, adhesion_corner));
            write_text(adhesion_out, serialize_map(glued), out);
            return kExitHolds;
        }
        if (export_app->parsed()) {
            if (export_format != "dot")
                fail(Errc::BadParameter, "unknown export format '" + export_format + "'");
            const CombinatorialMap m = load_input(export_input);
            write_text(export_out, to_dot(m), out);
            return kExitHolds;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    err << "no subcommand given\n";
    return kExitUsage;
}

} // namespace sdmap
