// Command-line front end: JSON in, deterministic JSON (or ASCII/SVG) out.
//
// Exit codes: 0 success, 2 parse or schema error, 3 rank too large,
// 4 size mismatch, 5 invalid class-field data, 6 oracle mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "spinor/blocks.hpp"
#include "spinor/classfield.hpp"
#include "spinor/gamma.hpp"
#include "spinor/json_io.hpp"
#include "spinor/lattice_oracle.hpp"
#include "spinor/render.hpp"

namespace {

using spinor::Json;

struct CommonOptions {
    std::string input_path;
    std::string inline_json;
    std::string format = "json";
    bool echo = false;
};

Json load_input(const CommonOptions& opts) {
    std::string text;
    if (!opts.inline_json.empty()) {
        text = opts.inline_json;
    } else if (!opts.input_path.empty()) {
        std::ifstream in(opts.input_path);
        if (!in) throw spinor::ParseError("cannot open input file '" + opts.input_path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    } else {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    }
    Json parsed = Json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw spinor::ParseError("input is not valid JSON");
    return parsed;
}

void emit(const Json& out) { std::cout << out.dump(2) << '\n'; }

int run_orbit(const CommonOptions& opts, const std::string& perm_text) {
    const Json input = load_input(opts);
    const spinor::GammaClass x = spinor::gamma_from_json(input);

    Json out;
    out["n"] = x.rank();
    out["class"] = x.brackets();
    out["total_length"] = x.total_length();
    out["star"] = x.star().brackets();
    out["symmetric"] = x.is_symmetric();
    out["totally_positive"] = spinor::normalize_totally_positive(x).first.brackets();

    const auto orbit = spinor::orbit(x);
    std::int64_t min_length = orbit.front().total_length();
    for (const auto& y : orbit) min_length = std::min(min_length, y.total_length());
    Json orbit_list = Json::array();
    Json minimal = Json::array();
    for (const auto& y : orbit) {
        orbit_list.push_back(Json{{"b", y.brackets()}, {"total_length", y.total_length()}});
        if (y.total_length() == min_length) minimal.push_back(y.brackets());
    }
    out["orbit"] = std::move(orbit_list);
    out["orbit_size"] = out["orbit"].size();
    out["min_length_classes"] = std::move(minimal);

    if (!perm_text.empty()) {
        const auto sigma = spinor::Permutation::from_cycles(perm_text, x.rank());
        out["permutation"] = perm_text;
        out["image"] = spinor::act(sigma, x).brackets();
    }
    if (opts.echo) out["input"] = input;

    if (opts.format == "ascii") {
        std::cout << "class " << x << "  length " << x.total_length()
                  << (x.is_symmetric() ? "  symmetric" : "") << '\n';
        for (const auto& entry : out["orbit"]) {
            std::cout << "  " << entry["b"].dump() << "  length " << entry["total_length"] << '\n';
        }
        if (out.contains("image")) {
            std::cout << "image under " << perm_text << ": " << out["image"].dump() << '\n';
        }
        return 0;
    }
    if (opts.format != "json") {
        throw spinor::ParseError("orbit supports formats json and ascii");
    }
    emit(out);
    return 0;
}

int run_local(const CommonOptions& opts) {
    const Json input = load_input(opts);
    spinor::GammaClass x = spinor::gamma_from_json(input);

    bool normalized = false;
    if (!x.is_totally_positive()) {
        x = spinor::normalize_totally_positive(x).first;
        normalized = true;
        std::cerr << "note: input normalized to the totally positive representative " << x << '\n';
    }
    const spinor::GeoType type(x);
    const spinor::GridBlock block = spinor::geo_block(type);

    Json out;
    out["n"] = x.rank();
    out["type"] = x.brackets();
    out["normalized"] = normalized;
    out["symmetric"] = x.is_symmetric();
    out["total_distance"] = x.total_distance();
    out["total_length"] = x.total_length();
    out["line_type"] = spinor::is_line_type(type);
    out["block"] = Json{{"bounds", block.bounds().brackets()},
                        {"vertex_count", block.vertex_count()}};
    out["local_spinor_image_index"] = spinor::local_spinor_image(type);
    if (opts.echo) out["input"] = input;

    if (opts.format == "ascii") {
        emit(out);
        std::cout << spinor::render_block_ascii(spinor::Block(block));
        return 0;
    }
    if (opts.format == "svg") {
        std::cout << spinor::render_block_svg(spinor::Block(block));
        return 0;
    }
    emit(out);
    return 0;
}

int run_embed(const CommonOptions& opts, std::optional<std::int64_t> bound) {
    const Json input = load_input(opts);
    if (!input.is_object() || !input.contains("host") || !input.contains("guest")) {
        throw spinor::ParseError("embed input needs 'host' and 'guest'");
    }
    const spinor::Block host = spinor::block_from_json(input.at("host"));
    spinor::GammaClass guest_class = spinor::gamma_from_json(input.at("guest"));
    if (!guest_class.is_totally_positive()) {
        guest_class = spinor::normalize_totally_positive(guest_class).first;
        std::cerr << "note: guest normalized to " << guest_class << '\n';
    }
    const spinor::GeoType guest(guest_class);

    const auto found = spinor::placements(host, guest, bound);
    const auto image = spinor::relative_spinor_image(host, guest, bound);

    Json out;
    out["host"] = spinor::block_to_json(host);
    out["guest"] = guest_class.brackets();
    out["placements"] = spinor::placements_to_json(found);
    out["count"] = found.size();
    out["embeds"] = !found.empty();
    out["image"] = spinor::coset_set_to_json(image);
    if (opts.echo) out["input"] = input;

    if (opts.format == "ascii") {
        emit(out);
        std::cout << spinor::render_placements_ascii(host, found);
        return 0;
    }
    if (opts.format == "svg") {
        std::cout << spinor::render_block_svg(host);
        return 0;
    }
    emit(out);
    return 0;
}

int run_global(const CommonOptions& opts, const std::string& label_base) {
    const Json input = load_input(opts);
    const spinor::GenusInput genus = spinor::genus_input_from_json(input);

    const spinor::Quotient s0 = spinor::sigma0(genus);
    const spinor::Quotient s = spinor::sigma(genus);

    Json out;
    out["eichler_condition"] = spinor::eichler_condition(genus);
    out["sigma0"] = spinor::quotient_to_json(s0);
    out["sigma"] = spinor::quotient_to_json(s);
    out["index_sigma0_over_sigma"] = s0.group().order() / s.group().order();
    out["spinor_genera"] = s.group().order();

    std::optional<spinor::LabeledComplex> complex;
    if (!label_base.empty()) {
        const auto base = spinor::element_for_letter(s0.group(), label_base);
        complex = spinor::label_complex(genus, base);
        Json c = spinor::labeled_complex_to_json(*complex);
        for (auto& vertex : c["vertices"]) {
            vertex["letter"] = spinor::element_letter(
                s0.group(), vertex["label"].get<spinor::AbelianGroup::Element>());
        }
        out["complex"] = std::move(c);
    }
    if (opts.echo) out["input"] = input;

    if (opts.format == "ascii") {
        emit(out);
        if (complex) std::cout << spinor::render_labeled_ascii(*complex);
        return 0;
    }
    if (opts.format == "svg") {
        if (!complex) throw spinor::ParseError("svg output needs --label");
        std::cout << spinor::render_labeled_svg(*complex);
        return 0;
    }
    emit(out);
    return 0;
}

int run_oracle(const CommonOptions& opts) {
    const Json input = load_input(opts);
    spinor::OracleReport report;
    if (input.contains("sweep")) {
        const Json& sweep = input.at("sweep");
        std::vector<int> ranks;
        for (const auto& r : sweep.at("ranks")) ranks.push_back(r.get<int>());
        std::vector<std::int64_t> primes;
        for (const auto& p : sweep.at("primes")) primes.push_back(p.get<std::int64_t>());
        const auto max_entry = sweep.at("max_entry").get<std::int64_t>();
        report = spinor::cross_check_sweep(ranks, max_entry, primes);
    } else {
        const auto type = spinor::GeoType(spinor::gamma_from_json(input));
        const auto p = input.at("p").get<std::int64_t>();
        report = spinor::cross_check_geo(type, p);
    }
    Json out = spinor::oracle_report_to_json(report);
    if (opts.echo) out["input"] = input;
    emit(out);
    return report.ok() ? 0 : 6;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial invariants of generalized Eichler orders and their spinor class fields"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string perm_text;
    std::string label_base;
    std::optional<std::int64_t> bound;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", opts.input_path, "path of the JSON input");
        cmd->add_option("--json", opts.inline_json, "inline JSON input");
        cmd->add_option("--format", opts.format, "output format: json, ascii or svg")
            ->check(CLI::IsMember({"json", "ascii", "svg"}));
        cmd->add_flag("--echo", opts.echo, "echo the parsed input in the output");
    };

    CLI::App* orbit = app.add_subcommand("orbit", "orbit, star and normal form of a vertex class");
    add_common(orbit);
    orbit->add_option("--perm", perm_text, "permutation in cycle notation, e.g. \"(1 2)(3 4 5)\"");

    CLI::App* local = app.add_subcommand("local", "block and local invariants of a GEO type");
    add_common(local);

    CLI::App* embed = app.add_subcommand("embed", "placements of a GEO type inside a block");
    add_common(embed);
    std::int64_t bound_value = -1;
    embed->add_option("--bound", bound_value, "shift bound for commutative hosts");

    CLI::App* global = app.add_subcommand("global", "spinor class fields of a genus");
    add_common(global);
    global->add_option("--label", label_base, "label the order complex, starting at this letter");

    CLI::App* oracle = app.add_subcommand("oracle", "cross-check blocks against the lattice oracle");
    add_common(oracle);

    CLI11_PARSE(app, argc, argv);

    try {
        if (orbit->parsed()) return run_orbit(opts, perm_text);
        if (local->parsed()) return run_local(opts);
        if (embed->parsed()) {
            if (bound_value >= 0) bound = bound_value;
            return run_embed(opts, bound);
        }
        if (global->parsed()) return run_global(opts, label_base);
        if (oracle->parsed()) return run_oracle(opts);
    } catch (const spinor::RankTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const spinor::SizeMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const spinor::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const spinor::LengthMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const spinor::InvalidGeoType& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const spinor::MissingGeoType& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const spinor::UnknownPlace& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const spinor::NotLocallySymmetric& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const spinor::ElementOutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const spinor::ModulusMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const spinor::EmptySet& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const spinor::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const spinor::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
