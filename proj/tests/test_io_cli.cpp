#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "spinor/json_io.hpp"
#include "spinor/render.hpp"

using namespace spinor;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

/// Runs the CLI named by SPINOR_CLI; tests are skipped when it is not set.
const char* cli_path() { return std::getenv("SPINOR_CLI"); }

RunResult run_cli(const std::string& args) {
    RunResult result;
    const std::string command = std::string(cli_path()) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("json round trips") {
    SUBCASE("gamma classes") {
        const GammaClass x(5, {1, -2, 3, 0});
        CHECK(gamma_from_json(gamma_to_json(x)) == x);
        CHECK_THROWS_AS(gamma_from_json(Json{{"n", 3}}), ParseError);
        CHECK_THROWS_AS(gamma_from_json(Json{{"n", 3}, {"b", {1}}}), ParseError);
        CHECK_THROWS_AS(gamma_from_json(Json{{"n", 3}, {"b", {1, "x"}}}), ParseError);
    }
    SUBCASE("blocks") {
        const Block grid = geo_block(GeoType::from_brackets(3, {2, 1}));
        const Block round = block_from_json(block_to_json(grid));
        CHECK(std::get<GridBlock>(round).bounds() == std::get<GridBlock>(grid).bounds());

        const Block comm = comm_block(CommAlgebra({{2, 1}, {1, 1}}));
        const Block round2 = block_from_json(block_to_json(comm));
        CHECK(std::get<CommBlock>(round2).algebra() == std::get<CommBlock>(comm).algebra());

        CHECK_THROWS_AS(block_from_json(Json{{"n", 3}, {"b", {-1, 0}}}), ParseError);
    }
    SUBCASE("matrices") {
        DvrMatrix m(2, 2, 3);
        m.set(0, 0, LocalizedRational(5, 2, 3));
        m.set(1, 1, LocalizedRational::integer(-9, 3));
        const DvrMatrix round = dvr_matrix_from_json(dvr_matrix_to_json(m));
        CHECK(round == m);
        const Json j = dvr_matrix_to_json(m);
        CHECK(j["entries"][0][0] == "5/2");
    }
    SUBCASE("genus inputs") {
        const Json j = {
            {"n", 2},
            {"group", {2, 2}},
            {"places",
             {{{"id", "p1"},
               {"kind", "finite"},
               {"frobenius", {1, 0}},
               {"capacity", 2},
               {"geo_type", {{"n", 2}, {"b", {3}}}}},
              {{"id", "v"},
               {"kind", "real"},
               {"frobenius", {0, 1}},
               {"capacity", 2},
               {"geo_type", nullptr}}}},
            {"arch_flags", {"ramified", "unramified"}}};
        const GenusInput input = genus_input_from_json(j);
        CHECK(input.places.size() == 2);
        CHECK(input.places[0].geo_type.has_value());
        CHECK_FALSE(input.places[1].geo_type.has_value());
        CHECK(input.arch_unramified == std::vector<bool>{false, true});
        CHECK(genus_input_from_json(genus_input_to_json(input)).places.size() == 2);

        Json bad = j;
        bad["places"][0]["capacity"] = 3;
        CHECK_THROWS_AS(genus_input_from_json(bad), ParseError);
        Json bad_rank = j;
        bad_rank["places"][0]["geo_type"] = Json{{"n", 3}, {"b", {1, 1}}};
        CHECK_THROWS_AS(genus_input_from_json(bad_rank), InvalidGeoType);
    }
}

TEST_CASE("group element letters") {
    const AbelianGroup g({2, 4});
    CHECK(element_letter(g, {0, 0}) == "A");
    CHECK(element_letter(g, {0, 1}) == "B");
    CHECK(element_letter(g, {1, 0}) == "E");
    CHECK(element_for_letter(g, "E") == AbelianGroup::Element{1, 0});
    CHECK_THROWS_AS(element_for_letter(g, "Z"), ParseError);
    CHECK_THROWS_AS(element_for_letter(g, "?"), ParseError);
}

TEST_CASE("ascii rendering") {
    const Block grid = geo_block(GeoType::from_brackets(3, {3, 1}));
    const std::string picture = render_block_ascii(grid);
    CHECK(picture == "o---o---o---o\n| \\ | \\ | \\ |\no---o---o---o\n");

    const Block strip = comm_block(CommAlgebra({{2, 1}, {1, 1}}));
    const std::string strip_picture = render_block_ascii(strip, 2);
    CHECK(strip_picture.find('o') != std::string::npos);
    CHECK(strip_picture.find('.') != std::string::npos);

    const Block path = geo_block(GeoType::from_brackets(2, {2}));
    CHECK(render_block_ascii(path) == "o---o---o\n");

    CHECK_THROWS_AS(render_block_ascii(geo_block(GeoType::from_brackets(4, {1, 1, 1}))),
                    RankTooLarge);

    const std::string svg = render_block_svg(grid);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
}

TEST_CASE("command line interface" * doctest::skip(cli_path() == nullptr)) {
    SUBCASE("deterministic output") {
        const std::string args = "orbit --json \"{\\\"n\\\":3,\\\"b\\\":[2,1]}\"";
        const auto first = run_cli(args);
        const auto second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);
        CHECK(first.output.find("\"orbit_size\": 6") != std::string::npos);
    }
    SUBCASE("echo round trip") {
        const auto result = run_cli("local --json \"{\\\"n\\\":2,\\\"b\\\":[1]}\" --echo");
        CHECK(result.exit_code == 0);
        const Json out = Json::parse(result.output);
        CHECK(out["input"] == Json{{"n", 2}, {"b", {1}}});
        CHECK(out["local_spinor_image_index"] == 1);
    }
    SUBCASE("exit codes") {
        CHECK(run_cli("orbit --json \"not json\"").exit_code == 2);
        CHECK(run_cli("orbit --json \"{\\\"n\\\":9,\\\"b\\\":[1,1,1,1,1,1,1,1]}\"").exit_code == 3);
        CHECK(run_cli("embed --json \"{\\\"host\\\":{\\\"n\\\":3,\\\"b\\\":[1,1]},"
                      "\\\"guest\\\":{\\\"n\\\":2,\\\"b\\\":[1]}}\"")
                  .exit_code == 4);
        CHECK(run_cli("oracle --json \"{\\\"n\\\":2,\\\"b\\\":[2],\\\"p\\\":3}\"").exit_code == 0);
    }
    SUBCASE("global subcommand emits both class fields") {
        const std::string input =
            "{\\\"n\\\":2,\\\"group\\\":[2,2],\\\"places\\\":[{\\\"id\\\":\\\"p1\\\","
            "\\\"kind\\\":\\\"finite\\\",\\\"frobenius\\\":[1,0],\\\"capacity\\\":2,"
            "\\\"geo_type\\\":{\\\"n\\\":2,\\\"b\\\":[3]}}],\\\"arch_flags\\\":[\\\"unramified\\\"]}";
        const auto result = run_cli("global --json \"" + input + "\"");
        CHECK(result.exit_code == 0);
        const Json out = Json::parse(result.output);
        CHECK(out["sigma0"]["order"] == 4);
        CHECK(out["sigma"]["order"] == 2);
        CHECK(out["index_sigma0_over_sigma"] == 2);
    }
}
