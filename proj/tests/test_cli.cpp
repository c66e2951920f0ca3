#include "dseries/cli.hpp"
#include "support.hpp"

using namespace dseries;
using nlohmann::json;
using testing::thrown_kind;

namespace {
cli::JobConfig config(const char* text) { return cli::parse_config(json::parse(text)); }
}  // namespace

TEST_CASE("describe A1 noncompact") {
    auto r = cli::run("describe", config(R"({"cartan": [[2]], "compact_simple": [false]})"));
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["q"] == 1);
    CHECK(j["weyl_order"] == 2);
    CHECK(j["weyl_k_order"] == 1);
    CHECK(j["closed_orbits"] == 2);
    CHECK(j["rho_n"] == json::array({"1"}));
}

TEST_CASE("validation failures exit 1 with an error object") {
    auto r = cli::run("describe", config(R"({"cartan": [[2, -3], [-3, 2]], "compact_simple": [true, true]})"));
    CHECK(r.exit_code == 1);
    CHECK(json::parse(r.output)["error"] == "NotFiniteType");
    r = cli::run("kostant", config(R"({"system": "A2", "lambda": ["1", "-3"]})"));
    CHECK(r.exit_code == 1);
    CHECK(json::parse(r.output)["error"] == "NotAntidominant");
    r = cli::run("frobnicate", config(R"({"system": "A1"})"));
    CHECK(json::parse(r.output)["error"] == "InvalidConfig");
    r = cli::run("schmid", config(R"({"system": "A1", "compact_simple": [false], "lambda": ["-2"], "orbit_index": 5})"));
    CHECK(r.exit_code == 1);
    CHECK(thrown_kind([] { config(R"({"system": "A1", "colour": 1})"); }) == "InvalidConfig");
    CHECK(thrown_kind([] { config(R"({"compact_simple": [true]})"); }) == "InvalidConfig");
}

TEST_CASE("config round trip is the identity on canonical form") {
    const char* texts[] = {
        R"({"cartan": [[2]], "compact_simple": [false], "lambda": ["-2"], "nu_box": {"lo": ["-9"], "hi": ["0"]}})",
        R"({"system": "A2", "compact_simple": [true, false], "lambda": [-1, "-2/2"], "orbit_index": 1,
            "format": "json", "verify": true, "threads": 4, "kind": "discrete"})",
        R"({"system": "B2"})",
    };
    for (const char* text : texts) {
        json canonical = cli::to_json(config(text));
        CHECK(cli::to_json(cli::parse_config(canonical)) == canonical);
        CHECK(cli::to_json(cli::parse_config(json::parse(canonical.dump()))).dump() == canonical.dump());
    }
    CHECK(cli::to_json(config(texts[1]))["lambda"] == json::array({"-1", "-1"}));
}

TEST_CASE("character output") {
    auto r = cli::run("character", config(R"({"system": "A1", "lambda": ["-1"], "kind": "numerator"})"));
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.output) == json::parse(R"([{"weight":["-1"],"coeff":1},{"weight":["3"],"coeff":-1}])"));
    r = cli::run("character", config(R"({"system": "A1", "compact_simple": [false], "lambda": ["-2"], "kind": "discrete"})"));
    CHECK(json::parse(r.output) == json::parse(R"({"q":1,"sign":-1,"terms":[{"weight":["-1"],"coeff":-1}]})"));
}

TEST_CASE("tables") {
    auto r = cli::run("schmid", config(R"({"system": "A1", "compact_simple": [false], "lambda": ["-2"], "orbit_index": 1})"));
    CHECK(r.output == "degree\tweight\n0\t3\n");
    r = cli::run("blattner", config(R"({"system": "A1", "compact_simple": [false], "lambda": ["-2"],
                                         "nu_box": "-6..0", "verify": true})"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "nu\tmultiplicity\toracle\n-5\t1\t1\n-3\t1\t1\n");
}

TEST_CASE("verify on A2 mixed passes and ignores thread count") {
    auto one = cli::run("verify", config(R"({"system": "A2", "compact_simple": [true, false], "threads": 1})"));
    auto four = cli::run("verify", config(R"({"system": "A2", "compact_simple": [true, false], "threads": 4})"));
    CHECK(one.exit_code == 0);
    CHECK(one.output == four.output);
}
