// dseries: tables and checks for discrete series of equal-rank real forms.

#include "dseries/cli.hpp"
#include "dseries/error.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace dseries;

int main(int argc, char** argv) {
    CLI::App app{"Discrete series combinatorics for equal-rank real forms"};
    app.require_subcommand(1);

    std::string config_path, system, compact, lambda, box, format, kind;
    int orbit = -1;
    unsigned threads = 0;
    bool verify = false;

    for (const char* name : {"describe", "orbits", "kostant", "schmid", "character", "blattner", "verify"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON job file");
        sub->add_option("--system", system, "preset Cartan type, e.g. A2 or A1xB2");
        sub->add_option("--compact", compact, "compact flags per simple root, e.g. +,-");
        sub->add_option("--lambda", lambda, "parameter, e.g. -1/2,-3");
        sub->add_option("--box", box, "nu box, lo..hi per coordinate");
        sub->add_option("--orbit", orbit, "closed orbit index");
        sub->add_option("--kind", kind, "denominator | numerator | discrete | freudenthal");
        sub->add_option("--format", format, "json | tsv");
        sub->add_option("--threads", threads, "worker threads for verify");
        sub->add_flag("--verify", verify, "also print the filtration oracle");
    }
    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    cli::RunResult result;
    try {
        cli::JobConfig config;
        if (!config_path.empty()) {
            config = cli::load_config(config_path);
        } else if (!system.empty()) {
            config = cli::parse_config({{"system", system}});
        } else {
            throw Error(ErrorKind::InvalidConfig, "give --config or --system");
        }
        if (!compact.empty()) config.compact_simple = cli::parse_compact_flags(compact);
        else if (config.compact_simple.size() != config.cartan.size()) config.compact_simple.assign(config.cartan.size(), true);
        if (!lambda.empty()) config.lambda = Weight::parse(lambda);
        if (!box.empty()) config.nu_box = WeightBox::parse(box);
        if (orbit >= 0) config.orbit_index = orbit;
        if (!kind.empty()) config.kind = kind;
        if (!format.empty()) config.format = cli::parse_format(format);
        if (threads > 0) config.threads = threads;
        if (verify) config.verify = true;
        result = cli::run(command, config);
    } catch (const Error& e) {
        result = {1, nlohmann::json{{"error", std::string(e.kind_name())}, {"message", e.what()}}.dump() + "\n"};
    }
    std::cout << result.output;
    return result.exit_code;
}
