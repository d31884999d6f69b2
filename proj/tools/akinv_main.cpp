#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "akinv/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw akinv::ValidationError("cannot open script: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

akinv::RunOptions options_from_env() {
    akinv::RunOptions opts;
    if (const char* cap = std::getenv("AKINV_MAX_REDUCTIONS"))
        opts.groebner.max_reductions = std::strtol(cap, nullptr, 10);
    if (const char* bound = std::getenv("AKINV_MEMBER_BOUND"))
        opts.member_bound = std::strtol(bound, nullptr, 10);
    return opts;
}

int run_path(const std::string& path, bool as_json, const akinv::RunOptions& opts) {
    std::string source = read_file(path);
    akinv::dsl::Script script = akinv::dsl::parse(source);
    akinv::Report report = akinv::run_script(script, opts);
    if (as_json)
        std::cout << report.to_json(path);
    else
        std::cout << report.to_table();
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"akinv: exponential maps, iterative higher derivations and AK-invariant "
                 "upper bounds on finitely presented algebras"};
    app.require_subcommand(1);

    std::string script_path;
    bool json_flag = false;
    unsigned bound = 0, pool_degree = 0, seed = 0;

    CLI::App* run = app.add_subcommand("run", "execute a script and print a report table");
    run->add_option("script", script_path, "script file")->required();
    run->add_flag("--json", json_flag, "emit the machine-readable JSON report instead");
    run->add_option("--bound", bound, "default bound for iterativity checks");
    run->add_option("--pool-degree", pool_degree, "default candidate pool degree for rewrite");
    run->add_option("--seed", seed, "seed for randomized property suites (unused by checks)");

    CLI::App* check = app.add_subcommand("check", "execute a script and print the JSON report");
    check->add_option("script", script_path, "script file")->required();
    check->add_flag("--json", json_flag, "JSON output (the default for check)");

    CLI11_PARSE(app, argc, argv);

    akinv::RunOptions opts = options_from_env();
    if (bound > 0) opts.default_iterative_bound = bound;
    if (pool_degree > 0) opts.default_pool_degree = pool_degree;

    try {
        if (app.got_subcommand(run)) return run_path(script_path, json_flag, opts);
        return run_path(script_path, true, opts);
    } catch (const akinv::dsl::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
