// Command-line front end. Talks to the engine only through the C interface.

#include "hhsmash/hhsmash.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct Options {
    std::string scenario_path;
    std::string builtin;
    std::optional<std::string> q;
    std::optional<unsigned> weight_max;
    std::optional<unsigned> index_max;
    unsigned threads = 1;
    std::string out;
    std::string format = "json";
};

int exit_code(hhs_status st) {
    switch (st) {
    case HHS_OK:
        return 0;
    case HHS_INPUT_ERROR:
        return 2;
    default:
        return 1;
    }
}

int run(hhs_mode mode, const Options& o) {
    hhs_scenario* s = nullptr;
    const char* q = o.q ? o.q->c_str() : nullptr;
    hhs_status st = o.scenario_path.empty() ? hhs_scenario_builtin(o.builtin.c_str(), q, &s)
                                            : hhs_scenario_load(o.scenario_path.c_str(), q, &s);
    if (st != HHS_OK) {
        std::cerr << "error: " << hhs_last_error() << "\n";
        return exit_code(st);
    }
    if (o.weight_max)
        hhs_scenario_set_weight_max(s, *o.weight_max);
    if (o.index_max)
        hhs_scenario_set_index_max(s, *o.index_max);

    hhs_report* r = nullptr;
    st = hhs_run(s, mode, o.threads, &r);
    hhs_scenario_free(s);
    if (r == nullptr) {
        std::cerr << "error: " << hhs_last_error() << "\n";
        return exit_code(st);
    }
    const char* text = nullptr;
    const hhs_status rs = hhs_report_render(r, o.format == "text" ? HHS_FORMAT_TEXT : HHS_FORMAT_JSON, &text);
    if (rs != HHS_OK) {
        std::cerr << "error: " << hhs_last_error() << "\n";
        hhs_report_free(r);
        return exit_code(rs);
    }
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        f << text;
        if (!f) {
            std::cerr << "error: cannot write " << o.out << "\n";
            hhs_report_free(r);
            return 2;
        }
    }
    hhs_report_free(r);
    if (st == HHS_VERIFY_FAILED)
        std::cerr << "some checks failed\n";
    return exit_code(st);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild cohomology of smash products A#H"};
    app.require_subcommand(1);
    Options o;
    std::string builtin_help = "builtin scenario, one of:";
    for (const char* p = hhs_builtin_names(); *p != '\0'; ++p)
        builtin_help += *p == '\n' ? ' ' : *p;

    auto add_common = [&](CLI::App* sub) {
        auto* sc = sub->add_option("--scenario", o.scenario_path, "scenario JSON file");
        auto* bi = sub->add_option("--builtin", o.builtin, builtin_help);
        sc->excludes(bi);
        sub->add_option("--q", o.q, "override the parameter q (rational, e.g. 3 or -3/2)");
        sub->add_option("--weight-max", o.weight_max, "largest internal weight");
        sub->add_option("--index-max", o.index_max, "largest family index for tables");
        sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", o.out, "write the report to this file instead of stdout");
        sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
    };
    auto* compute = app.add_subcommand("compute", "dimensions, bases and invariant cup products");
    auto* verify = app.add_subcommand("verify", "run every property check");
    auto* tables = app.add_subcommand("tables", "cup tables in family labels, diffed against the expected laws");
    for (auto* sub : {compute, verify, tables})
        add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (o.scenario_path.empty() && o.builtin.empty())
        o.builtin = "kac-paljutkin-qplane";
    const hhs_mode mode = compute->parsed() ? HHS_MODE_COMPUTE : (verify->parsed() ? HHS_MODE_VERIFY : HHS_MODE_TABLES);
    return run(mode, o);
}
