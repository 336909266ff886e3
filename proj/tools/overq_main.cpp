#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "overq/cli.hpp"
#include "overq/version.hpp"

namespace {

void add_common(CLI::App* cmd, overq::RunConfig& cfg) {
    cmd->add_option("--a", cfg.a, "spectrum base values, comma separated")
        ->required()
        ->delimiter(',');
    cmd->add_option("--N", cfg.modulus, "modulus")->required();
    cmd->add_option("--qmax", cfg.q_max, "q-degree window");
    cmd->add_option("--xmax", cfg.x_max, "x-degree window (default: qmax)");
    cmd->add_option("--kmax,--k", cfg.k_max, "largest plain-part count (default: qmax)");
    static const std::map<std::string, overq::OutputFormat> formats{
        {"text", overq::OutputFormat::text},
        {"json", overq::OutputFormat::json},
        {"csv", overq::OutputFormat::csv}};
    cmd->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--out", cfg.out, "write output to a file instead of stdout");
}

int dispatch(const overq::RunConfig& cfg,
             const std::function<int(const overq::RunConfig&, std::ostream&)>& run) {
    if (cfg.out.empty()) return run(cfg, std::cout);
    std::ofstream file(cfg.out);
    if (!file) {
        std::cerr << "error: cannot open " << cfg.out << " for writing\n";
        return 2;
    }
    return run(cfg, file);
}

}

int main(int argc, char** argv) {
    CLI::App app{"exact overpartition counting and identity verification"};
    app.set_version_flag("--version", overq::kToolVersion);
    app.require_subcommand(1);

    overq::RunConfig cfg;
    int exit_code = 0;

    CLI::App* spectrum = app.add_subcommand("spectrum", "show the subset-sum table and gaps");
    add_common(spectrum, cfg);
    spectrum->callback([&] { exit_code = dispatch(cfg, overq::cmd_spectrum); });

    CLI::App* count = app.add_subcommand("count", "tabulate counts by part number");
    add_common(count, cfg);
    overq::Side side = overq::Side::D;
    static const std::map<std::string, overq::Side> sides{{"D", overq::Side::D},
                                                          {"E", overq::Side::E}};
    count->add_option("--side", side, "D: congruence multisets, E: gap-conditioned")
        ->required()
        ->transform(CLI::CheckedTransformer(sides));
    count->callback([&] {
        exit_code = dispatch(cfg, [&](const overq::RunConfig& c, std::ostream& out) {
            return overq::cmd_count(c, side, out);
        });
    });

    CLI::App* expand = app.add_subcommand("expand", "print a series expansion");
    add_common(expand, cfg);
    overq::ExpandTarget target = overq::ExpandTarget::product;
    static const std::map<std::string, overq::ExpandTarget> targets{
        {"product", overq::ExpandTarget::product},
        {"f", overq::ExpandTarget::f},
        {"r1", overq::ExpandTarget::r1}};
    expand->add_option("target", target, "product | f | r1")
        ->required()
        ->transform(CLI::CheckedTransformer(targets));
    expand->callback([&] {
        exit_code = dispatch(cfg, [&](const overq::RunConfig& c, std::ostream& out) {
            return overq::cmd_expand(c, target, out);
        });
    });

    CLI::App* verify = app.add_subcommand("verify", "run identity checks and report");
    add_common(verify, cfg);
    verify->add_option("--checks", cfg.checks, "check names, comma separated (default: all)")
        ->delimiter(',');
    verify->callback([&] { exit_code = dispatch(cfg, overq::cmd_verify); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}
