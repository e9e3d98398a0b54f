#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <diverge/cli.hpp>

using namespace diverge;

namespace {

void add_common(CLI::App* cmd, cli::RunConfig& cfg, std::string& format) {
    cmd->add_option("--out", cfg.out, "Write output to this file instead of stdout");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--deterministic", cfg.deterministic, "Reproducible output, no timing fields");
    cmd->add_option("--seed", cfg.seed, "Seed for randomized tie-breaking");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructions of infinite permutations, prefix verifiers and small-n permutation capacity"};
    app.require_subcommand(1);

    cli::RunConfig cfg;
    std::string format = "csv";
    std::string thresholds;
    std::int64_t timeout_ms = -1;

    auto* gen = app.add_subcommand("gen", "Print a prefix as position,value rows");
    gen->add_option("construction", cfg.constructions, "Construction spec")->required()->expected(1);
    gen->add_option("--n,--horizon", cfg.horizon, "Prefix length")->required();

    auto* diff = app.add_subcommand("diff", "Positionwise |c1(t) - c2(t)| with optional divergence certificate");
    diff->add_option("constructions", cfg.constructions, "Two construction specs")->required()->expected(2);
    diff->add_option("--n,--horizon", cfg.horizon, "Horizon")->required();
    diff->add_option("--thresholds", thresholds, "Ascending thresholds a,b,c");

    auto* collide = app.add_subcommand("collide", "Positions where the two values are adjacent in a graph");
    collide->add_option("constructions", cfg.constructions, "Two construction specs")->required()->expected(2);
    collide->add_option("--n,--horizon", cfg.horizon, "Horizon")->required();
    collide->add_option("--graph", cfg.graph, "distance:k | complete | residue:q | file:PATH");

    auto* verify = app.add_subcommand("verify", "Run the invariant suite and print a JSON report");

    auto* capacity = app.add_subcommand("capacity", "Exact omega(G_n) table");
    capacity->add_option("--graph", cfg.graph, "distance:k | complete | residue:q | file:PATH");
    capacity->add_option("--nmax", cfg.n_max, "Largest n")->check(CLI::Range(2, 12));
    capacity->add_option("--nlimit", cfg.n_limit, "Refuse n above this")->check(CLI::Range(2, 12));
    capacity->add_option("--timeout-ms", timeout_ms, "Per-row clique search timeout");

    for (auto* cmd : {gen, diff, collide, verify, capacity}) add_common(cmd, cfg, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::exit_code::usage;
    }

    if (*gen) cfg.command = cli::Command::gen;
    else if (*diff) cfg.command = cli::Command::diff;
    else if (*collide) cfg.command = cli::Command::collide;
    else if (*verify) cfg.command = cli::Command::verify;
    else cfg.command = cli::Command::capacity;

    cfg.format = format == "json" ? cli::Format::json : cli::Format::csv;
    if (timeout_ms >= 0) cfg.timeout = std::chrono::milliseconds(timeout_ms);
    if (!thresholds.empty()) {
        try {
            cfg.thresholds = parse_thresholds(thresholds);
        } catch (const ParseError& e) {
            std::cerr << "error: " << e.what() << '\n';
            return cli::exit_code::usage;
        }
    }
    return cli::run(cfg, std::cout, std::cerr);
}
