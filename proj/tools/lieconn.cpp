#include <iostream>

#include <CLI11.hpp>

#include "lieconn/commands.hpp"

#ifndef LIECONN_SYSTEMS_DIR
#define LIECONN_SYSTEMS_DIR "systems"
#endif

int main(int argc, char** argv) {
    using namespace lieconn;

    CLI::App app{"Graph-theoretic controllability checks for bilinear systems on SO(n), SL(n), GL+(n)"};
    app.require_subcommand(1);

    AnalyzeOptions analyze;
    auto* a = app.add_subcommand("analyze", "Decide one system file and report the verdict");
    a->add_option("file", analyze.path, "System file")->required();
    a->add_flag("--oracle", analyze.oracle, "Also run the Lie algebra rank oracle; exit code follows it");
    a->add_option("--dot-dir", analyze.dot_dir, "Write contr.dot, drift.dot and union.dot here");
    a->add_flag("--json", analyze.json, "Emit the JSON report");
    a->add_flag("--timing", analyze.timing, "Include per-phase wall-clock timings");

    RandcheckOptions rc;
    auto* r = app.add_subcommand("randcheck", "Cross-check verdicts against the oracle on random systems");
    r->add_option("--group", rc.group, "so, sl or gl")->required();
    r->add_option("--n", rc.n, "Matrix size")->required();
    r->add_option("--trials", rc.trials, "Number of random systems")->capture_default_str();
    r->add_option("--seed", rc.seed, "Campaign seed")->capture_default_str();
    r->add_option("--max-controls", rc.max_controls, "Upper bound on control count (default 2n for so, 4n otherwise)");
    r->add_option("--jobs", rc.jobs, "Worker threads")->capture_default_str();
    r->add_flag("--json", rc.json, "Emit the summary as JSON");

    ExamplesOptions ex{LIECONN_SYSTEMS_DIR, false};
    auto* e = app.add_subcommand("examples", "Check the bundled example systems against their goldens");
    e->add_option("--dir", ex.dir, "Directory holding ex1.sys .. ex7.sys")->capture_default_str();
    e->add_flag("--json", ex.json, "Emit the pass/fail list as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::CallForAllHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kExitUsage;
    }

    if (a->parsed()) return cmd_analyze(analyze, std::cout, std::cerr);
    if (r->parsed()) return cmd_randcheck(rc, std::cout, std::cerr);
    return cmd_examples(ex, std::cout, std::cerr);
}
