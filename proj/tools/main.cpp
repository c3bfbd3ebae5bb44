#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "pou/error.hpp"

namespace {

void add_common(CLI::App* cmd, pou::cli::CommonOptions& options, bool cover_required = true) {
    cmd->add_option("--space", options.space_path, "space JSON file")->required();
    auto* cover = cmd->add_option("--cover", options.cover_path, "cover JSON file");
    if (cover_required) cover->required();
    cmd->add_option("--out", options.out_path, "output path (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lipschitz partitions of unity over finite metric spaces"};
    app.require_subcommand(1);

    pou::cli::AnalyzeOptions analyze;
    CLI::App* cmd_analyze =
        app.add_subcommand("analyze", "Lebesgue numbers, multiplicities, midpoint analysis");
    add_common(cmd_analyze, analyze);
    cmd_analyze->add_option("--rho", analyze.rhos, "scales for rho-multiplicity")
        ->delimiter(',');

    pou::cli::PartitionOptions partition;
    CLI::App* cmd_partition =
        app.add_subcommand("partition", "build the partition of unity and certify it");
    add_common(cmd_partition, partition);
    cmd_partition->add_option("--p", partition.p, "partition exponent (>= 1)");
    cmd_partition->add_option("--q", partition.q, "vector norm exponent (>= 1, inf allowed)");
    cmd_partition->add_flag("--amp", partition.assert_amp,
                            "assert the approximate midpoint property");
    cmd_partition->add_option("--amp-tol", partition.amp_tolerance,
                              "infer the midpoint property when the defect is at most this");

    pou::cli::RefineOptions refine;
    CLI::App* cmd_refine = app.add_subcommand("refine", "refine a cover");
    add_common(cmd_refine, refine);
    cmd_refine->add_option("--strategy", refine.strategy, "shrink | kuhn | recolor | decompose");
    cmd_refine->add_option("--fine", refine.fine_cover_path, "fine cover (recolor)");
    cmd_refine->add_option("--lebesgue", refine.kuhn_lebesgue,
                           "Lebesgue number for the Kuhn grid (default: measured)");
    cmd_refine->add_option("--p", refine.p, "partition exponent for decompose");
    cmd_refine->add_option("--seed", refine.seed, "seed for sampled sweeps");

    pou::cli::RefineOptions decompose;
    CLI::App* cmd_decompose =
        app.add_subcommand("decompose", "separated-family decomposition of a cover");
    add_common(cmd_decompose, decompose);
    cmd_decompose->add_option("--p", decompose.p, "partition exponent");
    decompose.strategy = "decompose";

    pou::cli::RefineOptions kuhn;
    CLI::App* cmd_kuhn =
        app.add_subcommand("kuhn-refine", "triangulation refinement of a Euclidean cloud");
    add_common(cmd_kuhn, kuhn);
    cmd_kuhn->add_option("--lebesgue", kuhn.kuhn_lebesgue,
                         "Lebesgue number for the grid (default: measured)");
    cmd_kuhn->add_option("--seed", kuhn.seed, "seed for sampled sweeps");
    kuhn.strategy = "kuhn";

    pou::cli::NerveOptions nerve;
    CLI::App* cmd_nerve = app.add_subcommand("nerve", "nerve complex and preimage diameters");
    add_common(cmd_nerve, nerve);
    cmd_nerve->add_option("--p", nerve.p, "partition exponent");

    pou::cli::BoundsOptions bounds;
    CLI::App* cmd_bounds = app.add_subcommand("bounds", "theoretical Lipschitz bounds");
    add_common(cmd_bounds, bounds);
    cmd_bounds->add_option("--p", bounds.p, "partition exponent");
    cmd_bounds->add_option("--q", bounds.q, "vector norm exponent");
    cmd_bounds->add_flag("--amp", bounds.assert_amp, "assert the approximate midpoint property");
    cmd_bounds->add_option("--amp-tol", bounds.amp_tolerance,
                           "infer the midpoint property when the defect is at most this");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_analyze->parsed()) return pou::cli::run_analyze(analyze);
        if (cmd_partition->parsed()) return pou::cli::run_partition(partition);
        if (cmd_refine->parsed()) return pou::cli::run_refine(refine);
        if (cmd_decompose->parsed()) return pou::cli::run_refine(decompose);
        if (cmd_kuhn->parsed()) return pou::cli::run_refine(kuhn);
        if (cmd_nerve->parsed()) return pou::cli::run_nerve(nerve);
        if (cmd_bounds->parsed()) return pou::cli::run_bounds(bounds);
    } catch (const pou::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
