#include "commands.hpp"

#include <algorithm>
#include <iostream>
#include <random>

#include "pou/error.hpp"
#include "pou/json_io.hpp"

namespace pou::cli {

using nlohmann::json;

namespace {

void emit(const json& j, const std::string& out_path) {
    const std::string text = canonical_dump(j);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

AmpDecision decide_amp(const MetricSpace& space, bool assert_amp,
                       const std::optional<double>& tolerance) {
    AmpDecision amp;
    if (assert_amp) {
        amp.value = true;
        amp.source = "asserted";
        return amp;
    }
    if (tolerance) {
        amp.tolerance = *tolerance;
        amp.defect = midpoint_defect(space);
        amp.value = amp.defect <= *tolerance;
        amp.source = "inferred";
    }
    return amp;
}

}  // namespace

int run_analyze(const AnalyzeOptions& options) {
    const MetricSpace space = load_space(options.space_path);
    const Cover cover = load_cover(options.cover_path, space.size());
    const LebesgueReport report = lebesgue_report(space, cover, options.rhos);
    const TopTwoReport top_two = top_two_report(space, cover);

    json j{{"space", {{"points", space.size()}, {"diameter", space.diameter()}}},
           {"cover", {{"sets", cover.set_count()}}},
           {"lebesgue", lebesgue_to_json(report)},
           {"midpoint_defect", top_two.midpoint_defect},
           {"top_two", top_two_to_json(top_two)}};
    emit(j, options.out_path);
    return 0;
}

int run_partition(const PartitionOptions& options) {
    const MetricSpace space = load_space(options.space_path);
    const Cover cover = load_cover(options.cover_path, space.size());
    const PartitionOfUnity pou = build_partition(space, cover, options.p);
    const LebesgueReport report = lebesgue_report(space, cover);
    const AmpDecision amp = decide_amp(space, options.assert_amp, options.amp_tolerance);
    const BoundSet bounds =
        lipschitz_bounds(report.multiplicity, report.optimal, options.p, options.q, amp.value);
    const LipschitzCertificate cert = certify(pou, space, bounds);

    const json j = certificate_to_json(cert, space, cover, amp);
    if (options.out_path.empty()) {
        std::cout << canonical_dump(j);
    } else {
        write_text_file(options.out_path + ".csv", partition_csv(pou, space));
        write_text_file(options.out_path + ".json", canonical_dump(j));
    }
    return cert.pass() ? 0 : 1;
}

namespace {

int refine_shrink(const MetricSpace& space, const Cover& cover, const RefineOptions& options) {
    const Refinement refinement = shrink_cover(space, cover);
    const LebesgueReport measured = lebesgue_report(space, refinement.refined);
    emit(refinement_to_json(refinement, measured, json::object()), options.out_path);
    return 0;
}

int refine_recolor(const MetricSpace& space, const Cover& cover, const RefineOptions& options) {
    if (options.fine_cover_path.empty()) {
        Error::raise(ErrorKind::BadParameter, "recolor needs --fine with the fine cover");
    }
    const Cover fine = load_cover(options.fine_cover_path, space.size(), true);
    const Refinement refinement = recolor_refinement(space, cover, fine);
    const LebesgueReport measured = lebesgue_report(space, refinement.refined);
    emit(refinement_to_json(refinement, measured, json{{"fine_sets", fine.set_count()}}),
         options.out_path);
    return 0;
}

int refine_kuhn(const MetricSpace& space, const Cover& cover, const RefineOptions& options) {
    double lebesgue;
    if (options.kuhn_lebesgue) {
        lebesgue = *options.kuhn_lebesgue;
    } else {
        const LebesgueReport report = lebesgue_report(space, cover);
        if (!report.finite()) {
            Error::raise(ErrorKind::BadParameter,
                         "cover has infinite Lebesgue number; pass --lebesgue explicitly");
        }
        lebesgue = report.optimal;
    }
    const KuhnRefinement result = kuhn_refine(space, cover, lebesgue);
    const LebesgueReport measured = lebesgue_report(space, result.refinement.refined);
    json j = kuhn_refinement_to_json(result, measured);

    // Measured Lipschitz constants of the summed hat functions: every member
    // function, plus seeded random partial sums.
    double per_function = 0.0;
    std::vector<double> column(static_cast<std::size_t>(space.size()));
    for (std::size_t a = 0; a < result.values.cols(); ++a) {
        for (int x = 0; x < space.size(); ++x) {
            column[static_cast<std::size_t>(x)] = result.values(static_cast<std::size_t>(x), a);
        }
        per_function = std::max(per_function, empirical_lipschitz(column, space).constant);
    }
    std::mt19937_64 rng(options.seed);
    double sampled_partial = 0.0;
    const std::size_t sets = result.values.cols();
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<char> pick(sets);
        for (std::size_t a = 0; a < sets; ++a) pick[a] = rng() % 2 == 0 ? 0 : 1;
        for (int x = 0; x < space.size(); ++x) {
            double sum = 0.0;
            for (std::size_t a = 0; a < sets; ++a) {
                if (pick[a]) sum += result.values(static_cast<std::size_t>(x), a);
            }
            column[static_cast<std::size_t>(x)] = sum;
        }
        sampled_partial = std::max(sampled_partial, empirical_lipschitz(column, space).constant);
    }
    j["provenance"]["measured"]["per_function_lipschitz"] = per_function;
    j["provenance"]["measured"]["sampled_partial_sum_lipschitz"] = sampled_partial;
    j["provenance"]["parameters"]["seed"] = options.seed;
    emit(j, options.out_path);
    return 0;
}

int refine_decompose(const MetricSpace& space, const Cover& cover, const RefineOptions& options) {
    const LebesgueReport report = lebesgue_report(space, cover);
    const PartitionOfUnity pou = build_partition(space, cover, options.p);
    const DecompositionParams params = decomposition_params(report.multiplicity);
    const DisjointDecomposition decomposition =
        disjoint_decomposition(space, cover, pou, params);
    emit(decomposition_to_json(decomposition, space), options.out_path);
    return 0;
}

}  // namespace

int run_refine(const RefineOptions& options) {
    const MetricSpace space = load_space(options.space_path);
    const Cover cover = load_cover(options.cover_path, space.size());
    if (options.strategy == "shrink") return refine_shrink(space, cover, options);
    if (options.strategy == "recolor") return refine_recolor(space, cover, options);
    if (options.strategy == "kuhn") return refine_kuhn(space, cover, options);
    if (options.strategy == "decompose") return refine_decompose(space, cover, options);
    Error::raise(ErrorKind::BadParameter, "unknown strategy \"" + options.strategy + "\"");
}

int run_nerve(const NerveOptions& options) {
    const MetricSpace space = load_space(options.space_path);
    const Cover cover = load_cover(options.cover_path, space.size());
    const PartitionOfUnity pou = build_partition(space, cover, options.p);
    const NerveComplex nerve = build_nerve(pou);
    const std::vector<SimplexPreimage> preimages = preimage_diameters(space, pou, nerve);
    emit(nerve_to_json(nerve, preimages, cover), options.out_path);
    return 0;
}

int run_bounds(const BoundsOptions& options) {
    const MetricSpace space = load_space(options.space_path);
    const Cover cover = load_cover(options.cover_path, space.size());
    const LebesgueReport report = lebesgue_report(space, cover);
    const AmpDecision amp = decide_amp(space, options.assert_amp, options.amp_tolerance);
    const BoundSet bounds =
        lipschitz_bounds(report.multiplicity, report.optimal, options.p, options.q, amp.value);
    json j = bounds_to_json(bounds);
    j["amp_decision"] = json{{"value", amp.value},
                             {"source", amp.source},
                             {"tolerance", amp.tolerance},
                             {"midpoint_defect", amp.defect}};
    emit(j, options.out_path);
    return 0;
}

}  // namespace pou::cli
