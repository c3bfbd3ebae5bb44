#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pou::cli {

struct CommonOptions {
    std::string space_path;
    std::string cover_path;
    std::string out_path;  // empty: stdout
};

struct AnalyzeOptions : CommonOptions {
    std::vector<double> rhos;
};

struct PartitionOptions : CommonOptions {
    double p = 1.0;
    double q = 1.0;
    bool assert_amp = false;
    std::optional<double> amp_tolerance;
};

struct RefineOptions : CommonOptions {
    std::string strategy = "shrink";  // shrink | kuhn | recolor | decompose
    std::string fine_cover_path;      // recolor only
    std::optional<double> kuhn_lebesgue;
    double p = 1.0;  // decompose partition exponent
    unsigned long seed = 0;
};

struct NerveOptions : CommonOptions {
    double p = 1.0;
};

struct BoundsOptions : CommonOptions {
    double p = 1.0;
    double q = 1.0;
    bool assert_amp = false;
    std::optional<double> amp_tolerance;
};

int run_analyze(const AnalyzeOptions& options);
int run_partition(const PartitionOptions& options);
int run_refine(const RefineOptions& options);
int run_nerve(const NerveOptions& options);
int run_bounds(const BoundsOptions& options);

}  // namespace pou::cli
