#pragma once

#include <cstddef>

#include "pou/bounds.hpp"
#include "pou/metric_space.hpp"
#include "pou/partition.hpp"
#include "pou/types.hpp"

namespace pou {

/// Relative tolerance for comparing empirical constants against bounds.
constexpr double kCertTolerance = 1e-9;

/// Empirical Lipschitz constants of a partition, their witnesses, and the
/// verdict against a bound set. A bound passes when the empirical value is
/// at most bound * (1 + kCertTolerance).
struct LipschitzCertificate {
    double empirical_per_function = 0.0;
    LipschitzEstimate per_function_witness;
    std::size_t per_function_set = 0;

    double empirical_worst_partial_sum = 0.0;
    PartialSumLipschitz partial_sum_witness;

    double empirical_vector_lq = 0.0;
    LipschitzEstimate vector_witness;

    BoundSet bounds;

    bool per_function_pass = false;
    bool partial_sum_pass = false;
    bool vector_pass = false;

    bool pass() const { return per_function_pass && partial_sum_pass && vector_pass; }
};

/// Measures the partition against the given bounds. The bounds must have
/// been built from the same multiplicity and optimal Lebesgue number as the
/// partition's cover; disagreement raises InconsistentBounds.
LipschitzCertificate certify(const PartitionOfUnity& pou, const MetricSpace& space,
                             const BoundSet& bounds);

}  // namespace pou
