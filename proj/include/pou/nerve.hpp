#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pou/metric_space.hpp"
#include "pou/partition.hpp"

namespace pou {

/// Nerve of a partition of unity: one vertex per member, one simplex per
/// realized support. Only the maximal simplices are stored; the complex is
/// their downward closure.
struct NerveComplex {
    std::vector<std::vector<std::size_t>> maximal;  // sorted sets, sorted lexicographically
    int dimension = -1;

    bool contains(std::span<const std::size_t> mu) const;
    /// Materializes every face of every maximal simplex (deduplicated).
    std::vector<std::vector<std::size_t>> closure() const;
};

NerveComplex build_nerve(const PartitionOfUnity& pou);

struct SimplexPreimage {
    std::vector<std::size_t> mu;
    std::vector<int> points;  // points whose support is exactly mu
    double diameter = 0.0;
};

/// For each maximal simplex, the set of points mapped into its relative
/// interior (support equal to the simplex) and that set's diameter. By
/// subordination the preimage lies inside every member indexed by mu.
std::vector<SimplexPreimage> preimage_diameters(const MetricSpace& space,
                                                const PartitionOfUnity& pou,
                                                const NerveComplex& nerve);

struct StarConstants {
    double height = 0.0;          // sqrt((n+1)/n)
    double lebesgue_lower = 0.0;  // height / (n+1)
};

/// Geometry of the vertex-star cover of an n-dimensional complex whose
/// vertices are canonical unit vectors.
StarConstants star_constants(int n);

}  // namespace pou
