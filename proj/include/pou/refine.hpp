#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pou/cover.hpp"
#include "pou/metric_space.hpp"
#include "pou/partition.hpp"
#include "pou/types.hpp"

namespace pou {

/// A refined cover together with the constants the construction guarantees.
/// Index-preserving constructions keep the source index set, so members may
/// be empty; measured constants of the refined cover always dominate the
/// claimed ones.
struct Refinement {
    Cover refined;
    double claimed_lebesgue = 0.0;
    int claimed_multiplicity = 0;
    std::string construction;
};

/// Thresholds every member at two thirds of the optimal Lebesgue number L:
/// the surviving core sets form a refinement with Lebesgue number L/3 whose
/// (L/3)-multiplicity is at most the source multiplicity. A cover containing
/// the whole space has infinite L and returns the trivial refinement.
Refinement shrink_cover(const MetricSpace& space, const Cover& cover);

/// Replaces each member by its open radius-neighborhood (the member itself
/// plus every point at distance < radius from it).
Cover expand_cover(const MetricSpace& space, const Cover& cover, double radius);

/// Reassigns each member of the fine cover to the smallest coarse index
/// whose member contains it and merges per index. Throws NotARefinement
/// (with a witness) when some fine member fits in no coarse member.
Refinement recolor_refinement(const MetricSpace& space, const Cover& coarse,
                              const Cover& fine);

struct DecompositionParams {
    double epsilon = 0.0;
    double zeta = 0.0;
    int multiplicity = 0;
};

/// Admissible threshold pair for the separated decomposition:
/// epsilon = 2 (M+2)^-2 and zeta = (M + 1/2) (M+1)^-1 epsilon, satisfying
/// M/(M+1) epsilon < zeta < epsilon and (M+1)(M+2) epsilon < 2.
DecompositionParams decomposition_params(int multiplicity);

/// One separated set: the points where every member in mu is above the
/// epsilon threshold and every other member is below the zeta threshold.
struct SeparatedSet {
    std::vector<std::size_t> mu;  // sorted member indices
    std::vector<int> points;      // sorted point indices
};

struct SeparatedFamily {
    std::vector<SeparatedSet> members;
    double separation = kInfinite;  // min set distance between distinct members
};

struct DisjointDecomposition {
    std::vector<SeparatedFamily> families;  // families[k-1] holds the size-k sets
    DecompositionParams params;
};

/// Decomposes the space into M families of separated sets subordinate to the
/// cover. Per point, the thresholds are tested on the sorted partition
/// values from size M downward; the first size that fires determines the
/// point's set. Materialized set extents retain every point satisfying the
/// set's thresholds, which may exceed the points discovered through it.
DisjointDecomposition disjoint_decomposition(const MetricSpace& space, const Cover& cover,
                                             const PartitionOfUnity& pou,
                                             const DecompositionParams& params);

}  // namespace pou
