#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pou/cover.hpp"
#include "pou/metric_space.hpp"
#include "pou/refine.hpp"
#include "pou/types.hpp"

namespace pou {

/// The scaled Kuhn subdivision of R^n: cubes of the lattice spacing*Z^n,
/// each split into n! permutation simplices.
struct KuhnGrid {
    int dim = 1;
    double spacing = 1.0;

    static KuhnGrid create(int dim, double spacing);
};

using LatticePoint = std::vector<long long>;

/// Address of one simplex: the lattice corner of its cube and the axis
/// insertion order. Vertex k is the corner plus the first k axes.
struct SimplexId {
    LatticePoint cell;
    std::vector<int> axis_order;
};

struct BarycentricCoords {
    std::vector<double> weights;         // n + 1 entries, nonnegative, sum 1
    std::vector<LatticePoint> vertices;  // matching lattice vertices
};

struct Location {
    SimplexId simplex;
    BarycentricCoords coords;
};

/// Point location: cube corner by componentwise floor, axis order by sorting
/// fractional parts descending (ties by axis index ascending), weights by
/// consecutive differences of the sorted fractional parts. Points on shared
/// faces get zero weight on the off-face vertices, so evaluation does not
/// depend on the tie rule.
Location locate(const KuhnGrid& grid, std::span<const double> x);

/// Piecewise affine hat function of the lattice vertex: its barycentric
/// weight inside the containing simplex, zero elsewhere. The vertex must lie
/// on the lattice (OffLattice otherwise).
double hat_value(const KuhnGrid& grid, std::span<const double> vertex,
                 std::span<const double> x);
double hat_value(const KuhnGrid& grid, const LatticePoint& vertex,
                 std::span<const double> x);

struct SimplexGeometry {
    double diameter = 0.0;    // max pairwise vertex distance
    double min_height = 0.0;  // min vertex-to-opposite-facet distance
};

/// Measured on one representative simplex; all Kuhn simplices of the grid
/// are congruent up to permutation and translation.
SimplexGeometry simplex_geometry(const KuhnGrid& grid);

/// Lattice vertices whose hat functions are positive at x; at most n + 1.
std::vector<LatticePoint> star_membership(const KuhnGrid& grid, std::span<const double> x);

struct KuhnRefinement {
    Refinement refinement;
    Matrix values;  // point x member: summed hat functions per assigned index
    KuhnGrid grid;
    std::size_t star_count = 0;          // populated stars
    double star_diameter_bound = 0.0;    // 2 x measured simplex diameter
    double nominal_star_diameter = 0.0;  // 2 x (spacing as nominal diameter)
    bool diameter_exceeds_nominal = false;
};

/// Refines a cover of a Euclidean point cloud through the Kuhn triangulation
/// with spacing lebesgue/2: every populated vertex star is assigned to the
/// smallest cover member containing its points (CoverTooTight when none
/// does), stars merge per index, and the hat functions sum into a partition
/// subordinate to the result. Claims multiplicity dim+1 and Lebesgue number
/// lebesgue / ((dim+1) sqrt(8 dim)).
KuhnRefinement kuhn_refine(const MetricSpace& space, const Cover& cover, double lebesgue);

}  // namespace pou
