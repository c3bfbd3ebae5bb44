#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pou/types.hpp"

namespace pou {

/// Relative tolerance for metric validation (symmetry, triangle inequality,
/// agreement of a matrix with supplied coordinates). Absorbs floating-point
/// noise from coordinate-derived matrices.
constexpr double kMetricTolerance = 1e-9;

/// A finite labeled metric space: a validated symmetric distance matrix,
/// optionally backed by Euclidean coordinates. Immutable after construction.
class MetricSpace {
  public:
    /// Validates an explicit matrix: square, finite, nonnegative, zero
    /// diagonal, symmetric, triangle inequality, positive off-diagonal.
    /// Reports the worst offending triple on a triangle violation. When
    /// coords are supplied, every entry must match the Euclidean distance
    /// within the tolerance.
    static MetricSpace validated(std::vector<std::vector<double>> matrix,
                                 std::vector<std::string> labels = {},
                                 std::optional<std::vector<std::vector<double>>> coords = std::nullopt);

    /// Same as validated() without coordinates.
    static MetricSpace from_matrix(std::vector<std::vector<double>> matrix,
                                   std::vector<std::string> labels = {});

    /// Builds the space from Euclidean coordinates. The derived matrix
    /// satisfies the metric axioms by construction, so the cubic triangle
    /// scan is skipped; duplicate points are still rejected.
    static MetricSpace from_points(std::vector<std::vector<double>> coords,
                                   std::vector<std::string> labels = {});

    int size() const { return static_cast<int>(labels_.size()); }
    double dist(int i, int j) const {
        return dist_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size()) +
                     static_cast<std::size_t>(j)];
    }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

    bool has_coords() const { return !coords_.empty(); }
    const std::vector<std::vector<double>>& coords() const { return coords_; }
    int ambient_dim() const { return coords_.empty() ? 0 : static_cast<int>(coords_[0].size()); }

    /// Smallest nonzero pairwise distance; kInfinite for a singleton.
    double min_positive_distance() const;
    double diameter() const;

    /// min over (a, b) in A x B of dist(a, b); kInfinite if either is empty.
    double set_distance(std::span<const int> a, std::span<const int> b) const;
    /// max over pairs within the subset; 0 for empty or singleton subsets.
    double subset_diameter(std::span<const int> points) const;

  private:
    MetricSpace(std::vector<double> dist, std::vector<std::string> labels,
                std::vector<std::vector<double>> coords);

    std::vector<double> dist_;  // row-major n x n
    std::vector<std::string> labels_;
    std::vector<std::vector<double>> coords_;  // empty when not Euclidean
};

}  // namespace pou
