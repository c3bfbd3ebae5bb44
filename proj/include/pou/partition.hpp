#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pou/cover.hpp"
#include "pou/metric_space.hpp"
#include "pou/profile.hpp"
#include "pou/types.hpp"

namespace pou {

/// Absolute tolerance for partition row sums, per cover member.
constexpr double kRowSumTolerancePerSet = 1e-12;

/// The normalized-distance partition of unity: value(x, a) is the a-th
/// profile value at x raised to the exponent, divided by the sum over all
/// members. Rows live on the unit simplex and vanish exactly off the member.
class PartitionOfUnity {
  public:
    PartitionOfUnity(Matrix values, double exponent, Cover cover, DistanceProfile profile)
        : values_(std::move(values)),
          exponent_(exponent),
          cover_(std::move(cover)),
          profile_(std::move(profile)) {}

    int point_count() const { return static_cast<int>(values_.rows()); }
    std::size_t set_count() const { return values_.cols(); }
    double exponent() const { return exponent_; }

    double value(int point, std::size_t a) const {
        return values_(static_cast<std::size_t>(point), a);
    }
    std::span<const double> row(int point) const {
        return values_.row(static_cast<std::size_t>(point));
    }
    const Matrix& values() const { return values_; }
    const Cover& cover() const { return cover_; }
    const DistanceProfile& profile() const { return profile_; }

    /// Indices of the members with strictly positive value at the point.
    std::vector<std::size_t> support(int point) const;

  private:
    Matrix values_;
    double exponent_;
    Cover cover_;
    DistanceProfile profile_;
};

/// Builds the partition for exponent p >= 1. Members covering the whole
/// space have infinite profile values; in that case the unit mass is split
/// equally among them and all finite members get zero.
PartitionOfUnity build_partition(const MetricSpace& space, const Cover& cover, double p);

/// Sum of the selected member functions, evaluated at every point.
std::vector<double> partial_sum(const PartitionOfUnity& pou,
                                std::span<const std::size_t> mu);

/// Entrywise p-th root of the value matrix; rows land on the l^p unit sphere.
Matrix root_values(const PartitionOfUnity& pou);

/// max over pairs x != y of |f(x) - f(y)| / dist(x, y), with a witness pair.
LipschitzEstimate empirical_lipschitz(std::span<const double> f, const MetricSpace& space);

struct PartialSumLipschitz {
    double constant = 0.0;
    int x = -1;
    int y = -1;
    std::vector<std::size_t> mu;  // attaining index subset
};

/// Worst empirical Lipschitz constant over all index subsets and pairs.
/// Per pair the maximum is attained at { a : value(x,a) > value(y,a) } and
/// equals half the l^1 distance of the rows, so the sweep is O(pairs * sets)
/// rather than exponential in the number of sets.
PartialSumLipschitz worst_partial_sum_lipschitz(const PartitionOfUnity& pou,
                                                const MetricSpace& space);

/// l^q norm of the row difference; q may be infinity (max-abs). q < 1 is
/// rejected.
double lq_distance(const PartitionOfUnity& pou, int x, int y, double q);

/// max over pairs of lq_distance / dist.
LipschitzEstimate vector_lipschitz(const PartitionOfUnity& pou, const MetricSpace& space,
                                   double q);

/// Lightweight view pairing a partition with a norm exponent.
struct VectorizedPartition {
    const PartitionOfUnity* source = nullptr;
    double q = 1.0;

    double distance(int x, int y) const { return lq_distance(*source, x, y, q); }
};

VectorizedPartition vectorize(const PartitionOfUnity& pou, double q);

}  // namespace pou
