#pragma once

#include <span>
#include <vector>

#include "pou/cover.hpp"
#include "pou/metric_space.hpp"
#include "pou/types.hpp"

namespace pou {

/// Distance-to-complement table: value(a, x) is the distance from point x to
/// the complement of cover member a, and kInfinite exactly when the member is
/// the whole space. Positive on the member, zero off it, 1-Lipschitz in x.
class DistanceProfile {
  public:
    DistanceProfile(Matrix values, std::vector<char> infinite_rows)
        : values_(std::move(values)), infinite_(std::move(infinite_rows)) {}

    std::size_t set_count() const { return values_.rows(); }
    int point_count() const { return static_cast<int>(values_.cols()); }

    double value(std::size_t a, int point) const {
        return values_(a, static_cast<std::size_t>(point));
    }
    std::span<const double> row(std::size_t a) const { return values_.row(a); }
    bool is_infinite(std::size_t a) const { return infinite_[a] != 0; }

  private:
    Matrix values_;
    std::vector<char> infinite_;
};

DistanceProfile distance_profile(const MetricSpace& space, const Cover& cover);

/// One rho-multiplicity evaluation. `exact` is true when the value was
/// obtained by exhaustive subset enumeration (or when any diameter-<=rho set
/// is necessarily a singleton); otherwise the value is the certified lower
/// bound over the family of closed rho/2-balls.
struct RhoMultiplicity {
    double rho = 0.0;
    int value = 0;
    bool exact = false;
};

struct LebesgueReport {
    std::vector<double> pointwise;  // per point: max over members of the profile
    double optimal = 0.0;           // min over points of pointwise
    int multiplicity = 0;
    std::vector<RhoMultiplicity> rho_multiplicity;

    bool finite() const { return optimal != kInfinite; }
};

/// Exhaustive enumeration threshold for rho-multiplicity: spaces up to this
/// size scan all point subsets; larger spaces fall back to the ball family.
constexpr int kExactRhoMultiplicityLimit = 12;

LebesgueReport lebesgue_report(const MetricSpace& space, const Cover& cover,
                               const std::vector<double>& rhos = {});

/// True iff pairwise distinct members of the family have set distance
/// strictly greater than rho. Vacuously true for families of size < 2.
bool is_rho_disjoint(const MetricSpace& space,
                     const std::vector<std::vector<int>>& family, double rho);

/// max over pairs (x, y) of [ min over z of max(dist(x,z), dist(z,y)) -
/// dist(x,y)/2 ]. Zero when every pair has an exact midpoint in the space.
double midpoint_defect(const MetricSpace& space);

struct DiscretePath {
    std::vector<int> points;  // source first, target last: K + 2 entries
    int step_count = 0;       // K
    double epsilon = 0.0;
    double max_step = 0.0;    // realized largest step
};

/// Builds a path from source to target whose K + 1 steps are each at most
/// dist(source,target)/(K+1) + eps: repeated greedy bisection to the first
/// power of two >= K + 1, then proportional index subsampling. Throws
/// NoPathWithinEps when the greedy chain cannot meet the bound; finite
/// spaces need not admit one.
DiscretePath discrete_path(const MetricSpace& space, int source, int target, int K,
                           double eps);

enum class AmpStatus {
    Holds,             // min top-two sum >= twice the optimal Lebesgue number
    WithinDefectSlack, // shortfall explicable by the midpoint defect
    NotApplicable,     // defect so large the slack swallows the whole bound
    Failed,            // shortfall beyond what the defect can account for
};

const char* to_string(AmpStatus status) noexcept;

/// Slack factor: a space with midpoint defect d is treated as consistent
/// with the midpoint-property conclusion down to 2 L* - kAmpSlackFactor * d.
/// (Grid discretizations of step h have defect h/2 and degrade the top-two
/// sum by up to 2 h.)
constexpr double kAmpSlackFactor = 4.0;

struct TopTwoReport {
    bool first_bound_ok = false;   // largest profile value >= L* at every point
    double min_top_two_sum = 0.0;  // min over points of the two largest values
    double optimal_lebesgue = 0.0;
    double midpoint_defect = 0.0;
    AmpStatus status = AmpStatus::Failed;
    int argmin_point = -1;
};

TopTwoReport top_two_report(const MetricSpace& space, const Cover& cover);

}  // namespace pou
