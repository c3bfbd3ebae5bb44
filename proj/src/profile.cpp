#include "pou/profile.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pou/error.hpp"
#include "pou/parallel.hpp"

namespace pou {

DistanceProfile distance_profile(const MetricSpace& space, const Cover& cover) {
    const int n = space.size();
    if (cover.point_count() != n) {
        Error::raise(ErrorKind::IndexMismatch, "cover was built for a different space");
    }
    const std::size_t sets = cover.set_count();
    Matrix values(sets, static_cast<std::size_t>(n), 0.0);
    std::vector<char> infinite(sets, 0);
    for (std::size_t a = 0; a < sets; ++a) {
        if (cover.is_whole_space(a)) {
            infinite[a] = 1;
            for (int x = 0; x < n; ++x) values(a, static_cast<std::size_t>(x)) = kInfinite;
            continue;
        }
        for (int x = 0; x < n; ++x) {
            double best = kInfinite;
            for (int y = 0; y < n; ++y) {
                if (!cover.contains(a, y)) best = std::min(best, space.dist(x, y));
            }
            values(a, static_cast<std::size_t>(x)) = best;
        }
    }
    return DistanceProfile(std::move(values), std::move(infinite));
}

namespace {

// Largest number of cover members intersected by any subset of diameter at
// most rho, by exhaustive scan over all nonempty point subsets. Exponential;
// callers gate on the space size.
int rho_multiplicity_exact(const MetricSpace& space, const Cover& cover, double rho) {
    const int n = space.size();
    const std::size_t masks = std::size_t{1} << n;
    int best = 0;
    std::vector<int> subset;
    subset.reserve(static_cast<std::size_t>(n));
    for (std::size_t mask = 1; mask < masks; ++mask) {
        subset.clear();
        bool small = true;
        for (int p = 0; p < n && small; ++p) {
            if (!(mask & (std::size_t{1} << p))) continue;
            for (int q : subset) {
                if (space.dist(q, p) > rho) {
                    small = false;
                    break;
                }
            }
            subset.push_back(p);
        }
        if (!small) continue;
        int count = 0;
        for (std::size_t a = 0; a < cover.set_count(); ++a) {
            for (int p : subset) {
                if (cover.contains(a, p)) {
                    ++count;
                    break;
                }
            }
        }
        best = std::max(best, count);
    }
    return best;
}

// Lower bound via the family of closed rho/2-balls, each of diameter <= rho.
int rho_multiplicity_ball_family(const MetricSpace& space, const Cover& cover, double rho) {
    const int n = space.size();
    int best = 0;
    std::vector<char> in_ball(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        for (int y = 0; y < n; ++y) {
            in_ball[static_cast<std::size_t>(y)] = space.dist(c, y) <= rho / 2.0 ? 1 : 0;
        }
        int count = 0;
        for (std::size_t a = 0; a < cover.set_count(); ++a) {
            for (int y : cover.member(a)) {
                if (in_ball[static_cast<std::size_t>(y)]) {
                    ++count;
                    break;
                }
            }
        }
        best = std::max(best, count);
    }
    return best;
}

}  // namespace

LebesgueReport lebesgue_report(const MetricSpace& space, const Cover& cover,
                               const std::vector<double>& rhos) {
    const DistanceProfile profile = distance_profile(space, cover);
    const int n = space.size();

    LebesgueReport report;
    report.pointwise.assign(static_cast<std::size_t>(n), 0.0);
    for (int x = 0; x < n; ++x) {
        double best = 0.0;
        for (std::size_t a = 0; a < profile.set_count(); ++a) {
            best = std::max(best, profile.value(a, x));
        }
        report.pointwise[static_cast<std::size_t>(x)] = best;
    }
    report.optimal = *std::min_element(report.pointwise.begin(), report.pointwise.end());
    report.multiplicity = cover.multiplicity();

    const double min_positive = space.min_positive_distance();
    for (double rho : rhos) {
        if (!(rho > 0.0)) {
            Error::raise(ErrorKind::BadParameter, "rho values must be positive");
        }
        RhoMultiplicity entry;
        entry.rho = rho;
        if (n <= kExactRhoMultiplicityLimit) {
            entry.value = rho_multiplicity_exact(space, cover, rho);
            entry.exact = true;
        } else if (rho < min_positive) {
            // Any set of diameter <= rho is a single point.
            entry.value = report.multiplicity;
            entry.exact = true;
        } else {
            entry.value = rho_multiplicity_ball_family(space, cover, rho);
            entry.exact = false;
        }
        report.rho_multiplicity.push_back(entry);
    }
    return report;
}

bool is_rho_disjoint(const MetricSpace& space, const std::vector<std::vector<int>>& family,
                     double rho) {
    for (const auto& member : family) {
        if (member.empty()) {
            Error::raise(ErrorKind::EmptyMember, "rho-disjointness of an empty subset");
        }
        for (int p : member) {
            if (p < 0 || p >= space.size()) {
                Error::raise(ErrorKind::IndexMismatch,
                             "family references unknown point " + std::to_string(p));
            }
        }
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (space.set_distance(family[i], family[j]) <= rho) return false;
        }
    }
    return true;
}

double midpoint_defect(const MetricSpace& space) {
    const int n = space.size();
    if (n < 2) Error::raise(ErrorKind::TooFewPoints, "midpoint defect needs two points");
    const double worst = parallel_index_reduce(
        static_cast<std::size_t>(n), 0.0,
        [&](std::size_t xi, double& acc) {
            const int x = static_cast<int>(xi);
            for (int y = x + 1; y < n; ++y) {
                double best = kInfinite;
                for (int z = 0; z < n; ++z) {
                    best = std::min(best, std::max(space.dist(x, z), space.dist(z, y)));
                }
                acc = std::max(acc, best - space.dist(x, y) / 2.0);
            }
        },
        [](double& a, double b) { a = std::max(a, b); });
    return worst;
}

DiscretePath discrete_path(const MetricSpace& space, int source, int target, int K,
                           double eps) {
    const int n = space.size();
    if (source < 0 || source >= n || target < 0 || target >= n) {
        Error::raise(ErrorKind::IndexMismatch, "path endpoints outside the space");
    }
    if (K < 0) Error::raise(ErrorKind::BadParameter, "negative step count");
    if (eps < 0.0) Error::raise(ErrorKind::BadParameter, "negative path tolerance");

    // Greedy bisection chain of 2^k steps, k minimal with 2^k >= K + 1.
    // Deeper chains only accumulate more bisection defect, so the minimal
    // depth is also the best one for the final step bound.
    std::size_t segments = 1;
    while (segments < static_cast<std::size_t>(K) + 1) segments *= 2;
    std::vector<int> chain = {source, target};
    while (chain.size() < segments + 1) {
        std::vector<int> next;
        next.reserve(chain.size() * 2 - 1);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            const int a = chain[i];
            const int b = chain[i + 1];
            int best_z = a;
            double best = kInfinite;
            for (int z = 0; z < n; ++z) {
                const double reach = std::max(space.dist(a, z), space.dist(z, b));
                if (reach < best) {
                    best = reach;
                    best_z = z;
                }
            }
            next.push_back(a);
            next.push_back(best_z);
        }
        next.push_back(chain.back());
        chain = std::move(next);
    }

    // Proportional subsample: index i of the result maps to the chain index
    // ceil(i * segments / (K+1)), the smallest index at or above the exact
    // fraction.
    DiscretePath path;
    path.step_count = K;
    path.epsilon = eps;
    path.points.reserve(static_cast<std::size_t>(K) + 2);
    for (int i = 0; i <= K + 1; ++i) {
        const std::size_t num = static_cast<std::size_t>(i) * segments;
        const std::size_t den = static_cast<std::size_t>(K) + 1;
        path.points.push_back(chain[(num + den - 1) / den]);
    }

    const double total = space.dist(source, target);
    const double budget = total / (static_cast<double>(K) + 1.0) + eps;
    const double fp_slack = 1e-12 * (total + 1.0);
    double max_step = 0.0;
    for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
        max_step = std::max(max_step, space.dist(path.points[i], path.points[i + 1]));
    }
    if (max_step > budget + fp_slack) {
        Error::raise(ErrorKind::NoPathWithinEps,
                     "greedy bisection step " + std::to_string(max_step) +
                         " exceeds budget " + std::to_string(budget));
    }
    path.max_step = max_step;
    return path;
}

const char* to_string(AmpStatus status) noexcept {
    switch (status) {
        case AmpStatus::Holds: return "holds";
        case AmpStatus::WithinDefectSlack: return "within_defect_slack";
        case AmpStatus::NotApplicable: return "not_applicable";
        case AmpStatus::Failed: return "failed";
    }
    return "unknown";
}

TopTwoReport top_two_report(const MetricSpace& space, const Cover& cover) {
    const DistanceProfile profile = distance_profile(space, cover);
    const LebesgueReport lebesgue = lebesgue_report(space, cover);
    const int n = space.size();

    TopTwoReport report;
    report.optimal_lebesgue = lebesgue.optimal;
    report.midpoint_defect = n >= 2 ? midpoint_defect(space) : 0.0;

    report.first_bound_ok = true;
    report.min_top_two_sum = kInfinite;
    report.argmin_point = 0;
    for (int x = 0; x < n; ++x) {
        double first = 0.0;
        double second = 0.0;
        for (std::size_t a = 0; a < profile.set_count(); ++a) {
            const double v = profile.value(a, x);
            if (v > first) {
                second = first;
                first = v;
            } else if (v > second) {
                second = v;
            }
        }
        if (first < lebesgue.optimal) report.first_bound_ok = false;
        const double sum = first + second;
        if (sum < report.min_top_two_sum) {
            report.min_top_two_sum = sum;
            report.argmin_point = x;
        }
    }

    const double target = 2.0 * lebesgue.optimal;
    const double slack = kAmpSlackFactor * report.midpoint_defect;
    if (!lebesgue.finite() || report.min_top_two_sum >= target) {
        report.status = AmpStatus::Holds;
    } else if (slack >= target) {
        report.status = AmpStatus::NotApplicable;
    } else if (report.min_top_two_sum >= target - slack) {
        report.status = AmpStatus::WithinDefectSlack;
    } else {
        report.status = AmpStatus::Failed;
    }
    return report;
}

}  // namespace pou
