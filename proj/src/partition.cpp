#include "pou/partition.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pou/error.hpp"
#include "pou/parallel.hpp"

namespace pou {

std::vector<std::size_t> PartitionOfUnity::support(int point) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < set_count(); ++a) {
        if (value(point, a) > 0.0) out.push_back(a);
    }
    return out;
}

PartitionOfUnity build_partition(const MetricSpace& space, const Cover& cover, double p) {
    if (!(p >= 1.0)) Error::raise(ErrorKind::BadExponent, "partition exponent must be >= 1");
    DistanceProfile profile = distance_profile(space, cover);
    const int n = space.size();
    const std::size_t sets = cover.set_count();

    std::size_t infinite_count = 0;
    for (std::size_t a = 0; a < sets; ++a) {
        if (profile.is_infinite(a)) ++infinite_count;
    }

    Matrix values(static_cast<std::size_t>(n), sets, 0.0);
    if (infinite_count > 0) {
        // Members covering the whole space dominate everything else: the
        // partition degenerates to constants, split equally among them.
        const double share = 1.0 / static_cast<double>(infinite_count);
        for (std::size_t a = 0; a < sets; ++a) {
            if (!profile.is_infinite(a)) continue;
            for (int x = 0; x < n; ++x) values(static_cast<std::size_t>(x), a) = share;
        }
        return PartitionOfUnity(std::move(values), p, cover, std::move(profile));
    }

    for (int x = 0; x < n; ++x) {
        // Scale by the largest profile value before exponentiating so large
        // p cannot overflow.
        double top = 0.0;
        for (std::size_t a = 0; a < sets; ++a) top = std::max(top, profile.value(a, x));
        if (top <= 0.0) {
            Error::raise(ErrorKind::NotCovered,
                         "no member has positive distance profile at point " +
                             std::to_string(x));
        }
        double denom = 0.0;
        for (std::size_t a = 0; a < sets; ++a) {
            const double scaled = profile.value(a, x) / top;
            const double power = scaled > 0.0 ? std::pow(scaled, p) : 0.0;
            values(static_cast<std::size_t>(x), a) = power;
            denom += power;
        }
        for (std::size_t a = 0; a < sets; ++a) {
            values(static_cast<std::size_t>(x), a) /= denom;
        }
    }
    return PartitionOfUnity(std::move(values), p, cover, std::move(profile));
}

std::vector<double> partial_sum(const PartitionOfUnity& pou,
                                std::span<const std::size_t> mu) {
    for (std::size_t a : mu) {
        if (a >= pou.set_count()) {
            Error::raise(ErrorKind::UnknownIndex,
                         "partial sum over unknown member index " + std::to_string(a));
        }
    }
    const int n = pou.point_count();
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    for (int x = 0; x < n; ++x) {
        double s = 0.0;
        for (std::size_t a : mu) s += pou.value(x, a);
        out[static_cast<std::size_t>(x)] = s;
    }
    return out;
}

Matrix root_values(const PartitionOfUnity& pou) {
    const double inv_p = 1.0 / pou.exponent();
    Matrix out(static_cast<std::size_t>(pou.point_count()), pou.set_count());
    for (int x = 0; x < pou.point_count(); ++x) {
        for (std::size_t a = 0; a < pou.set_count(); ++a) {
            out(static_cast<std::size_t>(x), a) = std::pow(pou.value(x, a), inv_p);
        }
    }
    return out;
}

namespace {

// Max-with-witness accumulator whose fold is independent of visiting order:
// ties are broken toward the lexicographically smallest pair.
struct PairMax {
    double value = -1.0;
    int x = -1;
    int y = -1;

    void offer(double v, int px, int py) {
        if (v > value || (v == value && (px < x || (px == x && py < y)))) {
            value = v;
            x = px;
            y = py;
        }
    }
    void merge(const PairMax& other) {
        if (other.x >= 0) offer(other.value, other.x, other.y);
    }
};

template <class PairValue>
LipschitzEstimate sweep_pairs(const MetricSpace& space, PairValue pair_value) {
    const int n = space.size();
    if (n < 2) Error::raise(ErrorKind::TooFewPoints, "Lipschitz sweep needs two points");
    PairMax best = parallel_index_reduce(
        static_cast<std::size_t>(n), PairMax{},
        [&](std::size_t xi, PairMax& acc) {
            const int x = static_cast<int>(xi);
            for (int y = x + 1; y < n; ++y) {
                acc.offer(pair_value(x, y) / space.dist(x, y), x, y);
            }
        },
        [](PairMax& acc, const PairMax& part) { acc.merge(part); });
    return LipschitzEstimate{std::max(best.value, 0.0), best.x, best.y};
}

}  // namespace

LipschitzEstimate empirical_lipschitz(std::span<const double> f, const MetricSpace& space) {
    if (f.size() != static_cast<std::size_t>(space.size())) {
        Error::raise(ErrorKind::IndexMismatch, "function values do not match the space");
    }
    return sweep_pairs(space, [&](int x, int y) {
        return std::abs(f[static_cast<std::size_t>(x)] - f[static_cast<std::size_t>(y)]);
    });
}

PartialSumLipschitz worst_partial_sum_lipschitz(const PartitionOfUnity& pou,
                                                const MetricSpace& space) {
    // Per pair the maximizing subset is { a : value(x,a) > value(y,a) }, so
    // the maximal difference is the sum of the positive coordinate
    // differences; no subset enumeration is needed.
    const std::size_t sets = pou.set_count();
    LipschitzEstimate best = sweep_pairs(space, [&](int x, int y) {
        std::span<const double> rx = pou.row(x);
        std::span<const double> ry = pou.row(y);
        double positive = 0.0;
        for (std::size_t a = 0; a < sets; ++a) {
            const double diff = rx[a] - ry[a];
            if (diff > 0.0) positive += diff;
        }
        return positive;
    });

    PartialSumLipschitz out;
    out.constant = best.constant;
    out.x = best.x;
    out.y = best.y;
    for (std::size_t a = 0; a < sets; ++a) {
        if (pou.value(best.x, a) > pou.value(best.y, a)) out.mu.push_back(a);
    }
    return out;
}

double lq_distance(const PartitionOfUnity& pou, int x, int y, double q) {
    if (!(q >= 1.0)) Error::raise(ErrorKind::BadExponent, "norm exponent must be >= 1");
    std::span<const double> rx = pou.row(x);
    std::span<const double> ry = pou.row(y);
    if (std::isinf(q)) {
        double best = 0.0;
        for (std::size_t a = 0; a < rx.size(); ++a) {
            best = std::max(best, std::abs(rx[a] - ry[a]));
        }
        return best;
    }
    double sum = 0.0;
    for (std::size_t a = 0; a < rx.size(); ++a) {
        sum += std::pow(std::abs(rx[a] - ry[a]), q);
    }
    return std::pow(sum, 1.0 / q);
}

LipschitzEstimate vector_lipschitz(const PartitionOfUnity& pou, const MetricSpace& space,
                                   double q) {
    if (!(q >= 1.0)) Error::raise(ErrorKind::BadExponent, "norm exponent must be >= 1");
    return sweep_pairs(space, [&](int x, int y) { return lq_distance(pou, x, y, q); });
}

VectorizedPartition vectorize(const PartitionOfUnity& pou, double q) {
    if (!(q >= 1.0)) Error::raise(ErrorKind::BadExponent, "norm exponent must be >= 1");
    return VectorizedPartition{&pou, q};
}

}  // namespace pou
