#pragma once

// Shared fixtures and independent oracles for the test binaries. Oracles are
// deliberately written in a different style than the library (plain
// enumeration, dense linear solves) so the two routes stay independent.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pou/cover.hpp"
#include "pou/kuhn.hpp"
#include "pou/metric_space.hpp"
#include "pou/partition.hpp"
#include "pou/refine.hpp"

namespace pou::testing {

// ---------------------------------------------------------------------------
// fixtures

/// Points 0, spacing, 2*spacing, ... on the real line (Euclidean).
inline MetricSpace line_space(int count, double spacing = 1.0) {
    std::vector<std::vector<double>> coords;
    coords.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) coords.push_back({spacing * i});
    return MetricSpace::from_points(std::move(coords));
}

/// 1-D grid lo, lo+step, ..., hi (hi included when it lands on the grid).
inline MetricSpace grid_space(double lo, double hi, double step) {
    std::vector<std::vector<double>> coords;
    const int count = static_cast<int>(std::round((hi - lo) / step));
    for (int i = 0; i <= count; ++i) coords.push_back({lo + step * i});
    return MetricSpace::from_points(std::move(coords));
}

/// Contiguous index range [lo, hi] as a cover member.
inline std::vector<int> index_range(int lo, int hi) {
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
}

/// Interval [-L, L] sampled at the given step, plus one extra point at
/// distance exactly L from every grid point. Not Euclidean, so the space is
/// built from the full matrix.
inline MetricSpace interval_with_apex_space(double step, double L = 1.0) {
    const int count = static_cast<int>(std::round(2.0 * L / step));
    const int n = count + 2;  // grid points plus the apex
    std::vector<double> position(static_cast<std::size_t>(count) + 1);
    for (int i = 0; i <= count; ++i) position[static_cast<std::size_t>(i)] = -L + step * i;
    std::vector<std::vector<double>> matrix(static_cast<std::size_t>(n),
                                            std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i <= count; ++i) {
        for (int j = 0; j <= count; ++j) {
            matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                std::abs(position[static_cast<std::size_t>(i)] -
                         position[static_cast<std::size_t>(j)]);
        }
        matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1)] = L;
        matrix[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)] = L;
    }
    std::vector<std::string> labels;
    for (int i = 0; i <= count; ++i) labels.push_back(std::to_string(position[static_cast<std::size_t>(i)]));
    labels.push_back("apex");
    return MetricSpace::validated(std::move(matrix), std::move(labels));
}

/// Cover for interval_with_apex_space: the full interval, and multiplicity-1
/// copies of (0, L] plus the apex. Optimal Lebesgue number L, multiplicity M.
inline Cover interval_with_apex_cover(const MetricSpace& space, int multiplicity,
                                      double step, double L = 1.0) {
    const int count = static_cast<int>(std::round(2.0 * L / step));
    const int apex = count + 1;
    std::vector<int> interval = index_range(0, count);
    std::vector<int> upper;
    for (int i = 0; i <= count; ++i) {
        if (-L + step * i > 0.0) upper.push_back(i);
    }
    upper.push_back(apex);
    std::vector<std::string> names;
    std::vector<std::vector<int>> members;
    names.push_back("1");
    members.push_back(interval);
    for (int m = 2; m <= multiplicity; ++m) {
        names.push_back(std::to_string(m));
        members.push_back(upper);
    }
    return Cover::create(std::move(names), std::move(members), space.size());
}

/// Grid on [-1, 3]; cover member 1 is [-1, 2), members 2..M are (0, 3].
/// Optimal Lebesgue number 1, multiplicity M, midpoint defect step/2.
inline MetricSpace halfline_space(double step) { return grid_space(-1.0, 3.0, step); }

inline Cover halfline_cover(const MetricSpace& space, int multiplicity, double step) {
    std::vector<int> lower;
    std::vector<int> upper;
    for (int i = 0; i < space.size(); ++i) {
        const double x = -1.0 + step * i;
        if (x < 2.0) lower.push_back(i);
        if (x > 0.0) upper.push_back(i);
    }
    std::vector<std::string> names{"1"};
    std::vector<std::vector<int>> members{lower};
    for (int m = 2; m <= multiplicity; ++m) {
        names.push_back(std::to_string(m));
        members.push_back(upper);
    }
    return Cover::create(std::move(names), std::move(members), space.size());
}

/// per_side x per_side grid cloud on [lo, hi]^2.
inline MetricSpace cloud_space(int per_side, double lo, double hi) {
    std::vector<std::vector<double>> coords;
    const double step = (hi - lo) / (per_side - 1);
    for (int i = 0; i < per_side; ++i) {
        for (int j = 0; j < per_side; ++j) {
            coords.push_back({lo + step * i, lo + step * j});
        }
    }
    return MetricSpace::from_points(std::move(coords));
}

/// Two overlapping vertical slabs x <= split_hi and x >= split_lo.
inline Cover slab_cover(const MetricSpace& space, double split_lo, double split_hi) {
    std::vector<int> left;
    std::vector<int> right;
    for (int i = 0; i < space.size(); ++i) {
        const double x = space.coords()[static_cast<std::size_t>(i)][0];
        if (x <= split_hi) left.push_back(i);
        if (x >= split_lo) right.push_back(i);
    }
    return Cover::create({"1", "2"}, {std::move(left), std::move(right)}, space.size());
}

// ---------------------------------------------------------------------------
// random instances

inline MetricSpace random_euclidean_space(std::mt19937_64& rng, int points, int dim,
                                          double box = 10.0) {
    std::uniform_real_distribution<double> coord(0.0, box);
    std::vector<std::vector<double>> coords;
    coords.reserve(static_cast<std::size_t>(points));
    while (static_cast<int>(coords.size()) < points) {
        std::vector<double> c(static_cast<std::size_t>(dim));
        for (double& v : c) v = coord(rng);
        bool fresh = true;
        for (const auto& other : coords) {
            double d2 = 0.0;
            for (int k = 0; k < dim; ++k) d2 += (c[static_cast<std::size_t>(k)] - other[static_cast<std::size_t>(k)]) *
                                                (c[static_cast<std::size_t>(k)] - other[static_cast<std::size_t>(k)]);
            if (d2 < 1e-6) {
                fresh = false;
                break;
            }
        }
        if (fresh) coords.push_back(std::move(c));
    }
    return MetricSpace::from_points(std::move(coords));
}

/// Random ball cover patched to cover everything: each member starts from a
/// random center and radius, and every uncovered point joins the member with
/// the nearest center.
inline Cover random_ball_cover(std::mt19937_64& rng, const MetricSpace& space, int sets) {
    const int n = space.size();
    const double diameter = space.diameter();
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_real_distribution<double> radius_frac(0.15, 0.6);
    std::vector<int> centers(static_cast<std::size_t>(sets));
    std::vector<std::vector<int>> members(static_cast<std::size_t>(sets));
    for (int a = 0; a < sets; ++a) {
        centers[static_cast<std::size_t>(a)] = pick(rng);
        const double radius = radius_frac(rng) * diameter;
        for (int x = 0; x < n; ++x) {
            if (space.dist(centers[static_cast<std::size_t>(a)], x) < radius) {
                members[static_cast<std::size_t>(a)].push_back(x);
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        bool covered = false;
        for (const auto& member : members) {
            if (std::find(member.begin(), member.end(), x) != member.end()) {
                covered = true;
                break;
            }
        }
        if (covered) continue;
        int best = 0;
        for (int a = 1; a < sets; ++a) {
            if (space.dist(centers[static_cast<std::size_t>(a)], x) <
                space.dist(centers[static_cast<std::size_t>(best)], x)) {
                best = a;
            }
        }
        members[static_cast<std::size_t>(best)].push_back(x);
    }
    std::vector<std::string> names;
    for (int a = 0; a < sets; ++a) names.push_back(std::to_string(a));
    return Cover::create(std::move(names), std::move(members), n);
}

// ---------------------------------------------------------------------------
// oracles

/// Grid-scan oracle for the peak of eta^(p-1) / (eta^p + (1-eta)^p).
inline double amp_constant_grid_oracle(double p, int samples = 1000000) {
    double best = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double eta = 0.5 + 0.5 * static_cast<double>(i) / samples;
        const double value =
            std::pow(eta, p - 1.0) / (std::pow(eta, p) + std::pow(1.0 - eta, p));
        best = std::max(best, value);
    }
    return best;
}

/// All nonempty subsets of {0, ..., k-1}.
inline std::vector<std::vector<std::size_t>> all_subsets(std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<std::size_t> mu;
        for (std::size_t a = 0; a < k; ++a) {
            if (mask & (std::uint64_t{1} << a)) mu.push_back(a);
        }
        out.push_back(std::move(mu));
    }
    return out;
}

/// max over all index subsets of (partial sum at x) - (partial sum at y),
/// by full enumeration.
inline double subset_max_oracle(const PartitionOfUnity& pou, int x, int y) {
    double best = 0.0;
    for (const auto& mu : all_subsets(pou.set_count())) {
        double sx = 0.0;
        double sy = 0.0;
        for (std::size_t a : mu) {
            sx += pou.value(x, a);
            sy += pou.value(y, a);
        }
        best = std::max(best, sx - sy);
    }
    return best;
}

/// Recursive enumeration of subsets of diameter <= rho, counting intersected
/// cover members. Independent of the bitmask scan in the library.
inline int rho_multiplicity_oracle(const MetricSpace& space, const Cover& cover, double rho) {
    int best = 0;
    std::vector<int> chosen;
    auto count_intersected = [&]() {
        int count = 0;
        for (std::size_t a = 0; a < cover.set_count(); ++a) {
            for (int p : chosen) {
                if (cover.contains(a, p)) {
                    ++count;
                    break;
                }
            }
        }
        return count;
    };
    auto recurse = [&](auto&& self, int next) -> void {
        if (!chosen.empty()) best = std::max(best, count_intersected());
        for (int p = next; p < space.size(); ++p) {
            bool fits = true;
            for (int q : chosen) {
                if (space.dist(q, p) > rho) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            chosen.push_back(p);
            self(self, p + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);
    return best;
}

/// Dense Gaussian elimination with partial pivoting; returns false when the
/// system is (numerically) singular.
inline bool solve_dense(std::vector<std::vector<double>> a, std::vector<double> b,
                        std::vector<double>& out) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (std::abs(a[pivot][col]) < 1e-12) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    out.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) out[i] = b[i] / a[i][i];
    return true;
}

/// Affine solve for the barycentric weights of x with respect to the given
/// lattice vertices: sum w_k * vertex_k = x and sum w_k = 1.
inline std::vector<double> barycentric_oracle(const KuhnGrid& grid,
                                              const std::vector<LatticePoint>& vertices,
                                              std::span<const double> x) {
    const std::size_t n = static_cast<std::size_t>(grid.dim);
    std::vector<std::vector<double>> a(n + 1, std::vector<double>(n + 1, 0.0));
    std::vector<double> b(n + 1, 0.0);
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t k = 0; k <= n; ++k) {
            a[row][k] = grid.spacing * static_cast<double>(vertices[k][row]);
        }
        b[row] = x[row];
    }
    for (std::size_t k = 0; k <= n; ++k) a[n][k] = 1.0;
    b[n] = 1.0;
    std::vector<double> weights;
    if (!solve_dense(std::move(a), std::move(b), weights)) {
        weights.assign(n + 1, std::numeric_limits<double>::quiet_NaN());
    }
    return weights;
}

/// Brute-force decomposition oracle: per point, enumerate every index subset,
/// test the threshold conditions directly, and keep the (unique) membership
/// of largest size. Returns one subset per point.
inline std::vector<std::vector<std::size_t>> decomposition_assignment_oracle(
    const PartitionOfUnity& pou, const DecompositionParams& params) {
    const int M = params.multiplicity;
    std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(pou.point_count()));
    for (int x = 0; x < pou.point_count(); ++x) {
        std::vector<std::size_t> best;
        for (const auto& mu : all_subsets(pou.set_count())) {
            const int k = static_cast<int>(mu.size());
            if (k > M) continue;
            const double gate_in = static_cast<double>(M - k + 1) * params.epsilon;
            const double gate_out = static_cast<double>(M - k + 1) * params.zeta;
            bool member = true;
            for (std::size_t a = 0; a < pou.set_count() && member; ++a) {
                const bool in_mu = std::find(mu.begin(), mu.end(), a) != mu.end();
                const double v = pou.value(x, a);
                if (in_mu && !(v > gate_in)) member = false;
                if (!in_mu && !(v < gate_out)) member = false;
            }
            if (member && mu.size() > best.size()) best = mu;
        }
        out[static_cast<std::size_t>(x)] = std::move(best);
    }
    return out;
}

}  // namespace pou::testing
