#include "pou/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "pou/error.hpp"
#include "pou/parallel.hpp"

namespace pou {

namespace {

double tolerance_for(double a, double b) {
    return kMetricTolerance * std::max({std::abs(a), std::abs(b), 1.0});
}

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
    if (labels.empty()) {
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != n) {
        Error::raise(ErrorKind::BadParameter,
                     "label count " + std::to_string(labels.size()) +
                         " does not match point count " + std::to_string(n));
    }
    return labels;
}

std::vector<double> flatten_checked(const std::vector<std::vector<double>>& matrix) {
    const std::size_t n = matrix.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : matrix) {
        if (row.size() != n) {
            Error::raise(ErrorKind::BadParameter, "distance matrix is not square");
        }
        for (double v : row) {
            if (!std::isfinite(v)) {
                Error::raise(ErrorKind::BadParameter, "distance matrix entry is not finite");
            }
            flat.push_back(v);
        }
    }
    return flat;
}

// Symmetry, diagonal, sign, and distinctness checks shared by both
// construction paths. The cubic triangle scan is separate because
// coordinate-derived matrices satisfy it by construction.
void check_basic_axioms(const std::vector<double>& d, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i * n + i] != 0.0) {
            Error::raise(ErrorKind::BadParameter,
                         "nonzero diagonal entry at index " + std::to_string(i));
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dij = d[i * n + j];
            const double dji = d[j * n + i];
            if (dij < 0.0 || dji < 0.0) {
                Error::raise(ErrorKind::NegativeEntry,
                             "negative distance between points " + std::to_string(i) +
                                 " and " + std::to_string(j));
            }
            if (std::abs(dij - dji) > tolerance_for(dij, dji)) {
                std::ostringstream msg;
                msg << "entries (" << i << "," << j << ") and (" << j << "," << i
                    << ") differ: " << dij << " vs " << dji;
                Error::raise(ErrorKind::AsymmetricMatrix, msg.str());
            }
            if (dij == 0.0 && dji == 0.0) {
                Error::raise(ErrorKind::ZeroDistance,
                             "distinct points " + std::to_string(i) + " and " +
                                 std::to_string(j) + " are at distance zero");
            }
        }
    }
}

void check_triangle_inequality(const std::vector<double>& d, std::size_t n) {
    // Worst offending triple (a, via, b) for d(a,b) <= d(a,via) + d(via,b),
    // found by sweeping the middle point in parallel.
    struct Worst {
        double excess = 0.0;
        std::size_t a = 0, via = 0, b = 0;
    };
    Worst worst = parallel_index_reduce(
        n, Worst{},
        [&](std::size_t via, Worst& acc) {
            for (std::size_t a = 0; a < n; ++a) {
                if (a == via) continue;
                const double leg_a = d[a * n + via];
                for (std::size_t b = a + 1; b < n; ++b) {
                    if (b == via) continue;
                    const double excess = d[a * n + b] - leg_a - d[via * n + b];
                    if (excess > acc.excess) acc = Worst{excess, a, via, b};
                }
            }
        },
        [](Worst& acc, const Worst& part) {
            if (part.excess > acc.excess) acc = part;
        });
    if (worst.excess > 0.0) {
        const double direct = d[worst.a * n + worst.b];
        const double tol = kMetricTolerance * std::max(direct, 1.0);
        if (worst.excess > tol) {
            std::ostringstream msg;
            msg << "d(" << worst.a << "," << worst.b << ") exceeds d(" << worst.a << ","
                << worst.via << ") + d(" << worst.via << "," << worst.b << ") by "
                << worst.excess;
            Error::raise(ErrorKind::TriangleViolation, msg.str());
        }
    }
}

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        s += diff * diff;
    }
    return std::sqrt(s);
}

void check_coords(const std::vector<double>& d, std::size_t n,
                  const std::vector<std::vector<double>>& coords) {
    if (coords.size() != n) {
        Error::raise(ErrorKind::CoordMismatch, "coordinate count does not match matrix size");
    }
    const std::size_t dim = coords.empty() ? 0 : coords[0].size();
    if (dim == 0) {
        Error::raise(ErrorKind::CoordMismatch, "coordinates must have positive dimension");
    }
    for (const auto& c : coords) {
        if (c.size() != dim) {
            Error::raise(ErrorKind::CoordMismatch, "inconsistent coordinate dimensions");
        }
        for (double v : c) {
            if (!std::isfinite(v)) {
                Error::raise(ErrorKind::CoordMismatch, "coordinate entry is not finite");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double expected = euclidean(coords[i], coords[j]);
            if (std::abs(d[i * n + j] - expected) > tolerance_for(d[i * n + j], expected)) {
                std::ostringstream msg;
                msg << "entry (" << i << "," << j << ") = " << d[i * n + j]
                    << " but coordinates give " << expected;
                Error::raise(ErrorKind::CoordMismatch, msg.str());
            }
        }
    }
}

}  // namespace

MetricSpace::MetricSpace(std::vector<double> dist, std::vector<std::string> labels,
                         std::vector<std::vector<double>> coords)
    : dist_(std::move(dist)), labels_(std::move(labels)), coords_(std::move(coords)) {}

MetricSpace MetricSpace::validated(std::vector<std::vector<double>> matrix,
                                   std::vector<std::string> labels,
                                   std::optional<std::vector<std::vector<double>>> coords) {
    const std::size_t n = matrix.size();
    if (n == 0) Error::raise(ErrorKind::BadParameter, "empty distance matrix");
    std::vector<double> flat = flatten_checked(matrix);
    check_basic_axioms(flat, n);
    check_triangle_inequality(flat, n);
    if (coords) check_coords(flat, n, *coords);
    return MetricSpace(std::move(flat), default_labels(n, std::move(labels)),
                       coords ? std::move(*coords) : std::vector<std::vector<double>>{});
}

MetricSpace MetricSpace::from_matrix(std::vector<std::vector<double>> matrix,
                                     std::vector<std::string> labels) {
    return validated(std::move(matrix), std::move(labels), std::nullopt);
}

MetricSpace MetricSpace::from_points(std::vector<std::vector<double>> coords,
                                     std::vector<std::string> labels) {
    const std::size_t n = coords.size();
    if (n == 0) Error::raise(ErrorKind::BadParameter, "empty coordinate list");
    const std::size_t dim = coords[0].size();
    if (dim == 0) Error::raise(ErrorKind::BadParameter, "coordinates must have positive dimension");
    for (const auto& c : coords) {
        if (c.size() != dim) {
            Error::raise(ErrorKind::BadParameter, "inconsistent coordinate dimensions");
        }
        for (double v : c) {
            if (!std::isfinite(v)) {
                Error::raise(ErrorKind::BadParameter, "coordinate entry is not finite");
            }
        }
    }
    std::vector<double> flat(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = euclidean(coords[i], coords[j]);
            if (d == 0.0) {
                Error::raise(ErrorKind::ZeroDistance,
                             "duplicate coordinates at indices " + std::to_string(i) +
                                 " and " + std::to_string(j));
            }
            flat[i * n + j] = d;
            flat[j * n + i] = d;
        }
    }
    return MetricSpace(std::move(flat), default_labels(n, std::move(labels)),
                       std::move(coords));
}

double MetricSpace::min_positive_distance() const {
    const int n = size();
    double best = kInfinite;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            best = std::min(best, dist(i, j));
        }
    }
    return best;
}

double MetricSpace::diameter() const {
    const int n = size();
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            best = std::max(best, dist(i, j));
        }
    }
    return best;
}

double MetricSpace::set_distance(std::span<const int> a, std::span<const int> b) const {
    double best = kInfinite;
    for (int i : a) {
        for (int j : b) {
            best = std::min(best, dist(i, j));
        }
    }
    return best;
}

double MetricSpace::subset_diameter(std::span<const int> points) const {
    double best = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            best = std::max(best, dist(points[i], points[j]));
        }
    }
    return best;
}

}  // namespace pou
