#include "pou/kuhn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

#include "pou/error.hpp"

namespace pou {

KuhnGrid KuhnGrid::create(int dim, double spacing) {
    if (dim < 1) Error::raise(ErrorKind::BadParameter, "grid dimension must be >= 1");
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        Error::raise(ErrorKind::BadParameter, "grid spacing must be positive and finite");
    }
    return KuhnGrid{dim, spacing};
}

Location locate(const KuhnGrid& grid, std::span<const double> x) {
    const int n = grid.dim;
    if (static_cast<int>(x.size()) != n) {
        Error::raise(ErrorKind::BadParameter, "point dimension does not match the grid");
    }

    Location loc;
    loc.simplex.cell.resize(static_cast<std::size_t>(n));
    std::vector<double> fractional(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double scaled = x[static_cast<std::size_t>(i)] / grid.spacing;
        if (!std::isfinite(scaled)) {
            Error::raise(ErrorKind::BadParameter, "point coordinate is not finite");
        }
        double cell = std::floor(scaled);
        double frac = scaled - cell;
        if (frac >= 1.0) {  // only when scaled is the next integer minus one ulp
            cell += 1.0;
            frac = 0.0;
        }
        loc.simplex.cell[static_cast<std::size_t>(i)] = static_cast<long long>(cell);
        fractional[static_cast<std::size_t>(i)] = frac;
    }

    // Axis order: fractional parts descending, ties by axis index ascending.
    loc.simplex.axis_order.resize(static_cast<std::size_t>(n));
    std::iota(loc.simplex.axis_order.begin(), loc.simplex.axis_order.end(), 0);
    std::stable_sort(loc.simplex.axis_order.begin(), loc.simplex.axis_order.end(),
                     [&](int a, int b) {
                         return fractional[static_cast<std::size_t>(a)] >
                                fractional[static_cast<std::size_t>(b)];
                     });

    // Weights are the consecutive gaps of the sorted fractional parts;
    // vertex k of the simplex is the corner plus the first k sorted axes.
    loc.coords.weights.resize(static_cast<std::size_t>(n) + 1);
    loc.coords.vertices.resize(static_cast<std::size_t>(n) + 1);
    loc.coords.vertices[0] = loc.simplex.cell;
    const double top = fractional[static_cast<std::size_t>(loc.simplex.axis_order[0])];
    loc.coords.weights[0] = 1.0 - top;
    LatticePoint vertex = loc.simplex.cell;
    for (int k = 1; k <= n; ++k) {
        const int axis = loc.simplex.axis_order[static_cast<std::size_t>(k - 1)];
        vertex[static_cast<std::size_t>(axis)] += 1;
        loc.coords.vertices[static_cast<std::size_t>(k)] = vertex;
        const double current = fractional[static_cast<std::size_t>(axis)];
        const double next =
            k < n ? fractional[static_cast<std::size_t>(loc.simplex.axis_order[static_cast<std::size_t>(k)])]
                  : 0.0;
        loc.coords.weights[static_cast<std::size_t>(k)] = current - next;
    }
    return loc;
}

namespace {

LatticePoint lattice_from_world(const KuhnGrid& grid, std::span<const double> vertex) {
    if (static_cast<int>(vertex.size()) != grid.dim) {
        Error::raise(ErrorKind::BadParameter, "vertex dimension does not match the grid");
    }
    LatticePoint lattice(vertex.size());
    for (std::size_t i = 0; i < vertex.size(); ++i) {
        const double scaled = vertex[i] / grid.spacing;
        const double rounded = std::round(scaled);
        if (std::abs(scaled - rounded) > 1e-9 * std::max(1.0, std::abs(scaled))) {
            Error::raise(ErrorKind::OffLattice,
                         "coordinate " + std::to_string(vertex[i]) +
                             " is not a multiple of the grid spacing");
        }
        lattice[i] = static_cast<long long>(rounded);
    }
    return lattice;
}

}  // namespace

double hat_value(const KuhnGrid& grid, const LatticePoint& vertex,
                 std::span<const double> x) {
    const Location loc = locate(grid, x);
    for (std::size_t k = 0; k < loc.coords.vertices.size(); ++k) {
        if (loc.coords.vertices[k] == vertex) return loc.coords.weights[k];
    }
    return 0.0;
}

double hat_value(const KuhnGrid& grid, std::span<const double> vertex,
                 std::span<const double> x) {
    return hat_value(grid, lattice_from_world(grid, vertex), x);
}

namespace {

// Distance from a point to the affine hull of the given points, computed by
// Gram-Schmidt on the difference vectors.
double distance_to_affine_hull(const std::vector<std::vector<double>>& hull,
                               const std::vector<double>& point) {
    const std::size_t dim = point.size();
    std::vector<std::vector<double>> basis;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        std::vector<double> v(dim);
        for (std::size_t d = 0; d < dim; ++d) v[d] = hull[i][d] - hull[0][d];
        for (const auto& b : basis) {
            double dot = 0.0;
            for (std::size_t d = 0; d < dim; ++d) dot += v[d] * b[d];
            for (std::size_t d = 0; d < dim; ++d) v[d] -= dot * b[d];
        }
        double norm = 0.0;
        for (double c : v) norm += c * c;
        norm = std::sqrt(norm);
        if (norm > 1e-12) {
            for (double& c : v) c /= norm;
            basis.push_back(std::move(v));
        }
    }
    std::vector<double> residual(dim);
    for (std::size_t d = 0; d < dim; ++d) residual[d] = point[d] - hull[0][d];
    for (const auto& b : basis) {
        double dot = 0.0;
        for (std::size_t d = 0; d < dim; ++d) dot += residual[d] * b[d];
        for (std::size_t d = 0; d < dim; ++d) residual[d] -= dot * b[d];
    }
    double norm = 0.0;
    for (double c : residual) norm += c * c;
    return std::sqrt(norm);
}

}  // namespace

SimplexGeometry simplex_geometry(const KuhnGrid& grid) {
    const int n = grid.dim;
    // Representative simplex with the identity axis order; all others are
    // images under coordinate permutations and translations.
    std::vector<std::vector<double>> vertices(
        static_cast<std::size_t>(n) + 1, std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int k = 1; k <= n; ++k) {
        vertices[static_cast<std::size_t>(k)] = vertices[static_cast<std::size_t>(k - 1)];
        vertices[static_cast<std::size_t>(k)][static_cast<std::size_t>(k - 1)] += grid.spacing;
    }

    SimplexGeometry geometry;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            double s = 0.0;
            for (int d = 0; d < n; ++d) {
                const double diff = vertices[i][static_cast<std::size_t>(d)] -
                                    vertices[j][static_cast<std::size_t>(d)];
                s += diff * diff;
            }
            geometry.diameter = std::max(geometry.diameter, std::sqrt(s));
        }
    }

    geometry.min_height = kInfinite;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        std::vector<std::vector<double>> facet;
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if (j != i) facet.push_back(vertices[j]);
        }
        geometry.min_height =
            std::min(geometry.min_height, distance_to_affine_hull(facet, vertices[i]));
    }
    return geometry;
}

std::vector<LatticePoint> star_membership(const KuhnGrid& grid, std::span<const double> x) {
    const Location loc = locate(grid, x);
    std::vector<LatticePoint> stars;
    for (std::size_t k = 0; k < loc.coords.vertices.size(); ++k) {
        if (loc.coords.weights[k] > 0.0) stars.push_back(loc.coords.vertices[k]);
    }
    return stars;
}

KuhnRefinement kuhn_refine(const MetricSpace& space, const Cover& cover, double lebesgue) {
    if (!space.has_coords()) {
        Error::raise(ErrorKind::BadParameter, "Kuhn refinement needs Euclidean coordinates");
    }
    if (!(lebesgue > 0.0) || !std::isfinite(lebesgue)) {
        Error::raise(ErrorKind::BadParameter, "Lebesgue number must be positive and finite");
    }
    const int n = space.size();
    const int dim = space.ambient_dim();
    const KuhnGrid grid = KuhnGrid::create(dim, lebesgue / 2.0);

    // Populated stars: lattice vertex -> points with positive hat value.
    struct StarData {
        std::vector<int> points;
        std::vector<double> weights;
    };
    std::map<LatticePoint, StarData> stars;
    for (int x = 0; x < n; ++x) {
        const Location loc = locate(grid, space.coords()[static_cast<std::size_t>(x)]);
        for (std::size_t k = 0; k < loc.coords.vertices.size(); ++k) {
            if (loc.coords.weights[k] <= 0.0) continue;
            StarData& star = stars[loc.coords.vertices[k]];
            star.points.push_back(x);
            star.weights.push_back(loc.coords.weights[k]);
        }
    }

    const std::size_t sets = cover.set_count();
    Matrix values(static_cast<std::size_t>(n), sets, 0.0);
    std::vector<std::vector<int>> members(sets);
    for (const auto& [vertex, star] : stars) {
        std::size_t assigned = sets;
        for (std::size_t a = 0; a < sets; ++a) {
            bool inside = true;
            for (int x : star.points) {
                if (!cover.contains(a, x)) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                assigned = a;
                break;
            }
        }
        if (assigned == sets) {
            Error::raise(ErrorKind::CoverTooTight,
                         "a populated vertex star fits in no cover member; "
                         "the stated Lebesgue number is too large");
        }
        for (std::size_t i = 0; i < star.points.size(); ++i) {
            values(static_cast<std::size_t>(star.points[i]), assigned) += star.weights[i];
            members[assigned].push_back(star.points[i]);
        }
    }
    for (auto& member : members) {
        std::sort(member.begin(), member.end());
        member.erase(std::unique(member.begin(), member.end()), member.end());
    }

    const SimplexGeometry geometry = simplex_geometry(grid);
    KuhnRefinement out{
        Refinement{Cover::refinement_family(cover.names(), std::move(members), n),
                   lebesgue / ((static_cast<double>(dim) + 1.0) * std::sqrt(8.0 * dim)),
                   dim + 1, "kuhn"},
        std::move(values),
        grid,
        stars.size(),
        2.0 * geometry.diameter,
        2.0 * grid.spacing,
        geometry.diameter > grid.spacing * (1.0 + 1e-12)};
    return out;
}

}  // namespace pou
