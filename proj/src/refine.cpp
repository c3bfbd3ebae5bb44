#include "pou/refine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "pou/error.hpp"
#include "pou/profile.hpp"

namespace pou {

Refinement shrink_cover(const MetricSpace& space, const Cover& cover) {
    const LebesgueReport report = lebesgue_report(space, cover);
    const int n = space.size();

    if (!report.finite()) {
        // Some member is the whole space; thresholding needs a finite
        // Lebesgue number. Keep the whole-space members and empty the rest.
        std::vector<std::vector<int>> members(cover.set_count());
        std::vector<int> everything(static_cast<std::size_t>(n));
        std::iota(everything.begin(), everything.end(), 0);
        int kept = 0;
        for (std::size_t a = 0; a < cover.set_count(); ++a) {
            if (cover.is_whole_space(a)) {
                members[a] = everything;
                ++kept;
            }
        }
        Refinement out{Cover::refinement_family(cover.names(), std::move(members), n),
                       kInfinite, kept, "shrink"};
        return out;
    }

    const DistanceProfile profile = distance_profile(space, cover);
    const double threshold = 2.0 * report.optimal / 3.0;
    std::vector<std::vector<int>> members(cover.set_count());
    for (std::size_t a = 0; a < cover.set_count(); ++a) {
        for (int x = 0; x < n; ++x) {
            if (profile.value(a, x) > threshold) members[a].push_back(x);
        }
    }
    Refinement out{Cover::refinement_family(cover.names(), std::move(members), n),
                   report.optimal / 3.0, report.multiplicity, "shrink"};
    return out;
}

Cover expand_cover(const MetricSpace& space, const Cover& cover, double radius) {
    if (radius < 0.0) Error::raise(ErrorKind::BadParameter, "expansion radius must be >= 0");
    const int n = space.size();
    std::vector<std::vector<int>> members(cover.set_count());
    for (std::size_t a = 0; a < cover.set_count(); ++a) {
        for (int x = 0; x < n; ++x) {
            if (cover.contains(a, x) ||
                space.set_distance(std::span<const int>(&x, 1), cover.member(a)) < radius) {
                members[a].push_back(x);
            }
        }
    }
    return Cover::refinement_family(cover.names(), std::move(members), n);
}

Refinement recolor_refinement(const MetricSpace& space, const Cover& coarse,
                              const Cover& fine) {
    const int n = space.size();
    if (coarse.point_count() != n || fine.point_count() != n) {
        Error::raise(ErrorKind::IndexMismatch, "covers were built for a different space");
    }

    std::vector<std::vector<int>> merged(coarse.set_count());
    for (std::size_t v = 0; v < fine.set_count(); ++v) {
        const auto& member = fine.member(v);
        if (member.empty()) continue;
        bool assigned = false;
        for (std::size_t a = 0; a < coarse.set_count() && !assigned; ++a) {
            bool inside = true;
            for (int x : member) {
                if (!coarse.contains(a, x)) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                merged[a].insert(merged[a].end(), member.begin(), member.end());
                assigned = true;
            }
        }
        if (!assigned) {
            Error::raise(ErrorKind::NotARefinement,
                         "fine member '" + fine.name(v) + "' fits in no coarse member");
        }
    }

    const LebesgueReport fine_report = lebesgue_report(space, fine);
    Refinement out{Cover::refinement_family(coarse.names(), std::move(merged), n),
                   fine_report.optimal, fine_report.multiplicity, "recolor"};
    return out;
}

DecompositionParams decomposition_params(int multiplicity) {
    if (multiplicity < 1) Error::raise(ErrorKind::BadParameter, "multiplicity must be >= 1");
    const double m = static_cast<double>(multiplicity);
    DecompositionParams params;
    params.multiplicity = multiplicity;
    params.epsilon = 2.0 / ((m + 2.0) * (m + 2.0));
    params.zeta = (m + 0.5) / (m + 1.0) * params.epsilon;
    return params;
}

namespace {

void check_params(const DecompositionParams& params) {
    const double m = static_cast<double>(params.multiplicity);
    if (params.multiplicity < 1 || !(params.epsilon > 0.0) || !(params.zeta > 0.0)) {
        Error::raise(ErrorKind::BadParameter, "decomposition parameters must be positive");
    }
    if (!(m / (m + 1.0) * params.epsilon < params.zeta && params.zeta < params.epsilon)) {
        Error::raise(ErrorKind::BadParameter,
                     "zeta must lie strictly between M/(M+1) epsilon and epsilon");
    }
    if (!((m + 1.0) * (m + 2.0) * params.epsilon < 2.0)) {
        Error::raise(ErrorKind::BadParameter, "(M+1)(M+2) epsilon must stay below 2");
    }
}

}  // namespace

DisjointDecomposition disjoint_decomposition(const MetricSpace& space, const Cover& cover,
                                             const PartitionOfUnity& pou,
                                             const DecompositionParams& params) {
    check_params(params);
    const int n = space.size();
    if (pou.point_count() != n || pou.set_count() != cover.set_count()) {
        Error::raise(ErrorKind::IndexMismatch, "partition does not match space and cover");
    }
    const int M = params.multiplicity;
    if (cover.multiplicity() != M) {
        Error::raise(ErrorKind::BadParameter,
                     "params were derived for multiplicity " + std::to_string(M) +
                         " but the cover has multiplicity " +
                         std::to_string(cover.multiplicity()));
    }

    const std::size_t sets = pou.set_count();

    // Discover the realized index subsets: per point, sort values descending
    // and take the largest size k whose epsilon threshold fires. Earlier
    // failures guarantee the zeta conditions for the remaining indices.
    std::vector<std::vector<std::size_t>> discovered;  // deduplicated, per size
    std::vector<std::vector<std::size_t>> point_mu(static_cast<std::size_t>(n));
    std::vector<std::size_t> order(sets);
    for (int x = 0; x < n; ++x) {
        std::span<const double> row = pou.row(x);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return row[a] > row[b];
        });
        int found = 0;
        for (int k = std::min<int>(M, static_cast<int>(sets)); k >= 1; --k) {
            const double gate = static_cast<double>(M - k + 1) * params.epsilon;
            if (row[order[static_cast<std::size_t>(k - 1)]] > gate) {
                found = k;
                break;
            }
        }
        if (found == 0) {
            Error::raise(ErrorKind::NotCovered,
                         "no threshold level fires at point " + std::to_string(x) +
                             "; inputs are inconsistent");
        }
        std::vector<std::size_t> mu(order.begin(), order.begin() + found);
        std::sort(mu.begin(), mu.end());
        point_mu[static_cast<std::size_t>(x)] = std::move(mu);
    }
    for (const auto& mu : point_mu) {
        if (std::find(discovered.begin(), discovered.end(), mu) == discovered.end()) {
            discovered.push_back(mu);
        }
    }
    std::sort(discovered.begin(), discovered.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    // Materialize extents: every point satisfying a set's thresholds belongs
    // to it, not only the points that discovered it.
    DisjointDecomposition out;
    out.params = params;
    out.families.assign(static_cast<std::size_t>(M), SeparatedFamily{});
    for (const auto& mu : discovered) {
        const int k = static_cast<int>(mu.size());
        const double gate_in = static_cast<double>(M - k + 1) * params.epsilon;
        const double gate_out = static_cast<double>(M - k + 1) * params.zeta;
        SeparatedSet set;
        set.mu = mu;
        for (int x = 0; x < n; ++x) {
            std::span<const double> row = pou.row(x);
            bool inside = true;
            for (std::size_t a : mu) {
                if (!(row[a] > gate_in)) {
                    inside = false;
                    break;
                }
            }
            for (std::size_t a = 0; a < sets && inside; ++a) {
                if (std::find(mu.begin(), mu.end(), a) != mu.end()) continue;
                if (!(row[a] < gate_out)) inside = false;
            }
            if (inside) set.points.push_back(x);
        }
        out.families[static_cast<std::size_t>(k - 1)].members.push_back(std::move(set));
    }

    for (auto& family : out.families) {
        family.separation = kInfinite;
        for (std::size_t i = 0; i < family.members.size(); ++i) {
            for (std::size_t j = i + 1; j < family.members.size(); ++j) {
                family.separation = std::min(
                    family.separation,
                    space.set_distance(family.members[i].points, family.members[j].points));
            }
        }
    }
    return out;
}

}  // namespace pou
