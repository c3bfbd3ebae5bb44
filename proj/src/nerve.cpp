#include "pou/nerve.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pou/error.hpp"

namespace pou {

bool NerveComplex::contains(std::span<const std::size_t> mu) const {
    if (mu.empty()) return false;
    std::vector<std::size_t> sorted(mu.begin(), mu.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& top : maximal) {
        if (std::includes(top.begin(), top.end(), sorted.begin(), sorted.end())) return true;
    }
    return false;
}

std::vector<std::vector<std::size_t>> NerveComplex::closure() const {
    std::set<std::vector<std::size_t>> faces;
    for (const auto& top : maximal) {
        const std::size_t m = top.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
            std::vector<std::size_t> face;
            for (std::size_t i = 0; i < m; ++i) {
                if (mask & (std::size_t{1} << i)) face.push_back(top[i]);
            }
            faces.insert(std::move(face));
        }
    }
    return {faces.begin(), faces.end()};
}

NerveComplex build_nerve(const PartitionOfUnity& pou) {
    std::set<std::vector<std::size_t>> supports;
    for (int x = 0; x < pou.point_count(); ++x) {
        supports.insert(pou.support(x));
    }

    NerveComplex nerve;
    for (const auto& candidate : supports) {
        bool dominated = false;
        for (const auto& other : supports) {
            if (other.size() > candidate.size() &&
                std::includes(other.begin(), other.end(), candidate.begin(), candidate.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) nerve.maximal.push_back(candidate);
    }
    std::sort(nerve.maximal.begin(), nerve.maximal.end());
    nerve.dimension = -1;
    for (const auto& top : nerve.maximal) {
        nerve.dimension = std::max(nerve.dimension, static_cast<int>(top.size()) - 1);
    }
    return nerve;
}

std::vector<SimplexPreimage> preimage_diameters(const MetricSpace& space,
                                                const PartitionOfUnity& pou,
                                                const NerveComplex& nerve) {
    if (pou.point_count() != space.size()) {
        Error::raise(ErrorKind::IndexMismatch, "partition does not match the space");
    }
    std::vector<SimplexPreimage> out;
    out.reserve(nerve.maximal.size());
    for (const auto& mu : nerve.maximal) {
        SimplexPreimage entry;
        entry.mu = mu;
        for (int x = 0; x < pou.point_count(); ++x) {
            if (pou.support(x) == mu) entry.points.push_back(x);
        }
        entry.diameter = space.subset_diameter(entry.points);
        out.push_back(std::move(entry));
    }
    return out;
}

StarConstants star_constants(int n) {
    if (n < 1) Error::raise(ErrorKind::BadParameter, "dimension must be >= 1");
    StarConstants out;
    out.height = std::sqrt((static_cast<double>(n) + 1.0) / static_cast<double>(n));
    out.lebesgue_lower = out.height / (static_cast<double>(n) + 1.0);
    return out;
}

}  // namespace pou
