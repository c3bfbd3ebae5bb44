#include "pou/certificate.hpp"

#include <cmath>

#include "pou/error.hpp"
#include "pou/profile.hpp"

namespace pou {

namespace {

bool within(double empirical, double bound) {
    return empirical <= bound * (1.0 + kCertTolerance);
}

bool same_constant(double a, double b) {
    if (std::isinf(a) || std::isinf(b)) return std::isinf(a) && std::isinf(b);
    return std::abs(a - b) <= kCertTolerance * std::max({std::abs(a), std::abs(b), 1.0});
}

}  // namespace

LipschitzCertificate certify(const PartitionOfUnity& pou, const MetricSpace& space,
                             const BoundSet& bounds) {
    const LebesgueReport report = lebesgue_report(space, pou.cover());
    if (bounds.multiplicity != report.multiplicity ||
        !same_constant(bounds.lebesgue, report.optimal)) {
        Error::raise(ErrorKind::InconsistentBounds,
                     "bounds were built for multiplicity " +
                         std::to_string(bounds.multiplicity) + ", Lebesgue number " +
                         std::to_string(bounds.lebesgue) + " but the cover measures " +
                         std::to_string(report.multiplicity) + ", " +
                         std::to_string(report.optimal));
    }
    if (bounds.p != pou.exponent()) {
        Error::raise(ErrorKind::InconsistentBounds,
                     "bounds exponent does not match the partition exponent");
    }

    LipschitzCertificate cert;
    cert.bounds = bounds;

    cert.empirical_per_function = 0.0;
    std::vector<double> column(static_cast<std::size_t>(pou.point_count()));
    for (std::size_t a = 0; a < pou.set_count(); ++a) {
        for (int x = 0; x < pou.point_count(); ++x) {
            column[static_cast<std::size_t>(x)] = pou.value(x, a);
        }
        const LipschitzEstimate estimate = empirical_lipschitz(column, space);
        if (estimate.constant > cert.empirical_per_function) {
            cert.empirical_per_function = estimate.constant;
            cert.per_function_witness = estimate;
            cert.per_function_set = a;
        }
    }

    cert.partial_sum_witness = worst_partial_sum_lipschitz(pou, space);
    cert.empirical_worst_partial_sum = cert.partial_sum_witness.constant;

    cert.vector_witness = vector_lipschitz(pou, space, bounds.q);
    cert.empirical_vector_lq = cert.vector_witness.constant;

    cert.per_function_pass = within(cert.empirical_per_function, bounds.per_function);
    cert.partial_sum_pass = within(cert.empirical_worst_partial_sum, bounds.partial_sum);
    cert.vector_pass = within(cert.empirical_vector_lq, bounds.vector_lq);
    return cert;
}

}  // namespace pou
