#include "pou/bounds.hpp"

#include <cmath>

#include "pou/error.hpp"
#include "pou/types.hpp"

namespace pou {

namespace {

double quotient(double eta, double p) {
    return std::pow(eta, p - 1.0) / (std::pow(eta, p) + std::pow(1.0 - eta, p));
}

}  // namespace

AmpConstant amp_constant(double p) {
    if (!(p >= 1.0)) Error::raise(ErrorKind::BadExponent, "exponent must be >= 1");
    if (p == 1.0) {
        // The quotient is identically 1; any eta is a maximizer.
        return AmpConstant{1.0, 1.0, 0.0};
    }

    // Golden-section search for the unique interior maximizer on [1/2, 1].
    const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.5;
    double hi = 1.0;
    double m1 = hi - inv_golden * (hi - lo);
    double m2 = lo + inv_golden * (hi - lo);
    double f1 = quotient(m1, p);
    double f2 = quotient(m2, p);
    while (hi - lo > 1e-12) {
        if (f1 < f2) {
            lo = m1;
            m1 = m2;
            f1 = f2;
            m2 = lo + inv_golden * (hi - lo);
            f2 = quotient(m2, p);
        } else {
            hi = m2;
            m2 = m1;
            f2 = f1;
            m1 = hi - inv_golden * (hi - lo);
            f1 = quotient(m1, p);
        }
    }

    AmpConstant out;
    out.maximizer = (lo + hi) / 2.0;
    out.value = quotient(out.maximizer, p);
    // Both endpoints evaluate to exactly 1.
    if (out.value < 1.0) {
        out.value = 1.0;
        out.maximizer = 1.0;
    }
    const double eta = out.maximizer;
    out.fixed_point_residual =
        std::abs(std::pow(eta, p) - std::pow(1.0 - eta, p - 1.0) * (eta + p - 1.0));
    return out;
}

BoundSet lipschitz_bounds(int multiplicity, double lebesgue, double p, double q, bool amp) {
    if (multiplicity < 1) Error::raise(ErrorKind::BadParameter, "multiplicity must be >= 1");
    if (!(lebesgue > 0.0)) Error::raise(ErrorKind::BadParameter, "Lebesgue number must be positive");
    if (!(p >= 1.0)) Error::raise(ErrorKind::BadParameter, "partition exponent must be >= 1");
    if (!(q >= 1.0)) Error::raise(ErrorKind::BadParameter, "norm exponent must be >= 1");

    BoundSet bounds;
    bounds.multiplicity = multiplicity;
    bounds.lebesgue = lebesgue;
    bounds.p = p;
    bounds.q = q;
    bounds.amp = amp;
    bounds.amp_constant = amp_constant(p).value;

    const double m1 = static_cast<double>(multiplicity - 1);
    if (amp) {
        const double mean_route = p * std::pow(2.0, 1.0 - 1.0 / p) * std::pow(m1, 1.0 / p) /
                                  (2.0 * lebesgue);
        const double constant_route = p * bounds.amp_constant * m1 / (2.0 * lebesgue);
        bounds.partial_sum = std::min(mean_route, constant_route);
        bounds.roots = std::pow(2.0, (p - 1.0) / p) *
                       std::pow(2.0 * multiplicity - 1.0, 1.0 / p) /
                       (std::pow(2.0, 1.0 / p) * lebesgue);
    } else {
        bounds.partial_sum = p * std::pow(std::max(1.0, m1), 1.0 / p) / lebesgue;
        bounds.roots = std::pow(2.0, (p - 1.0) / p) *
                       std::pow(2.0 * multiplicity - 1.0, 1.0 / p) / lebesgue;
    }
    bounds.per_function = bounds.partial_sum;

    // Interpolation between the l^1 constant (twice the partial-sum
    // constant) and the l^infinity constant; 1/q = 0 at q = infinity.
    const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
    bounds.vector_lq = std::pow(2.0, inv_q) * std::pow(bounds.partial_sum, inv_q) *
                       std::pow(bounds.per_function, 1.0 - inv_q);
    return bounds;
}

}  // namespace pou
