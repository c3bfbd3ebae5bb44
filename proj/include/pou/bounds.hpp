#pragma once

namespace pou {

/// Maximum of eta^(p-1) / (eta^p + (1-eta)^p) over eta in [1/2, 1], the
/// p-dependent constant that sharpens the midpoint-property partial-sum
/// bound. Lies in [1, 2) for every p >= 1 and equals 1 at p = 1.
struct AmpConstant {
    double value = 1.0;
    double maximizer = 1.0;            // attaining eta
    double fixed_point_residual = 0.0; // |eta^p - (1-eta)^(p-1) (eta+p-1)|
};

/// Golden-section search on the quotient (unique interior maximizer for
/// p > 1), bracket 1e-12, with endpoint checks. p = 1 returns 1 directly.
AmpConstant amp_constant(double p);

/// Theoretical Lipschitz bounds for the normalized-distance partition of a
/// cover with multiplicity M and Lebesgue number L, exponent p, and norm
/// exponent q (conventions at q = infinity: 1/q = 0 and 2^(1/q) = 1).
struct BoundSet {
    int multiplicity = 0;
    double lebesgue = 0.0;
    double p = 1.0;
    double q = 1.0;
    bool amp = false;

    double per_function = 0.0;  // single member functions
    double partial_sum = 0.0;   // arbitrary partial sums
    double vector_lq = 0.0;     // vectorized map into l^q
    double roots = 0.0;         // p-th roots of partial sums
    double amp_constant = 1.0;
};

BoundSet lipschitz_bounds(int multiplicity, double lebesgue, double p, double q, bool amp);

}  // namespace pou
