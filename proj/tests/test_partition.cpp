#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "helpers.hpp"
#include "pou/bounds.hpp"
#include "pou/certificate.hpp"
#include "pou/error.hpp"

using namespace pou;
using namespace pou::testing;

namespace {

void check_error(ErrorKind expected, const std::function<void()>& fn) {
    try {
        fn();
        FAIL_CHECK("expected error " << to_string(expected));
    } catch (const Error& e) {
        CHECK(e.kind() == expected);
    }
}

std::vector<double> member_function(const PartitionOfUnity& pou, std::size_t a) {
    std::vector<double> f(static_cast<std::size_t>(pou.point_count()));
    for (int x = 0; x < pou.point_count(); ++x) f[static_cast<std::size_t>(x)] = pou.value(x, a);
    return f;
}

}  // namespace

TEST_CASE("partition values on the four-point line") {
    const MetricSpace space = line_space(4);
    const Cover cover =
        Cover::create({"1", "2"}, {index_range(0, 2), index_range(1, 3)}, 4);
    const PartitionOfUnity pou = build_partition(space, cover, 1.0);
    CHECK(pou.value(1, 0) == doctest::Approx(2.0 / 3.0));
    CHECK(pou.value(1, 1) == doctest::Approx(1.0 / 3.0));
    CHECK(pou.value(0, 0) == doctest::Approx(1.0));
    CHECK(pou.value(0, 1) == 0.0);
}

TEST_CASE("single whole-space member carries all the mass") {
    const MetricSpace space = line_space(3);
    const Cover cover = Cover::create({"all"}, {index_range(0, 2)}, 3);
    const PartitionOfUnity pou = build_partition(space, cover, 1.0);
    for (int x = 0; x < 3; ++x) CHECK(pou.value(x, 0) == 1.0);
}

TEST_CASE("whole-space members split the mass equally") {
    const MetricSpace space = line_space(4);
    const Cover cover = Cover::create(
        {"a", "b", "part"}, {index_range(0, 3), index_range(0, 3), index_range(1, 2)}, 4);
    const PartitionOfUnity pou = build_partition(space, cover, 2.0);
    for (int x = 0; x < 4; ++x) {
        CHECK(pou.value(x, 0) == doctest::Approx(0.5));
        CHECK(pou.value(x, 1) == doctest::Approx(0.5));
        CHECK(pou.value(x, 2) == 0.0);
    }
}

TEST_CASE("interval-with-apex fixture reproduces the closed-form values") {
    const MetricSpace space = interval_with_apex_space(0.5);
    const Cover cover = interval_with_apex_cover(space, 3, 0.5);
    const PartitionOfUnity pou = build_partition(space, cover, 1.0);
    // Position 0.5 is index 3; its profile values are 1 (interval member,
    // complement is the apex) and 0.5 twice.
    CHECK(pou.value(3, 0) == doctest::Approx(0.5));
    CHECK(pou.value(3, 1) == doctest::Approx(0.25));
    CHECK(pou.value(3, 2) == doctest::Approx(0.25));

    const std::vector<std::size_t> tail{1, 2};
    CHECK(partial_sum(pou, tail)[3] == doctest::Approx(0.5));
}

TEST_CASE("partial sums over the empty and full index sets") {
    const MetricSpace space = line_space(4);
    const Cover cover =
        Cover::create({"1", "2"}, {index_range(0, 2), index_range(1, 3)}, 4);
    const PartitionOfUnity pou = build_partition(space, cover, 1.0);
    for (double v : partial_sum(pou, {})) CHECK(v == 0.0);
    const std::vector<std::size_t> all{0, 1};
    for (double v : partial_sum(pou, all)) CHECK(v == doctest::Approx(1.0));
    const std::vector<std::size_t> bad{5};
    check_error(ErrorKind::UnknownIndex, [&] { partial_sum(pou, bad); });
}

TEST_CASE("rows are stochastic and supported exactly on the members") {
    std::mt19937_64 rng(101);
    for (double p : {1.0, 2.0, 3.5}) {
        const MetricSpace space = random_euclidean_space(rng, 20, 2);
        const Cover cover = random_ball_cover(rng, space, 5);
        const PartitionOfUnity pou = build_partition(space, cover, p);
        const double tol = kRowSumTolerancePerSet * static_cast<double>(cover.set_count());
        for (int x = 0; x < space.size(); ++x) {
            double sum = 0.0;
            for (std::size_t a = 0; a < cover.set_count(); ++a) {
                const double v = pou.value(x, a);
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
                CHECK((v > 0.0) == cover.contains(a, x));
                sum += v;
            }
            CHECK(std::abs(sum - 1.0) <= tol);
        }
    }
}

TEST_CASE("empirical Lipschitz constants of simple functions") {
    const MetricSpace space = line_space(5);
    const std::vector<double> constant(5, 0.7);
    CHECK(empirical_lipschitz(constant, space).constant == 0.0);

    const Cover cover =
        Cover::create({"1", "2"}, {index_range(0, 3), index_range(2, 4)}, 5);
    const DistanceProfile profile = distance_profile(space, cover);
    for (std::size_t a = 0; a < 2; ++a) {
        std::vector<double> f(profile.row(a).begin(), profile.row(a).end());
        CHECK(empirical_lipschitz(f, space).constant <= 1.0 + 1e-12);
    }
    check_error(ErrorKind::TooFewPoints, [] {
        const MetricSpace single = MetricSpace::from_matrix({{0.0}});
        empirical_lipschitz(std::vector<double>{1.0}, single);
    });
}

TEST_CASE("halfline fixture approaches the midpoint-property rate") {
    const MetricSpace space = halfline_space(0.01);
    const Cover cover = halfline_cover(space, 2, 0.01);
    const PartitionOfUnity pou = build_partition(space, cover, 1.0);
    const LipschitzEstimate estimate = empirical_lipschitz(member_function(pou, 0), space);
    // Member 1 decays linearly from 1 to 0 across the overlap: slope 1/2.
    CHECK(estimate.constant == doctest::Approx(0.5).epsilon(0.02));
    CHECK(estimate.constant <= 0.5 + 1e-12);
}

TEST_CASE("worst partial sum on the interval-with-apex grid") {
    const MetricSpace space = interval_with_apex_space(0.01);
    const Cover cover = interval_with_apex_cover(space, 3, 0.01);
    const PartitionOfUnity pou = build_partition(space, cover, 1.0);
    const PartialSumLipschitz worst = worst_partial_sum_lipschitz(pou, space);
    CHECK(worst.constant <= 2.0 + 1e-12);        // max(1, M-1) / L
    CHECK(worst.constant >= 0.98 * 2.0 - 1e-12); // attained near the overlap edge
}

TEST_CASE("single-set and two-set worst partial sums") {
    const MetricSpace space = line_space(6);
    const Cover single = Cover::create({"all"}, {index_range(0, 5)}, 6);
    CHECK(worst_partial_sum_lipschitz(build_partition(space, single, 1.0), space).constant ==
          0.0);

    const Cover two = Cover::create({"1", "2"}, {index_range(0, 3), index_range(2, 5)}, 6);
    const PartitionOfUnity pou = build_partition(space, two, 1.0);
    const double worst = worst_partial_sum_lipschitz(pou, space).constant;
    double per_function = 0.0;
    for (std::size_t a = 0; a < 2; ++a) {
        per_function =
            std::max(per_function, empirical_lipschitz(member_function(pou, a), space).constant);
    }
    // With two members the maximizing subset is a singleton (or its
    // complement), so the two constants coincide.
    CHECK(worst == doctest::Approx(per_function));
}

TEST_CASE("worst partial sum equals the brute-force subset maximum") {
    std::mt19937_64 rng(211);
    for (int trial = 0; trial < 6; ++trial) {
        const MetricSpace space = random_euclidean_space(rng, 12, 2);
        const Cover cover = random_ball_cover(rng, space, 4);
        const PartitionOfUnity pou = build_partition(space, cover, 1.0);
        double oracle = 0.0;
        for (int x = 0; x < space.size(); ++x) {
            for (int y = 0; y < space.size(); ++y) {
                if (x == y) continue;
                oracle = std::max(oracle, subset_max_oracle(pou, x, y) / space.dist(x, y));
            }
        }
        CHECK(worst_partial_sum_lipschitz(pou, space).constant == doctest::Approx(oracle));
    }
}

TEST_CASE("lq distances on the interval-with-apex fixture") {
    const MetricSpace space = interval_with_apex_space(0.5);
    const Cover cover = interval_with_apex_cover(space, 3, 0.5);
    const PartitionOfUnity pou = build_partition(space, cover, 1.0);
    const int at_zero = 2;  // position 0
    const int at_one = 4;   // position 1
    CHECK(lq_distance(pou, at_zero, at_zero, 2.0) == 0.0);
    CHECK(lq_distance(pou, at_zero, at_one, 1.0) == doctest::Approx(4.0 / 3.0));
    CHECK(lq_distance(pou, at_zero, at_one, kInfinite) == doctest::Approx(2.0 / 3.0));
    check_error(ErrorKind::BadExponent, [&] { lq_distance(pou, 0, 1, 0.5); });
}

TEST_CASE("l1 vector constant is twice the worst partial sum") {
    std::mt19937_64 rng(307);
    for (int trial = 0; trial < 6; ++trial) {
        const MetricSpace space = random_euclidean_space(rng, 15, 2);
        const Cover cover = random_ball_cover(rng, space, 4);
        const PartitionOfUnity pou = build_partition(space, cover, 1.0);
        const double l1 = vector_lipschitz(pou, space, 1.0).constant;
        const double worst = worst_partial_sum_lipschitz(pou, space).constant;
        CHECK(l1 == doctest::Approx(2.0 * worst).epsilon(1e-12));
    }
}

TEST_CASE("l1 row distance equals twice the subset maximum pointwise") {
    std::mt19937_64 rng(311);
    const MetricSpace space = random_euclidean_space(rng, 14, 2);
    const Cover cover = random_ball_cover(rng, space, 5);
    const PartitionOfUnity pou = build_partition(space, cover, 1.0);
    for (int x = 0; x < space.size(); ++x) {
        for (int y = x + 1; y < space.size(); ++y) {
            const double lhs = lq_distance(pou, x, y, 1.0);
            const double rhs = 2.0 * subset_max_oracle(pou, x, y);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("Littlewood interpolation holds per pair") {
    std::mt19937_64 rng(401);
    const MetricSpace space = random_euclidean_space(rng, 12, 2);
    const Cover cover = random_ball_cover(rng, space, 4);
    const PartitionOfUnity pou = build_partition(space, cover, 1.5);
    for (double q : {1.0, 1.7, 2.0, 3.0, kInfinite}) {
        const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
        for (int x = 0; x < space.size(); ++x) {
            for (int y = x + 1; y < space.size(); ++y) {
                const double dq = lq_distance(pou, x, y, q);
                const double d1 = lq_distance(pou, x, y, 1.0);
                const double dinf = lq_distance(pou, x, y, kInfinite);
                CHECK(dq <= std::pow(d1, inv_q) * std::pow(dinf, 1.0 - inv_q) + 1e-12);
            }
        }
    }
}

TEST_CASE("vector Lipschitz constant of a single-set cover vanishes") {
    const MetricSpace space = line_space(4);
    const Cover cover = Cover::create({"all"}, {index_range(0, 3)}, 4);
    const PartitionOfUnity pou = build_partition(space, cover, 1.0);
    CHECK(vector_lipschitz(pou, space, 2.0).constant == 0.0);
    const VectorizedPartition vec = vectorize(pou, 2.0);
    CHECK(vec.distance(0, 3) == 0.0);
}

TEST_CASE("root values") {
    const MetricSpace space = line_space(4);
    const Cover cover =
        Cover::create({"1", "2"}, {index_range(0, 2), index_range(1, 3)}, 4);
    const PartitionOfUnity p1 = build_partition(space, cover, 1.0);
    const Matrix r1 = root_values(p1);
    for (int x = 0; x < 4; ++x) {
        for (std::size_t a = 0; a < 2; ++a) {
            CHECK(r1(static_cast<std::size_t>(x), a) == p1.value(x, a));
        }
    }

    const PartitionOfUnity p2 = build_partition(space, cover, 2.0);
    const Matrix r2 = root_values(p2);
    const double tol = kRowSumTolerancePerSet * 2.0;
    for (int x = 0; x < 4; ++x) {
        double sum_sq = 0.0;
        for (std::size_t a = 0; a < 2; ++a) {
            const double v = r2(static_cast<std::size_t>(x), a);
            sum_sq += v * v;
        }
        CHECK(std::abs(sum_sq - 1.0) <= tol);  // rows on the l^p unit sphere
    }
    // Exact squares: profile (2, 1) at point 1 gives values (0.8, 0.6).
    CHECK(r2(1, 0) == doctest::Approx(0.8));
    CHECK(r2(1, 1) == doctest::Approx(0.6));
}

TEST_CASE("rooted partial sums respect the roots bound") {
    const MetricSpace space = interval_with_apex_space(0.05);
    const Cover cover = interval_with_apex_cover(space, 3, 0.05);
    const LebesgueReport report = lebesgue_report(space, cover);
    for (double p : {1.0, 2.0, 3.0}) {
        const PartitionOfUnity pou = build_partition(space, cover, p);
        const BoundSet bounds = lipschitz_bounds(report.multiplicity, report.optimal, p, 1.0, false);
        for (const auto& mu : all_subsets(cover.set_count())) {
            std::vector<double> f = partial_sum(pou, mu);
            for (double& v : f) v = std::pow(v, 1.0 / p);
            CHECK(empirical_lipschitz(f, space).constant <= bounds.roots + 1e-9);
        }
    }
}

TEST_CASE("amp constant: exact values and oracle agreement") {
    CHECK(amp_constant(1.0).value == 1.0);
    const AmpConstant c2 = amp_constant(2.0);
    CHECK(c2.value == doctest::Approx((1.0 + std::sqrt(2.0)) / 2.0).epsilon(1e-12));
    CHECK(c2.maximizer == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));

    for (double p : {1.0, 1.5, 2.0, 3.0, 10.0}) {
        const AmpConstant c = amp_constant(p);
        CHECK(c.value >= 1.0);
        CHECK(c.value < 2.0);
        CHECK(std::abs(c.value - amp_constant_grid_oracle(p)) <= 1e-10);
        CHECK(c.fixed_point_residual <= 1e-8);
        if (p > 1.0) {
            // Closed-form upper bound from the two maximizer estimates.
            const double r1 = std::pow(2.0 * p - 1.0, 1.0 / p);
            const double r2 = std::pow(p, 1.0 / (p - 1.0));
            const double cap =
                (1.0 - 1.0 / p) * std::min((1.0 + r1) / r1, (1.0 + r2) / r2) + 1.0 / p;
            CHECK(c.value <= cap + 1e-12);
        }
    }
    check_error(ErrorKind::BadExponent, [] { amp_constant(0.5); });
}

TEST_CASE("bound formulas") {
    const BoundSet plain = lipschitz_bounds(3, 1.0, 1.0, 1.0, false);
    CHECK(plain.partial_sum == doctest::Approx(2.0));
    const BoundSet amp = lipschitz_bounds(3, 1.0, 1.0, 1.0, true);
    CHECK(amp.partial_sum == doctest::Approx(1.0));
    const BoundSet tiny = lipschitz_bounds(1, 2.0, 1.0, 1.0, false);
    CHECK(tiny.partial_sum == doctest::Approx(0.5));

    // q = infinity conventions: the interpolated bound collapses to the
    // single-function constant.
    const BoundSet qinf = lipschitz_bounds(4, 2.0, 1.5, kInfinite, false);
    CHECK(qinf.vector_lq == doctest::Approx(qinf.per_function));
    const BoundSet q1 = lipschitz_bounds(4, 2.0, 1.5, 1.0, false);
    CHECK(q1.vector_lq == doctest::Approx(2.0 * q1.partial_sum));

    CHECK(plain.roots == doctest::Approx(std::pow(2.0, 0.0) * 5.0));  // 2^((p-1)/p) (2M-1)^(1/p) / L
    const BoundSet amp_roots = lipschitz_bounds(3, 1.0, 1.0, 1.0, true);
    CHECK(amp_roots.roots == doctest::Approx(5.0 / 2.0));

    check_error(ErrorKind::BadParameter, [] { lipschitz_bounds(0, 1.0, 1.0, 1.0, false); });
    check_error(ErrorKind::BadParameter, [] { lipschitz_bounds(2, 0.0, 1.0, 1.0, false); });
    check_error(ErrorKind::BadParameter, [] { lipschitz_bounds(2, 1.0, 0.5, 1.0, false); });
    check_error(ErrorKind::BadParameter, [] { lipschitz_bounds(2, 1.0, 1.0, 0.5, false); });
}

TEST_CASE("certificates: single-set cover passes with zero constants") {
    const MetricSpace space = line_space(5);
    const Cover cover = Cover::create({"all"}, {index_range(0, 4)}, 5);
    const PartitionOfUnity pou = build_partition(space, cover, 1.0);
    const BoundSet bounds = lipschitz_bounds(1, kInfinite, 1.0, 2.0, false);
    const LipschitzCertificate cert = certify(pou, space, bounds);
    CHECK(cert.empirical_per_function == 0.0);
    CHECK(cert.empirical_worst_partial_sum == 0.0);
    CHECK(cert.empirical_vector_lq == 0.0);
    CHECK(cert.pass());
}

TEST_CASE("certificates reject inconsistent bounds") {
    const MetricSpace space = line_space(4);
    const Cover cover =
        Cover::create({"1", "2"}, {index_range(0, 2), index_range(1, 3)}, 4);
    const PartitionOfUnity pou = build_partition(space, cover, 1.0);
    check_error(ErrorKind::InconsistentBounds, [&] {
        certify(pou, space, lipschitz_bounds(5, 2.0, 1.0, 1.0, false));
    });
    check_error(ErrorKind::InconsistentBounds, [&] {
        certify(pou, space, lipschitz_bounds(2, 7.0, 1.0, 1.0, false));
    });
    check_error(ErrorKind::InconsistentBounds, [&] {
        certify(pou, space, lipschitz_bounds(2, 2.0, 3.0, 1.0, false));
    });
}

TEST_CASE("certificates pass on random instances and order the constants") {
    std::mt19937_64 rng(501);
    for (int trial = 0; trial < 6; ++trial) {
        const MetricSpace space = random_euclidean_space(rng, 16, 2);
        const Cover cover = random_ball_cover(rng, space, 4);
        const LebesgueReport report = lebesgue_report(space, cover);
        for (double p : {1.0, 2.0}) {
            const PartitionOfUnity pou = build_partition(space, cover, p);
            const BoundSet bounds =
                lipschitz_bounds(report.multiplicity, report.optimal, p, 2.0, false);
            const LipschitzCertificate cert = certify(pou, space, bounds);
            CHECK(cert.pass());
            CHECK(cert.empirical_per_function <=
                  cert.empirical_worst_partial_sum * (1.0 + 1e-12));
            CHECK(cert.empirical_worst_partial_sum <= bounds.partial_sum * (1.0 + 1e-9));
        }
    }
}
