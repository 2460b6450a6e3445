#include <doctest.h>

#include <cmath>

#include "csforge/errors.hpp"
#include "csforge/vectors.hpp"
#include "support.hpp"

using namespace csforge;
using csforge::testing::close_rel;
using csforge::testing::random_vector;

TEST_CASE("RealVector construction enforces invariants") {
    CHECK_THROWS_AS(RealVector(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(RealVector({1.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(RealVector({std::numeric_limits<double>::infinity()}),
                    std::invalid_argument);
    CHECK(RealVector::zeros(3).dim() == 3);
}

TEST_CASE("hadamard") {
    CHECK(hadamard({1, 2}, {3, 4}).entries() == std::vector<double>{3, 8});
    CHECK(hadamard({1, 0}, {0, 1}).entries() == std::vector<double>{0, 0});
    CHECK(hadamard({1, 1}, {1, 2}).entries() == std::vector<double>{1, 2});
    CHECK_THROWS_AS(hadamard({1, 2}, {1, 2, 3}), DimensionMismatch);
}

TEST_CASE("hadamard_power") {
    CHECK(hadamard_power({1, 2}, 2.0).entries() == std::vector<double>{1, 4});
    CHECK(hadamard_power({1, 1}, 7.3).entries() == std::vector<double>{1, 1});
    CHECK(hadamard_power({1, 2}, 3.0).entries() == std::vector<double>{1, 8});
    // Integer exponents accept negative entries, non-integer ones do not.
    CHECK(hadamard_power({-2, 3}, 2.0).entries() == std::vector<double>{4, 9});
    CHECK_THROWS_AS(hadamard_power({-1, 2}, 0.5), NegativeBaseNonIntegerExponent);
}

TEST_CASE("inner and norm2") {
    CHECK(inner({1, 0}, {0, 1}) == 0.0);
    CHECK(inner({1, 1}, {1, 2}) == 3.0);
    CHECK(inner({1, 2}, {3, 4}) == 11.0);
    CHECK_THROWS_AS(inner({1}, {1, 2}), DimensionMismatch);
    CHECK(norm2({1, 1}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(norm2({1, 2}) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(norm2({0, 0, 0}) == 0.0);
}

TEST_CASE("f_func") {
    CHECK(f_func({3, 4}, {3, 4}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(f_func({1, 0}, {0, 1}) == 1.0);
    CHECK(f_func({1, 1}, {1, 2}) ==
          doctest::Approx(std::sqrt(10.0) - 3.0).epsilon(1e-14));
}

TEST_CASE("g_func") {
    CHECK(g_func({1, 0}, {0, 1}) == 1.0);
    CHECK(g_func({2, 5}, {2, 5}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(g_func({1, 2}, {3, 4}) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("f_x") {
    // x = 2 must agree with the squared parallelogram area.
    const RealVector v{1, 2};
    const RealVector w{3, 4};
    CHECK(f_x(2.0, v, w) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(f_x(2.0, v, w) ==
          doctest::Approx(g_func(v, w) * g_func(v, w)).epsilon(1e-12));
    CHECK(f_x(1.0, {1, 1}, {1, 1}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(f_x(3.0, {1, 0}, {0, 1}) == 1.0);
    CHECK_THROWS_AS(f_x(0.5, v, w), ExponentOutOfRange);
}

TEST_CASE("lagrange_rhs") {
    CHECK(lagrange_rhs({1, 2}, {3, 4}) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(lagrange_rhs({2, 3, 4}, {2, 3, 4}) == 0.0);
    CHECK(lagrange_rhs({1, 0}, {0, 1}) == 1.0);
}

TEST_CASE("four_exp_margin") {
    CHECK(four_exp_margin(1, 0, 0.5, 0.5, 2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(four_exp_margin(0.3, 0.9, 0.3, 0.9, 5.5) == 0.0);
    // 0.7^3 + 0.3^3 - 0.6^3 - 0.4^3 = 0.343 + 0.027 - 0.216 - 0.064
    CHECK(four_exp_margin(0.7, 0.3, 0.6, 0.4, 3) ==
          doctest::Approx(0.090).epsilon(1e-12));
    CHECK_THROWS_AS(four_exp_margin(-0.1, 0, 0, 0, 2), NegativeInput);
    CHECK_THROWS_AS(four_exp_margin(1, 1, 1, 1, 0.2), ExponentOutOfRange);
}

TEST_CASE("property: f_func is non-negative") {
    for (std::uint64_t t = 0; t < 2000; ++t) {
        TrialRng rng(101, t);
        const std::size_t n = 1 + rng.next_u64() % 6;
        const RealVector v = random_vector(rng, n, -5.0, 5.0);
        const RealVector w = random_vector(rng, n, -5.0, 5.0);
        CHECK(f_func(v, w) >= -1e-12);
    }
}

TEST_CASE("property: f_x(2) equals g_func squared") {
    for (std::uint64_t t = 0; t < 2000; ++t) {
        TrialRng rng(102, t);
        const std::size_t n = 1 + rng.next_u64() % 6;
        const RealVector v = random_vector(rng, n, -3.0, 3.0);
        const RealVector w = random_vector(rng, n, -3.0, 3.0);
        const double g = g_func(v, w);
        CHECK(close_rel(f_x(2.0, v, w), g * g, 1e-12));
    }
}

TEST_CASE("property: Lagrange identity matches f_x(2) on dims 1..8") {
    for (std::uint64_t t = 0; t < 2000; ++t) {
        TrialRng rng(103, t);
        const std::size_t n = 1 + rng.next_u64() % 8;
        const RealVector v = random_vector(rng, n, -2.0, 2.0);
        const RealVector w = random_vector(rng, n, -2.0, 2.0);
        CHECK(close_rel(lagrange_rhs(v, w), f_x(2.0, v, w), 1e-10));
    }
}

TEST_CASE("property: four_exp_margin non-negative on admissible quadruples") {
    for (std::uint64_t t = 0; t < 5000; ++t) {
        TrialRng rng(104, t);
        // Draw c, d and force max/sum dominance for a, b.
        const double c = 2.0 * rng.next_unit();
        const double d = 2.0 * rng.next_unit();
        const double a = std::max(c, d) + rng.next_unit();
        double b = std::max(c + d - a, 0.0) + rng.next_unit();
        const double x = 1.0 + 9.0 * rng.next_unit();
        CHECK(four_exp_margin(a, b, c, d, x) >= -1e-12);
    }
}

TEST_CASE("property: f and g are invariant under common orthogonal maps") {
    for (std::uint64_t t = 0; t < 300; ++t) {
        TrialRng rng(105, t);
        const std::size_t n = 2 + rng.next_u64() % 3;
        const RealVector v = random_vector(rng, n, -2.0, 2.0);
        const RealVector w = random_vector(rng, n, -2.0, 2.0);
        const DenseMatrix Q = csforge::testing::random_orthogonal(rng, n);
        const RealVector qv = mat_vec(Q, v);
        const RealVector qw = mat_vec(Q, w);
        CHECK(close_rel(f_func(qv, qw), f_func(v, w), 1e-10));
        CHECK(close_rel(g_func(qv, qw), g_func(v, w), 1e-10));
    }
}

TEST_CASE("zero vectors are legal everywhere") {
    const RealVector z = RealVector::zeros(4);
    CHECK(f_func(z, z) == 0.0);
    CHECK(g_func(z, z) == 0.0);
    CHECK(f_x(1.5, z, z) == 0.0);
    CHECK(lagrange_rhs(z, z) == 0.0);
}
