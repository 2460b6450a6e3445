#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "csforge/errors.hpp"
#include "csforge/inequalities.hpp"
#include "support.hpp"

using namespace csforge;
using csforge::testing::close_rel;
using csforge::testing::random_matrix;
using csforge::testing::random_symmetric;
using csforge::testing::random_vector;

TEST_CASE("check_cs_original") {
    const InequalityReport orth = check_cs_original({1, 0}, {0, 1});
    CHECK(orth.lhs == 1.0);
    CHECK(orth.rhs == 1.0);
    CHECK(orth.margin == 0.0);
    CHECK(orth.holds);

    const InequalityReport same = check_cs_original({2, -3}, {2, -3});
    CHECK(same.lhs == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(same.rhs == doctest::Approx(0.0).epsilon(1e-13));

    const InequalityReport r = check_cs_original({1, 1}, {1, 2});
    CHECK(r.lhs == doctest::Approx(std::sqrt(34.0) - 5.0).epsilon(1e-14));
    CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.holds);
    CHECK(r.name == "cs-original");
    CHECK(r.inputs == "v=1,1 w=1,2");
}

TEST_CASE("check_matrix_gen") {
    const RealVector v{1, 1};
    const RealVector w{1, 2};
    const InequalityReport rank_one =
        check_matrix_gen(DenseMatrix::outer(v, v), DenseMatrix::outer(w, w));
    const InequalityReport plain = check_cs_original(v, w);
    CHECK(close_rel(rank_one.lhs, plain.lhs, 1e-12));
    CHECK(close_rel(rank_one.rhs, plain.rhs, 1e-12));

    const InequalityReport diag_equal = check_matrix_gen(
        DenseMatrix(2, 2, {1, 0, 0, 2}), DenseMatrix(2, 2, {1, 0, 0, 2}));
    CHECK(diag_equal.lhs == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(diag_equal.margin == doctest::Approx(0.0).epsilon(1e-13));

    const InequalityReport mixed =
        check_matrix_gen(DenseMatrix::identity(2), DenseMatrix(2, 2, {1, 1, 1, 1}));
    CHECK(mixed.lhs == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(mixed.rhs == doctest::Approx(2.0 * std::sqrt(2.0) - 2.0).epsilon(1e-13));

    CHECK_THROWS_AS(check_matrix_gen(DenseMatrix(2, 3), DenseMatrix(2, 3)), NotSquare);
    CHECK_THROWS_AS(check_matrix_gen(DenseMatrix(2, 2), DenseMatrix(3, 3)),
                    DimensionMismatch);
}

TEST_CASE("check_eig_gen") {
    const InequalityReport id = check_eig_gen(DenseMatrix::identity(2), DenseMatrix::identity(2));
    CHECK(id.lhs == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(id.rhs == doctest::Approx(0.0).epsilon(1e-13));

    // Diagonal case: spectra are the diagonals re-sorted.
    const InequalityReport diag = check_eig_gen(
        DenseMatrix(3, 3, {3, 0, 0, 0, 1, 0, 0, 0, 2}),
        DenseMatrix(3, 3, {5, 0, 0, 0, 4, 0, 0, 0, 6}));
    CHECK(diag.holds);

    CHECK_THROWS_AS(check_eig_gen(DenseMatrix(2, 2, {0, 1, 0, 0}), DenseMatrix::identity(2)),
                    NotSymmetric);
}

TEST_CASE("check_svd_gen") {
    const InequalityReport id = check_svd_gen(DenseMatrix::identity(3), DenseMatrix::identity(3));
    CHECK(id.lhs == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(id.rhs == doctest::Approx(0.0).epsilon(1e-12));

    for (std::uint64_t t = 0; t < 50; ++t) {
        TrialRng rng(501, t);
        CHECK(check_svd_gen(random_matrix(rng, 3, 3), random_matrix(rng, 3, 3)).holds);
    }
}

TEST_CASE("check_fx_projection") {
    const RealVector v{0.8, -1.1, 0.4};
    const RealVector w{1.5, 0.2, -0.6};

    // P = 0 recovers the plain Cauchy-Schwarz gap on the right.
    const InequalityReport zero = check_fx_projection(1.0, v, w, DenseMatrix(3, 3));
    CHECK(zero.lhs == 0.0);
    CHECK(zero.rhs == doctest::Approx(f_x(1.0, v, w)).epsilon(1e-14));
    CHECK(zero.holds);

    const InequalityReport full = check_fx_projection(2.5, v, w, DenseMatrix::identity(3));
    CHECK(full.margin == doctest::Approx(0.0).epsilon(1e-12));

    // Coordinate projection dropping the first entry.
    DenseMatrix P(3, 3);
    P(1, 1) = P(2, 2) = 1.0;
    const InequalityReport drop = check_fx_projection(1.0, v, w, P);
    CHECK(drop.holds);
    const RealVector pv{0.0, v[1], v[2]};
    const RealVector pw{0.0, w[1], w[2]};
    CHECK(drop.lhs == doctest::Approx(f_x(1.0, pv, pw)).epsilon(1e-13));

    CHECK_THROWS_AS(check_fx_projection(1.0, v, w, DenseMatrix(3, 3, {1, 0, 0, 0, 2, 0, 0, 0, 1})),
                    NotAProjection);
    CHECK_THROWS_AS(check_fx_projection(0.9, v, w, DenseMatrix::identity(3)),
                    ExponentOutOfRange);
}

TEST_CASE("check_fp_diag") {
    const RealVector x{0.3, 1.2};
    const RealVector y{-0.5, 0.8};

    // p = 1: both sides are the same expression.
    const InequalityReport single = check_fp_diag(1.5, {x}, {y});
    CHECK(single.margin == doctest::Approx(0.0).epsilon(1e-13));

    // Repeating one pair p times at x = 1 reduces to the integer-power case.
    const InequalityReport rep = check_fp_diag(1.0, {x, x, x}, {y, y, y});
    const InequalityReport pow = check_equal_tensors(3, x, y);
    CHECK(close_rel(rep.lhs, pow.lhs, 1e-12));
    CHECK(close_rel(rep.rhs, pow.rhs, 1e-12));

    for (std::uint64_t t = 0; t < 100; ++t) {
        TrialRng rng(502, t);
        const std::vector<RealVector> xs{random_vector(rng, 3), random_vector(rng, 3)};
        const std::vector<RealVector> ys{random_vector(rng, 3), random_vector(rng, 3)};
        CHECK(check_fp_diag(1.5, xs, ys).holds);
    }
}

TEST_CASE("check_equal_tensors") {
    const InequalityReport p1 = check_equal_tensors(1, {1, -2, 0.5}, {0.3, 4, 1});
    CHECK(p1.margin == doctest::Approx(0.0).epsilon(1e-13));

    const InequalityReport p3 = check_equal_tensors(3, {1, 1}, {1, 2});
    CHECK(p3.lhs == doctest::Approx(std::sqrt(130.0) - 9.0).epsilon(1e-13));
    CHECK(p3.rhs == doctest::Approx(std::pow(10.0, 1.5) - 27.0).epsilon(1e-13));
    CHECK(p3.holds);

    const InequalityReport p2 = check_equal_tensors(2, {1, 0}, {0, 1});
    CHECK(p2.lhs == 1.0);
    CHECK(p2.rhs == 1.0);

    CHECK_THROWS_AS(check_equal_tensors(0, {1, 1}, {1, 1}), ExponentOutOfRange);
}

TEST_CASE("check_generalized") {
    const RealVector v1{1, 1};
    const RealVector v2{1, 2};

    // The identity permutation gives the trivial equality.
    const InequalityReport trivial =
        check_generalized({v1, v2}, PermutationS2p::identity(4));
    CHECK(trivial.lhs == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(trivial.rhs == doctest::Approx(10.0).epsilon(1e-12));

    // sigma = (1,3,4,2) on non-negative vectors has the closed form
    // ||v1^2|| ||v2^2|| - <v1^2, v2^2> + <v1, v2>^2.
    const InequalityReport gen = check_generalized({v1, v2}, PermutationS2p({1, 3, 4, 2}));
    CHECK(gen.lhs == doctest::Approx(std::sqrt(34.0) + 4.0).epsilon(1e-11));
    CHECK(gen.rhs == doctest::Approx(10.0).epsilon(1e-13));
    CHECK(gen.holds);

    for (std::uint64_t t = 0; t < 30; ++t) {
        TrialRng rng(503, t);
        const RealVector a = csforge::testing::random_nonneg_vector(rng, 3);
        const RealVector b = csforge::testing::random_nonneg_vector(rng, 3);
        const InequalityReport r = check_generalized({a, b}, PermutationS2p({1, 3, 4, 2}));
        const RealVector a2 = hadamard_power(a, 2.0);
        const RealVector b2 = hadamard_power(b, 2.0);
        const double closed =
            norm2(a2) * norm2(b2) - inner(a2, b2) + inner(a, b) * inner(a, b);
        CHECK(close_rel(r.lhs, closed, 1e-9));
    }
}

TEST_CASE("check_generalized left side ignores entrywise sign flips") {
    for (std::uint64_t t = 0; t < 20; ++t) {
        TrialRng rng(504, t);
        const std::size_t n = 2 + t % 2;
        std::vector<RealVector> vs{random_vector(rng, n), random_vector(rng, n),
                                   random_vector(rng, n)};
        std::vector<int> img{5, 1, 4, 2, 6, 3};
        const PermutationS2p sigma(img);
        const double base = check_generalized(vs, sigma).lhs;
        for (auto& v : vs) {
            for (std::size_t i = 0; i < n; ++i) {
                if (rng.next_u64() & 1u) v[i] = -v[i];
            }
        }
        CHECK(close_rel(check_generalized(vs, sigma).lhs, base, 1e-9));
    }
}

TEST_CASE("tripartite_lhs_explicit matches the generic tensor pipeline") {
    const PermutationS2p sigma({6, 5, 3, 4, 2, 1});
    for (std::uint64_t t = 0; t < 60; ++t) {
        TrialRng rng(505, t);
        const std::size_t n = 2 + t % 2;  // the identity is exact for n <= 3
        const RealVector v = random_vector(rng, n, -2.0, 2.0);
        const RealVector w = random_vector(rng, n, -2.0, 2.0);
        const RealVector x = random_vector(rng, n, -2.0, 2.0);
        const TripartiteBlocks blocks = tripartite_lhs_explicit(v, w, x);
        const double generic =
            trace_norm(matrix_view(realign(twirl(product_tensor({v, w, x}, {v, w, x})), sigma)));
        CHECK(close_rel(blocks.total(), generic, 1e-8));
        CHECK(std::abs(blocks.cross_signed) <= blocks.cross + 1e-12);
    }
}

TEST_CASE("tripartite_lhs_explicit basis case") {
    const RealVector e1{1, 0};
    const TripartiteBlocks blocks = tripartite_lhs_explicit(e1, e1, e1);
    CHECK(blocks.total() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("check_tripartite") {
    const RealVector e1{1, 0};
    const InequalityReport basis = check_tripartite(e1, e1, e1);
    CHECK(basis.margin == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(basis.holds);

    const RealVector ones{1, 1};
    const InequalityReport all_ones = check_tripartite(ones, ones, ones);
    CHECK(all_ones.holds);
    // paired = 6, cross empty at n=2, rhs = 8 + 2 - 4 = 6.
    CHECK(all_ones.lhs == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(all_ones.rhs == doctest::Approx(6.0).epsilon(1e-12));

    for (std::uint64_t t = 0; t < 200; ++t) {
        TrialRng rng(506, t);
        const RealVector v = random_vector(rng, 3, -2.0, 2.0);
        const RealVector w = random_vector(rng, 3, -2.0, 2.0);
        const RealVector x = random_vector(rng, 3, -2.0, 2.0);
        CHECK(check_tripartite(v, w, x).holds);
        CHECK(check_tripartite(w, x, v).holds);
        CHECK(check_tripartite(x, v, w).holds);
        CHECK(check_tripartite(v, x, w).holds);
        CHECK(check_tripartite(w, v, x).holds);
        CHECK(check_tripartite(x, w, v).holds);
    }
}

TEST_CASE("every S6 permutation lands on a known value class at n = 3") {
    TrialRng rng(507, 0);
    const RealVector v = random_vector(rng, 3, -1.5, 1.5);
    const RealVector w = random_vector(rng, 3, -1.5, 1.5);
    const RealVector x = random_vector(rng, 3, -1.5, 1.5);
    const double trivial = inner(v, v) * inner(w, w) * inner(x, x);
    const RealVector* roles[3] = {&v, &w, &x};
    std::vector<double> totals;
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& perm : perms) {
        totals.push_back(
            tripartite_lhs_explicit(*roles[perm[0]], *roles[perm[1]], *roles[perm[2]])
                .total());
    }
    // Walk all 720 one-line images via repeated next_permutation.
    std::vector<int> img{1, 2, 3, 4, 5, 6};
    std::size_t classified = 0;
    do {
        const double lhs = check_generalized({v, w, x}, PermutationS2p(img)).lhs;
        bool in_set = close_rel(lhs, trivial, 1e-8);
        for (double total : totals) in_set = in_set || close_rel(lhs, total, 1e-8);
        if (in_set) ++classified;
    } while (std::next_permutation(img.begin(), img.end()));
    CHECK(classified == 720);
}

TEST_CASE("check_conjecture") {
    // p = 2 coincides with cs-original on positive vectors.
    const RealVector v{0.4, 1.3};
    const RealVector w{2.0, 0.7};
    const InequalityReport conj = check_conjecture(2.0, v, w);
    const InequalityReport cs = check_cs_original(v, w);
    CHECK(close_rel(conj.lhs, cs.lhs, 1e-12));
    CHECK(close_rel(conj.rhs, cs.rhs, 1e-12));

    // Relaxed mode accepts the tight example v = w = e1.
    const InequalityReport tight = check_conjecture(3.7, {1, 0}, {1, 0});
    CHECK(tight.lhs == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(tight.rhs == doctest::Approx(0.0).epsilon(1e-13));

    CHECK_THROWS_AS(check_conjecture(3.7, {1, 0}, {1, 0}, /*strict=*/true),
                    NonPositiveEntries);
    CHECK_THROWS_AS(check_conjecture(2.5, {1, -1}, {1, 1}), NonPositiveEntries);
    CHECK_THROWS_AS(check_conjecture(0.0, v, w), ExponentOutOfRange);
}

TEST_CASE("registry lists every checker once and dispatches") {
    CHECK(checker_registry().size() == 10);
    CHECK(find_checker("cs-original") != nullptr);
    CHECK(find_checker("no-such") == nullptr);
    CHECK_FALSE(find_checker("conjecture")->proven);
    CHECK(find_checker("tripartite")->proven);

    CheckInputs in;
    in.vectors = {RealVector{1, 1}, RealVector{1, 2}};
    const auto reports = find_checker("cs-original")->run(in, Tolerance{});
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].rhs == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("report rendering formats") {
    const InequalityReport r = check_cs_original({1, 0}, {0, 1});
    CHECK(render_line(r) == "cs-original 1 1 0 true");
    CHECK(render_csv_header() == "name,lhs,rhs,margin,holds");
    CHECK(render_csv_row(r) == "cs-original,1,1,0,true");
    CHECK(render_structured(r) ==
          R"({"name":"cs-original","lhs":1.0,"rhs":1.0,"margin":0.0,"holds":true,"inputs":"v=1,0 w=0,1"})");
}

TEST_CASE("tolerance rule") {
    const Tolerance tol;
    CHECK(tol.holds(1.0, 1.0));
    CHECK(tol.holds(1.0 + 5e-10, 1.0));          // inside rtol * scale
    CHECK_FALSE(tol.holds(1.0 + 5e-9, 1.0));     // outside
    CHECK(tol.holds(0.0, -5e-13));               // inside atol
    const Tolerance loose{1e-6, 1e-3};
    CHECK(loose.holds(1.0, 0.9999));
}
