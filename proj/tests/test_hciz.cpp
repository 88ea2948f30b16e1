#include <plab/hciz.hpp>
#include <plab/order.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace plab;

TEST_CASE("haar unitary contract") {
    Rng rng(83);
    for (int trial = 0; trial < 40; ++trial) {
        int N = 1 + static_cast<int>(rng.below(5));
        std::uint64_t seed = rng.bits();
        ComplexMatrix u = haar_unitary(N, seed);
        CHECK(unitarity_residual(u) <= 1e-12);

        // |det U| = 1
        std::vector<std::complex<double>> copy = u.e;
        std::complex<double> det = plab::detail::complex_det(copy, N);
        CHECK(std::abs(std::abs(det) - 1.0) <= 1e-10);

        ComplexMatrix v = haar_unitary(N, seed);
        CHECK(u.e == v.e);  // determinism
    }
}

TEST_CASE("hciz exact closed forms") {
    CHECK(hciz_exact({1.3}, {0.7}) == Catch::Approx(std::exp(1.3 * 0.7)));

    double v = hciz_exact({0, 1}, {0, std::log(2.0)});
    CHECK(v == Catch::Approx(1.0 / std::log(2.0)).epsilon(1e-12));

    // permutation invariance: det and Vandermonde flip sign together
    double w = hciz_exact({1, 0}, {0, std::log(2.0)});
    CHECK(w == Catch::Approx(v).epsilon(1e-12));

    CHECK_THROWS_AS(hciz_exact({0, 1e-9}, {0, 1}), Error);
}

TEST_CASE("hciz monte carlo basics") {
    // N = 1: every sample equals exp(alpha x), zero stderr
    MCEstimate one = hciz_mc({1.2}, {0.5}, 200, 3);
    CHECK(one.mean == Catch::Approx(std::exp(0.6)));
    CHECK(one.stderr_ == 0.0);
    CHECK(one.sandwich_violations == 0);

    // all x equal: the trace is constant exp(x * sum alpha), stderr vanishes
    MCEstimate flat = hciz_mc({0.0, 1.0, 2.5}, {0.7, 0.7, 0.7}, 200, 4);
    CHECK(flat.mean == Catch::Approx(std::exp(0.7 * 3.5)).epsilon(1e-12));
    CHECK(flat.stderr_ <= 1e-12 * flat.mean);

    CHECK_THROWS_AS(hciz_mc({0, 1}, {0, 1}, 50, 0), Error);
}

TEST_CASE("hciz monte carlo matches the determinant side") {
    MCEstimate mc = hciz_mc({0, 1}, {0, std::log(2.0)}, 100000, 7);
    double exact = 1.0 / std::log(2.0);
    CHECK(std::fabs(mc.mean - exact) <= 4.0 * mc.stderr_);
    CHECK(mc.sandwich_violations == 0);
}

TEST_CASE("hciz consistency across random instances") {
    Rng rng(89);
    int bad = 0;
    for (int inst = 0; inst < 10; ++inst) {
        int N = 2 + static_cast<int>(rng.below(3));
        auto alpha = testutil::random_real_tuple(rng, N, 0, 2, 0.12);
        auto x = testutil::random_real_tuple(rng, N, 0, 2, 0.12);
        double exact = hciz_exact(alpha, x);
        MCEstimate mc = hciz_mc(alpha, x, 20000, rng.bits());
        CHECK(mc.sandwich_violations == 0);
        if (std::fabs(mc.mean - exact) > 4.0 * mc.stderr_) ++bad;
    }
    CHECK(bad <= 1);
}

TEST_CASE("determinism and shard independence of the estimator") {
    MCEstimate a = hciz_mc({0, 1, 2}, {0.1, 0.7, 1.4}, 500, 99);
    MCEstimate b = hciz_mc({0, 1, 2}, {0.1, 0.7, 1.4}, 500, 99);
    CHECK(a.mean == b.mean);
    CHECK(a.stderr_ == b.stderr_);
}

TEST_CASE("gv bounds sandwich") {
    GvBounds b = gv_bounds_check({1, 2}, {0, 1});
    CHECK(b.lower == Catch::Approx(std::log(2.0)));
    CHECK(b.det == Catch::Approx(1.0));
    CHECK(b.upper == Catch::Approx(2.0 * std::log(2.0)));

    GvBounds s = gv_bounds_check({1.7}, {2.3});
    CHECK(s.lower == Catch::Approx(std::pow(1.7, 2.3)));
    CHECK(s.det == Catch::Approx(s.lower));
    CHECK(s.upper == Catch::Approx(s.lower));

    CHECK_THROWS_AS(gv_bounds_check({2, 1}, {0, 1}), Error);
    CHECK_THROWS_AS(gv_bounds_check({1, 1}, {0, 1}), Error);

    Rng rng(97);
    for (int trial = 0; trial < 400; ++trial) {
        int N = 1 + static_cast<int>(rng.below(4));
        auto u = testutil::random_real_tuple(rng, N, 0.2, 3.0, 0.05);
        auto alpha = testutil::random_real_tuple(rng, N, -1.0, 3.0, 0.1);
        GvBounds g = gv_bounds_check(u, alpha);
        CHECK(g.det >= g.lower * (1 - 1e-10) - 1e-12);
        CHECK(g.det <= g.upper * (1 + 1e-10) + 1e-12);
    }
}

TEST_CASE("weak-majorization monotonicity of the unitary integral") {
    Rng rng(101);
    int done = 0;
    while (done < 50) {
        int N = 2 + static_cast<int>(rng.below(3));
        auto m = testutil::random_real_tuple(rng, N, 0, 4, 0.15);
        // shrink toward the mean, then scale down: weakly majorized by m
        std::vector<double> n(N);
        double mean = 0;
        for (double x : m) mean += x / N;
        double lam = rng.uniform(0.2, 0.95), shrink = rng.uniform(0.7, 1.0);
        for (int i = 0; i < N; ++i) n[i] = shrink * (lam * m[i] + (1 - lam) * mean);
        bool distinct = true;
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b) distinct = distinct && n[a] != n[b];
        if (!distinct) continue;
        if (weak_majorize(m, n) == MajVerdict::Neither) continue;

        for (int rep = 0; rep < 10; ++rep) {
            auto u = testutil::random_real_tuple(rng, N, 1.05, 5.0, 0.05);
            std::vector<double> logu(N);
            for (int i = 0; i < N; ++i) logu[i] = std::log(u[i]);
            double Fm = hciz_exact(m, logu);
            double Fn = hciz_exact(n, logu);
            CHECK(Fm >= Fn - 1e-9 * std::fabs(Fn));
        }
        ++done;
    }
}
