#include <plab/matrix.hpp>
#include <plab/symfun.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace plab;
using testutil::random_int_matrix;

TEST_CASE("sym_eigen closed forms") {
    SymMatrix a(2);
    a.set(0, 0, 1);
    a.set(0, 1, 2);
    a.set(1, 1, 1);
    Spectrum s = sym_eigen(a);
    CHECK(s.eigenvalues[0] == Catch::Approx(-1.0).margin(1e-12));
    CHECK(s.eigenvalues[1] == Catch::Approx(3.0).margin(1e-12));

    SymMatrix id(3);
    for (int i = 0; i < 3; ++i) id.set(i, i, 1);
    Spectrum si = sym_eigen(id);
    for (double l : si.eigenvalues) CHECK(l == Catch::Approx(1.0).margin(1e-13));

    SymMatrix b(2);
    b.set(0, 0, 2);
    b.set(0, 1, 3);
    b.set(1, 1, 5);
    Spectrum sb = sym_eigen(b);
    double disc = std::sqrt(45.0);
    CHECK(sb.eigenvalues[0] == Catch::Approx((7 - disc) / 2).margin(1e-12));
    CHECK(sb.eigenvalues[1] == Catch::Approx((7 + disc) / 2).margin(1e-12));
}

TEST_CASE("sym_eigen trace identity and residual on random matrices") {
    Rng rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng.below(6));
        SymMatrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) a.set(i, j, rng.uniform(-3, 3));
        Spectrum s = sym_eigen(a);
        double sum = 0;
        for (double l : s.eigenvalues) sum += l;
        CHECK(std::fabs(sum - a.trace()) <= 1e-10 * std::max(1.0, std::fabs(a.trace())));
        CHECK(s.residual <= 1e-10 * std::max(1.0, a.max_abs()));
    }
}

TEST_CASE("sym_eigen rejects non-finite input") {
    SymMatrix a(2);
    a.set(0, 0, std::numeric_limits<double>::quiet_NaN());
    CHECK_THROWS_AS(sym_eigen(a), Error);
}

TEST_CASE("is_psd basics") {
    SymMatrix id(2);
    id.set(0, 0, 1);
    id.set(1, 1, 1);
    CHECK(is_psd(id).psd);

    SymMatrix a(2);
    a.set(0, 0, 1);
    a.set(0, 1, 2);
    a.set(1, 1, 1);
    PsdResult r = is_psd(a);
    CHECK_FALSE(r.psd);
    CHECK(r.min_eig == Catch::Approx(-1.0).margin(1e-12));

    SymMatrix b(2);
    b.set(0, 0, 2);
    b.set(0, 1, 3);
    b.set(1, 1, 5);
    CHECK(is_psd(b).psd);
}

TEST_CASE("det_lu closed forms") {
    Mat m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 3;
    m.at(1, 0) = 3;
    m.at(1, 1) = 5;
    CHECK(det_lu(m) == Catch::Approx(1.0).margin(1e-14));

    Mat id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(det_lu(id) == 1.0);

    // Vandermonde of (1,2,3) with powers (0,1,2): product formula gives 2
    PowerTuple n = PowerTuple::of({0, 1, 2});
    CHECK(gen_vdm_det({1, 2, 3}, n) == Catch::Approx(2.0).margin(1e-12));
}

TEST_CASE("det_exact closed forms") {
    RationalMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 3;
    m.at(1, 0) = 3;
    m.at(1, 1) = 5;
    CHECK(det_exact(m) == Rational(1));

    RationalMatrix h(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h.at(i, j) = Rational(1, i + j + 1);
    CHECK(det_exact(h) == Rational(1, 2160));

    RationalMatrix ones(2, 2);
    for (auto& e : ones.e) e = 1;
    CHECK(det_exact(ones) == Rational(0));
}

TEST_CASE("det_exact matches det_lu on random integer matrices") {
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng.below(6));
        RationalMatrix m = random_int_matrix(rng, n);
        Mat d(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d.at(i, j) = to_double(m.at(i, j));
        double exact = to_double(det_exact(m));
        double lu = det_lu(d);
        if (exact == 0.0)
            CHECK(std::fabs(lu) <= 1e-9);
        else
            CHECK(rel_err(exact, lu) <= 1e-9);
    }
}

TEST_CASE("tuple_sign and minor extraction") {
    CHECK(tuple_sign({1, 2, 3}) == 1);
    CHECK(tuple_sign({2, 1}) == -1);

    Mat id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    Mat m = minor(id, {2, 1}, {2, 1});
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 0);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(1, 1) == 1);

    CHECK_THROWS_AS(minor(id, {1, 1}, {1, 2}), Error);
    CHECK_THROWS_AS(minor(id, {0, 1}, {1, 2}), Error);
}

TEST_CASE("is_strictly_tp basics") {
    PowerTuple n = PowerTuple::of({0, 1, 2});
    Mat gv = gen_vdm_matrix({1, 2, 3}, n);
    CHECK(is_strictly_tp(gv));

    Mat ones(2, 2);
    for (auto& e : ones.e) e = 1;
    CHECK_FALSE(is_strictly_tp(ones));

    Mat m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    CHECK(is_strictly_tp(m));

    Mat big(8, 8);
    CHECK_THROWS_AS(is_strictly_tp(big), Error);
}

TEST_CASE("strict TP of generalized Vandermonde matrices") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.below(4));  // up to 5
        auto u = testutil::random_real_tuple(rng, n, 0.2, 4.0, 0.15);
        auto e = testutil::random_real_tuple(rng, n, 0.0, 6.0, 0.3);
        Mat gv = gen_vdm_matrix(u, PowerTuple::of(e));
        CHECK(is_strictly_tp(gv));
    }
}

TEST_CASE("hankel build and truncate") {
    HankelMoments m1 = HankelMoments::of({1, 1, 1});
    SymMatrix a1 = hankel_build(m1);
    CHECK(a1.at(0, 1) == 1);
    SymMatrix t1 = hankel_truncate(a1);
    CHECK(t1.n == 1);
    CHECK(t1.at(0, 0) == 1);

    HankelMoments m2 = HankelMoments::of({1, 0, 1});
    SymMatrix a2 = hankel_build(m2);
    CHECK(a2.at(0, 0) == 1);
    CHECK(a2.at(0, 1) == 0);
    CHECK(a2.at(1, 1) == 1);
    CHECK(hankel_truncate(a2).at(0, 0) == 0);

    SymMatrix a3 = hankel_build(HankelMoments::of({1, 2, 1}));
    CHECK(a3.at(0, 1) == 2);

    CHECK_THROWS_AS(HankelMoments::of({1, 2}), Error);
}

TEST_CASE("is_tn_hankel examples") {
    CHECK(is_tn_hankel(HankelMoments::of({1, 1, 1})));
    CHECK_FALSE(is_tn_hankel(HankelMoments::of({1, 2, 1})));
    CHECK(is_tn_hankel(HankelMoments::of({1, 0, 1})));
}

namespace {

// brute-force oracle: every minor of the Hankel matrix non-negative
bool tn_bruteforce(const SymMatrix& A, double tol) {
    int n = A.n;
    Mat m = A.as_mat();
    for (int k = 1; k <= n; ++k) {
        bool ok = true;
        plab::detail::for_each_increasing(n, k, [&](const IndexTuple& I) {
            plab::detail::for_each_increasing(n, k, [&](const IndexTuple& J) {
                if (!ok) return;
                Mat sub = minor(m, I, J);
                double scale = 1.0;
                for (int r = 0; r < k; ++r) {
                    double rn = 0;
                    for (int c = 0; c < k; ++c) rn += sub.at(r, c) * sub.at(r, c);
                    scale *= std::sqrt(rn);
                }
                if (det_lu(sub) < -tol * std::max(1.0, scale)) ok = false;
            });
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("is_tn_hankel agrees with all-minors brute force") {
    Rng rng(9001);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int N = 2 + static_cast<int>(rng.below(3));
        std::vector<double> mom(2 * N - 1);
        if (trial % 2 == 0) {
            // moment sequence of a positive atomic measure: genuinely TN
            int atoms = 1 + static_cast<int>(rng.below(3));
            for (int k = 0; k < 2 * N - 1; ++k) mom[k] = 0;
            for (int a = 0; a < atoms; ++a) {
                double w = rng.uniform(0.1, 2.0), t = rng.uniform(0.0, 1.5);
                double p = w;
                for (int k = 0; k < 2 * N - 1; ++k) {
                    mom[k] += p;
                    p *= t;
                }
            }
        } else {
            for (double& x : mom) x = rng.uniform(-1.0, 2.0);
        }
        HankelMoments h = HankelMoments::of(mom);
        bool pair_test = is_tn_hankel(h, 1e-9);
        bool brute = tn_bruteforce(hankel_build(h), 1e-9);
        if (pair_test == brute) ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("sample_psd contract") {
    SymMatrix a = sample_psd(4, 2.0, 2, 77);
    SymMatrix b = sample_psd(4, 2.0, 2, 77);
    CHECK(a.e == b.e);  // bitwise determinism

    SymMatrix r1 = sample_psd(3, 1.0, 1, 5);
    CHECK(std::fabs(det_lu(r1.as_mat())) <= 1e-10 * r1.max_abs());

    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        int N = 1 + static_cast<int>(rng.below(5));
        int r = 1 + static_cast<int>(rng.below(N));
        double rho = rng.uniform(0.3, 3.0);
        SymMatrix s = sample_psd(N, rho, r, rng.bits());
        for (double v : s.e) {
            CHECK(v > 0);
            CHECK(v < rho);
        }
        Spectrum sp = sym_eigen(s);
        double lmax = sp.eigenvalues.back();
        CHECK(sp.eigenvalues.front() >= -1e-10 * lmax);
        int rank = 0;
        for (double l : sp.eigenvalues)
            if (l > 1e-8 * lmax) ++rank;
        CHECK(rank <= r);
    }
    CHECK_THROWS_AS(sample_psd(3, 1.0, 4, 0), Error);
    CHECK_THROWS_AS(sample_psd(3, -1.0, 1, 0), Error);
}

TEST_CASE("dodgson residual vanishes") {
    RationalMatrix ones(3, 3);
    for (auto& e : ones.e) e = 1;
    CHECK(dodgson_residual(ones, 1, 2, 1, 3) == Rational(0));

    RationalMatrix two(2, 2);
    two.at(0, 0) = 3;
    two.at(0, 1) = -2;
    two.at(1, 0) = 7;
    two.at(1, 1) = 5;
    CHECK(dodgson_residual(two, 1, 2, 1, 2) == Rational(0));

    Rng rng(55);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.below(3));
        RationalMatrix m = random_int_matrix(rng, n);
        int i1 = 1 + static_cast<int>(rng.below(n - 1));
        int i2 = i1 + 1 + static_cast<int>(rng.below(n - i1));
        int j1 = 1 + static_cast<int>(rng.below(n - 1));
        int j2 = j1 + 1 + static_cast<int>(rng.below(n - j1));
        CHECK(dodgson_residual(m, i1, i2, j1, j2) == Rational(0));
    }

    RationalMatrix m3 = random_int_matrix(rng, 3);
    CHECK_THROWS_AS(dodgson_residual(m3, 2, 1, 1, 2), Error);  // indices out of order
    CHECK_THROWS_AS(dodgson_residual(m3, 1, 4, 1, 2), Error);  // out of range
}

TEST_CASE("karlin residual vanishes") {
    using V = std::vector<Rational>;
    V x1 = {1, 2}, y1 = {3, -1}, y2 = {0, 4};
    RationalMatrix b0(2, 0);
    CHECK(karlin_residual(x1, x1, y1, y2, b0) == Rational(0));  // repeated column
    CHECK(karlin_residual(x1, y1, y2, V{5, 6}, b0) == Rational(0));

    RationalMatrix wrong(3, 0);
    CHECK_THROWS_AS(karlin_residual(x1, x1, y1, y2, wrong), Error);  // B shape mismatch
    CHECK_THROWS_AS(karlin_residual(x1, x1, y1, V{1}, b0), Error);   // vector length mismatch

    Rng rng(56);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng.below(2));
        auto vec = [&] {
            V v(n);
            for (auto& e : v) e = testutil::random_rational(rng);
            return v;
        };
        RationalMatrix b(n, n - 2);
        for (auto& e : b.e) e = testutil::random_rational(rng);
        CHECK(karlin_residual(vec(), vec(), vec(), vec(), b) == Rational(0));
    }
}

TEST_CASE("hadamard power") {
    SymMatrix a(2);
    a.set(0, 0, 2);
    a.set(0, 1, 3);
    a.set(1, 1, 4);
    SymMatrix sq = plab::hadamard_power(a, 2.0);
    CHECK(sq.at(0, 1) == 9.0);
    CHECK(sq.at(1, 1) == 16.0);

    SymMatrix neg(1);
    neg.set(0, 0, -2);
    CHECK(plab::hadamard_power(neg, 3.0).at(0, 0) == -8.0);
    CHECK_THROWS_AS(plab::hadamard_power(neg, 0.5), Error);
}

TEST_CASE("csv round trip and symmetry validation") {
    std::stringstream good("1,2\n2,5\n");
    SymMatrix a = load_sym_csv(good);
    CHECK(a.at(0, 1) == 2);

    std::stringstream bad("1,2\n3,5\n");
    CHECK_THROWS_AS(load_sym_csv(bad), Error);
}
