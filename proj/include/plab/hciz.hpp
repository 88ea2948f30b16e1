#pragma once

#include "plab/symfun.hpp"

#include <complex>

namespace plab {

struct ComplexMatrix {
    int n = 0;
    std::vector<std::complex<double>> e;

    explicit ComplexMatrix(int dim) : n(dim), e(static_cast<size_t>(dim) * dim) {}

    std::complex<double>& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
    const std::complex<double>& at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }
};

struct MCEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
    long sandwich_violations = 0;
    double min_trace = 0.0, max_trace = 0.0;
};

// --- Haar-random unitaries ------------------------------------------------------

namespace detail {

// Householder QR of a complex matrix; returns Q (in place of the accumulator)
// and leaves R in m.
inline void householder_qr(ComplexMatrix& m, ComplexMatrix& q) {
    int n = m.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q.at(i, j) = (i == j) ? 1.0 : 0.0;

    for (int k = 0; k < n; ++k) {
        double norm = 0.0;
        for (int i = k; i < n; ++i) norm += std::norm(m.at(i, k));
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        std::complex<double> x0 = m.at(k, k);
        double ax0 = std::abs(x0);
        std::complex<double> phase = ax0 > 0 ? x0 / ax0 : std::complex<double>(1.0, 0.0);
        std::complex<double> alpha = -phase * norm;

        std::vector<std::complex<double>> v(n - k);
        v[0] = x0 - alpha;
        for (int i = k + 1; i < n; ++i) v[i - k] = m.at(i, k);
        double vn = 0.0;
        for (auto& z : v) vn += std::norm(z);
        if (vn == 0.0) continue;
        vn = std::sqrt(vn);
        for (auto& z : v) z /= vn;

        // m <- (I - 2 v v*) m  on rows k..n-1
        for (int j = k; j < n; ++j) {
            std::complex<double> dot = 0.0;
            for (int i = k; i < n; ++i) dot += std::conj(v[i - k]) * m.at(i, j);
            for (int i = k; i < n; ++i) m.at(i, j) -= 2.0 * v[i - k] * dot;
        }
        // q <- q (I - 2 v v*)
        for (int i = 0; i < n; ++i) {
            std::complex<double> dot = 0.0;
            for (int j = k; j < n; ++j) dot += q.at(i, j) * v[j - k];
            for (int j = k; j < n; ++j) q.at(i, j) -= 2.0 * dot * std::conj(v[j - k]);
        }
    }
}

}  // namespace detail

// QR of an i.i.d. complex Gaussian matrix with the R-diagonal phase correction;
// plain QR alone is not Haar.
inline ComplexMatrix haar_unitary(int N, std::uint64_t seed) {
    require(N >= 1, ErrKind::InvalidInput, "dimension must be positive");
    Rng rng(seed);
    ComplexMatrix z(N);
    for (auto& v : z.e) {
        double re = rng.gauss(), im = rng.gauss();
        v = std::complex<double>(re, im) / std::sqrt(2.0);
    }
    ComplexMatrix q(N);
    detail::householder_qr(z, q);
    for (int j = 0; j < N; ++j) {
        std::complex<double> r = z.at(j, j);
        double ar = std::abs(r);
        std::complex<double> phase = ar > 0 ? r / ar : std::complex<double>(1.0, 0.0);
        for (int i = 0; i < N; ++i) q.at(i, j) *= phase;
    }
    return q;
}

inline double unitarity_residual(const ComplexMatrix& u) {
    int n = u.n;
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> s = 0.0;
            for (int k = 0; k < n; ++k) s += u.at(i, k) * std::conj(u.at(j, k));
            if (i == j) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    return worst;
}

// --- exact determinant side -------------------------------------------------------

namespace detail {

inline void check_gaps(const std::vector<double>& t, const char* what) {
    double scale = 1.0;
    for (double x : t) scale = std::max(scale, std::fabs(x));
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            require(std::fabs(t[i] - t[j]) > 1e-6 * scale, ErrKind::DegenerateInput,
                    std::string(what) + " tuple has a near-coincident pair");
}

// log |det| with sign, after factoring the largest exponent out of each row of
// exp(a_i x_j); exponentials overflow quickly otherwise.
inline std::pair<double, int> log_det_exp_matrix(const std::vector<double>& a,
                                                 const std::vector<double>& x) {
    int n = static_cast<int>(a.size());
    double shift = 0.0;
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
        double mx = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) mx = std::max(mx, a[i] * x[j]);
        shift += mx;
        for (int j = 0; j < n; ++j) m.at(i, j) = std::exp(a[i] * x[j] - mx);
    }
    double det = det_lu(m);
    if (det == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    return {shift + std::log(std::fabs(det)), det > 0 ? 1 : -1};
}

inline double log_superfactorial(int N) {
    // V(n_min) = prod_{k<N} k!
    double s = 0.0;
    for (int k = 2; k < N; ++k)
        for (int i = 2; i <= k; ++i) s += std::log(static_cast<double>(i));
    return s;
}

inline double superfactorial(int N) {
    double p = 1.0;
    for (int k = 2; k < N; ++k)
        for (int i = 2; i <= k; ++i) p *= i;
    return p;
}

inline std::pair<double, int> log_abs_vandermonde(const std::vector<double>& t) {
    double s = 0.0;
    int sign = 1;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j) {
            double d = t[j] - t[i];
            if (d < 0) {
                sign = -sign;
                d = -d;
            }
            s += std::log(d);
        }
    return {s, sign};
}

}  // namespace detail

// det(e^{a_i x_j}) * V(n_min) / (V(a) V(x)): the closed form of the unitary
// integral, computed in the log domain.
inline double hciz_exact(const std::vector<double>& alpha, const std::vector<double>& x) {
    require(alpha.size() == x.size() && !alpha.empty(), ErrKind::InvalidInput,
            "tuples must be non-empty and of equal length");
    int N = static_cast<int>(alpha.size());
    if (N == 1) return std::exp(alpha[0] * x[0]);
    detail::check_gaps(alpha, "alpha");
    detail::check_gaps(x, "x");

    auto [ld, ds] = detail::log_det_exp_matrix(alpha, x);
    auto [la, as] = detail::log_abs_vandermonde(alpha);
    auto [lx, xs] = detail::log_abs_vandermonde(x);
    require(ds != 0, ErrKind::NumericalFailure, "exponential matrix is numerically singular");
    double lg = ld - la - lx + detail::log_superfactorial(N);
    int sign = ds * as * xs;
    return sign * std::exp(lg);
}

// Monte Carlo side: sample mean and standard error of
// exp tr(diag(alpha) U diag(x) U*) over Haar draws.  Every sample is checked
// against the majorization sandwich on the trace (a hard containment, not a
// statistical one); per-sample seeds make the estimate independent of any
// sharding of the loop.
inline MCEstimate hciz_mc(const std::vector<double>& alpha, const std::vector<double>& x,
                          long samples, std::uint64_t seed) {
    require(alpha.size() == x.size() && !alpha.empty(), ErrKind::InvalidInput,
            "tuples must be non-empty and of equal length");
    require(samples >= 100, ErrKind::InvalidInput, "need at least 100 samples");
    int N = static_cast<int>(alpha.size());

    std::vector<double> as = alpha, xs = x;
    std::sort(as.begin(), as.end());
    std::sort(xs.begin(), xs.end());
    double tr_hi = 0.0, tr_lo = 0.0;
    for (int j = 0; j < N; ++j) {
        tr_hi += as[j] * xs[j];
        tr_lo += as[j] * xs[N - 1 - j];
    }
    double slack = 1e-9 * std::max({1.0, std::fabs(tr_hi), std::fabs(tr_lo)});

    MCEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.min_trace = std::numeric_limits<double>::infinity();
    est.max_trace = -std::numeric_limits<double>::infinity();

    double sum = 0.0, sumsq = 0.0;
    for (long i = 0; i < samples; ++i) {
        ComplexMatrix u = haar_unitary(N, derive_seed(seed, static_cast<std::uint64_t>(i)));
        // tr(diag(alpha) U diag(x) U*) = sum_{i,j} alpha_i x_j |U_ij|^2
        double tr = 0.0;
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) tr += alpha[a] * x[b] * std::norm(u.at(a, b));
        if (tr < tr_lo - slack || tr > tr_hi + slack) ++est.sandwich_violations;
        est.min_trace = std::min(est.min_trace, tr);
        est.max_trace = std::max(est.max_trace, tr);
        double v = std::exp(tr);
        sum += v;
        sumsq += v * v;
    }
    est.mean = sum / samples;
    double var = std::max(0.0, (sumsq - sum * sum / samples) / (samples - 1));
    est.stderr_ = std::sqrt(var / samples);
    return est;
}

// --- generalized Vandermonde sandwich --------------------------------------------

struct GvBounds {
    double lower = 0, det = 0, upper = 0;
};

// V(alpha) V(log u) / V(n_min) * u^{alpha reversed}  <=  det(u^{o alpha})  <=
// same with the aligned pairing u^{alpha}.
inline GvBounds gv_bounds_check(const std::vector<double>& u, const std::vector<double>& alpha) {
    require(u.size() == alpha.size() && !u.empty(), ErrKind::InvalidInput,
            "tuples must be non-empty and of equal length");
    int N = static_cast<int>(u.size());
    for (int i = 0; i < N; ++i) {
        require(u[i] > 0, ErrKind::InvalidInput, "base coordinates must be positive");
        if (i > 0) {
            require(u[i] > u[i - 1], ErrKind::InvalidInput, "base must be sorted, distinct");
            require(alpha[i] > alpha[i - 1], ErrKind::InvalidInput,
                    "exponents must be sorted, distinct");
        }
    }

    std::vector<double> logu(N);
    for (int i = 0; i < N; ++i) logu[i] = std::log(u[i]);
    double pref = vandermonde(alpha) * vandermonde(logu) / detail::superfactorial(N);

    double mono_up = 0.0, mono_lo = 0.0;
    for (int i = 0; i < N; ++i) {
        mono_up += alpha[i] * logu[i];
        mono_lo += alpha[N - 1 - i] * logu[i];
    }

    GvBounds b;
    b.lower = pref * std::exp(mono_lo);
    b.upper = pref * std::exp(mono_up);

    // exponents may be negative here, so build the power matrix directly
    Mat m(N, N);
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) m.at(j, k) = std::pow(u[j], alpha[k]);
    b.det = det_lu(m);
    return b;
}

}  // namespace plab
