#pragma once

#include "plab/symfun.hpp"

#include <functional>
#include <map>

namespace plab {

enum class Formula {
    SharpC,
    K_integer,
    K_real_rank1,
    K_real_full,
    TwoSided,
    Series,
    Laplace,
    Rayleigh,
    Rank1At,
};

inline const char* formula_name(Formula f) {
    switch (f) {
        case Formula::SharpC: return "SharpC";
        case Formula::K_integer: return "K_integer";
        case Formula::K_real_rank1: return "K_real_rank1";
        case Formula::K_real_full: return "K_real_full";
        case Formula::TwoSided: return "TwoSided";
        case Formula::Series: return "Series";
        case Formula::Laplace: return "Laplace";
        case Formula::Rayleigh: return "Rayleigh";
        case Formula::Rank1At: return "Rank1At";
    }
    return "Unknown";
}

struct CoefficientTuple {
    std::vector<double> values;

    static CoefficientTuple of(std::vector<double> v) {
        require(!v.empty(), ErrKind::InvalidInput, "coefficient tuple must be non-empty");
        for (double c : v)
            require(c > 0 && std::isfinite(c), ErrKind::InvalidInput,
                    "coefficients must be positive and finite");
        return CoefficientTuple{std::move(v)};
    }
};

struct ThresholdReport {
    double value = 0.0;
    Formula formula = Formula::SharpC;
    int N = 0;
    std::vector<double> n, c;
    double M = std::numeric_limits<double>::quiet_NaN();
    double rho = std::numeric_limits<double>::quiet_NaN();
    std::map<std::string, double> extras;
    std::optional<std::vector<double>> witness;
};

namespace detail {

inline ThresholdReport& validated(ThresholdReport& r) {
    require(std::isfinite(r.value) && r.value > 0, ErrKind::NumericalFailure,
            "threshold value is not a positive finite number");
    return r;
}

inline void check_threshold_inputs(const PowerTuple& n, const CoefficientTuple& c, double M,
                                   double rho) {
    require(static_cast<int>(c.values.size()) == n.size(), ErrKind::InvalidInput,
            "coefficient count must match exponent count");
    require(std::isfinite(M) && M > n.back(), ErrKind::InvalidInput,
            "power M must exceed the top exponent");
    require(rho > 0 && std::isfinite(rho), ErrKind::InvalidInput, "rho must be positive");
}

// sum_j V(n_j)^2 / V(den)^2 * rho_eff^(M - n_j) / c_j, with optional extra
// factors given in log form.  Direct products for small N, log-space above
// (Vandermonde squares overflow double range quickly).  den may be empty,
// meaning a denominator of 1.
inline double vdm_ratio_sum(const PowerTuple& n, const CoefficientTuple& c, double M,
                            double rho_eff, const std::vector<double>& den,
                            double extra_log_factor, const std::vector<double>& per_term_log) {
    int N = n.size();
    if (N < 6) {
        double dv = den.empty() ? 1.0 : vandermonde(den);
        double s = 0.0;
        for (int j = 0; j < N; ++j) {
            double vj = N == 1 ? 1.0 : vandermonde(n.replaced(j, M).e);
            double t = (vj / dv) * (vj / dv) * std::pow(rho_eff, M - n.e[j]) / c.values[j];
            double lf = extra_log_factor + (per_term_log.empty() ? 0.0 : per_term_log[j]);
            s += lf == 0.0 ? t : t * std::exp(lf);
        }
        return s;
    }
    double log_den = den.size() <= 1 ? 0.0 : log_vandermonde(den);
    std::vector<double> logs(N);
    double mx = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < N; ++j) {
        double lv = log_vandermonde(n.replaced(j, M).e);
        logs[j] = 2.0 * (lv - log_den) + (M - n.e[j]) * std::log(rho_eff) -
                  std::log(c.values[j]) + extra_log_factor +
                  (per_term_log.empty() ? 0.0 : per_term_log[j]);
        mx = std::max(mx, logs[j]);
    }
    double s = 0.0;
    for (double l : logs) s += std::exp(l - mx);
    return std::exp(mx) * s;
}

}  // namespace detail

// --- sharp threshold ---------------------------------------------------------

// C = sum_j V(n_j)^2 / V(n)^2 * rho^(M - n_j) / c_j
inline ThresholdReport sharp_C(const PowerTuple& n, const CoefficientTuple& c, double M,
                               double rho) {
    detail::check_threshold_inputs(n, c, M, rho);
    ThresholdReport r;
    r.formula = Formula::SharpC;
    r.N = n.size();
    r.n = n.e;
    r.c = c.values;
    r.M = M;
    r.rho = rho;
    r.value = detail::vdm_ratio_sum(n, c, M, rho, n.e, 0.0, {});
    return detail::validated(r);
}

enum class KVariant { Integer, RealRank1, RealFull, TwoSided };

inline const char* kvariant_name(KVariant v) {
    switch (v) {
        case KVariant::Integer: return "integer";
        case KVariant::RealRank1: return "real_rank1";
        case KVariant::RealFull: return "real_full";
        case KVariant::TwoSided: return "two_sided";
    }
    return "?";
}

// Qualitative thresholds: the integer-power bound, its real-power rank-one and
// all-rank refinements, and the two-sided bound for the nonvanishing tuples
// (0, ..., N-2, N-1+2r).
inline ThresholdReport qualitative_K(const PowerTuple& n, const CoefficientTuple& c, double M,
                                     double rho, KVariant variant) {
    detail::check_threshold_inputs(n, c, M, rho);
    int N = n.size();
    ThresholdReport r;
    r.N = N;
    r.n = n.e;
    r.c = c.values;
    r.M = M;
    r.rho = rho;

    const std::vector<double> nmin = PowerTuple::nmin(N).e;

    switch (variant) {
        case KVariant::Integer: {
            require(n.integral, ErrKind::InvalidInput, "integer variant needs integral exponents");
            r.formula = Formula::K_integer;
            r.value = detail::vdm_ratio_sum(n, c, M, rho, nmin, 0.0, {});
            break;
        }
        case KVariant::RealRank1: {
            double delta = std::min(n.min_gap(), M - n.back());
            r.formula = Formula::K_real_rank1;
            r.extras["delta"] = delta;
            double pre = -static_cast<double>(N) * (N - 1) * std::log(delta);
            r.value = detail::vdm_ratio_sum(n, c, M, rho, nmin, pre, {});
            break;
        }
        case KVariant::RealFull: {
            double delta = std::min(n.min_gap(), M - n.back());
            r.formula = Formula::K_real_full;
            r.extras["delta"] = delta;
            double pre = std::max(0.0, -static_cast<double>(N) * (N - 1) * std::log(delta));
            // cumulative log prod_{a<j} max(1, g(n,a)),
            // g(n,a) = (N-1-a)!^2 / prod_{k>a} (n_k - n_a)^2
            std::vector<double> cum(N, 0.0);
            double acc = 0.0;
            for (int j = 0; j < N; ++j) {
                cum[j] = acc;
                if (j < N - 1) {
                    double lg = 0.0;
                    for (int k = j + 1; k < N; ++k)
                        lg += 2.0 * (std::log(static_cast<double>(k - j)) -
                                     std::log(n.e[k] - n.e[j]));
                    acc += std::max(0.0, lg);
                }
            }
            r.value = detail::vdm_ratio_sum(n, c, M, rho, nmin, pre, cum);
            break;
        }
        case KVariant::TwoSided: {
            require(n.integral, ErrKind::InvalidInput, "two-sided variant needs integral exponents");
            require(is_integer_valued(M), ErrKind::InvalidInput,
                    "two-sided variant needs an integer power M");
            auto ni = n.as_integers();
            for (int j = 0; j + 1 < N; ++j)
                require(ni[j] == j, ErrKind::InvalidInput,
                        "two-sided variant needs the tuple (0,...,N-2,N-1+2r)");
            long tail = ni[N - 1] - (N - 1);
            require(tail >= 0 && tail % 2 == 0, ErrKind::InvalidInput,
                    "two-sided variant needs the tuple (0,...,N-2,N-1+2r)");
            long rr = tail / 2;
            r.formula = Formula::TwoSided;
            r.extras["r"] = static_cast<double>(rr);
            double lpre = rr * std::log(2.0);
            for (long i = 2; i <= rr; ++i) lpre += std::log(static_cast<double>(i));
            // 2^r r! sum_j V(n_j)^2 (N rho)^(M - n_j) / c_j
            r.value = detail::vdm_ratio_sum(n, c, M, N * rho, {}, lpre, {});
            break;
        }
    }
    return detail::validated(r);
}

// --- per-vector rank-one threshold --------------------------------------------

inline Rational rank1_threshold_exact(const std::vector<Rational>& u, const std::vector<long>& n,
                                      const std::vector<Rational>& c, long M) {
    int N = static_cast<int>(n.size());
    Rational den = gen_vdm_det_exact(u, n);
    require(den != 0, ErrKind::DegenerateInput, "degenerate base vector");
    Rational den2 = den * den;
    Rational t(0);
    for (int j = 0; j < N; ++j) {
        std::vector<long> nj;
        for (int k = 0; k < N; ++k)
            if (k != j) nj.push_back(n[k]);
        nj.push_back(M);
        Rational dj = gen_vdm_det_exact(u, nj);
        t += dj * dj / (c[j] * den2);
    }
    return t;
}

// t(u) = sum_j (det u^{n_j})^2 / (c_j (det u^{n})^2); exact arithmetic when the
// exponents are integral (the doubles in u are themselves exact rationals).
inline ThresholdReport rank1_threshold_at(const std::vector<double>& u, const PowerTuple& n,
                                          const CoefficientTuple& c, double M) {
    int N = n.size();
    require(static_cast<int>(u.size()) == N, ErrKind::InvalidInput, "length mismatch");
    require(static_cast<int>(c.values.size()) == N, ErrKind::InvalidInput,
            "coefficient count must match exponent count");
    require(M > n.back(), ErrKind::InvalidInput, "power M must exceed the top exponent");
    double umax = 0.0;
    for (double x : u) {
        require(x > 0 && std::isfinite(x), ErrKind::InvalidInput, "coordinates must be positive");
        umax = std::max(umax, x);
    }
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j)
            require(u[i] != u[j], ErrKind::DegenerateInput, "coincident coordinates");

    ThresholdReport r;
    r.formula = Formula::Rank1At;
    r.N = N;
    r.n = n.e;
    r.c = c.values;
    r.M = M;
    r.witness = u;

    if (n.integral && is_integer_valued(M)) {
        std::vector<Rational> ur, cr;
        for (double x : u) ur.push_back(rational_of(x));
        for (double x : c.values) cr.push_back(rational_of(x));
        r.value = to_double(
            rank1_threshold_exact(ur, n.as_integers(), cr, static_cast<long>(std::llround(M))));
        return detail::validated(r);
    }

    double den = gen_vdm_det(u, n);
    require(den != 0.0, ErrKind::DegenerateInput, "degenerate base vector");
    double t = 0.0;
    for (int j = 0; j < N; ++j) {
        double dj = gen_vdm_det(u, n.replaced(j, M));
        t += (dj / den) * (dj / den) / c.values[j];
    }
    r.value = t;
    return detail::validated(r);
}

// --- per-matrix Rayleigh threshold ----------------------------------------------

inline bool exponent_feasible(double x, int N) {
    return (is_integer_valued(x) && x >= 0) || x >= static_cast<double>(N - 2);
}

// rho( h[A]^{+/2} A^{oM} h[A]^{+/2} ) with h(x) = sum_j c_j x^{n_j}; the
// pseudo-inverse square root treats eigenvalues below 1e-10 * lambda_max as
// kernel.
inline ThresholdReport rayleigh_threshold(const SymMatrix& A, const PowerTuple& n,
                                          const CoefficientTuple& c, double M) {
    int N = A.n;
    require(static_cast<int>(c.values.size()) == n.size(), ErrKind::InvalidInput,
            "coefficient count must match exponent count");
    require(M > n.back(), ErrKind::InvalidInput, "power M must exceed the top exponent");
    require(A.all_finite(), ErrKind::InvalidInput, "matrix has non-finite entries");
    for (double v : A.e) require(v > 0, ErrKind::InvalidInput, "entries must be positive");

    EigenSystem ea = jacobi_eigen(A);
    double amax = ea.values.back();
    int rank = 0;
    for (double l : ea.values)
        if (l > 1e-8 * std::max(amax, 0.0)) ++rank;
    if (rank > 1)
        for (double x : n.e)
            require(exponent_feasible(x, N), ErrKind::InvalidInput,
                    "exponent infeasible for matrices of rank above one");

    SymMatrix H(N);
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            double s = 0.0;
            for (size_t k = 0; k < n.e.size(); ++k)
                s += c.values[k] * std::pow(A.at(i, j), n.e[k]);
            H.set(i, j, s);
        }

    // Similarity-invariant diagonal scaling: the spectral radius of
    // S P S equals that of S^ P^ S^ for the unit-diagonal pair, and the
    // Jacobi eigenvalues of the scaled matrix are far more accurate when
    // h[A] is badly conditioned.
    std::vector<double> d(N);
    for (int i = 0; i < N; ++i) d[i] = std::sqrt(H.at(i, i));
    SymMatrix Hs(N), Ps(N);
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            Hs.set(i, j, H.at(i, j) / (d[i] * d[j]));
            double a = A.at(i, j);
            require(a > 0 || is_integer_valued(M), ErrKind::DomainError,
                    "non-integral Hadamard power of a non-positive entry");
            Ps.set(i, j, std::pow(a, M) / (d[i] * d[j]));
        }

    EigenSystem eh = jacobi_eigen(Hs);
    double hmax = eh.values.back();
    double cutoff = 1e-10 * std::max(hmax, 0.0);
    // S = Hs^{+/2} via the eigendecomposition
    std::vector<double> s(static_cast<size_t>(N) * N, 0.0);
    for (int k = 0; k < N; ++k) {
        double l = eh.values[k];
        if (l <= cutoff) continue;
        double f = 1.0 / std::sqrt(l);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                s[static_cast<size_t>(i) * N + j] += f * eh.vectors[static_cast<size_t>(i) * N + k] *
                                                     eh.vectors[static_cast<size_t>(j) * N + k];
    }

    // B = S Ps S
    std::vector<double> t(static_cast<size_t>(N) * N, 0.0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            double acc = 0.0;
            for (int k = 0; k < N; ++k) acc += s[static_cast<size_t>(i) * N + k] * Ps.at(k, j);
            t[static_cast<size_t>(i) * N + j] = acc;
        }
    SymMatrix B(N);
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            double acc = 0.0;
            for (int k = 0; k < N; ++k)
                acc += t[static_cast<size_t>(i) * N + k] * s[static_cast<size_t>(k) * N + j];
            B.set(i, j, acc);
        }

    EigenSystem eb = jacobi_eigen(B);
    double radius = std::max(std::fabs(eb.values.front()), std::fabs(eb.values.back()));

    ThresholdReport r;
    r.formula = Formula::Rayleigh;
    r.N = N;
    r.n = n.e;
    r.c = c.values;
    r.M = M;
    r.extras["rank"] = static_cast<double>(rank);
    r.value = radius;
    return detail::validated(r);
}

// --- series and Laplace thresholds -----------------------------------------------

// Tail certificate: |g_M| * rho^M <= C * q^M for all M >= first_M, q < 1.
struct PowerSeriesTail {
    long first_M = 0;
    std::function<double(long)> coeff;
    double C = 1.0;
    double q = 0.5;
};

struct AtomicTail {
    std::vector<std::pair<double, double>> atoms;  // (t_k, w_k)
    double eps = 0.0;
};

inline ThresholdReport series_threshold(const PowerTuple& n, const CoefficientTuple& c, double rho,
                                        const PowerSeriesTail& tail) {
    require(n.integral, ErrKind::InvalidInput, "power-series route needs integral exponents");
    require(tail.first_M > n.back(), ErrKind::InvalidInput,
            "series must start above the top exponent");
    require(tail.C >= 0 && tail.q > 0, ErrKind::InvalidInput, "bad decay certificate");
    require(tail.q < 1.0, ErrKind::NotConvergent, "series not certified convergent beyond rho");

    int N = n.size();
    const std::vector<double> nmin = PowerTuple::nmin(N).e;
    // envelope polynomial P(M) = sum_j V(n_j)^2 rho^{-n_j} / (V(nmin)^2 c_j),
    // so that |g_M| K_M <= C q^M P(M)
    auto envelope = [&](long M) {
        return detail::vdm_ratio_sum(n, c, static_cast<double>(M), rho, nmin, 0.0, {}) *
               std::pow(rho, -static_cast<double>(M));
    };

    double sum = 0.0;
    double trunc = std::numeric_limits<double>::infinity();
    long M = tail.first_M;
    const long max_terms = 200000;
    for (long steps = 0; steps < max_terms; ++steps, ++M) {
        double g = tail.coeff(M);
        require(std::isfinite(g), ErrKind::InvalidInput, "non-finite series coefficient");
        double kM = detail::vdm_ratio_sum(n, c, static_cast<double>(M), rho, nmin, 0.0, {});
        sum += std::fabs(g) * kM;

        double env = tail.C * std::pow(tail.q, static_cast<double>(M)) * envelope(M);
        double beta = std::pow((static_cast<double>(M) + 1.0 - n.back()) /
                                   (static_cast<double>(M) - n.back()),
                               2.0 * (N - 1));
        double rq = tail.q * beta;
        if (rq < 1.0) {
            trunc = env * rq / (1.0 - rq);
            if (steps >= 2 && trunc < 1e-12 * sum) break;
        }
    }
    require(std::isfinite(trunc) && trunc < 1e-12 * std::max(sum, 1e-300),
            ErrKind::NotConvergent, "series truncation bound never met");

    ThresholdReport r;
    r.formula = Formula::Series;
    r.N = N;
    r.n = n.e;
    r.c = c.values;
    r.rho = rho;
    r.value = sum;
    r.extras["truncation_error_bound"] = trunc;
    r.extras["last_M"] = static_cast<double>(M);
    return detail::validated(r);
}

inline ThresholdReport series_threshold(const PowerTuple& n, const CoefficientTuple& c, double rho,
                                        const AtomicTail& tail) {
    require(tail.eps > 0, ErrKind::InvalidInput, "atomic measure needs a declared eps > 0");
    double sum = 0.0;
    for (auto& [t, w] : tail.atoms) {
        require(t >= n.back() + tail.eps, ErrKind::InvalidInput,
                "atom below n_{N-1} + eps");
        sum += std::fabs(w) * qualitative_K(n, c, t, rho, KVariant::RealFull).value;
    }
    ThresholdReport r;
    r.formula = Formula::Laplace;
    r.N = n.size();
    r.n = n.e;
    r.c = c.values;
    r.rho = rho;
    r.value = sum;
    r.extras["atoms"] = static_cast<double>(tail.atoms.size());
    return detail::validated(r);
}

// --- matrix-cube bounds ------------------------------------------------------------

// K_alpha per the cube construction: n_j(alpha) drops n_j and appends
// n_{N-1} + alpha, with rho^(alpha - n_j) weights.
inline double cube_K_alpha(const PowerTuple& n, const CoefficientTuple& c, double alpha,
                           double rho) {
    int N = n.size();
    require(alpha > 0, ErrKind::InvalidInput, "alpha must be positive");
    if (N < 6) {
        double dv = N == 1 ? 1.0 : vandermonde(n.e);
        double s = 0.0;
        for (int j = 0; j < N; ++j) {
            double vj = N == 1 ? 1.0 : vandermonde(n.replaced(j, n.back() + alpha).e);
            s += (vj / dv) * (vj / dv) * std::pow(rho, alpha - n.e[j]) / c.values[j];
        }
        return s;
    }
    double logden = log_vandermonde(n.e);
    std::vector<double> logs(N);
    double mx = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < N; ++j) {
        double lv = log_vandermonde(n.replaced(j, n.back() + alpha).e);
        logs[j] = 2.0 * (lv - logden) + (alpha - n.e[j]) * std::log(rho) - std::log(c.values[j]);
        mx = std::max(mx, logs[j]);
    }
    double s = 0.0;
    for (double l : logs) s += std::exp(l - mx);
    return std::exp(mx) * s;
}

struct CubeBounds {
    double eta_lower = 0, eta_upper = 0;
    std::vector<double> K_alpha;
};

inline CubeBounds cube_bounds(const PowerTuple& n, const CoefficientTuple& c, double rho,
                              const std::vector<double>& alphas) {
    require(!alphas.empty(), ErrKind::InvalidInput, "need at least one alpha");
    for (size_t i = 0; i < alphas.size(); ++i) {
        require(alphas[i] > 0, ErrKind::InvalidInput, "alphas must be positive");
        if (i > 0)
            require(alphas[i] > alphas[i - 1], ErrKind::InvalidInput,
                    "alphas must be strictly increasing");
    }
    for (double x : n.e)
        require(exponent_feasible(x, n.size()), ErrKind::InvalidInput,
                "exponent infeasible for the cube construction");
    CubeBounds out;
    double total = 0.0;
    for (double a : alphas) {
        double k = cube_K_alpha(n, c, a, rho);
        out.K_alpha.push_back(k);
        total += k;
    }
    out.eta_lower = 1.0 / total;
    out.eta_upper = 1.0 / out.K_alpha.back();
    return out;
}

// r(N) = sum_m K_{alpha_m}(N) / K_{alpha_{M+1}}(N) across a dimension range;
// tends to 1 under the gap hypothesis alpha_{M+1} - alpha_M >= n_{j+1} - n_j.
inline std::vector<double> cube_asymptotic_scan(const std::function<double(int)>& n_gen,
                                                const std::function<double(int)>& c_gen,
                                                const std::vector<double>& alphas, double rho,
                                                int N_lo, int N_hi) {
    require(N_lo >= 1 && N_hi >= N_lo, ErrKind::InvalidInput, "bad dimension range");
    require(!alphas.empty(), ErrKind::InvalidInput, "need at least one alpha");
    double last_gap = alphas.size() >= 2
                          ? alphas[alphas.size() - 1] - alphas[alphas.size() - 2]
                          : std::numeric_limits<double>::infinity();

    std::vector<double> out;
    for (int N = N_lo; N <= N_hi; ++N) {
        std::vector<double> nv(N), cv(N);
        for (int j = 0; j < N; ++j) {
            nv[j] = n_gen(j);
            cv[j] = c_gen(j);
        }
        PowerTuple n = PowerTuple::of(nv);
        require(n.integral, ErrKind::PreconditionViolated,
                "asymptotic scan requires integer exponents");
        for (int j = 0; j + 1 < N; ++j)
            require(last_gap >= nv[j + 1] - nv[j], ErrKind::PreconditionViolated,
                    "gap hypothesis violated on the generated prefix");
        CoefficientTuple c = CoefficientTuple::of(cv);
        double total = 0.0, top = 0.0;
        for (size_t m = 0; m < alphas.size(); ++m) {
            double k = cube_K_alpha(n, c, alphas[m], rho);
            total += k;
            if (m + 1 == alphas.size()) top = k;
        }
        out.push_back(total / top);
    }
    return out;
}

}  // namespace plab
