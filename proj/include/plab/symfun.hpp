#pragma once

#include "plab/matrix.hpp"

#include <map>
#include <numeric>

namespace plab {

// --- power tuples --------------------------------------------------------------

struct PowerTuple {
    std::vector<double> e;  // strictly increasing, non-negative
    bool integral = false;

    static PowerTuple of(std::vector<double> exps) {
        PowerTuple t;
        require(!exps.empty(), ErrKind::InvalidInput, "power tuple must be non-empty");
        bool intg = true;
        for (size_t i = 0; i < exps.size(); ++i) {
            require(std::isfinite(exps[i]) && exps[i] >= 0.0, ErrKind::InvalidInput,
                    "exponents must be finite and non-negative");
            if (i > 0)
                require(exps[i] > exps[i - 1], ErrKind::InvalidInput,
                        "exponents must be strictly increasing");
            intg = intg && is_integer_valued(exps[i]);
        }
        t.e = std::move(exps);
        t.integral = intg;
        return t;
    }

    static PowerTuple nmin(int N) {
        std::vector<double> v(N);
        std::iota(v.begin(), v.end(), 0.0);
        return of(std::move(v));
    }

    int size() const { return static_cast<int>(e.size()); }
    double back() const { return e.back(); }

    std::vector<long> as_integers() const {
        require(integral, ErrKind::InvalidInput, "tuple is not integral");
        std::vector<long> v(e.size());
        for (size_t i = 0; i < e.size(); ++i) v[i] = static_cast<long>(std::llround(e[i]));
        return v;
    }

    bool one_separated() const {
        for (size_t i = 1; i < e.size(); ++i)
            if (e[i] - e[i - 1] < 1.0) return false;
        return true;
    }

    double min_gap() const {
        double g = std::numeric_limits<double>::infinity();
        for (size_t i = 1; i < e.size(); ++i) g = std::min(g, e[i] - e[i - 1]);
        return g;
    }

    // n_j: drop the j-th exponent, append M.
    PowerTuple replaced(int j, double M) const {
        require(M > e.back(), ErrKind::InvalidInput, "replacement power must exceed the top exponent");
        std::vector<double> v;
        v.reserve(e.size());
        for (int k = 0; k < size(); ++k)
            if (k != j) v.push_back(e[k]);
        v.push_back(M);
        return of(std::move(v));
    }
};

// --- Vandermonde determinants ----------------------------------------------------

inline double vandermonde(const std::vector<double>& t) {
    double p = 1.0;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j) p *= t[j] - t[i];
    return p;
}

inline Rational vandermonde_exact(const std::vector<Rational>& t) {
    Rational p(1);
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j) p *= t[j] - t[i];
    return p;
}

// log prod (t_j - t_i) for strictly increasing t; the guard against overflow
// when tuples are long (Vandermonde squares leave double range quickly).
inline double log_vandermonde(const std::vector<double>& t) {
    double s = 0.0;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j) {
            double d = t[j] - t[i];
            require(d > 0, ErrKind::InvalidInput, "log-Vandermonde needs increasing entries");
            s += std::log(d);
        }
    return s;
}

// --- generalized Vandermonde matrices --------------------------------------------

inline Mat gen_vdm_matrix(const std::vector<double>& u, const PowerTuple& n) {
    require(static_cast<int>(u.size()) == n.size(), ErrKind::InvalidInput,
            "base vector and power tuple differ in length");
    int N = n.size();
    Mat m(N, N);
    for (int j = 0; j < N; ++j) {
        require(u[j] > 0 || n.integral, ErrKind::DomainError,
                "non-integral powers need positive bases");
        for (int k = 0; k < N; ++k) m.at(j, k) = std::pow(u[j], n.e[k]);
    }
    return m;
}

inline DetResult gen_vdm_det_full(const std::vector<double>& u, const PowerTuple& n) {
    return det_lu_full(gen_vdm_matrix(u, n));
}

inline double gen_vdm_det(const std::vector<double>& u, const PowerTuple& n) {
    return gen_vdm_det_full(u, n).value;
}

inline Rational rational_pow(const Rational& x, long k) {
    require(k >= 0, ErrKind::InvalidInput, "negative power");
    Rational r(1), b = x;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline Rational gen_vdm_det_exact(const std::vector<Rational>& u, const std::vector<long>& n) {
    require(u.size() == n.size(), ErrKind::InvalidInput,
            "base vector and power tuple differ in length");
    int N = static_cast<int>(n.size());
    RationalMatrix m(N, N);
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) m.at(j, k) = rational_pow(u[j], n[k]);
    return det_exact(m);
}

// --- Weyl dimension ---------------------------------------------------------------

inline Rational weyl_dimension_exact(const PowerTuple& n) {
    auto ni = n.as_integers();
    BigInt num(1), den(1);
    for (size_t i = 0; i < ni.size(); ++i)
        for (size_t j = i + 1; j < ni.size(); ++j) {
            num *= BigInt(ni[j] - ni[i]);
            den *= BigInt(static_cast<long>(j - i));
        }
    return Rational(num, den);
}

inline double weyl_dimension(const PowerTuple& n) {
    if (n.integral) return to_double(weyl_dimension_exact(n));
    double s = 0.0;
    for (size_t i = 0; i < n.e.size(); ++i)
        for (size_t j = i + 1; j < n.e.size(); ++j)
            s += std::log(n.e[j] - n.e[i]) - std::log(static_cast<double>(j - i));
    return std::exp(s);
}

// --- Schur polynomials: tableau engine ---------------------------------------------

// Monomial list of s_n: exponent vectors (occurrence counts of 1..N) with
// multiplicities, from column-strict tableaux of the shape with row lengths
// (n_{N-1}-(N-1), ..., n_1-1, n_0).
struct SchurMonomials {
    std::vector<std::vector<int>> exps;
    std::vector<long> mult;
    int nvars = 0;
};

namespace detail {

inline void fill_tableau(std::vector<std::vector<int>>& T, const std::vector<int>& shape, int N,
                         int r, int c, std::vector<int>& weight,
                         std::map<std::vector<int>, long>& acc) {
    if (r == static_cast<int>(shape.size())) {
        ++acc[weight];
        return;
    }
    int nr = r, nc = c + 1;
    if (nc >= shape[r]) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, T[r][c - 1]);       // rows weakly increase
    if (r > 0) lo = std::max(lo, T[r - 1][c] + 1);   // columns strictly increase
    for (int v = lo; v <= N; ++v) {
        T[r][c] = v;
        ++weight[v - 1];
        fill_tableau(T, shape, N, nr, nc, weight, acc);
        --weight[v - 1];
    }
}

}  // namespace detail

inline SchurMonomials schur_monomials(const PowerTuple& n, long cap = 1000000) {
    auto ni = n.as_integers();
    int N = n.size();

    Rational dim = weyl_dimension_exact(n);
    require(dim <= cap, ErrKind::CapExceeded,
            "tableau count " + rational_str(dim) + " exceeds cap");

    // Row lengths (n_{N-1}-(N-1), ..., n_1-1, n_0); weakly decreasing, so any
    // zero rows form a suffix and can be dropped.
    std::vector<int> shape;
    for (int i = 0; i < N; ++i) {
        int len = static_cast<int>(ni[N - 1 - i]) - (N - 1 - i);
        if (len > 0) shape.push_back(len);
    }

    SchurMonomials out;
    out.nvars = N;
    std::map<std::vector<int>, long> acc;
    if (shape.empty()) {
        acc[std::vector<int>(N, 0)] = 1;  // the single empty tableau
    } else {
        std::vector<std::vector<int>> T(shape.size());
        for (size_t i = 0; i < shape.size(); ++i) T[i].assign(shape[i], 0);
        std::vector<int> weight(N, 0);
        detail::fill_tableau(T, shape, N, 0, 0, weight, acc);
    }
    for (auto& [w, m] : acc) {
        out.exps.push_back(w);
        out.mult.push_back(m);
    }
    return out;
}

template <typename T>
T schur_eval(const SchurMonomials& mono, const std::vector<T>& u) {
    require(static_cast<int>(u.size()) == mono.nvars, ErrKind::InvalidInput,
            "variable count mismatch");
    int maxexp = 0;
    for (auto& w : mono.exps)
        for (int a : w) maxexp = std::max(maxexp, a);
    // precomputed power tables
    std::vector<std::vector<T>> pw(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
        pw[i].resize(maxexp + 1);
        pw[i][0] = T(1);
        for (int k = 1; k <= maxexp; ++k) pw[i][k] = pw[i][k - 1] * u[i];
    }
    T total(0);
    for (size_t m = 0; m < mono.exps.size(); ++m) {
        T term(mono.mult[m]);
        for (size_t i = 0; i < u.size(); ++i) term *= pw[i][mono.exps[m][i]];
        total += term;
    }
    return total;
}

inline Rational schur_tableaux(const PowerTuple& n, const std::vector<Rational>& u,
                               long cap = 1000000) {
    return schur_eval(schur_monomials(n, cap), u);
}

inline double schur_tableaux_d(const PowerTuple& n, const std::vector<double>& u,
                               long cap = 1000000) {
    return schur_eval(schur_monomials(n, cap), u);
}

// Bialternant engine, confluent form: repeated coordinates are handled by
// replacing repeated rows with derivative rows (falling-factorial weights), so
// the determinant ratio det(u^{o n}) / V(u) stays exact for every rational u.
inline Rational schur_bialternant_exact(const PowerTuple& n, const std::vector<Rational>& u) {
    auto ni = n.as_integers();
    int N = n.size();
    require(static_cast<int>(u.size()) == N, ErrKind::InvalidInput, "length mismatch");

    // group equal coordinates; derivative order r = position within the group
    std::vector<Rational> sorted_u(u);
    std::sort(sorted_u.begin(), sorted_u.end());
    std::vector<int> order(N, 0);
    for (int i = 1; i < N; ++i) order[i] = sorted_u[i] == sorted_u[i - 1] ? order[i - 1] + 1 : 0;

    auto confluent_det = [&](const std::vector<long>& exps) {
        RationalMatrix m(N, N);
        for (int i = 0; i < N; ++i) {
            int r = order[i];
            for (int k = 0; k < N; ++k) {
                long e = exps[k];
                if (e < r) {
                    m.at(i, k) = 0;
                    continue;
                }
                Rational ff(1);
                for (int s = 0; s < r; ++s) ff *= Rational(e - s);
                m.at(i, k) = ff * rational_pow(sorted_u[i], e - r);
            }
        }
        return det_exact(m);
    };

    std::vector<long> nmin(N);
    for (int k = 0; k < N; ++k) nmin[k] = k;
    Rational den = confluent_det(nmin);
    require(den != 0, ErrKind::NumericalFailure, "confluent Vandermonde vanished");
    return confluent_det(ni) / den;
}

// --- principal specialization -------------------------------------------------------

inline double principal_specialization(const PowerTuple& n, double eps) {
    require(eps > 0 && eps != 1.0 && std::isfinite(eps), ErrKind::InvalidInput,
            "epsilon must be positive and != 1");
    int N = n.size();
    double p = 1.0;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            p *= (std::pow(eps, n.e[j]) - std::pow(eps, n.e[i])) /
                 (std::pow(eps, static_cast<double>(j)) - std::pow(eps, static_cast<double>(i)));
    return p;
}

// --- monomial bounds (leading-term comparison) ----------------------------------------

struct MonomialBounds {
    double lower = 0, upper = 0, value = 0;
};

// u^{n - n_min} for sorted u.
inline double leading_monomial(const std::vector<double>& u, const PowerTuple& n) {
    double p = 1.0;
    for (int j = 0; j < n.size(); ++j) p *= std::pow(u[j], n.e[j] - j);
    return p;
}

inline MonomialBounds monomial_bounds(const std::vector<double>& u, const PowerTuple& n) {
    require(static_cast<int>(u.size()) == n.size(), ErrKind::InvalidInput, "length mismatch");
    for (size_t i = 0; i < u.size(); ++i) {
        require(u[i] > 0, ErrKind::InvalidInput, "base coordinates must be positive");
        if (i > 0) require(u[i] >= u[i - 1], ErrKind::InvalidInput, "base vector must be sorted");
    }
    if (!n.integral)
        require(n.one_separated(), ErrKind::PreconditionViolated,
                "real exponents must be 1-separated");

    MonomialBounds b;
    b.lower = leading_monomial(u, n);
    b.upper = weyl_dimension(n) * b.lower;

    bool distinct = true;
    for (size_t i = 1; i < u.size(); ++i) distinct = distinct && u[i] > u[i - 1];
    if (distinct) {
        b.value = gen_vdm_det(u, n) / vandermonde(u);
    } else if (n.integral) {
        b.value = schur_tableaux_d(n, u);
    } else {
        fail(ErrKind::DegenerateInput, "coincident coordinates with real exponents");
    }
    return b;
}

// --- complete homogeneous symmetric polynomials ----------------------------------------

struct HunterResult {
    double value = 0, hunter_bound = 0;
};

// h_k by the prefix recurrence h_k(u_1..u_m) = h_k(u_1..u_{m-1}) + u_m h_{k-1}(u_1..u_m);
// the bound ||u||^{2r} / (2^r r!) holds for every real u when the degree is even.
inline HunterResult complete_homogeneous(const std::vector<double>& u, int degree) {
    require(degree >= 0 && degree % 2 == 0, ErrKind::InvalidInput,
            "bound only stated for even degree");
    int r = degree / 2;
    std::vector<double> h(degree + 1, 0.0);
    h[0] = 1.0;
    for (double x : u)
        for (int k = 1; k <= degree; ++k) h[k] += x * h[k - 1];

    double norm2 = 0.0;
    for (double x : u) norm2 += x * x;
    double denom = 1.0;
    for (int i = 1; i <= r; ++i) denom *= 2.0 * i;
    return {h[degree], std::pow(norm2, r) / denom};
}

// --- ratios of generalized Vandermonde determinants -------------------------------------

inline double schur_ratio(const std::vector<double>& u, const PowerTuple& m, const PowerTuple& n,
                          double min_gap_rel = 1e-8) {
    require(u.size() == static_cast<size_t>(m.size()) && m.size() == n.size(),
            ErrKind::InvalidInput, "length mismatch");
    double umax = 0.0;
    for (double x : u) {
        require(x > 0, ErrKind::InvalidInput, "coordinates must be positive");
        umax = std::max(umax, x);
    }
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j)
            require(std::fabs(u[i] - u[j]) > min_gap_rel * umax, ErrKind::DegenerateInput,
                    "coordinates too close for a stable determinant ratio");
    return gen_vdm_det(u, m) / gen_vdm_det(u, n);
}

}  // namespace plab
