#pragma once

#include "plab/thresholds.hpp"

#include <complex>

namespace plab {

// --- power sums ------------------------------------------------------------------

struct DomainSpec {
    enum Kind { PositiveBounded, PositiveUnbounded, TwoSided } kind = PositiveBounded;
    double rho = 1.0;

    static DomainSpec bounded(double rho) {
        require(rho > 0 && std::isfinite(rho), ErrKind::InvalidInput, "rho must be positive");
        return {PositiveBounded, rho};
    }
    static DomainSpec unbounded() { return {PositiveUnbounded, std::numeric_limits<double>::infinity()}; }
    static DomainSpec two_sided(double rho) {
        require(rho > 0 && std::isfinite(rho), ErrKind::InvalidInput, "rho must be positive");
        return {TwoSided, rho};
    }

    bool contains(double x) const {
        switch (kind) {
            case PositiveBounded: return x > 0 && x < rho;
            case PositiveUnbounded: return x > 0;
            case TwoSided: return x > -rho && x < rho;
        }
        return false;
    }
    const char* name() const {
        switch (kind) {
            case PositiveBounded: return "positive_bounded";
            case PositiveUnbounded: return "positive_unbounded";
            case TwoSided: return "two_sided";
        }
        return "?";
    }
};

struct PowerSum {
    struct Term {
        double exponent = 0;
        double coeff = 0;
    };
    std::vector<Term> terms;  // strictly increasing exponents, no zero coefficients
    DomainSpec domain;
    bool integral = false;

    static PowerSum of(std::vector<Term> ts, DomainSpec dom) {
        std::sort(ts.begin(), ts.end(),
                  [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
        std::vector<Term> kept;
        for (auto& t : ts) {
            require(std::isfinite(t.exponent) && t.exponent >= 0, ErrKind::InvalidInput,
                    "exponents must be finite and non-negative");
            require(std::isfinite(t.coeff), ErrKind::InvalidInput, "coefficients must be finite");
            if (t.coeff == 0.0) continue;
            if (!kept.empty())
                require(t.exponent > kept.back().exponent, ErrKind::InvalidInput,
                        "repeated exponent");
            kept.push_back(t);
        }
        PowerSum f;
        f.terms = std::move(kept);
        f.domain = dom;
        f.integral = true;
        for (auto& t : f.terms) f.integral = f.integral && is_integer_valued(t.exponent);
        require(dom.kind != DomainSpec::TwoSided || f.integral, ErrKind::InvalidInput,
                "two-sided domains need integral exponents");
        return f;
    }

    double eval(double x) const {
        require(domain.contains(x), ErrKind::DomainError, "argument outside the function domain");
        double s = 0.0;
        for (auto& t : terms) {
            require(x > 0 || is_integer_valued(t.exponent), ErrKind::DomainError,
                    "negative base with non-integral exponent");
            s += t.coeff * std::pow(x, t.exponent);
        }
        return s;
    }

    PowerSum derivative() const {
        std::vector<Term> ts;
        for (auto& t : terms) {
            if (t.exponent == 0.0) continue;  // constant term drops
            require(t.exponent >= 1.0, ErrKind::InvalidInput,
                    "derivative would produce a negative exponent");
            ts.push_back({t.exponent - 1.0, t.coeff * t.exponent});
        }
        return of(std::move(ts), domain);
    }

    std::vector<double> exponents() const {
        std::vector<double> e;
        for (auto& t : terms) e.push_back(t.exponent);
        return e;
    }
};

// Canonical text form: increasing exponents, "c*x^e" pieces joined by signed " + " / " - ".
inline std::string powersum_text(const PowerSum& f) {
    if (f.terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < f.terms.size(); ++i) {
        double c = f.terms[i].coeff, e = f.terms[i].exponent;
        double m = std::fabs(c);
        if (i == 0)
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        std::string var;
        if (e == 0.0)
            var = "";
        else if (e == 1.0)
            var = "x";
        else
            var = "x^" + fmt_shortest(e);
        if (var.empty())
            out += fmt_shortest(m);
        else if (m == 1.0)
            out += var;
        else
            out += fmt_shortest(m) + "*" + var;
    }
    return out;
}

inline PowerSum powersum_parse(const std::string& text, DomainSpec dom) {
    std::vector<PowerSum::Term> terms;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_number = [&]() -> double {
        size_t start = i;
        bool digits = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.' ||
                text[i] == 'e' || text[i] == 'E' ||
                ((text[i] == '+' || text[i] == '-') && (text[i - 1] == 'e' || text[i - 1] == 'E')))) {
            digits = digits || std::isdigit(static_cast<unsigned char>(text[i]));
            ++i;
        }
        require(digits, ErrKind::InvalidInput, "expected a number in power-sum text");
        try {
            return std::stod(text.substr(start, i - start));
        } catch (const std::exception&) {
            fail(ErrKind::InvalidInput, "bad number in power-sum text");
        }
    };

    skip_ws();
    bool first = true;
    while (i < text.size()) {
        double sign = 1.0;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1.0 : 1.0;
            ++i;
            skip_ws();
        } else {
            require(first, ErrKind::InvalidInput, "missing +/- between terms");
        }
        first = false;

        double coeff = 1.0;
        bool saw_coeff = false;
        if (i < text.size() && text[i] != 'x') {
            coeff = parse_number();
            saw_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        double expo = 0.0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            expo = 1.0;
            if (i < text.size() && text[i] == '^') {
                ++i;
                expo = parse_number();
            }
        } else {
            require(saw_coeff, ErrKind::InvalidInput, "empty term in power-sum text");
        }
        terms.push_back({expo, sign * coeff});
        skip_ws();
    }
    require(!terms.empty(), ErrKind::InvalidInput, "empty power-sum text");
    return PowerSum::of(std::move(terms), dom);
}

// --- entrywise application ---------------------------------------------------------

inline SymMatrix entrywise_apply(const PowerSum& f, const SymMatrix& A) {
    SymMatrix B(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = i; j < A.n; ++j) B.set(i, j, f.eval(A.at(i, j)));
    return B;
}

// --- exact Cauchy-Binet determinant --------------------------------------------------

// det f[u u^T] = sum over increasing N-tuples from the support of
// (det u^{o n})^2 prod c_n, exactly.
inline Rational cauchy_binet_det(const PowerSum& f, const std::vector<Rational>& u) {
    require(f.integral, ErrKind::InvalidInput, "exact route needs integral exponents");
    int N = static_cast<int>(u.size());
    int S = static_cast<int>(f.terms.size());
    require(S >= N, ErrKind::InvalidInput, "support smaller than the dimension");

    std::vector<long> exps;
    std::vector<Rational> coeffs;
    for (auto& t : f.terms) {
        exps.push_back(static_cast<long>(std::llround(t.exponent)));
        coeffs.push_back(rational_of(t.coeff));
    }

    Rational total(0);
    std::vector<int> pick(N);
    for (int i = 0; i < N; ++i) pick[i] = i;
    while (true) {
        std::vector<long> tuple(N);
        Rational cprod(1);
        for (int i = 0; i < N; ++i) {
            tuple[i] = exps[pick[i]];
            cprod *= coeffs[pick[i]];
        }
        Rational d = gen_vdm_det_exact(u, tuple);
        total += d * d * cprod;

        int i = N - 1;
        while (i >= 0 && pick[i] == S - (N - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < N; ++j) pick[j] = pick[j - 1] + 1;
    }
    return total;
}

inline RationalMatrix entrywise_apply_exact(const PowerSum& f, const std::vector<Rational>& u) {
    require(f.integral, ErrKind::InvalidInput, "exact route needs integral exponents");
    int N = static_cast<int>(u.size());
    RationalMatrix A(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Rational x = u[i] * u[j];
            Rational s(0);
            for (auto& t : f.terms)
                s += rational_of(t.coeff) *
                     rational_pow(x, static_cast<long>(std::llround(t.exponent)));
            A.at(i, j) = s;
        }
    return A;
}

// --- Horn-type sign check -------------------------------------------------------------

struct HornResult {
    bool ok = true;
    std::optional<double> first_violation;  // exponent of the first failing negative term
};

// Every negative-coefficient exponent needs >= N positive-coefficient exponents
// below it; on unbounded domains, also >= N above it.
inline HornResult horn_sign_check(const PowerSum& f, int N) {
    bool unbounded = f.domain.kind == DomainSpec::PositiveUnbounded;
    HornResult r;
    for (size_t i = 0; i < f.terms.size(); ++i) {
        if (f.terms[i].coeff >= 0) continue;
        int before = 0, after = 0;
        for (size_t j = 0; j < i; ++j)
            if (f.terms[j].coeff > 0) ++before;
        for (size_t j = i + 1; j < f.terms.size(); ++j)
            if (f.terms[j].coeff > 0) ++after;
        if (before < N || (unbounded && after < N)) {
            r.ok = false;
            r.first_violation = f.terms[i].exponent;
            return r;
        }
    }
    return r;
}

// --- canonical rank-one test families --------------------------------------------------
//
// The two families below are the standard falsifier probes: vectors crowding
// the corner sqrt(rho) * (1,...,1) with distinct coordinates, and the geometric
// vectors (1, eps, ..., eps^{N-1}).  They are search families only; passing on
// them proves nothing universally.

inline std::vector<double> corner_vector(int N, double rho, double eps) {
    require(N >= 1 && rho > 0 && eps > 0 && (N - 1) * eps < 0.9, ErrKind::InvalidInput,
            "bad corner-vector parameters");
    double s = std::sqrt(rho) * (1.0 - 1e-9);
    std::vector<double> u(N);
    for (int j = 0; j < N; ++j) u[j] = s * (1.0 - (N - 1 - j) * eps);
    return u;
}

inline std::vector<double> geometric_vector(int N, double eps, double scale = 1.0) {
    require(N >= 1 && eps > 0 && eps != 1.0, ErrKind::InvalidInput,
            "bad geometric-vector parameters");
    std::vector<double> u(N);
    for (int j = 0; j < N; ++j) u[j] = scale * std::pow(eps, j);
    return u;
}

// --- certification by sampling -----------------------------------------------------------

enum class Verdict { Certified, Falsified, Inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "Certified";
        case Verdict::Falsified: return "Falsified";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct CertifyConfig {
    long samples = 10000;
    std::vector<int> ranks;  // empty means 1..N
    double tol = 1e-9;
    std::uint64_t seed = 0;
};

struct CertWitness {
    SymMatrix matrix;
    double min_eigenvalue = 0.0;
    std::optional<Rational> exact_det;  // present when the exact rational route confirmed
};

struct CertReport {
    Verdict verdict = Verdict::Inconclusive;
    long samples = 0;
    double worst_min_eigenvalue = std::numeric_limits<double>::infinity();
    std::optional<CertWitness> witness;
};

namespace detail {

inline bool exact_rank1_refutes(const PowerSum& f, const std::vector<double>& u,
                                Rational* det_out) {
    if (!f.integral) return false;
    std::vector<Rational> ur;
    for (double x : u) ur.push_back(rational_of(x));
    RationalMatrix A = entrywise_apply_exact(f, ur);
    // any negative leading principal minor certifies a negative eigenvalue
    for (int k = 1; k <= A.rows; ++k) {
        IndexTuple idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i + 1;
        Rational d = det_exact(minor(A, idx, idx));
        if (d < 0) {
            if (det_out) *det_out = d;
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Empirical falsifier: Horn-type screening, PSD sampling across ranks, then a
// targeted rank-one search (corner + geometric families) with an exact-rational
// confirmation when the exponents are integral.  A Certified verdict means "not
// falsified within this budget"; sampling cannot prove preservation.
inline CertReport certify_preserver(const PowerSum& f, int N, double rho,
                                    const CertifyConfig& cfg_in) {
    require(N >= 1, ErrKind::InvalidInput, "dimension must be positive");
    require(rho > 0 && std::isfinite(rho), ErrKind::InvalidInput, "rho must be positive");
    CertifyConfig cfg = cfg_in;
    require(cfg.samples >= 0, ErrKind::InvalidInput, "negative sample budget");
    require(cfg.tol >= 0, ErrKind::InvalidInput, "negative tolerance");
    if (cfg.ranks.empty())
        for (int r = 1; r <= N; ++r) cfg.ranks.push_back(r);
    bool full_rank_requested = false;
    for (int r : cfg.ranks) {
        require(r >= 1 && r <= N, ErrKind::InvalidInput, "rank outside [1, N]");
        if (r > 1) full_rank_requested = true;
    }
    if (full_rank_requested)
        for (auto& t : f.terms)
            require(exponent_feasible(t.exponent, N), ErrKind::InvalidInput,
                    "exponent infeasible for ranks above one");

    const bool two_sided = f.domain.kind == DomainSpec::TwoSided;
    const bool unbounded = f.domain.kind == DomainSpec::PositiveUnbounded;

    CertReport rep;
    auto consider = [&](const SymMatrix& A) -> bool {
        SymMatrix FA = entrywise_apply(f, A);
        PsdResult p = is_psd(FA, cfg.tol);
        rep.worst_min_eigenvalue = std::min(rep.worst_min_eigenvalue, p.min_eig);
        if (!p.psd) {
            rep.verdict = Verdict::Falsified;
            if (!rep.witness || p.min_eig < rep.witness->min_eigenvalue)
                rep.witness = CertWitness{A, p.min_eig, std::nullopt};
            return true;
        }
        return false;
    };
    auto rank_one = [&](const std::vector<double>& u) {
        SymMatrix A(N);
        for (int i = 0; i < N; ++i)
            for (int j = i; j < N; ++j) A.set(i, j, u[i] * u[j]);
        return A;
    };

    // Horn-type screening first; a failure is hunted down with the geometric family.
    HornResult horn = horn_sign_check(f, N);
    if (!horn.ok) {
        // scales above sqrt(rho) only make sense on the unbounded domain,
        // where violations can sit at arbitrarily large entries
        std::vector<double> scales;
        if (unbounded)
            scales = {1e-3, 1e-2, 0.1, 0.5, 1.0, 3.0, 10.0, 100.0, 1e3};
        else
            for (double shrink : {1.0, 0.5, 0.1, 1e-2, 1e-3})
                scales.push_back(std::sqrt(rho) * 0.999 * shrink);
        for (double eps : {0.9, 0.8, 0.6, 0.4, 0.25, 0.1, 0.05, 0.02}) {
            for (double scale : scales) {
                std::vector<double> u = geometric_vector(N, eps, scale);
                bool ok_domain = true;
                for (double x : u) ok_domain = ok_domain && f.domain.contains(x * x);
                if (!ok_domain) continue;
                SymMatrix A = rank_one(u);
                if (consider(A)) return rep;
                Rational dd;
                if (detail::exact_rank1_refutes(f, u, &dd)) {
                    rep.verdict = Verdict::Falsified;
                    SymMatrix FA = entrywise_apply(f, A);
                    rep.witness = CertWitness{A, is_psd(FA, cfg.tol).min_eig, dd};
                    return rep;
                }
            }
        }
        rep.verdict = Verdict::Inconclusive;  // the screen failed but no witness surfaced
        return rep;
    }

    // PSD sampling across the requested ranks.
    for (long i = 0; i < cfg.samples; ++i) {
        int rank = cfg.ranks[static_cast<size_t>(i) % cfg.ranks.size()];
        std::uint64_t si = derive_seed(cfg.seed, static_cast<std::uint64_t>(i));
        double radius = rho;
        if (unbounded) {
            static const double ladder[7] = {1e-3, 1e-2, 0.1, 1.0, 10.0, 100.0, 1000.0};
            radius = rho * ladder[i % 7];
        }
        SymMatrix A = two_sided ? sample_psd_signed(N, radius, rank, si)
                                : sample_psd(N, radius, rank, si);
        ++rep.samples;
        if (consider(A)) return rep;
    }

    // Targeted rank-one search toward sqrt(rho) * (1,...,1).
    for (double eps : {0.3, 0.1, 0.03, 0.01, 3e-3, 1e-3, 3e-4, 1e-4, 1e-5, 1e-6}) {
        if ((N - 1) * eps >= 0.9) continue;
        std::vector<double> u = corner_vector(N, rho, eps);
        SymMatrix A = rank_one(u);
        if (consider(A)) return rep;
        Rational dd;
        if (detail::exact_rank1_refutes(f, u, &dd)) {
            rep.verdict = Verdict::Falsified;
            SymMatrix FA = entrywise_apply(f, A);
            rep.witness = CertWitness{A, is_psd(FA, cfg.tol).min_eig, dd};
            return rep;
        }
    }

    rep.verdict = Verdict::Certified;
    return rep;
}

// --- sign-pattern series construction ---------------------------------------------------

struct SignPattern {
    PowerTuple base;                        // the N guaranteed-positive exponents
    std::vector<std::pair<long, int>> tail;  // (M, sign in {-1,0,+1}), increasing, M > n_{N-1}

    static SignPattern of(PowerTuple base, std::vector<std::pair<long, int>> tail) {
        require(base.integral, ErrKind::InvalidInput, "series construction needs integral base");
        long prev = static_cast<long>(std::llround(base.back()));
        for (auto& [M, s] : tail) {
            require(M > prev, ErrKind::InvalidInput, "tail exponents must be increasing and above the base");
            require(s >= -1 && s <= 1, ErrKind::InvalidInput, "signs must be in {-1,0,+1}");
            prev = M;
        }
        return SignPattern{std::move(base), std::move(tail)};
    }
};

namespace detail {

inline double inv_factorial(long m) {
    double v = 1.0;
    for (long i = 2; i <= m; ++i) v /= static_cast<double>(i);
    return v;
}

// Rank-one threshold for t * sum_{n in S} c_n x^n - x^M on (0, inf), valid when
// S has at least N exponents on each side of M:
//   t >= (2N / c_min) * sum over (N-1)-subsets C of S of V(C u {M})^2 / V(n_min)^2.
inline double unbounded_rank1_K(const std::vector<double>& S, const std::vector<double>& cs,
                                double M, int N) {
    double cmin = std::numeric_limits<double>::infinity();
    for (double c : cs) cmin = std::min(cmin, c);
    int m = static_cast<int>(S.size());
    double lognmin = N >= 2 ? log_vandermonde(PowerTuple::nmin(N).e) : 0.0;
    double total = 0.0;
    std::vector<int> pick(N - 1);
    if (N == 1) return 2.0 / cmin;
    for (int i = 0; i < N - 1; ++i) pick[i] = i;
    while (true) {
        std::vector<double> tup;
        for (int i = 0; i < N - 1; ++i) tup.push_back(S[pick[i]]);
        tup.push_back(M);
        std::sort(tup.begin(), tup.end());
        total += std::exp(2.0 * (log_vandermonde(tup) - lognmin));
        int i = N - 2;
        while (i >= 0 && pick[i] == m - (N - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < N - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
    return 2.0 * N * total / cmin;
}

// Full-rank threshold by the derivative chain: K(N) >= max(rank-one bound,
// M * K(N-1) for the differentiated data).
inline double unbounded_K(std::vector<double> S, std::vector<double> cs, double M, int N) {
    double best = unbounded_rank1_K(S, cs, M, N);
    if (N <= 1) return best;
    std::vector<double> S2, cs2;
    for (size_t i = 0; i < S.size(); ++i) {
        if (S[i] < 1.0) continue;  // the x^0 term differentiates away
        S2.push_back(S[i] - 1.0);
        cs2.push_back(cs[i] * S[i]);
    }
    return std::max(best, M * unbounded_K(S2, cs2, M - 1.0, N - 1));
}

}  // namespace detail

// Assemble a truncated series whose tail coefficient at M carries the sign
// eps_M.  Bounded route: c_M = 2^{n_{N-1}-M} eps_M delta_M with
// delta_M = min(1/M!, 1/K_M).  Unbounded route additionally needs, for every
// eps_M = -1, at least N later +1 entries inside the truncation window.
inline PowerSum construct_sign_series(const SignPattern& pattern, const CoefficientTuple& c,
                                      std::optional<double> rho, long M_max) {
    const PowerTuple& n = pattern.base;
    int N = n.size();
    require(static_cast<int>(c.values.size()) == N, ErrKind::InvalidInput,
            "coefficient count must match the base");
    require(M_max <= 170, ErrKind::InvalidInput, "truncation beyond 170 underflows 1/M!");
    for (auto& [M, s] : pattern.tail)
        require(M <= M_max, ErrKind::InvalidInput, "tail exponent beyond the truncation");

    long ntop = static_cast<long>(std::llround(n.back()));
    std::map<double, double> coeff;  // exponent -> coefficient

    if (rho.has_value()) {
        double lambda = 0.0;  // sum of the 2^{n_top - M} weights actually used
        for (auto& [M, s] : pattern.tail) {
            double w = std::pow(2.0, static_cast<double>(ntop - M));
            lambda += w;
            if (s == 0) continue;
            double delta;
            if (s > 0) {
                delta = detail::inv_factorial(M);
            } else {
                double K =
                    qualitative_K(n, c, static_cast<double>(M), *rho, KVariant::Integer).value;
                delta = std::min(detail::inv_factorial(M), 1.0 / K);
            }
            coeff[static_cast<double>(M)] += w * s * delta;
        }
        for (int j = 0; j < N; ++j) coeff[n.e[j]] += lambda * c.values[j];

        std::vector<PowerSum::Term> ts;
        for (auto& [e, v] : coeff) ts.push_back({e, v});
        return PowerSum::of(std::move(ts), DomainSpec::bounded(*rho));
    }

    // unbounded domain
    for (size_t i = 0; i < pattern.tail.size(); ++i) {
        if (pattern.tail[i].second != -1) continue;
        int later = 0;
        for (size_t j = i + 1; j < pattern.tail.size(); ++j)
            if (pattern.tail[j].second == +1) ++later;
        require(later >= N, ErrKind::PatternInfeasible,
                "a negative sign needs at least N later positive signs within the truncation");
    }

    for (auto& [M, s] : pattern.tail) {
        double w = std::pow(2.0, static_cast<double>(ntop - M));
        for (int j = 0; j < N; ++j) coeff[n.e[j]] += w * c.values[j];
        if (s == +1) {
            coeff[static_cast<double>(M)] += w * detail::inv_factorial(M);
        } else if (s == -1) {
            std::vector<double> S(n.e), cs(c.values);
            std::vector<double> laters;
            for (auto& [Mp, sp] : pattern.tail)
                if (Mp > M && sp == +1) {
                    S.push_back(static_cast<double>(Mp));
                    cs.push_back(detail::inv_factorial(Mp));
                    laters.push_back(static_cast<double>(Mp));
                    coeff[static_cast<double>(Mp)] += w * detail::inv_factorial(Mp);
                    if (static_cast<int>(laters.size()) == N) break;
                }
            double K = detail::unbounded_K(S, cs, static_cast<double>(M), N);
            double delta = std::min(detail::inv_factorial(M), 1.0 / K);
            coeff[static_cast<double>(M)] -= w * delta;
        }
    }

    std::vector<PowerSum::Term> ts;
    for (auto& [e, v] : coeff) ts.push_back({e, v});
    return PowerSum::of(std::move(ts), DomainSpec::unbounded());
}

// --- complex and two-sided counterexamples ------------------------------------------------

struct ComplexWitness {
    std::complex<double> z0;
    long M = 0;
    std::vector<std::complex<double>> u;
};

namespace detail {

// Durand-Kerner simultaneous iteration with random-perturbation restarts.
inline std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs,
                                                          std::uint64_t seed) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    require(deg >= 1, ErrKind::InvalidInput, "constant polynomial has no roots");
    double lead = coeffs[deg];
    require(lead != 0.0, ErrKind::InvalidInput, "leading coefficient vanishes");

    auto eval = [&](std::complex<double> z) {
        std::complex<double> v = 0.0;
        for (int k = deg; k >= 0; --k) v = v * z + coeffs[k];
        return v;
    };

    Rng rng(seed);
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<std::complex<double>> z(deg);
        double radius = 0.5 + 0.5 * attempt;
        for (int k = 0; k < deg; ++k) {
            double ang = 2.0 * 3.14159265358979323846 * (k + 0.27 + 0.1 * rng.uniform()) / deg;
            z[k] = std::polar(radius, ang);
        }
        bool converged = false;
        for (long it = 0; it < 10000; ++it) {
            double worst = 0.0;
            for (int k = 0; k < deg; ++k) {
                std::complex<double> num = eval(z[k]) / lead;
                std::complex<double> den = 1.0;
                for (int j = 0; j < deg; ++j)
                    if (j != k) den *= z[k] - z[j];
                if (std::abs(den) == 0.0) {
                    den = 1e-12;
                }
                std::complex<double> delta = num / den;
                z[k] -= delta;
                worst = std::max(worst, std::abs(delta) / std::max(1e-30, std::abs(z[k])));
            }
            if (worst < 1e-12) {
                converged = true;
                break;
            }
        }
        if (converged) return z;
    }
    fail(ErrKind::NumericalFailure, "root finder did not converge");
}

}  // namespace detail

// For n not a shift of (0,...,N-1): a root z0 of s_n(1,...,N-1,z) off the
// non-negative real axis, a power M in (n_{N-1}, n_{N-1}+N] with u^{oM} outside
// span{u^{o n_j}}, and the scaled witness vector.
inline std::optional<ComplexWitness> complex_counterexample(const PowerTuple& n, double rho,
                                                            std::uint64_t seed = 12345) {
    require(n.integral, ErrKind::InvalidInput, "complex counterexample needs integral exponents");
    int N = n.size();
    require(N >= 2, ErrKind::InvalidInput, "need dimension at least 2");
    require(rho > 0 && std::isfinite(rho), ErrKind::InvalidInput, "rho must be positive");

    auto ni = n.as_integers();
    bool shift = true;
    for (int j = 0; j < N; ++j) shift = shift && (ni[j] - ni[0] == j);
    if (shift) return std::nullopt;

    // q(z) = s_n(1, 2, ..., N-1, z) via the tableau monomial list
    SchurMonomials mono = schur_monomials(n);
    long maxz = ni[N - 1] - (N - 1);
    std::vector<double> q(static_cast<size_t>(maxz) + 1, 0.0);
    for (size_t m = 0; m < mono.exps.size(); ++m) {
        double w = static_cast<double>(mono.mult[m]);
        for (int i = 0; i < N - 1; ++i)
            w *= std::pow(static_cast<double>(i + 1), mono.exps[m][i]);
        q[mono.exps[m][N - 1]] += w;
    }
    int lo = 0;
    while (q[lo] == 0.0) ++lo;
    int hi = static_cast<int>(q.size()) - 1;
    while (q[hi] == 0.0) --hi;
    require(hi > lo, ErrKind::NumericalFailure,
            "specialized Schur polynomial is a monomial");  // excluded by the shift check
    std::vector<double> reduced(q.begin() + lo, q.begin() + hi + 1);

    auto roots = detail::polynomial_roots(reduced, seed);
    std::complex<double> z0;
    double best = -1.0;
    for (auto z : roots) {
        double dist = z.real() >= 0 ? std::fabs(z.imag()) : std::abs(z);
        if (dist > best) {
            best = dist;
            z0 = z;
        }
    }
    require(best > 1e-8 * (1.0 + std::abs(z0)), ErrKind::NumericalFailure,
            "no root found off the non-negative axis");
    if (std::fabs(z0.imag()) < 1e-14 * std::max(1.0, std::fabs(z0.real())))
        z0 = std::complex<double>(z0.real(), 0.0);  // snap a real root

    double maxmod = std::max(static_cast<double>(N - 1), std::abs(z0));
    double s = 0.9 * std::sqrt(rho) / maxmod;
    std::vector<std::complex<double>> u(N);
    for (int j = 0; j < N - 1; ++j) u[j] = s * static_cast<double>(j + 1);
    u[N - 1] = s * z0;

    for (long M = ni[N - 1] + 1; M <= ni[N - 1] + N; ++M) {
        for (int j = 0; j < N; ++j) {
            std::vector<long> tup;
            for (int k = 0; k < N; ++k)
                if (k != j) tup.push_back(ni[k]);
            tup.push_back(M);
            std::vector<std::complex<double>> mat(static_cast<size_t>(N) * N);
            double hadamard = 1.0;
            for (int r = 0; r < N; ++r) {
                double rn = 0.0;
                for (int k = 0; k < N; ++k) {
                    std::complex<double> v = std::pow(u[r], static_cast<double>(tup[k]));
                    mat[static_cast<size_t>(r) * N + k] = v;
                    rn += std::norm(v);
                }
                hadamard *= std::sqrt(rn);
            }
            std::complex<double> d = detail::complex_det(mat, N);
            if (std::abs(d) > 1e-10 * hadamard) {
                ComplexWitness w;
                w.z0 = z0;
                w.M = M;
                w.u = u;
                return w;
            }
        }
    }
    fail(ErrKind::NumericalFailure, "no rigid power found in the window");
}

// u^T p_{k,t}[A] u at u = (1,-1)^T, A = (rho/2) u u^T, with
// p_{k,t}(x) = t (1 + x^2 + ... + x^{2k}) - x^{2k+1}; equals -4 (rho/2)^{2k+1}.
inline double two_sided_witness(int k, double t, double rho) {
    require(k >= 1, ErrKind::InvalidInput, "k must be at least 1");
    require(t > 0 && rho > 0, ErrKind::InvalidInput, "t and rho must be positive");
    auto p = [&](double x) {
        double s = 0.0;
        for (int i = 0; i <= k; ++i) s += std::pow(x, 2.0 * i);
        return t * s - std::pow(x, 2.0 * k + 1.0);
    };
    double a = rho / 2.0;
    return 2.0 * p(a) - 2.0 * p(-a);
}

}  // namespace plab
