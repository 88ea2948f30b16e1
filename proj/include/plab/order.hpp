#pragma once

#include "plab/symfun.hpp"

namespace plab {

enum class MajVerdict { WeaklyMajorizes, Majorizes, Neither };

inline const char* maj_name(MajVerdict v) {
    switch (v) {
        case MajVerdict::WeaklyMajorizes: return "WeaklyMajorizes";
        case MajVerdict::Majorizes: return "Majorizes";
        case MajVerdict::Neither: return "Neither";
    }
    return "?";
}

// Prefix-sum comparison on decreasing rearrangements; total-sum equality is
// decided with a 1e-12 absolute tolerance on real input.
inline MajVerdict weak_majorize(const std::vector<double>& m, const std::vector<double>& n,
                                double eq_tol = 1e-12) {
    require(m.size() == n.size() && !m.empty(), ErrKind::InvalidInput,
            "tuples must be non-empty and of equal length");
    std::vector<double> a(m), b(n);
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    double sa = 0.0, sb = 0.0;
    for (size_t k = 0; k < a.size(); ++k) {
        sa += a[k];
        sb += b[k];
        if (sa < sb - eq_tol) return MajVerdict::Neither;
    }
    return std::fabs(sa - sb) <= eq_tol ? MajVerdict::Majorizes : MajVerdict::WeaklyMajorizes;
}

struct CgsResult {
    bool holds = false;
    double lhs = 0, rhs = 0;  // |det u^m| / |V(m)| and |det u^n| / |V(n)|
};

namespace detail {

inline double abs_gvdm(const std::vector<double>& u, const std::vector<double>& powers) {
    int N = static_cast<int>(u.size());
    Mat m(N, N);
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) m.at(j, k) = std::pow(u[j], powers[k]);
    return std::fabs(det_lu(m));
}

inline double abs_vdm(const std::vector<double>& t) { return std::fabs(vandermonde(t)); }

inline void check_distinct(const std::vector<double>& t, const char* what) {
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            require(t[i] != t[j], ErrKind::DegenerateInput,
                    std::string(what) + " has coincident coordinates");
}

}  // namespace detail

// |det u^m| / |V(m)| >= |det u^n| / |V(n)| at a given u in [1, inf)^N.
inline CgsResult cgs_check(const std::vector<double>& m, const std::vector<double>& n,
                           const std::vector<double>& u, double tol = 1e-9) {
    require(m.size() == n.size() && m.size() == u.size() && !m.empty(), ErrKind::InvalidInput,
            "tuples must have equal length");
    for (double x : m) require(x >= 0, ErrKind::InvalidInput, "powers must be non-negative");
    for (double x : n) require(x >= 0, ErrKind::InvalidInput, "powers must be non-negative");
    for (double x : u) require(x >= 1.0, ErrKind::InvalidInput, "u coordinates must be >= 1");
    detail::check_distinct(m, "m");
    detail::check_distinct(n, "n");
    detail::check_distinct(u, "u");

    CgsResult r;
    r.lhs = detail::abs_gvdm(u, m) / detail::abs_vdm(m);
    r.rhs = detail::abs_gvdm(u, n) / detail::abs_vdm(n);
    r.holds = r.lhs >= r.rhs * (1.0 - tol);
    return r;
}

struct CgsSearch {
    bool found = false;
    std::vector<double> witness;
    double lhs = 0, rhs = 0;
};

// Probe schedule for the converse direction: graded growth vectors
// (1, 2, ..., N-j, (N-j+1) t, ..., N t), geometric vectors, then random draws.
// Absence of a witness within the budget is reported as not-found, never as a
// universal "true".
inline CgsSearch cgs_find_violation(const std::vector<double>& m, const std::vector<double>& n,
                                    long budget, std::uint64_t seed) {
    int N = static_cast<int>(m.size());
    CgsSearch out;
    long used = 0;
    auto probe = [&](const std::vector<double>& u) {
        if (out.found || used >= budget) return;
        ++used;
        for (size_t i = 0; i < u.size(); ++i)
            for (size_t j = i + 1; j < u.size(); ++j)
                if (u[i] == u[j]) return;
        CgsResult r = cgs_check(m, n, u, 0.0);
        if (r.lhs < r.rhs * (1.0 - 1e-9)) {
            out.found = true;
            out.witness = u;
            out.lhs = r.lhs;
            out.rhs = r.rhs;
        }
    };

    for (int j = 1; j <= N && !out.found; ++j) {
        for (double t : {2.0, 8.0, 64.0, 1e3, 1e5, 1e8, 1e10, 1e12}) {
            std::vector<double> u(N);
            for (int i = 0; i < N; ++i)
                u[i] = (i < N - j) ? static_cast<double>(i + 1) : static_cast<double>(i + 1) * t;
            probe(u);
        }
    }
    for (double eps : {1.3, 2.0, 4.0, 10.0}) {
        std::vector<double> u(N);
        for (int i = 0; i < N; ++i) u[i] = std::pow(eps, i);
        probe(u);
    }
    Rng rng(seed);
    while (!out.found && used < budget) {
        std::vector<double> u(N);
        for (double& x : u) x = std::exp(rng.uniform(0.0, std::log(1e6)));
        for (double& x : u) x = std::max(1.0 + 1e-6, x);
        probe(u);
    }
    return out;
}

// --- coordinatewise monotone determinant ratios -----------------------------------

// schur_ratio(u + h e_j) >= schur_ratio(u) - 1e-9 |value| for m >= n
// coordinatewise.
inline bool ratio_monotone_check(const PowerTuple& m, const PowerTuple& n,
                                 const std::vector<double>& u, int coord, double step,
                                 double tol = 1e-9) {
    require(m.size() == n.size(), ErrKind::InvalidInput, "tuple length mismatch");
    for (int j = 0; j < m.size(); ++j)
        require(m.e[j] >= n.e[j], ErrKind::PreconditionViolated,
                "m must dominate n coordinatewise");
    require(coord >= 0 && coord < m.size(), ErrKind::InvalidInput, "coordinate out of range");
    require(step > 0, ErrKind::InvalidInput, "step must be positive");

    double before = schur_ratio(u, m, n);
    std::vector<double> v(u);
    v[coord] += step;
    double after = schur_ratio(v, m, n);
    return after >= before - tol * std::fabs(before);
}

// --- tuple lattice operations ------------------------------------------------------

inline std::vector<int> ordering_permutation(const IndexTuple& t) {
    std::vector<int> p(t.size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
    std::stable_sort(p.begin(), p.end(), [&](int a, int b) { return t[a] < t[b]; });
    return p;
}

inline bool same_ordering(const IndexTuple& a, const IndexTuple& b) {
    return a.size() == b.size() && ordering_permutation(a) == ordering_permutation(b);
}

struct MeetJoin {
    IndexTuple meet, join;
};

inline MeetJoin tuple_meet_join(const IndexTuple& a, const IndexTuple& b) {
    require(a.size() == b.size(), ErrKind::InvalidInput, "tuples must have equal length");
    int hi = 0;
    for (int v : a) hi = std::max(hi, v);
    for (int v : b) hi = std::max(hi, v);
    validate_tuple(a, hi);
    validate_tuple(b, hi);
    require(same_ordering(a, b), ErrKind::PreconditionViolated,
            "tuples must share the same ordering");
    MeetJoin mj;
    mj.meet.resize(a.size());
    mj.join.resize(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        mj.meet[i] = std::min(a[i], b[i]);
        mj.join[i] = std::max(a[i], b[i]);
    }
    // meet and join of same-ordering tuples stay valid with that same ordering
    validate_tuple(mj.meet, hi);
    validate_tuple(mj.join, hi);
    require(same_ordering(mj.meet, a) && same_ordering(mj.join, a), ErrKind::NumericalFailure,
            "meet/join lost the common ordering");
    return mj;
}

// --- log-supermodularity of strictly TP minors ---------------------------------------

// det(A_{I^J^}) det(A_{IvJv}) - det(A_{I1,J1}) det(A_{I2,J2}); non-negative for
// strictly totally positive A when the I-pair and J-pair each share an
// ordering.
inline double logsup_check(const Mat& A, const IndexTuple& I1, const IndexTuple& I2,
                           const IndexTuple& J1, const IndexTuple& J2, bool assume_tp = false,
                           int tp_cap = 7) {
    require(same_ordering(I1, I2), ErrKind::PreconditionViolated,
            "row tuples must share an ordering");
    require(same_ordering(J1, J2), ErrKind::PreconditionViolated,
            "column tuples must share an ordering");
    if (!assume_tp)
        require(is_strictly_tp(A, tp_cap), ErrKind::PreconditionViolated,
                "matrix is not strictly totally positive");
    MeetJoin mi = tuple_meet_join(I1, I2);
    MeetJoin mj = tuple_meet_join(J1, J2);
    double lhs = det_lu(minor(A, mi.meet, mj.meet)) * det_lu(minor(A, mi.join, mj.join));
    double rhs = det_lu(minor(A, I1, J1)) * det_lu(minor(A, I2, J2));
    return lhs - rhs;
}

inline Rational logsup_check_exact(const RationalMatrix& A, const IndexTuple& I1,
                                   const IndexTuple& I2, const IndexTuple& J1,
                                   const IndexTuple& J2) {
    require(same_ordering(I1, I2), ErrKind::PreconditionViolated,
            "row tuples must share an ordering");
    require(same_ordering(J1, J2), ErrKind::PreconditionViolated,
            "column tuples must share an ordering");
    MeetJoin mi = tuple_meet_join(I1, I2);
    MeetJoin mj = tuple_meet_join(J1, J2);
    Rational lhs = det_exact(minor(A, mi.meet, mj.meet)) * det_exact(minor(A, mi.join, mj.join));
    Rational rhs = det_exact(minor(A, I1, J1)) * det_exact(minor(A, I2, J2));
    return lhs - rhs;
}

}  // namespace plab
