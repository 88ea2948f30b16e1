#pragma once

#include "plab/common.hpp"

#include <algorithm>
#include <complex>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

namespace plab {

// --- dense value types -------------------------------------------------------

struct Mat {
    int rows = 0, cols = 0;
    std::vector<double> e;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c, 0.0) {}

    double& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    double at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
};

struct SymMatrix {
    int n = 0;
    std::vector<double> e;  // row-major, kept exactly symmetric
    std::optional<std::pair<double, double>> domain_tag;

    SymMatrix() = default;
    explicit SymMatrix(int dim) : n(dim), e(static_cast<size_t>(dim) * dim, 0.0) {
        require(dim > 0, ErrKind::InvalidInput, "matrix dimension must be positive");
    }

    double at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }
    void set(int i, int j, double v) {
        e[static_cast<size_t>(i) * n + j] = v;
        e[static_cast<size_t>(j) * n + i] = v;
    }

    double trace() const {
        double t = 0;
        for (int i = 0; i < n; ++i) t += at(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0;
        for (double v : e) m = std::max(m, std::fabs(v));
        return m;
    }

    bool all_finite() const {
        for (double v : e)
            if (!std::isfinite(v)) return false;
        return true;
    }

    Mat as_mat() const {
        Mat m(n, n);
        m.e = e;
        return m;
    }

    void check_domain() const {
        if (!domain_tag) return;
        for (double v : e)
            require(v > domain_tag->first && v < domain_tag->second, ErrKind::InvalidInput,
                    "entry outside declared open interval");
    }
};

struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> e;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}

    Rational& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
};

// Index tuples are 1-based, pairwise distinct, possibly unsorted.
using IndexTuple = std::vector<int>;

struct HankelMoments {
    std::vector<double> moments;  // s_0 .. s_{2N-2}
    int dim = 0;

    static HankelMoments of(std::vector<double> s) {
        HankelMoments h;
        require(!s.empty() && s.size() % 2 == 1, ErrKind::InvalidInput,
                "moment sequence must have odd length 2N-1");
        h.dim = static_cast<int>((s.size() + 1) / 2);
        h.moments = std::move(s);
        return h;
    }
};

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    double residual = 0.0;
};

// --- eigenvalues: cyclic Jacobi ----------------------------------------------

struct EigenSystem {
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // column k = eigenvector of values[k], row-major n*n
    int n = 0;
};

// Cyclic Jacobi rotations; converges when the off-diagonal Frobenius norm
// drops below 1e-14 * scale.  Intended for the small dense matrices that
// appear throughout (N up to a few dozen).
inline EigenSystem jacobi_eigen(const SymMatrix& A) {
    require(A.all_finite(), ErrKind::InvalidInput, "matrix has non-finite entries");
    int n = A.n;
    std::vector<double> a = A.e;
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

    auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };

    double scale = 0.0;
    for (double x : a) scale += x * x;
    scale = std::sqrt(scale);
    if (scale == 0.0) scale = 1.0;
    const double tol = 1e-14 * scale;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * a[idx(i, j)] * a[idx(i, j)];
        if (std::sqrt(off) < tol) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[idx(p, q)];
                if (std::fabs(apq) <= 1e-300) continue;
                double app = a[idx(p, p)], aqq = a[idx(q, q)];
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (int k = 0; k < n; ++k) {
                    double akp = a[idx(k, p)], akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[idx(p, k)], aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
                a[idx(p, q)] = a[idx(q, p)] = 0.0;
                for (int k = 0; k < n; ++k) {
                    double vkp = v[idx(k, p)], vkq = v[idx(k, q)];
                    v[idx(k, p)] = c * vkp - s * vkq;
                    v[idx(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a[idx(x, x)] < a[idx(y, y)]; });

    EigenSystem out;
    out.n = n;
    out.values.resize(n);
    out.vectors.assign(static_cast<size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k) {
        out.values[k] = a[idx(order[k], order[k])];
        for (int i = 0; i < n; ++i) out.vectors[idx(i, k)] = v[idx(i, order[k])];
    }
    return out;
}

inline Spectrum sym_eigen(const SymMatrix& A) {
    EigenSystem es = jacobi_eigen(A);
    Spectrum sp;
    sp.eigenvalues = es.values;
    double res = 0.0;
    int n = A.n;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            double av = 0.0;
            for (int j = 0; j < n; ++j) av += A.at(i, j) * es.vectors[static_cast<size_t>(j) * n + k];
            res = std::max(res, std::fabs(av - es.values[k] * es.vectors[static_cast<size_t>(i) * n + k]));
        }
    }
    sp.residual = res;
    return sp;
}

struct PsdResult {
    bool psd = false;
    double min_eig = 0.0;
    double max_eig = 0.0;
};

// PSD test relative to lambda_max with floor 1.
inline PsdResult is_psd(const SymMatrix& A, double tol = 1e-9) {
    require(tol >= 0, ErrKind::InvalidInput, "tolerance must be non-negative");
    Spectrum sp = sym_eigen(A);
    PsdResult r;
    r.min_eig = sp.eigenvalues.front();
    r.max_eig = sp.eigenvalues.back();
    r.psd = r.min_eig >= -tol * std::max(1.0, r.max_eig);
    return r;
}

// --- determinants ------------------------------------------------------------

struct DetResult {
    double value = 0.0;
    double pivot_ratio = 1.0;  // |largest pivot| / |smallest pivot|

    bool ill_conditioned() const { return pivot_ratio > 1e12; }
};

inline DetResult det_lu_full(Mat m) {
    require(m.rows == m.cols, ErrKind::InvalidInput, "determinant of a non-square matrix");
    int n = m.rows;
    for (double x : m.e)
        require(std::isfinite(x), ErrKind::InvalidInput, "matrix has non-finite entries");
    double det = 1.0;
    double pmax = 0.0, pmin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(m.at(i, k)) > std::fabs(m.at(piv, k))) piv = i;
        if (m.at(piv, k) == 0.0) return {0.0, std::numeric_limits<double>::infinity()};
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            det = -det;
        }
        double p = m.at(k, k);
        pmax = std::max(pmax, std::fabs(p));
        pmin = std::min(pmin, std::fabs(p));
        det *= p;
        for (int i = k + 1; i < n; ++i) {
            double f = m.at(i, k) / p;
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return {det, n > 0 ? pmax / pmin : 1.0};
}

inline double det_lu(const Mat& m) { return det_lu_full(m).value; }

// Fraction-free (Bareiss) elimination; exact over the rationals.
inline Rational det_exact(RationalMatrix m) {
    require(m.rows == m.cols, ErrKind::InvalidInput, "determinant of a non-square matrix");
    int n = m.rows;
    if (n == 0) return Rational(1);
    int sign = 1;
    Rational prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return Rational(0);
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace detail {

inline std::complex<double> complex_det(std::vector<std::complex<double>> a, int n) {
    std::complex<double> det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a[static_cast<size_t>(i) * n + k]) >
                std::abs(a[static_cast<size_t>(piv) * n + k]))
                piv = i;
        if (std::abs(a[static_cast<size_t>(piv) * n + k]) == 0.0) return 0.0;
        if (piv != k) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<size_t>(piv) * n + j], a[static_cast<size_t>(k) * n + j]);
            det = -det;
        }
        std::complex<double> p = a[static_cast<size_t>(k) * n + k];
        det *= p;
        for (int i = k + 1; i < n; ++i) {
            std::complex<double> f = a[static_cast<size_t>(i) * n + k] / p;
            for (int j = k; j < n; ++j)
                a[static_cast<size_t>(i) * n + j] -= f * a[static_cast<size_t>(k) * n + j];
        }
    }
    return det;
}

}  // namespace detail

// --- minors, tuple signs, total positivity -----------------------------------

inline void validate_tuple(const IndexTuple& t, int n) {
    require(!t.empty(), ErrKind::InvalidInput, "index tuple must be non-empty");
    for (size_t a = 0; a < t.size(); ++a) {
        require(t[a] >= 1 && t[a] <= n, ErrKind::InvalidInput, "index out of range");
        for (size_t b = a + 1; b < t.size(); ++b)
            require(t[a] != t[b], ErrKind::InvalidInput, "repeated index in tuple");
    }
}

inline int tuple_sign(const IndexTuple& t) {
    int inv = 0;
    for (size_t a = 0; a < t.size(); ++a)
        for (size_t b = a + 1; b < t.size(); ++b)
            if (t[b] < t[a]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

inline Mat minor(const Mat& A, const IndexTuple& I, const IndexTuple& J) {
    require(I.size() == J.size(), ErrKind::InvalidInput, "row/column tuples differ in length");
    validate_tuple(I, A.rows);
    validate_tuple(J, A.cols);
    Mat m(static_cast<int>(I.size()), static_cast<int>(J.size()));
    for (size_t i = 0; i < I.size(); ++i)
        for (size_t j = 0; j < J.size(); ++j) m.at((int)i, (int)j) = A.at(I[i] - 1, J[j] - 1);
    return m;
}

inline RationalMatrix minor(const RationalMatrix& A, const IndexTuple& I, const IndexTuple& J) {
    require(I.size() == J.size(), ErrKind::InvalidInput, "row/column tuples differ in length");
    validate_tuple(I, A.rows);
    validate_tuple(J, A.cols);
    RationalMatrix m(static_cast<int>(I.size()), static_cast<int>(J.size()));
    for (size_t i = 0; i < I.size(); ++i)
        for (size_t j = 0; j < J.size(); ++j) m.at((int)i, (int)j) = A.at(I[i] - 1, J[j] - 1);
    return m;
}

namespace detail {
// Visit all strictly increasing k-tuples from {1..n}.
template <typename F>
void for_each_increasing(int n, int k, F&& f) {
    IndexTuple t(k);
    for (int i = 0; i < k; ++i) t[i] = i + 1;
    while (true) {
        f(t);
        int i = k - 1;
        while (i >= 0 && t[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
    }
}
}  // namespace detail

// Exhaustive strict-total-positivity test; minor count grows combinatorially,
// so the dimension is capped.
inline bool is_strictly_tp(const Mat& A, int cap = 7) {
    require(A.rows == A.cols, ErrKind::InvalidInput, "strict TP test needs a square matrix");
    require(A.rows <= cap, ErrKind::CapExceeded, "dimension above strict-TP enumeration cap");
    int n = A.rows;
    for (int k = 1; k <= n; ++k) {
        bool ok = true;
        detail::for_each_increasing(n, k, [&](const IndexTuple& I) {
            if (!ok) return;
            detail::for_each_increasing(n, k, [&](const IndexTuple& J) {
                if (!ok) return;
                if (det_lu(minor(A, I, J)) <= 0.0) ok = false;
            });
        });
        if (!ok) return false;
    }
    return true;
}

inline bool is_strictly_tp(const RationalMatrix& A, int cap = 7) {
    require(A.rows == A.cols, ErrKind::InvalidInput, "strict TP test needs a square matrix");
    require(A.rows <= cap, ErrKind::CapExceeded, "dimension above strict-TP enumeration cap");
    int n = A.rows;
    for (int k = 1; k <= n; ++k) {
        bool ok = true;
        detail::for_each_increasing(n, k, [&](const IndexTuple& I) {
            if (!ok) return;
            detail::for_each_increasing(n, k, [&](const IndexTuple& J) {
                if (!ok) return;
                if (det_exact(minor(A, I, J)) <= 0) ok = false;
            });
        });
        if (!ok) return false;
    }
    return true;
}

// --- Hankel matrices ---------------------------------------------------------

inline SymMatrix hankel_build(const HankelMoments& m) {
    int n = m.dim;
    require(static_cast<int>(m.moments.size()) == 2 * n - 1, ErrKind::InvalidInput,
            "moment sequence length must be 2N-1");
    SymMatrix A(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A.e[static_cast<size_t>(i) * n + j] = m.moments[i + j];
    return A;
}

// A^(1): first column and last row removed.  For a Hankel matrix this is the
// Hankel matrix of the shifted moments, hence again symmetric.
inline SymMatrix hankel_truncate(const SymMatrix& A) {
    require(A.n >= 2, ErrKind::InvalidInput, "truncation needs dimension >= 2");
    int m = A.n - 1;
    SymMatrix B(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) B.e[static_cast<size_t>(i) * m + j] = A.at(i, j + 1);
    return B;
}

inline SymMatrix pad_zero_row_col(const SymMatrix& A) {
    SymMatrix B(A.n + 1);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) B.e[static_cast<size_t>(i) * B.n + j] = A.at(i, j);
    return B;
}

inline bool is_tn_hankel(const HankelMoments& m, double tol = 1e-9) {
    SymMatrix A = hankel_build(m);
    if (!is_psd(A, tol).psd) return false;
    if (A.n == 1) return A.at(0, 0) >= -tol;
    SymMatrix A1 = pad_zero_row_col(hankel_truncate(A));
    return is_psd(A1, tol).psd;
}

inline SymMatrix hadamard_power(const SymMatrix& A, double m) {
    SymMatrix B(A.n);
    for (size_t i = 0; i < A.e.size(); ++i) {
        double a = A.e[i];
        require(a > 0 || is_integer_valued(m), ErrKind::DomainError,
                "non-integral Hadamard power of a non-positive entry");
        B.e[i] = std::pow(a, m);
    }
    return B;
}

// --- PSD sampling ------------------------------------------------------------

// Gram matrix of a strictly positive N x r factor, rescaled so every entry
// lies in (0, rho).  Rank <= r by construction; deterministic per seed.
inline SymMatrix sample_psd(int N, double rho, int rank, std::uint64_t seed) {
    require(N >= 1, ErrKind::InvalidInput, "dimension must be positive");
    require(rank >= 1 && rank <= N, ErrKind::InvalidInput, "rank must lie in [1, N]");
    require(rho > 0 && std::isfinite(rho), ErrKind::InvalidInput, "rho must be positive");
    Rng rng(seed);
    std::vector<double> w(static_cast<size_t>(N) * rank);
    for (double& x : w) x = rng.uniform_pos();
    SymMatrix A(N);
    double mx = 0.0;
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            double s = 0;
            for (int k = 0; k < rank; ++k)
                s += w[static_cast<size_t>(i) * rank + k] * w[static_cast<size_t>(j) * rank + k];
            A.set(i, j, s);
            mx = std::max(mx, s);
        }
    double f = rho * (1.0 - 1e-6) / mx;
    for (double& x : A.e) x *= f;
    A.domain_tag = std::make_pair(0.0, rho);
    return A;
}

// Signed variant for two-sided domains: conjugate the Gram matrix by a random
// diagonal signature, so entries land in (-rho, rho) while PSD-ness is kept.
inline SymMatrix sample_psd_signed(int N, double rho, int rank, std::uint64_t seed) {
    SymMatrix A = sample_psd(N, rho, rank, seed);
    Rng rng(derive_seed(seed, 0x5157));
    std::vector<double> sgn(N);
    for (double& s : sgn) s = rng.bits() & 1 ? 1.0 : -1.0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) A.e[static_cast<size_t>(i) * N + j] *= sgn[i] * sgn[j];
    A.domain_tag = std::make_pair(-rho, rho);
    return A;
}

// --- classical determinant identities (exact) ---------------------------------

// Dodgson condensation residual; identically zero for every square matrix.
inline Rational dodgson_residual(const RationalMatrix& A, int i1, int i2, int j1, int j2) {
    require(A.rows == A.cols && A.rows >= 2, ErrKind::InvalidInput, "need a square matrix, n >= 2");
    int n = A.rows;
    require(1 <= i1 && i1 < i2 && i2 <= n && 1 <= j1 && j1 < j2 && j2 <= n,
            ErrKind::InvalidInput, "row/column indices out of order or range");

    auto complement = [n](std::initializer_list<int> drop) {
        IndexTuple t;
        for (int v = 1; v <= n; ++v)
            if (std::find(drop.begin(), drop.end(), v) == drop.end()) t.push_back(v);
        return t;
    };
    auto det_of = [&](const IndexTuple& I, const IndexTuple& J) {
        if (I.empty()) return Rational(1);  // det of the empty matrix
        return det_exact(minor(A, I, J));
    };

    IndexTuple full(n);
    for (int v = 1; v <= n; ++v) full[v - 1] = v;

    Rational lhs = det_exact(minor(A, full, full)) * det_of(complement({i1, i2}), complement({j1, j2}));
    Rational rhs = det_of(complement({i1}), complement({j1})) * det_of(complement({i2}), complement({j2})) -
                   det_of(complement({i1}), complement({j2})) * det_of(complement({i2}), complement({j1}));
    return lhs - rhs;
}

// Karlin identity residual; identically zero.
inline Rational karlin_residual(const std::vector<Rational>& X1, const std::vector<Rational>& X2,
                                const std::vector<Rational>& Y1, const std::vector<Rational>& Y2,
                                const RationalMatrix& B) {
    size_t n = X1.size();
    require(X2.size() == n && Y1.size() == n && Y2.size() == n, ErrKind::InvalidInput,
            "vector lengths differ");
    require(B.rows == static_cast<int>(n) && B.cols == static_cast<int>(n) - 2,
            ErrKind::InvalidInput, "B must be n x (n-2)");

    auto stacked = [&](const std::vector<Rational>& U, const std::vector<Rational>& V) {
        RationalMatrix M(static_cast<int>(n), static_cast<int>(n));
        for (size_t i = 0; i < n; ++i) {
            M.at((int)i, 0) = U[i];
            M.at((int)i, 1) = V[i];
            for (int j = 0; j < B.cols; ++j) M.at((int)i, j + 2) = B.at((int)i, j);
        }
        return det_exact(M);
    };

    return stacked(X1, Y1) * stacked(X2, Y2) - stacked(X1, Y2) * stacked(X2, Y1) -
           stacked(X1, X2) * stacked(Y1, Y2);
}

// --- CSV I/O -------------------------------------------------------------------

inline std::vector<double> parse_csv_line(const std::string& line) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        if (cell.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(std::stod(cell));
        } catch (const std::exception&) {
            fail(ErrKind::InvalidInput, "bad numeric cell: " + cell);
        }
    }
    return out;
}

// Symmetric matrix loader: asymmetry above 1e-12 (relative) is rejected,
// below it the matrix is symmetrized by averaging.
inline SymMatrix load_sym_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto r = parse_csv_line(line);
        if (!r.empty()) rows.push_back(std::move(r));
    }
    require(!rows.empty(), ErrKind::InvalidInput, "empty matrix file");
    int n = static_cast<int>(rows.size());
    for (auto& r : rows)
        require(static_cast<int>(r.size()) == n, ErrKind::InvalidInput, "matrix is not square");
    double scale = 0.0;
    for (auto& r : rows)
        for (double v : r) scale = std::max(scale, std::fabs(v));
    SymMatrix A(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double d = std::fabs(rows[i][j] - rows[j][i]);
            require(d <= 1e-12 * std::max(1.0, scale), ErrKind::InvalidInput,
                    "input matrix is not symmetric");
            A.set(i, j, 0.5 * (rows[i][j] + rows[j][i]));
        }
    return A;
}

inline SymMatrix load_sym_csv_file(const std::string& path) {
    std::ifstream f(path);
    require(f.good(), ErrKind::InvalidInput, "cannot open matrix file: " + path);
    return load_sym_csv(f);
}

// general square matrix, no symmetry requirement
inline Mat load_mat_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto r = parse_csv_line(line);
        if (!r.empty()) rows.push_back(std::move(r));
    }
    require(!rows.empty(), ErrKind::InvalidInput, "empty matrix file");
    int n = static_cast<int>(rows.size());
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
        require(static_cast<int>(rows[i].size()) == n, ErrKind::InvalidInput,
                "matrix is not square");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

inline Mat load_mat_csv_file(const std::string& path) {
    std::ifstream f(path);
    require(f.good(), ErrKind::InvalidInput, "cannot open matrix file: " + path);
    return load_mat_csv(f);
}

inline HankelMoments load_moments_csv_file(const std::string& path) {
    std::ifstream f(path);
    require(f.good(), ErrKind::InvalidInput, "cannot open moments file: " + path);
    std::string line;
    std::getline(f, line);
    return HankelMoments::of(parse_csv_line(line));
}

}  // namespace plab
