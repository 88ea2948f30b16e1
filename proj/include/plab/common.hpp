#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace plab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class ErrKind {
    InvalidInput,
    CapExceeded,
    DomainError,
    DegenerateInput,
    PreconditionViolated,
    NotConvergent,
    PatternInfeasible,
    NumericalFailure,
};

inline const char* err_name(ErrKind k) {
    switch (k) {
        case ErrKind::InvalidInput: return "InvalidInput";
        case ErrKind::CapExceeded: return "CapExceeded";
        case ErrKind::DomainError: return "DomainError";
        case ErrKind::DegenerateInput: return "DegenerateInput";
        case ErrKind::PreconditionViolated: return "PreconditionViolated";
        case ErrKind::NotConvergent: return "NotConvergent";
        case ErrKind::PatternInfeasible: return "PatternInfeasible";
        case ErrKind::NumericalFailure: return "NumericalFailure";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, const std::string& msg)
        : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
    ErrKind kind() const { return kind_; }

private:
    ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrKind k, const std::string& msg) {
    if (!cond) fail(k, msg);
}

// --- deterministic pseudorandomness -----------------------------------------
//
// All randomized routines use std::mt19937_64 (a fully specified generator)
// seeded through splitmix64, with uniform doubles obtained from the top 53
// bits and Gaussians via Box-Muller.  This fixed pipeline is part of the
// reproducibility contract: the i-th derived stream depends only on
// (master seed, i), never on shared generator state.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // uniform in (0, 1]
    double uniform_pos() { return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t bits() { return gen_(); }

    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform_pos();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// --- numeric formatting ------------------------------------------------------

// Shortest representation that round-trips (used by the PowerSum text format).
inline std::string fmt_shortest(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

// Fixed 17-significant-digit form (used by JSON reports).
inline std::string fmt_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

inline std::string rational_str(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return r.str();
}

inline Rational rational_of(double x) {
    require(std::isfinite(x), ErrKind::InvalidInput, "non-finite value has no rational form");
    return Rational(x);  // exact binary-fraction conversion
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool is_integer_valued(double x) { return std::isfinite(x) && x == std::floor(x); }

inline double rel_err(double a, double b) {
    double d = std::fabs(a - b);
    double s = std::max(std::fabs(a), std::fabs(b));
    return s > 0 ? d / s : d;
}

}  // namespace plab
