// Scans the rank-one threshold ratio toward the corner of (0, sqrt(rho))^N and
// prints how the grid supremum approaches the closed-form sharp constant.

#include <plab/thresholds.hpp>

#include <cstdio>

int main() {
    using namespace plab;
    PowerTuple n = PowerTuple::of({0, 1});
    CoefficientTuple c = CoefficientTuple::of({1, 1});
    double M = 2, rho = 1;

    double sharp = sharp_C(n, c, M, rho).value;
    std::printf("sharp threshold C = %.12f\n", sharp);

    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) {
        std::vector<double> u = {1.0 - 2 * eps, 1.0 - eps};
        double t = rank1_threshold_at(u, n, c, M).value;
        std::printf("  eps = %-8.0e  t(u) = %.12f   gap = %.3e\n", eps, t, sharp - t);
    }
    return 0;
}
