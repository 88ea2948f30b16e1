// Compares the Monte Carlo estimate of the unitary-group integral with its
// determinant closed form on a small example.

#include <plab/hciz.hpp>

#include <cstdio>

int main() {
    using namespace plab;
    std::vector<double> alpha = {0.0, 1.0, 1.7};
    std::vector<double> x = {0.2, 0.9, 1.5};

    double exact = hciz_exact(alpha, x);
    std::printf("exact  = %.10f\n", exact);
    for (long s : {1000L, 10000L, 100000L}) {
        MCEstimate mc = hciz_mc(alpha, x, s, 42);
        std::printf("mc(%6ld) = %.10f   stderr = %.2e   |diff|/stderr = %.2f\n", s, mc.mean,
                    mc.stderr_, std::fabs(mc.mean - exact) / mc.stderr_);
    }
    return 0;
}
