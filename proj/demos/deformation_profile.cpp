// Walk the square family from the symmetric point to the critical parameter,
// printing the lengths that drive the systole and their closed-form
// derivatives. The side grows, the marked diagonal shrinks, and the two meet
// at pi/12, where the systole profile tops out.

#include <cstdio>

#include "sysgeo/sysgeo.hpp"

using namespace sysgeo;

int main() {
    std::printf("%10s %12s %12s %12s %12s %14s %14s\n", "eps", "side", "diagonal",
                "width", "systole", "d cosh side", "d cosh diag");
    const int steps = 12;
    for (int i = 0; i <= steps; ++i) {
        const double eps = kCriticalEps * i / steps;
        const DeformationSample s = deformation_sample(eps);
        std::printf("%10.6f %12.8f %12.8f %12.8f %12.8f %14.8f %14.8f\n", s.epsilon,
                    s.side, s.marked_diagonal, s.width, s.systole, s.dcosh_side,
                    s.dcosh_diagonal);
    }

    const double e0 = find_critical_epsilon();
    std::printf("\ncrossover side = diagonal at eps = %.15g (pi/12 = %.15g)\n", e0,
                kCriticalEps);
    return 0;
}
