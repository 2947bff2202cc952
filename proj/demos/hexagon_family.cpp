// Replace the equilateral triangles of the critical genus-9 surface by
// right-angled hexagons: for each boundary side a, the hexagon seam length t
// follows from cosh(t) = 1 + 1/(2 sinh^2(a/2)). As a shrinks, seams stretch
// toward cusps while the total area stays fixed.

#include <cstdio>
#include <vector>

#include "sysgeo/sysgeo.hpp"

using namespace sysgeo;

int main() {
    const SurfaceDescriptor base = build_surface(4, 4, kCriticalEps);

    std::printf("%8s %14s %18s\n", "a", "seam t(a)", "boundary length");
    const std::vector<double> family = {2.0, 1.0, 0.5, 0.25, 0.1, 0.01};
    for (const double a : family) {
        const BoundedSurfaceDescriptor s = build_hexagon_surface(base, a);
        std::printf("%8.3f %14.9f %18.9f\n", a, s.seam_side, s.boundary_length_each);
    }

    const BoundedSurfaceDescriptor s = build_hexagon_surface(base, 0.5);
    std::printf("\n%lld hexagons, %d boundaries of %d sides each, area %.12g\n",
                s.hexagon_count, s.boundary_count, s.boundary_sides_each, s.total_area);

    const CuspLimitReport limit = cusp_limit_check(base, family);
    std::printf("seam lengths increasing toward the cusp limit: %s\n",
                limit.seam_increasing ? "yes" : "no");
    return 0;
}
