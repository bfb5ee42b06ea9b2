#include "susyhbs/numerov.hpp"

#include <cmath>

#include "susyhbs/errors.hpp"

namespace susyhbs {

namespace {
constexpr scalar_t kRescaleAt = 1e100;
}

WaveTable integrate(const ArrayXr& potential, const Grid& grid, scalar_t energy,
                    Direction direction, complex_t psi0, complex_t psi1) {
    const index_t n = grid.n_points;
    if (potential.size() != n)
        throw GridMismatch("numerov: potential not sampled on the grid");

    const scalar_t h2_12 = grid.h() * grid.h() / 12.0;
    // psi'' = u psi with u = V - E; a = 1 - h^2 u / 12, b = 2 (1 + 5 h^2 u / 12).
    const ArrayXr u = potential - energy;
    const ArrayXr a = 1.0 - h2_12 * u;
    const ArrayXr b = 2.0 * (1.0 + 5.0 * h2_12 * u);

    WaveTable out;
    out.grid = grid;
    out.values.resize(n);

    const bool fwd = (direction == Direction::Forward);
    const index_t i0 = fwd ? 0 : n - 1;
    const index_t i1 = fwd ? 1 : n - 2;
    const index_t step = fwd ? 1 : -1;
    out.values(i0) = psi0;
    out.values(i1) = psi1;

    index_t prev2 = i0, prev1 = i1;
    for (index_t i = i1 + step; i >= 0 && i < n; i += step) {
        out.values(i) =
            (b(prev1) * out.values(prev1) - a(prev2) * out.values(prev2)) / a(i);
        const scalar_t mag = std::abs(out.values(i));
        if (mag > kRescaleAt) {
            // Renormalize everything integrated so far; the table keeps a
            // uniform scale and the true solution is values * e^{log_scale}.
            const index_t lo = fwd ? 0 : i;
            const index_t len = fwd ? i + 1 : n - i;
            out.values.segment(lo, len) /= mag;
            out.log_scale += std::log(mag);
        }
        prev2 = prev1;
        prev1 = i;
    }
    return out;
}

}  // namespace susyhbs
