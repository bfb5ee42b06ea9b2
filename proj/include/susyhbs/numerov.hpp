#pragma once

#include "susyhbs/types.hpp"

namespace susyhbs {

enum class Direction { Forward, Backward };

/** Sampled wavefunction. values represent the true solution times
 *  exp(-log_scale); log_scale accumulates the renormalizations applied
 *  while shooting through classically forbidden regions. */
struct WaveTable {
    Grid grid;
    ArrayXc values;
    scalar_t log_scale = 0.0;
};

/** Fourth-order Numerov integration of psi'' + [E - V] psi = 0 with V
 *  sampled on the grid. The two seed values sit at the starting edge
 *  (indices 0,1 forward; n-1,n-2 backward). Rescales in place whenever
 *  |psi| exceeds 1e100 instead of overflowing. */
WaveTable integrate(const ArrayXr& potential, const Grid& grid, scalar_t energy,
                    Direction direction, complex_t psi0, complex_t psi1);

}  // namespace susyhbs
