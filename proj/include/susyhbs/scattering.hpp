#pragma once

#include <vector>

#include "susyhbs/types.hpp"

namespace susyhbs {

struct ScatteringPoint {
    scalar_t E;
    scalar_t R;
    scalar_t T;
    scalar_t unitarity_residual;  // |R + T - 1|
};

struct ScatteringCurve {
    std::vector<ScatteringPoint> points;
    /** Indices of interior local T maxima with T > 0.999 (candidate
     *  sharp peaks; see analyze_t_peaks for the width classification). */
    std::vector<index_t> t_peak_candidates;
};

struct TPeak {
    scalar_t E;
    scalar_t T;
    scalar_t half_width;  // half of the contiguous T >= threshold interval
    bool sharp;           // half_width < sharp_half_width
};

struct RMinimum {
    scalar_t E;
    scalar_t R;
};

/** Plane-wave transmission/reflection at E > 0: impose psi = e^{ikx} past
 *  the right edge, integrate backward, and split psi(x_min) into incident
 *  and reflected waves using a 5-point one-sided derivative. */
ScatteringPoint rt_coefficients(const ArrayXr& potential, const Grid& grid,
                                scalar_t energy);

/** Right-incidence variant (transmitted wave e^{-ikx} on the left);
 *  T must agree with the left-incidence value for any real potential. */
ScatteringPoint rt_coefficients_right(const ArrayXr& potential, const Grid& grid,
                                      scalar_t energy);

/** Pointwise scan over ascending energies; flags candidate T peaks. */
ScatteringCurve scan(const ArrayXr& potential, const Grid& grid,
                     const ArrayXr& energies);

/** Interior local minima of R, refined by golden-section on
 *  rt_coefficients to de_tol. */
std::vector<RMinimum> find_r_minima(const ArrayXr& potential, const Grid& grid,
                                    const ScatteringCurve& curve,
                                    scalar_t de_tol = 1e-4);

/** Measures each candidate peak's T >= threshold width by bisecting the
 *  crossings on both sides. */
std::vector<TPeak> analyze_t_peaks(const ArrayXr& potential, const Grid& grid,
                                   const ScatteringCurve& curve,
                                   scalar_t threshold = 0.999,
                                   scalar_t sharp_half_width = 0.1);

/** 400 log-spaced energies in [1e-3, 20]. */
ArrayXr default_energy_grid();

ArrayXr log_spaced_energies(scalar_t e_lo, scalar_t e_hi, index_t n);

}  // namespace susyhbs
