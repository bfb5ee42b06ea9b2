#pragma once

#include <cmath>
#include <complex>
#include <Eigen/Dense>

#include "susyhbs/errors.hpp"

namespace susyhbs {

using scalar_t  = double;
using complex_t = std::complex<scalar_t>;

/** Dynamic real array (sampled potentials, superpotentials, ...) */
using ArrayXr = Eigen::ArrayX<scalar_t>;

/** Dynamic complex array (wavefunctions) */
using ArrayXc = Eigen::ArrayX<complex_t>;

using index_t = Eigen::Index;

/** Uniform grid on [x_min, x_max]; n_points is odd so composite
 *  Simpson applies directly to sampled tables. */
struct Grid {
    scalar_t x_min = -12.0;
    scalar_t x_max = 12.0;
    index_t n_points = 4801;

    Grid() = default;
    Grid(scalar_t x0, scalar_t x1, index_t n) : x_min(x0), x_max(x1), n_points(n) {
        if (!(x_max > x_min)) throw InvalidParams("grid: x_max must exceed x_min");
        if (n_points < 3 || n_points % 2 == 0)
            throw InvalidParams("grid: n_points must be odd and >= 3");
    }

    scalar_t h() const { return (x_max - x_min) / scalar_t(n_points - 1); }
    scalar_t x(index_t i) const { return x_min + scalar_t(i) * h(); }
    ArrayXr points() const {
        return ArrayXr::LinSpaced(n_points, x_min, x_max);
    }

    bool operator==(const Grid& o) const {
        return x_min == o.x_min && x_max == o.x_max && n_points == o.n_points;
    }

    /** Symmetric grid [-L, L] with spacing <= target_h, capped at max_points
     *  (kept odd). */
    static Grid symmetric(scalar_t half_width, scalar_t target_h,
                          index_t max_points = 200001) {
        if (!(half_width > 0) || !(target_h > 0))
            throw InvalidParams("grid: half_width and step must be positive");
        auto half = index_t(std::ceil(half_width / target_h));
        index_t n = 2 * half + 1;
        if (n > max_points) n = (max_points % 2 == 0) ? max_points - 1 : max_points;
        return Grid(-half_width, half_width, n);
    }
};

}  // namespace susyhbs
