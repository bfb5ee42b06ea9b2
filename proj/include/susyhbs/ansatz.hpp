#pragma once

#include <memory>
#include <string>
#include <vector>

#include "susyhbs/errors.hpp"
#include "susyhbs/interp.hpp"
#include "susyhbs/types.hpp"

namespace susyhbs {

/** Built-in shape functions F with F'(+-inf) = 0:
 *    Gaussian: exp(-u^2)        range (0, 1]
 *    Tanh:     tanh(u)          range (-1, 1)
 *    Erf:      erf(u)           range (-1, 1)
 *    XGauss:   u exp(-u^2)      range [-(2e)^{-1/2}, (2e)^{-1/2}]
 *  with u = x / width. Tabulated takes F, F', F'' from a sampled table. */
enum class Family { Gaussian, Tanh, Erf, XGauss, Tabulated };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

struct TabulatedShape {
    ArrayXr x;
    HermiteSpline f;       // F from (f, f') knots
    CubicSpline f_second;  // F'' knots, splined independently
};

/** Half-bound-state ansatz psi*(x) = offset + F(x), nodeless on the
 *  working domain. Construct through make_ansatz / make_tabulated. */
struct HbsAnsatz {
    Family family = Family::Gaussian;
    scalar_t offset = 0.0;  // the additive constant
    scalar_t width = 1.0;
    std::shared_ptr<const TabulatedShape> table;  // Tabulated only
    scalar_t psi_floor = 1e-12;

    /** Asymptotic limits of F (table edge values for Tabulated). */
    scalar_t f_limit_left() const;
    scalar_t f_limit_right() const;
};

struct StateEval {
    scalar_t psi;
    scalar_t psi_prime;
    scalar_t psi_second;
};

struct SuperpotentialSample {
    scalar_t x;
    scalar_t w;        // W = -psi*'/psi*
    scalar_t w_prime;  // analytic: -psi*''/psi* + (psi*'/psi*)^2
};

struct NodeReport {
    int node_count = 0;
    std::vector<scalar_t> nodes;  // bisection-refined crossings
    scalar_t min_abs_psi = 0.0;
    scalar_t argmin_x = 0.0;
};

/** Validates the offset against the closed range of F; throws NodeDetected
 *  when 0 lies in [offset + min F, offset + max F] (which includes the
 *  asymptotically-vanishing psi* cases). */
HbsAnsatz make_ansatz(Family family, scalar_t offset, scalar_t width = 1.0);

/** Tabulated ansatz from sampled (x, F, F', F'') with strictly increasing x. */
HbsAnsatz make_tabulated(scalar_t offset, const ArrayXr& x, const ArrayXr& f,
                         const ArrayXr& f_prime, const ArrayXr& f_second);

StateEval eval_state(const HbsAnsatz& ansatz, scalar_t x);

SuperpotentialSample superpotential(const HbsAnsatz& ansatz, scalar_t x);

/** Sign-change count of psi* on [x_lo, x_hi], crossings refined by
 *  bisection. Report-only; never throws. */
NodeReport validate_nodeless(const HbsAnsatz& ansatz, scalar_t x_lo,
                             scalar_t x_hi, index_t n_samples = 4001);

/** Closure of the range of the family's unit-width shape function. */
std::pair<scalar_t, scalar_t> family_range(Family family);

}  // namespace susyhbs
