#pragma once

#include <string>

#include "susyhbs/ansatz.hpp"
#include "susyhbs/types.hpp"

namespace susyhbs {

enum class AreaSign { Negative, Zero, Positive };
enum class BoundPrediction { AtLeastOneBoundState, NoUnconditionalGuarantee };

const char* area_sign_name(AreaSign s);
const char* prediction_name(BoundPrediction p);

struct AreaReport {
    scalar_t I;           // Simpson integral of V over the grid
    scalar_t I_weighted;  // integral of (1+x^2)|V| over the window
    AreaSign sign;
    BoundPrediction prediction;
};

/** Composite Simpson over the (odd-point) grid. */
scalar_t area_integral(const ArrayXr& values, const Grid& grid);

struct W2Identity {
    scalar_t lhs_minus;  // integral of V-
    scalar_t lhs_plus;   // integral of V+
    scalar_t rhs;        // integral of W^2
};

/** The area identity: with W(+-L) ~ 0 the boundary terms drop and all
 *  three integrals coincide. Throws BoundaryNotDecayed if |W| > 1e-6 at
 *  either edge. */
W2Identity w2_identity(const HbsAnsatz& ansatz, const Grid& grid);

/** Area report with the negative-area criterion: I < 0 (at tolerance
 *  1e-9) predicts at least one bound state. */
AreaReport simon_classify(const ArrayXr& values, const Grid& grid);

}  // namespace susyhbs
