#include "susyhbs/area.hpp"

#include <cmath>

#include "susyhbs/errors.hpp"
#include "susyhbs/partner.hpp"

namespace susyhbs {

const char* area_sign_name(AreaSign s) {
    switch (s) {
        case AreaSign::Negative: return "negative";
        case AreaSign::Zero: return "zero";
        case AreaSign::Positive: return "positive";
    }
    return "?";
}

const char* prediction_name(BoundPrediction p) {
    return p == BoundPrediction::AtLeastOneBoundState ? "at_least_one_bound_state"
                                                      : "no_unconditional_guarantee";
}

scalar_t area_integral(const ArrayXr& values, const Grid& grid) {
    const index_t n = grid.n_points;
    if (values.size() != n) throw GridMismatch("area: values not on the grid");
    if (n % 2 == 0) throw GridMismatch("area: composite Simpson needs odd n");
    scalar_t odd = 0, even = 0;
    for (index_t i = 1; i < n - 1; i += 2) odd += values(i);
    for (index_t i = 2; i < n - 1; i += 2) even += values(i);
    return grid.h() / 3.0 * (values(0) + values(n - 1) + 4 * odd + 2 * even);
}

W2Identity w2_identity(const HbsAnsatz& ansatz, const Grid& grid) {
    const scalar_t w_left = superpotential(ansatz, grid.x_min).w;
    const scalar_t w_right = superpotential(ansatz, grid.x_max).w;
    if (std::abs(w_left) > 1e-6 || std::abs(w_right) > 1e-6)
        throw BoundaryNotDecayed("W has not decayed at the grid edges");

    const PartnerPair pair = build_pair(ansatz, grid);
    W2Identity id;
    id.lhs_minus = area_integral(pair.v_minus, grid);
    id.lhs_plus = area_integral(pair.v_plus, grid);
    id.rhs = area_integral(ArrayXr(pair.w.square()), grid);
    return id;
}

AreaReport simon_classify(const ArrayXr& values, const Grid& grid) {
    constexpr scalar_t kZeroTol = 1e-9;
    AreaReport report;
    report.I = area_integral(values, grid);
    report.I_weighted =
        area_integral(ArrayXr((1.0 + grid.points().square()) * values.abs()), grid);
    report.sign = report.I < -kZeroTol
                      ? AreaSign::Negative
                      : (report.I > kZeroTol ? AreaSign::Positive : AreaSign::Zero);
    report.prediction = report.sign == AreaSign::Negative
                            ? BoundPrediction::AtLeastOneBoundState
                            : BoundPrediction::NoUnconditionalGuarantee;
    return report;
}

}  // namespace susyhbs
