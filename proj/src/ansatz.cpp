#include "susyhbs/ansatz.hpp"

#include <algorithm>
#include <cmath>

namespace susyhbs {

namespace {

constexpr scalar_t kTwoOverSqrtPi = 1.1283791670955126;  // 2/sqrt(pi)

struct ShapeEval {
    scalar_t f, fp, fpp;
};

// Unit-width shape functions and their first two derivatives.
ShapeEval eval_shape(Family family, scalar_t u) {
    switch (family) {
        case Family::Gaussian: {
            const scalar_t e = std::exp(-u * u);
            return {e, -2 * u * e, (4 * u * u - 2) * e};
        }
        case Family::Tanh: {
            const scalar_t t = std::tanh(u);
            const scalar_t s2 = 1 - t * t;  // sech^2
            return {t, s2, -2 * t * s2};
        }
        case Family::Erf: {
            const scalar_t e = std::exp(-u * u);
            return {std::erf(u), kTwoOverSqrtPi * e, -2 * u * kTwoOverSqrtPi * e};
        }
        case Family::XGauss: {
            const scalar_t e = std::exp(-u * u);
            return {u * e, (1 - 2 * u * u) * e, (4 * u * u * u - 6 * u) * e};
        }
        case Family::Tabulated:
            break;
    }
    throw InvalidParams("eval_shape: tabulated ansatz has no closed form");
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Gaussian: return "gaussian";
        case Family::Tanh: return "tanh";
        case Family::Erf: return "erf";
        case Family::XGauss: return "xgauss";
        case Family::Tabulated: return "tabulated";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), ::tolower);
    if (s == "gaussian" || s == "gauss") return Family::Gaussian;
    if (s == "tanh") return Family::Tanh;
    if (s == "erf") return Family::Erf;
    if (s == "xgauss") return Family::XGauss;
    if (s == "tabulated") return Family::Tabulated;
    throw InvalidParams("unknown ansatz family: " + name);
}

std::pair<scalar_t, scalar_t> family_range(Family family) {
    switch (family) {
        case Family::Gaussian: return {0.0, 1.0};
        case Family::Tanh: return {-1.0, 1.0};
        case Family::Erf: return {-1.0, 1.0};
        case Family::XGauss: {
            const scalar_t ext = 1.0 / std::sqrt(2.0 * M_E);  // at u = 1/sqrt(2)
            return {-ext, ext};
        }
        case Family::Tabulated:
            break;
    }
    throw InvalidParams("family_range: tabulated range depends on the table");
}

scalar_t HbsAnsatz::f_limit_left() const {
    if (family == Family::Tabulated) return table->f(table->x(0));
    switch (family) {
        case Family::Gaussian: return 0.0;
        case Family::Tanh: return -1.0;
        case Family::Erf: return -1.0;
        case Family::XGauss: return 0.0;
        default: return 0.0;
    }
}

scalar_t HbsAnsatz::f_limit_right() const {
    if (family == Family::Tabulated) return table->f(table->x(table->x.size() - 1));
    switch (family) {
        case Family::Gaussian: return 0.0;
        case Family::Tanh: return 1.0;
        case Family::Erf: return 1.0;
        case Family::XGauss: return 0.0;
        default: return 0.0;
    }
}

HbsAnsatz make_ansatz(Family family, scalar_t offset, scalar_t width) {
    if (family == Family::Tabulated)
        throw InvalidParams("tabulated ansatz needs a table; use make_tabulated");
    if (!std::isfinite(offset)) throw InvalidParams("offset must be finite");
    if (!(width > 0) || !std::isfinite(width))
        throw InvalidParams("width must be positive and finite");

    // psi* = offset + F; a node exists iff 0 lies in the closure of its
    // range. The boundary cases (offset + C = 0) give psi*(+-inf) = 0 and
    // an unbounded W, so they are rejected with the same error.
    const auto [lo, hi] = family_range(family);
    if (offset + lo <= 0 && offset + hi >= 0)
        throw NodeDetected("offset " + std::to_string(offset) + " puts a zero in psi* for family " +
                           family_name(family));

    HbsAnsatz a;
    a.family = family;
    a.offset = offset;
    a.width = width;
    return a;
}

HbsAnsatz make_tabulated(scalar_t offset, const ArrayXr& x, const ArrayXr& f,
                         const ArrayXr& f_prime, const ArrayXr& f_second) {
    if (!std::isfinite(offset)) throw InvalidParams("offset must be finite");
    auto shape = std::make_shared<TabulatedShape>();
    shape->x = x;
    shape->f = HermiteSpline(x, f, f_prime);
    shape->f_second = CubicSpline(x, f_second);

    HbsAnsatz a;
    a.family = Family::Tabulated;
    a.offset = offset;
    a.table = std::move(shape);

    // Nodelessness of the interpolant: knots plus in-cell samples.
    scalar_t prev = offset + f(0);
    if (prev == 0) throw NodeDetected("tabulated psi* vanishes at the table edge");
    for (index_t i = 0; i + 1 < x.size(); ++i) {
        for (int k = 1; k <= 8; ++k) {
            const scalar_t xi = x(i) + (x(i + 1) - x(i)) * scalar_t(k) / 8.0;
            const scalar_t psi = offset + a.table->f(xi);
            if (psi == 0 || psi * prev < 0)
                throw NodeDetected("tabulated psi* crosses zero");
            prev = psi;
        }
    }
    return a;
}

StateEval eval_state(const HbsAnsatz& ansatz, scalar_t x) {
    if (ansatz.family == Family::Tabulated) {
        const auto& t = *ansatz.table;
        if (!t.f.contains(x)) throw OutOfTable("x outside the tabulated range");
        return {ansatz.offset + t.f(x), t.f.derivative(x), t.f_second(x)};
    }
    const scalar_t s = 1.0 / ansatz.width;
    const ShapeEval e = eval_shape(ansatz.family, x * s);
    return {ansatz.offset + e.f, e.fp * s, e.fpp * s * s};
}

SuperpotentialSample superpotential(const HbsAnsatz& ansatz, scalar_t x) {
    const StateEval e = eval_state(ansatz, x);
    if (std::abs(e.psi) < ansatz.psi_floor)
        throw DivisionNearNode("psi* below floor at x = " + std::to_string(x));
    const scalar_t ratio = e.psi_prime / e.psi;
    return {x, -ratio, -e.psi_second / e.psi + ratio * ratio};
}

NodeReport validate_nodeless(const HbsAnsatz& ansatz, scalar_t x_lo, scalar_t x_hi,
                             index_t n_samples) {
    NodeReport report;
    if (n_samples < 2) n_samples = 2;
    auto psi_at = [&](scalar_t x) { return eval_state(ansatz, x).psi; };

    scalar_t prev_x = x_lo, prev = psi_at(x_lo);
    report.min_abs_psi = std::abs(prev);
    report.argmin_x = x_lo;
    for (index_t i = 1; i < n_samples; ++i) {
        const scalar_t xi = x_lo + (x_hi - x_lo) * scalar_t(i) / scalar_t(n_samples - 1);
        const scalar_t cur = psi_at(xi);
        if (std::abs(cur) < report.min_abs_psi) {
            report.min_abs_psi = std::abs(cur);
            report.argmin_x = xi;
        }
        if (prev == 0) {
            report.nodes.push_back(prev_x);
        } else if (prev * cur < 0) {
            scalar_t a = prev_x, b = xi;
            for (int it = 0; it < 80 && (b - a) > 1e-14 * std::max<scalar_t>(1, std::abs(a)); ++it) {
                const scalar_t m = 0.5 * (a + b);
                (psi_at(m) * prev <= 0 ? b : a) = m;
            }
            report.nodes.push_back(0.5 * (a + b));
        }
        prev = cur;
        prev_x = xi;
    }
    report.node_count = int(report.nodes.size());
    return report;
}

}  // namespace susyhbs
