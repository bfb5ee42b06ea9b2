#include "susyhbs/partner.hpp"

#include <algorithm>
#include <cmath>

#include "susyhbs/errors.hpp"

namespace susyhbs {

const char* side_name(Side s) { return s == Side::Minus ? "minus" : "plus"; }

Side side_from_name(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), ::tolower);
    if (s == "minus" || s == "-" || s == "v-" || s == "vminus") return Side::Minus;
    if (s == "plus" || s == "+" || s == "v+" || s == "vplus") return Side::Plus;
    throw InvalidParams("unknown potential side: " + name);
}

PartnerPair build_pair(const HbsAnsatz& ansatz, const Grid& grid) {
    PartnerPair pair;
    pair.grid = grid;
    pair.ansatz_meta = ansatz;
    const index_t n = grid.n_points;
    pair.w.resize(n);
    pair.w_prime.resize(n);
    pair.v_minus.resize(n);
    pair.v_plus.resize(n);

    for (index_t i = 0; i < n; ++i) {
        const SuperpotentialSample s = superpotential(ansatz, grid.x(i));
        pair.w(i) = s.w;
        pair.w_prime(i) = s.w_prime;
        pair.v_minus(i) = s.w * s.w - s.w_prime;
        pair.v_plus(i) = s.w * s.w + s.w_prime;
    }

    // SUSY intertwining at sample level.
    const scalar_t gap =
        (pair.v_plus - pair.v_minus - 2 * pair.w_prime).abs().maxCoeff();
    if (gap > 1e-14 * std::max<scalar_t>(1.0, pair.w_prime.abs().maxCoeff()))
        throw Error("partner construction violated V+ - V- = 2W'");
    return pair;
}

std::pair<scalar_t, scalar_t> tanh_closed_form(scalar_t offset, scalar_t x) {
    if (std::abs(offset) <= 1)
        throw NodeDetected("tanh closed form needs |offset| > 1");
    const scalar_t t = std::tanh(x);
    const scalar_t s2 = 1 - t * t;
    const scalar_t denom = offset + t;
    const scalar_t v_minus = -2 * s2 * t / denom;
    const scalar_t v_plus = 2 * s2 * (1 + offset * t) / (denom * denom);
    return {v_minus, v_plus};
}

scalar_t mirror_point(scalar_t offset) {
    const scalar_t ratio = (offset - 1) / (offset + 1);
    if (!(ratio > 0))
        throw DomainError("mirror point defined only for |offset| > 1");
    return 0.5 * std::log(ratio);
}

ScaledPotential scale(const PartnerPair& pair, Side side, scalar_t c) {
    if (!(c > 0)) throw NonPositiveScale("scale factor must be positive");
    ScaledPotential s;
    s.base = side;
    s.c = c;
    s.grid = pair.grid;
    s.values = c * pair.side(side);
    return s;
}

}  // namespace susyhbs
