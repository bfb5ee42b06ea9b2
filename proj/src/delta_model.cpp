#include "susyhbs/delta_model.hpp"

#include <algorithm>
#include <cmath>

#include "susyhbs/errors.hpp"

namespace susyhbs {

DeltaArray make_delta_array(std::vector<DeltaSpike> deltas) {
    if (deltas.empty()) throw InvalidParams("delta array needs at least one spike");
    for (std::size_t i = 1; i < deltas.size(); ++i)
        if (!(deltas[i].position > deltas[i - 1].position))
            throw InvalidParams("delta positions must be strictly increasing");
    return DeltaArray{std::move(deltas)};
}

const char* delta_case_name(DeltaCase c) {
    switch (c) {
        case DeltaCase::ThreeWells: return "three_wells";
        case DeltaCase::CentreBarrier: return "centre_barrier";
        case DeltaCase::SideBarriers: return "side_barriers";
    }
    return "?";
}

DeltaHbs solve_hbs(scalar_t u1, scalar_t a) {
    if (!(a > 0)) throw InvalidParams("delta spacing a must be positive");
    const scalar_t pole = u1 * a - 1;
    if (pole == 0) throw ConstraintPole("u1*a = 1: central strength diverges");
    DeltaHbs hbs;
    hbs.u1 = u1;
    hbs.a = a;
    hbs.u2 = 2 * u1 / pole;
    hbs.A = 1.0;
    hbs.B = -u1 * hbs.A;
    hbs.C = (1 - u1 * a) * hbs.A;
    hbs.F = hbs.C;
    hbs.D = -(u1 + hbs.u2 - u1 * hbs.u2 * a) * hbs.A;
    return hbs;
}

scalar_t eval_delta_hbs(const DeltaHbs& hbs, scalar_t x) {
    if (x < -hbs.a) return hbs.A;
    if (x < 0) return hbs.B * x + hbs.C;
    if (x < hbs.a) return hbs.D * x + hbs.F;
    return hbs.A;
}

CaseInfo classify_case(scalar_t u1, scalar_t a) {
    if (!(a > 0)) throw InvalidParams("delta spacing a must be positive");
    const scalar_t p = u1 * a;
    if (p == 1) throw ConstraintPole("u1*a = 1: central strength diverges");
    if (p > 1) return {DeltaCase::ThreeWells, 2};
    if (p > 0) return {DeltaCase::CentreBarrier, 0};
    return {DeltaCase::SideBarriers, 0};
}

DeltaArray triple_array(const DeltaHbs& hbs) {
    return make_delta_array({{-hbs.a, hbs.u1}, {0.0, hbs.u2}, {hbs.a, hbs.u1}});
}

scalar_t delta_outgoing_coefficient(const DeltaArray& array, scalar_t kappa) {
    // psi = alpha e^{kappa x} + beta e^{-kappa x} between spikes, starting
    // from the decaying-at--inf solution (alpha, beta) = (1, 0). Each spike
    // keeps psi continuous and jumps psi' by -U psi.
    scalar_t alpha = 1.0, beta = 0.0;
    for (const auto& d : array.deltas) {
        const scalar_t ep = std::exp(kappa * d.position);
        const scalar_t em = 1.0 / ep;
        const scalar_t psi = alpha * ep + beta * em;
        const scalar_t dpsi = kappa * (alpha * ep - beta * em) - d.strength * psi;
        alpha = 0.5 * (psi + dpsi / kappa) * em;
        beta = 0.5 * (psi - dpsi / kappa) * ep;
    }
    return alpha;
}

Spectrum delta_bound_states(const DeltaArray& array, const DeltaSolverOptions& options) {
    scalar_t e_lo = options.e_lo;
    if (std::isnan(e_lo)) {
        scalar_t total_wells = 0;
        for (const auto& d : array.deltas) total_wells += std::max<scalar_t>(d.strength, 0);
        e_lo = -0.25 * total_wells * total_wells - 1.0;
    }
    if (!(e_lo < -options.e_eps))
        throw InvalidParams("delta solver: window [e_lo, -eps] is empty");

    const scalar_t kap_lo = 1e-5;
    const scalar_t kap_hi = std::sqrt(-e_lo);
    const int n = std::max(options.n_scan, 8);

    Spectrum spectrum;
    auto fn = [&](scalar_t k) { return delta_outgoing_coefficient(array, k); };

    scalar_t prev_k = kap_lo, prev_v = fn(kap_lo);
    for (int i = 1; i < n; ++i) {
        const scalar_t k = kap_lo * std::pow(kap_hi / kap_lo, scalar_t(i) / scalar_t(n - 1));
        const scalar_t v = fn(k);
        if (prev_v == 0) {
            spectrum.energies.push_back(-prev_k * prev_k);
            spectrum.diagnostics.push_back({0.0, 0.0});
        } else if (prev_v * v < 0) {
            scalar_t a = prev_k, b = k, fa = prev_v;
            while (b - a > options.kappa_tol) {
                const scalar_t m = 0.5 * (a + b);
                const scalar_t fm = fn(m);
                if (fa * fm <= 0) {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            const scalar_t root = 0.5 * (a + b);
            spectrum.energies.push_back(-root * root);
            spectrum.diagnostics.push_back({0.0, std::abs(fn(root))});
        }
        prev_k = k;
        prev_v = v;
    }

    // kappa ascends, so energies came out descending.
    std::reverse(spectrum.energies.begin(), spectrum.energies.end());
    std::reverse(spectrum.diagnostics.begin(), spectrum.diagnostics.end());
    spectrum.node_counts.resize(spectrum.energies.size());
    for (std::size_t i = 0; i < spectrum.node_counts.size(); ++i)
        spectrum.node_counts[i] = int(i);
    return spectrum;
}

}  // namespace susyhbs
