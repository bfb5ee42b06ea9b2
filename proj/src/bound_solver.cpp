#include "susyhbs/bound_solver.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "susyhbs/errors.hpp"
#include "susyhbs/interp.hpp"

namespace susyhbs {

namespace {

ArrayXr sample_potential(const PotentialFn& potential, const Grid& grid) {
    ArrayXr v(grid.n_points);
    for (index_t i = 0; i < grid.n_points; ++i) v(i) = potential(grid.x(i));
    return v;
}

index_t matching_index(const ArrayXr& v) {
    index_t m = 0;
    v.minCoeff(&m);
    return std::clamp<index_t>(m, 2, v.size() - 3);
}

scalar_t five_point_derivative(const ArrayXc& psi, index_t m, scalar_t h) {
    return (psi(m - 2).real() - 8 * psi(m - 1).real() + 8 * psi(m + 1).real() -
            psi(m + 2).real()) /
           (12 * h);
}

struct Shot {
    WaveTable left;
    WaveTable right;
    index_t match;
};

Shot shoot(const ArrayXr& v, const Grid& grid, scalar_t energy, index_t match) {
    const scalar_t kappa = std::sqrt(-energy);
    const scalar_t eh = std::exp(kappa * grid.h());
    Shot s;
    // Seeds are relative: psi_L ~ e^{+kappa x}, psi_R ~ e^{-kappa x}.
    s.left = integrate(v, grid, energy, Direction::Forward, 1.0, eh);
    s.right = integrate(v, grid, energy, Direction::Backward, 1.0, eh);
    s.match = match;
    return s;
}

scalar_t mismatch_at(const Shot& s, const Grid& grid, scalar_t energy) {
    const scalar_t kappa = std::sqrt(-energy);
    const index_t m = s.match;
    const scalar_t pl = s.left.values(m).real();
    const scalar_t pr = s.right.values(m).real();
    const scalar_t dl = five_point_derivative(s.left.values, m, grid.h());
    const scalar_t dr = five_point_derivative(s.right.values, m, grid.h());
    return (dl * pr - pl * dr) / (std::abs(pl * pr) * kappa);
}

scalar_t mismatch_impl(const ArrayXr& v, const Grid& grid, scalar_t energy,
                       index_t match) {
    // The Wronskian is x-independent, so shifting the matching point only
    // changes the normalization; shift away from accidental nodes.
    for (int attempt = 0; attempt < 4; ++attempt) {
        const Shot s = shoot(v, grid, energy, match);
        const scalar_t pl = s.left.values(match).real();
        const scalar_t pr = s.right.values(match).real();
        scalar_t near = 0;
        for (index_t j = match - 2; j <= match + 2; ++j)
            near = std::max(near, std::abs(s.left.values(j).real() * s.right.values(j).real()));
        if (std::abs(pl * pr) > 1e-10 * near || near == 0)
            return mismatch_at(s, grid, energy);
        match = std::clamp<index_t>(match + 5, 2, grid.n_points - 3);
    }
    const Shot s = shoot(v, grid, energy, match);
    return mismatch_at(s, grid, energy);
}

/** Assembled two-sided eigenfunction, left branch rescaled to the right. */
ArrayXr assemble(const ArrayXr& v, const Grid& grid, scalar_t energy, index_t match) {
    const Shot s = shoot(v, grid, energy, match);
    const scalar_t pl = s.left.values(match).real();
    const scalar_t pr = s.right.values(match).real();
    const scalar_t ratio = (pl != 0) ? pr / pl : 1.0;
    ArrayXr psi(grid.n_points);
    for (index_t i = 0; i <= match; ++i) psi(i) = s.left.values(i).real() * ratio;
    for (index_t i = match + 1; i < grid.n_points; ++i) psi(i) = s.right.values(i).real();
    const scalar_t peak = psi.abs().maxCoeff();
    if (peak > 0) psi /= peak;
    return psi;
}

struct Bracket {
    scalar_t e_lo, e_hi;
};

std::vector<Bracket> scan_brackets(const ArrayXr& v, const Grid& grid,
                                   scalar_t e_min, scalar_t e_max, int n_scan,
                                   index_t match) {
    std::vector<Bracket> brackets;
    const scalar_t kap_hi = std::sqrt(-e_min);
    const scalar_t kap_lo = std::sqrt(-e_max);
    scalar_t prev_e = 0, prev_d = 0;
    bool have_prev = false;
    for (int i = 0; i < n_scan; ++i) {
        // Linear in kappa: trial energies cluster toward the threshold,
        // where the spectra of interest accumulate.
        const scalar_t kap = kap_hi + (kap_lo - kap_hi) * scalar_t(i) / scalar_t(n_scan - 1);
        const scalar_t e = -kap * kap;
        const scalar_t d = mismatch_impl(v, grid, e, match);
        if (std::isfinite(d)) {
            if (have_prev && prev_d * d < 0) brackets.push_back({prev_e, e});
            prev_e = e;
            prev_d = d;
            have_prev = true;
        }
    }
    return brackets;
}

struct Root {
    scalar_t energy;
    scalar_t residual;
};

Root bisect(const ArrayXr& v, const Grid& grid, Bracket b, scalar_t tol, index_t match) {
    scalar_t lo = b.e_lo, hi = b.e_hi;
    scalar_t flo = mismatch_impl(v, grid, lo, match);
    while (hi - lo > tol) {
        const scalar_t mid = 0.5 * (lo + hi);
        const scalar_t fmid = mismatch_impl(v, grid, mid, match);
        if (!std::isfinite(fmid)) break;
        if (flo * fmid <= 0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    const scalar_t e = 0.5 * (lo + hi);
    return {e, std::abs(mismatch_impl(v, grid, e, match))};
}

struct DomainSetup {
    Grid grid;
    ArrayXr v;
    index_t match;
};

DomainSetup setup_domain(const PotentialFn& potential, scalar_t half_width,
                         scalar_t step, index_t max_points) {
    DomainSetup d{Grid::symmetric(half_width, step, max_points), {}, 0};
    d.v = sample_potential(potential, d.grid);
    d.match = matching_index(d.v);
    return d;
}

}  // namespace

scalar_t mismatch(const ArrayXr& potential, const Grid& grid, scalar_t energy) {
    if (!(energy < 0)) throw InvalidParams("mismatch: energy must be negative");
    if (potential.size() != grid.n_points)
        throw GridMismatch("mismatch: potential not sampled on the grid");
    return mismatch_impl(potential, grid, energy, matching_index(potential));
}

int count_nodes(const ArrayXr& psi) {
    const scalar_t floor = 1e-12 * psi.abs().maxCoeff();
    int nodes = 0;
    scalar_t last = 0;
    for (index_t i = 0; i < psi.size(); ++i) {
        const scalar_t p = psi(i);
        if (std::abs(p) <= floor) continue;
        if (last != 0 && p * last < 0) ++nodes;
        last = p;
    }
    return nodes;
}

int count_nodes(const WaveTable& wave) {
    return count_nodes(ArrayXr(wave.values.real()));
}

Spectrum find_bound_states(const PotentialFn& potential, const SolverOptions& options) {
    DomainSetup base = setup_domain(potential, options.domain_half_width,
                                    options.step, options.max_points);
    const scalar_t edge =
        std::max(std::abs(base.v(0)), std::abs(base.v(base.v.size() - 1)));
    if (edge > options.edge_tolerance)
        throw EdgeNotFlat("potential does not vanish at the domain edges");

    Spectrum spectrum;
    const scalar_t vmin = base.v.minCoeff();
    const scalar_t e_min = options.e_min.value_or(vmin + 1e-9);
    const scalar_t e_max = options.e_floor;
    if (!(e_min < e_max) || !(e_max < 0)) return spectrum;

    const auto brackets =
        scan_brackets(base.v, base.grid, e_min, e_max, options.n_scan, base.match);

    struct Found {
        scalar_t energy;
        scalar_t residual;
        scalar_t domain;
        int nodes;
    };
    std::vector<Found> found;

    for (const auto& br : brackets) {
        Root root = bisect(base.v, base.grid, br, options.bisect_tol, base.match);
        scalar_t domain = options.domain_half_width;
        DomainSetup* live = &base;
        DomainSetup extended;
        bool genuine = true;

        for (int round = 0; round < options.max_extensions; ++round) {
            const scalar_t kappa = std::sqrt(-root.energy);
            if (kappa * domain >= options.kappa_margin) break;
            scalar_t want = options.kappa_margin / kappa;
            // Keep the grid within max_points; h may grow, but never so far
            // that the scattering region itself loses resolution.
            scalar_t h = std::max(options.step, 2 * want / scalar_t(options.max_points - 1));
            const scalar_t h_cap = 10 * options.step;
            if (h > h_cap) {
                h = h_cap;
                want = h_cap * scalar_t(options.max_points - 1) / 2;
            }
            if (want <= domain * 1.0001) break;  // cannot grow further
            extended = setup_domain(potential, want, h, options.max_points);
            domain = want;
            live = &extended;

            // Re-bracket near the old root on the honest domain.
            const scalar_t k_lo = std::max(std::sqrt(-e_max), kappa / 3);
            const scalar_t k_hi = std::min(std::sqrt(-e_min), kappa * 3);
            auto local = scan_brackets(live->v, live->grid, -k_hi * k_hi, -k_lo * k_lo,
                                       160, live->match);
            if (local.empty()) {
                genuine = false;  // truncation artifact, gone on the real domain
                break;
            }
            auto closest = std::min_element(
                local.begin(), local.end(), [&](const Bracket& a, const Bracket& b) {
                    return std::abs(0.5 * (a.e_lo + a.e_hi) - root.energy) <
                           std::abs(0.5 * (b.e_lo + b.e_hi) - root.energy);
                });
            root = bisect(live->v, live->grid, *closest, options.bisect_tol, live->match);
        }

        if (!genuine) continue;
        const ArrayXr psi = assemble(live->v, live->grid, root.energy, live->match);
        found.push_back({root.energy, root.residual, domain, count_nodes(psi)});
    }

    std::sort(found.begin(), found.end(),
              [](const Found& a, const Found& b) { return a.energy < b.energy; });
    for (const auto& f : found) {
        if (!spectrum.energies.empty() &&
            std::abs(f.energy - spectrum.energies.back()) <=
                1e-9 * std::max<scalar_t>(1, std::abs(f.energy)))
            continue;  // two brackets converged to the same state
        spectrum.energies.push_back(f.energy);
        spectrum.node_counts.push_back(f.nodes);
        spectrum.diagnostics.push_back({f.domain, f.residual});
    }
    return spectrum;
}

Spectrum find_bound_states(const ArrayXr& values, const Grid& grid,
                           const SolverOptions& options) {
    if (values.size() != grid.n_points)
        throw GridMismatch("find_bound_states: potential not sampled on the grid");
    auto spline = std::make_shared<CubicSpline>(grid.points(), values);
    PotentialFn fn = [spline](scalar_t x) {
        return spline->contains(x) ? (*spline)(x) : 0.0;
    };
    SolverOptions opts = options;
    opts.domain_half_width = std::max(std::abs(grid.x_min), std::abs(grid.x_max));
    opts.step = std::min(opts.step, grid.h());
    return find_bound_states(fn, opts);
}

}  // namespace susyhbs
