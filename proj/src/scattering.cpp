#include "susyhbs/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

#include "susyhbs/errors.hpp"
#include "susyhbs/numerov.hpp"

namespace susyhbs {

namespace {

constexpr scalar_t kEdgeFlat = 1e-8;
const complex_t kI{0.0, 1.0};

void check_inputs(const ArrayXr& v, const Grid& grid, scalar_t energy) {
    if (v.size() != grid.n_points)
        throw GridMismatch("scattering: potential not sampled on the grid");
    if (!(energy > 0)) throw EnergyNonPositive("scattering needs E > 0");
    if (std::abs(v(0)) > kEdgeFlat || std::abs(v(v.size() - 1)) > kEdgeFlat)
        throw EdgeNotFlat("potential exceeds 1e-8 at a grid edge");
}

/** O(h^4) one-sided derivative at index 0 of the table. */
complex_t edge_derivative_left(const ArrayXc& psi, scalar_t h) {
    return (-25.0 * psi(0) + 48.0 * psi(1) - 36.0 * psi(2) + 16.0 * psi(3) -
            3.0 * psi(4)) /
           (12.0 * h);
}

complex_t edge_derivative_right(const ArrayXc& psi, scalar_t h) {
    const index_t n = psi.size();
    return (25.0 * psi(n - 1) - 48.0 * psi(n - 2) + 36.0 * psi(n - 3) -
            16.0 * psi(n - 4) + 3.0 * psi(n - 5)) /
           (12.0 * h);
}

ScatteringPoint build_point(scalar_t energy, complex_t incident, complex_t reflected) {
    const scalar_t a2 = std::norm(incident);
    ScatteringPoint p;
    p.E = energy;
    p.T = 1.0 / a2;
    p.R = std::norm(reflected) / a2;
    p.unitarity_residual = std::abs(p.R + p.T - 1.0);
    return p;
}

int thread_budget() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* cap = std::getenv("SUSY_HBS_THREADS")) {
        const long want = std::strtol(cap, nullptr, 10);
        if (want >= 1 && (unsigned long)want < n) n = unsigned(want);
    }
    return int(n);
}

scalar_t transmission_at(const ArrayXr& v, const Grid& grid, scalar_t energy) {
    return rt_coefficients(v, grid, energy).T;
}

scalar_t reflection_at(const ArrayXr& v, const Grid& grid, scalar_t energy) {
    return rt_coefficients(v, grid, energy).R;
}

}  // namespace

ScatteringPoint rt_coefficients(const ArrayXr& potential, const Grid& grid,
                                scalar_t energy) {
    check_inputs(potential, grid, energy);
    const scalar_t k = std::sqrt(energy);
    const scalar_t h = grid.h();

    // Transmitted wave e^{ikx} past the right edge, integrated backward.
    const complex_t psi_n = std::exp(kI * k * grid.x_max);
    const complex_t psi_n1 = std::exp(kI * k * (grid.x_max - h));
    const WaveTable wave =
        integrate(potential, grid, energy, Direction::Backward, psi_n, psi_n1);

    const complex_t psi0 = wave.values(0);
    const complex_t dpsi0 = edge_derivative_left(wave.values, h);
    const complex_t phase = std::exp(kI * k * grid.x_min);
    const complex_t incident = 0.5 * (psi0 + dpsi0 / (kI * k)) / phase;
    const complex_t reflected = 0.5 * (psi0 - dpsi0 / (kI * k)) * phase;
    return build_point(energy, incident, reflected);
}

ScatteringPoint rt_coefficients_right(const ArrayXr& potential, const Grid& grid,
                                      scalar_t energy) {
    check_inputs(potential, grid, energy);
    const scalar_t k = std::sqrt(energy);
    const scalar_t h = grid.h();

    // Wave incident from the right: transmitted e^{-ikx} past the left edge.
    const complex_t psi_0 = std::exp(-kI * k * grid.x_min);
    const complex_t psi_1 = std::exp(-kI * k * (grid.x_min + h));
    const WaveTable wave =
        integrate(potential, grid, energy, Direction::Forward, psi_0, psi_1);

    const index_t n = grid.n_points;
    const complex_t psi_end = wave.values(n - 1);
    const complex_t dpsi_end = edge_derivative_right(wave.values, h);
    const complex_t phase = std::exp(-kI * k * grid.x_max);
    const complex_t incident = 0.5 * (psi_end - dpsi_end / (kI * k)) / phase;
    const complex_t reflected = 0.5 * (psi_end + dpsi_end / (kI * k)) * phase;
    return build_point(energy, incident, reflected);
}

ScatteringCurve scan(const ArrayXr& potential, const Grid& grid,
                     const ArrayXr& energies) {
    for (index_t i = 1; i < energies.size(); ++i)
        if (!(energies(i) > energies(i - 1)))
            throw InvalidParams("scan: energies must be strictly ascending");

    ScatteringCurve curve;
    curve.points.resize(energies.size());

    const int n_threads = std::min<int>(thread_budget(), std::max<index_t>(1, energies.size()));
    auto worker = [&](index_t begin, index_t end) {
        for (index_t i = begin; i < end; ++i)
            curve.points[i] = rt_coefficients(potential, grid, energies(i));
    };
    if (n_threads <= 1 || energies.size() < 8) {
        worker(0, energies.size());
    } else {
        std::vector<std::thread> pool;
        const index_t chunk = (energies.size() + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            const index_t b = t * chunk;
            const index_t e = std::min<index_t>(b + chunk, energies.size());
            if (b < e) pool.emplace_back(worker, b, e);
        }
        for (auto& th : pool) th.join();
    }

    for (index_t i = 1; i + 1 < index_t(curve.points.size()); ++i) {
        const auto& p = curve.points[i];
        if (p.T > 0.999 && p.T > curve.points[i - 1].T && p.T >= curve.points[i + 1].T)
            curve.t_peak_candidates.push_back(i);
    }
    return curve;
}

std::vector<RMinimum> find_r_minima(const ArrayXr& potential, const Grid& grid,
                                    const ScatteringCurve& curve, scalar_t de_tol) {
    std::vector<RMinimum> minima;
    const auto& pts = curve.points;
    if (pts.size() < 3) return minima;

    constexpr scalar_t kInvPhi = 0.6180339887498949;
    // Dips must rise above the numerical noise floor of R on both sides;
    // an identically-zero reflection curve has no minima.
    constexpr scalar_t kNoise = 1e-14;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        if (!(pts[i - 1].R > pts[i].R + kNoise && pts[i + 1].R > pts[i].R + kNoise))
            continue;
        scalar_t a = pts[i - 1].E, b = pts[i + 1].E;
        scalar_t x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
        scalar_t f1 = reflection_at(potential, grid, x1);
        scalar_t f2 = reflection_at(potential, grid, x2);
        while (b - a > de_tol) {
            if (f1 < f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - kInvPhi * (b - a);
                f1 = reflection_at(potential, grid, x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + kInvPhi * (b - a);
                f2 = reflection_at(potential, grid, x2);
            }
        }
        const scalar_t e_min = 0.5 * (a + b);
        minima.push_back({e_min, reflection_at(potential, grid, e_min)});
    }
    return minima;
}

std::vector<TPeak> analyze_t_peaks(const ArrayXr& potential, const Grid& grid,
                                   const ScatteringCurve& curve, scalar_t threshold,
                                   scalar_t sharp_half_width) {
    std::vector<TPeak> peaks;
    const auto& pts = curve.points;

    auto crossing = [&](scalar_t inside, scalar_t outside) {
        // T(inside) >= threshold > T(outside); bisect the crossing.
        scalar_t a = inside, b = outside;
        for (int it = 0; it < 60 && std::abs(b - a) > 1e-6 * (1 + std::abs(a)); ++it) {
            const scalar_t m = 0.5 * (a + b);
            (transmission_at(potential, grid, m) >= threshold ? a : b) = m;
        }
        return 0.5 * (a + b);
    };

    for (index_t idx : curve.t_peak_candidates) {
        const scalar_t e_peak = pts[idx].E;
        // Walk the sampled curve outward until T drops below threshold.
        scalar_t left = pts.front().E;
        bool left_open = true;
        for (index_t j = idx; j-- > 0;) {
            if (pts[j].T < threshold) {
                left = crossing(pts[j + 1].E, pts[j].E);
                left_open = false;
                break;
            }
        }
        scalar_t right = pts.back().E;
        bool right_open = true;
        for (std::size_t j = idx + 1; j < pts.size(); ++j) {
            if (pts[j].T < threshold) {
                right = crossing(pts[j - 1].E, pts[j].E);
                right_open = false;
                break;
            }
        }
        TPeak peak;
        peak.E = e_peak;
        peak.T = pts[idx].T;
        peak.half_width = 0.5 * (right - left);
        // An interval running off the scan window is at least that wide.
        peak.sharp = !left_open && !right_open && peak.half_width < sharp_half_width;
        peaks.push_back(peak);
    }
    return peaks;
}

ArrayXr log_spaced_energies(scalar_t e_lo, scalar_t e_hi, index_t n) {
    if (!(e_lo > 0) || !(e_hi > e_lo) || n < 2)
        throw InvalidParams("log_spaced_energies: need 0 < e_lo < e_hi, n >= 2");
    ArrayXr e(n);
    const scalar_t ratio = std::log(e_hi / e_lo);
    for (index_t i = 0; i < n; ++i)
        e(i) = e_lo * std::exp(ratio * scalar_t(i) / scalar_t(n - 1));
    e(n - 1) = e_hi;
    return e;
}

ArrayXr default_energy_grid() { return log_spaced_energies(1e-3, 20.0, 400); }

}  // namespace susyhbs
