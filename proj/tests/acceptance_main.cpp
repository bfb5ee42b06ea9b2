// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Runs on the default grids in well under two minutes.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "susyhbs/area.hpp"
#include "susyhbs/bound_solver.hpp"
#include "susyhbs/delta_model.hpp"
#include "susyhbs/interp.hpp"
#include "susyhbs/numerov.hpp"
#include "susyhbs/partner.hpp"
#include "susyhbs/scattering.hpp"

using namespace susyhbs;

namespace {

const Grid kGrid{-12.0, 12.0, 4801};

int g_failures = 0;

void report(int id, const char* title, bool pass, const std::string& details) {
    if (!pass) ++g_failures;
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", id, title,
                details.empty() ? "" : " -- ", details.c_str());
}

PotentialFn side_potential(Family family, scalar_t offset, Side side, scalar_t factor) {
    const auto ansatz = make_ansatz(family, offset);
    return [ansatz, side, factor](scalar_t x) {
        const auto s = superpotential(ansatz, x);
        const scalar_t v =
            side == Side::Minus ? s.w * s.w - s.w_prime : s.w * s.w + s.w_prime;
        return factor * v;
    };
}

struct FigurePotential {
    const char* name;
    Family family;
    scalar_t offset;
};

const FigurePotential kAll[] = {
    {"2a", Family::Gaussian, 0.5}, {"2b", Family::Gaussian, 1.0},
    {"2c", Family::Gaussian, -2.0}, {"3a", Family::Tanh, 2.0},
    {"3b", Family::Erf, 2.0},      {"3c", Family::XGauss, 2.0},
};

void criterion_1() {
    const struct { scalar_t offset; Side side; scalar_t ref; } cases[] = {
        {0.5, Side::Minus, -0.2432},  {1.0, Side::Minus, -0.07344},
        {-2.0, Side::Minus, -0.3127}, {0.5, Side::Plus, -0.5837},
        {1.0, Side::Plus, -0.2151},   {-2.0, Side::Plus, -0.0924}};
    bool pass = true;
    std::string details;
    for (const auto& c : cases) {
        const auto spectrum =
            find_bound_states(side_potential(Family::Gaussian, c.offset, c.side, -1.0));
        const scalar_t tol = std::max<scalar_t>(2e-3, 0.01 * std::abs(c.ref));
        const bool ok = !spectrum.empty() &&
                        std::abs(spectrum.energies[0] - c.ref) <= tol;
        pass = pass && ok;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%sA=%g,-V%s: %.5g(ref %.5g)", ok ? "" : "!",
                      c.offset, c.side == Side::Minus ? "-" : "+",
                      spectrum.empty() ? 0.0 : spectrum.energies[0], c.ref);
        details += std::string(details.empty() ? "" : " ") + buf;
    }
    report(1, "eigenvalue regression for -V+- (Gaussian family)", pass, details);
}

void criterion_2() {
    bool pass = true;
    std::string offenders;
    for (const auto& f : kAll) {
        for (Side side : {Side::Minus, Side::Plus}) {
            const auto spectrum =
                find_bound_states(side_potential(f.family, f.offset, side, 1.0));
            if (!spectrum.empty()) {
                pass = false;
                offenders += std::string(" ") + f.name + side_name(side);
            }
        }
    }
    report(2, "all twelve partner potentials have empty spectra (floor -1e-9)", pass,
           pass ? "12/12 empty" : "non-empty:" + offenders);
}

void criterion_3() {
    const struct { scalar_t offset, ref; } cases[] = {
        {0.5, 1.38}, {1.0, 0.56}, {-2.0, 0.64}};
    bool pass = true;
    std::string details;
    for (const auto& c : cases) {
        const auto id = w2_identity(make_ansatz(Family::Gaussian, c.offset), kGrid);
        const bool ok = std::abs(id.lhs_minus - c.ref) <= 0.02 &&
                        std::abs(id.lhs_plus - c.ref) <= 0.02 &&
                        std::abs(id.lhs_minus - id.rhs) <= 1e-8 &&
                        std::abs(id.lhs_plus - id.rhs) <= 1e-8;
        pass = pass && ok;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%sA=%g: %.6g(ref %.3g)", ok ? "" : "!",
                      c.offset, id.rhs, c.ref);
        details += std::string(details.empty() ? "" : " ") + buf;
    }
    report(3, "areas of V-, V+ and W^2 agree and match 1.38/0.56/0.64", pass, details);
}

void criterion_4() {
    const auto sm = find_bound_states(side_potential(Family::Gaussian, 0.5, Side::Minus, 1.1));
    const bool ok_minus = sm.size() == 1 && std::abs(sm.energies[0] + 0.01990) <= 5e-4;

    const auto sp = find_bound_states(side_potential(Family::Gaussian, 0.5, Side::Plus, 1.1));
    const bool ok_plus = sp.size() == 1 && std::abs(sp.energies[0] + 0.00063) <= 3e-4 &&
                         sp.diagnostics[0].domain_used > 12.0;

    const auto pair = build_pair(make_ansatz(Family::Gaussian, 0.5), kGrid);
    const scalar_t area = area_integral(scale(pair, Side::Plus, 1.1).values, kGrid);
    const bool ok_area = std::abs(area - 1.52112) <= 0.02;

    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "E0(1.1V-)=%.5g(ref -0.01990) E0(1.1V+)=%.5g(ref -0.00063, L=%g) "
                  "area=%.6g(ref 1.52112)",
                  sm.empty() ? 0.0 : sm.energies[0], sp.empty() ? 0.0 : sp.energies[0],
                  sp.empty() ? 0.0 : sp.diagnostics[0].domain_used, area);
    report(4, "scaled potentials bind shallow states", ok_minus && ok_plus && ok_area,
           buf);
}

void criterion_5() {
    const auto pair = build_pair(make_ansatz(Family::Tanh, 2.0), kGrid);
    const scalar_t g = mirror_point(2.0);
    const CubicSpline vplus(kGrid.points(), pair.v_plus);
    scalar_t worst = 0;
    for (index_t i = 0; i < kGrid.n_points; ++i) {
        const scalar_t gx = g - kGrid.x(i);
        if (gx < kGrid.x_min || gx > kGrid.x_max) continue;
        worst = std::max(worst, std::abs(vplus(gx) - pair.v_minus(i)));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max |V+(g-x) - V-(x)| = %.3g", worst);
    report(5, "tanh mirror identity at g = log((A-1)/(A+1))/2", worst <= 1e-8, buf);
}

void criterion_6() {
    const struct { scalar_t u1; int expect; } cases[] = {{2.0, 2}, {0.5, 0}, {-2.0, 0}};
    bool pass = true;
    std::string details;
    for (const auto& c : cases) {
        const auto hbs = solve_hbs(c.u1, 1.0);
        const auto info = classify_case(c.u1, 1.0);
        const auto spectrum = delta_bound_states(triple_array(hbs));
        const bool ok = info.node_count == c.expect && int(spectrum.size()) == c.expect;
        pass = pass && ok;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%su1=%g: %d nodes/%d states(expect %d)",
                      ok ? "" : "!", c.u1, info.node_count, int(spectrum.size()),
                      c.expect);
        details += std::string(details.empty() ? "" : " ") + buf;
    }
    scalar_t worst_delta = 0;
    for (scalar_t u : {0.5, 1.0, 2.0, 4.0}) {
        const auto s = delta_bound_states(make_delta_array({{0.0, u}}));
        if (s.size() != 1) {
            pass = false;
            continue;
        }
        worst_delta = std::max(worst_delta, std::abs(s.energies[0] + u * u / 4));
    }
    pass = pass && worst_delta <= 1e-10;
    char buf[64];
    std::snprintf(buf, sizeof buf, " single-delta max |E+U^2/4| = %.2g", worst_delta);
    report(6, "triple-delta node counts, spectra and single-delta oracle", pass,
           details + buf);
}

void criterion_7() {
    bool unitary = true, no_sharp = true;
    scalar_t worst_residual = 0;
    std::vector<std::pair<std::string, ScatteringCurve>> curves;
    std::vector<ArrayXr> tables;

    const ArrayXr energies = default_energy_grid();
    for (const auto& f : kAll) {
        const auto pair = build_pair(make_ansatz(f.family, f.offset), kGrid);
        for (Side side : {Side::Minus, Side::Plus}) {
            tables.push_back(pair.side(side));
            auto curve = scan(tables.back(), kGrid, energies);
            for (const auto& p : curve.points)
                worst_residual = std::max(worst_residual, p.unitarity_residual);
            const auto peaks = analyze_t_peaks(tables.back(), kGrid, curve);
            for (const auto& p : peaks)
                if (p.sharp) no_sharp = false;
            curves.emplace_back(std::string(f.name) + side_name(side), std::move(curve));
        }
    }
    unitary = worst_residual <= 1e-6;

    // The quoted reflection values follow the asymmetric-seed cases
    // (a,b,c) = (tanh, erf, xgauss) at A = 2; each window is E* +- 1.
    const struct { const char* tag; scalar_t e_star, r_star; } windows[] = {
        {"3a", 4.7, 0.25e-3}, {"3b", 5.2, 0.16e-3}, {"3c", 15.2, 0.16e-5}};
    bool windows_ok = true, stretch_ok = true;
    std::string details;
    for (const auto& w : windows) {
        scalar_t best_window = 1.0, best_star = 1.0;
        for (std::size_t i = 0; i < curves.size(); ++i) {
            if (curves[i].first.rfind(w.tag, 0) != 0) continue;
            for (const auto& p : curves[i].second.points)
                if (std::abs(p.E - w.e_star) <= 1.0)
                    best_window = std::min(best_window, p.R);
            best_star =
                std::min(best_star, rt_coefficients(tables[i], kGrid, w.e_star).R);
        }
        const scalar_t ratio = best_star / w.r_star;
        if (best_window >= 1e-2) windows_ok = false;
        if (ratio > 10.0 || ratio < 0.1) stretch_ok = false;
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s: minR(E*+-1)=%.3g R(E*)=%.3g ref=%.3g",
                      w.tag, best_window, best_star, w.r_star);
        details += std::string(details.empty() ? "" : "; ") + buf;
    }

    char buf[128];
    std::snprintf(buf, sizeof buf, "max|R+T-1|=%.3g sharp_peaks=%s; ", worst_residual,
                  no_sharp ? "none" : "FOUND");
    report(7, "scattering: unitarity, no sharp T peaks, reflection minima",
           unitary && no_sharp && windows_ok && stretch_ok, buf + details);
}

void criterion_8() {
    // (a) zero-energy residual psi*'' = V- psi*
    scalar_t worst_resid = 0;
    for (const auto& f : kAll) {
        const auto ansatz = make_ansatz(f.family, f.offset);
        const auto pair = build_pair(ansatz, kGrid);
        scalar_t worst = 0, scale = 0;
        for (index_t i = 0; i < kGrid.n_points; ++i) {
            const auto e = eval_state(ansatz, kGrid.x(i));
            worst = std::max(worst, std::abs(e.psi_second - pair.v_minus(i) * e.psi));
            scale = std::max(scale, std::abs(e.psi_second));
        }
        worst_resid = std::max(worst_resid, worst / scale);
    }
    const bool ok_resid = worst_resid <= 1e-10;

    // (b) analytic derivatives vs central differences
    std::mt19937 rng(99);
    std::uniform_real_distribution<scalar_t> pick(-10.0, 10.0);
    bool ok_fd = true;
    for (const auto& f : kAll) {
        const auto a = make_ansatz(f.family, f.offset);
        for (int i = 0; i < 200; ++i) {
            const scalar_t x = pick(rng);
            const auto e = eval_state(a, x);
            const scalar_t h1 = 1e-5, h2 = 3e-4;
            const scalar_t fd1 =
                (eval_state(a, x + h1).psi - eval_state(a, x - h1).psi) / (2 * h1);
            const scalar_t fd2 =
                (eval_state(a, x + h2).psi - 2 * e.psi + eval_state(a, x - h2).psi) /
                (h2 * h2);
            ok_fd = ok_fd &&
                    std::abs(e.psi_prime - fd1) <=
                        std::max<scalar_t>(1e-6 * std::abs(e.psi_prime), 1e-8) &&
                    std::abs(e.psi_second - fd2) <=
                        std::max<scalar_t>(1e-6 * std::abs(e.psi_second), 3e-7);
        }
    }

    // (c) Numerov order: halving h gains >= 14x on the free sine
    auto sine_error = [](scalar_t h) {
        const auto n = index_t(std::llround(10.0 / h)) + 1;
        const Grid g{0.0, 10.0, (n % 2 == 0) ? n + 1 : n};
        const auto wave = integrate(ArrayXr::Zero(g.n_points), g, 1.0,
                                    Direction::Forward, 0.0, std::sin(g.h()));
        scalar_t worst = 0;
        for (index_t i = 0; i < g.n_points; ++i)
            worst = std::max(worst, std::abs(wave.values(i).real() - std::sin(g.x(i))));
        return worst;
    };
    const scalar_t conv = sine_error(0.04) / sine_error(0.02);
    const bool ok_conv = conv >= 14.0;

    // (d) delta node/eigenvalue agreement
    bool ok_delta = true;
    for (auto [u1, expect] : {std::pair{2.0, 2}, {0.5, 0}, {-2.0, 0}}) {
        const auto spectrum = delta_bound_states(triple_array(solve_hbs(u1, 1.0)));
        ok_delta = ok_delta && int(spectrum.size()) == expect &&
                   classify_case(u1, 1.0).node_count == expect;
    }

    // (e) area linearity
    const auto pair = build_pair(make_ansatz(Family::Gaussian, 0.5), kGrid);
    const scalar_t base = area_integral(pair.v_plus, kGrid);
    bool ok_linear = true;
    for (scalar_t c : {1.1, 2.0, 0.37}) {
        const scalar_t scaled = area_integral(ArrayXr(c * pair.v_plus), kGrid);
        ok_linear = ok_linear &&
                    std::abs(scaled - c * base) <=
                        1e-12 * std::max<scalar_t>(1.0, std::abs(c * base));
    }

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "residual=%.2g fd=%s conv=%.1fx delta=%s linear=%s", worst_resid,
                  ok_fd ? "ok" : "FAIL", conv, ok_delta ? "ok" : "FAIL",
                  ok_linear ? "ok" : "FAIL");
    report(8, "property suite", ok_resid && ok_fd && ok_conv && ok_delta && ok_linear,
           buf);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (g_failures == 0) {
        std::printf("all 8 acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures;
}
