#include <cmath>

#include "doctest.h"
#include "susyhbs/area.hpp"
#include "susyhbs/bound_solver.hpp"
#include "susyhbs/partner.hpp"

using namespace susyhbs;

namespace {

const Grid kDefaultGrid{-12.0, 12.0, 4801};

HbsAnsatz constant_ansatz(scalar_t offset) {
    const ArrayXr x = ArrayXr::LinSpaced(53, -13.0, 13.0);
    const ArrayXr zero = ArrayXr::Zero(53);
    return make_tabulated(offset, x, zero, zero, zero);
}

}  // namespace

TEST_CASE("Simpson quadrature basics") {
    const Grid g{0.0, M_PI, 201};
    ArrayXr v(g.n_points);
    for (index_t i = 0; i < g.n_points; ++i) v(i) = std::sin(g.x(i));
    CHECK(area_integral(v, g) == doctest::Approx(2.0).epsilon(1e-9));

    CHECK(area_integral(ArrayXr::Zero(g.n_points), g) == 0.0);
    CHECK_THROWS_AS(area_integral(ArrayXr::Zero(99), g), GridMismatch);
}

TEST_CASE("partner areas match the quadrature reference values") {
    // References from adaptive quadrature of the analytic W^2.
    const struct { scalar_t offset, area; } cases[] = {
        {0.5, 1.382839}, {1.0, 0.568066}, {-2.0, 0.642655}};
    for (const auto& c : cases) {
        const auto pair = build_pair(make_ansatz(Family::Gaussian, c.offset), kDefaultGrid);
        CHECK(std::abs(area_integral(pair.v_minus, kDefaultGrid) - c.area) <= 2e-5);
        CHECK(std::abs(area_integral(pair.v_plus, kDefaultGrid) - c.area) <= 2e-5);
        CHECK(std::abs(area_integral(ArrayXr(-pair.v_plus), kDefaultGrid) + c.area) <= 2e-5);
    }
}

TEST_CASE("w2 identity holds for every built-in nodeless seed") {
    for (auto [family, offset] : {std::pair{Family::Gaussian, 0.5},
                                  {Family::Gaussian, 1.0},
                                  {Family::Gaussian, -2.0},
                                  {Family::Tanh, 2.0},
                                  {Family::Erf, 2.0},
                                  {Family::XGauss, 2.0}}) {
        const auto id = w2_identity(make_ansatz(family, offset), kDefaultGrid);
        CHECK(std::abs(id.lhs_minus - id.rhs) <= 1e-8);
        CHECK(std::abs(id.lhs_plus - id.rhs) <= 1e-8);
    }

    const auto flat = w2_identity(constant_ansatz(1.0), kDefaultGrid);
    CHECK(flat.lhs_minus == doctest::Approx(0.0));
    CHECK(flat.lhs_plus == doctest::Approx(0.0));
    CHECK(flat.rhs == doctest::Approx(0.0));
}

TEST_CASE("w2 identity refuses undecayed boundaries") {
    const Grid short_grid{-2.0, 2.0, 801};
    CHECK_THROWS_AS(w2_identity(make_ansatz(Family::Tanh, 2.0), short_grid),
                    BoundaryNotDecayed);
}

TEST_CASE("area scales linearly") {
    const auto pair = build_pair(make_ansatz(Family::Gaussian, 0.5), kDefaultGrid);
    const scalar_t base = area_integral(pair.v_plus, kDefaultGrid);
    for (scalar_t c : {1.1, 2.0, 0.37}) {
        const auto scaled = scale(pair, Side::Plus, c);
        CHECK(std::abs(area_integral(scaled.values, kDefaultGrid) - c * base) <=
              1e-12 * std::max<scalar_t>(1.0, std::abs(c * base)));
    }
}

TEST_CASE("simon_classify predictions") {
    const auto pair = build_pair(make_ansatz(Family::Gaussian, 0.5), kDefaultGrid);

    const auto neg = simon_classify(ArrayXr(-pair.v_minus), kDefaultGrid);
    CHECK(neg.I == doctest::Approx(-1.382839).epsilon(1e-4));
    CHECK(neg.sign == AreaSign::Negative);
    CHECK(neg.prediction == BoundPrediction::AtLeastOneBoundState);
    CHECK(neg.I_weighted > 0.0);

    const auto pos = simon_classify(pair.v_plus, kDefaultGrid);
    CHECK(pos.sign == AreaSign::Positive);
    CHECK(pos.prediction == BoundPrediction::NoUnconditionalGuarantee);

    const auto zero = simon_classify(ArrayXr::Zero(kDefaultGrid.n_points), kDefaultGrid);
    CHECK(zero.sign == AreaSign::Zero);
    CHECK(zero.prediction == BoundPrediction::NoUnconditionalGuarantee);

    // positive area, yet the scaled well binds: the guarantee is one-sided
    const auto scaled = scale(pair, Side::Plus, 1.1);
    const auto rep = simon_classify(scaled.values, kDefaultGrid);
    CHECK(std::abs(rep.I - 1.5211229) <= 1e-4);
    CHECK(rep.prediction == BoundPrediction::NoUnconditionalGuarantee);
    const auto spectrum = find_bound_states(scaled.values, kDefaultGrid);
    CHECK(spectrum.size() == 1);
}

TEST_CASE("negative-area prediction is confirmed by the solver") {
    const auto pair = build_pair(make_ansatz(Family::Gaussian, 0.5), kDefaultGrid);
    const ArrayXr neg_vplus = -pair.v_plus;
    REQUIRE(simon_classify(neg_vplus, kDefaultGrid).prediction ==
            BoundPrediction::AtLeastOneBoundState);
    CHECK(find_bound_states(neg_vplus, kDefaultGrid).size() >= 1);
}
