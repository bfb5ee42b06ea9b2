#pragma once

#include <string>

#include "susyhbs/ansatz.hpp"
#include "susyhbs/types.hpp"

namespace susyhbs {

enum class Side { Minus, Plus };

const char* side_name(Side s);
Side side_from_name(const std::string& name);

/** Sampled partner tables V-+ = W^2 -+ W' on a shared grid, built from
 *  analytic W and W' so the zero-energy relation psi*'' = V- psi* holds
 *  to quadrature-free accuracy. */
struct PartnerPair {
    Grid grid;
    ArrayXr w;
    ArrayXr w_prime;
    ArrayXr v_minus;
    ArrayXr v_plus;
    HbsAnsatz ansatz_meta;

    const ArrayXr& side(Side s) const { return s == Side::Minus ? v_minus : v_plus; }
};

struct ScaledPotential {
    Side base;
    scalar_t c;
    Grid grid;
    ArrayXr values;
};

PartnerPair build_pair(const HbsAnsatz& ansatz, const Grid& grid);

/** Closed forms for the Tanh family:
 *    V+ = 2 sech^2(x) (1 + A tanh x) / (A + tanh x)^2
 *    V- = -2 sech^2(x) tanh x / (A + tanh x)
 *  Requires |offset| > 1. */
std::pair<scalar_t, scalar_t> tanh_closed_form(scalar_t offset, scalar_t x);

/** g = log((A-1)/(A+1))/2, the point with V+(g) = 0 and the mirror
 *  centre of the exact identity V+(g - x) = V-(x). */
scalar_t mirror_point(scalar_t offset);

ScaledPotential scale(const PartnerPair& pair, Side side, scalar_t c);

}  // namespace susyhbs
