#pragma once

#include <limits>
#include <vector>

#include "susyhbs/spectrum.hpp"
#include "susyhbs/types.hpp"

namespace susyhbs {

/** One term -strength * delta(x - position); strength > 0 is a well. */
struct DeltaSpike {
    scalar_t position;
    scalar_t strength;
};

struct DeltaArray {
    std::vector<DeltaSpike> deltas;  // positions strictly increasing
};

DeltaArray make_delta_array(std::vector<DeltaSpike> deltas);

/** Zero-energy solution of the triple well -u1 d(x+a) -u2 d(x) -u1 d(x-a):
 *  constant A outside, Bx+C on [-a,0), Dx+F on [0,a), with A = 1 and the
 *  closure constraint u2 = 2 u1 / (u1 a - 1). */
struct DeltaHbs {
    scalar_t u1, u2, a;
    scalar_t A, B, C, D, F;
};

enum class DeltaCase {
    ThreeWells,     // u1 a > 1: wells everywhere, HBS has two nodes
    CentreBarrier,  // 0 < u1 a < 1: wells at +-a, barrier at 0, nodeless
    SideBarriers,   // u1 a < 0: barriers at +-a, well at 0, nodeless
};

const char* delta_case_name(DeltaCase c);

struct CaseInfo {
    DeltaCase label;
    int node_count;
};

DeltaHbs solve_hbs(scalar_t u1, scalar_t a);

scalar_t eval_delta_hbs(const DeltaHbs& hbs, scalar_t x);

CaseInfo classify_case(scalar_t u1, scalar_t a);

/** The (u1, u2, u1) array at (-a, 0, a) realizing the DeltaHbs. */
DeltaArray triple_array(const DeltaHbs& hbs);

struct DeltaSolverOptions {
    /** Lower edge of the energy window; NaN picks -(sum of well
     *  strengths)^2/4 - 1, below any possible state. */
    scalar_t e_lo = std::numeric_limits<scalar_t>::quiet_NaN();
    scalar_t e_eps = 1e-9;
    int n_scan = 400;
    scalar_t kappa_tol = 1e-12;
};

/** Transfer-matrix bound states: propagate (psi, psi') = e^{kappa x}
 *  across the spikes and root-find the growing-exponential coefficient
 *  on the right over log-spaced trial kappa. */
Spectrum delta_bound_states(const DeltaArray& array,
                            const DeltaSolverOptions& options = {});

/** Growing-exponential coefficient whose kappa-roots are the eigenvalues
 *  (exposed for tests and diagnostics). */
scalar_t delta_outgoing_coefficient(const DeltaArray& array, scalar_t kappa);

}  // namespace susyhbs
