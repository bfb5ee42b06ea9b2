#pragma once

#include <functional>
#include <optional>

#include "susyhbs/numerov.hpp"
#include "susyhbs/spectrum.hpp"
#include "susyhbs/types.hpp"

namespace susyhbs {

using PotentialFn = std::function<scalar_t(scalar_t)>;

struct SolverOptions {
    scalar_t domain_half_width = 12.0;
    scalar_t step = 5e-3;
    /** Scan window: [e_min (default min V + 1e-9), e_floor]. States
     *  shallower than e_floor are indistinguishable from the continuum. */
    std::optional<scalar_t> e_min;
    scalar_t e_floor = -1e-9;
    int n_scan = 400;
    scalar_t bisect_tol = 1e-10;
    /** Shallow states are recomputed on [-L, L] with L = kappa_margin / kappa
     *  so the decaying boundary condition is honest; h grows as needed to
     *  keep the grid within max_points. */
    scalar_t kappa_margin = 10.0;
    index_t max_points = 199999;
    int max_extensions = 6;
    scalar_t edge_tolerance = 1e-6;
};

/** Two-sided shooting with Wronskian matching at the potential minimum:
 *  trial energies bracket sign changes of the scaled mismatch, bisection
 *  refines each root, and near-threshold roots trigger automatic domain
 *  extension. An empty spectrum is a valid result. */
Spectrum find_bound_states(const PotentialFn& potential,
                           const SolverOptions& options = {});

/** Same, for a sampled potential (cubic interpolation inside the grid,
 *  zero outside, which is consistent with the vanishing-edge precondition). */
Spectrum find_bound_states(const ArrayXr& values, const Grid& grid,
                           const SolverOptions& options = {});

/** Scaled Wronskian mismatch (psiL' psiR - psiL psiR') / (|psiL psiR| kappa)
 *  at the matching point; its zeros in E are the eigenvalues. */
scalar_t mismatch(const ArrayXr& potential, const Grid& grid, scalar_t energy);

/** Strict sign changes, ignoring samples below 1e-12 * max|psi|. */
int count_nodes(const ArrayXr& psi);
int count_nodes(const WaveTable& wave);

}  // namespace susyhbs
