#pragma once

#include <vector>

#include "susyhbs/types.hpp"

namespace susyhbs {

struct BoundStateDiagnostics {
    scalar_t domain_used = 0.0;       // half-width L of the final domain (0: analytic)
    scalar_t mismatch_residual = 0.0; // |matching function| at the converged root
};

/** Bound-state energies sorted ascending with node counts 0,1,2,... */
struct Spectrum {
    std::vector<scalar_t> energies;
    std::vector<int> node_counts;
    std::vector<BoundStateDiagnostics> diagnostics;

    bool empty() const { return energies.empty(); }
    std::size_t size() const { return energies.size(); }
};

}  // namespace susyhbs
