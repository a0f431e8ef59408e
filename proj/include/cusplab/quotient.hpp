#pragma once

#include "cusplab/lattice.hpp"
#include "cusplab/report.hpp"

namespace cusplab {

// Discriminant bookkeeping for the cusp-resolution lattice I inside the K3
// lattice: only the constants enter the computation; the rank-18 lattice
// itself is never materialized.
struct CuspLatticeConstants {
    Int d_i;       // 3^9
    Int index;     // |Ibar / I| = 3^3
    Int d_ibar;    // d_i / index^2 = 3^3
    Int d_lx;      // -d_ibar = -27
    int rank_i;    // 18
    int rank_lx;   // 22 - 18 = 4
};
CuspLatticeConstants cusp_lattice_constants();

// The rank-4 complement lattice in the basis xi1..xi4.
GramLattice lx_gram();

// Gram-level content of the pushforward/pullback isomorphisms:
//   (a) 3 * dual gram of L_A equals the L_X gram entrywise,
//   (b) pairing scaling by 3 under the coordinate model of q_* and q^*,
//   (c) 3^4 * d(dual L_A) = -3^3 = d(L_X), plus the composite q_* q^* = 3.
Report verify_pushforward_iso();

} // namespace cusplab
