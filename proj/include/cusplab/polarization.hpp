#pragma once

#include <array>
#include <set>

#include "cusplab/lattice.hpp"

namespace cusplab {

// Self-intersection of n1 xi1 + ... + n4 xi4 in the closed form
// 6 n1 n2 + 6 (n3^2 + n3 n4) + 2 n4^2, cross-checked against the gram form.
Int self_intersection(const std::vector<Int>& n);

// Residues attained by the L_X form mod 6 over all 6^4 residue vectors;
// exactly {0, 2}.
std::set<int> classify_mod6();

// Paper recipe: d = 0 mod 6 -> (1, d/6, 0, 0); d = 2 mod 6 -> (1, (d-2)/6, 0, 1).
// Throws NotRepresentable otherwise (in particular for d = 4, the quartic).
std::vector<Int> construct_polarization(const Int& d);

// Norm in the invariant lattice (gamma basis).
Rat la_norm(const std::vector<Int>& v);

// A vector of L_A is primitive in the dual iff its coordinates in the dual
// basis g1, g2, g3, (g3+g4)/3 have gcd 1.
bool is_primitive_in_dual(const std::vector<Int>& v);
std::vector<Int> dual_coordinates(const std::vector<Int>& v);

// All integer solutions of 12 n^2 - 2 (kk^2 - kk*ll + ll^2) = 0 in the box;
// expected: only (0,0,0).
std::vector<std::array<Int, 3>> elliptic_search(const Int& bound);

// Desk-scale rendering of the infinite descent that excludes -12 n^2 from
// the complement lattice.
struct DescentCertificate {
    Int max_n;
    struct ResidueRow {
        int n_mod3, l_mod3;
        int lhs_mod3; // 8 n^2 - l^2 mod 3
        bool feasible;
    };
    std::vector<ResidueRow> residue_table;
    bool residue_forces_divisibility; // only (0,0) is feasible mod 3
    struct Reduction {
        Int n, l;       // 3 | n and 3 | l
        Int n3, l3;     // the reduced pair (n/3, l/3)
    };
    std::vector<Reduction> reductions;
    long squares_found; // perfect squares 24 n^2 - 3 l^2 in range; expect 0
    bool pass;
};
DescentCertificate descent_check(const Int& max_n);

} // namespace cusplab
