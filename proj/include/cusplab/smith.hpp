#pragma once

#include "cusplab/matrix.hpp"

namespace cusplab {

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SmithResult {
    IntMat u, d, v;
    std::vector<Int> divisors() const {
        std::vector<Int> ds;
        int n = std::min(d.rows(), d.cols());
        for (int i = 0; i < n; ++i)
            if (d(i, i) != 0) ds.push_back(d(i, i));
        return ds;
    }
};

SmithResult smith_normal_form(const IntMat& m);

// Columns of b span a finite-index sublattice of its saturation; returns a
// basis (columns) of the saturation. Throws RankDeficient unless b has full
// column rank.
IntMat saturate(const IntMat& b);

// (all Smith divisors are 1, the divisors)
std::pair<bool, std::vector<Int>> primitivity(const IntMat& b);

// Saturated basis (columns) of the integer kernel of m.
IntMat integer_kernel(const IntMat& m);

// Canonical basis of the lattice spanned by the columns: upper-triangular
// column-style Hermite form, positive pivots, entries right of a pivot
// reduced into [0, pivot). Unique per lattice, so it doubles as a lattice
// equality test.
IntMat hnf_upper_cols(const IntMat& a);

inline bool same_column_lattice(const IntMat& a, const IntMat& b) {
    return hnf_upper_cols(a) == hnf_upper_cols(b);
}

} // namespace cusplab
