#pragma once

#include <vector>

#include "cusplab/gaussian.hpp"
#include "cusplab/matrix.hpp"

namespace cusplab {

// Period relations B(w,w) = 0 and B(w, conj w) > 0 for a symmetric rational
// form B, everything in exact Gaussian-rational arithmetic.
struct PeriodRelations {
    GaussQ selfpair;  // B(w, w)
    Rat hermitian;    // B(w, conj w); real because B is symmetric
    bool valid;       // selfpair == 0 and hermitian > 0
};
PeriodRelations period_relations(const std::vector<GaussQ>& omega, const RatMat& form);

// x1^2 + x2^2 - x3 x4 and x1^2 - x2 x3 as symmetric matrices.
RatMat adapted_form_4();
RatMat adapted_form_3();

// Splits a 2-form with w ^ w = 0 into covectors z1 ^ z2; coordinates are in
// the wedge basis (e1^e2, e1^e3, e1^e4, e2^e3, e2^e4, e3^e4).
std::pair<std::vector<GaussQ>, std::vector<GaussQ>>
decompose_two_form(const std::vector<GaussQ>& w);

std::vector<GaussQ> wedge_of_covectors(const std::vector<GaussQ>& z1,
                                       const std::vector<GaussQ>& z2);

// The adapted chart of the polarized period curve: w = (c1, c1^2, 1) on the
// quadric x1^2 - x2 x3 = 0.
enum class HalfPlane { upper, lower };
HalfPlane omega_alpha_component(const GaussQ& c1);
std::vector<GaussQ> omega_alpha_point(const GaussQ& c1);

} // namespace cusplab
