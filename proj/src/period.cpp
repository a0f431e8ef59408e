#include "cusplab/period.hpp"

namespace cusplab {

namespace {

GaussQ pair_with(const std::vector<GaussQ>& a, const RatMat& form, const std::vector<GaussQ>& b) {
    GaussQ acc;
    for (int i = 0; i < form.rows(); ++i)
        for (int j = 0; j < form.cols(); ++j)
            acc += a[static_cast<std::size_t>(i)] * GaussQ(form(i, j)) * b[static_cast<std::size_t>(j)];
    return acc;
}

} // namespace

PeriodRelations period_relations(const std::vector<GaussQ>& omega, const RatMat& form) {
    if (!form.is_square() || static_cast<int>(omega.size()) != form.rows())
        throw error("period vector length must match the form");
    for (int i = 0; i < form.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (form(i, j) != form(j, i)) throw error("form must be symmetric");
    if (det(form) == 0) throw degenerate_error("form must be nondegenerate");

    std::vector<GaussQ> conj(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i) conj[i] = omega[i].conj();
    GaussQ self = pair_with(omega, form, omega);
    GaussQ herm = pair_with(omega, form, conj);
    if (herm.im != 0) throw error("B(w, conj w) must be real for symmetric B");
    return PeriodRelations{self, herm.re, self.is_zero() && herm.re > 0};
}

RatMat adapted_form_4() {
    RatMat b(4, 4);
    b(0, 0) = Rat(1);
    b(1, 1) = Rat(1);
    b(2, 3) = make_rat(-1, 2);
    b(3, 2) = make_rat(-1, 2);
    return b;
}

RatMat adapted_form_3() {
    RatMat b(3, 3);
    b(0, 0) = Rat(1);
    b(1, 2) = make_rat(-1, 2);
    b(2, 1) = make_rat(-1, 2);
    return b;
}

namespace {

const int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

Mat<GaussQ> antisym_of(const std::vector<GaussQ>& w) {
    Mat<GaussQ> a(4, 4);
    for (int t = 0; t < 6; ++t) {
        a(kPairs[t][0], kPairs[t][1]) = w[static_cast<std::size_t>(t)];
        a(kPairs[t][1], kPairs[t][0]) = -w[static_cast<std::size_t>(t)];
    }
    return a;
}

} // namespace

std::vector<GaussQ> wedge_of_covectors(const std::vector<GaussQ>& z1,
                                       const std::vector<GaussQ>& z2) {
    if (z1.size() != 4 || z2.size() != 4) throw error("covectors have 4 coordinates");
    std::vector<GaussQ> w(6);
    for (int t = 0; t < 6; ++t) {
        int i = kPairs[t][0], j = kPairs[t][1];
        w[static_cast<std::size_t>(t)] =
            z1[static_cast<std::size_t>(i)] * z2[static_cast<std::size_t>(j)] -
            z1[static_cast<std::size_t>(j)] * z2[static_cast<std::size_t>(i)];
    }
    return w;
}

std::pair<std::vector<GaussQ>, std::vector<GaussQ>>
decompose_two_form(const std::vector<GaussQ>& w) {
    if (w.size() != 6) throw error("two-forms have 6 wedge coordinates");
    bool zero = true;
    for (const auto& c : w)
        if (!c.is_zero()) zero = false;
    if (zero) throw zero_form_error("cannot decompose the zero form");
    // Pluecker: w ^ w = 2 (w12 w34 - w13 w24 + w14 w23) e1234
    GaussQ pluecker = w[0] * w[5] - w[1] * w[4] + w[2] * w[3];
    if (!pluecker.is_zero())
        throw not_decomposable_error("w ^ w != 0: the form is not decomposable");

    Mat<GaussQ> a = antisym_of(w);
    // find v, u with a(v) != 0 and w(v, u) != 0; then for the rank-2
    // antisymmetric a:  a = (x y^T - y x^T) / w(v,u), x = a v, y = a u
    int vi = -1;
    for (int j = 0; j < 4 && vi < 0; ++j)
        for (int i = 0; i < 4; ++i)
            if (!a(i, j).is_zero()) { vi = j; break; }
    std::vector<GaussQ> x(4), y(4);
    for (int i = 0; i < 4; ++i) x[static_cast<std::size_t>(i)] = a(i, vi);
    int ui = -1;
    for (int i = 0; i < 4; ++i)
        if (!a(i, vi).is_zero()) { ui = i; break; } // w(u, v) = a(u, v)... pick u = e_ui
    GaussQ lambda = -a(ui, vi); // w(v, u) = -w(u, v)
    for (int i = 0; i < 4; ++i) y[static_cast<std::size_t>(i)] = a(i, ui) / lambda;

    std::vector<GaussQ> z1 = x, z2 = y;
    if (wedge_of_covectors(z1, z2) != w)
        throw not_decomposable_error("re-expansion check failed");
    return {z1, z2};
}

std::vector<GaussQ> omega_alpha_point(const GaussQ& c1) {
    return {c1, c1 * c1, GaussQ(Rat(1))};
}

HalfPlane omega_alpha_component(const GaussQ& c1) {
    if (c1.im == 0)
        throw not_in_domain_error("Im(c1) = 0: the period degenerates (real locus)");
    PeriodRelations rel = period_relations(omega_alpha_point(c1), adapted_form_3());
    if (!rel.valid) throw error("adapted chart violates the period relations");
    return sgn(c1.im) > 0 ? HalfPlane::upper : HalfPlane::lower;
}

} // namespace cusplab
