#pragma once

#include <array>
#include <optional>

#include "cusplab/report.hpp"
#include "cusplab/specialize.hpp"

namespace cusplab {

using PolyK = MultiPoly<RatFunc>;
using PolyQ = MultiPoly<Rat>;
using PolyP = MultiPoly<Fp>;

RegistryPtr sextic_registry(); // x1..x6
RegistryPtr p3x_registry();    // x0..x3
RegistryPtr p3y_registry();    // y0..y3

// Projective point with the first nonzero coordinate normalized to 1.
template <typename C>
struct ProjPt {
    std::vector<C> coords;

    explicit ProjPt(std::vector<C> v) : coords(std::move(v)) {
        int first = -1;
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!poly_detail::coeff_is_zero(coords[i])) { first = static_cast<int>(i); break; }
        if (first < 0) throw error("projective point with all coordinates zero");
        C lead = coords[static_cast<std::size_t>(first)];
        for (auto& c : coords) c = c / lead;
    }

    bool operator==(const ProjPt& o) const { return coords == o.coords; }
    bool operator!=(const ProjPt& o) const { return !(*this == o); }
};

template <typename C>
std::string str(const ProjPt<C>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i) s += ":";
        s += str(p.coords[i]);
    }
    return s + ")";
}

// ---- the sextic model -------------------------------------------------------

struct SexticSystem {
    PolyK p, q, c;
    std::string note; // records the hyperplane reading (the source prints "x6+x6")
};
SexticSystem sextic_system();

struct CuspPointCheck {
    ProjPt<Rat> point;
    bool on_p, on_q, on_c; // identically in k
    int jacobian_rank;     // of (P,Q,C) at the point, over Q(k)
};
std::vector<CuspPointCheck> nine_cusps();

// A smooth surface point found by exhaustive search over F_p (k reduced mod
// p), as a desk-scale contrast to the rank <= 2 behaviour at the cusps.
struct SmoothProbe {
    std::vector<Fp> point;
    int jacobian_rank; // expected 3
};
SmoothProbe sextic_smooth_probe(const Rat& k, std::uint64_t p);

// ---- projection -------------------------------------------------------------

ProjPt<Rat> projection_center(); // (1:0:0:-1:0:0)
ProjPt<Rat> project_point(const ProjPt<Rat>& x);

struct ProjectedQuartic {
    PolyK computed;  // elimination determinant in the target coordinates
    PolyK displayed; // the equation as printed
    RatFunc scalar;  // computed = scalar * displayed, scalar != 0
    char coords;     // 'x' or 'y'
};
ProjectedQuartic projected_quartic(char coords);
PolyK displayed_quartic_x();
PolyK displayed_quartic_y();

// f_y under y = ((1+k)x0, (1+k)x1, (1-k)x2, (1-k)x3) equals (1-k^2) f_x.
bool xy_consistency();

std::vector<ProjPt<Rat>> eight_points(); // 4 vertices + 4 points on x0+x1+x2+x3 = 0

// ---- singular locus ---------------------------------------------------------

struct SingularityReport {
    std::string label;
    ProjPt<RatFunc> point; // in y-coordinates
    RatFunc f_value;
    std::array<RatFunc, 4> partials;
    bool singular; // all four partials vanish
};
std::vector<SingularityReport> singular_points_symbolic();
SingularityReport control_point_report(); // (1:1:1:1): on the surface, smooth

Report case_identities();

// Exhaustive scan of P^3(F_p); returns the singular points of the projected
// quartic at the given parameter, sorted. threads > 1 shards the big chart
// with a deterministic merge.
std::vector<ProjPt<Fp>> finite_field_singular_scan(const Rat& k, std::uint64_t p,
                                                   int threads = 1);

// ---- exceptional lines and symmetries --------------------------------------

struct ExceptionalLine {
    std::array<PolyK, 2> equations; // two linear forms in x-coordinates
    bool on_surface;                // parametrized line substitutes to zero
};
std::pair<ExceptionalLine, ExceptionalLine> exceptional_lines();
ProjPt<RatFunc> lines_intersection_y(); // (1:1:1:1) in y-coordinates

Report symmetry_check();

// ---- cusp certificates ------------------------------------------------------

enum class CuspFamily { vertex, plane };

struct CuspCertificate {
    CuspFamily family;
    std::optional<Rat> k; // nullopt: generic parameter
    std::string substitution;
    std::vector<Rat> weights; // per chart variable, cubic variable first
    Rat min_weight;
    PolyK weight1;            // the weight-1 part (constants lifted for rational k)
    std::string weight1_text;
    RatFunc cubic_coeff; // a, of the weight-1/3 variable cubed
    RatFunc quad_coeff;  // b, of the product of the two weight-1/2 variables
    std::vector<Rat> exceptional_k; // rational roots of the generic numerators of a, b
    bool sqh;
    std::string note;
};
CuspCertificate cusp_certificate(CuspFamily family, std::optional<Rat> k = std::nullopt);

} // namespace cusplab
