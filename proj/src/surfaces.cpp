#include "cusplab/surfaces.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "cusplab/matrix.hpp"
#include "cusplab/poly_parse.hpp"

namespace cusplab {

RegistryPtr sextic_registry() {
    static RegistryPtr r = make_registry({"x1", "x2", "x3", "x4", "x5", "x6"});
    return r;
}
RegistryPtr p3x_registry() {
    static RegistryPtr r = make_registry({"x0", "x1", "x2", "x3"});
    return r;
}
RegistryPtr p3y_registry() {
    static RegistryPtr r = make_registry({"y0", "y1", "y2", "y3"});
    return r;
}

namespace {

PolyK parse_k(const std::string& text, RegistryPtr reg) {
    return parse_poly<RatFunc>(text, std::move(reg));
}

std::vector<Rat> rvec(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::vector<RatFunc> lift_point(const ProjPt<Rat>& p) {
    std::vector<RatFunc> v;
    for (const auto& c : p.coords) v.emplace_back(c);
    return v;
}

// exact division by var^e; every term must carry the factor
PolyK divide_by_var(const PolyK& f, const std::string& var, int e) {
    int idx = f.registry()->index_of(var);
    PolyK r(f.registry());
    for (const auto& [expo, c] : f.terms()) {
        if (expo[idx] < e) throw error("polynomial is not divisible by " + var + "^" + std::to_string(e));
        Expo e2 = expo;
        e2[idx] -= e;
        r.add_term(e2, c);
    }
    return r;
}

} // namespace

SexticSystem sextic_system() {
    SexticSystem s;
    auto reg = sextic_registry();
    s.p = parse_k("x1+x2+x3+x4+x5+x6", reg);
    s.q = parse_k("(1+k)*(x1*x2+x1*x3+x2*x3) + (1-k)*(x4*x5+x4*x6+x5*x6)", reg);
    s.c = parse_k("(1+k)^2*x1*x2*x3 + (1-k)^2*x4*x5*x6", reg);
    s.note = "hyperplane read as x1+...+x6 (the source displays the evident typo \"x6+x6\")";
    return s;
}

std::vector<CuspPointCheck> nine_cusps() {
    SexticSystem s = sextic_system();
    auto reg = s.p.registry();
    std::vector<CuspPointCheck> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) {
            std::vector<Rat> coords(6, Rat(0));
            coords[static_cast<std::size_t>(i)] = Rat(1);
            coords[static_cast<std::size_t>(j)] = Rat(-1);
            ProjPt<Rat> pt(coords);
            std::vector<RatFunc> lifted = lift_point(pt);
            CuspPointCheck chk{pt, s.p.eval(lifted).is_zero(), s.q.eval(lifted).is_zero(),
                               s.c.eval(lifted).is_zero(), 0};
            Mat<RatFunc> jac(3, 6);
            const PolyK* eqs[3] = {&s.p, &s.q, &s.c};
            for (int r = 0; r < 3; ++r)
                for (int cidx = 0; cidx < 6; ++cidx)
                    jac(r, cidx) = eqs[r]->partial(reg->name(cidx)).eval(lifted);
            chk.jacobian_rank = rank_field(jac);
            out.push_back(std::move(chk));
        }
    return out;
}

SmoothProbe sextic_smooth_probe(const Rat& k, std::uint64_t p) {
    SexticSystem s = sextic_system();
    PolyP pp = specialize_k_mod(s.p, k, p);
    PolyP qp = specialize_k_mod(s.q, k, p);
    PolyP cp = specialize_k_mod(s.c, k, p);
    auto reg = sextic_registry();

    for (std::uint64_t x4 = 1; x4 < p; ++x4)
        for (std::uint64_t x5 = 1; x5 < p; ++x5)
            for (std::uint64_t x2 = 0; x2 < p; ++x2)
                for (std::uint64_t x3 = 0; x3 < p; ++x3) {
                    // chart x6 = 1; the hyperplane fixes x1
                    Fp x1 = -(Fp(x2, p) + Fp(x3, p) + Fp(x4, p) + Fp(x5, p) + Fp(1, p));
                    std::vector<Fp> pt = {x1,        Fp(x2, p), Fp(x3, p),
                                          Fp(x4, p), Fp(x5, p), Fp(1, p)};
                    if (!qp.eval(pt).is_zero() || !cp.eval(pt).is_zero()) continue;
                    Mat<Fp> jac(3, 6);
                    const PolyP* eqs[3] = {&pp, &qp, &cp};
                    for (int r = 0; r < 3; ++r)
                        for (int cidx = 0; cidx < 6; ++cidx)
                            jac(r, cidx) = eqs[r]->partial(reg->name(cidx)).eval(pt);
                    int rank = rank_field(jac);
                    if (rank == 3) return SmoothProbe{pt, rank};
                }
    throw error("no smooth sample point found (unexpected)");
}

ProjPt<Rat> projection_center() {
    return ProjPt<Rat>(rvec({1, 0, 0, -1, 0, 0}));
}

ProjPt<Rat> project_point(const ProjPt<Rat>& x) {
    if (x.coords.size() != 6) throw error("expected a point of P^5");
    if (x == projection_center())
        throw center_of_projection_error("the center has no image");
    std::vector<Rat> image = {x.coords[1], x.coords[2], x.coords[4], x.coords[5]};
    bool zero = true;
    for (const auto& c : image)
        if (c != 0) zero = false;
    if (zero)
        throw indeterminate_point_error("point lies on the line through the center");
    return ProjPt<Rat>(image);
}

PolyK displayed_quartic_x() {
    static PolyK f = parse_k(
        "(1+k)^3*x0^2*x1^2 + 2*k*(1-k^2)*x0*x1*x2*x3 - (1-k)^3*x2^2*x3^2"
        " + (1-k^2)*(x0+x1+x2+x3)*((1-k)*x2*x3*(x0+x1) - (1+k)*x0*x1*(x2+x3))",
        p3x_registry());
    return f;
}

PolyK displayed_quartic_y() {
    static PolyK f = parse_k(
        "(1-k)*y0^2*y1^2 + 2*k*y0*y1*y2*y3 - (1+k)*y2^2*y3^2"
        " + ((1-k)*(y0+y1)+(1+k)*(y2+y3))*((y0+y1)*y2*y3-(y2+y3)*y0*y1)",
        p3y_registry());
    return f;
}

namespace {

// Elimination of (lam:mu) from Q and C restricted to the projection rays.
PolyK eliminated_quartic_x() {
    SexticSystem s = sextic_system();
    auto ray_reg = make_registry({"lam", "mu", "x2", "x3", "x5", "x6"});
    PolyK sigma = parse_k("(0-1)*(x2+x3+x5+x6)/2", ray_reg);
    PolyK lam = PolyK::variable(ray_reg, "lam");
    PolyK mu = PolyK::variable(ray_reg, "mu");

    std::map<std::string, PolyK> ray;
    ray["x1"] = lam + mu * sigma;
    ray["x2"] = mu * PolyK::variable(ray_reg, "x2");
    ray["x3"] = mu * PolyK::variable(ray_reg, "x3");
    ray["x4"] = -lam + mu * sigma;
    ray["x5"] = mu * PolyK::variable(ray_reg, "x5");
    ray["x6"] = mu * PolyK::variable(ray_reg, "x6");

    PolyK q_ray = divide_by_var(s.q.substitute(ray, ray_reg), "mu", 1);
    PolyK c_ray = divide_by_var(s.c.substitute(ray, ray_reg), "mu", 2);
    PolyK det = eliminate_pair(q_ray, c_ray, "lam", "mu");

    // rename the surviving coordinates (x2, x3, x5, x6) -> (x0, x1, x2, x3)
    auto p3 = p3x_registry();
    std::map<std::string, PolyK> rename;
    rename["x2"] = PolyK::variable(p3, "x0");
    rename["x3"] = PolyK::variable(p3, "x1");
    rename["x5"] = PolyK::variable(p3, "x2");
    rename["x6"] = PolyK::variable(p3, "x3");
    rename["lam"] = PolyK::constant(p3, RatFunc(0));
    rename["mu"] = PolyK::constant(p3, RatFunc(0));
    return det.substitute(rename, p3);
}

RatFunc leading_ratio(const PolyK& computed, const PolyK& displayed) {
    if (displayed.is_zero() || computed.is_zero()) throw error("cannot scale zero polynomials");
    const auto& lead = displayed.terms().begin()->first;
    RatFunc num = computed.coefficient_of(lead);
    RatFunc den = displayed.terms().begin()->second;
    return num / den;
}

} // namespace

ProjectedQuartic projected_quartic(char coords) {
    PolyK computed_x = eliminated_quartic_x();
    if (coords == 'x') {
        PolyK disp = displayed_quartic_x();
        RatFunc scalar = leading_ratio(computed_x, disp);
        if (scalar.is_zero() || computed_x != disp.scaled(scalar))
            throw error("elimination does not reproduce the displayed x-equation");
        return ProjectedQuartic{computed_x, disp, scalar, 'x'};
    }
    if (coords != 'y') throw bad_parameter_error("coords must be 'x' or 'y'");
    // y_i = (1 +- k) x_i, and the displayed f(y) is (1-k^2) times the
    // x-equation under that change
    auto yreg = p3y_registry();
    RatFunc k = RatFunc::k();
    RatFunc kp = RatFunc(1) + k, km = RatFunc(1) - k;
    std::map<std::string, PolyK> inv;
    inv["x0"] = PolyK::variable(yreg, "y0").scaled(RatFunc(1) / kp);
    inv["x1"] = PolyK::variable(yreg, "y1").scaled(RatFunc(1) / kp);
    inv["x2"] = PolyK::variable(yreg, "y2").scaled(RatFunc(1) / km);
    inv["x3"] = PolyK::variable(yreg, "y3").scaled(RatFunc(1) / km);
    PolyK computed_y = computed_x.substitute(inv, yreg).scaled(kp * km);
    PolyK disp = displayed_quartic_y();
    RatFunc scalar = leading_ratio(computed_y, disp);
    if (scalar.is_zero() || computed_y != disp.scaled(scalar))
        throw error("elimination does not reproduce the displayed y-equation");
    return ProjectedQuartic{computed_y, disp, scalar, 'y'};
}

bool xy_consistency() {
    auto xreg = p3x_registry();
    RatFunc k = RatFunc::k();
    RatFunc kp = RatFunc(1) + k, km = RatFunc(1) - k;
    std::map<std::string, PolyK> fwd;
    fwd["y0"] = PolyK::variable(xreg, "x0").scaled(kp);
    fwd["y1"] = PolyK::variable(xreg, "x1").scaled(kp);
    fwd["y2"] = PolyK::variable(xreg, "x2").scaled(km);
    fwd["y3"] = PolyK::variable(xreg, "x3").scaled(km);
    return displayed_quartic_y().substitute(fwd, xreg) ==
           displayed_quartic_x().scaled(kp * km);
}

std::vector<ProjPt<Rat>> eight_points() {
    std::vector<ProjPt<Rat>> pts;
    pts.emplace_back(rvec({1, 0, 0, 0}));
    pts.emplace_back(rvec({0, 1, 0, 0}));
    pts.emplace_back(rvec({0, 0, 1, 0}));
    pts.emplace_back(rvec({0, 0, 0, 1}));
    pts.emplace_back(rvec({1, 0, -1, 0}));
    pts.emplace_back(rvec({1, 0, 0, -1}));
    pts.emplace_back(rvec({0, 1, -1, 0}));
    pts.emplace_back(rvec({0, 1, 0, -1}));
    return pts;
}

namespace {

SingularityReport report_at(const std::string& label, std::vector<RatFunc> ycoords) {
    PolyK f = displayed_quartic_y();
    ProjPt<RatFunc> pt(std::move(ycoords));
    SingularityReport rep{label, pt, RatFunc(0), {}, false};
    rep.f_value = f.eval(pt.coords);
    bool all_zero = true;
    for (int i = 0; i < 4; ++i) {
        rep.partials[static_cast<std::size_t>(i)] =
            f.partial("y" + std::to_string(i)).eval(pt.coords);
        if (!rep.partials[static_cast<std::size_t>(i)].is_zero()) all_zero = false;
    }
    rep.singular = all_zero;
    return rep;
}

std::vector<RatFunc> y_point_of_x(const ProjPt<Rat>& x) {
    RatFunc k = RatFunc::k();
    RatFunc kp = RatFunc(1) + k, km = RatFunc(1) - k;
    std::vector<RatFunc> y(4);
    for (int i = 0; i < 4; ++i)
        y[static_cast<std::size_t>(i)] = RatFunc(x.coords[static_cast<std::size_t>(i)]) * (i < 2 ? kp : km);
    return y;
}

} // namespace

std::vector<SingularityReport> singular_points_symbolic() {
    std::vector<SingularityReport> out;
    std::vector<ProjPt<Rat>> pts = eight_points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string family = i < 4 ? "vertex" : "plane";
        out.push_back(report_at(family + " " + str(pts[i]) + " [x-coords]", y_point_of_x(pts[i])));
    }
    return out;
}

SingularityReport control_point_report() {
    std::vector<RatFunc> ones(4, RatFunc(1));
    return report_at("control (1:1:1:1) [y-coords]", std::move(ones));
}

Report case_identities() {
    Report r;
    r.command = "case identities";
    auto yreg = p3y_registry();
    PolyK f = displayed_quartic_y();

    // (a) the factorization of d0 f - d1 f
    {
        PolyK lhs = f.partial("y0") - f.partial("y1");
        PolyK rhs = parse_k(
            "(y1-y0)*(2*(1-k)*y0*y1 + 2*k*y2*y3 - ((1-k)*(y0+y1)+(1+k)*(y2+y3))*(y2+y3))",
            yreg);
        r.add("d0f - d1f = (y1-y0)(2(1-k)p + 2kq - ((1-k)s+(1+k)t)t)", lhs == rhs);
    }
    // (b) the determinant of the homogeneous (p,q) system
    {
        auto streg = make_registry({"s", "t"});
        PolyK d = parse_k(
            "(1-k^2)*s*t - (2*(1-k)*s+(1+k)*t)*(2*(1+k)*t+(1-k)*s)", streg);
        PolyK rhs = parse_k("(0-2)*((1-k)*s+(1+k)*t)^2", streg);
        r.add("D = -2((1-k)s+(1+k)t)^2", d == rhs);
    }
    // (c) Case I: the (p,q) system has determinant 1
    {
        RatFunc k = RatFunc::k();
        RatFunc det = (RatFunc(1) - k) * (RatFunc(1) + k) - k * (-k);
        r.add("case I determinant (1-k^2)+k^2 = 1", det == RatFunc(1),
              Json{{"det", det.to_string()}});
    }
    // (d) and (e): Case IV, y0=y1=y and y2=y3=z
    auto yzreg = make_registry({"y", "z"});
    PolyK half0 = parse_k("(1-k)*y^3-3*(1-k)*y^2*z-3*k*y*z^2+(1+k)*z^3", yzreg);
    PolyK half2 = parse_k("(1-k)*y^3+3*k*y^2*z-3*(1+k)*y*z^2+(1+k)*z^3", yzreg);
    {
        PolyK diff = half0 - half2;
        PolyK rhs = parse_k("3*y*z*(z-y)", yzreg);
        r.add("case IV difference = 3yz(z-y)", diff == rhs);
    }
    {
        std::map<std::string, PolyK> diag;
        diag["y0"] = PolyK::variable(yzreg, "y");
        diag["y1"] = PolyK::variable(yzreg, "y");
        diag["y2"] = PolyK::variable(yzreg, "z");
        diag["y3"] = PolyK::variable(yzreg, "z");
        PolyK d0 = f.partial("y0").substitute(diag, yzreg);
        PolyK d2 = f.partial("y2").substitute(diag, yzreg);
        bool ok0 = d0 == half0.scaled(RatFunc(2));
        bool ok2 = d2 == half2.scaled(RatFunc(2));
        r.add("case IV halved partials match the displayed cubics", ok0 && ok2);
    }
    return r;
}

// ---- finite-field scan ------------------------------------------------------

namespace {

struct FlatTerm {
    std::uint64_t c;
    std::array<int, 4> e;
};

std::vector<FlatTerm> flatten(const PolyP& f) {
    std::vector<FlatTerm> out;
    for (const auto& [e, c] : f.terms()) {
        FlatTerm t{c.value(), {e[0], e[1], e[2], e[3]}};
        out.push_back(t);
    }
    return out;
}

struct ScanContext {
    std::uint64_t p;
    std::array<std::vector<FlatTerm>, 4> partials;
    std::vector<std::vector<std::uint64_t>> pow; // pow[v][e], v < p, e <= 4

    bool singular_at(const std::array<std::uint64_t, 4>& x) const {
        for (const auto& terms : partials) {
            std::uint64_t acc = 0;
            for (const auto& t : terms) {
                std::uint64_t m = t.c;
                m = (m * pow[x[0]][static_cast<std::size_t>(t.e[0])]) % p;
                m = (m * pow[x[1]][static_cast<std::size_t>(t.e[1])]) % p;
                m = (m * pow[x[2]][static_cast<std::size_t>(t.e[2])]) % p;
                m = (m * pow[x[3]][static_cast<std::size_t>(t.e[3])]) % p;
                acc = (acc + m) % p;
            }
            if (acc != 0) return false;
        }
        return true;
    }
};

} // namespace

std::vector<ProjPt<Fp>> finite_field_singular_scan(const Rat& k, std::uint64_t p, int threads) {
    if (!is_prime_u64(p) || p == 2 || p == 3)
        throw bad_prime_error("need a prime p outside {2,3}, got " + std::to_string(p));
    Fp kp = Fp::from_rat(k, p);
    if (kp.value() == 0 || kp.value() == 1 || kp.value() == p - 1)
        throw bad_parameter_error("k = 0, 1, -1 mod p degenerates the family");

    // reductions of the expected points must stay distinct
    std::vector<ProjPt<Fp>> expected;
    for (const auto& pt : eight_points()) {
        std::vector<Fp> c;
        for (const auto& q : pt.coords) c.push_back(Fp::from_rat(q, p));
        expected.emplace_back(std::move(c));
    }
    for (std::size_t i = 0; i < expected.size(); ++i)
        for (std::size_t j = i + 1; j < expected.size(); ++j)
            if (expected[i] == expected[j])
                throw colliding_points_error("expected singular points collide mod p");

    ScanContext ctx;
    ctx.p = p;
    PolyP f = specialize_k_mod(displayed_quartic_x(), k, p);
    for (int i = 0; i < 4; ++i)
        ctx.partials[static_cast<std::size_t>(i)] = flatten(f.partial("x" + std::to_string(i)));
    ctx.pow.assign(p, std::vector<std::uint64_t>(5, 1));
    for (std::uint64_t v = 0; v < p; ++v)
        for (int e = 1; e <= 4; ++e)
            ctx.pow[v][static_cast<std::size_t>(e)] = (ctx.pow[v][static_cast<std::size_t>(e - 1)] * v) % p;

    if (threads < 1) threads = 1;
    std::vector<std::vector<std::array<std::uint64_t, 4>>> found(static_cast<std::size_t>(threads));

    // chart x0 = 1, sharded over the first free coordinate
    auto worker = [&](int id) {
        for (std::uint64_t a = static_cast<std::uint64_t>(id); a < p;
             a += static_cast<std::uint64_t>(threads))
            for (std::uint64_t b = 0; b < p; ++b)
                for (std::uint64_t c = 0; c < p; ++c) {
                    std::array<std::uint64_t, 4> x{1, a, b, c};
                    if (ctx.singular_at(x)) found[static_cast<std::size_t>(id)].push_back(x);
                }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int id = 0; id < threads; ++id) pool.emplace_back(worker, id);
        for (auto& th : pool) th.join();
    }

    std::vector<std::array<std::uint64_t, 4>> hits;
    for (const auto& shard : found) hits.insert(hits.end(), shard.begin(), shard.end());
    // remaining charts: x0 = 0
    for (std::uint64_t b = 0; b < p; ++b)
        for (std::uint64_t c = 0; c < p; ++c) {
            std::array<std::uint64_t, 4> x{0, 1, b, c};
            if (ctx.singular_at(x)) hits.push_back(x);
        }
    for (std::uint64_t c = 0; c < p; ++c) {
        std::array<std::uint64_t, 4> x{0, 0, 1, c};
        if (ctx.singular_at(x)) hits.push_back(x);
    }
    {
        std::array<std::uint64_t, 4> x{0, 0, 0, 1};
        if (ctx.singular_at(x)) hits.push_back(x);
    }

    std::sort(hits.begin(), hits.end());
    std::vector<ProjPt<Fp>> out;
    for (const auto& x : hits) {
        std::vector<Fp> c;
        for (std::uint64_t v : x) c.emplace_back(v, p);
        ProjPt<Fp> pt(std::move(c));
        // Euler's relation: the quartic itself vanishes wherever the
        // gradient does (p does not divide 4)
        if (!f.eval(pt.coords).is_zero())
            throw error("singular point off the surface: Euler check failed");
        out.push_back(std::move(pt));
    }
    return out;
}

// ---- exceptional lines ------------------------------------------------------

std::pair<ExceptionalLine, ExceptionalLine> exceptional_lines() {
    auto xreg = p3x_registry();
    auto abreg = make_registry({"a", "b"});
    RatFunc k = RatFunc::k();
    PolyK fx = displayed_quartic_x();

    auto line = [&](bool swapped) {
        ExceptionalLine l{{parse_k(swapped ? "(1+k)*x0-(1-k)*x3" : "(1+k)*x0-(1-k)*x2", xreg),
                           parse_k(swapped ? "(1+k)*x1-(1-k)*x2" : "(1+k)*x1-(1-k)*x3", xreg)},
                          false};
        std::map<std::string, PolyK> par;
        PolyK a = PolyK::variable(abreg, "a"), b = PolyK::variable(abreg, "b");
        RatFunc kp = RatFunc(1) + k, km = RatFunc(1) - k;
        par["x0"] = a.scaled(km);
        par["x1"] = b.scaled(km);
        par["x2"] = (swapped ? b : a).scaled(kp);
        par["x3"] = (swapped ? a : b).scaled(kp);
        for (const auto& eq : l.equations)
            if (!eq.substitute(par, abreg).is_zero())
                throw error("line parametrization does not satisfy its own equations");
        l.on_surface = fx.substitute(par, abreg).is_zero();
        return l;
    };
    return {line(false), line(true)};
}

ProjPt<RatFunc> lines_intersection_y() {
    auto [l1, l2] = exceptional_lines();
    auto xreg = p3x_registry();
    Mat<RatFunc> sys(4, 4);
    const PolyK* eqs[4] = {&l1.equations[0], &l1.equations[1], &l2.equations[0], &l2.equations[1]};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Expo e(4, 0);
            e[c] = 1;
            sys(r, c) = eqs[r]->coefficient_of(e);
        }
    Mat<RatFunc> ker = kernel_field(sys);
    if (ker.cols() != 1) throw error("the two exceptional lines should meet in one point");
    std::vector<RatFunc> x = ker.col(0);
    RatFunc k = RatFunc::k();
    std::vector<RatFunc> y(4);
    for (int i = 0; i < 4; ++i)
        y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] * (i < 2 ? RatFunc(1) + k : RatFunc(1) - k);
    ProjPt<RatFunc> pt(y);
    if (!displayed_quartic_y().eval(pt.coords).is_zero())
        throw error("intersection point left the surface");
    return pt;
}

// ---- symmetries -------------------------------------------------------------

Report symmetry_check() {
    Report r;
    r.command = "symmetry check";
    auto yreg = p3y_registry();
    PolyK f = displayed_quartic_y();

    auto swap_map = [&](const char* a, const char* b) {
        std::map<std::string, PolyK> m;
        m[a] = PolyK::variable(yreg, b);
        m[b] = PolyK::variable(yreg, a);
        return m;
    };

    PolyK f01 = f.substitute(swap_map("y0", "y1"), yreg);
    PolyK f23 = f.substitute(swap_map("y2", "y3"), yreg);
    r.add("f invariant under y0 <-> y1", f01 == f);
    r.add("f invariant under y2 <-> y3", f23 == f);

    {
        // (y0,y1) <-> (y2,y3) combined with k <-> -k
        std::map<std::string, PolyK> m;
        m["y0"] = PolyK::variable(yreg, "y2");
        m["y1"] = PolyK::variable(yreg, "y3");
        m["y2"] = PolyK::variable(yreg, "y0");
        m["y3"] = PolyK::variable(yreg, "y1");
        PolyK g = f.substitute(m, yreg).map_coeffs<RatFunc>(
            [](const RatFunc& c) { return c.subst_neg_k(); });
        bool ok = g == -f;
        r.add("pair swap with k -> -k sends f to -f", ok,
              Json{{"scalar", "-1"}});
    }
    {
        PolyK ab = f.substitute(swap_map("y0", "y1"), yreg).substitute(swap_map("y2", "y3"), yreg);
        PolyK ba = f.substitute(swap_map("y2", "y3"), yreg).substitute(swap_map("y0", "y1"), yreg);
        r.add("the two transpositions commute", ab == ba);
    }
    {
        // the eight singular points are permuted by the symmetries
        auto points = eight_points();
        auto apply = [&](const ProjPt<Rat>& p, int i, int j) {
            std::vector<Rat> c = p.coords;
            std::swap(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
            return ProjPt<Rat>(c);
        };
        bool ok = true;
        for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {2, 3}}) {
            for (const auto& p : points) {
                ProjPt<Rat> q = apply(p, i, j);
                bool member = false;
                for (const auto& other : points)
                    if (other == q) member = true;
                if (!member) ok = false;
            }
        }
        r.add("the symmetries permute the eight singular points", ok);
    }
    return r;
}

// ---- cusp certificates ------------------------------------------------------

namespace {

template <typename C>
struct ChartJet {
    RegistryPtr reg;
    MultiPoly<C> expansion;
    WeightedJet<C> jet;
};

template <typename C>
ChartJet<C> vertex_chart(const MultiPoly<C>& f_y) {
    auto reg3 = make_registry({"y1", "y2", "y3"});
    auto ureg = make_registry({"u1", "u2", "u3"});
    std::map<std::string, MultiPoly<C>> at_vertex;
    at_vertex["y0"] = MultiPoly<C>::constant(reg3, C(Rat(1)));
    MultiPoly<C> g = f_y.substitute(at_vertex, reg3);

    // inverse of u1 = y2+y3, u2 = y1-y2, u3 = y1-y3
    C half = C(make_rat(1, 2));
    MultiPoly<C> u1 = MultiPoly<C>::variable(ureg, "u1");
    MultiPoly<C> u2 = MultiPoly<C>::variable(ureg, "u2");
    MultiPoly<C> u3 = MultiPoly<C>::variable(ureg, "u3");
    std::map<std::string, MultiPoly<C>> to_u;
    to_u["y1"] = (u1 + u2 + u3).scaled(half);
    to_u["y2"] = (u1 - u2 + u3).scaled(half);
    to_u["y3"] = (u1 + u2 - u3).scaled(half);
    MultiPoly<C> h = g.substitute(to_u, ureg);

    std::vector<Rat> w = {make_rat(1, 3), make_rat(1, 2), make_rat(1, 2)};
    return ChartJet<C>{ureg, h, weighted_parts(h, w)};
}

template <typename C>
ChartJet<C> plane_chart(const MultiPoly<C>& f_x, const C& kp, const C& km) {
    auto mixreg = make_registry({"x0", "y1", "x2", "y3"});
    std::map<std::string, MultiPoly<C>> mix;
    mix["x1"] = MultiPoly<C>::variable(mixreg, "y1").scaled(C(Rat(1)) / kp);
    mix["x3"] = MultiPoly<C>::variable(mixreg, "y3").scaled(C(Rat(1)) / km);
    MultiPoly<C> f1 = f_x.substitute(mix, mixreg);

    auto uvreg = make_registry({"u", "v", "y1", "y3"});
    std::map<std::string, MultiPoly<C>> uv;
    uv["x0"] = MultiPoly<C>::variable(uvreg, "u") + MultiPoly<C>::variable(uvreg, "v");
    uv["x2"] = MultiPoly<C>::variable(uvreg, "u") - MultiPoly<C>::variable(uvreg, "v");
    MultiPoly<C> f2 = f1.substitute(uv, uvreg);

    auto chartreg = make_registry({"u", "y1", "y3"});
    std::map<std::string, MultiPoly<C>> at_v1;
    at_v1["v"] = MultiPoly<C>::constant(chartreg, C(Rat(1)));
    MultiPoly<C> f3 = f2.substitute(at_v1, chartreg);

    // z1 = (1-k^2) u + y1 + y3, z2 = y1 - y3
    auto zreg = make_registry({"u", "z1", "z2"});
    C ks = kp * km;
    C half = C(make_rat(1, 2));
    MultiPoly<C> uu = MultiPoly<C>::variable(zreg, "u");
    MultiPoly<C> z1 = MultiPoly<C>::variable(zreg, "z1");
    MultiPoly<C> z2 = MultiPoly<C>::variable(zreg, "z2");
    std::map<std::string, MultiPoly<C>> to_z;
    to_z["y1"] = (z1 - uu.scaled(ks) + z2).scaled(half);
    to_z["y3"] = (z1 - uu.scaled(ks) - z2).scaled(half);
    MultiPoly<C> f4 = f3.substitute(to_z, zreg);

    std::vector<Rat> w = {make_rat(1, 3), make_rat(1, 2), make_rat(1, 2)};
    return ChartJet<C>{zreg, f4, weighted_parts(f4, w)};
}

template <typename C>
struct JetCoeffs {
    Rat min_weight;
    MultiPoly<C> weight1;
    C cubic, quad;
    bool clean; // weight-1 part is exactly cubic*a + product*b
};

template <typename C>
JetCoeffs<C> analyze_jet(const ChartJet<C>& cj) {
    auto mw = cj.jet.min_weight();
    if (!mw) throw not_sqh_error("empty expansion at the singular point");
    JetCoeffs<C> out{*mw, MultiPoly<C>(cj.reg), C(Rat(0)), C(Rat(0)), false};
    auto it = cj.jet.parts.find(Rat(1));
    if (it != cj.jet.parts.end()) out.weight1 = it->second;
    Expo cubic(3, 0), quad(3, 0);
    cubic[0] = 3;
    quad[1] = 1;
    quad[2] = 1;
    out.cubic = out.weight1.coefficient_of(cubic);
    out.quad = out.weight1.coefficient_of(quad);
    MultiPoly<C> rebuilt = MultiPoly<C>::term(cj.reg, out.cubic, cubic);
    rebuilt.add_term(quad, out.quad);
    out.clean = rebuilt == out.weight1;
    return out;
}

std::vector<Rat> generic_exceptional_k(const RatFunc& a, const RatFunc& b) {
    std::set<Rat> roots;
    for (const Rat& r : a.num().rational_roots()) roots.insert(r);
    for (const Rat& r : b.num().rational_roots()) roots.insert(r);
    return {roots.begin(), roots.end()};
}

} // namespace

CuspCertificate cusp_certificate(CuspFamily family, std::optional<Rat> k) {
    if (k && (*k == 1 || *k == -1))
        throw degenerate_parameter_error("k = +-1 degenerates the quartic family");

    CuspCertificate cert;
    cert.family = family;
    cert.k = k;
    cert.weights = {make_rat(1, 3), make_rat(1, 2), make_rat(1, 2)};

    // generic data first: the exceptional parameters come from the generic
    // numerators in either case
    RatFunc gen_a, gen_b;
    if (family == CuspFamily::vertex) {
        cert.substitution = "y0 = 1; u1 = y2+y3, u2 = y1-y2, u3 = y1-y3";
        ChartJet<RatFunc> gj = vertex_chart<RatFunc>(displayed_quartic_y());
        JetCoeffs<RatFunc> gc = analyze_jet(gj);
        gen_a = gc.cubic;
        gen_b = gc.quad;
        if (!k) {
            cert.min_weight = gc.min_weight;
            cert.weight1 = gc.weight1;
            cert.cubic_coeff = gc.cubic;
            cert.quad_coeff = gc.quad;
            cert.sqh = gc.min_weight >= 1 && gc.clean && !gc.cubic.is_zero() && !gc.quad.is_zero();
        }
    } else {
        cert.substitution =
            "x1 = y1/(1+k), x3 = y3/(1-k); x0 = u+v, x2 = u-v; v = 1; "
            "z1 = (1-k^2)*u+y1+y3, z2 = y1-y3";
        RatFunc kk = RatFunc::k();
        ChartJet<RatFunc> gj =
            plane_chart<RatFunc>(displayed_quartic_x(), RatFunc(1) + kk, RatFunc(1) - kk);
        JetCoeffs<RatFunc> gc = analyze_jet(gj);
        gen_a = gc.cubic;
        gen_b = gc.quad;
        if (!k) {
            cert.min_weight = gc.min_weight;
            cert.weight1 = gc.weight1;
            cert.cubic_coeff = gc.cubic;
            cert.quad_coeff = gc.quad;
            cert.sqh = gc.min_weight >= 1 && gc.clean && !gc.cubic.is_zero() && !gc.quad.is_zero();
        }
        cert.note =
            "weight-1 part computed from the chart; the source text displays "
            "z1z2 - (1/4)(1-k^2)^2 u^2, inconsistent with its own cubic "
            "computation (1/2)(1-k^2)^2 u^3, and the chart variable printed y2 "
            "is read as y3";
    }
    cert.exceptional_k = generic_exceptional_k(gen_a, gen_b);

    if (k) {
        if (family == CuspFamily::vertex) {
            ChartJet<Rat> rj = vertex_chart<Rat>(specialize_k(displayed_quartic_y(), *k));
            JetCoeffs<Rat> rc = analyze_jet(rj);
            cert.min_weight = rc.min_weight;
            cert.weight1 = lift_to_k(rc.weight1);
            cert.cubic_coeff = RatFunc(rc.cubic);
            cert.quad_coeff = RatFunc(rc.quad);
            cert.sqh = rc.min_weight >= 1 && rc.clean && rc.cubic != 0 && rc.quad != 0;
        } else {
            ChartJet<Rat> rj = plane_chart<Rat>(specialize_k(displayed_quartic_x(), *k),
                                                Rat(1) + *k, Rat(1) - *k);
            JetCoeffs<Rat> rc = analyze_jet(rj);
            cert.min_weight = rc.min_weight;
            cert.weight1 = lift_to_k(rc.weight1);
            cert.cubic_coeff = RatFunc(rc.cubic);
            cert.quad_coeff = RatFunc(rc.quad);
            cert.sqh = rc.min_weight >= 1 && rc.clean && rc.cubic != 0 && rc.quad != 0;
        }
        if (*k == 0)
            cert.note += std::string(cert.note.empty() ? "" : "; ") +
                         "k = 0 is outside the source sextic family (k != 0), "
                         "the projected equation itself is regular there";
    }
    cert.weight1_text = to_string(cert.weight1);
    if (!cert.sqh)
        throw not_sqh_error("weight-1 part is not of cusp type: " + cert.weight1_text);
    return cert;
}

} // namespace cusplab
