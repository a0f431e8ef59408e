#include "cusplab/torus_action.hpp"

#include "cusplab/multipoly.hpp"

namespace cusplab {

IntMat t_matrix() {
    return IntMat{{Int(0), Int(-1), Int(0), Int(0)},
                  {Int(1), Int(-1), Int(0), Int(0)},
                  {Int(0), Int(0), Int(0), Int(-1)},
                  {Int(0), Int(0), Int(1), Int(-1)}};
}

IntMat t2_matrix() {
    return IntMat{{Int(0), Int(-1)}, {Int(1), Int(-1)}};
}

const std::vector<std::string>& wedge_labels() {
    static const std::vector<std::string> l = {"a1^b1", "a1^a2", "a1^b2",
                                               "b1^a2", "b1^b2", "a2^b2"};
    return l;
}

IntMat gamma_basis() {
    IntMat g(6, 4);
    // g1 = -a1^b1
    g(0, 0) = -1;
    // g2 = a2^b2
    g(5, 1) = 1;
    // g3 = a1^b2 - b1^a2
    g(2, 2) = 1;
    g(3, 2) = -1;
    // g4 = a1^a2 + a1^b2 + b1^b2
    g(1, 3) = 1;
    g(2, 3) = 1;
    g(4, 3) = 1;
    return g;
}

IntMat delta_basis() {
    IntMat d(6, 2);
    // d1 = a1^a2 - b1^b2
    d(1, 0) = 1;
    d(4, 0) = -1;
    // d2 = a1^b2 + b1^a2 + b1^b2
    d(2, 1) = 1;
    d(3, 1) = 1;
    d(4, 1) = 1;
    return d;
}

RatMat wedge_gram(const IntMat& v) {
    if (v.rows() != 6) throw error("wedge vectors have 6 coordinates");
    int n = v.cols();
    RatMat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = Rat(wedge_pairing(v.col(i), v.col(j)));
    return g;
}

IntMat invariant_lattice(const IntMat& m6) {
    if (m6.rows() != 6 || m6.cols() != 6) throw error("expected a 6x6 matrix");
    return integer_kernel(m6 - IntMat::identity(6));
}

namespace {

// Matrix of the wedge pairing on the standard rank-6 basis.
IntMat pairing_matrix() {
    IntMat w(6, 6);
    for (int a = 0; a < 6; ++a) {
        std::vector<Int> ea(6, Int(0)), eb(6, Int(0));
        ea[a] = 1;
        for (int b = 0; b < 6; ++b) {
            std::vector<Int> e2(6, Int(0));
            e2[b] = 1;
            w(a, b) = wedge_pairing(ea, e2);
        }
    }
    return w;
}

} // namespace

IntMat orthogonal_complement(const IntMat& s) {
    if (s.rows() != 6) throw error("expected rank-6 wedge vectors");
    IntMat constraints = s.transposed() * pairing_matrix(); // rows: v -> (s_j, v)
    return integer_kernel(constraints);
}

Int orientation_det(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != 4 || b.size() != 4) throw error("expected Z^4 vectors");
    IntMat t = t_matrix();
    IntMat m(4, 4);
    m.set_col(0, a);
    m.set_col(1, t.apply(a));
    m.set_col(2, b);
    m.set_col(3, t.apply(b));
    return det(m);
}

std::pair<Int, Int> commutant_decompose(const IntMat& m) {
    if (m.rows() != 2 || m.cols() != 2) throw error("expected a 2x2 matrix");
    IntMat t2 = t2_matrix();
    if (m * t2 != t2 * m)
        throw not_in_commutant_error("matrix does not commute with the order-3 block");
    // x*I + y*T2 = [[x, -y], [y, x-y]]
    Int x = m(0, 0), y = m(1, 0);
    IntMat rebuilt = IntMat::identity(2).scaled(x) + t2.scaled(y);
    if (rebuilt != m) throw not_in_commutant_error("matrix is outside Z[T2]");
    return {x, y};
}

bool is_in_g(const IntMat& g) {
    if (g.rows() != 4 || g.cols() != 4) return false;
    if (det(g) != 1) return false;
    IntMat t = t_matrix();
    return g * t == t * g;
}

IntMat g_action_on_la(const IntMat& g) {
    if (!is_in_g(g)) throw not_in_g_error("matrix is not in G");
    IntMat w = wedge_square(g);
    IntMat gam = gamma_basis();
    RatMat gam_q = to_rat(gam);
    RatMat normal = gam_q.transposed() * gam_q; // full column rank
    RatMat images = to_rat(w * gam);
    RatMat rhs = gam_q.transposed() * images;
    RatMat a(4, 4);
    for (int j = 0; j < 4; ++j) a.set_col(j, solve_field(normal, rhs.col(j)));
    if (gam_q * a != images)
        throw error("wedge action does not preserve the invariant lattice");
    return to_int_checked(a);
}

IntMat order3_normal_form(const IntMat& m) {
    if (m.rows() != 4 || m.cols() != 4) throw precondition_error("expected a 4x4 matrix");
    IntMat m2 = m * m;
    if (m2 * m != IntMat::identity(4))
        throw precondition_error("matrix does not have order dividing 3");
    if (IntMat::identity(4) + m + m2 != IntMat(4, 4))
        throw precondition_error("matrix has fixed vectors (1 is an eigenvalue)");

    // averaged invariant positive definite form, seed I
    IntMat s = IntMat::identity(4) + m.transposed() * m + m2.transposed() * m2;
    GramLattice ls{to_rat(s)};
    ShortestVectors sv = shortest_vectors(ls);
    std::vector<Int> a1 = sv.vectors.front();
    std::vector<Int> b1 = m.apply(a1);

    IntMat plane(4, 2);
    plane.set_col(0, a1);
    plane.set_col(1, b1);
    auto [prim, divs] = primitivity(plane);
    if (!prim) throw error("shortest orbit plane is not primitive");

    // complete (a1, b1) to a basis of Z^4: remaining columns of u^{-1}
    SmithResult sm = smith_normal_form(plane);
    IntMat uinv = to_int_checked(inverse_field(to_rat(sm.u)));
    IntMat comp = uinv.cols_slice(2, 2);

    // induced form on the quotient: project the complement orthogonally
    // (w.r.t. s) off the plane
    RatMat srat = to_rat(s);
    RatMat plane_q = to_rat(plane);
    RatMat plane_gram = plane_q.transposed() * srat * plane_q;
    RatMat proj(4, 2);
    for (int j = 0; j < 2; ++j) {
        std::vector<Rat> cj = to_rat(comp).col(j);
        std::vector<Rat> rhs(2);
        for (int i = 0; i < 2; ++i) {
            Rat acc(0);
            std::vector<Rat> pi = plane_q.col(i);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) acc += pi[r] * srat(r, c) * cj[c];
            rhs[i] = acc;
        }
        std::vector<Rat> mu = solve_field(plane_gram, rhs);
        for (int r = 0; r < 4; ++r)
            proj(r, j) = cj[r] - mu[0] * plane_q(r, 0) - mu[1] * plane_q(r, 1);
    }
    RatMat qform = proj.transposed() * srat * proj;
    ShortestVectors qs = shortest_vectors(GramLattice{qform});
    std::vector<Int> x = qs.vectors.front();
    std::vector<Int> a2(4), b2(4);
    for (int r = 0; r < 4; ++r) a2[r] = x[0] * comp(r, 0) + x[1] * comp(r, 1);
    b2 = m.apply(a2);

    IntMat u(4, 4);
    u.set_col(0, a1);
    u.set_col(1, b1);
    u.set_col(2, a2);
    u.set_col(3, b2);
    if (abs(det(u)) != 1) throw error("normal form basis is not unimodular");
    IntMat uinv2 = to_int_checked(inverse_field(to_rat(u)));
    if (uinv2 * m * u != t_matrix()) throw error("conjugation check failed");
    return u;
}

Order3Solution order3_solve() {
    auto reg = make_registry({"p", "q"});
    using P = MultiPoly<Rat>;
    P p = P::variable(reg, "p"), q = P::variable(reg, "q");
    P zero(reg), one = P::constant(reg, Rat(1));
    // cube of [[0,p],[1,q]] entrywise
    Mat<P> m{{zero, p}, {one, q}};
    Mat<P> cube = m * m * m;
    bool formula_ok = cube(0, 0) == p * q && cube(0, 1) == p * (p + q * q) &&
                      cube(1, 0) == p + q * q && cube(1, 1) == q * (p * P::constant(reg, Rat(2)) + q * q);

    // cube = I forces p = -q^2 and then q^3 = -1; the only rational root is -1
    UPolyZ qcubic{std::vector<Int>{Int(1), Int(0), Int(0), Int(1)}}; // q^3 + 1
    std::vector<Rat> roots = qcubic.rational_roots();
    if (roots.size() != 1 || roots[0] != Rat(-1)) throw error("unexpected root set for q^3+1");
    Rat qv = roots[0];
    Rat pv = -qv * qv;
    // confirm all four entries, then the integral matrix itself
    if (!(pv * qv == 1 && pv + qv * qv == 0 && qv * (2 * pv + qv * qv) == 1))
        throw error("solution does not satisfy the cube equations");
    IntMat t2 = t2_matrix();
    if (t2 * t2 * t2 != IntMat::identity(2)) throw error("T2 does not cube to identity");

    // q = 0 branch: pq = 1 needs p != 0, but the off-diagonal forces p + q^2 = p = 0
    bool q_zero_bad = !(Rat(0) * Rat(1) == Rat(1));

    return Order3Solution{pv, qv, formula_ok, q_zero_bad};
}

GramLattice la_lattice() {
    RatMat g{{Rat(0), Rat(1), Rat(0), Rat(0)},
             {Rat(1), Rat(0), Rat(0), Rat(0)},
             {Rat(0), Rat(0), Rat(2), Rat(1)},
             {Rat(0), Rat(0), Rat(1), Rat(2)}};
    return GramLattice(g, {"g1", "g2", "g3", "g4"});
}

GramLattice delta_lattice() {
    RatMat g{{Rat(-2), Rat(1)}, {Rat(1), Rat(-2)}};
    return GramLattice(g, {"d1", "d2"});
}

std::pair<int, int> signature(const RatMat& gram) {
    if (!gram.is_square()) throw nonsquare_error("signature of a non-square matrix");
    int n = gram.rows();
    auto reg = make_registry({"x"});
    using P = MultiPoly<Rat>;
    Mat<P> xm(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            P entry = P::constant(reg, -gram(i, j));
            if (i == j) entry += P::variable(reg, "x");
            xm(i, j) = entry;
        }
    P charpoly = det_cofactor(xm);
    // all roots are real; Descartes gives exact positive/negative counts
    auto sign_changes = [&](bool flip) {
        int changes = 0, last = 0;
        for (int d = n; d >= 0; --d) {
            Expo e(1, d);
            Rat c = charpoly.coefficient_of(e);
            if (flip && d % 2 == 1) c = -c;
            if (c == 0) continue;
            int s = sgn(c);
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    };
    return {sign_changes(false), sign_changes(true)};
}

} // namespace cusplab
