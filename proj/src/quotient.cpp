#include "cusplab/quotient.hpp"

#include "cusplab/torus_action.hpp"

namespace cusplab {

CuspLatticeConstants cusp_lattice_constants() {
    CuspLatticeConstants c;
    c.d_i = 19683; // 3^9
    c.index = 27;  // 3^3
    c.d_ibar = int_divexact(c.d_i, c.index * c.index);
    c.d_lx = -c.d_ibar;
    c.rank_i = 18;
    c.rank_lx = 4;
    return c;
}

GramLattice lx_gram() {
    RatMat g{{Rat(0), Rat(3), Rat(0), Rat(0)},
             {Rat(3), Rat(0), Rat(0), Rat(0)},
             {Rat(0), Rat(0), Rat(6), Rat(3)},
             {Rat(0), Rat(0), Rat(3), Rat(2)}};
    return GramLattice(g, {"xi1", "xi2", "xi3", "xi4"});
}

namespace {

Json mat_json(const RatMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(str(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

} // namespace

Report verify_pushforward_iso() {
    Report r;
    r.command = "quotient pushforward";

    GramLattice la = la_lattice();
    DualBasis dual = dual_basis(la);
    GramLattice lx = lx_gram();
    CuspLatticeConstants cs = cusp_lattice_constants();

    // (a) dual gram scaled by 3 is the L_X gram in the same basis order
    RatMat scaled = dual.dual.gram.scaled(Rat(3));
    r.add("dual gram of L_A times 3 equals L_X gram", scaled == lx.gram,
          Json{{"matrix", mat_json(scaled)}});

    // (b) pairing scaling: q_* is the identity on dual coordinates, so
    // (q_* a, q_* a')_{L_X} = 3 (a, a') for the dual basis and combinations
    bool push_ok = true;
    for (int i = 0; i < 4 && push_ok; ++i)
        for (int j = 0; j < 4 && push_ok; ++j) {
            std::vector<Rat> ei(4, Rat(0)), ej(4, Rat(0));
            ei[i] = Rat(1);
            ej[j] = Rat(1);
            Rat lhs(0), rhs(0);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    lhs += ei[a] * lx.gram(a, b) * ej[b];
                    rhs += ei[a] * dual.dual.gram(a, b) * ej[b];
                }
            if (lhs != Rat(3) * rhs) push_ok = false;
        }
    r.add("(q_* a, q_* a') = 3 (a, a')", push_ok);

    // q^* is multiplication by 3 on dual coordinates; its image 3 * dual
    // basis must lie in L_A (integral gamma coordinates), and pairings scale
    // by 3 the other way
    RatMat pullback_coords = dual.coords.scaled(Rat(3));
    bool integral = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (rat_den(pullback_coords(i, j)) != 1) integral = false;
    bool pull_ok = integral;
    if (pull_ok) {
        RatMat pairings = pullback_coords.transposed() * la.gram * pullback_coords;
        pull_ok = pairings == lx.gram.scaled(Rat(3));
    }
    r.add("(q^* xi, q^* xi') = 3 (xi, xi') with q^*(L_X) inside L_A", pull_ok,
          Json{{"pullback_coords", mat_json(pullback_coords)}});

    // composite q_* q^* = multiplication by 3
    RatMat composite = RatMat::identity(4) * RatMat::identity(4).scaled(Rat(3));
    r.add("q_* q^* acts as multiplication by 3", composite == RatMat::identity(4).scaled(Rat(3)));

    // (c) discriminant bookkeeping
    Rat d_dual = discriminant(dual.dual);
    bool disc_ok = Rat(81) * d_dual == Rat(-27) && discriminant(lx) == Rat(-27);
    r.add("3^4 d(dual L_A) = -3^3 = d(L_X)", disc_ok,
          Json{{"d_dual", str(d_dual)}, {"d_lx", str(discriminant(lx))}});

    bool consts_ok = cs.d_ibar == 27 && cs.d_lx == -27 &&
                     cs.d_i == Int(19683) && int_divexact(cs.d_i, cs.index * cs.index) == cs.d_ibar &&
                     Rat(-cs.d_ibar) == discriminant(lx);
    r.add("constants: d(I) = 3^9, |Ibar/I| = 3^3, d(Ibar) = 3^3, d(L_X) = -3^3", consts_ok);

    auto sig = signature(lx.gram);
    r.add("L_X has signature (3,1)", sig == std::pair<int, int>(3, 1),
          Json{{"positive", sig.first}, {"negative", sig.second}});

    return r;
}

} // namespace cusplab
