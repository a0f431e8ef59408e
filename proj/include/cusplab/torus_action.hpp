#pragma once

#include "cusplab/lattice.hpp"
#include "cusplab/matrix.hpp"

namespace cusplab {

// The order-3 action on H_1 = Z^4 in the basis (a1, b1, a2, b2) and its
// wedge square on H_2 = Z^6 in the basis
//   (a1^b1, a1^a2, a1^b2, b1^a2, b1^b2, a2^b2),
// with orientation generator a1^a2^b1^b2 fixing all pairing signs.

IntMat t_matrix();  // 4x4, t(a1)=b1, t(b1)=-a1-b1, t(a2)=b2, t(b2)=-a2-b2
IntMat t2_matrix(); // the 2x2 block [[0,-1],[1,-1]]

const std::vector<std::string>& wedge_labels();

// Second exterior power of a 4x4 matrix on the wedge basis above.
template <typename T>
Mat<T> wedge_square(const Mat<T>& m) {
    if (m.rows() != 4 || m.cols() != 4) throw error("wedge_square expects a 4x4 matrix");
    static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    Mat<T> w(6, 6);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int i = pairs[a][0], j = pairs[a][1];
            int k = pairs[b][0], l = pairs[b][1];
            w(a, b) = m(i, k) * m(j, l) - m(i, l) * m(j, k);
        }
    return w;
}

// Pairing (u,v) = (u ^ v) / (a1^a2^b1^b2) on wedge coordinates.
template <typename T>
T wedge_pairing(const std::vector<T>& u, const std::vector<T>& v) {
    if (u.size() != 6 || v.size() != 6) throw error("wedge vectors have 6 coordinates");
    // u ^ v = c * e1^e2^e3^e4 and the orientation generator is -e1^e2^e3^e4
    T c = u[0] * v[5] - u[1] * v[4] + u[2] * v[3] + u[3] * v[2] - u[4] * v[1] + u[5] * v[0];
    return -c;
}

// Gram matrix of a list of wedge vectors (columns of v).
RatMat wedge_gram(const IntMat& v);

IntMat gamma_basis(); // 6x4: g1 = -a1^b1, g2 = a2^b2, g3 = a1^b2 - b1^a2,
                      //      g4 = a1^a2 + a1^b2 + b1^b2
IntMat delta_basis(); // 6x2: d1 = a1^a2 - b1^b2, d2 = a1^b2 + b1^a2 + b1^b2

// Saturated basis of the fixed sublattice of a 6x6 integer action.
IntMat invariant_lattice(const IntMat& m6);

// Saturated basis of the orthogonal complement of span(columns of s) under
// the wedge pairing.
IntMat orthogonal_complement(const IntMat& s);

// det(a, Ta, b, Tb); >= 0 for every integer pair (the orientation lemma).
Int orientation_det(const std::vector<Int>& a, const std::vector<Int>& b);

// m = x*I + y*T2 when m commutes with T2.
std::pair<Int, Int> commutant_decompose(const IntMat& m);

// integer, det 1, commutes with the 4x4 action
bool is_in_g(const IntMat& g);

// Induced action of g on the invariant lattice, in gamma coordinates.
IntMat g_action_on_la(const IntMat& g);

// Unimodular u with u^{-1} m u = t_matrix(), built from shortest vectors of
// the averaged form s0 + m^T m + (m^2)^T m^2.
IntMat order3_normal_form(const IntMat& m);

// (p, q) = (-1, -1), the unique rational solution of [[0,p],[1,q]]^3 = I,
// rechecking the closed form of the cube along the way.
struct Order3Solution {
    Rat p, q;
    bool cube_formula_ok;  // [[pq, p(p+q^2)], [p+q^2, q(2p+q^2)]] symbolically
    bool q_zero_infeasible; // the q = 0 branch has no rational solution
};
Order3Solution order3_solve();

GramLattice la_lattice(); // Gram of (g1..g4): [[0,1,0,0],[1,0,0,0],[0,0,2,1],[0,0,1,2]]
GramLattice delta_lattice(); // Gram of (d1,d2): [[-2,1],[1,-2]]

// (#positive, #negative) eigenvalues of a symmetric rational matrix, by
// Descartes sign changes on the characteristic polynomial.
std::pair<int, int> signature(const RatMat& gram);

} // namespace cusplab
