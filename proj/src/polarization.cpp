#include "cusplab/polarization.hpp"

#include "cusplab/quotient.hpp"
#include "cusplab/torus_action.hpp"

namespace cusplab {

Int self_intersection(const std::vector<Int>& n) {
    if (n.size() != 4) throw error("expected 4 coordinates");
    Int closed = 6 * n[0] * n[1] + 6 * (n[2] * n[2] + n[2] * n[3]) + 2 * n[3] * n[3];
    Rat via_gram = lattice_norm(lx_gram(), n);
    if (Rat(closed) != via_gram) throw error("closed form disagrees with the gram form");
    return closed;
}

std::set<int> classify_mod6() {
    std::set<int> residues;
    std::vector<Int> n(4);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                for (int d = 0; d < 6; ++d) {
                    n[0] = a; n[1] = b; n[2] = c; n[3] = d;
                    Int v = self_intersection(n) % 6;
                    residues.insert(static_cast<int>(v.get_si()));
                }
    return residues;
}

std::vector<Int> construct_polarization(const Int& d) {
    if (d <= 0) throw not_representable_error("degree must be positive");
    std::vector<Int> n(4, Int(0));
    if (d % 6 == 0) {
        n[0] = 1;
        n[1] = int_divexact(d, Int(6));
    } else if (d % 6 == 2) {
        n[0] = 1;
        n[1] = int_divexact(d - 2, Int(6));
        n[3] = 1;
    } else {
        throw not_representable_error("degree " + str(d) +
                                      " is not 0 or 2 mod 6: the form only attains {0,2}");
    }
    if (self_intersection(n) != d) throw error("constructed class has the wrong degree");
    return n;
}

Rat la_norm(const std::vector<Int>& v) { return lattice_norm(la_lattice(), v); }

std::vector<Int> dual_coordinates(const std::vector<Int>& v) {
    if (v.size() != 4) throw error("expected 4 coordinates");
    // inverse of the dual basis matrix [[1,0,0,0],[0,1,0,0],[0,0,1,1/3],[0,0,0,1/3]]
    return {v[0], v[1], v[2] - v[3], 3 * v[3]};
}

bool is_primitive_in_dual(const std::vector<Int>& v) {
    bool zero = true;
    for (const auto& x : v)
        if (x != 0) zero = false;
    if (zero) throw zero_vector_error("primitivity of the zero vector");
    std::vector<Int> d = dual_coordinates(v);
    Int g(0);
    for (const auto& x : d) g = int_gcd(g, x);
    return g == 1;
}

std::vector<std::array<Int, 3>> elliptic_search(const Int& bound) {
    if (bound < 1) throw bad_parameter_error("bound must be >= 1");
    std::vector<std::array<Int, 3>> hits;
    // 12 n^2 = 2 (kk^2 - kk ll + ll^2): solve the quadratic in kk per (n, ll)
    for (Int n = -bound; n <= bound; ++n)
        for (Int l = -bound; l <= bound; ++l) {
            // kk^2 - l kk + (l^2 - 6 n^2) = 0
            Int disc = l * l - 4 * (l * l - 6 * n * n);
            auto root = perfect_square_root(disc);
            if (!root) continue;
            for (int s : {-1, 1}) {
                Int num = l + s * *root;
                if (num % 2 != 0) continue;
                Int kk = int_divexact(num, Int(2));
                if (abs(kk) > bound) continue;
                if (12 * n * n - 2 * (kk * kk - kk * l + l * l) != 0) continue;
                std::array<Int, 3> sol{n, kk, l};
                bool seen = false;
                for (const auto& h : hits)
                    if (h == sol) seen = true;
                if (!seen) hits.push_back(sol);
            }
        }
    return hits;
}

DescentCertificate descent_check(const Int& max_n) {
    if (max_n < 1) throw bad_parameter_error("max_n must be >= 1");
    DescentCertificate cert;
    cert.max_n = max_n;
    cert.squares_found = 0;

    cert.residue_forces_divisibility = true;
    for (int nr = 0; nr < 3; ++nr)
        for (int lr = 0; lr < 3; ++lr) {
            int lhs = ((8 * nr * nr - lr * lr) % 3 + 3) % 3;
            bool feasible = lhs == 0;
            cert.residue_table.push_back({nr, lr, lhs, feasible});
            if (feasible && !(nr == 0 && lr == 0)) cert.residue_forces_divisibility = false;
        }

    for (Int n = 1; n <= max_n; ++n) {
        // l range: 24 n^2 - 3 l^2 >= 0
        Int lmax = isqrt_floor(8 * n * n);
        if (lmax * lmax < 8 * n * n) lmax += 1; // ceil(sqrt(8) n)
        for (Int l = -lmax; l <= lmax; ++l) {
            Int val = 24 * n * n - 3 * l * l;
            if (val >= 0 && perfect_square_root(val)) ++cert.squares_found;
            if (n % 3 == 0 && l % 3 == 0)
                cert.reductions.push_back(
                    {n, l, int_divexact(n, Int(3)), int_divexact(l, Int(3))});
        }
    }
    cert.pass = cert.residue_forces_divisibility && cert.squares_found == 0;
    return cert;
}

} // namespace cusplab
