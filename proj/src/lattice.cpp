#include "cusplab/lattice.hpp"

#include <algorithm>
#include <set>

namespace cusplab {

Rat discriminant(const GramLattice& l) { return det(l.gram); }

GramLattice rescale(const GramLattice& l, const Rat& m) {
    if (m == 0) throw zero_scale_error("rescale by zero");
    return GramLattice(l.gram.scaled(m), l.labels);
}

// Works for any nondegenerate rational gram; the dual of L in its own
// coordinates is gram^{-1} Z^n, presented in canonical Hermite form.
DualBasis dual_basis(const GramLattice& l) {
    if (discriminant(l) == 0) throw degenerate_error("dual of a degenerate lattice");
    RatMat ginv = inverse_field(l.gram);
    Int m(1);
    for (int i = 0; i < ginv.rows(); ++i)
        for (int j = 0; j < ginv.cols(); ++j) m = int_lcm(m, rat_den(ginv(i, j)));
    IntMat cleared(ginv.rows(), ginv.cols());
    for (int i = 0; i < ginv.rows(); ++i)
        for (int j = 0; j < ginv.cols(); ++j) cleared(i, j) = rat_num(ginv(i, j) * Rat(m));
    IntMat h = hnf_upper_cols(cleared);
    RatMat coords = to_rat(h).scaled(Rat(1, m));
    RatMat dual_gram = coords.transposed() * l.gram * coords;
    std::vector<std::string> names;
    for (int j = 0; j < coords.cols(); ++j) names.push_back("d" + std::to_string(j + 1));
    return DualBasis{coords, GramLattice(dual_gram, names)};
}

std::pair<bool, std::vector<Int>> is_primitive_sublattice(const IntMat& b) {
    return primitivity(b);
}

namespace {

// Lexicographic box scan with the last coordinate solved exactly from the
// quadratic A x^2 + B x + C = c.
struct BoxSearch {
    const IntMat& g;
    Int c, bound;
    int n;
    std::vector<Int> v;
    std::optional<std::vector<Int>> hit;

    BoxSearch(const IntMat& gram, Int target, Int b)
        : g(gram), c(std::move(target)), bound(std::move(b)), n(gram.rows()), v(n, Int(0)) {}

    // lin[j] = sum_{i<depth} g(i,j) v_i ; quad = q(v_0..v_{depth-1})
    bool walk(int depth, std::vector<Int> lin, Int quad) {
        if (depth == n - 1) {
            const Int& a = g(n - 1, n - 1);
            Int b2 = 2 * lin[n - 1];
            Int rest = quad - c;
            return solve_last(a, b2, rest);
        }
        for (Int x = -bound; x <= bound; ++x) {
            std::vector<Int> lin2 = lin;
            for (int j = depth + 1; j < n; ++j) lin2[j] += g(depth, j) * x;
            Int quad2 = quad + g(depth, depth) * x * x + 2 * lin[depth] * x;
            v[depth] = x;
            if (walk(depth + 1, std::move(lin2), quad2)) return true;
        }
        return false;
    }

    bool accept(const Int& x) {
        if (abs(x) > bound) return false;
        v[n - 1] = x;
        hit = v;
        return true;
    }

    bool solve_last(const Int& a, const Int& b, const Int& rest) {
        if (a == 0) {
            if (b == 0) return rest == 0 ? accept(-bound) : false;
            Int x = -rest;
            if (x % b != 0) return false;
            return accept(int_divexact(x, b));
        }
        Int disc = b * b - 4 * a * rest;
        auto root = perfect_square_root(disc);
        if (!root) return false;
        Int r1 = (-b - *root), r2 = (-b + *root);
        std::vector<Int> xs;
        for (Int num : {r1, r2}) {
            if (num % (2 * a) != 0) continue;
            xs.push_back(int_divexact(num, 2 * a));
        }
        std::sort(xs.begin(), xs.end());
        for (const Int& x : xs)
            if (accept(x)) return true;
        return false;
    }
};

} // namespace

std::optional<std::vector<Int>> represents(const GramLattice& l, const Int& c, const Int& bound) {
    if (bound < 1) throw bad_parameter_error("represents: bound must be >= 1");
    if (!l.is_integral()) throw error("represents expects an integral lattice");
    IntMat g = l.gram_int();
    if (l.rank() == 1) {
        for (Int x = -bound; x <= bound; ++x)
            if (g(0, 0) * x * x == c) return std::vector<Int>{x};
        return std::nullopt;
    }
    BoxSearch search(g, c, bound);
    search.walk(0, std::vector<Int>(l.rank(), Int(0)), Int(0));
    return search.hit;
}

bool is_positive_definite(const GramLattice& l) {
    for (int k = 1; k <= l.rank(); ++k) {
        RatMat minor(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor(i, j) = l.gram(i, j);
        if (det(minor) <= 0) return false;
    }
    return true;
}

namespace {

// Nearest integer to a rational, rounding half up.
Int round_rat(const Rat& q) {
    Rat shifted = q + make_rat(1, 2);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), rat_num(shifted).get_mpz_t(), rat_den(shifted).get_mpz_t());
    return fl;
}

// Depth-first enumeration with center-out ordering per level and a radius
// that shrinks to the best norm seen, so skewed forms stay tractable.
struct Enumerator {
    int n;
    RatMat lmat;           // unit lower triangular
    std::vector<Rat> diag; // positive
    Rat radius;            // current search bound (inclusive)
    std::vector<Int> v;
    Rat best;              // 0 until the first nonzero vector is found
    std::vector<std::vector<Int>> minimal;

    void record(const Rat& norm) {
        bool zero = true;
        for (const auto& x : v)
            if (x != 0) zero = false;
        if (zero) return;
        if (best == 0 || norm < best) {
            best = norm;
            radius = norm;
            minimal.clear();
        }
        if (norm == best) minimal.push_back(v);
    }

    void run(int i, const Rat& used) {
        if (i < 0) {
            record(used);
            return;
        }
        Rat c(0);
        for (int j = i + 1; j < n; ++j) c += lmat(j, i) * Rat(v[j]);
        Int center = round_rat(-c);
        // walk outward: center, center+1, center-1, center+2, ...
        for (int dir = 0; dir < 2; ++dir) {
            Int x = (dir == 0) ? center : center - 1;
            Int step = (dir == 0) ? Int(1) : Int(-1);
            for (;;) {
                Rat w = Rat(x) + c;
                Rat cost = used + diag[i] * w * w;
                if (cost > radius) break; // monotone in this direction
                v[i] = x;
                run(i - 1, cost);
                x += step;
            }
        }
        v[i] = 0;
    }
};

} // namespace

ShortestVectors shortest_vectors(const GramLattice& l) {
    if (!is_positive_definite(l))
        throw not_positive_definite_error("shortest_vectors needs a positive definite form");
    int n = l.rank();
    // G = L D L^T by symmetric elimination (Schur complements stay symmetric)
    RatMat a = l.gram;
    RatMat lmat = RatMat::identity(n);
    std::vector<Rat> diag(n);
    for (int k = 0; k < n; ++k) {
        diag[k] = a(k, k);
        for (int i = k + 1; i < n; ++i) lmat(i, k) = a(i, k) / diag[k];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) -= lmat(i, k) * diag[k] * lmat(j, k);
    }
    Enumerator e;
    e.n = n;
    e.lmat = lmat;
    e.diag = diag;
    e.radius = l.gram(0, 0);
    for (int i = 1; i < n; ++i) e.radius = std::min(e.radius, l.gram(i, i));
    e.best = Rat(0);
    e.v.assign(n, Int(0));
    e.run(n - 1, Rat(0));

    std::set<std::vector<Int>> canon;
    for (const auto& vec : e.minimal) {
        std::vector<Int> w = vec;
        for (const auto& x : w) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : w) y = -y;
            break;
        }
        canon.insert(w);
    }
    return ShortestVectors{e.best, {canon.begin(), canon.end()}};
}

} // namespace cusplab
