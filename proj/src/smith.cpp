#include "cusplab/smith.hpp"

namespace cusplab {

Int det(const IntMat& m) {
    if (!m.is_square()) throw nonsquare_error("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return Int(1);
    IntMat a = m;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { piv = i; break; }
            if (piv < 0) return Int(0);
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a(i, j) = int_divexact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Rat det(const RatMat& m) {
    if (!m.is_square()) throw nonsquare_error("determinant of non-square matrix");
    int n = m.rows();
    IntMat cleared(n, n);
    Rat scale(1);
    for (int i = 0; i < n; ++i) {
        Int l(1);
        for (int j = 0; j < n; ++j) l = int_lcm(l, rat_den(m(i, j)));
        for (int j = 0; j < n; ++j) {
            Rat x = m(i, j) * Rat(l);
            cleared(i, j) = rat_num(x);
        }
        scale /= Rat(l);
    }
    return Rat(det(cleared)) * scale;
}

IntMat to_int_checked(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (rat_den(m(i, j)) != 1) throw error("matrix entry is not an integer");
            r(i, j) = rat_num(m(i, j));
        }
    return r;
}

namespace {

// Moves the nonzero entry of smallest absolute value in the trailing
// submatrix to the pivot seat, mirroring all moves in the transforms.
bool move_min_to_pivot(IntMat& a, IntMat& u, IntMat& v, int k) {
    int bi = -1, bj = -1;
    Int best(0);
    for (int i = k; i < a.rows(); ++i)
        for (int j = k; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int m = abs(a(i, j));
            if (bi < 0 || m < best) { best = m; bi = i; bj = j; }
        }
    if (bi < 0) return false;
    if (bi != k) { a.swap_rows(k, bi); u.swap_rows(k, bi); }
    if (bj != k) { a.swap_cols(k, bj); v.swap_cols(k, bj); }
    return true;
}

} // namespace

SmithResult smith_normal_form(const IntMat& m) {
    int rows = m.rows(), cols = m.cols();
    IntMat a = m;
    IntMat u = IntMat::identity(rows);
    IntMat v = IntMat::identity(cols);
    int n = std::min(rows, cols);
    for (int k = 0; k < n; ++k) {
        for (;;) {
            if (!move_min_to_pivot(a, u, v, k)) goto done;
            bool dirty = false;
            for (int i = k + 1; i < rows; ++i) {
                if (a(i, k) == 0) continue;
                Int q = a(i, k) / a(k, k); // truncated division keeps remainders small
                if (q != 0) { a.add_row(i, k, -q); u.add_row(i, k, -q); }
                if (a(i, k) != 0) dirty = true;
            }
            for (int j = k + 1; j < cols; ++j) {
                if (a(k, j) == 0) continue;
                Int q = a(k, j) / a(k, k);
                if (q != 0) { a.add_col(j, k, -q); v.add_col(j, k, -q); }
                if (a(k, j) != 0) dirty = true;
            }
            if (dirty) continue;
            // pivot must divide the whole trailing block
            bool divides = true;
            for (int i = k + 1; i < rows && divides; ++i)
                for (int j = k + 1; j < cols && divides; ++j)
                    if (a(i, j) % a(k, k) != 0) {
                        a.add_row(k, i, Int(1));
                        u.add_row(k, i, Int(1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (a(k, k) < 0) { a.negate_row(k); u.negate_row(k); }
    }
done:
    return SmithResult{u, a, v};
}

IntMat saturate(const IntMat& b) {
    int r = b.cols();
    SmithResult s = smith_normal_form(b);
    if (static_cast<int>(s.divisors().size()) != r)
        throw rank_deficient_error("saturate: columns are not independent");
    // b v = u^{-1} d, so the saturation is spanned by the first r columns
    // of u^{-1}.
    IntMat uinv = to_int_checked(inverse_field(to_rat(s.u)));
    return uinv.cols_slice(0, r);
}

std::pair<bool, std::vector<Int>> primitivity(const IntMat& b) {
    SmithResult s = smith_normal_form(b);
    std::vector<Int> ds = s.divisors();
    if (static_cast<int>(ds.size()) != b.cols())
        throw rank_deficient_error("primitivity: columns are not independent");
    bool prim = true;
    for (const Int& d : ds)
        if (d != 1) prim = false;
    return {prim, ds};
}

IntMat integer_kernel(const IntMat& m) {
    SmithResult s = smith_normal_form(m);
    int n = std::min(m.rows(), m.cols());
    std::vector<int> zero_cols;
    for (int j = 0; j < m.cols(); ++j)
        if (j >= n || s.d(j, j) == 0) zero_cols.push_back(j);
    IntMat ker(m.cols(), static_cast<int>(zero_cols.size()));
    for (std::size_t j = 0; j < zero_cols.size(); ++j)
        ker.set_col(static_cast<int>(j), s.v.col(zero_cols[j]));
    return ker;
}

IntMat hnf_upper_cols(const IntMat& a) {
    IntMat h = a;
    int rows = h.rows(), cols = h.cols();
    int right = cols; // columns [right, cols) already hold pivots
    std::vector<int> pivot_row_of; // per pivot column
    for (int i = rows - 1; i >= 0 && right > 0; --i) {
        // gcd-out row i across the undetermined columns [0, right)
        for (;;) {
            int nz = -1;
            Int best(0);
            for (int j = 0; j < right; ++j) {
                if (h(i, j) == 0) continue;
                Int m = abs(h(i, j));
                if (nz < 0 || m < best) { best = m; nz = j; }
            }
            if (nz < 0) break;
            bool reduced = true;
            for (int j = 0; j < right; ++j) {
                if (j == nz || h(i, j) == 0) continue;
                Int q = h(i, j) / h(i, nz);
                if (q != 0) h.add_col(j, nz, -q);
                if (h(i, j) != 0) reduced = false;
            }
            if (reduced) {
                if (h(i, nz) < 0) h.negate_col(nz);
                --right;
                h.swap_cols(nz, right);
                pivot_row_of.insert(pivot_row_of.begin(), i);
                break;
            }
        }
    }
    IntMat out = h.cols_slice(right, cols - right);
    // reduce entries right of each pivot into [0, pivot); descending j so a
    // reduction never disturbs rows already reduced against a later pivot
    for (int j = out.cols() - 1; j >= 0; --j) {
        int pr = pivot_row_of[j];
        for (int j2 = j + 1; j2 < out.cols(); ++j2) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), out(pr, j2).get_mpz_t(), out(pr, j).get_mpz_t());
            if (q != 0) out.add_col(j2, j, -q);
        }
    }
    return out;
}

} // namespace cusplab
