#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cusplab/gaussian.hpp"
#include "cusplab/lattice.hpp"
#include "cusplab/matrix.hpp"
#include "cusplab/ratfunc.hpp"
#include "cusplab/smith.hpp"

using namespace cusplab;

namespace {

IntMat random_int_mat(std::mt19937& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

UPolyZ random_upoly(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> dd(0, maxdeg), dc(-5, 5);
    std::vector<Int> c(dd(rng) + 1);
    for (auto& x : c) x = dc(rng);
    return UPolyZ(std::move(c));
}

} // namespace

TEST_CASE("determinant: pinned cases") {
    CHECK(det(IntMat::identity(4)) == 1);
    IntMat gram_gamma{{Int(0), Int(1), Int(0), Int(0)},
                      {Int(1), Int(0), Int(0), Int(0)},
                      {Int(0), Int(0), Int(2), Int(1)},
                      {Int(0), Int(0), Int(1), Int(2)}};
    CHECK(det(gram_gamma) == -3);
    IntMat a2{{Int(2), Int(1)}, {Int(1), Int(2)}};
    CHECK(det(a2) == 3); // 2*2 - 1*1 by cofactor expansion
    CHECK(det(IntMat(0, 0)) == 1);
    CHECK_THROWS_AS(det(IntMat(2, 3)), nonsquare_error);
}

TEST_CASE("determinant: Bareiss agrees with cofactor expansion") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 1200; ++trial) {
        int n = 1 + trial % 4;
        IntMat m = random_int_mat(rng, n, -9, 9);
        CHECK(det(m) == det_cofactor(m));
    }
}

TEST_CASE("determinant: rational matrices") {
    RatMat m{{make_rat(1, 2), make_rat(1, 3)}, {make_rat(1, 4), make_rat(1, 5)}};
    CHECK(det(m) == make_rat(1, 60)); // 1/10 - 1/12
}

TEST_CASE("smith normal form: pinned cases") {
    SUBCASE("identity") {
        SmithResult s = smith_normal_form(IntMat::identity(3));
        CHECK(s.d == IntMat::identity(3));
        CHECK(s.u * IntMat::identity(3) * s.v == s.d);
    }
    SUBCASE("A2 gram") {
        IntMat m{{Int(2), Int(1)}, {Int(1), Int(2)}};
        SmithResult s = smith_normal_form(m);
        // by hand: row-reduce (2 1 / 1 2) -> (1 0 / 0 3)
        CHECK(s.d(0, 0) == 1);
        CHECK(s.d(1, 1) == 3);
        CHECK(s.u * m * s.v == s.d);
    }
    SUBCASE("scalar matrix") {
        IntMat m = IntMat::identity(4).scaled(Int(3));
        SmithResult s = smith_normal_form(m);
        for (int i = 0; i < 4; ++i) CHECK(s.d(i, i) == 3);
    }
}

TEST_CASE("smith normal form: transform invariants on random matrices") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 300; ++trial) {
        int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
        std::uniform_int_distribution<int> d(-9, 9);
        IntMat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
        SmithResult s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(abs(det(s.u)) == 1);
        CHECK(abs(det(s.v)) == 1);
        auto ds = s.divisors();
        for (std::size_t i = 0; i + 1 < ds.size(); ++i) CHECK(ds[i + 1] % ds[i] == 0);
        for (int i = 0; i < s.d.rows(); ++i)
            for (int j = 0; j < s.d.cols(); ++j)
                if (i != j) CHECK(s.d(i, j) == 0);
    }
}

TEST_CASE("saturate: pinned cases") {
    SUBCASE("scalar multiple") {
        IntMat b(2, 1);
        b(0, 0) = 3;
        b(1, 0) = 0;
        IntMat s = saturate(b);
        IntMat expect(2, 1);
        expect(0, 0) = 1;
        expect(1, 0) = 0;
        CHECK(same_column_lattice(s, expect));
    }
    SUBCASE("content removal") {
        IntMat b(2, 1);
        b(0, 0) = 2;
        b(1, 0) = 4;
        IntMat expect(2, 1);
        expect(0, 0) = 1;
        expect(1, 0) = 2;
        CHECK(same_column_lattice(saturate(b), expect));
    }
    SUBCASE("rank deficiency rejected") {
        IntMat b(2, 2);
        b(0, 0) = 1;
        b(0, 1) = 2; // second column dependent
        b(1, 0) = 1;
        b(1, 1) = 2;
        CHECK_THROWS_AS(saturate(b), rank_deficient_error);
    }
}

TEST_CASE("saturate: idempotent, index = product of divisors") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> d(-6, 6);
    int done = 0;
    while (done < 200) {
        int n = 2 + done % 3, r = 1 + done % n;
        IntMat b(n, r);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < r; ++j) b(i, j) = d(rng);
        SmithResult s = smith_normal_form(b);
        if (static_cast<int>(s.divisors().size()) != r) continue; // need full column rank
        ++done;
        IntMat sat = saturate(b);
        CHECK(same_column_lattice(saturate(sat), sat));
        // b = sat * t with integral t, |det t| = product of the divisors
        RatMat srat = to_rat(sat);
        RatMat gram = srat.transposed() * srat;
        RatMat rhs = srat.transposed() * to_rat(b);
        RatMat t(r, r);
        for (int j = 0; j < r; ++j) t.set_col(j, solve_field(gram, rhs.col(j)));
        IntMat tz = to_int_checked(t);
        CHECK(to_rat(sat) * t == to_rat(b));
        Int idx(1);
        for (const Int& dv : s.divisors()) idx *= dv;
        CHECK(abs(det(tz)) == idx);
    }
}

TEST_CASE("rational function: canonical form and arithmetic") {
    RatFunc k = RatFunc::k();
    SUBCASE("specialization examples") {
        RatFunc f = (RatFunc(1) - k * k) / (RatFunc(1) + k);
        CHECK(f.eval(Rat(2)) == Rat(-1));
        CHECK(f == RatFunc(1) - k); // (1-k^2)/(1+k) reduces
        RatFunc g = RatFunc(1) / (RatFunc(1) - k);
        CHECK_THROWS_AS(g.eval(Rat(1)), pole_error);
        RatFunc h = (RatFunc(1) + k) * (RatFunc(1) + k) * (RatFunc(1) + k);
        CHECK(h.eval_mod(Rat(2), 101).value() == 27);
    }
    SUBCASE("denominator normalization") {
        RatFunc f(UPolyZ(std::vector<Int>{Int(2)}), UPolyZ(std::vector<Int>{Int(0), Int(-4)}));
        // 2/(-4k) = -1/(2k): reduced, positive leading denominator
        CHECK(f.den().leading() > 0);
        CHECK(f.num().coeff(0) == -1);
        CHECK(f.den().coeff(1) == 2);
    }
    SUBCASE("field axioms on random triples") {
        std::mt19937 rng(99);
        for (int t = 0; t < 200; ++t) {
            RatFunc a(random_upoly(rng, 3), UPolyZ(1));
            RatFunc b(random_upoly(rng, 3), UPolyZ(1));
            RatFunc c(random_upoly(rng, 2), UPolyZ(1));
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == RatFunc(0));
            if (!c.is_zero()) CHECK((a / c) * c == a);
        }
    }
    SUBCASE("badprime on modular specialization") {
        RatFunc f = RatFunc(1) / (k - RatFunc(2));
        CHECK_THROWS_AS(f.eval_mod(Rat(2), 101), bad_prime_error);
        CHECK_THROWS_AS(f.eval_mod(Rat(3), 10), bad_prime_error); // 10 not prime
        CHECK_THROWS_AS(RatFunc(make_rat(1, 101)).eval_mod(Rat(5), 101), bad_prime_error);
    }
}

TEST_CASE("upoly: gcd and roots") {
    UPolyZ k = UPolyZ::var();
    UPolyZ a = (k - UPolyZ(1)) * (k + UPolyZ(2));      // k^2+k-2
    UPolyZ b = (k - UPolyZ(1)) * (k - UPolyZ(3));      // k^2-4k+3
    CHECK(upoly_gcd(a, b) == k - UPolyZ(1));
    UPolyZ c = (k - UPolyZ(1)).scaled(Int(6)) * (k + UPolyZ(1));
    auto roots = c.rational_roots();
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rat(-1));
    CHECK(roots[1] == Rat(1));
    UPolyZ half{std::vector<Int>{Int(-1), Int(2)}}; // 2k-1
    auto r2 = half.rational_roots();
    REQUIRE(r2.size() == 1);
    CHECK(r2[0] == make_rat(1, 2));
}

TEST_CASE("gaussian rationals") {
    GaussQ i = GaussQ::i();
    CHECK(i * i == GaussQ(Rat(-1)));
    GaussQ z(make_rat(1, 2), make_rat(-3, 4));
    CHECK(z.conj().conj() == z);
    CHECK((z * z.conj()).im == 0);
    CHECK(z + (-z) == GaussQ());
    GaussQ w = z / GaussQ(Rat(2), Rat(1));
    CHECK(w * GaussQ(Rat(2), Rat(1)) == z);
    CHECK(str(GaussQ(Rat(0), Rat(1))) == "i");
}

TEST_CASE("prime field") {
    Fp a(5, 101), b(97, 101);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == (5 * 97) % 101);
    CHECK((a / b) * b == a);
    CHECK(Fp::from_rat(make_rat(1, 2), 101).value() == 51);
    CHECK_THROWS_AS(Fp::from_rat(make_rat(1, 101), 101), bad_prime_error);
}
