#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cusplab/lattice.hpp"
#include "cusplab/torus_action.hpp"

using namespace cusplab;

namespace {

GramLattice lx_like() {
    RatMat g{{Rat(0), Rat(3), Rat(0), Rat(0)},
             {Rat(3), Rat(0), Rat(0), Rat(0)},
             {Rat(0), Rat(0), Rat(6), Rat(3)},
             {Rat(0), Rat(0), Rat(3), Rat(2)}};
    return GramLattice(g);
}

GramLattice random_integral_lattice(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> d(-4, 4);
    for (;;) {
        RatMat g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                Rat v{Rat(d(rng))};
                g(i, j) = v;
                g(j, i) = v;
            }
        GramLattice l{g};
        if (discriminant(l) != 0) return l;
    }
}

} // namespace

TEST_CASE("discriminant chain of the invariant lattice") {
    GramLattice la = la_lattice();
    CHECK(discriminant(la) == Rat(-3));
    DualBasis dual = dual_basis(la);
    CHECK(discriminant(dual.dual) == make_rat(-1, 3));
    CHECK(discriminant(lx_like()) == Rat(-27));
}

TEST_CASE("dual basis of the invariant lattice matches the paper") {
    GramLattice la = la_lattice();
    DualBasis dual = dual_basis(la);
    // basis g1, g2, g3, (g3+g4)/3 in primal coordinates
    RatMat expect_coords{{Rat(1), Rat(0), Rat(0), Rat(0)},
                         {Rat(0), Rat(1), Rat(0), Rat(0)},
                         {Rat(0), Rat(0), Rat(1), make_rat(1, 3)},
                         {Rat(0), Rat(0), Rat(0), make_rat(1, 3)}};
    CHECK(dual.coords == expect_coords);
    RatMat expect_gram{{Rat(0), Rat(1), Rat(0), Rat(0)},
                       {Rat(1), Rat(0), Rat(0), Rat(0)},
                       {Rat(0), Rat(0), Rat(2), Rat(1)},
                       {Rat(0), Rat(0), Rat(1), make_rat(2, 3)}};
    CHECK(dual.dual.gram == expect_gram);
}

TEST_CASE("dual basis: unimodular lattice and the A2 example") {
    SUBCASE("unimodular is self-dual") {
        GramLattice z2{RatMat{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
        DualBasis d = dual_basis(z2);
        CHECK(d.coords == RatMat::identity(2));
        CHECK(d.dual.gram == z2.gram);
    }
    SUBCASE("A2: dual lattice is spanned by the inverse gram columns") {
        GramLattice a2{RatMat{{Rat(2), Rat(1)}, {Rat(1), Rat(2)}}};
        DualBasis d = dual_basis(a2);
        // oracle: invert the gram matrix
        RatMat ginv = inverse_field(a2.gram);
        CHECK(ginv == RatMat{{make_rat(2, 3), make_rat(-1, 3)},
                             {make_rat(-1, 3), make_rat(2, 3)}});
        // the inverse-gram columns span the same lattice as the returned
        // canonical basis: the change of basis between them is unimodular
        RatMat change(2, 2);
        for (int j = 0; j < 2; ++j) change.set_col(j, solve_field(d.coords, ginv.col(j)));
        IntMat chg = to_int_checked(change);
        CHECK(abs(det(chg)) == 1);
        // and in the inverse-gram basis the pairing matrix is exactly ginv
        CHECK(ginv.transposed() * a2.gram * ginv == ginv);
        CHECK(discriminant(d.dual) == make_rat(1, 3));
    }
    SUBCASE("degenerate lattice rejected") {
        GramLattice deg{RatMat{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}};
        CHECK_THROWS_AS(dual_basis(deg), degenerate_error);
    }
}

TEST_CASE("rescale") {
    GramLattice la = la_lattice();
    CHECK(rescale(la, Rat(1)).gram == la.gram);
    DualBasis dual = dual_basis(la);
    RatMat scaled = rescale(dual.dual, Rat(3)).gram;
    RatMat expect{{Rat(0), Rat(3), Rat(0), Rat(0)},
                  {Rat(3), Rat(0), Rat(0), Rat(0)},
                  {Rat(0), Rat(0), Rat(6), Rat(3)},
                  {Rat(0), Rat(0), Rat(3), Rat(2)}};
    CHECK(scaled == expect);
    GramLattice a2{RatMat{{Rat(2), Rat(1)}, {Rat(1), Rat(2)}}};
    CHECK(rescale(a2, Rat(-1)).gram == RatMat{{Rat(-2), Rat(-1)}, {Rat(-1), Rat(-2)}});
    CHECK_THROWS_AS(rescale(la, Rat(0)), zero_scale_error);
}

TEST_CASE("primitive sublattice queries") {
    IntMat triple(2, 1);
    triple(0, 0) = 3;
    auto [p, divs] = is_primitive_sublattice(triple);
    CHECK_FALSE(p);
    REQUIRE(divs.size() == 1);
    CHECK(divs[0] == 3);
}

TEST_CASE("bounded representability") {
    GramLattice lx = lx_like();

    SUBCASE("degree 2 is hit; the paper's witness satisfies the form") {
        auto hit = represents(lx, Int(2), Int(5));
        REQUIRE(hit.has_value());
        CHECK(lattice_norm(lx, *hit) == Rat(2));
        std::vector<Int> paper_witness = {Int(1), Int(0), Int(0), Int(1)};
        CHECK(lattice_norm(lx, paper_witness) == Rat(2));
    }
    SUBCASE("degree 4 misses every box vector (quartic impossibility, bounded form)") {
        CHECK_FALSE(represents(lx, Int(4), Int(20)).has_value());
    }
    SUBCASE("the complement lattice misses -12") {
        GramLattice dl = delta_lattice();
        CHECK_FALSE(represents(dl, Int(-12), Int(100)).has_value());
    }
    SUBCASE("found witnesses always satisfy the form") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> dc(-30, 30);
        for (int trial = 0; trial < 50; ++trial) {
            GramLattice l = random_integral_lattice(rng, 2 + trial % 2);
            Int c(dc(rng));
            auto hit = represents(l, c, Int(6));
            if (hit) CHECK(lattice_norm(l, *hit) == Rat(c));
        }
    }
}

TEST_CASE("shortest vectors") {
    SUBCASE("standard Z^2") {
        ShortestVectors sv = shortest_vectors(GramLattice{RatMat::identity(2)});
        CHECK(sv.min_norm == Rat(1));
        REQUIRE(sv.vectors.size() == 2);
        CHECK(sv.vectors[0] == std::vector<Int>{Int(0), Int(1)});
        CHECK(sv.vectors[1] == std::vector<Int>{Int(1), Int(0)});
    }
    SUBCASE("A2 has three minimal vectors up to sign") {
        GramLattice a2{RatMat{{Rat(2), Rat(1)}, {Rat(1), Rat(2)}}};
        ShortestVectors sv = shortest_vectors(a2);
        CHECK(sv.min_norm == Rat(2));
        CHECK(sv.vectors.size() == 3); // e1, e2, e1 - e2 up to sign
    }
    SUBCASE("indefinite forms are rejected") {
        CHECK_THROWS_AS(shortest_vectors(la_lattice()), not_positive_definite_error);
    }
    SUBCASE("stability under unimodular base change") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> d(-2, 2);
        for (int trial = 0; trial < 40; ++trial) {
            int n = 2 + trial % 2;
            // random positive definite gram: B^T B + I for random integer B
            IntMat b(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) b(i, j) = d(rng);
            IntMat g = b.transposed() * b + IntMat::identity(n);
            GramLattice l{to_rat(g)};
            IntMat v;
            do {
                v = IntMat(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) v(i, j) = d(rng);
            } while (abs(det(v)) != 1);
            GramLattice l2{to_rat(v.transposed() * g * v)};
            ShortestVectors s1 = shortest_vectors(l);
            ShortestVectors s2 = shortest_vectors(l2);
            CHECK(s1.min_norm == s2.min_norm);
            CHECK(s1.vectors.size() == s2.vectors.size());
        }
    }
}

TEST_CASE("lattice invariants on random data") {
    std::mt19937 rng(31415);
    std::uniform_int_distribution<int> dm(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        GramLattice l = random_integral_lattice(rng, 2 + trial % 3);
        Rat disc = discriminant(l);

        SUBCASE("") {}
        Rat m{Rat(dm(rng))};
        if (m != 0) {
            Rat expected = disc;
            for (int i = 0; i < l.rank(); ++i) expected *= m;
            CHECK(discriminant(rescale(l, m)) == expected);
        }

        DualBasis d = dual_basis(l);
        CHECK(discriminant(d.dual) == Rat(1) / disc);

        // dual of the dual, with respect to the original pairing, is the
        // original lattice: its canonical coordinates are the identity
        DualBasis dd = dual_basis(GramLattice{d.dual.gram});
        RatMat back = d.coords * dd.coords;
        IntMat bz = to_int_checked(back);
        CHECK(abs(det(bz)) == 1);
        RatMat gram_back = back.transposed() * l.gram * back;
        CHECK(det(gram_back) == disc);
        CHECK(same_column_lattice(hnf_upper_cols(bz), IntMat::identity(l.rank())));
    }
}
