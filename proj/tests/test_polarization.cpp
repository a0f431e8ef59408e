#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cusplab/polarization.hpp"
#include "cusplab/quotient.hpp"

using namespace cusplab;

namespace {

std::vector<Int> ivec(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("self intersection closed form") {
    CHECK(self_intersection(ivec({1, 1, 0, 0})) == 6);
    CHECK(self_intersection(ivec({1, 0, 0, 1})) == 2);
    CHECK(self_intersection(ivec({0, 0, 0, 0})) == 0);

    std::mt19937 rng(808);
    std::uniform_int_distribution<int> d(-50, 50);
    GramLattice lx = lx_gram();
    for (int t = 0; t < 10000; ++t) {
        std::vector<Int> n(4);
        for (auto& x : n) x = d(rng);
        CHECK(Rat(self_intersection(n)) == lattice_norm(lx, n)); // both routes agree
    }
}

TEST_CASE("mod 6 classification") {
    std::set<int> res = classify_mod6();
    CHECK(res == std::set<int>{0, 2});
    CHECK(res.count(4) == 0); // no quartic class
    CHECK(self_intersection(ivec({1, 0, 0, 1})) % 6 == 2);
}

TEST_CASE("polarization construction") {
    CHECK(construct_polarization(Int(6)) == ivec({1, 1, 0, 0}));
    CHECK(construct_polarization(Int(8)) == ivec({1, 1, 0, 1}));
    CHECK_THROWS_AS(construct_polarization(Int(4)), not_representable_error);
    CHECK_THROWS_AS(construct_polarization(Int(0)), not_representable_error);

    for (long d = 1; d <= 62; ++d) {
        if (d % 6 == 0 || d % 6 == 2) {
            std::vector<Int> n = construct_polarization(Int(d));
            CHECK(self_intersection(n) == d);
            Int g(0);
            for (const auto& x : n) g = int_gcd(g, x);
            CHECK(g == 1); // always primitive in L_X
        } else {
            CHECK_THROWS_AS(construct_polarization(Int(d)), not_representable_error);
        }
    }
}

TEST_CASE("la norms and dual primitivity") {
    CHECK(la_norm(ivec({1, 3, 0, 0})) == 6);   // g1 + 3 g2
    CHECK(la_norm(ivec({0, 0, 1, 1})) == 6);   // g3 + g4
    CHECK(la_norm(ivec({-1, 6, 2, 2})) == 12); // -g1 + 6 g2 + 2(g3+g4)

    CHECK(dual_coordinates(ivec({1, 3, 0, 0})) == ivec({1, 3, 0, 0}));
    CHECK(dual_coordinates(ivec({0, 0, 1, 1})) == ivec({0, 0, 0, 3}));
    CHECK(is_primitive_in_dual(ivec({1, 3, 0, 0})));
    CHECK_FALSE(is_primitive_in_dual(ivec({0, 0, 1, 1})));
    CHECK(is_primitive_in_dual(ivec({1, 0, 0, 0})));
    CHECK(is_primitive_in_dual(ivec({-1, 6, 2, 2})));
    CHECK_THROWS_AS(is_primitive_in_dual(ivec({0, 0, 0, 0})), zero_vector_error);

    SUBCASE("primitive in dual implies primitive in L_A") {
        std::mt19937 rng(1212);
        std::uniform_int_distribution<int> d(-9, 9);
        for (int t = 0; t < 2000; ++t) {
            std::vector<Int> v(4);
            for (auto& x : v) x = d(rng);
            bool zero = true;
            for (const auto& x : v)
                if (x != 0) zero = false;
            if (zero) continue;
            if (is_primitive_in_dual(v)) {
                Int g(0);
                for (const auto& x : v) g = int_gcd(g, x);
                CHECK(g == 1);
            }
        }
    }
}

TEST_CASE("elliptic curve exclusion search") {
    auto sols = elliptic_search(Int(200));
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == std::array<Int, 3>{Int(0), Int(0), Int(0)});

    // n = 1 asks for kk^2 - kk*ll + ll^2 = 6: nothing in a small box
    for (long kk = -10; kk <= 10; ++kk)
        for (long ll = -10; ll <= 10; ++ll)
            CHECK(kk * kk - kk * ll + ll * ll != 6);
}

TEST_CASE("descent certificate") {
    DescentCertificate cert = descent_check(Int(100));
    CHECK(cert.pass);
    CHECK(cert.residue_forces_divisibility);
    CHECK(cert.squares_found == 0);
    REQUIRE(cert.residue_table.size() == 9);
    for (const auto& row : cert.residue_table) {
        if (row.n_mod3 != 0 && row.l_mod3 != 0) {
            // 8 n^2 = 2 and l^2 = 1 mod 3
            CHECK((8 * row.n_mod3 * row.n_mod3) % 3 == 2);
            CHECK((row.l_mod3 * row.l_mod3) % 3 == 1);
            CHECK_FALSE(row.feasible);
        }
        CHECK(row.feasible == (row.n_mod3 == 0 && row.l_mod3 == 0));
    }
    // (3,3) reduces to (1,1), and 24 - 3 = 21 is not a square
    bool found_33 = false;
    for (const auto& red : cert.reductions) {
        CHECK(red.n == 3 * red.n3);
        CHECK(red.l == 3 * red.l3);
        if (red.n == 3 && red.l == 3) {
            found_33 = true;
            CHECK(red.n3 == 1);
            CHECK(red.l3 == 1);
        }
    }
    CHECK(found_33);
    CHECK_FALSE(perfect_square_root(Int(21)).has_value());
}
