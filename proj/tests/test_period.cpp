#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cusplab/period.hpp"

using namespace cusplab;

namespace {

GaussQ rand_gauss(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    return GaussQ(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)));
}

} // namespace

TEST_CASE("period relations in the adapted rank-4 chart") {
    RatMat b = adapted_form_4();

    SUBCASE("a valid period") {
        std::vector<GaussQ> w = {GaussQ::i(), GaussQ(Rat(0)), GaussQ(Rat(1)), GaussQ(Rat(-1))};
        PeriodRelations rel = period_relations(w, b);
        CHECK(rel.selfpair == GaussQ());
        CHECK(rel.hermitian == Rat(2));
        CHECK(rel.valid);
    }
    SUBCASE("the single degenerate point (0,0,0,1)") {
        std::vector<GaussQ> w = {GaussQ(Rat(0)), GaussQ(Rat(0)), GaussQ(Rat(0)), GaussQ(Rat(1))};
        PeriodRelations rel = period_relations(w, b);
        CHECK(rel.selfpair == GaussQ());
        CHECK(rel.hermitian == Rat(0));
        CHECK_FALSE(rel.valid);
    }
    SUBCASE("real periods on the quadric are invalid") {
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> d(-5, 5);
        for (int t = 0; t < 100; ++t) {
            Rat c1(d(rng)), c2(d(rng));
            // on the quadric with c3 = 1: c4 = c1^2 + c2^2
            std::vector<GaussQ> w = {GaussQ(c1), GaussQ(c2), GaussQ(Rat(1)),
                                     GaussQ(c1 * c1 + c2 * c2)};
            PeriodRelations rel = period_relations(w, b);
            CHECK(rel.selfpair == GaussQ());
            CHECK(rel.hermitian == Rat(0));
            CHECK_FALSE(rel.valid);
        }
    }
    SUBCASE("hermitian pairing is always exactly real") {
        std::mt19937 rng(23);
        for (int t = 0; t < 200; ++t) {
            std::vector<GaussQ> w(4);
            for (auto& c : w) c = rand_gauss(rng);
            PeriodRelations rel = period_relations(w, b); // throws if Im != 0
            (void)rel;
        }
        CHECK(true);
    }
}

TEST_CASE("two-form decomposition") {
    auto e = [](int i) {
        std::vector<GaussQ> z(4);
        z[static_cast<std::size_t>(i)] = GaussQ(Rat(1));
        return z;
    };

    SUBCASE("already split") {
        std::vector<GaussQ> w = wedge_of_covectors(e(0), e(1));
        auto [z1, z2] = decompose_two_form(w);
        CHECK(wedge_of_covectors(z1, z2) == w);
    }
    SUBCASE("random decomposable round trip") {
        std::mt19937 rng(404);
        int done = 0;
        while (done < 200) {
            std::vector<GaussQ> a(4), b(4);
            for (auto& c : a) c = rand_gauss(rng);
            for (auto& c : b) c = rand_gauss(rng);
            std::vector<GaussQ> w = wedge_of_covectors(a, b);
            bool zero = true;
            for (const auto& c : w)
                if (!c.is_zero()) zero = false;
            if (zero) continue;
            ++done;
            auto [z1, z2] = decompose_two_form(w);
            CHECK(wedge_of_covectors(z1, z2) == w);
        }
    }
    SUBCASE("non-decomposable and zero forms are rejected") {
        std::vector<GaussQ> w(6);
        w[0] = GaussQ(Rat(1)); // e1^e2
        w[5] = GaussQ(Rat(1)); // + e3^e4
        CHECK_THROWS_AS(decompose_two_form(w), not_decomposable_error);
        std::vector<GaussQ> z(6);
        CHECK_THROWS_AS(decompose_two_form(z), zero_form_error);
    }
}

TEST_CASE("polarized period curve: two half-planes") {
    CHECK(omega_alpha_component(GaussQ::i()) == HalfPlane::upper);
    CHECK(omega_alpha_component(-GaussQ::i()) == HalfPlane::lower);
    CHECK_THROWS_AS(omega_alpha_component(GaussQ(Rat(2))), not_in_domain_error);

    SUBCASE("B(w, conj w) = 2 Im(c1)^2 exactly, and conjugation swaps components") {
        std::mt19937 rng(606);
        RatMat b3 = adapted_form_3();
        int done = 0;
        while (done < 100) {
            GaussQ c1 = rand_gauss(rng);
            if (c1.im == 0) continue;
            ++done;
            PeriodRelations rel = period_relations(omega_alpha_point(c1), b3);
            CHECK(rel.selfpair == GaussQ());
            CHECK(rel.hermitian == Rat(2) * c1.im * c1.im);
            CHECK(rel.valid);
            CHECK(omega_alpha_component(c1) != omega_alpha_component(c1.conj()));
        }
    }
}
