#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cusplab/quotient.hpp"
#include "cusplab/torus_action.hpp"

using namespace cusplab;

TEST_CASE("cusp lattice constants") {
    CuspLatticeConstants c = cusp_lattice_constants();
    CHECK(c.d_i == 19683);
    CHECK(c.index == 27);
    CHECK(c.d_ibar == 27); // 3^9 / (3^3)^2
    CHECK(c.d_lx == -27);
    CHECK(c.rank_i == 18);
    CHECK(c.rank_lx == 4);
}

TEST_CASE("L_X gram matrix") {
    GramLattice lx = lx_gram();
    RatMat expect{{Rat(0), Rat(3), Rat(0), Rat(0)},
                  {Rat(3), Rat(0), Rat(0), Rat(0)},
                  {Rat(0), Rat(0), Rat(6), Rat(3)},
                  {Rat(0), Rat(0), Rat(3), Rat(2)}};
    CHECK(lx.gram == expect);
    CHECK(discriminant(lx) == Rat(-27));
    CHECK(signature(lx.gram) == std::pair<int, int>(3, 1));
}

TEST_CASE("pushforward/pullback report") {
    Report r = verify_pushforward_iso();
    CHECK(r.pass());
    for (const auto& c : r.checks) CHECK(c.pass);
    CHECK(r.checks.size() >= 5);

    // serialization round trip
    Json j = report_json(r);
    Report back = report_from_json(j);
    CHECK(report_json(back) == j);
    std::string text = report_text(r);
    CHECK(text.find("PASS") != std::string::npos);
}
