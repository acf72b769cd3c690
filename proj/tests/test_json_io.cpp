#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympfib/checks.hpp"
#include "sympfib/json_io.hpp"

using namespace sympfib;

TEST_CASE("real matrix round trip") {
    RandomStream rng(51, 1);
    const RealMatrix M = rng.symplectic(2);
    const Json j = matrix_to_json(M);
    CHECK(j.at("n") == 2);
    CHECK((matrix_from_json(j) - M).cwiseAbs().maxCoeff() == 0.0);

    Json bad = j;
    bad["n"] = 3;
    CHECK_THROWS_AS(matrix_from_json(bad), InvariantViolation);

    Json ragged = Json{{"rows", Json::array({Json::array({1.0, 2.0}), Json::array({3.0})})}};
    CHECK_THROWS_AS(matrix_from_json(ragged), InvariantViolation);
    CHECK_THROWS_AS(matrix_from_json(Json{{"rows", Json::array()}}), InvariantViolation);
}

TEST_CASE("complex matrix round trip") {
    RandomStream rng(51, 2);
    const ComplexMatrix U = rng.unitary(3);
    const ComplexMatrix back = complex_matrix_from_json(complex_matrix_to_json(U));
    CHECK((back - U).cwiseAbs().maxCoeff() == 0.0);

    Json mismatched{{"re", Json::array({Json::array({1.0})})},
                    {"im", Json::array({Json::array({1.0, 2.0})})}};
    CHECK_THROWS_AS(complex_matrix_from_json(mismatched), InvariantViolation);
}

TEST_CASE("siegel point round trip") {
    RandomStream rng(51, 3);
    const SiegelPoint Z = checks::random_siegel(rng, 2);
    const Json j = siegel_to_json(Z);
    CHECK(j.contains("X"));
    CHECK(j.contains("Y"));
    const SiegelPoint back = siegel_from_json(j);
    CHECK((back.Z - Z.Z).cwiseAbs().maxCoeff() == 0.0);

    Json notpd = siegel_to_json(SiegelPoint::basepoint(2));
    notpd["Y"][0][0] = -1.0;
    CHECK_THROWS_AS(siegel_from_json(notpd), InvariantViolation);
}

TEST_CASE("cover and ext element round trips") {
    RandomStream rng(51, 4);
    const CoverElement g = lift(rng.symplectic(2));
    const CoverElement gback = cover_from_json(cover_to_json(g));
    CHECK(gback.w == g.w);
    CHECK((gback.M - g.M).cwiseAbs().maxCoeff() == 0.0);

    const ExtElement e = ext_make(g, 0.625, 2);
    const ExtElement eback = ext_from_json(ext_to_json(e));
    CHECK(eback.r() == e.r());
    CHECK(eback.g().w == e.g().w);
    CHECK((eback.g().M - e.g().M).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("model point round trip") {
    RandomStream rng(51, 5);
    const ModelPoint p{checks::random_siegel(rng, 2), -1.375};
    const ModelPoint back = model_point_from_json(model_point_to_json(p));
    CHECK(back.t == p.t);
    CHECK((back.Z.Z - p.Z.Z).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("seifert descriptor parsing") {
    const Json j{{"fiber_covolume", "3/2"}, {"base_euler", "-2"}, {"arises_from_psp", false}};
    const SeifertDescriptor d = seifert_from_json(j);
    CHECK(d.fiber_covolume == "3/2");
    CHECK(d.base_euler == "-2");
    CHECK_FALSE(d.arises_from_psp);

    // Numeric literals are carried through as their textual form.
    const Json k{{"fiber_covolume", 1}, {"base_euler", -4}};
    const SeifertDescriptor e = seifert_from_json(k);
    CHECK(e.fiber_covolume == "1");
    CHECK(e.base_euler == "-4");
    CHECK_FALSE(e.arises_from_psp);
}
