#include <doctest.h>

#include "helpers.hpp"
#include "wd/fuzz.hpp"
#include "wd/json_io.hpp"

using namespace wd;
using namespace wdt;

TEST_CASE("monomial serialization uses rational strings") {
    WeilMonomial a = wm(3, 2, 1, 3);
    Json j = monomial_to_json(a);
    CHECK(j["e"] == "3/2");
    CHECK(j["zeta"] == "1/3");
    CHECK(monomial_from_json(j) == a);
    CHECK_THROWS_AS(monomial_from_json(Json{{"e", "1"}}), Error);
    CHECK_THROWS_AS(monomial_from_json(Json{{"e", "x"}, {"zeta", "0"}}), Error);
}

TEST_CASE("module documents round-trip and carry the format version") {
    Rng rng(163);
    for (int i = 0; i < 100; ++i) {
        SSModule a = random_module(rng, q2(), 10);
        Json j = module_to_json(a);
        CHECK(j["format"] == 1);
        CHECK(module_from_json(j) == a);
    }

    Json j = module_to_json(blk(1, 2, 1, 2, 1, 2));
    CHECK(j["q"] == 2);
    REQUIRE(j["parts"].size() == 1);
    CHECK(j["parts"][0]["t"] == 1);
    CHECK(j["parts"][0]["mult"] == 2);
}

TEST_CASE("unsupported format versions are rejected") {
    Json j = module_to_json(blk(0, 1, 0, 1, 0));
    j["format"] = 2;
    CHECK_THROWS_AS(module_from_json(j), Error);
    j.erase("format");
    CHECK(module_from_json(j) == blk(0, 1, 0, 1, 0));
}

TEST_CASE("malformed module documents name the offending field") {
    CHECK_THROWS_AS(module_from_json(Json{{"parts", Json::array()}}), Error);
    Json bad{{"q", 2}, {"parts", Json::array({Json{{"t", 0}, {"mult", 1}}})}};
    CHECK_THROWS_AS(module_from_json(bad), Error);
    Json negative = module_to_json(blk(0, 1, 0, 1, 1));
    negative["parts"][0]["mult"] = -1;
    CHECK_THROWS_AS(module_from_json(negative), Error);
}

TEST_CASE("spectrum documents round-trip") {
    WeightedSpectrum s(q2(), {{wm(1, 1), 2}, {wm(0, 1, 1, 2), 1}});
    Json j = spectrum_to_json(s);
    CHECK(j["format"] == 1);
    CHECK(j["entries"].size() == 2);
    CHECK(spectrum_from_json(j) == s);

    Rng rng(167);
    for (int i = 0; i < 100; ++i) {
        WeightedSpectrum r = spectrum_of(random_module(rng, q2(), 10));
        CHECK(spectrum_from_json(spectrum_to_json(r)) == r);
    }
}

TEST_CASE("rank-two parameter documents round-trip by kind") {
    GL2Param sc = GL2Param::supercuspidal(q2(), rat(3, 2));
    GL2Param st = GL2Param::steinberg(q2(), wm(0, 1, 1, 2));
    GL2Param ps = GL2Param::principal_series(q2(), wm(1, 4), wm(-1, 4));
    for (const GL2Param& p : {sc, st, ps}) {
        Json j = gl2_to_json(p);
        CHECK(j["format"] == 1);
        CHECK(gl2_from_json(j) == p);
    }
    CHECK(gl2_to_json(sc)["kind"] == "supercuspidal");
    CHECK(gl2_to_json(st)["kind"] == "steinberg_twist");
    CHECK(gl2_to_json(ps)["kind"] == "principal_series");
    CHECK_THROWS_AS(gl2_from_json(Json{{"format", 1}, {"kind", "nonsense"}, {"q", 2}}), Error);
}

TEST_CASE("matrix, graded module, and filtration documents") {
    RatMat m(2, 2);
    m(0, 1) = rat(1, 2);
    Json jm = matrix_to_json(m);
    CHECK(jm["rows"] == 2);
    CHECK(jm["cols"] == 2);
    CHECK(jm["data"][0][1] == "1/2");

    GradedModule g = realize(blk(1, 1, 0, 1, 1));
    Json jg = graded_to_json(g);
    CHECK(jg["format"] == 1);
    CHECK(jg["pieces"].size() == 2);
    CHECK(jg["maps"].size() == 1);

    Rng rng(173);
    StableFiltration f = sample_filtration(g, rng, 2);
    Json jf = filtration_to_json(f);
    CHECK(jf["format"] == 1);
    CHECK(jf["steps"].is_array());
}

TEST_CASE("L-factor documents include degree and the factored string") {
    LocalLFactor l = local_l_factor(blk(1, 2, 1, 2, 1));
    Json j = lfactor_to_json(l);
    CHECK(j["format"] == 1);
    CHECK(j["degree"] == 1);
    CHECK(j["factored"] == "(1 - zeta:1/2 q^{-1/2} T)^{-1}");
    CHECK(j["inverse_roots"].size() == 1);
}
