#include <doctest.h>

#include "helpers.hpp"
#include "wd/fuzz.hpp"
#include "wd/weil.hpp"

using namespace wd;
using namespace wdt;

TEST_CASE("rational string forms") {
    CHECK(rational_to_string(rat(5)) == "5");
    CHECK(rational_to_string(rat(-7, 3)) == "-7/3");
    CHECK(rational_to_string(rat(2, 4)) == "1/2");
    CHECK(rational_from_string("3/6") == rat(1, 2));
    CHECK(rational_from_string("-4") == rat(-4));
    CHECK_THROWS_AS(rational_from_string("1/0"), Error);
    CHECK_THROWS_AS(rational_from_string("abc"), Error);
}

TEST_CASE("residue cardinality is an integer at least 2") {
    CHECK(ResidueCard(2).value() == 2);
    CHECK(ResidueCard(3).extend(2).value() == 9);
    CHECK(ResidueCard(2).extend(5).value() == 32);
    CHECK_THROWS_AS(ResidueCard(1), Error);
    CHECK_THROWS_AS(ResidueCard(0), Error);
}

TEST_CASE("multiplication adds exponents and adds angles mod 1") {
    CHECK(wm(1, 2) * wm(1, 2, 1, 2) == wm(1, 1, 1, 2));
    CHECK(wm(3, 2, 1, 3) * wm(-1, 1, 1, 3) == wm(1, 2, 2, 3));
    WeilMonomial a = wm(5, 4, 2, 3);
    CHECK(a * a.inverse() == WeilMonomial::one());
}

TEST_CASE("inverse negates the exponent and reflects the angle") {
    CHECK(wm(1, 1).inverse() == wm(-1, 1));
    CHECK(wm(0, 1, 1, 4).inverse() == wm(0, 1, 3, 4));
    CHECK(WeilMonomial::one().inverse() == WeilMonomial::one());
}

TEST_CASE("angle is stored reduced mod 1 in [0,1)") {
    CHECK(WeilMonomial(rat(0), rat(5, 4)) == wm(0, 1, 1, 4));
    CHECK(WeilMonomial(rat(0), rat(-1, 4)) == wm(0, 1, 3, 4));
    CHECK(wm(0, 1, 1, 2) * wm(0, 1, 1, 2) == WeilMonomial::one());
}

TEST_CASE("f-th roots: all candidates, each restricted by f recovers the input") {
    std::vector<WeilMonomial> r = wm(2, 1).roots(2);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == wm(2, 1));
    CHECK(r[1] == wm(2, 1, 1, 2));

    CHECK(wm(5, 3, 1, 3).roots(1) == std::vector<WeilMonomial>{wm(5, 3, 1, 3)});

    std::vector<WeilMonomial> r2 = wm(0, 1, 1, 2).roots(2);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == wm(0, 1, 1, 4));
    CHECK(r2[1] == wm(0, 1, 3, 4));

    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        WeilMonomial a = random_monomial(rng);
        long f = rng.range(1, 4);
        for (const WeilMonomial& root : a.roots(f)) CHECK(root.restrict_scalars(f) == a);
    }
}

TEST_CASE("weight is twice the exponent, independent of the angle") {
    CHECK(wm(1, 2).weight() == rat(1));
    CHECK(wm(0, 1, 1, 3).weight() == rat(0));
    CHECK(wm(-1, 1, 1, 2).weight() == rat(-2));
}

TEST_CASE("group laws and the weight homomorphism hold on random monomials") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        WeilMonomial a = random_monomial(rng);
        WeilMonomial b = random_monomial(rng);
        WeilMonomial c = random_monomial(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * WeilMonomial::one() == a);
        CHECK(a * a.inverse() == WeilMonomial::one());
        CHECK((a * b).weight() == a.weight() + b.weight());
    }
}

TEST_CASE("tate twist shifts the exponent; restriction multiplies the data") {
    CHECK(wm(1, 2).tate_twist(1) == wm(-1, 2));
    CHECK(wm(1, 2).tate_twist(0) == wm(1, 2));
    CHECK(wm(1, 2, 1, 2).restrict_scalars(2) == wm(1, 2));
    CHECK(wm(1, 3, 1, 3).restrict_scalars(3) == wm(1, 3, 0, 1));
}

TEST_CASE("monomial text round-trips through the zeta:a/b q^e form") {
    CHECK(wm(3, 2, 1, 3).to_string() == "zeta:1/3 q^3/2");
    CHECK(wm(0, 1).to_string() == "zeta:0 q^0");
    CHECK(WeilMonomial::from_string("zeta:1/3 q^3/2") == wm(3, 2, 1, 3));
    CHECK(WeilMonomial::from_string("zeta:0 q^-2") == wm(-2, 1));
    CHECK_THROWS_AS(WeilMonomial::from_string("q^1"), Error);

    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        WeilMonomial a = random_monomial(rng);
        CHECK(WeilMonomial::from_string(a.to_string()) == a);
    }
}

TEST_CASE("monomial ordering is by exponent, then angle") {
    CHECK(wm(0, 1) < wm(1, 2));
    CHECK(wm(1, 2) < wm(1, 2, 1, 3));
    CHECK(wm(1, 2, 1, 3) < wm(1, 2, 1, 2));
}
