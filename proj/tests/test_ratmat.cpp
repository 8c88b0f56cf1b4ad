#include <doctest.h>

#include "helpers.hpp"
#include "wd/ratmat.hpp"
#include "wd/rng.hpp"

using namespace wd;
using namespace wdt;

namespace {

RatMat mat(long rows, long cols, std::vector<long> entries) {
    RatMat m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            m(i, j) = Rational(entries[static_cast<std::size_t>(i * cols + j)]);
    return m;
}

RatMat random_mat(Rng& rng, long rows, long cols) {
    RatMat m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m(i, j) = rat(rng.range(-3, 3), rng.range(1, 3));
    return m;
}

} // namespace

TEST_CASE("rank by fraction-free elimination") {
    CHECK(rank(RatMat::identity(4)) == 4);
    CHECK(rank(RatMat(3, 3)) == 0);
    CHECK(rank(mat(2, 2, {1, 2, 2, 4})) == 1);
    RatMat m(2, 3);
    m(0, 0) = rat(1, 2);
    m(0, 1) = rat(1, 3);
    m(1, 0) = rat(3, 2);
    m(1, 1) = rat(1, 1);
    m(1, 2) = rat(1, 7);
    CHECK(rank(m) == 2);
    CHECK(rank(RatMat(0, 5)) == 0);
}

TEST_CASE("rref normalizes pivots and reports pivot columns") {
    std::vector<long> pivots;
    RatMat r = rref(mat(2, 2, {2, 4, 1, 2}), &pivots);
    CHECK(r == mat(2, 2, {1, 2, 0, 0}));
    CHECK(pivots == std::vector<long>{0});
}

TEST_CASE("inverse exists exactly for full-rank square matrices") {
    RatMat m = mat(2, 2, {2, 1, 1, 1});
    std::optional<RatMat> inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(*inv == mat(2, 2, {1, -1, -1, 2}));
    CHECK(m * *inv == RatMat::identity(2));
    CHECK(!inverse(mat(2, 2, {1, 2, 2, 4})).has_value());
}

TEST_CASE("solve returns a particular solution when consistent") {
    RatMat a = mat(2, 2, {1, 2, 2, 4});
    std::optional<RatMat> x = solve(a, mat(2, 1, {3, 6}));
    REQUIRE(x.has_value());
    CHECK(a * *x == mat(2, 1, {3, 6}));
    CHECK(!solve(a, mat(2, 1, {1, 0})).has_value());
}

TEST_CASE("kronecker product dimensions, values, and trace multiplicativity") {
    RatMat a = mat(2, 2, {1, 2, 3, 4});
    RatMat b = mat(2, 2, {0, 1, 1, 0});
    RatMat k = kronecker(a, b);
    REQUIRE(k.rows() == 4);
    REQUIRE(k.cols() == 4);
    CHECK(k(0, 1) == Rational(1));
    CHECK(k(0, 3) == Rational(2));
    CHECK(k(3, 2) == Rational(4));
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        RatMat x = random_mat(rng, 2, 2);
        RatMat y = random_mat(rng, 3, 3);
        RatMat xy = kronecker(x, y);
        Rational tx = x(0, 0) + x(1, 1);
        Rational ty = y(0, 0) + y(1, 1) + y(2, 2);
        Rational txy(0);
        for (long d = 0; d < 6; ++d) txy += xy(d, d);
        CHECK(txy == tx * ty);
    }
}

TEST_CASE("column_space is canonical: equal spans give equal bases") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        RatMat m = random_mat(rng, 4, 3);
        RatMat doubled = m.hstack(m * rat(2));
        CHECK(column_space(m) == column_space(doubled));
        RatMat basis = column_space(m);
        for (long c = 0; c < m.cols(); ++c) CHECK(in_span(basis, m.column(c)));
        CHECK(rank(basis) == basis.cols());
    }
}

TEST_CASE("span_contains compares column spans") {
    RatMat big = mat(3, 2, {1, 0, 0, 1, 0, 0});
    RatMat small = mat(3, 1, {1, 1, 0});
    CHECK(span_contains(big, small));
    CHECK(!span_contains(small, big));
}

TEST_CASE("characteristic polynomial, constant term first") {
    Poly p = charpoly(mat(2, 2, {2, 1, 0, 2}));
    REQUIRE(p.size() == 3);
    CHECK(p[0] == Rational(4));
    CHECK(p[1] == Rational(-4));
    CHECK(p[2] == Rational(1));

    Rng rng(9);
    for (int i = 0; i < 20; ++i) {
        RatMat m = random_mat(rng, 3, 3);
        CHECK(poly_eval(charpoly(m), m).is_zero());
    }
}

TEST_CASE("polynomial gcd and exact division") {
    Poly a = {Rational(1), Rational(-2), Rational(1)};
    Poly b = {Rational(-1), Rational(0), Rational(1)};
    CHECK(poly_gcd(a, b) == Poly{Rational(-1), Rational(1)});
    CHECK(poly_divexact(a, {Rational(-1), Rational(1)}) == Poly{Rational(-1), Rational(1)});
    CHECK_THROWS_AS(poly_divexact(b, a), Error);
    CHECK(poly_derivative(a) == Poly{Rational(-2), Rational(2)});
}
