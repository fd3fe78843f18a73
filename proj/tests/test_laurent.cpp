#include <catch2/catch_amalgamated.hpp>

#include "hankel_lab/combinatorics.hpp"
#include "hankel_lab/laurent.hpp"
#include "hankel_lab/paths.hpp"

using namespace hankel_lab;

TEST_CASE("laurent arithmetic and constant term") {
    // (t + 1 + t^-1)^2 = t^2 + 2t + 3 + 2t^-1 + t^-2.
    const LaurentPoly p = LaurentPoly::geometric_block(2, -1);
    const LaurentPoly sq = p * p;
    CHECK(sq.coeff(2) == 1);
    CHECK(sq.coeff(1) == 2);
    CHECK(ct(sq) == 3);
    CHECK(sq.coeff(-2) == 1);
    CHECK(sq.coeff(9) == 0);
    CHECK(ct(lpow(p, 0)) == 1);
}

TEST_CASE("geometric blocks span the stated window") {
    const LaurentPoly b = LaurentPoly::geometric_block(3, -3);
    for (long long e = -3; e <= 0; ++e) CHECK(b.coeff(e) == 1);
    CHECK(b.coeff(1) == 0);
    CHECK(b.coeff(-4) == 0);
}

TEST_CASE("step coefficient values") {
    CHECK(trinomial_r(2, 2, 2) == 3);
    CHECK(trinomial_r(3, 3, 2) == 7);
    CHECK(trinomial_r(4, 4, 2) == 19);
    CHECK(trinomial_r(5, 3, 2) == 16);
    CHECK(trinomial_r(5, 5, 2) == 51);
    CHECK(trinomial_r(3, 3, 3) == 4);
    CHECK(trinomial_r(0, 0, 2) == 1);
    // Odd total weight cannot be tiled by weight-2 steps.
    CHECK(trinomial_r(2, 1, 2) == 0);
    CHECK(trinomial_r(-1, 3, 2) == 0);
}

TEST_CASE("width-one coefficients are binomial") {
    for (long long a = 0; a <= 8; ++a)
        for (long long b = 0; b <= 8; ++b)
            CHECK(trinomial_r(a, b, 1) == Rational(binom(a + b, a)));
}

TEST_CASE("width-zero family is the point mass at the origin") {
    CHECK(trinomial_r(0, 0, 0) == 1);
    CHECK(trinomial_r(1, 0, 0) == 0);
    CHECK(trinomial_r(0, 2, 0) == 0);
    CHECK_THROWS_AS(trinomial_r(0, 0, -1), std::invalid_argument);
}

TEST_CASE("coefficients count lattice paths") {
    for (long long r = 1; r <= 4; ++r)
        for (long long a = 0; a <= 8; ++a)
            for (long long b = 0; b <= 8; ++b) {
                const Integer dp = paths::count_paths(
                    paths::plain_problem(paths::t_steps(r), {0, 0}, {a, b}));
                CHECK(trinomial_r(a, b, r) == Rational(dp));
            }
}

TEST_CASE("constant term parametrization") {
    // T^{(r)}(ri+s, rj-s) = CT[ t^s block(r,0)^i block(r,-r)^j ].
    const LaurentPoly t = LaurentPoly::term(Rational(1), 1);
    for (long long r = 1; r <= 3; ++r) {
        const LaurentPoly alpha = LaurentPoly::geometric_block(r, 0);
        const LaurentPoly beta = LaurentPoly::geometric_block(r, -r);
        for (long long s = 0; s <= r; ++s)
            for (long long i = 0; i <= 4; ++i)
                for (long long j = 0; j <= 4; ++j) {
                    const Rational via_ct =
                        ct(lpow(t, s) * lpow(alpha, i) * lpow(beta, j));
                    CHECK(via_ct == trinomial_r(r * i + s, r * j - s, r));
                }
    }
}

TEST_CASE("symmetry in the two exponents") {
    for (long long r = 1; r <= 3; ++r)
        for (long long a = 0; a <= 6; ++a)
            for (long long b = 0; b <= 6; ++b)
                CHECK(trinomial_r(a, b, r) == trinomial_r(b, a, r));
}
