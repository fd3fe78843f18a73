#include <catch2/catch_amalgamated.hpp>

#include "hankel_lab/cfrac.hpp"
#include "hankel_lab/matrix.hpp"
#include "hankel_lab/series_builders.hpp"

using namespace hankel_lab;

TEST_CASE("catalan series has all-ones fraction coefficients") {
    const SFraction f = extract_sfraction(build_series("catalan", 12), 10);
    REQUIRE(f.depth() == 10);
    for (const Rational& l : f.lambdas) CHECK(l == 1);
    CHECK_FALSE(f.terminated);
}

TEST_CASE("geometric series terminates at depth one") {
    const SFraction f = extract_sfraction(build_series("geom", 8), 6);
    REQUIRE(f.depth() == 1);
    CHECK(f.lambdas[0] == 1);
    CHECK(f.terminated);
}

TEST_CASE("extraction round-trips through reconstruction") {
    const TruncatedSeries g = build_series("g", 10);
    const SFraction f = extract_sfraction(g, 9);
    CHECK(eq_to_order(sfraction_to_series(f, 9), g, 9));
    CHECK_THROWS_AS(extract_sfraction(build_series("f", 6), 3), std::invalid_argument);
}

TEST_CASE("quotient parameter formulas match extraction") {
    // The cube fixed point is the quotient instance at (2/3, 1/3, 1/2, 27/4).
    const SFraction direct = extract_sfraction(build_series("g", 12), 11);
    const SFraction gauss = gauss_lambdas(rat(2, 3), rat(1, 3), rat(1, 2), rat(27, 4), 11);
    REQUIRE(gauss.depth() == 11);
    for (std::size_t k = 0; k < 11; ++k) CHECK(direct.lambdas[k] == gauss.lambdas[k]);
}

TEST_CASE("window determinants from fraction coefficients") {
    const TruncatedSeries a = build_series("seq_a", 12);
    const SFraction f = extract_sfraction(a, 11);
    for (long long n = 0; n <= 5; ++n) {
        CHECK(hankel_from_lambdas(f, n, HankelWindow::H) == hankel_det(a, n, 0));
        CHECK(hankel_from_lambdas(f, n, HankelWindow::H1) == hankel_det(a, n, 1));
        CHECK(hankel_from_lambdas(f, n, HankelWindow::Hhat) == hankel_hat_det(a, n));
    }
    CHECK_THROWS_AS(hankel_from_lambdas(f, 8, HankelWindow::H1), std::invalid_argument);
}

TEST_CASE("terminated fractions extend by zero") {
    const SFraction f = extract_sfraction(build_series("geom", 8), 6);
    // 1/(1-x) has H_n = 0 for n >= 2: all later coefficients vanish.
    CHECK(hankel_from_lambdas(f, 1, HankelWindow::H) == 1);
    CHECK(hankel_from_lambdas(f, 2, HankelWindow::H) == 0);
    CHECK(hankel_from_lambdas(f, 3, HankelWindow::H1) == 0);
}

TEST_CASE("product closed forms equal the determinants") {
    const TruncatedSeries a = build_series("seq_a", 12);
    const Rational pa = rat(2, 3), pb = rat(1, 3), pc = rat(1, 2), rho = rat(27, 4);
    for (long long n = 0; n <= 5; ++n) {
        CHECK(hankel_closed_form(pa, pb, pc, rho, n, HankelWindow::H) == hankel_det(a, n, 0));
        CHECK(hankel_closed_form(pa, pb, pc, rho, n, HankelWindow::H1) == hankel_det(a, n, 1));
        CHECK(hankel_closed_form(pa, pb, pc, rho, n, HankelWindow::Hhat) == hankel_hat_det(a, n));
    }
}

TEST_CASE("shifted window ratio") {
    const TruncatedSeries a = build_series("seq_a", 12);
    for (long long n = 1; n <= 4; ++n)
        CHECK(h2_ratio(rat(2, 3), rat(1, 3), rat(1, 2), rat(27, 4), n) == hankel_det(a, n, 2));
}

TEST_CASE("upper parameter swap relation") {
    for (const auto& c : gauss_cases())
        CHECK(verify_contiguous(c.a, c.b, c.c, rat(27, 4), 12).pass);
}

TEST_CASE("every tabulated quotient case expands correctly") {
    CHECK(verify_series_identities("tcfs_all", 14).pass);
    CHECK(verify_series_identities("q41_q45", 14).pass);
}
