#include <catch2/catch_amalgamated.hpp>

#include <utility>
#include <vector>

#include "hankel_lab/closed_forms.hpp"
#include "hankel_lab/matrix.hpp"

using namespace hankel_lab;

TEST_CASE("binom with integer arguments") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(5, 0) == 1);
    CHECK(binom(5, 5) == 1);
    CHECK(binom(5, 6) == 0);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(21, 7) == 116280);
}

TEST_CASE("binom_general extends the upper argument") {
    // Falling-factorial definition: the upper argument may be any rational.
    CHECK(binom_general(Rational(-1), 1) == -1);
    CHECK(binom_general(Rational(-1), 2) == 1);
    CHECK(binom_general(rat(1, 2), 2) == rat(-1, 8));
    CHECK(binom_general(Rational(4), 2) == 6);
    CHECK(binom_general(Rational(4), 0) == 1);
    CHECK(binom_general(Rational(4), -1) == 0);
}

TEST_CASE("pochhammer rising factorial") {
    CHECK(pochhammer(Rational(3), 0) == 1);
    CHECK(pochhammer(Rational(3), 3) == 60);
    CHECK(pochhammer(rat(1, 2), 2) == rat(3, 4));
    CHECK(pochhammer(Rational(-2), 3) == 0);
}

TEST_CASE("factorial is memoized and capped") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("product closed forms reproduce the frozen tables") {
    const long long u[] = {1, 2, 11, 170, 7429, 920460, 323801820};
    const long long v[] = {1, 3, 26, 646, 45885, 9304650, 5382618660LL};
    const long long a[] = {1, 2, 7, 42, 429, 7436};
    for (long long n = 1; n <= 7; ++n) {
        CHECK(closed_form(ClosedFormName::TypeA, {Rational(n)}) == u[n - 1]);
        CHECK(closed_form(ClosedFormName::TypeB, {Rational(n)}) == v[n - 1]);
    }
    for (long long n = 1; n <= 6; ++n)
        CHECK(closed_form(ClosedFormName::Asm, {Rational(n)}) == a[n - 1]);
}

TEST_CASE("per-factor identities hold where defined") {
    // Even-window per-factor identity holds from i = 0 on.
    for (long long i = 0; i <= 6; ++i)
        CHECK(closed_form(ClosedFormName::Id1, {Rational(i)}) == 1);
    // The shifted odd-window form breaks at i = 0 and holds from i = 1 on.
    CHECK(closed_form(ClosedFormName::Id2, {Rational(0)}) != 1);
    for (long long i = 1; i <= 6; ++i)
        CHECK(closed_form(ClosedFormName::Id2, {Rational(i)}) == 1);
}

TEST_CASE("four-term binomial combination is symmetric") {
    // Symmetry needs a + b >= 2; at (1, 0) the truncated terms break it.
    for (long long a = 0; a <= 6; ++a)
        for (long long b = 0; b <= 6; ++b) {
            if (a + b < 2) continue;
            CHECK(closed_form(ClosedFormName::MSymm, {Rational(a), Rational(b)}) == 1);
        }
    CHECK(closed_form(ClosedFormName::MSymm, {Rational(1), Rational(0)}) == rat(4, 3));
}

TEST_CASE("shifted kernel product matches the brute determinant") {
    for (long long r = 0; r <= 3; ++r)
        for (long long n = 0; n <= 5; ++n) {
            const Rational det = det_exact(matrix_from(n, [&](long long i, long long j) {
                return Rational(binom(i + j + r, 2 * i - j));
            }));
            CHECK(closed_form(ClosedFormName::MrrDet, {Rational(n), Rational(r)}) == det);
        }
}

TEST_CASE("indexed binomial determinant matches its product form") {
    // Entries C(A, L_i + j), 1 <= i,j <= n, strictly decreasing L.
    const std::vector<std::pair<long long, std::vector<long long>>> cases = {
        {5, {4, 2, 1}}, {7, {5, 3, 0}}, {9, {6, 4, 2, 1}}, {4, {3}}};
    for (const auto& [A, L] : cases) {
        const long long n = static_cast<long long>(L.size());
        const Rational det = det_exact(matrix_from(n, [&](long long i, long long j) {
            return Rational(binom(A, L[static_cast<std::size_t>(i)] + j + 1));
        }));
        std::vector<Rational> params = {Rational(A)};
        for (long long l : L) params.push_back(Rational(l));
        CHECK(closed_form(ClosedFormName::BinomDet, params) == det);
    }
    // Repeated indices collapse two rows, so the determinant vanishes.
    CHECK(closed_form(ClosedFormName::BinomDet,
                      {Rational(5), Rational(2), Rational(2), Rational(1)}) == 0);
}

TEST_CASE("chi indicator") {
    CHECK(chi(true) == 1);
    CHECK(chi(false) == 0);
}
