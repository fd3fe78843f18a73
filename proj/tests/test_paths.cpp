#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hankel_lab/laurent.hpp"
#include "hankel_lab/matrix.hpp"
#include "hankel_lab/paths.hpp"
#include "hankel_lab/series_builders.hpp"

using namespace hankel_lab;
using namespace hankel_lab::paths;

TEST_CASE("plain counts are binomial and match enumeration") {
    for (long long m = 0; m <= 5; ++m)
        for (long long n = 0; n <= 5; ++n) {
            const PathProblem prob = plain_problem(normal_steps(), {0, 0}, {m, n});
            CHECK(count_paths(prob) == binom(m + n, m));
            CHECK(Integer(enumerate_paths(prob).size()) == count_paths(prob));
        }
}

TEST_CASE("diagonal restriction gives ballot counts") {
    const long long catalan[] = {1, 1, 2, 5, 14, 42};
    for (long long n = 0; n <= 5; ++n)
        CHECK(count_paths(plain_problem(normal_steps(), {0, 0}, {n, n}, true)) == catalan[n]);
}

TEST_CASE("unreachable endpoints count zero") {
    CHECK(count_paths(plain_problem(normal_steps(), {0, 0}, {-1, 2})) == 0);
    CHECK(count_paths(plain_problem(h_steps(2), {0, 0}, {3, 0})) == 0);  // parity of x
}

TEST_CASE("composite family reproduces the tree numbers") {
    // Paths (-2m,-2m) -> (2n,2n) through the three-phase region.
    const TruncatedSeries a = build_series("seq_a", 8);
    for (long long m = 0; m <= 3; ++m)
        for (long long n = 0; n <= 3; ++n)
            CHECK(count_paths(k_problem(2, {-2 * m, -2 * m}, {2 * n, 2 * n})) ==
                  to_integer(a[m + n]));
}

TEST_CASE("axis-split composite matches the boundary-line composite") {
    for (long long m = 0; m <= 3; ++m)
        for (long long n = 0; n <= 3; ++n)
            CHECK(count_paths(kt_problem(2, {-2 * m, -2 * m}, {2 * n, 2 * n})) ==
                  count_paths(k_problem(2, {-2 * m, -2 * m}, {2 * n, 2 * n})));
}

TEST_CASE("slide-invariant counts") {
    const long long expected[][3] = {{0, 0, 1}, {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 1, 7},
                                     {1, 2, 9}, {1, 3, 5}, {1, 4, 1}, {2, 1, 9}};
    for (const auto& e : expected) {
        CHECK(count_named("N_slide", {e[0], e[1]}) == e[2]);
        // Sliding the endpoints along the diagonal by (2, 2) preserves the count.
        const long long i = e[0], j = e[1];
        CHECK(count_paths(k_problem(2, {i, -2 * i}, {2 * j + 2, -j + 2})) == e[2]);
    }
    for (long long i = 0; i <= 6; ++i)
        for (long long j = i + 1; j <= 6; ++j)
            CHECK(count_named("N_slide", {i, j}) == count_named("N_slide", {j, i}));
}

TEST_CASE("vertical-prefix composite counts a single step family") {
    // Two-phase paths (0,-2m) -> (i,-i) are counted by T(i, 2m-i).
    for (long long m = 0; m <= 4; ++m)
        for (long long i = 0; i <= 2 * m; ++i)
            CHECK(Rational(count_named("tv", {m, i})) == trinomial_r(i, 2 * m - i, 2));
}

TEST_CASE("axis-crossing families match their step-count sums") {
    for (long long r = 1; r <= 3; ++r)
        for (long long s = 1; s <= r; ++s)
            for (long long i = 0; i <= 3; ++i)
                for (long long j = 0; j <= 3; ++j) {
                    Rational above = 0;
                    for (long long k = 0; k <= j; ++k)
                        above += trinomial_r(k * r + s, i * r - s, r);
                    CHECK(Rational(count_named("As", {i, j, r, s})) == above);
                    Rational below = 0;
                    for (long long k = 1; k <= i; ++k)
                        below += trinomial_r(j * r + s - 1, k * r - s + 1, r);
                    CHECK(Rational(count_named("Bs", {i, j, r, s})) == below);
                }
}

TEST_CASE("phase counts coincide across the step splitting") {
    for (long long r = 2; r <= 3; ++r)
        for (long long i = 0; i <= 3; ++i)
            for (long long j = 0; j <= r * i; ++j) {
                const auto c = gtv_counts(i, j, r);
                CHECK(Rational(c[0]) == trinomial_r(j, r * i - j, r));
                CHECK(c[1] == c[0]);
                CHECK(c[2] == c[0]);
                CHECK(c[3] == c[0]);
            }
}

TEST_CASE("step splitting maps are endpoint-preserving bijections") {
    const long long r = 2, i = 2, j = 2;
    const auto domain = enumerate_paths(plain_problem(t_steps(r), {0, -r * i}, {j, -j}));
    REQUIRE(domain.size() == 3);  // T(2,2)
    std::set<LatticePath> image;
    for (const auto& p : domain) {
        const LatticePath q = phi_v(p, r);
        CHECK(q.start == p.start);
        CHECK(q.end() == p.end());
        CHECK(phi_v_inv(q, r) == p);
        image.insert(q);
    }
    CHECK(image.size() == domain.size());
    const auto domain_h = enumerate_paths(plain_problem(t_steps(r), {j, -j}, {r * i, 0}));
    for (const auto& p : domain_h) {
        const LatticePath q = phi_h(p, r);
        CHECK(q.start == p.start);
        CHECK(q.end() == p.end());
        CHECK(phi_h_inv(q, r) == p);
    }
}

TEST_CASE("splitting maps reject paths outside their domains") {
    LatticePath not_t;
    not_t.start = {0, 0};
    not_t.steps = {Step{1, 0}};
    CHECK_THROWS_AS(phi_v(not_t, 2), std::invalid_argument);
    // A composite whose vertices skip over the split line has no preimage.
    LatticePath bad;
    bad.start = {0, -2};
    bad.steps = {Step{1, 0}, Step{0, 2}};  // split form runs -2, 0, 2; cut is 1
    CHECK_THROWS_AS(phi_v_inv(bad, 2), std::invalid_argument);
}

TEST_CASE("nonintersecting tuples match determinants") {
    const TruncatedSeries a = build_series("seq_a", 6);
    for (long long n = 0; n <= 3; ++n) {
        const Rational det_u = hankel_det(a, n, 0);
        CHECK(Rational(nonintersecting_tuples("UR", n)) == det_u);
        CHECK(Rational(nonintersecting_tuples("UL", n)) == det_u);
        CHECK(Rational(nonintersecting_tuples("UK", n)) == det_u);
    }
    CHECK_THROWS_AS(nonintersecting_tuples("XX", 2), std::invalid_argument);
}

TEST_CASE("enumeration cap raises length_error") {
    CHECK_THROWS_AS(enumerate_paths(plain_problem(normal_steps(), {0, 0}, {8, 8}), 100),
                    std::length_error);
}
