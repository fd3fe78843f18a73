#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "hankel_lab/matrix.hpp"
#include "hankel_lab/series_builders.hpp"

using namespace hankel_lab;

namespace {

// Cofactor expansion; exponential, used only as an independent oracle.
Rational det_cofactor(const RationalMatrix& m) {
    const long long n = m.rows;
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Rational acc = 0;
    for (long long k = 0; k < n; ++k) {
        RationalMatrix minor(n - 1, n - 1);
        for (long long i = 1; i < n; ++i)
            for (long long j = 0, jj = 0; j < n; ++j) {
                if (j == k) continue;
                minor.at(i - 1, jj++) = m.at(i, j);
            }
        const Rational term = m.at(0, k) * det_cofactor(minor);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    RationalMatrix m(static_cast<long long>(rows.size()),
                     rows.empty() ? 0 : static_cast<long long>(rows[0].size()));
    for (long long i = 0; i < m.rows; ++i)
        for (long long j = 0; j < m.cols; ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

}  // namespace

TEST_CASE("determinant of empty and singleton matrices") {
    CHECK(det_exact(RationalMatrix()) == 1);
    CHECK(det_exact(from_rows({{rat(7, 3)}})) == rat(7, 3));
}

TEST_CASE("determinant matches cofactor expansion on random integer matrices") {
    std::mt19937 rng(12345u);
    std::uniform_int_distribution<int> coin(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const long long n = 1 + trial % 5;
        const RationalMatrix m = matrix_from(
            n, [&](long long, long long) { return Rational(coin(rng)); });
        CHECK(det_exact(m) == det_cofactor(m));
    }
}

TEST_CASE("determinant matches cofactor expansion on rational matrices") {
    std::mt19937 rng(99u);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const long long n = 1 + trial % 4;
        const RationalMatrix m = matrix_from(
            n, [&](long long, long long) { return rat(num(rng), den(rng)); });
        CHECK(det_exact(m) == det_cofactor(m));
    }
}

TEST_CASE("singular matrices and pivot fallback") {
    // Repeated rows force zero; a zero leading pivot forces a row swap.
    CHECK(det_exact(from_rows({{Rational(1), Rational(2)}, {Rational(1), Rational(2)}})) == 0);
    CHECK(det_exact(from_rows({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}})) == -1);
}

TEST_CASE("matmul composes linear maps") {
    const RationalMatrix a = from_rows({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}});
    const RationalMatrix b = from_rows({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
    const RationalMatrix ab = matmul(a, b);
    CHECK(ab.at(0, 0) == 2);
    CHECK(ab.at(0, 1) == 1);
    CHECK(ab.at(1, 0) == 4);
    CHECK(ab.at(1, 1) == 3);
    CHECK_THROWS_AS(matmul(a, from_rows({{Rational(1)}})), std::invalid_argument);
}

TEST_CASE("window determinants of the ternary sequence") {
    const TruncatedSeries a = build_series("seq_a", 9);
    CHECK(hankel_det(a, 0, 0) == 1);
    CHECK(hankel_det(a, 1, 0) == 1);
    CHECK(hankel_det(a, 2, 0) == 2);
    CHECK(hankel_det(a, 3, 0) == 11);
    CHECK(hankel_det(a, 2, 1) == 3);
    CHECK(hankel_det(a, 3, 1) == 26);
    CHECK_THROWS_AS(hankel_det(a, 6, 1), std::invalid_argument);  // needs order 11
}

TEST_CASE("negative window entries must be supplied") {
    const TruncatedSeries a = build_series("seq_a", 6);
    CHECK_THROWS_AS(hankel_det(a, 2, -1), std::invalid_argument);
    // With entry A_{-1} = 1/u supplied, the shifted determinant is defined.
    const Rational d = hankel_det(a, 2, -1, rat(1, 3));
    CHECK(d == rat(1, 3) * 1 - 1);  // det [[1/3, 1], [1, 1]]
}

TEST_CASE("interleaved window inserts zeros at odd offsets") {
    const TruncatedSeries a = build_series("seq_a", 6);
    // n = 2: rows (a_0, 0; 0, a_1) give a_0 a_1.
    CHECK(hankel_hat_det(a, 2) == a[0] * a[1]);
    CHECK(hankel_hat_det(a, 0) == 1);
    CHECK(verify_hat_split(a, 2).pass);
}
