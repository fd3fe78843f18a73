#ifndef HANKEL_LAB_MATRIX_HPP
#define HANKEL_LAB_MATRIX_HPP

// Dense rational matrices and exact determinants.
//
// det_exact clears denominators and runs fraction-free Bareiss elimination on
// the integer lift; every interior division there is exact. If the common
// denominator grows absurd (wild unrelated denominators), it falls back to
// plain rational Gaussian elimination. Both routes pick the first nonzero
// pivot in the column and track the sign of the row swaps.

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hankel_lab/check.hpp"
#include "hankel_lab/rational.hpp"
#include "hankel_lab/series.hpp"

namespace hankel_lab {

struct RationalMatrix {
    long long rows = 0, cols = 0;
    std::vector<Rational> data;

    RationalMatrix() = default;
    RationalMatrix(long long r, long long c) : rows(r), cols(c) {
        if (r < 0 || c < 0) throw std::invalid_argument("matrix: negative dimension");
        data.assign(static_cast<std::size_t>(r * c), Rational(0));
    }

    Rational& at(long long i, long long j) {
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw std::out_of_range("matrix index");
        return data[static_cast<std::size_t>(i * cols + j)];
    }
    const Rational& at(long long i, long long j) const {
        return const_cast<RationalMatrix*>(this)->at(i, j);
    }
};

inline RationalMatrix matrix_from(long long n,
                                  const std::function<Rational(long long, long long)>& entry) {
    RationalMatrix m(n, n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) m.at(i, j) = entry(i, j);
    return m;
}

inline RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
    RationalMatrix c(a.rows, b.cols);
    for (long long i = 0; i < a.rows; ++i)
        for (long long k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (long long j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

namespace detail {

inline Rational det_bareiss_integer(std::vector<Integer> m, long long n) {
    int sign = 1;
    Integer prev = 1;
    auto at = [&](long long i, long long j) -> Integer& {
        return m[static_cast<std::size_t>(i * n + j)];
    };
    for (long long k = 0; k + 1 < n; ++k) {
        long long pivot = -1;
        for (long long i = k; i < n; ++i)
            if (at(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (long long j = 0; j < n; ++j) std::swap(at(pivot, j), at(k, j));
            sign = -sign;
        }
        for (long long i = k + 1; i < n; ++i) {
            for (long long j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return Rational(sign * at(n - 1, n - 1));
}

inline Rational det_rational_ge(RationalMatrix m) {
    Rational det = 1;
    long long n = m.rows;
    for (long long k = 0; k < n; ++k) {
        long long pivot = -1;
        for (long long i = k; i < n; ++i)
            if (m.at(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (long long j = k; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            det = -det;
        }
        det *= m.at(k, k);
        for (long long i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            Rational factor = m.at(i, k) / m.at(k, k);
            for (long long j = k; j < n; ++j) m.at(i, j) -= factor * m.at(k, j);
        }
    }
    return det;
}

}  // namespace detail

inline Rational det_exact(const RationalMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det_exact: matrix not square");
    long long n = m.rows;
    if (n == 0) return 1;  // empty product convention
    Integer common = 1;
    for (const Rational& q : m.data) common = lcm(common, denominator(q));
    // A pathological common denominator would make the lift slower than
    // rational elimination; 1 << 13 bits is far beyond anything arising here.
    if (msb(common) > 8192) return detail::det_rational_ge(m);
    std::vector<Integer> lift;
    lift.reserve(m.data.size());
    for (const Rational& q : m.data) lift.push_back(numerator(q) * (common / denominator(q)));
    Rational det = detail::det_bareiss_integer(std::move(lift), n);
    return det / Rational(ipow(common, static_cast<unsigned long long>(n)));
}

// Hankel determinant det(A_{i+j+k}) of size n. Negative subscripts only arise
// for k < 0; the caller must supply the value those entries take.
inline Rational hankel_det(const TruncatedSeries& a, long long n, long long k = 0,
                           const std::optional<Rational>& negative_entry = std::nullopt) {
    if (n < 0) throw std::invalid_argument("hankel_det: negative size");
    if (n == 0) return 1;
    if (2 * (n - 1) + k > a.order())
        throw std::invalid_argument("hankel_det: series order too small for window");
    RationalMatrix m(n, n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            long long idx = i + j + k;
            if (idx < 0) {
                if (!negative_entry)
                    throw std::invalid_argument(
                        "hankel_det: negative subscript with no supplied entry");
                m.at(i, j) = *negative_entry;
            } else {
                m.at(i, j) = a[idx];
            }
        }
    return det_exact(m);
}

// det over the even-dilated series A(x^2): entry (i, j) is A_{(i+j)/2} when
// i + j is even and 0 otherwise.
inline Rational hankel_hat_det(const TruncatedSeries& a, long long n) {
    if (n < 0) throw std::invalid_argument("hankel_hat_det: negative size");
    if (n == 0) return 1;
    if (n - 1 > a.order())
        throw std::invalid_argument("hankel_hat_det: series order too small");
    RationalMatrix m(n, n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if ((i + j) % 2 == 0) m.at(i, j) = a[(i + j) / 2];
    return det_exact(m);
}

// Splitting of the dilated determinant into the two plain windows:
//   Hhat_{2n} = H_n * H1_n, Hhat_{2n+1} = H_{n+1} * H1_n, checked for n <= nmax.
inline CheckResult verify_hat_split(const TruncatedSeries& a, long long nmax) {
    CheckResult out = CheckResult::ok();
    for (long long n = 0; n <= nmax; ++n) {
        Rational even = hankel_hat_det(a, 2 * n);
        Rational h = hankel_det(a, n, 0), h1 = hankel_det(a, n, 1);
        if (even != h * h1)
            out.merge(CheckResult::fail(to_string(even), to_string(h * h1),
                                        "Hhat_{2n} split at n=" + std::to_string(n)));
        Rational odd = hankel_hat_det(a, 2 * n + 1);
        Rational h_next = hankel_det(a, n + 1, 0);
        if (odd != h_next * h1)
            out.merge(CheckResult::fail(to_string(odd), to_string(h_next * h1),
                                        "Hhat_{2n+1} split at n=" + std::to_string(n)));
    }
    return out;
}

}  // namespace hankel_lab

#endif
