#ifndef HANKEL_LAB_BIVARIATE_HPP
#define HANKEL_LAB_BIVARIATE_HPP

// Rectangular windows of bivariate coefficients, rational bivariate functions
// expanded into such windows, and the window-preserving transform rules
// (entry scaling, variable scaling, multiplication by a one-variable series,
// substitution of a one-variable series with valuation 1).
//
// Transforms act coefficientwise on the window. Because payload series for
// products have unit constant term and for compositions have valuation
// exactly one, every entry of the transformed window depends only on entries
// inside the original window, so exactness is preserved entry by entry.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hankel_lab/matrix.hpp"
#include "hankel_lab/rational.hpp"
#include "hankel_lab/series.hpp"

namespace hankel_lab {

struct CoeffGrid {
    long long rows = 0, cols = 0;  // entry (i, j) is [x^i y^j], 0 <= i < rows
    std::vector<Rational> d;

    CoeffGrid() = default;
    CoeffGrid(long long r, long long c) : rows(r), cols(c) {
        if (r < 0 || c < 0) throw std::invalid_argument("grid: negative dimension");
        d.assign(static_cast<std::size_t>(r * c), Rational(0));
    }

    Rational& at(long long i, long long j) {
        if (i < 0 || i >= rows || j < 0 || j >= cols) throw std::out_of_range("grid index");
        return d[static_cast<std::size_t>(i * cols + j)];
    }
    const Rational& at(long long i, long long j) const {
        return const_cast<CoeffGrid*>(this)->at(i, j);
    }
    // Zero-padded read, for polynomial arithmetic.
    Rational get(long long i, long long j) const {
        if (i < 0 || i >= rows || j < 0 || j >= cols) return 0;
        return at(i, j);
    }

    bool operator==(const CoeffGrid&) const = default;
};

inline CoeffGrid grid_from(long long rows, long long cols,
                           const std::function<Rational(long long, long long)>& entry) {
    CoeffGrid g(rows, cols);
    for (long long i = 0; i < rows; ++i)
        for (long long j = 0; j < cols; ++j) g.at(i, j) = entry(i, j);
    return g;
}

inline CoeffGrid grid_mul(const CoeffGrid& a, const CoeffGrid& b, long long rows,
                          long long cols) {
    CoeffGrid out(rows, cols);
    for (long long i = 0; i < std::min(a.rows, rows); ++i)
        for (long long j = 0; j < std::min(a.cols, cols); ++j) {
            if (a.at(i, j) == 0) continue;
            for (long long k = 0; i + k < rows && k < b.rows; ++k)
                for (long long l = 0; j + l < cols && l < b.cols; ++l)
                    out.at(i + k, j + l) += a.at(i, j) * b.at(k, l);
        }
    return out;
}

inline CoeffGrid grid_add(const CoeffGrid& a, const CoeffGrid& b, long long rows,
                          long long cols) {
    CoeffGrid out(rows, cols);
    for (long long i = 0; i < rows; ++i)
        for (long long j = 0; j < cols; ++j) out.at(i, j) = a.get(i, j) + b.get(i, j);
    return out;
}

// Reciprocal of a grid with invertible constant term, truncated to the window.
inline CoeffGrid grid_inverse(const CoeffGrid& den, long long rows, long long cols) {
    if (den.rows < 1 || den.cols < 1 || den.at(0, 0) == 0)
        throw std::invalid_argument("grid_inverse: constant term must be nonzero");
    CoeffGrid inv(rows, cols);
    Rational c0 = den.at(0, 0);
    for (long long i = 0; i < rows; ++i)
        for (long long j = 0; j < cols; ++j) {
            Rational acc = (i == 0 && j == 0) ? Rational(1) : Rational(0);
            for (long long k = 0; k <= i; ++k)
                for (long long l = 0; l <= j; ++l) {
                    if (k == 0 && l == 0) continue;
                    Rational dk = den.get(k, l);
                    if (dk != 0) acc -= dk * inv.at(i - k, j - l);
                }
            inv.at(i, j) = acc / c0;
        }
    return inv;
}

// Numerator and denominator are bivariate polynomials held as grids.
struct RationalBivariate {
    CoeffGrid num, den;
};

// Window of the power series expansion; requires den(0,0) != 0.
inline CoeffGrid expand_rational(const RationalBivariate& f, long long rows, long long cols) {
    return grid_mul(f.num, grid_inverse(f.den, rows, cols), rows, cols);
}

// Hankel-type windows read coefficientwise off a one-variable series:
// window 0 has entries A_{i+j}, window 1 has entries A_{i+j+1}. These are the
// coefficient windows of (x A(x) - y A(y))/(x - y) and (A(x) - A(y))/(x - y).
inline CoeffGrid grid_from_series(const TruncatedSeries& a, int window, long long n) {
    if (window != 0 && window != 1)
        throw std::invalid_argument("grid_from_series: window must be 0 or 1");
    if (2 * (n - 1) + window > a.order() && n > 0)
        throw std::invalid_argument("grid_from_series: series order too small");
    return grid_from(n, n, [&](long long i, long long j) { return a[i + j + window]; });
}

// Independent route to the same windows: build the bivariate dividend and run
// synthetic division by (x - y), treating it as a polynomial in x with
// coefficients in y. Entries with i + j <= order(A) - 1 + window' are exact.
inline CoeffGrid divided_difference_grid(const TruncatedSeries& a, int window, long long n) {
    if (window != 0 && window != 1)
        throw std::invalid_argument("divided_difference_grid: window must be 0 or 1");
    if (n <= 0) return CoeffGrid(0, 0);
    // The pure power x^e contributes x^{e-1} + x^{e-2} y + ... + y^{e-1} to
    // the quotient, reaching entry (i, j) exactly when i + j = e - 1, so the
    // dividend must carry exponents up to 2n - 1.
    long long size = 2 * n - 1;
    // dividend: x A(x) - y A(y) for window 0, A(x) - A(y) for window 1
    CoeffGrid dividend(size + 1, size + 1);
    for (long long m = (window == 1 ? 1 : 0); m <= a.order(); ++m) {
        long long e = (window == 0) ? m + 1 : m;
        if (e > size) break;
        dividend.at(e, 0) += a[m];
        dividend.at(0, e) -= a[m];
    }
    // synthetic division by (x - y), viewing the dividend as a polynomial in
    // x with coefficients in y: q_{dx-1} = p_{dx}, q_i = p_{i+1} + y q_{i+1}
    long long dx = size;
    std::vector<std::vector<Rational>> q(
        static_cast<std::size_t>(dx),
        std::vector<Rational>(static_cast<std::size_t>(size + 1), Rational(0)));
    for (long long i = dx - 1; i >= 0; --i) {
        auto& qi = q[static_cast<std::size_t>(i)];
        for (long long l = 0; l <= size; ++l) qi[static_cast<std::size_t>(l)] = dividend.get(i + 1, l);
        if (i + 1 < dx) {
            const auto& up = q[static_cast<std::size_t>(i + 1)];
            for (long long l = 1; l <= size; ++l)
                qi[static_cast<std::size_t>(l)] += up[static_cast<std::size_t>(l - 1)];
        }
    }
    // remainder p_0 + y q_0 is A-truncation symmetric and vanishes identically
    CoeffGrid out(n, n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            out.at(i, j) = q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return out;
}

inline Rational grid_det(const CoeffGrid& g, long long n) {
    if (n > g.rows || n > g.cols)
        throw std::invalid_argument("grid_det: block exceeds window");
    return det_exact(matrix_from(n, [&](long long i, long long j) { return g.at(i, j); }));
}

enum class GridRule { Scale, ScaleVar, Product, Compose };
enum class GridAxis { X, Y };

inline CoeffGrid apply_rule(const CoeffGrid& g, GridRule rule, GridAxis axis,
                            const Rational& c) {
    // Both constant rules preserve leading-block determinants up to a known
    // factor only when c is nonzero.
    if (c == 0) throw std::invalid_argument("apply_rule: constant must be nonzero");
    CoeffGrid out = g;
    if (rule == GridRule::Scale) {
        for (auto& v : out.d) v *= c;
        return out;
    }
    if (rule == GridRule::ScaleVar) {
        for (long long i = 0; i < out.rows; ++i)
            for (long long j = 0; j < out.cols; ++j)
                out.at(i, j) *= qpow(c, axis == GridAxis::X ? i : j);
        return out;
    }
    throw std::invalid_argument("apply_rule: this rule takes a series payload");
}

inline CoeffGrid apply_rule(const CoeffGrid& g, GridRule rule, GridAxis axis,
                            const TruncatedSeries& payload) {
    long long rows = g.rows, cols = g.cols;
    CoeffGrid out(rows, cols);
    if (rule == GridRule::Product) {
        if (payload[0] != 1)
            throw std::invalid_argument("apply_rule: product payload must have u(0) = 1");
        for (long long i = 0; i < rows; ++i)
            for (long long j = 0; j < cols; ++j) {
                Rational acc = 0;
                long long span = (axis == GridAxis::X) ? i : j;
                for (long long k = 0; k <= std::min(span, payload.order()); ++k) {
                    const Rational& u = payload[k];
                    if (u == 0) continue;
                    acc += u * (axis == GridAxis::X ? g.at(i - k, j) : g.at(i, j - k));
                }
                out.at(i, j) = acc;
            }
        return out;
    }
    if (rule == GridRule::Compose) {
        if (payload[0] != 0 || payload.order() < 1 || payload[1] != 1)
            throw std::invalid_argument(
                "apply_rule: composition payload must have v(0) = 0, v'(0) = 1");
        long long span = (axis == GridAxis::X) ? rows - 1 : cols - 1;
        // vpow[k] = coefficients of v^k up to x^span; v^k has valuation k
        std::vector<TruncatedSeries> vpow;
        vpow.push_back(const_series(1, span));
        TruncatedSeries v = payload.order() >= span ? truncated(payload, span) : payload;
        for (long long k = 1; k <= span; ++k) vpow.push_back(vpow.back() * v);
        for (long long i = 0; i < rows; ++i)
            for (long long j = 0; j < cols; ++j) {
                // entry (i,j) of D(v(x), y): sum_k d_{k,j} [x^i] v^k
                Rational acc = 0;
                long long outer = (axis == GridAxis::X) ? i : j;
                for (long long k = 0; k <= outer; ++k) {
                    const Rational& src = (axis == GridAxis::X) ? g.at(k, j) : g.at(i, k);
                    if (src == 0) continue;
                    acc += src * vpow[static_cast<std::size_t>(k)][outer];
                }
                out.at(i, j) = acc;
            }
        return out;
    }
    throw std::invalid_argument("apply_rule: this rule takes a rational payload");
}

// Same rules on a rational bivariate function. Payloads must be polynomial
// (the series is read as a polynomial of its order's degree); composition
// substitutes into numerator and denominator separately.
inline RationalBivariate apply_rule(const RationalBivariate& f, GridRule rule, GridAxis axis,
                                    const Rational& c) {
    if (c == 0) throw std::invalid_argument("apply_rule: constant must be nonzero");
    if (rule == GridRule::Scale) {
        RationalBivariate out = f;
        for (auto& v : out.num.d) v *= c;
        return out;
    }
    if (rule == GridRule::ScaleVar) {
        RationalBivariate out = f;
        auto scale_grid = [&](CoeffGrid& gr) {
            for (long long i = 0; i < gr.rows; ++i)
                for (long long j = 0; j < gr.cols; ++j)
                    gr.at(i, j) *= qpow(c, axis == GridAxis::X ? i : j);
        };
        scale_grid(out.num);
        scale_grid(out.den);
        return out;
    }
    throw std::invalid_argument("apply_rule: this rule takes a series payload");
}

namespace detail {

inline CoeffGrid substitute_poly(const CoeffGrid& g, GridAxis axis, const TruncatedSeries& v) {
    // Substitutes the polynomial v for the chosen variable; v(0) = 0 keeps
    // degrees finite. Result degree grows by the degree of v.
    long long deg_v = v.order();
    long long rows = (axis == GridAxis::X) ? (g.rows - 1) * deg_v + 1 : g.rows;
    long long cols = (axis == GridAxis::Y) ? (g.cols - 1) * deg_v + 1 : g.cols;
    rows = std::max<long long>(rows, 1);
    cols = std::max<long long>(cols, 1);
    CoeffGrid vgrid(axis == GridAxis::X ? deg_v + 1 : 1, axis == GridAxis::Y ? deg_v + 1 : 1);
    for (long long k = 0; k <= deg_v; ++k)
        (axis == GridAxis::X ? vgrid.at(k, 0) : vgrid.at(0, k)) = v[k];
    CoeffGrid acc(1, 1);
    long long top = (axis == GridAxis::X) ? g.rows - 1 : g.cols - 1;
    for (long long k = top; k >= 0; --k) {
        acc = grid_mul(acc, vgrid, rows, cols);
        // add coefficient slice k (a polynomial in the other variable)
        CoeffGrid slice(axis == GridAxis::X ? 1 : g.rows, axis == GridAxis::X ? g.cols : 1);
        for (long long m = 0; m < (axis == GridAxis::X ? g.cols : g.rows); ++m)
            (axis == GridAxis::X ? slice.at(0, m) : slice.at(m, 0)) =
                (axis == GridAxis::X ? g.at(k, m) : g.at(m, k));
        acc = grid_add(acc, slice, rows, cols);
    }
    return acc;
}

}  // namespace detail

inline RationalBivariate apply_rule(const RationalBivariate& f, GridRule rule, GridAxis axis,
                                    const TruncatedSeries& payload) {
    if (rule == GridRule::Product) {
        if (payload[0] != 1)
            throw std::invalid_argument("apply_rule: product payload must have u(0) = 1");
        CoeffGrid p(axis == GridAxis::X ? payload.order() + 1 : 1,
                    axis == GridAxis::Y ? payload.order() + 1 : 1);
        for (long long k = 0; k <= payload.order(); ++k)
            (axis == GridAxis::X ? p.at(k, 0) : p.at(0, k)) = payload[k];
        RationalBivariate out = f;
        out.num = grid_mul(out.num, p, out.num.rows + p.rows - 1, out.num.cols + p.cols - 1);
        return out;
    }
    if (rule == GridRule::Compose) {
        if (payload[0] != 0 || payload.order() < 1 || payload[1] != 1)
            throw std::invalid_argument(
                "apply_rule: composition payload must have v(0) = 0, v'(0) = 1");
        RationalBivariate out;
        out.num = detail::substitute_poly(f.num, axis, payload);
        out.den = detail::substitute_poly(f.den, axis, payload);
        return out;
    }
    throw std::invalid_argument("apply_rule: this rule takes a rational payload");
}

}  // namespace hankel_lab

#endif
