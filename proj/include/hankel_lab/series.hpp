#ifndef HANKEL_LAB_SERIES_HPP
#define HANKEL_LAB_SERIES_HPP

// Truncated formal power series over Rational. A series of order d stores
// coefficients of x^0 .. x^d and represents its value mod x^{d+1}.
//
// Binary operations propagate order = min(orders of the operands): the result
// is exactly as long as both inputs can certify.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "hankel_lab/rational.hpp"

namespace hankel_lab {

struct TruncatedSeries {
    std::vector<Rational> coeffs;  // coeffs[k] is [x^k]

    TruncatedSeries() : coeffs(1, Rational(0)) {}
    explicit TruncatedSeries(long long order) {
        if (order < 0) throw std::invalid_argument("series: negative order");
        coeffs.assign(static_cast<std::size_t>(order) + 1, Rational(0));
    }

    long long order() const { return static_cast<long long>(coeffs.size()) - 1; }

    const Rational& operator[](long long k) const {
        if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
        return coeffs[static_cast<std::size_t>(k)];
    }
    Rational& operator[](long long k) {
        if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
        return coeffs[static_cast<std::size_t>(k)];
    }

    bool operator==(const TruncatedSeries& o) const { return coeffs == o.coeffs; }
};

inline TruncatedSeries const_series(const Rational& c, long long order) {
    TruncatedSeries s(order);
    s[0] = c;
    return s;
}

inline TruncatedSeries x_series(long long order) {
    TruncatedSeries s(order);
    if (order >= 1) s[1] = 1;
    return s;
}

inline TruncatedSeries truncated(const TruncatedSeries& a, long long order) {
    if (order > a.order()) throw std::invalid_argument("truncated: cannot extend order");
    TruncatedSeries s(order);
    for (long long k = 0; k <= order; ++k) s[k] = a[k];
    return s;
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (long long k = 0; k <= s.order(); ++k) s[k] = a[k] + b[k];
    return s;
}

inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (long long k = 0; k <= s.order(); ++k) s[k] = a[k] - b[k];
    return s;
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (long long i = 0; i <= std::min(a.order(), s.order()); ++i) {
        if (a[i] == 0) continue;
        for (long long j = 0; i + j <= s.order() && j <= b.order(); ++j) {
            if (b[j] == 0) continue;
            s[i + j] += a[i] * b[j];
        }
    }
    return s;
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c) {
    TruncatedSeries s = a;
    for (auto& q : s.coeffs) q *= c;
    return s;
}
inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) { return a * c; }

inline TruncatedSeries operator+(const TruncatedSeries& a, const Rational& c) {
    TruncatedSeries s = a;
    s[0] += c;
    return s;
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const Rational& c) { return a + (-c); }
inline TruncatedSeries operator-(const Rational& c, const TruncatedSeries& a) {
    return a * Rational(-1) + c;
}

// Multiplication by x: shifts every coefficient up, dropping the top one.
inline TruncatedSeries shift_up(const TruncatedSeries& a) {
    TruncatedSeries s(a.order());
    for (long long k = 1; k <= s.order(); ++k) s[k] = a[k - 1];
    return s;
}

// Division by x; requires a vanishing constant term. Order drops by one.
inline TruncatedSeries shift_down(const TruncatedSeries& a) {
    if (a[0] != 0) throw std::invalid_argument("shift_down: nonzero constant term");
    if (a.order() == 0) throw std::invalid_argument("shift_down: order 0");
    TruncatedSeries s(a.order() - 1);
    for (long long k = 0; k <= s.order(); ++k) s[k] = a[k + 1];
    return s;
}

inline TruncatedSeries inverse(const TruncatedSeries& a) {
    if (a[0] == 0) throw std::invalid_argument("inverse: constant term is zero");
    TruncatedSeries s(a.order());
    s[0] = 1 / a[0];
    for (long long n = 1; n <= s.order(); ++n) {
        Rational acc = 0;
        for (long long k = 1; k <= n; ++k) acc += a[k] * s[n - k];
        s[n] = -acc / a[0];
    }
    return s;
}

inline TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    long long order = std::min(a.order(), b.order());
    return truncated(a, order) * inverse(truncated(b, order));
}

inline TruncatedSeries spow(const TruncatedSeries& a, long long e) {
    if (e < 0) return spow(inverse(a), -e);
    TruncatedSeries acc = const_series(1, a.order());
    TruncatedSeries base = a;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// Substitutes x -> c x.
inline TruncatedSeries scale_var(const TruncatedSeries& a, const Rational& c) {
    TruncatedSeries s = a;
    Rational p = 1;
    for (long long k = 1; k <= s.order(); ++k) {
        p *= c;
        s[k] *= p;
    }
    return s;
}

inline TruncatedSeries derivative(const TruncatedSeries& a) {
    TruncatedSeries s(std::max<long long>(a.order() - 1, 0));
    for (long long k = 1; k <= a.order(); ++k)
        if (k - 1 <= s.order()) s[k - 1] = a[k] * k;
    return s;
}

// A(B(x)) by Horner's scheme; B must have no constant term so that the
// truncation stays exact at order min(A, B).
inline TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b[0] != 0) throw std::invalid_argument("compose: inner series has constant term");
    long long order = std::min(a.order(), b.order());
    TruncatedSeries inner = truncated(b, order);
    TruncatedSeries acc = const_series(a[a.order()], order);
    for (long long k = a.order() - 1; k >= 0; --k) acc = acc * inner + a[k];
    return acc;
}

// Compositional inverse: returns B with A(B(x)) = x mod x^{order+1}.
// Requires A(0) = 0 and A'(0) != 0. Newton iteration doubles the number of
// correct coefficients per step, so log2(order) + 2 steps at full order suffice.
inline TruncatedSeries revert(const TruncatedSeries& a) {
    if (a[0] != 0) throw std::invalid_argument("revert: constant term must vanish");
    if (a.order() < 1 || a[1] == 0) throw std::invalid_argument("revert: needs A'(0) != 0");
    long long order = a.order();
    TruncatedSeries da(order);
    for (long long k = 1; k <= order; ++k) da[k - 1] = a[k] * k;
    TruncatedSeries b = x_series(order) * (1 / a[1]);
    long long steps = 2;
    for (long long m = 1; m < order; m *= 2) ++steps;
    TruncatedSeries x = x_series(order);
    for (long long s = 0; s < steps; ++s) {
        TruncatedSeries err = compose(a, b) - x;
        b = b - div(err, compose(da, b));
    }
    return b;
}

inline bool eq_to_order(const TruncatedSeries& a, const TruncatedSeries& b, long long order) {
    if (order > a.order() || order > b.order())
        throw std::invalid_argument("eq_to_order: order beyond operands");
    for (long long k = 0; k <= order; ++k)
        if (a[k] != b[k]) return false;
    return true;
}

inline std::string to_string(const TruncatedSeries& a, long long max_terms = 8) {
    std::string out = "[";
    long long shown = std::min(a.order(), max_terms - 1);
    for (long long k = 0; k <= shown; ++k) {
        if (k) out += ", ";
        out += to_string(a[k]);
    }
    if (shown < a.order()) out += ", ...";
    return out + "]";
}

}  // namespace hankel_lab

#endif
