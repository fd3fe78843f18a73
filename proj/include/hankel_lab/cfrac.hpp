#ifndef HANKEL_LAB_CFRAC_HPP
#define HANKEL_LAB_CFRAC_HPP

// Stieltjes continued fractions S(x) = 1/(1 - l1 x/(1 - l2 x/(1 - ...))).
//
// The bridge to Hankel determinants: with mu_i = l1 l2 ... l_i,
//   H_n  = mu_2 mu_4 ... mu_{2n-2}
//   H1_n = mu_1 mu_3 ... mu_{2n-1}
//   Hhat_n = mu_1 mu_2 ... mu_{n-1}
// where H/H1 are the k=0 and k=1 windows of the series and Hhat is the window
// of the x -> x^2 dilation. Empty products are 1.

#include <stdexcept>
#include <string>
#include <vector>

#include "hankel_lab/check.hpp"
#include "hankel_lab/rational.hpp"
#include "hankel_lab/series.hpp"
#include "hankel_lab/series_builders.hpp"

namespace hankel_lab {

struct SFraction {
    std::vector<Rational> lambdas;  // l_1 .. l_depth, all nonzero
    // True when extraction hit a zero coefficient: the fraction terminates
    // (to the order the source series could certify).
    bool terminated = false;

    long long depth() const { return static_cast<long long>(lambdas.size()); }
};

enum class HankelWindow { H, H1, Hhat };

inline std::string to_string(HankelWindow w) {
    switch (w) {
        case HankelWindow::H: return "H";
        case HankelWindow::H1: return "H1";
        case HankelWindow::Hhat: return "Hhat";
    }
    throw std::logic_error("window name");
}

inline HankelWindow hankel_window(const std::string& s) {
    if (s == "H") return HankelWindow::H;
    if (s == "H1") return HankelWindow::H1;
    if (s == "Hhat") return HankelWindow::Hhat;
    throw std::invalid_argument("unknown Hankel window '" + s + "'");
}

// Peels coefficients off the series: l_{k+1} = [x^1](1 - 1/A_k) and
// A_{k+1} = (1 - 1/A_k)/(l_{k+1} x). One order of precision is spent per
// level, so the series order bounds the reachable depth.
inline SFraction extract_sfraction(const TruncatedSeries& a, long long depth) {
    if (a[0] != 1) throw std::invalid_argument("extract_sfraction: A(0) must be 1");
    if (depth < 0) throw std::invalid_argument("extract_sfraction: negative depth");
    SFraction out;
    TruncatedSeries cur = a;
    for (long long k = 0; k < depth; ++k) {
        if (cur.order() < 1)
            throw std::invalid_argument(
                "extract_sfraction: series order too small for depth " + std::to_string(depth));
        TruncatedSeries rem = const_series(1, cur.order()) - inverse(cur);
        Rational lambda = rem[1];
        if (lambda == 0) {
            out.terminated = true;
            return out;
        }
        out.lambdas.push_back(lambda);
        cur = shift_down(rem) * (1 / lambda);
    }
    return out;
}

// Bottom-up reconstruction at a fixed order; exact to min(order, depth) and a
// plain finite fraction value when the fraction terminated.
inline TruncatedSeries sfraction_to_series(const SFraction& f, long long order) {
    TruncatedSeries s = const_series(1, order);
    for (auto it = f.lambdas.rbegin(); it != f.lambdas.rend(); ++it)
        s = inverse(const_series(1, order) - shift_up(s) * *it);
    return s;
}

// Continued fraction coefficients of the Gauss quotient
// 2F1(a, b+1; c+1 | rho x) / 2F1(a, b; c | rho x):
//   l_{2n-1} = rho (a+n-1)(c-b+n-1) / ((c+2n-2)(c+2n-1))
//   l_{2n}   = rho (b+n)(c-a+n)     / ((c+2n-1)(c+2n))
inline SFraction gauss_lambdas(const Rational& a, const Rational& b, const Rational& c,
                               const Rational& rho, long long depth) {
    if (depth < 0) throw std::invalid_argument("gauss_lambdas: negative depth");
    SFraction out;
    for (long long i = 1; i <= depth; ++i) {
        long long n = (i + 1) / 2;
        Rational den = (i % 2 == 1) ? Rational((c + 2 * n - 2) * (c + 2 * n - 1))
                                    : Rational((c + 2 * n - 1) * (c + 2 * n));
        if (den == 0)
            throw std::domain_error("gauss_lambdas: lower parameter degenerates at level " +
                                    std::to_string(i));
        Rational num = (i % 2 == 1) ? Rational((a + n - 1) * (c - b + n - 1))
                                    : Rational((b + n) * (c - a + n));
        Rational lambda = rho * num / den;
        if (lambda == 0) {
            out.terminated = true;
            return out;
        }
        out.lambdas.push_back(lambda);
    }
    return out;
}

namespace detail {

inline Rational mu_product(const SFraction& f, long long first, long long last, long long step) {
    // Product of mu_i for i = first, first+step, ..., <= last.
    Rational acc = 1;
    std::vector<Rational> mu(static_cast<std::size_t>(std::max<long long>(last, 0)) + 1, 1);
    for (long long i = 1; i <= last; ++i)
        mu[static_cast<std::size_t>(i)] =
            mu[static_cast<std::size_t>(i - 1)] * f.lambdas[static_cast<std::size_t>(i - 1)];
    for (long long i = first; i <= last; i += step) acc *= mu[static_cast<std::size_t>(i)];
    return acc;
}

}  // namespace detail

inline Rational hankel_from_lambdas(const SFraction& f, long long n, HankelWindow window) {
    if (n < 0) throw std::invalid_argument("hankel_from_lambdas: negative size");
    long long needed = 0;
    switch (window) {
        case HankelWindow::H: needed = 2 * n - 2; break;
        case HankelWindow::H1: needed = 2 * n - 1; break;
        case HankelWindow::Hhat: needed = n - 1; break;
    }
    needed = std::max<long long>(needed, 0);
    if (f.depth() < needed) {
        if (f.terminated) {
            // A terminated fraction means every later lambda is 0, so the
            // missing mu factors vanish and the determinant is 0.
            return 0;
        }
        throw std::invalid_argument("hankel_from_lambdas: depth " + std::to_string(f.depth()) +
                                    " insufficient, need " + std::to_string(needed));
    }
    switch (window) {
        case HankelWindow::H: return detail::mu_product(f, 2, 2 * n - 2, 2);
        case HankelWindow::H1: return detail::mu_product(f, 1, 2 * n - 1, 2);
        case HankelWindow::Hhat: return detail::mu_product(f, 1, n - 1, 1);
    }
    throw std::logic_error("hankel window dispatch");
}

namespace detail {

inline Rational closed_form_h(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& rho, long long n) {
    Rational acc = 1;
    for (long long i = 0; i < n; ++i) {
        Rational den = pochhammer(c, 2 * i) * pochhammer(c + 1, 2 * i);
        if (den == 0) throw std::domain_error("hankel_closed_form: zero Pochhammer in H");
        acc *= pochhammer(a, i) * pochhammer(b + 1, i) * pochhammer(c - b, i) *
               pochhammer(c - a + 1, i) / den * qpow(rho, 2 * i);
    }
    return acc;
}

inline Rational closed_form_h1(const Rational& a, const Rational& b, const Rational& c,
                               const Rational& rho, long long n) {
    Rational acc = 1;
    for (long long i = 1; i <= n; ++i) {
        Rational den = pochhammer(c, 2 * i - 1) * pochhammer(c + 1, 2 * i - 1);
        if (den == 0) throw std::domain_error("hankel_closed_form: zero Pochhammer in H1");
        acc *= pochhammer(a, i) * pochhammer(b + 1, i - 1) * pochhammer(c - b, i) *
               pochhammer(c - a + 1, i - 1) / den * qpow(rho, 2 * i - 1);
    }
    return acc;
}

// Alternate H1 product; defined when b != 0, c != a, c != 0, 1 and the shifted
// Pochhammers stay nonzero. Used as an internal cross-check of closed_form_h1.
inline Rational closed_form_h1_alt(const Rational& a, const Rational& b, const Rational& c,
                                   const Rational& rho, long long n) {
    Rational acc = 1;
    for (long long i = 1; i <= n; ++i) {
        Rational den = pochhammer(c, 2 * i) * pochhammer(c - 1, 2 * i);
        if (den == 0) throw std::domain_error("hankel_closed_form: zero Pochhammer in H1 alt");
        acc *= (c - 1) * c / (b * (c - a) * rho);
        acc *= pochhammer(a, i) * pochhammer(b, i) * pochhammer(c - b, i) *
               pochhammer(c - a, i) / den * qpow(rho, 2 * i);
    }
    return acc;
}

inline bool h1_alt_applicable(const Rational& b, const Rational& c, const Rational& a,
                              long long n) {
    if (b == 0 || c == a || c == 0 || c == 1) return false;
    for (long long k = 0; k < 2 * n; ++k)
        if (c - 1 + k == 0 || c + k == 0) return false;
    return true;
}

}  // namespace detail

// Product evaluations of the determinant windows for the Gauss quotient
// series. The H1 window is evaluated by two distinct products that must
// agree; Hhat is assembled from the splitting into H and H1.
inline Rational hankel_closed_form(const Rational& a, const Rational& b, const Rational& c,
                                   const Rational& rho, long long n, HankelWindow window) {
    if (n < 0) throw std::invalid_argument("hankel_closed_form: negative size");
    switch (window) {
        case HankelWindow::H: return detail::closed_form_h(a, b, c, rho, n);
        case HankelWindow::H1: {
            Rational primary = detail::closed_form_h1(a, b, c, rho, n);
            if (detail::h1_alt_applicable(b, c, a, n)) {
                Rational alt = detail::closed_form_h1_alt(a, b, c, rho, n);
                if (alt != primary)
                    throw std::logic_error("hankel_closed_form: H1 product forms disagree");
            }
            return primary;
        }
        case HankelWindow::Hhat:
            return hankel_closed_form(a, b, c, rho, (n + 1) / 2, HankelWindow::H) *
                   hankel_closed_form(a, b, c, rho, n / 2, HankelWindow::H1);
    }
    throw std::logic_error("hankel window dispatch");
}

// Shifted-window determinant H^{(2)}_n of the quotient series via the ratio
//   H2_n = [ a(c-b)/(c(a-b)) * (a+1)_n (c-b+1)_n / ((b+1)_n (c-a+1)_n)
//            - b(c-a)/(c(a-b)) ] * H_{n+1}.
inline Rational h2_ratio(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& rho, long long n) {
    if (n < 0) throw std::invalid_argument("h2_ratio: negative size");
    if (a == b || c == 0) throw std::domain_error("h2_ratio: needs a != b and c != 0");
    Rational den = pochhammer(b + 1, n) * pochhammer(c - a + 1, n);
    if (den == 0) throw std::domain_error("h2_ratio: degenerate Pochhammer");
    Rational scale = a * (c - b) / (c * (a - b));
    Rational shift = b * (c - a) / (c * (a - b));
    Rational bracket = scale * pochhammer(a + 1, n) * pochhammer(c - b + 1, n) / den - shift;
    return bracket * hankel_closed_form(a, b, c, rho, n + 1, HankelWindow::H);
}

// Contiguous relation between the two orderings of the upper parameters:
//   Q(b, a, c) = c(a-b)/(a(c-b)) + b(c-a)/(a(c-b)) Q(a, b, c)
// verified cross-multiplied to the given order.
inline CheckResult verify_contiguous(const Rational& a, const Rational& b, const Rational& c,
                                     const Rational& rho, long long order) {
    if (a == 0 || c == b) throw std::domain_error("verify_contiguous: needs a != 0, c != b");
    Rational alpha = c * (a - b) / (a * (c - b));
    Rational beta = b * (c - a) / (a * (c - b));
    TruncatedSeries n1 = hyp2f1_series(b, a + 1, c + 1, rho, order);
    TruncatedSeries d1 = hyp2f1_series(b, a, c, rho, order);
    TruncatedSeries n2 = hyp2f1_series(a, b + 1, c + 1, rho, order);
    TruncatedSeries d2 = hyp2f1_series(a, b, c, rho, order);
    TruncatedSeries lhs = n1 * d2;
    TruncatedSeries rhs = d1 * d2 * alpha + n2 * d1 * beta;
    for (long long k = 0; k <= order; ++k)
        if (lhs[k] != rhs[k])
            return CheckResult::fail(to_string(lhs[k]), to_string(rhs[k]),
                                     "contiguous relation at x^" + std::to_string(k));
    return CheckResult::ok();
}

}  // namespace hankel_lab

#endif
