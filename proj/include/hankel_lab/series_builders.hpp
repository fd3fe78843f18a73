#ifndef HANKEL_LAB_SERIES_BUILDERS_HPP
#define HANKEL_LAB_SERIES_BUILDERS_HPP

// Named series constructors and the coefficient identities tying them together.
//
// Built-in names:
//   g        ternary tree generating function, g = 1 + x g^3
//   f        g - 1, the positive-valuation root of f = x (1+f)^3
//   g_r      generalized (r+1)-ary tree series, g = 1 + x g^{r+1}   (param r)
//   f_r      g_r - 1                                                (param r)
//   chat     (1 - (1-9x)^{1/3}) / (3x)
//   chat1    (1 - (1-9x)^{2/3}) / (3x)
//   s_u      polynomial family s_n(u) interpolating seq_b (u=0),
//            shifted seq_a (u=1) and the r_n column (u=3)           (param u)
//   seq_a..seq_e   the five integer sequences of the main table
//   hyp2f1   2F1(a, b; c | rho x) as a power series                 (params a,b,c,rho)
//   catalan  central binomial / (n+1), for continued fraction demos
//   geom     1/(1-x)

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hankel_lab/check.hpp"
#include "hankel_lab/combinatorics.hpp"
#include "hankel_lab/rational.hpp"
#include "hankel_lab/series.hpp"

namespace hankel_lab {

inline Rational seq_a_term(long long n) { return Rational(binom(3 * n, n)) / (2 * n + 1); }
inline Rational seq_b_term(long long n) { return Rational(binom(3 * n + 1, n)) / (n + 1); }
inline Rational seq_r_term(long long n) { return Rational(binom(3 * n + 2, n)); }

inline Rational s_poly_term(long long n, const Rational& u) {
    Rational acc = 0;
    Rational upow = 1;
    for (long long k = 0; k <= n; ++k) {
        acc += Rational(k + 1, n + 1) * Rational(binom(3 * n - k + 1, n - k)) * upow;
        upow *= u;
    }
    return acc;
}

inline TruncatedSeries hyp2f1_series(const Rational& a, const Rational& b, const Rational& c,
                                     const Rational& rho, long long order) {
    TruncatedSeries s(order);
    Rational term = 1;
    s[0] = 1;
    for (long long n = 0; n < order; ++n) {
        if (c + n == 0)
            throw std::domain_error("hyp2f1: lower parameter hits a nonpositive integer");
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * rho;
        s[n + 1] = term;
    }
    return s;
}

namespace detail {

inline TruncatedSeries tree_fixed_point(long long order, long long r) {
    // f = x (1+f)^{r+1}; each pass extends agreement by one order.
    TruncatedSeries f(order);
    for (long long pass = 0; pass <= order; ++pass)
        f = shift_up(spow(f + Rational(1), r + 1));
    return f;
}

// (1 - (1-9x)^{e}) / (3x) via the binomial series for (1-9x)^e.
inline TruncatedSeries binomial_cube_root_form(long long order, const Rational& e) {
    TruncatedSeries pow_series(order + 1);
    Rational m9 = 1;
    for (long long k = 0; k <= order + 1; ++k) {
        pow_series[k] = binom_general(e, k) * m9;
        m9 *= -9;
    }
    TruncatedSeries num = const_series(1, order + 1) - pow_series;
    // The constant term cancels exactly; shift_down asserts it.
    return shift_down(num) * rat(1, 3);
}

}  // namespace detail

inline TruncatedSeries build_series(const std::string& name, long long order,
                                    const std::vector<Rational>& params = {}) {
    if (order < 0) throw std::invalid_argument("build_series: negative order");
    auto need = [&](std::size_t count, const char* what) {
        if (params.size() < count)
            throw std::invalid_argument("build_series: " + name + " needs " + what);
    };
    auto fill = [&](auto term) {
        TruncatedSeries s(order);
        for (long long n = 0; n <= order; ++n) s[n] = term(n);
        return s;
    };
    if (name == "g") return fill(seq_a_term);
    if (name == "f") return detail::tree_fixed_point(order, 2);
    if (name == "g_r") {
        need(1, "param r");
        long long r = to_long(params[0]);
        if (r < 1) throw std::domain_error("build_series: g_r needs r >= 1");
        return fill([&](long long n) { return Rational(binom((r + 1) * n, n)) / (r * n + 1); });
    }
    if (name == "f_r") {
        need(1, "param r");
        long long r = to_long(params[0]);
        if (r < 1) throw std::domain_error("build_series: f_r needs r >= 1");
        return detail::tree_fixed_point(order, r);
    }
    if (name == "chat") return detail::binomial_cube_root_form(order, rat(1, 3));
    if (name == "chat1") return detail::binomial_cube_root_form(order, rat(2, 3));
    if (name == "s_u") {
        need(1, "param u");
        return fill([&](long long n) { return s_poly_term(n, params[0]); });
    }
    if (name == "seq_a") return fill(seq_a_term);
    if (name == "seq_b") return fill(seq_b_term);
    if (name == "seq_c") return fill([](long long n) { return seq_a_term(n) + seq_b_term(n); });
    if (name == "seq_d")
        return fill([](long long n) { return 3 * seq_a_term(n) - seq_b_term(n); });
    if (name == "seq_e")
        return fill([](long long n) { return 3 * seq_a_term(n) + 2 * seq_b_term(n); });
    if (name == "hyp2f1") {
        need(4, "params a, b, c, rho");
        return hyp2f1_series(params[0], params[1], params[2], params[3], order);
    }
    if (name == "catalan")
        return fill([](long long n) { return Rational(binom(2 * n, n)) / (n + 1); });
    if (name == "geom") return fill([](long long) { return Rational(1); });
    throw std::invalid_argument("build_series: unknown name '" + name + "'");
}

// One hypergeometric quotient case: S-fraction with the Gauss parameters below
// equals poly(f), poly listed by ascending powers of f.
struct GaussCase {
    Rational a, b, c;
    std::vector<Rational> poly;
    std::string label;
};

inline const std::vector<GaussCase>& gauss_cases() {
    static const std::vector<GaussCase> cases = {
        {rat(2, 3), rat(1, 3), rat(1, 2), {1, 1}, "1+f"},
        {rat(4, 3), rat(2, 3), rat(3, 2), {1, 2, 1}, "(1+f)^2"},
        {rat(5, 3), rat(4, 3), rat(5, 2), {1, rat(3, 2), rat(1, 2)}, "(1+f)(1+f/2)"},
        {rat(5, 3), rat(4, 3), rat(3, 2), {1, rat(1, 2), rat(-1, 2)}, "(1+f)(1-f/2)"},
        {rat(2, 3), rat(1, 3), rat(3, 2), {1, rat(7, 5), rat(2, 5)}, "(1+f)(1+2f/5)"},
        {rat(1, 3), rat(2, 3), rat(1, 2), {1, rat(-1, 2)}, "1-f/2"},
        {rat(2, 3), rat(4, 3), rat(3, 2), {1, rat(1, 5), rat(1, 10)}, "1+f/5+f^2/10"},
        {rat(4, 3), rat(5, 3), rat(5, 2), {1, rat(6, 7), rat(2, 7)}, "1+6f/7+2f^2/7"},
        {rat(4, 3), rat(5, 3), rat(3, 2), {1, rat(-2, 5), rat(2, 5)}, "1-2f/5+2f^2/5"},
        {rat(1, 3), rat(2, 3), rat(3, 2), {1, rat(1, 2), rat(1, 7)}, "1+f/2+f^2/7"},
    };
    return cases;
}

// (primary, companion): companion parameters are the primary's with the upper
// pair swapped, and its polynomial follows from the contiguous relation.
inline const std::vector<std::pair<std::size_t, std::size_t>>& gauss_companion_pairs() {
    static const std::vector<std::pair<std::size_t, std::size_t>> pairs = {
        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
    return pairs;
}

inline TruncatedSeries eval_poly(const std::vector<Rational>& poly, const TruncatedSeries& at) {
    TruncatedSeries acc = const_series(0, at.order());
    for (std::size_t k = poly.size(); k-- > 0;) acc = acc * at + poly[k];
    return acc;
}

namespace detail {

inline CheckResult expect_series_eq(const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                                    long long order, const std::string& where) {
    for (long long k = 0; k <= order; ++k)
        if (lhs[k] != rhs[k])
            return CheckResult::fail(to_string(lhs[k]), to_string(rhs[k]),
                                     where + " at x^" + std::to_string(k));
    return CheckResult::ok();
}

}  // namespace detail

// Tags:
//   functional_eq  g = 1 + x g^3, f = x(1+f)^3, and the r-ary versions r=1..4,
//                  plus f == g - 1 agreement between the two construction routes
//   f_kth          [x^n] f^k = (k/n) C(3n, n-k)
//   g_kth          [x^n] (1+f)^k = (k/(3n+k)) C(3n+k, n)
//   kth            [x^n] (1+f)^{k+1}/(1-2f) = C(3n+k, n)
//   tcfs_all       all ten quotient cases, cross-multiplied
//   q41_q45        the five auxiliary quotient evaluations, cross-multiplied
//   fs_expansion   (f/x)/(1+(1-u)f) = sum s_n(u) x^n = (1+f)^2/(1-u x (1+f)^2)
// params: f_kth/g_kth/kth take kmax (default 6), fs_expansion takes u.
inline CheckResult verify_series_identities(const std::string& tag, long long order,
                                            const std::vector<Rational>& params = {}) {
    using detail::expect_series_eq;
    if (order < 1) throw std::invalid_argument("verify_series_identities: order must be >= 1");
    if (tag == "functional_eq") {
        CheckResult out = CheckResult::ok();
        for (long long r = 1; r <= 4; ++r) {
            TruncatedSeries g = build_series(r == 2 ? "g" : "g_r", order, {Rational(r)});
            TruncatedSeries f = build_series(r == 2 ? "f" : "f_r", order, {Rational(r)});
            out.merge(expect_series_eq(g, shift_up(spow(g, r + 1)) + Rational(1), order,
                                       "g = 1 + x g^{r+1}, r=" + std::to_string(r)));
            out.merge(expect_series_eq(f, shift_up(spow(f + Rational(1), r + 1)), order,
                                       "f = x (1+f)^{r+1}, r=" + std::to_string(r)));
            out.merge(expect_series_eq(f, g - Rational(1), order,
                                       "f = g - 1, r=" + std::to_string(r)));
        }
        return out;
    }
    if (tag == "f_kth" || tag == "g_kth" || tag == "kth") {
        long long kmax = params.empty() ? 6 : to_long(params[0]);
        if (kmax < (tag == "kth" ? 0 : 1))
            throw std::invalid_argument("verify_series_identities: bad kmax");
        TruncatedSeries f = build_series("f", order);
        CheckResult out = CheckResult::ok();
        for (long long k = (tag == "kth" ? 0 : 1); k <= kmax; ++k) {
            TruncatedSeries lhs, rhs(order);
            if (tag == "f_kth") {
                lhs = spow(f, k);
                for (long long n = k; n <= order; ++n)
                    rhs[n] = Rational(k, n) * Rational(binom(3 * n, n - k));
            } else if (tag == "g_kth") {
                lhs = spow(f + Rational(1), k);
                for (long long n = 0; n <= order; ++n)
                    rhs[n] = Rational(k, 3 * n + k) * Rational(binom(3 * n + k, n));
            } else {
                lhs = div(spow(f + Rational(1), k + 1),
                          const_series(1, order) - Rational(2) * f);
                for (long long n = 0; n <= order; ++n) rhs[n] = Rational(binom(3 * n + k, n));
            }
            out.merge(expect_series_eq(lhs, rhs, order, tag + ", k=" + std::to_string(k)));
        }
        return out;
    }
    if (tag == "tcfs_all") {
        TruncatedSeries f = build_series("f", order);
        CheckResult out = CheckResult::ok();
        for (const GaussCase& gc : gauss_cases()) {
            TruncatedSeries num = hyp2f1_series(gc.a, gc.b + 1, gc.c + 1, rat(27, 4), order);
            TruncatedSeries den = hyp2f1_series(gc.a, gc.b, gc.c, rat(27, 4), order);
            out.merge(expect_series_eq(num, eval_poly(gc.poly, f) * den, order,
                                       "quotient case " + gc.label));
        }
        return out;
    }
    if (tag == "q41_q45") {
        TruncatedSeries f = build_series("f", order);
        TruncatedSeries one = const_series(1, order);
        TruncatedSeries p1 = f + Rational(1);
        TruncatedSeries m2 = one - Rational(2) * f;
        auto F = [&](const Rational& a, const Rational& b, const Rational& c) {
            return hyp2f1_series(a, b, c, rat(27, 4), order);
        };
        CheckResult out = CheckResult::ok();
        out.merge(expect_series_eq(F(rat(2, 3), rat(4, 3), rat(5, 2)),
                                   spow(p1, 2) * (one + rat(2, 5) * f), order, "(2/3,4/3;5/2)"));
        out.merge(expect_series_eq(F(rat(4, 3), rat(5, 3), rat(5, 2)) * m2, spow(p1, 4), order,
                                   "(4/3,5/3;5/2)"));
        out.merge(expect_series_eq(F(rat(5, 3), rat(7, 3), rat(7, 2)) * m2,
                                   spow(p1, 5) * (one + rat(1, 2) * f), order, "(5/3,7/3;7/2)"));
        out.merge(expect_series_eq(F(rat(4, 3), rat(5, 3), rat(3, 2)) * spow(m2, 3), spow(p1, 4),
                                   order, "(4/3,5/3;3/2)"));
        out.merge(expect_series_eq(F(rat(5, 3), rat(7, 3), rat(5, 2)) * spow(m2, 3),
                                   spow(p1, 5) * (one - rat(1, 2) * f), order, "(5/3,7/3;5/2)"));
        return out;
    }
    if (tag == "fs_expansion") {
        if (params.empty()) throw std::invalid_argument("fs_expansion needs u");
        const Rational& u = params[0];
        TruncatedSeries f = build_series("f", order + 1);
        TruncatedSeries one = const_series(1, order);
        TruncatedSeries s_n = build_series("s_u", order, {u});
        TruncatedSeries lhs = div(shift_down(f), truncated(f, order) * (1 - u) + Rational(1));
        CheckResult out = expect_series_eq(lhs, s_n, order, "(f/x)/(1+(1-u)f) vs s_n(u)");
        TruncatedSeries p1sq = spow(truncated(f, order) + Rational(1), 2);
        TruncatedSeries rhs2 = div(p1sq, one - u * shift_up(p1sq));
        out.merge(expect_series_eq(s_n, rhs2, order, "s_n(u) vs (1+f)^2/(1-ux(1+f)^2)"));
        if (u != 0) {
            // 1/u + f/(1+(1-u)f) = (1/u) / (1 - u x (1+f)^2), cross-multiplied.
            TruncatedSeries left =
                div(truncated(f, order), truncated(f, order) * (1 - u) + Rational(1)) + 1 / u;
            out.merge(expect_series_eq(left * (one - u * shift_up(p1sq)),
                                       const_series(1 / u, order), order,
                                       "shifted expansion, cross-multiplied"));
        }
        if (u == 1) {
            TruncatedSeries a_shift(order);
            for (long long n = 0; n <= order; ++n) a_shift[n] = seq_a_term(n + 1);
            out.merge(expect_series_eq(s_n, a_shift, order, "s_n(1) = a_{n+1}"));
        }
        return out;
    }
    throw std::invalid_argument("verify_series_identities: unknown tag '" + tag + "'");
}

}  // namespace hankel_lab

#endif
