#ifndef HANKEL_LAB_LAURENT_HPP
#define HANKEL_LAB_LAURENT_HPP

// Laurent polynomials in one variable t with rational coefficients, used for
// constant-term extraction. Everything here is an exact finite expansion;
// constant terms are read off directly, never via partial fractions.

#include <stdexcept>
#include <vector>

#include "hankel_lab/rational.hpp"

namespace hankel_lab {

struct LaurentPoly {
    long long low = 0;            // exponent of c.front()
    std::vector<Rational> c;      // empty means the zero polynomial

    static LaurentPoly zero() { return {}; }
    static LaurentPoly term(const Rational& coeff, long long exp) {
        if (coeff == 0) return {};
        LaurentPoly p;
        p.low = exp;
        p.c = {coeff};
        return p;
    }
    // 1 + t + ... + t^r shifted so the lowest exponent is `low`.
    static LaurentPoly geometric_block(long long r, long long low) {
        if (r < 0) throw std::invalid_argument("geometric_block: negative width");
        LaurentPoly p;
        p.low = low;
        p.c.assign(static_cast<std::size_t>(r) + 1, Rational(1));
        return p;
    }

    long long high() const { return low + static_cast<long long>(c.size()) - 1; }

    Rational coeff(long long exp) const {
        if (c.empty() || exp < low || exp > high()) return 0;
        return c[static_cast<std::size_t>(exp - low)];
    }

    void trim() {
        std::size_t lead = 0;
        while (lead < c.size() && c[lead] == 0) ++lead;
        std::size_t tail = c.size();
        while (tail > lead && c[tail - 1] == 0) --tail;
        c = std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(lead),
                                  c.begin() + static_cast<std::ptrdiff_t>(tail));
        low += static_cast<long long>(lead);
        if (c.empty()) low = 0;
    }
};

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.c.empty()) return b;
    if (b.c.empty()) return a;
    long long low = std::min(a.low, b.low), high = std::max(a.high(), b.high());
    LaurentPoly s;
    s.low = low;
    s.c.assign(static_cast<std::size_t>(high - low) + 1, Rational(0));
    for (long long e = low; e <= high; ++e)
        s.c[static_cast<std::size_t>(e - low)] = a.coeff(e) + b.coeff(e);
    s.trim();
    return s;
}

inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.c.empty() || b.c.empty()) return LaurentPoly::zero();
    LaurentPoly s;
    s.low = a.low + b.low;
    s.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) s.c[i + j] += a.c[i] * b.c[j];
    }
    s.trim();
    return s;
}

inline LaurentPoly lpow(const LaurentPoly& a, long long e) {
    if (e < 0) throw std::invalid_argument("lpow: negative exponent");
    LaurentPoly acc = LaurentPoly::term(1, 0);
    LaurentPoly base = a;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// Constant term in t.
inline Rational ct(const LaurentPoly& p) { return p.coeff(0); }

// Number of paths with steps (r,0), (r-1,1), ..., (0,r) from the origin to
// (a, b): the coefficient of x^a y^b in (x^r + x^{r-1} y + ... + y^r)^{(a+b)/r}.
// Zero when a or b is negative or r does not divide a + b. The degenerate
// r = 0 family has only the empty path, so it is the Kronecker delta at the
// origin; this is the identity middle factor in the rank-1 matrix identity.
inline Rational trinomial_r(long long a, long long b, long long r) {
    if (r < 0) throw std::invalid_argument("trinomial_r: needs r >= 0");
    if (r == 0) return (a == 0 && b == 0) ? 1 : 0;
    if (a < 0 || b < 0 || (a + b) % r != 0) return 0;
    long long m = (a + b) / r;
    return lpow(LaurentPoly::geometric_block(r, 0), m).coeff(b);
}

}  // namespace hankel_lab

#endif
