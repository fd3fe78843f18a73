#ifndef HANKEL_LAB_COMBINATORICS_HPP
#define HANKEL_LAB_COMBINATORICS_HPP

// Factorials, binomials and Pochhammer symbols over exact rationals.
//
// Two binomial flavors coexist on purpose:
//   binom(a, b)          lattice convention: 0 whenever a < 0 or b < 0 (or b > a),
//                        so recurrences over coefficient grids hold with no edge cases.
//   binom_general(a, b)  Pochhammer extension (a-b+1)_b / b! for rational a, integer b >= 0;
//                        in particular binom_general(a, 0) == 1 for every a, including
//                        negative integers where the lattice convention gives 0.

#include <stdexcept>
#include <vector>

#include "hankel_lab/rational.hpp"

namespace hankel_lab {

inline constexpr long long kFactorialCap = 1000;

inline const Integer& factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    if (n > kFactorialCap) throw std::out_of_range("factorial: argument beyond cap");
    static std::vector<Integer> cache = {1};
    while (static_cast<long long>(cache.size()) <= n)
        cache.push_back(cache.back() * static_cast<long long>(cache.size()));
    return cache[static_cast<std::size_t>(n)];
}

inline Integer binom(const Integer& a, const Integer& b) {
    if (a < 0 || b < 0 || b > a) return 0;
    Integer small = b * 2 > a ? a - b : b;
    if (a <= kFactorialCap) {
        long long an = static_cast<long long>(a), bn = static_cast<long long>(b);
        return factorial(an) / (factorial(bn) * factorial(an - bn));
    }
    Integer acc = 1;
    for (Integer i = 0; i < small; ++i) acc = acc * (a - i) / (i + 1);
    return acc;
}

inline Integer binom(long long a, long long b) { return binom(Integer(a), Integer(b)); }

// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, long long n) {
    if (n < 0) throw std::invalid_argument("pochhammer: negative length");
    Rational acc = 1;
    for (long long k = 0; k < n; ++k) acc *= a + k;
    return acc;
}

inline Rational binom_general(const Rational& a, long long b) {
    if (b < 0) return 0;
    return pochhammer(a - b + 1, b) / Rational(factorial(b));
}

// Indicator as a number, used inside sign factors such as (-1)^chi(cond).
inline int chi(bool cond) { return cond ? 1 : 0; }

}  // namespace hankel_lab

#endif
