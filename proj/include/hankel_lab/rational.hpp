#ifndef HANKEL_LAB_RATIONAL_HPP
#define HANKEL_LAB_RATIONAL_HPP

// Exact arithmetic base types. Every quantity in this library is a Rational;
// no floating point exists anywhere downstream of this header.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hankel_lab {

using Integer = boost::multiprecision::cpp_int;

// Canonical form is maintained eagerly by the backend: denominator > 0 and
// gcd(num, den) == 1 after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Integer n(num), d(den);
    if (d < 0) {  // backend wants a positive denominator
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Integer to_integer(const Rational& q) {
    if (!is_integer(q)) throw std::invalid_argument("to_integer: " + q.str() + " is not an integer");
    return numerator(q);
}

// Small-integer view for loop bounds and validated CLI parameters.
inline long long to_long(const Rational& q) {
    Integer n = to_integer(q);
    if (n > Integer(INT64_MAX) || n < Integer(INT64_MIN))
        throw std::invalid_argument("to_long: value out of range");
    return static_cast<long long>(n);
}

inline Integer ipow(Integer base, unsigned long long exp) {
    Integer acc = 1;
    while (exp) {
        if (exp & 1) acc *= base;
        base *= base;
        exp >>= 1;
    }
    return acc;
}

// q^e for any integer e; q == 0 requires e >= 0.
inline Rational qpow(const Rational& q, long long e) {
    if (e >= 0) {
        return Rational(ipow(numerator(q), static_cast<unsigned long long>(e)),
                        ipow(denominator(q), static_cast<unsigned long long>(e)));
    }
    if (q == 0) throw std::invalid_argument("qpow: zero base with negative exponent");
    return Rational(ipow(denominator(q), static_cast<unsigned long long>(-e)),
                    ipow(numerator(q), static_cast<unsigned long long>(-e)));
}

// Renders "p/q", or "p" when the value is an integer. Never a float.
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// Accepts "p", "-p", "p/q"; den must be nonzero.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: bad literal '" + text + "'");
    }
}

}  // namespace hankel_lab

#endif
