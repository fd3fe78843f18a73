#ifndef HANKEL_LAB_CLOSED_FORMS_HPP
#define HANKEL_LAB_CLOSED_FORMS_HPP

// Named closed-form products: Hankel determinant evaluations, the
// Macdonald-style binomial determinant, and factor-by-factor identity checks.
//
// By convention the check forms (id1, id2, m_symm) return the ratio of their
// two sides, so a return of exactly 1 means the identity holds at that index.
// The ratio forms use binom_general so both sides stay evaluable at indices
// where the lattice binomial would degenerate to 0/0.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hankel_lab/combinatorics.hpp"
#include "hankel_lab/rational.hpp"

namespace hankel_lab {

enum class ClosedFormName { TypeA, TypeB, Asm, MrrDet, BinomDet, Id1, Id2, MSymm };

inline std::string to_string(ClosedFormName name) {
    switch (name) {
        case ClosedFormName::TypeA: return "typea";
        case ClosedFormName::TypeB: return "typeb";
        case ClosedFormName::Asm: return "asm";
        case ClosedFormName::MrrDet: return "mrr_det";
        case ClosedFormName::BinomDet: return "binom_det";
        case ClosedFormName::Id1: return "id1";
        case ClosedFormName::Id2: return "id2";
        case ClosedFormName::MSymm: return "m_symm";
    }
    throw std::logic_error("closed form name");
}

inline ClosedFormName closed_form_name(const std::string& s) {
    for (auto name : {ClosedFormName::TypeA, ClosedFormName::TypeB, ClosedFormName::Asm,
                      ClosedFormName::MrrDet, ClosedFormName::BinomDet, ClosedFormName::Id1,
                      ClosedFormName::Id2, ClosedFormName::MSymm})
        if (to_string(name) == s) return name;
    throw std::invalid_argument("closed_form: unknown name '" + s + "'");
}

namespace detail {

inline long long cf_int(const std::vector<Rational>& params, std::size_t idx,
                        const char* what) {
    if (idx >= params.size())
        throw std::invalid_argument(std::string("closed_form: missing parameter ") + what);
    if (!is_integer(params[idx]))
        throw std::invalid_argument(std::string("closed_form: parameter ") + what +
                                    " must be an integer");
    return to_long(params[idx]);
}

inline const Integer& cf_factorial(long long n, const char* what) {
    if (n < 0)
        throw std::domain_error(std::string("closed_form: factorial argument ") + what +
                                " is negative");
    return factorial(n);
}

// Per-factor value of the even-window product at (2/3, 1/3, 1/2, 27/4).
inline Rational id1_lhs(long long i) {
    Rational num = pochhammer(rat(2, 3), i) * pochhammer(rat(1, 6), i) *
                   pochhammer(rat(4, 3), i) * pochhammer(rat(5, 6), i);
    Rational den = pochhammer(rat(1, 2), 2 * i) * pochhammer(rat(3, 2), 2 * i);
    return num / den * qpow(rat(27, 4), 2 * i);
}

inline Rational id1_rhs(long long i) {
    return Rational(3 * i + 1) * Rational(cf_factorial(6 * i, "(6i)!")) *
           Rational(cf_factorial(2 * i, "(2i)!")) /
           (Rational(cf_factorial(4 * i + 1, "(4i+1)!")) * Rational(cf_factorial(4 * i, "(4i)!")));
}

// Per-factor value of the odd-window product in its shifted form; the
// denominator Pochhammers start below zero, which is exactly why the i = 0
// instance is expected to break.
inline Rational id2_lhs(long long i) {
    Rational num = pochhammer(rat(2, 3), i) * pochhammer(rat(1, 6), i) *
                   pochhammer(rat(1, 3), i) * pochhammer(rat(-1, 6), i);
    Rational den = pochhammer(rat(1, 2), 2 * i) * pochhammer(rat(-1, 2), 2 * i);
    return rat(2, 3) * num / den * qpow(rat(27, 4), 2 * i);
}

inline Rational id2_rhs(long long i) {
    return binom_general(Rational(6 * i - 2), 2 * i) /
           (2 * binom_general(Rational(4 * i - 1), 2 * i));
}

// Four-term binomial combination whose symmetry encodes the sliding identity.
inline Integer m_form(long long a, long long b) {
    auto B = [](long long p, long long q) { return binom(p + q, q); };
    return B(a + 2, b - 4) + 3 * B(a + 1, b - 2) + 3 * B(a, b) + B(a - 1, b + 2);
}

}  // namespace detail

inline Rational closed_form(ClosedFormName name, const std::vector<Rational>& params) {
    using detail::cf_int;
    switch (name) {
        case ClosedFormName::TypeA: {
            long long n = cf_int(params, 0, "n");
            if (n < 0) throw std::domain_error("closed_form: typea needs n >= 0");
            Rational acc = 1;
            for (long long i = 1; i <= n - 1; ++i) acc *= detail::id1_rhs(i);
            return acc;
        }
        case ClosedFormName::TypeB: {
            long long n = cf_int(params, 0, "n");
            if (n < 0) throw std::domain_error("closed_form: typeb needs n >= 0");
            Rational acc = 1;
            for (long long i = 1; i <= n; ++i)
                acc *= Rational(binom(6 * i - 2, 2 * i)) / (2 * Rational(binom(4 * i - 1, 2 * i)));
            return acc;
        }
        case ClosedFormName::Asm: {
            long long n = cf_int(params, 0, "n");
            if (n < 0) throw std::domain_error("closed_form: asm needs n >= 0");
            Rational acc = 1;
            for (long long k = 0; k < n; ++k)
                acc *= Rational(factorial(3 * k + 1)) / Rational(factorial(n + k));
            return acc;
        }
        case ClosedFormName::MrrDet: {
            long long n = cf_int(params, 0, "n");
            if (n < 0) throw std::domain_error("closed_form: mrr_det needs n >= 0");
            if (params.size() < 2)
                throw std::invalid_argument("closed_form: mrr_det needs (n, r)");
            Rational r = params[1];
            Rational acc = (n % 4 == 3) ? -1 : 1;
            acc *= qpow(2, static_cast<long long>(binom(n - 1, 2)));
            for (long long i = 1; i <= n - 1; ++i) {
                acc *= pochhammer(r + i + 1, (i + 1) / 2) *
                       pochhammer(-r - 3 * n + i + rat(3, 2), i / 2) /
                       pochhammer(Rational(i), i);
            }
            return acc;
        }
        case ClosedFormName::BinomDet: {
            // params: A, L_1, ..., L_n, giving det(C(A, L_i + j))_{1<=i,j<=n}.
            // Every factorial argument must land in the nonnegative integers
            // or the evaluation is rejected.
            long long A = cf_int(params, 0, "A");
            long long n = static_cast<long long>(params.size()) - 1;
            std::vector<long long> L;
            for (long long i = 1; i <= n; ++i) L.push_back(cf_int(params, static_cast<std::size_t>(i), "L_i"));
            Rational acc = 1;
            for (std::size_t i = 0; i < L.size(); ++i)
                for (std::size_t j = i + 1; j < L.size(); ++j) acc *= Rational(L[i] - L[j]);
            for (long long i = 1; i <= n; ++i) {
                acc *= Rational(detail::cf_factorial(A + i - 1, "(A+i-1)!"));
                acc /= Rational(detail::cf_factorial(L[static_cast<std::size_t>(i - 1)] + n, "(L_i+n)!"));
                acc /= Rational(detail::cf_factorial(A - L[static_cast<std::size_t>(i - 1)] - 1, "(A-L_i-1)!"));
            }
            return acc;
        }
        case ClosedFormName::Id1: {
            long long i = cf_int(params, 0, "i");
            if (i < 0) throw std::domain_error("closed_form: id1 needs i >= 0");
            return detail::id1_lhs(i) / detail::id1_rhs(i);
        }
        case ClosedFormName::Id2: {
            long long i = cf_int(params, 0, "i");
            if (i < 0) throw std::domain_error("closed_form: id2 needs i >= 0");
            return detail::id2_lhs(i) / detail::id2_rhs(i);
        }
        case ClosedFormName::MSymm: {
            long long a = cf_int(params, 0, "a");
            long long b = cf_int(params, 1, "b");
            if (a < 0 || b < 0) throw std::domain_error("closed_form: m_symm needs a, b >= 0");
            return Rational(detail::m_form(a, b)) / Rational(detail::m_form(b, a));
        }
    }
    throw std::logic_error("closed form dispatch");
}

}  // namespace hankel_lab

#endif
