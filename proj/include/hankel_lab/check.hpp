#ifndef HANKEL_LAB_CHECK_HPP
#define HANKEL_LAB_CHECK_HPP

// Result carrier shared by all verify_* entry points. A check either passes,
// or fails with the first offending lhs/rhs pair rendered exactly (rationals
// as p/q, never floats). `note` localizes the failure (indices, parameters).

#include <string>

namespace hankel_lab {

struct CheckResult {
    bool pass = true;
    std::string lhs;   // rendered left value of the first mismatch, or summary
    std::string rhs;   // rendered right value of the first mismatch, or summary
    std::string note;  // where the mismatch happened

    static CheckResult ok(std::string summary = "equal") {
        CheckResult r;
        r.lhs = summary;
        r.rhs = summary;
        return r;
    }
    static CheckResult fail(std::string lhs, std::string rhs, std::string note) {
        CheckResult r;
        r.pass = false;
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        r.note = std::move(note);
        return r;
    }

    // Keeps the first failure; later successes never mask it.
    CheckResult& merge(const CheckResult& other) {
        if (pass && !other.pass) *this = other;
        return *this;
    }
};

}  // namespace hankel_lab

#endif
