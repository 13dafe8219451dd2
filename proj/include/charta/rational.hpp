#pragma once

#include <gmpxx.h>

#include <string>

#include "charta/error.hpp"

namespace charta {

// Arbitrary-precision rational scalar. mpq_class keeps values canonical
// (reduced, positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q". Throws a parse error on anything else.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    for (char ch : s) {
        if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw parse_error("bad rational literal '" + s + "'");
    }
    try {
        Rational r(s, 10);
        if (r.get_den() == 0) throw parse_error("zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal '" + s + "'");
    }
}

inline std::string format_rational(const Rational& r) {
    return r.get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline bool is_zero(const Rational& r) { return r == 0; }
inline Rational ring_zero(const Rational&) { return Rational(0); }
inline Rational ring_one(const Rational&) { return Rational(1); }

} // namespace charta
