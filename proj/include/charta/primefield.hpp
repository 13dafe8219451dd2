#pragma once

#include <cstdint>
#include <string>

#include "charta/error.hpp"

namespace charta {

// Element of F_p for a (small) prime p. The modulus travels with the value so
// generic linear algebra can stay field-agnostic.
struct Fp {
    int64_t p = 2;
    int64_t v = 0;

    Fp() = default;
    Fp(int64_t prime, int64_t value) : p(prime) {
        v = value % p;
        if (v < 0) v += p;
    }

    Fp inverse() const {
        if (v == 0) throw computation_error("division by zero in F_" + std::to_string(p));
        // extended Euclid
        int64_t a = v, b = p, x0 = 1, x1 = 0;
        while (b != 0) {
            int64_t q = a / b;
            int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(p, x0);
    }

    friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.p, a.v + b.v); }
    friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.p, a.v - b.v); }
    friend Fp operator*(const Fp& a, const Fp& b) { return Fp(a.p, a.v * b.v); }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return Fp(p, -v); }
    Fp& operator+=(const Fp& b) { *this = *this + b; return *this; }
    Fp& operator-=(const Fp& b) { *this = *this - b; return *this; }
    Fp& operator*=(const Fp& b) { *this = *this * b; return *this; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.p == b.p && a.v == b.v; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline Fp ring_zero(const Fp& like) { return Fp(like.p, 0); }
inline Fp ring_one(const Fp& like) { return Fp(like.p, 1); }

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace charta
