#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "charta/rational.hpp"

namespace charta {

// Element of the cyclotomic field Q(zeta_N), stored in the power basis
// {1, zeta, ..., zeta^{phi(N)-1}} reduced modulo the N-th cyclotomic
// polynomial Phi_N. Coefficient vectors always have length phi(N).
// Mixed-conductor arithmetic lifts both operands to the lcm conductor.
class CycNumber {
public:
    explicit CycNumber(int conductor = 1);
    CycNumber(int conductor, std::vector<Rational> coeffs);

    static CycNumber from_rational(const Rational& r, int conductor = 1);
    static CycNumber from_int(long v, int conductor = 1) { return from_rational(Rational(v), conductor); }
    static CycNumber root_of_unity(int conductor, long power);

    int conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const { return c_[0]; }

    // Requires conductor() | m.
    CycNumber lifted(int m) const;

    std::complex<double> embed() const;
    CycNumber conjugate() const;
    CycNumber inverse() const;

    CycNumber operator-() const;
    friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator/(const CycNumber& a, const CycNumber& b);
    friend bool operator==(const CycNumber& a, const CycNumber& b);
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    CycNumber& operator+=(const CycNumber& b) { *this = *this + b; return *this; }
    CycNumber& operator-=(const CycNumber& b) { *this = *this - b; return *this; }
    CycNumber& operator*=(const CycNumber& b) { *this = *this * b; return *this; }

    std::string str() const;

private:
    struct Ctx;
    static std::shared_ptr<const Ctx> context(int n);

    int n_;
    std::vector<Rational> c_;
    std::shared_ptr<const Ctx> ctx_;
};

int euler_phi(int n);

// Coefficients of Phi_n, constant term first, monic of degree phi(n).
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

inline bool is_zero(const CycNumber& a) { return a.is_zero(); }
inline CycNumber ring_zero(const CycNumber& like) { return CycNumber(like.conductor()); }
inline CycNumber ring_one(const CycNumber& like) { return CycNumber::from_rational(Rational(1), like.conductor()); }

} // namespace charta
