#pragma once

#include <complex>
#include <variant>

#include <json.hpp>

#include "charta/cyclotomic.hpp"

namespace charta {

// A scalar as it appears in input data: exact (element of some Q(zeta_N),
// rationals included at conductor 1) or a complex float. Arithmetic stays
// exact as long as both operands are exact.
class Scalar {
public:
    Scalar() : v_(CycNumber(1)) {}
    Scalar(CycNumber z) : v_(std::move(z)) {}
    Scalar(std::complex<double> z) : v_(z) {}
    static Scalar from_int(long n) { return Scalar(CycNumber::from_int(n)); }

    bool exact() const { return std::holds_alternative<CycNumber>(v_); }
    const CycNumber& cyc() const { return std::get<CycNumber>(v_); }

    std::complex<double> embed() const {
        return exact() ? cyc().embed() : std::get<std::complex<double>>(v_);
    }

    bool exactly_zero() const { return exact() && cyc().is_zero(); }

    Scalar conjugate() const {
        if (exact()) return Scalar(cyc().conjugate());
        return Scalar(std::conj(embed()));
    }

    Scalar inverse() const {
        if (exact()) return Scalar(cyc().inverse());
        return Scalar(1.0 / embed());
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return Scalar(a.cyc() + b.cyc());
        return Scalar(a.embed() + b.embed());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return Scalar(a.cyc() - b.cyc());
        return Scalar(a.embed() - b.embed());
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return Scalar(a.cyc() * b.cyc());
        return Scalar(a.embed() * b.embed());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return Scalar(a.cyc() / b.cyc());
        return Scalar(a.embed() / b.embed());
    }

    // Exact equality when both exact; otherwise embedded comparison within tol.
    static bool eq(const Scalar& a, const Scalar& b, double tol) {
        if (a.exact() && b.exact()) return a.cyc() == b.cyc();
        return std::abs(a.embed() - b.embed()) <= tol;
    }

    std::string str() const;

    // Literal forms: "p/q" string, {"conductor": N, "coeffs": [...]} object,
    // plain number (float), or [re, im] pair (complex float).
    static Scalar from_json(const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;

private:
    std::variant<CycNumber, std::complex<double>> v_;
};

} // namespace charta
