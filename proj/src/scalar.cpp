#include "charta/scalar.hpp"

#include <sstream>

#include "charta/error.hpp"

namespace charta {

std::string Scalar::str() const {
    if (exact()) return cyc().str();
    std::ostringstream os;
    auto z = embed();
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

Scalar Scalar::from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        return Scalar(CycNumber::from_rational(parse_rational(j.get<std::string>())));
    }
    if (j.is_number_integer()) {
        return Scalar(CycNumber::from_int(j.get<long>()));
    }
    if (j.is_number()) {
        return Scalar(std::complex<double>(j.get<double>(), 0.0));
    }
    if (j.is_array()) {
        if (j.size() != 2 || !j[0].is_number() || !j[1].is_number())
            throw parse_error("complex literal must be [re, im] with numeric entries");
        return Scalar(std::complex<double>(j[0].get<double>(), j[1].get<double>()));
    }
    if (j.is_object()) {
        if (!j.contains("conductor") || !j.contains("coeffs"))
            throw parse_error("cyclotomic literal must have \"conductor\" and \"coeffs\"");
        long n = j.at("conductor").get<long>();
        if (n < 1) throw parse_error("cyclotomic conductor must be >= 1");
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coeffs")) {
            if (c.is_string()) coeffs.push_back(parse_rational(c.get<std::string>()));
            else if (c.is_number_integer()) coeffs.push_back(Rational(c.get<long>()));
            else throw parse_error("cyclotomic coeffs must be integers or \"p/q\" strings");
        }
        long deg = std::max<long>(1, euler_phi((int)n));
        if ((long)coeffs.size() > deg)
            throw parse_error("cyclotomic literal has more coeffs than the degree of Q(zeta_N)");
        coeffs.resize(deg, Rational(0));
        return Scalar(CycNumber((int)n, std::move(coeffs)));
    }
    throw parse_error("unrecognized scalar literal: " + j.dump());
}

nlohmann::ordered_json Scalar::to_json() const {
    if (exact()) {
        if (cyc().is_rational()) return format_rational(cyc().rational_part());
        nlohmann::ordered_json o;
        o["conductor"] = cyc().conductor();
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const auto& c : cyc().coeffs()) cs.push_back(format_rational(c));
        o["coeffs"] = cs;
        return o;
    }
    auto z = embed();
    if (z.imag() == 0.0) return z.real();
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

} // namespace charta
