#include "charta/json_io.hpp"

#include <fstream>

#include "charta/error.hpp"

namespace charta {

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw parse_error("invalid JSON in file: " + path);
    return j;
}

void save_json_file(const std::string& path, const nlohmann::ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open file for writing: " + path);
    out << j.dump(2) << "\n";
}

FusionRing fusion_ring_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("fusion ring must be a JSON object");
    for (const char* key : {"rank", "dual", "fusion", "dims"})
        if (!j.contains(key)) throw parse_error(std::string("fusion ring missing \"") + key + "\"");

    FusionRing f;
    if (!j.at("rank").is_number_integer()) throw parse_error("\"rank\" must be an integer");
    f.rank = j.at("rank").get<int>();
    if (f.rank < 1) throw parse_error("\"rank\" must be >= 1");

    if (j.contains("labels")) {
        for (const auto& l : j.at("labels")) f.labels.push_back(l.get<std::string>());
        if ((int)f.labels.size() != f.rank) throw parse_error("\"labels\" length must equal rank");
    } else {
        for (int i = 0; i < f.rank; ++i) f.labels.push_back("X" + std::to_string(i));
    }

    for (const auto& d : j.at("dual")) {
        if (!d.is_number_integer()) throw parse_error("\"dual\" entries must be integers");
        f.dual.push_back(d.get<int>());
    }
    if ((int)f.dual.size() != f.rank) throw parse_error("\"dual\" length must equal rank");

    const auto& fj = j.at("fusion");
    if (!fj.is_array() || (int)fj.size() != f.rank) throw parse_error("\"fusion\" must be a rank^3 array");
    f.fusion.reserve((size_t)f.rank * f.rank * f.rank);
    for (const auto& plane : fj) {
        if (!plane.is_array() || (int)plane.size() != f.rank) throw parse_error("\"fusion\" must be a rank^3 array");
        for (const auto& row : plane) {
            if (!row.is_array() || (int)row.size() != f.rank) throw parse_error("\"fusion\" must be a rank^3 array");
            for (const auto& c : row) {
                if (!c.is_number_integer() || c.get<long>() < 0)
                    throw parse_error("fusion coefficients must be non-negative integers");
                f.fusion.push_back(c.get<long>());
            }
        }
    }

    for (const auto& d : j.at("dims")) f.dims.push_back(Scalar::from_json(d));
    if ((int)f.dims.size() != f.rank) throw parse_error("\"dims\" length must equal rank");
    return f;
}

nlohmann::ordered_json fusion_ring_to_json(const FusionRing& f) {
    nlohmann::ordered_json j;
    j["rank"] = f.rank;
    j["labels"] = f.labels;
    j["dual"] = f.dual;
    nlohmann::ordered_json tensor = nlohmann::ordered_json::array();
    for (int i = 0; i < f.rank; ++i) {
        nlohmann::ordered_json plane = nlohmann::ordered_json::array();
        for (int jx = 0; jx < f.rank; ++jx) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int k = 0; k < f.rank; ++k) row.push_back(f.n(i, jx, k));
            plane.push_back(row);
        }
        tensor.push_back(plane);
    }
    j["fusion"] = tensor;
    nlohmann::ordered_json dims = nlohmann::ordered_json::array();
    for (const auto& d : f.dims) dims.push_back(d.to_json());
    j["dims"] = dims;
    return j;
}

} // namespace charta
