#pragma once

#include <string>

#include <json.hpp>

#include "charta/fusion.hpp"

namespace charta {

// File format: {"rank": n, "labels": [...], "dual": [...], "fusion": N[i][j][k],
// "dims": [scalar literals]}. Index 0 is the unit. Labels are optional and
// default to "X0".."Xn-1". Shape errors throw parse errors; axiom violations
// are left to validate_fusion_ring.
FusionRing fusion_ring_from_json(const nlohmann::json& j);
nlohmann::ordered_json fusion_ring_to_json(const FusionRing& f);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::ordered_json& j);

} // namespace charta
