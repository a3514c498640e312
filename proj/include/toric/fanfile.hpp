#pragma once

#include "toric/certify.hpp"
#include "toric/fan.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace toric {

// The on-disk fan description (UTF-8 JSON): dim, rays, optional max_cones,
// optional name. Unknown fields are rejected.
struct FanFile {
    int dim = 0;
    std::vector<IntVec> rays;
    std::optional<std::vector<std::vector<int>>> max_cones;
    std::optional<std::string> name;

    Fan to_fan() const { return build_fan(dim, rays, max_cones); }
};

FanFile parse_fan_file(const std::string& text);
FanFile fan_file_from_fan(const Fan& fan, const std::string& name = "");
std::string serialize_fan_file(const FanFile& f);

// Rationals serialize as exact "p/q" strings; floats with 12 significant
// digits; keys are sorted.
nlohmann::json report_to_json(const CertificationReport& rep);
std::string report_to_text(const CertificationReport& rep);

std::string rational_string(const Rat& r);
std::string rational_vector_string(const RatVec& v);

}  // namespace toric
