#pragma once

#include <string>

#include <json.hpp>

#include "starsearch/star.hpp"
#include "starsearch/strategy.hpp"

namespace starsearch {

// Wire schemas:
//   strategy   {"m": int, "segments": [{"len": float, "ray": int}],
//               "tail": {"base": float, "scale": float,
//                        "ray_cycle": [int], "mult": [float]} | null}
//   target     {"ray": int, "dist": float}
//   prediction {"kind": "advice", "bits": "0110"}
//              {"kind": "directional", "ray": int}
//              {"kind": "positional", "dist": float, "ray": int}
// Schema violations throw std::invalid_argument naming the offending field.

nlohmann::json to_json(const Strategy& s);
Strategy strategy_from_json(const nlohmann::json& j);
Strategy strategy_from_file(const std::string& path);

nlohmann::json to_json(const Target& t);
Target target_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Prediction& p);
Prediction prediction_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatioReport& r);

}  // namespace starsearch
