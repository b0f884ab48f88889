#include "starsearch/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace starsearch {

using nlohmann::json;

namespace {

double require_number(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number())
        throw std::invalid_argument(std::string("schema: missing or non-numeric field '") +
                                    field + "'");
    return j[field].get<double>();
}

int require_int(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw std::invalid_argument(std::string("schema: missing or non-integer field '") +
                                    field + "'");
    return j[field].get<int>();
}

}  // namespace

json to_json(const Strategy& s) {
    json j;
    j["m"] = s.m();
    j["segments"] = json::array();
    for (const Segment& seg : s.segments())
        j["segments"].push_back(json{{"len", seg.len}, {"ray", seg.ray}});
    if (s.tail()) {
        const GeometricTail& t = *s.tail();
        j["tail"] = json{{"base", t.base},
                         {"scale", t.scale},
                         {"ray_cycle", t.ray_cycle},
                         {"mult", t.mult}};
    } else {
        j["tail"] = nullptr;
    }
    return j;
}

Strategy strategy_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("schema: strategy must be an object");
    const int m = require_int(j, "m");
    if (!j.contains("segments") || !j["segments"].is_array())
        throw std::invalid_argument("schema: missing array field 'segments'");
    std::vector<Segment> segs;
    for (const json& e : j["segments"])
        segs.push_back(Segment{require_number(e, "len"), require_int(e, "ray")});
    std::optional<GeometricTail> tail;
    if (j.contains("tail") && !j["tail"].is_null()) {
        const json& t = j["tail"];
        GeometricTail gt;
        gt.base = require_number(t, "base");
        gt.scale = require_number(t, "scale");
        if (!t.contains("ray_cycle") || !t["ray_cycle"].is_array())
            throw std::invalid_argument("schema: missing array field 'tail.ray_cycle'");
        if (!t.contains("mult") || !t["mult"].is_array())
            throw std::invalid_argument("schema: missing array field 'tail.mult'");
        for (const json& e : t["ray_cycle"]) {
            if (!e.is_number_integer())
                throw std::invalid_argument("schema: 'tail.ray_cycle' entries must be integers");
            gt.ray_cycle.push_back(e.get<int>());
        }
        for (const json& e : t["mult"]) {
            if (!e.is_number())
                throw std::invalid_argument("schema: 'tail.mult' entries must be numbers");
            gt.mult.push_back(e.get<double>());
        }
        tail = std::move(gt);
    }
    return Strategy(m, std::move(segs), std::move(tail));
}

Strategy strategy_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open strategy file: " + path);
    json j;
    in >> j;  // parse errors surface as json exceptions with byte positions
    return strategy_from_json(j);
}

json to_json(const Target& t) { return json{{"ray", t.ray}, {"dist", t.dist}}; }

Target target_from_json(const json& j) {
    return Target{require_int(j, "ray"), require_number(j, "dist")};
}

json to_json(const Prediction& p) {
    json j;
    if (const auto* a = std::get_if<AdviceBits>(&p)) {
        j["kind"] = "advice";
        j["bits"] = a->bits;
    } else if (const auto* d = std::get_if<DirectionalPrediction>(&p)) {
        j["kind"] = "directional";
        j["ray"] = d->ray;
    } else {
        const auto& q = std::get<PositionalPrediction>(p);
        j["kind"] = "positional";
        j["dist"] = q.dist;
        j["ray"] = q.ray;
    }
    return j;
}

Prediction prediction_from_json(const json& j) {
    if (!j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("schema: prediction needs a string field 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "advice") {
        if (!j.contains("bits") || !j["bits"].is_string())
            throw std::invalid_argument("schema: advice prediction needs string field 'bits'");
        const std::string bits = j["bits"].get<std::string>();
        for (char c : bits)
            if (c != '0' && c != '1')
                throw std::invalid_argument("schema: 'bits' must contain only 0/1");
        return AdviceBits{bits};
    }
    if (kind == "directional") return DirectionalPrediction{require_int(j, "ray")};
    if (kind == "positional")
        return PositionalPrediction{require_number(j, "dist"), require_int(j, "ray")};
    throw std::invalid_argument("schema: unknown prediction kind '" + kind + "'");
}

json to_json(const RatioReport& r) {
    json j;
    if (std::isinf(r.value))
        j["value"] = "inf";
    else
        j["value"] = r.value;
    j["witness"] = to_json(r.witness);
    j["converged"] = r.converged;
    j["horizon_used"] = r.horizon_used;
    j["unbounded"] = r.unbounded;
    return j;
}

}  // namespace starsearch
