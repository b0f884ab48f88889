#include "starsearch/star.hpp"

#include <cmath>
#include <stdexcept>

namespace starsearch {

StarEnv make_env(int m, double d_min) {
    if (m < 2) throw std::invalid_argument("StarEnv: ray count m must be >= 2");
    if (!(d_min > 0.0) || !std::isfinite(d_min))
        throw std::invalid_argument("StarEnv: d_min must be positive and finite");
    return StarEnv{m, d_min};
}

Target make_target(const StarEnv& env, int ray, double dist) {
    if (ray < 0 || ray >= env.m) throw std::invalid_argument("Target: ray index out of range");
    if (!(dist >= env.d_min) || !std::isfinite(dist))
        throw std::invalid_argument("Target: dist must be finite and >= d_min");
    return Target{ray, dist};
}

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::Positive: return "positive";
        case ErrorKind::Negative: return "negative";
        case ErrorKind::RayMismatch: return "ray-mismatch";
    }
    return "?";
}

PredictionError classify_error(const PositionalPrediction& pred, const Target& t) {
    if (pred.ray != t.ray) return PredictionError{ErrorKind::RayMismatch, std::nullopt};
    const double eta = std::fabs(t.dist - pred.dist) / pred.dist;
    if (t.dist >= pred.dist) return PredictionError{ErrorKind::Positive, eta};
    return PredictionError{ErrorKind::Negative, eta};
}

}  // namespace starsearch
