#pragma once

#include <optional>
#include <string>
#include <variant>

namespace starsearch {

// Search environment: m unbounded rays sharing an origin. Competitive ratios
// are evaluated only against targets at distance >= d_min (the normalization
// unit); closer targets would make every strategy unboundedly bad.
struct StarEnv {
    int m = 2;
    double d_min = 1.0;
};

// Throws std::invalid_argument unless m >= 2 and d_min > 0.
StarEnv make_env(int m, double d_min = 1.0);

struct Target {
    int ray = 0;
    double dist = 1.0;
};

// Validates 0 <= ray < env.m and dist >= env.d_min.
Target make_target(const StarEnv& env, int ray, double dist);

// The three prediction shapes: a k-bit answer string, a predicted ray, or a
// predicted (distance, ray) position.
struct AdviceBits {
    std::string bits;  // '0'/'1' characters, length k
};

struct DirectionalPrediction {
    int ray = 0;
};

struct PositionalPrediction {
    double dist = 1.0;
    int ray = 0;
};

using Prediction = std::variant<AdviceBits, DirectionalPrediction, PositionalPrediction>;

enum class ErrorKind { Positive, Negative, RayMismatch };

const char* to_string(ErrorKind k);

struct PredictionError {
    ErrorKind kind = ErrorKind::Positive;
    std::optional<double> eta;  // |d(t) - d(h)| / d(h); absent for RayMismatch
};

// Classifies a positional prediction against the true target. A same-ray tie
// (d(t) == d(h)) counts as Positive with eta = 0.
PredictionError classify_error(const PositionalPrediction& pred, const Target& t);

}  // namespace starsearch
