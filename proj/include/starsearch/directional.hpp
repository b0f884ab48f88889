#pragma once

#include <utility>

#include "starsearch/strategy.hpp"

namespace starsearch {

// Cyclic m-ray strategy biased towards the predicted ray: iteration i
// explores the cycle starting at the predicted ray, with length b^i boosted
// by delta on the predicted ray.
struct BiasedConfig {
    int m = 2;
    double b = 2.0;       // base > 1
    double delta = 1.0;   // bias >= 1 (1 = plain geometric)
    int predicted_ray = 0;
};

Strategy build_biased(const BiasedConfig& cfg);

struct TradeoffBounds {
    double consistency = 1.0;
    double robustness = 1.0;
};

// Exact closed forms for the biased strategy. The consistency (worst target
// on the predicted ray) is 1 + 2T + (2/delta) T G with T = b^m/(b^m - 1) and
// G = (b^m - b)/(b - 1). The robustness supremum sits on the ray visited
// right after the boosted one: 1 + 2 b^m/(b-1) + 2 (delta-1) b^(2m-1)/(b^m-1)
// (for m = 2 this is the familiar biased line-search expression).
TradeoffBounds biased_bounds(const BiasedConfig& cfg);

// Bias achieving consistency slack c_tilde (the target ratio is O(1) + 2
// c_tilde) at base m/(m-1): delta = e (rho*_m - m) / ((e-1) c_tilde), clamped
// to >= 1. Returns {delta, robustness of the resulting strategy}. Throws
// std::domain_error for c_tilde <= 0.
std::pair<double, double> delta_for_consistency(int m, double c_tilde);

// Weak prediction: the target is trusted to lie within `tolerance` rays of
// the predicted one (the trusted arc R_H has 2H+1 rays). Rounds explore the
// trusted arc with graded boosted lengths and the complement with one flat
// length per round, base b = (2H+1)/(2H).
struct WeakDirectionalConfig {
    int m = 5;
    int tolerance = 1;   // H >= 1, 2H+1 < m
    double delta = 1.0;  // >= 1
    int predicted_ray = 0;
};

Strategy build_weak_directional(const WeakDirectionalConfig& cfg);

// Rays of the trusted arc {h-H .. h+H} mod m.
std::vector<int> trusted_arc(const WeakDirectionalConfig& cfg);

struct WeakDirectionalRatios {
    double ratio_under_tolerance = 1.0;  // sup over targets on the trusted arc
    double robustness = 1.0;             // sup over all targets
};

WeakDirectionalRatios weak_directional_ratios(const WeakDirectionalConfig& cfg,
                                              const StarEnv& env);

}  // namespace starsearch
