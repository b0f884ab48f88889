#include "starsearch/directional.hpp"

#include <cmath>
#include <stdexcept>

#include "starsearch/solver.hpp"

namespace starsearch {

namespace {

void check_biased(const BiasedConfig& cfg) {
    if (cfg.m < 2) throw std::invalid_argument("biased: m must be >= 2");
    if (!(cfg.b > 1.0)) throw std::invalid_argument("biased: base must be > 1");
    if (!(cfg.delta >= 1.0)) throw std::invalid_argument("biased: delta must be >= 1");
    if (cfg.predicted_ray < 0 || cfg.predicted_ray >= cfg.m)
        throw std::invalid_argument("biased: predicted ray out of range");
}

void check_weak(const WeakDirectionalConfig& cfg) {
    if (cfg.m < 2) throw std::invalid_argument("weak directional: m must be >= 2");
    if (cfg.tolerance < 1)
        throw std::domain_error("weak directional: tolerance must be >= 1 (use the biased model for H = 0)");
    if (2 * cfg.tolerance + 1 >= cfg.m)
        throw std::domain_error("weak directional: need 2H + 1 < m");
    if (!(cfg.delta >= 1.0)) throw std::invalid_argument("weak directional: delta must be >= 1");
    if (cfg.predicted_ray < 0 || cfg.predicted_ray >= cfg.m)
        throw std::invalid_argument("weak directional: predicted ray out of range");
}

}  // namespace

Strategy build_biased(const BiasedConfig& cfg) {
    check_biased(cfg);
    GeometricTail tail;
    tail.base = cfg.b;
    tail.scale = 1.0;
    tail.ray_cycle.resize((size_t)cfg.m);
    tail.mult.assign((size_t)cfg.m, 1.0);
    for (int j = 0; j < cfg.m; ++j) tail.ray_cycle[(size_t)j] = (cfg.predicted_ray + j) % cfg.m;
    tail.mult[0] = cfg.delta;
    return Strategy(cfg.m, {}, tail);
}

TradeoffBounds biased_bounds(const BiasedConfig& cfg) {
    check_biased(cfg);
    const double bm = std::pow(cfg.b, cfg.m);
    const double T = bm / (bm - 1.0);
    const double G = (bm - cfg.b) / (cfg.b - 1.0);
    TradeoffBounds out;
    out.consistency = 1.0 + 2.0 * T + (2.0 / cfg.delta) * T * G;
    out.robustness =
        1.0 + 2.0 * bm / (cfg.b - 1.0) +
        2.0 * (cfg.delta - 1.0) * std::pow(cfg.b, 2 * cfg.m - 1) / (bm - 1.0);
    return out;
}

std::pair<double, double> delta_for_consistency(int m, double c_tilde) {
    if (!(c_tilde > 0.0)) throw std::domain_error("delta_for_consistency: c_tilde must be > 0");
    const SearchConstants c = search_constants(m);
    const double e = std::exp(1.0);
    double delta = e * (c.rho_star - double(m)) / ((e - 1.0) * c_tilde);
    if (delta < 1.0) delta = 1.0;  // unbiased once the slack is generous
    const TradeoffBounds b = biased_bounds(BiasedConfig{m, c.b_opt, delta, 0});
    return {delta, b.robustness};
}

std::vector<int> trusted_arc(const WeakDirectionalConfig& cfg) {
    check_weak(cfg);
    std::vector<int> rays;
    for (int d = -cfg.tolerance; d <= cfg.tolerance; ++d)
        rays.push_back(((cfg.predicted_ray + d) % cfg.m + cfg.m) % cfg.m);
    return rays;
}

Strategy build_weak_directional(const WeakDirectionalConfig& cfg) {
    check_weak(cfg);
    const int H = cfg.tolerance;
    const int arc = 2 * H + 1;
    const double b = double(arc) / double(2 * H);
    // Round i, position j: trusted rays get delta * b^(arc*i + j); the
    // complement gets the flat round length b^(arc*i + 2H). Encoded with a
    // per-iteration base B = b^(arc/m) and multipliers mult[j] * B^j matching
    // those lengths. The rounds start well below the unit distance so that
    // targets near d_min are met with a fully developed prefix.
    const int deep_rounds = 12;
    const double B = std::pow(b, double(arc) / double(cfg.m));
    GeometricTail tail;
    tail.base = B;
    tail.scale = std::pow(b, -double(arc) * deep_rounds);
    tail.ray_cycle.resize((size_t)cfg.m);
    tail.mult.resize((size_t)cfg.m);
    for (int j = 0; j < cfg.m; ++j) {
        tail.ray_cycle[(size_t)j] =
            ((cfg.predicted_ray - H + j) % cfg.m + cfg.m) % cfg.m;
        const double want = (j < arc) ? cfg.delta * std::pow(b, j) : std::pow(b, 2 * H);
        tail.mult[(size_t)j] = want / std::pow(B, j);
    }
    return Strategy(cfg.m, {}, tail);
}

WeakDirectionalRatios weak_directional_ratios(const WeakDirectionalConfig& cfg,
                                              const StarEnv& env) {
    const Strategy x = build_weak_directional(cfg);
    const std::vector<int> arc = trusted_arc(cfg);
    WeakDirectionalRatios out;
    out.ratio_under_tolerance = competitive_ratio(x, env, arc).value;
    out.robustness = competitive_ratio(x, env).value;
    return out;
}

}  // namespace starsearch
