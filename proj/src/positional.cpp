#include "starsearch/positional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "starsearch/solver.hpp"

namespace starsearch {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_config(const PositionalConfig& cfg) {
    if (cfg.m < 2) throw std::invalid_argument("positional: m must be >= 2");
    if (cfg.h.ray < 0 || cfg.h.ray >= cfg.m)
        throw std::invalid_argument("positional: predicted ray out of range");
    if (!(cfg.h.dist > 0.0) || !std::isfinite(cfg.h.dist))
        throw std::invalid_argument("positional: predicted distance must be positive");
    if (cfg.tolerance < 0.0) throw std::invalid_argument("positional: tolerance must be >= 0");
}

// Visit lengths of x on `ray` that fall inside [lo, hi).
std::vector<double> visits_in_range(const Strategy& x, int ray, double lo, double hi) {
    std::vector<double> out;
    for (const Segment& s : x.segments())
        if (s.ray == ray && s.len >= lo && s.len < hi) out.push_back(s.len);
    if (x.tail()) {
        const GeometricTail& t = *x.tail();
        const long L = (long)t.ray_cycle.size();
        for (long pos = 0; pos < L; ++pos) {
            if (t.ray_cycle[(size_t)pos] != ray) continue;
            const double l0 = t.scale * t.mult[(size_t)pos];
            long u = pos;
            if (l0 < lo) {
                const double theta = (std::log(lo) - std::log(l0)) / std::log(t.base);
                long c = (long)std::floor((theta - double(pos)) / double(L)) - 1;
                if (c > 0) u = pos + c * L;
            }
            for (; u < pos + 4096 * L; u += L) {
                const double len = l0 * std::pow(t.base, double(u));
                if (len >= hi) break;
                if (len >= lo) out.push_back(len);
            }
        }
    }
    return out;
}

double direct_ratio_at(const Strategy& x, int ray, double d) {
    auto c = first_hit_cost(x, Target{ray, d});
    return c ? *c / d : kInf;
}

// Limit ratio of targets just beyond (ray, len).
double beyond_ratio_at(const Strategy& x, int ray, double len) {
    auto p = prefix_before_reach(x, ray, len, true);
    return p ? 1.0 + 2.0 * *p / len : kInf;
}

}  // namespace

Strategy build_positional(const PositionalConfig& cfg) {
    check_config(cfg);
    const double b = solve_base(cfg.m, cfg.r);  // validates r >= r*_m
    const double dh = cfg.h.dist;
    long jh = std::max(0L, (long)std::ceil(std::log(dh) / std::log(b) - 1e-12));
    while (std::pow(b, double(jh)) < dh * (1.0 - 1e-15)) ++jh;
    while (jh >= 1 && std::pow(b, double(jh - 1)) >= dh) --jh;

    GeometricTail tail;
    tail.base = b;
    tail.scale = dh / std::pow(b, double(jh));  // 1/lambda
    tail.ray_cycle.resize((size_t)cfg.m);
    for (long t = 0; t < cfg.m; ++t)
        tail.ray_cycle[(size_t)t] =
            (int)(((cfg.h.ray + (t - jh)) % cfg.m + cfg.m) % cfg.m);
    tail.mult.assign((size_t)cfg.m, 1.0);
    return Strategy(cfg.m, {}, tail);
}

Strategy build_weak_positional(const PositionalConfig& cfg) {
    check_config(cfg);
    if (!(cfg.tolerance > 0.0))
        throw std::invalid_argument("build_weak_positional: tolerance must be > 0");
    PositionalConfig inflated = cfg;
    inflated.h.dist = cfg.h.dist * (1.0 + cfg.tolerance);
    inflated.tolerance = 0.0;
    return build_positional(inflated);
}

double ratio_under_error(const Strategy& x, const PositionalPrediction& h, ErrorKind kind,
                         double eta_max, const StarEnv& env) {
    if (x.m() != env.m) throw std::invalid_argument("ratio_under_error: m mismatch");
    if (eta_max < 0.0) throw std::invalid_argument("ratio_under_error: eta_max must be >= 0");

    if (kind == ErrorKind::RayMismatch) {
        std::vector<int> others;
        for (int r = 0; r < env.m; ++r)
            if (r != h.ray) others.push_back(r);
        return competitive_ratio(x, env, others).value;
    }

    double lo = 0.0, hi = 0.0;
    if (kind == ErrorKind::Positive) {
        lo = std::max(env.d_min, h.dist);
        hi = h.dist * (1.0 + eta_max);
        if (lo > hi) throw EmptyErrorClass("ratio_under_error: positive class below d_min");
    } else {
        lo = std::max(env.d_min, h.dist * (1.0 - eta_max));
        hi = h.dist;
        if (lo >= hi) throw EmptyErrorClass("ratio_under_error: empty negative error class");
    }

    double best = direct_ratio_at(x, h.ray, lo);
    // Interior suprema sit just beyond the visit lengths inside the interval;
    // for the positive class the closed right end adds nothing because the
    // ratio decreases along each covered piece.
    for (double v : visits_in_range(x, h.ray, lo, hi))
        best = std::max(best, beyond_ratio_at(x, h.ray, v));
    return best;
}

double ratio_at_prediction(const Strategy& x, const PositionalPrediction& h) {
    auto c = first_hit_cost(x, Target{h.ray, h.dist});
    return c ? *c / h.dist : kInf;
}

}  // namespace starsearch
