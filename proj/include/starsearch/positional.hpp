#pragma once

#include <stdexcept>

#include "starsearch/strategy.hpp"

namespace starsearch {

// m-ray search with a predicted target position h = (dist, ray) and an
// r-robustness requirement (r >= r*_m). `tolerance` is the relative distance
// error the searcher is willing to absorb.
struct PositionalConfig {
    int m = 2;
    double r = 9.0;
    PositionalPrediction h{1.0, 0};
    double tolerance = 0.0;  // H >= 0, any positive real
};

// Scaled geometric strategy with base b_r whose iteration j_h lands on the
// predicted ray at exactly the predicted distance (j_h is the least index
// with b_r^j_h >= d_h; the whole ladder is scaled down by
// lambda = b_r^j_h / d_h and the cycle rotated so the slot falls on u_h).
// Robustness is exactly r; the ratio at the prediction tends to
// 1 + 2/(b_r - 1) from below as d_h grows.
Strategy build_positional(const PositionalConfig& cfg);

// The tolerance-inflated variant: build_positional for the prediction moved
// out to d_h * (1 + tolerance) on the same ray. Requires tolerance > 0.
Strategy build_weak_positional(const PositionalConfig& cfg);

struct EmptyErrorClass : std::domain_error {
    using std::domain_error::domain_error;
};

// Supremum of cost/dist over targets consistent with the error class:
//   Positive:    same ray, dist in [d_h, d_h (1 + eta_max)]
//                (the zero-error tie at d_h counts as positive);
//   Negative:    same ray, dist in [max(d_min, d_h (1 - eta_max)), d_h);
//   RayMismatch: every target on the other rays (eta_max ignored).
// Computed from turn-point limits inside the interval plus its endpoints.
// Throws EmptyErrorClass when the interval is empty.
double ratio_under_error(const Strategy& x, const PositionalPrediction& h, ErrorKind kind,
                         double eta_max, const StarEnv& env);

// cost(h) / d_h for the strategy built from h: the consistency at the
// prediction itself.
double ratio_at_prediction(const Strategy& x, const PositionalPrediction& h);

}  // namespace starsearch
