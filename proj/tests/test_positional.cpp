#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "starsearch/positional.hpp"
#include "starsearch/solver.hpp"

using namespace starsearch;

namespace {

// A prediction far enough out that the construction's ratio at it has
// converged to its limit value.
PositionalPrediction far_prediction(double br, int ray) {
    const double d = std::pow(br, std::ceil(std::log(1e9) / std::log(br))) * 1.37;
    return PositionalPrediction{d, ray};
}

}  // namespace

TEST_CASE("ladder lands exactly on the prediction") {
    // d_h = 8 on the line with r = 9: the unscaled ladder already hits 8
    const PositionalConfig cfg{2, 9.0, PositionalPrediction{8.0, 0}, 0.0};
    const Strategy x = build_positional(cfg);
    CHECK(x.tail_len(3) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(x.tail_ray(3) == 0);
    // cost at the prediction: 2 (1 + 2 + 4) + 8 over 8
    CHECK(ratio_at_prediction(x, cfg.h) == doctest::Approx(2.75).epsilon(1e-12));

    // d_h = 5 forces a scale-down by lambda = 8/5
    const PositionalConfig cfg5{2, 9.0, PositionalPrediction{5.0, 0}, 0.0};
    const Strategy x5 = build_positional(cfg5);
    CHECK(x5.tail()->scale == doctest::Approx(0.625).epsilon(1e-12));
    CHECK(x5.tail_len(3) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(x5.tail_ray(3) == 0);
    CHECK(ratio_at_prediction(x5, cfg5.h) == doctest::Approx(2.75).epsilon(1e-12));
}

TEST_CASE("ratio at the prediction stays under the tradeoff value and attains it far out") {
    for (int m : {2, 3, 5}) {
        const StarEnv env = make_env(m, 1.0);
        const auto sc = search_constants(m);
        for (double r : {sc.r_star, sc.r_star + 2.0, 2.0 * sc.r_star}) {
            const double br = solve_base(m, r);
            const double limit = 1.0 + 2.0 / (br - 1.0);
            for (double dh : {1.0, 2.3, 17.0, 400.0}) {
                const PositionalConfig cfg{m, r, PositionalPrediction{dh, m - 1}, 0.0};
                const Strategy x = build_positional(cfg);
                CHECK(ratio_at_prediction(x, cfg.h) <= limit + 1e-12);
                CHECK(competitive_ratio(x, env).value == doctest::Approx(r).epsilon(1e-9));
            }
            const PositionalConfig far{m, r, far_prediction(br, 0), 0.0};
            CHECK(ratio_at_prediction(build_positional(far), far.h) ==
                  doctest::Approx(limit).epsilon(1e-7));
        }
    }
}

TEST_CASE("weak variant is the inflated construction") {
    const PositionalConfig cfg{2, 9.0, PositionalPrediction{10.0, 1}, 0.5};
    const Strategy weak = build_weak_positional(cfg);
    const PositionalConfig inflated{2, 9.0, PositionalPrediction{15.0, 1}, 0.0};
    const Strategy direct = build_positional(inflated);
    CHECK(weak.tail()->base == doctest::Approx(direct.tail()->base));
    CHECK(weak.tail()->scale == doctest::Approx(direct.tail()->scale).epsilon(1e-12));
    CHECK(weak.tail()->ray_cycle == direct.tail()->ray_cycle);
    CHECK_THROWS_AS(build_weak_positional({2, 9.0, PositionalPrediction{10.0, 1}, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("error classes: endpoints, emptiness, monotonicity") {
    const StarEnv env = make_env(2, 1.0);
    const PositionalConfig cfg{2, 9.0, PositionalPrediction{10.0, 0}, 0.0};
    const Strategy x = build_positional(cfg);

    // zero positive error is the prediction itself
    CHECK(ratio_under_error(x, cfg.h, ErrorKind::Positive, 0.0, env) ==
          doctest::Approx(ratio_at_prediction(x, cfg.h)).epsilon(1e-12));

    // empty negative classes
    CHECK_THROWS_AS(ratio_under_error(x, cfg.h, ErrorKind::Negative, 0.0, env), EmptyErrorClass);
    const PositionalPrediction at_dmin{1.0, 0};
    CHECK_THROWS_AS(
        ratio_under_error(build_positional({2, 9.0, at_dmin, 0.0}), at_dmin,
                          ErrorKind::Negative, 0.5, env),
        EmptyErrorClass);

    // monotone in the error budget, for both signed kinds
    for (ErrorKind kind : {ErrorKind::Positive, ErrorKind::Negative}) {
        double prev = 0.0;
        for (double eta : {0.01, 0.05, 0.1, 0.3, 0.6, 0.9}) {
            const double v = ratio_under_error(x, cfg.h, kind, eta, env);
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("tolerant strategy meets the positive-side bound") {
    const StarEnv env = make_env(2, 1.0);
    const double br = 2.0;
    for (double H : {0.1, 0.5, 1.0}) {
        for (double dh : {1.7, 10.0, 1000.0}) {
            const PositionalConfig cfg{2, 9.0, PositionalPrediction{dh, 0}, H};
            const Strategy x = build_weak_positional(cfg);
            const double bound = std::min(1.0 + 2.0 * (1.0 + H) / (br - 1.0), 9.0);
            CHECK(ratio_under_error(x, cfg.h, ErrorKind::Positive, H, env) <= bound + 1e-9);
            CHECK(competitive_ratio(x, env).value <= 9.0 + 1e-9);
            CHECK(ratio_under_error(x, cfg.h, ErrorKind::RayMismatch, 0.0, env) <= 9.0 + 1e-9);
        }
    }
}

TEST_CASE("negative side pays the 1/(1-H) correction, capped by robustness") {
    const StarEnv env = make_env(2, 1.0);
    const double br = 2.0;
    // frozen hand trace: d_h = 1024, H = 0.5 -> scale 0.75 ladder reaching
    // 1536 at iteration 11; the whole band [512, 1024) is found there
    const PositionalConfig cfg{2, 9.0, PositionalPrediction{1024.0, 0}, 0.5};
    const Strategy x = build_weak_positional(cfg);
    CHECK(ratio_under_error(x, cfg.h, ErrorKind::Negative, 0.5, env) ==
          doctest::Approx(6.9970703125).epsilon(1e-12));

    for (double H : {0.1, 0.5, 0.9}) {
        for (double dh : {10.0, 1000.0}) {
            const PositionalConfig c{2, 9.0, PositionalPrediction{dh, 0}, H};
            const Strategy w = build_weak_positional(c);
            const double corrected =
                std::min(1.0 + 2.0 * (1.0 + H) / ((1.0 - H) * (br - 1.0)), 9.0);
            CHECK(ratio_under_error(w, c.h, ErrorKind::Negative, H, env) <= corrected + 1e-9);
        }
    }
    // H = 1 clamps at d_min and is only capped by the robustness
    const PositionalConfig c1{2, 9.0, PositionalPrediction{1000.0, 0}, 1.0};
    CHECK(ratio_under_error(build_weak_positional(c1), c1.h, ErrorKind::Negative, 1.0, env) <=
          9.0 + 1e-9);
}

TEST_CASE("mismatched rays pay the full robustness and nothing more") {
    const StarEnv env = make_env(3, 1.0);
    const PositionalConfig cfg{3, 14.5, PositionalPrediction{50.0, 1}, 0.0};
    const Strategy x = build_positional(cfg);
    const double v = ratio_under_error(x, cfg.h, ErrorKind::RayMismatch, 0.0, env);
    CHECK(v <= 14.5 + 1e-9);
    CHECK(v == doctest::Approx(14.5).epsilon(1e-9));
}

TEST_CASE("error-class suprema bracket a dense target sweep") {
    const StarEnv env = make_env(2, 1.0);
    const PositionalConfig cfg{2, 9.0, PositionalPrediction{37.0, 0}, 0.6};
    const Strategy x = build_weak_positional(cfg);
    auto sweep = [&](double lo, double hi) {
        double best = 0.0;
        for (int i = 0; i <= 4000; ++i) {
            const double d = lo + (hi - lo) * i / 4000.0;
            if (d < env.d_min) continue;
            best = std::max(best, *first_hit_cost(x, Target{0, d}) / d);
        }
        return best;
    };
    // positive class [d_h, d_h (1+H)], negative class [d_h (1-H), d_h)
    const double pos = ratio_under_error(x, cfg.h, ErrorKind::Positive, 0.6, env);
    const double pos_sweep = sweep(37.0, 37.0 * 1.6);
    CHECK(pos >= pos_sweep - 1e-9);
    CHECK(pos <= pos_sweep * 1.01);
    const double neg = ratio_under_error(x, cfg.h, ErrorKind::Negative, 0.6, env);
    const double neg_sweep = sweep(37.0 * 0.4, 37.0 * (1.0 - 1e-9));
    CHECK(neg >= neg_sweep - 1e-9);
    CHECK(neg <= neg_sweep * 1.01);
}

TEST_CASE("ladder robustness agrees with the walk oracle") {
    const StarEnv env = make_env(3, 1.0);
    const PositionalConfig cfg{3, 20.0, PositionalPrediction{37.0, 2}, 0.0};
    const Strategy x = build_positional(cfg);
    const double exact = competitive_ratio(x, env).value;
    const double brute = brute_force_ratio(x, env, 1.0005, 1e12);
    CHECK(brute <= exact + 1e-9);
    CHECK(exact - brute <= 1e-3 * exact);
}

TEST_CASE("small-error floor: the construction is tight against the lower bound") {
    const StarEnv env = make_env(2, 1.0);
    const double br = 2.0;
    const PositionalConfig cfg{2, 9.0, far_prediction(br, 0), 0.5};
    const Strategy x = build_weak_positional(cfg);
    bool attained = false;
    for (double q : {0.01, 0.05, 0.1}) {
        const double lhs = std::max(ratio_under_error(x, cfg.h, ErrorKind::Positive, q, env),
                                    ratio_under_error(x, cfg.h, ErrorKind::Negative, q, env));
        const double floor = std::min(1.0 + 2.0 * (1.0 + q) / (br - 1.0), 9.0);
        if (lhs >= floor - 1e-6) attained = true;
    }
    CHECK(attained);
}
