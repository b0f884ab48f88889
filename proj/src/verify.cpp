#include "starsearch/verify.hpp"

#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "starsearch/advice.hpp"
#include "starsearch/directional.hpp"
#include "starsearch/positional.hpp"
#include "starsearch/solver.hpp"
#include "starsearch/strategy.hpp"

namespace starsearch {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

void add(std::vector<CheckResult>& out, const std::string& name, bool pass,
         const std::string& detail) {
    out.push_back(CheckResult{name, pass, detail});
}

// All lie-position subsets of {0..k-1} with size <= tol.
void for_each_lie_pattern(int k, int tol, const std::function<void(const std::set<int>&)>& f) {
    std::set<int> cur;
    std::function<void(int, int)> rec = [&](int next, int left) {
        f(cur);
        if (left == 0) return;
        for (int i = next; i < k; ++i) {
            cur.insert(i);
            rec(i + 1, left - 1);
            cur.erase(i);
        }
    };
    rec(0, tol);
}

}  // namespace

std::vector<CheckResult> verify_advice(double ts) {
    std::vector<CheckResult> out;
    const StarEnv env = make_env(2, 1.0);

    // Exhaustive decoding: every branch, every lie pattern within tolerance.
    // A handful of (k, H) pairs give a query game that no questioner can win
    // (the floor(2^k / <k,H>) candidate count cannot split the Berlekamp
    // weight evenly); there decoding may report ambiguity, but must never
    // return a wrong branch. Everywhere else it must be perfect.
    {
        const std::set<std::pair<int, int>> losing{{4, 1}, {5, 1}, {6, 1}, {7, 2}, {8, 2}};
        long runs = 0, wrong = 0, stray_ambiguous = 0, expected_ambiguous = 0;
        for (int k = 1; k <= 8; ++k) {
            for (int H = 0; 2 * H <= k && H <= 2; ++H) {
                AdviceFamilyConfig cfg{9.0, k, H};
                int p = 0;
                try {
                    p = branch_count(cfg);
                } catch (const TooFewBranches&) {
                    continue;
                }
                for (int b = 0; b < p; ++b) {
                    for_each_lie_pattern(k, H, [&](const std::set<int>& lies) {
                        ++runs;
                        try {
                            if (run_advice_protocol(cfg, b, lies) != b) ++wrong;
                        } catch (const AmbiguousDecoding&) {
                            if (losing.count({k, H}))
                                ++expected_ambiguous;
                            else
                                ++stray_ambiguous;
                        }
                    });
                }
            }
        }
        add(out, "advice/exhaustive-lie-decoding", wrong == 0 && stray_ambiguous == 0,
            fmt((double)runs) + " runs, " + fmt((double)wrong) + " wrong, " +
                fmt((double)stray_ambiguous) + " ambiguous outside the losing games (" +
                fmt((double)expected_ambiguous) + " inside)");
    }

    // Family consistency matches the closed form; branches stay r-robust.
    {
        double worst = 0.0, worst_rob = 0.0;
        for (double r : {9.0, 10.0, 15.0}) {
            for (int k = 1; k <= 4; ++k) {
                AdviceFamilyConfig cfg{r, k, 0};
                const ParallelStrategy fam = build_advice_family(cfg);
                const double meas = parallel_consistency(fam, env).value;
                worst = std::max(worst, std::fabs(meas - consistency_bound(cfg)));
                for (const Strategy& b : fam.branches)
                    worst_rob = std::max(worst_rob, competitive_ratio(b, env).value - r);
            }
        }
        add(out, "advice/consistency-equals-bound", worst <= 1e-6 * ts,
            "max |measured - bound| = " + fmt(worst));
        add(out, "advice/branch-robustness", worst_rob <= 1e-9 * ts,
            "max excess over r = " + fmt(worst_rob));
    }

    // Responsibility structure of the error-free families.
    {
        bool ok = true;
        for (int k = 1; k <= 3; ++k) {
            const ParallelStrategy fam = build_advice_family(AdviceFamilyConfig{9.0, k, 0});
            ok = ok && responsibility_map(fam, 30).single_bijection;
        }
        add(out, "advice/responsibility-bijection", ok, "families k=1..3, horizon 30");
    }

    // Bound monotonicity: decreasing in k, increasing in H.
    {
        bool ok = true;
        for (int k = 1; k < 8; ++k)
            ok = ok && consistency_bound({9.0, k + 1, 0}) < consistency_bound({9.0, k, 0});
        ok = ok && consistency_bound({9.0, 6, 1}) > consistency_bound({9.0, 6, 0});
        ok = ok && consistency_bound({9.0, 8, 2}) > consistency_bound({9.0, 8, 1});
        add(out, "advice/bound-monotonicity", ok, "k up, H up");
    }
    return out;
}

std::vector<CheckResult> verify_directional(double ts) {
    std::vector<CheckResult> out;
    double worst_c = 0.0, worst_r = 0.0;
    for (int m = 2; m <= 5; ++m) {
        const StarEnv env = make_env(m, 1.0);
        for (double b : {double(m) / (m - 1), 1.3, 2.0}) {
            for (double delta : {1.0, 2.0, 5.0}) {
                const BiasedConfig cfg{m, b, delta, 0};
                const TradeoffBounds cf = biased_bounds(cfg);
                const Strategy x = build_biased(cfg);
                const double cons = competitive_ratio(x, env, std::vector<int>{0}).value;
                const double rob = competitive_ratio(x, env).value;
                worst_c = std::max(worst_c, std::fabs(cons - cf.consistency));
                worst_r = std::max(worst_r, std::fabs(rob - cf.robustness));
            }
        }
    }
    add(out, "directional/closed-forms-match-evaluator", worst_c <= 1e-6 * ts && worst_r <= 1e-6 * ts,
        "max dev consistency = " + fmt(worst_c) + ", robustness = " + fmt(worst_r));

    {
        bool ok = true;
        const StarEnv env = make_env(7, 1.0);
        double prev_ratio = -1.0, prev_rob = -1.0;
        for (double delta : {1.0, 2.0, 4.0, 8.0}) {
            const WeakDirectionalRatios wr =
                weak_directional_ratios(WeakDirectionalConfig{7, 1, delta, 0}, env);
            if (prev_ratio > 0.0) ok = ok && wr.ratio_under_tolerance < prev_ratio;
            if (prev_rob > 0.0) ok = ok && wr.robustness > prev_rob;
            ok = ok && wr.ratio_under_tolerance <= wr.robustness;
            ok = ok && wr.ratio_under_tolerance >= search_constants(3).r_star - 1e-6 * ts;
            prev_ratio = wr.ratio_under_tolerance;
            prev_rob = wr.robustness;
        }
        add(out, "directional/weak-monotone-tradeoff", ok, "m=7 H=1, delta in {1,2,4,8}");
    }
    return out;
}

std::vector<CheckResult> verify_positional(double ts) {
    std::vector<CheckResult> out;
    double worst_cons = 0.0, worst_rob = 0.0;
    for (int m = 2; m <= 4; ++m) {
        const StarEnv env = make_env(m, 1.0);
        const SearchConstants sc = search_constants(m);
        for (double r : {sc.r_star, sc.r_star + 2.0, 2.0 * sc.r_star}) {
            const double br = solve_base(m, r);
            const double far = std::pow(br, std::ceil(std::log(1e9) / std::log(br))) * 1.37;
            const PositionalConfig cfg{m, r, PositionalPrediction{far, 1}, 0.0};
            const Strategy x = build_positional(cfg);
            worst_cons = std::max(
                worst_cons, std::fabs(ratio_at_prediction(x, cfg.h) - (1.0 + 2.0 / (br - 1.0))));
            worst_rob = std::max(worst_rob, competitive_ratio(x, env).value - r);
        }
    }
    add(out, "positional/pareto-tightness", worst_cons <= 1e-6 * ts,
        "max |measured - (1 + 2/(b_r-1))| = " + fmt(worst_cons));
    add(out, "positional/robustness-cap", worst_rob <= 1e-9 * ts,
        "max excess over r = " + fmt(worst_rob));

    {
        const StarEnv env = make_env(2, 1.0);
        const PositionalConfig cfg{2, 9.0, PositionalPrediction{10.0, 0}, 0.5};
        const Strategy x = build_weak_positional(cfg);
        bool ok = true;
        double prev = 0.0;
        for (double eta : {0.0, 0.1, 0.3, 0.5}) {
            const double v = ratio_under_error(x, cfg.h, ErrorKind::Positive, eta, env);
            ok = ok && v >= prev - 1e-12;
            prev = v;
        }
        ok = ok && ratio_under_error(x, cfg.h, ErrorKind::RayMismatch, 0.0, env) <= 9.0 + 1e-6 * ts;
        add(out, "positional/error-monotone-and-mismatch-cap", ok, "H=0.5, d_h=10");
    }
    return out;
}

std::vector<CheckResult> verify_all(double ts) {
    std::vector<CheckResult> out = verify_advice(ts);
    for (auto& c : verify_directional(ts)) out.push_back(std::move(c));
    for (auto& c : verify_positional(ts)) out.push_back(std::move(c));
    return out;
}

}  // namespace starsearch
