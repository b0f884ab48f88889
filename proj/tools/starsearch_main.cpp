#include <cmath>
#include <functional>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "starsearch/advice.hpp"
#include "starsearch/directional.hpp"
#include "starsearch/json_io.hpp"
#include "starsearch/positional.hpp"
#include "starsearch/solver.hpp"
#include "starsearch/strategy.hpp"
#include "starsearch/verify.hpp"

namespace {

using namespace starsearch;

std::string g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Output sink: stdout by default, or a file given via --out.
struct Sink {
    std::string path;
    std::ostringstream buf;
    ~Sink() = default;
    void flush_to_destination() {
        if (path.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(path, std::ios::binary);
            f << buf.str();
        }
    }
};

int run_eval(const std::string& file, double d_min, bool as_json) {
    const Strategy x = strategy_from_file(file);
    const StarEnv env = make_env(x.m(), d_min);
    const RatioReport rep = competitive_ratio(x, env);
    if (as_json) {
        std::cout << to_json(rep).dump(2) << "\n";
    } else if (rep.unbounded) {
        std::cout << "unbounded (ray " << rep.witness.ray << " explored only finitely)\n";
    } else {
        std::cout << "value " << g12(rep.value) << "\n"
                  << "witness ray=" << rep.witness.ray << " dist=" << g12(rep.witness.dist)
                  << "\n"
                  << "converged " << (rep.converged ? "true" : "false") << "\n"
                  << "horizon " << rep.horizon_used << "\n";
    }
    if (rep.unbounded) return 3;
    return rep.converged ? 0 : 2;
}

int run_simulate(const std::string& file, int ray, double dist, double d_min) {
    const Strategy x = strategy_from_file(file);
    const StarEnv env = make_env(x.m(), d_min);
    const Target t = make_target(env, ray, dist);
    const auto cost = first_hit_cost(x, t);
    if (!cost) {
        std::cout << "not-found\n";
        return 3;
    }
    std::cout << "cost " << g12(*cost) << "\nratio " << g12(*cost / t.dist) << "\n";
    return 0;
}

int run_tradeoff_advice(double r, int k, int tol, bool do_verify, Sink& sink) {
    const StarEnv env = make_env(2, 1.0);
    sink.buf << "k,H,p,consistency_bound,measured_consistency,max_branch_robustness\n";
    const AdviceFamilyConfig cfg{r, k, tol};
    const int p = branch_count(cfg);
    const ParallelStrategy fam = build_advice_family(cfg);
    const double bound = consistency_bound(cfg);
    const double measured = parallel_consistency(fam, env).value;
    double rob = 0.0;
    for (const Strategy& b : fam.branches)
        rob = std::max(rob, competitive_ratio(b, env).value);
    sink.buf << k << "," << tol << "," << p << "," << g12(bound) << "," << g12(measured) << ","
             << g12(rob) << "\n";
    sink.flush_to_destination();
    if (do_verify) {
        long runs = 0, bad = 0;
        std::vector<int> positions(k);
        // all lie patterns of size <= tol
        std::function<void(int, int, std::set<int>&)> rec = [&](int next, int left,
                                                                std::set<int>& cur) {
            for (int b = 0; b < p; ++b) {
                ++runs;
                try {
                    if (run_advice_protocol(cfg, b, cur) != b) ++bad;
                } catch (const AmbiguousDecoding&) {
                    ++bad;
                }
            }
            if (left == 0) return;
            for (int i = next; i < k; ++i) {
                cur.insert(i);
                rec(i + 1, left - 1, cur);
                cur.erase(i);
            }
        };
        std::set<int> cur;
        rec(0, tol, cur);
        std::cerr << "verify: " << runs << " decode runs, " << bad << " failures\n";
        if (bad != 0) return 4;
    }
    return 0;
}

int run_tradeoff_directional(int m, double b, const std::vector<double>& deltas, int tol,
                             Sink& sink) {
    const StarEnv env = make_env(m, 1.0);
    if (tol == 0) {
        sink.buf << "delta,measured_consistency,measured_robustness,thm4_1_consistency,"
                    "thm4_1_robustness\n";
        for (double d : deltas) {
            const BiasedConfig cfg{m, b, d, 0};
            const Strategy x = build_biased(cfg);
            const std::vector<int> predicted{0};
            const double cons = competitive_ratio(x, env, predicted).value;
            const double rob = competitive_ratio(x, env).value;
            const TradeoffBounds cf = biased_bounds(cfg);
            sink.buf << g12(d) << "," << g12(cons) << "," << g12(rob) << ","
                     << g12(cf.consistency) << "," << g12(cf.robustness) << "\n";
        }
    } else {
        sink.buf << "delta,ratio_under_tolerance,measured_robustness,thm4_3_ratio_floor\n";
        const double floor = search_constants(2 * tol + 1).r_star;
        for (double d : deltas) {
            const WeakDirectionalRatios wr =
                weak_directional_ratios(WeakDirectionalConfig{m, tol, d, 0}, env);
            sink.buf << g12(d) << "," << g12(wr.ratio_under_tolerance) << ","
                     << g12(wr.robustness) << "," << g12(floor) << "\n";
        }
    }
    sink.flush_to_destination();
    return 0;
}

int run_tradeoff_positional(int m, double r, double tol, double d_hint, int ray_hint,
                            int eta_steps, Sink& sink) {
    const StarEnv env = make_env(m, 1.0);
    const PositionalPrediction h{d_hint, ray_hint};
    const PositionalConfig cfg{m, r, h, tol};
    const Strategy x = (tol > 0.0) ? build_weak_positional(cfg) : build_positional(cfg);
    const double br = solve_base(m, r);

    std::cerr << "consistency_at_hint " << g12(ratio_at_prediction(x, h)) << "\n";
    std::cerr << "robustness " << g12(competitive_ratio(x, env).value) << "\n";
    const double eta_top = tol > 0.0 ? tol : 1.0;
    std::cerr << "positive_ratio(eta<=" << g12(eta_top) << ") "
              << g12(ratio_under_error(x, h, ErrorKind::Positive, eta_top, env)) << "\n";
    try {
        std::cerr << "negative_ratio(eta<=" << g12(eta_top) << ") "
                  << g12(ratio_under_error(x, h, ErrorKind::Negative, eta_top, env)) << "\n";
    } catch (const EmptyErrorClass&) {
        std::cerr << "negative_ratio(eta<=" << g12(eta_top) << ") empty-class\n";
    }
    std::cerr << "mismatch_ratio "
              << g12(ratio_under_error(x, h, ErrorKind::RayMismatch, 0.0, env)) << "\n";

    sink.buf << "eta,positive_ratio,negative_ratio,mismatch_ratio,thm5_1_consistency,"
                "cor5_3_bound\n";
    const double eta_hi = tol > 0.0 ? tol : 1.0;
    const double mismatch = ratio_under_error(x, h, ErrorKind::RayMismatch, 0.0, env);
    for (int i = 0; i <= eta_steps; ++i) {
        const double eta = eta_hi * i / eta_steps;
        const double pos = ratio_under_error(x, h, ErrorKind::Positive, eta, env);
        double neg = std::nan("");
        try {
            neg = ratio_under_error(x, h, ErrorKind::Negative, eta, env);
        } catch (const EmptyErrorClass&) {
        }
        const double bound = std::min(1.0 + 2.0 * (1.0 + eta) / (br - 1.0), r);
        sink.buf << g12(eta) << "," << g12(pos) << "," << g12(neg) << "," << g12(mismatch) << ","
                 << g12(1.0 + 2.0 / (br - 1.0)) << "," << g12(bound) << "\n";
    }
    sink.flush_to_destination();
    return 0;
}

int run_verify(const std::string& suite, double tol_scale) {
    std::vector<CheckResult> results;
    if (suite == "advice")
        results = verify_advice(tol_scale);
    else if (suite == "directional")
        results = verify_directional(tol_scale);
    else if (suite == "positional")
        results = verify_positional(tol_scale);
    else
        results = verify_all(tol_scale);
    const CheckResult* first_fail = nullptr;
    for (const CheckResult& c : results) {
        std::cout << (c.pass ? "[ok]   " : "[FAIL] ") << c.name << " — " << c.detail << "\n";
        if (!c.pass && !first_fail) first_fail = &c;
    }
    if (first_fail) {
        std::cout << "first failing invariant: " << first_fail->name << "\n";
        return 4;
    }
    std::cout << "all invariants hold\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Competitive search on the line and the m-ray star with predictions"};
    app.require_subcommand(1);
    int seed = 0;
    app.add_option("--seed", seed, "seed for randomized sweeps (default 0)");

    // solve-base
    auto* sb = app.add_subcommand("solve-base", "largest base b with b^m/(b-1) = (r-1)/2");
    int sb_m = 2;
    double sb_r = 9.0;
    sb->add_option("--m", sb_m, "ray count")->required();
    sb->add_option("--r", sb_r, "robustness target")->required();

    // eval
    auto* ev = app.add_subcommand("eval", "competitive ratio of a strategy file");
    std::string ev_file;
    double ev_dmin = 1.0;
    bool ev_json = false;
    ev->add_option("--strategy", ev_file, "strategy JSON file")->required();
    ev->add_option("--d-min", ev_dmin, "minimum target distance (default 1)");
    ev->add_flag("--json", ev_json, "emit the report as JSON");

    // simulate
    auto* sim = app.add_subcommand("simulate", "walk a strategy against one target");
    std::string sim_file;
    int sim_ray = 0;
    double sim_dist = 1.0, sim_dmin = 1.0;
    sim->add_option("--strategy", sim_file)->required();
    sim->add_option("--ray", sim_ray)->required();
    sim->add_option("--dist", sim_dist)->required();
    sim->add_option("--d-min", sim_dmin);

    // tradeoff
    auto* tr = app.add_subcommand("tradeoff", "consistency/robustness tradeoff tables");
    tr->require_subcommand(1);
    auto* ta = tr->add_subcommand("advice", "k-bit untrusted advice family");
    double ta_r = 9.0;
    int ta_k = 1, ta_tol = 0;
    bool ta_verify = false;
    std::string ta_out;
    ta->add_option("--r", ta_r, "robustness target (>= 9)")->required();
    ta->add_option("--k", ta_k, "advice bits")->required();
    ta->add_option("--tolerance", ta_tol, "lie budget H (default 0)");
    ta->add_flag("--verify", ta_verify, "run the exhaustive lie-pattern suite");
    ta->add_option("--out", ta_out, "write CSV here instead of stdout");

    auto* td = tr->add_subcommand("directional", "predicted-ray model");
    int td_m = 2, td_tol = 0;
    double td_b = 0.0;
    std::vector<double> td_deltas;
    std::string td_out;
    td->add_option("--m", td_m, "ray count")->required();
    td->add_option("--b", td_b, "base (default m/(m-1))");
    td->add_option("--delta-list", td_deltas, "bias values (default 1 2 5 20)");
    td->add_option("--tolerance", td_tol, "trusted arc half-width H (default 0)");
    td->add_option("--out", td_out, "write CSV here instead of stdout");

    auto* tp = tr->add_subcommand("positional", "predicted-position model");
    int tp_m = 2, tp_ray = 0, tp_steps = 10;
    double tp_r = 9.0, tp_tol = 0.0, tp_d = 1.0;
    std::string tp_out;
    tp->add_option("--m", tp_m, "ray count")->required();
    tp->add_option("--r", tp_r, "robustness target")->required();
    tp->add_option("--tolerance", tp_tol, "relative error budget H (default 0)");
    tp->add_option("--d-hint", tp_d, "predicted distance")->required();
    tp->add_option("--ray-hint", tp_ray, "predicted ray")->required();
    tp->add_option("--eta-steps", tp_steps, "eta grid resolution (default 10)");
    tp->add_option("--out", tp_out, "write CSV here instead of stdout");

    // verify
    auto* vf = app.add_subcommand("verify", "run the module property suites");
    std::string vf_suite = "all";
    double vf_scale = 1.0;
    vf->add_option("suite", vf_suite, "advice | directional | positional | all")
        ->check(CLI::IsMember({"advice", "directional", "positional", "all"}));
    vf->add_option("--tolerance-scale", vf_scale, "multiply all tolerances (debug aid)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sb) {
            std::printf("%.12f\n", starsearch::solve_base(sb_m, sb_r));
            return 0;
        }
        if (*ev) return run_eval(ev_file, ev_dmin, ev_json);
        if (*sim) return run_simulate(sim_file, sim_ray, sim_dist, sim_dmin);
        if (*ta) {
            Sink sink;
            sink.path = ta_out;
            return run_tradeoff_advice(ta_r, ta_k, ta_tol, ta_verify, sink);
        }
        if (*td) {
            Sink sink;
            sink.path = td_out;
            if (td_b <= 0.0) td_b = double(td_m) / double(td_m - 1);
            if (td_deltas.empty()) td_deltas = {1.0, 2.0, 5.0, 20.0};
            return run_tradeoff_directional(td_m, td_b, td_deltas, td_tol, sink);
        }
        if (*tp) {
            Sink sink;
            sink.path = tp_out;
            return run_tradeoff_positional(tp_m, tp_r, tp_tol, tp_d, tp_ray, tp_steps, sink);
        }
        if (*vf) return run_verify(vf_suite, vf_scale);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
