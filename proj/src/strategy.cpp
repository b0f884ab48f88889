#include "starsearch/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace starsearch {

namespace {

// Relative slack for comparing segment lengths. Values this close are treated
// as equal so that mathematically identical lengths produced by different
// floating-point routes never count as "strictly beyond" one another.
constexpr double kRelEps = 1e-9;

bool len_gt(double a, double b) { return a > b * (1.0 + kRelEps); }
bool len_ge(double a, double b) { return a >= b * (1.0 - kRelEps); }

constexpr double kInf = std::numeric_limits<double>::infinity();

// Cached per-tail quantities for closed-form prefix sums.
struct TailMath {
    double B = 2.0;
    double logB = 0.0;
    double scale = 1.0;
    long L = 1;
    const std::vector<int>* cycle = nullptr;
    const std::vector<double>* mult = nullptr;
    double Msum = 0.0;                // sum mult[q] * B^q over one cycle
    std::vector<double> mprefix;      // mprefix[t] = sum_{q < t} mult[q] * B^q
    double BLm1 = 1.0;                // B^L - 1
    double geomC = 0.0;               // Msum / (B^L - 1)

    explicit TailMath(const GeometricTail& t) {
        B = t.base;
        logB = std::log(B);
        scale = t.scale;
        L = (long)t.ray_cycle.size();
        cycle = &t.ray_cycle;
        mult = &t.mult;
        mprefix.assign((size_t)L + 1, 0.0);
        double p = 1.0;
        for (long q = 0; q < L; ++q) {
            mprefix[(size_t)q + 1] = mprefix[(size_t)q] + (*mult)[(size_t)q] * p;
            p *= B;
        }
        Msum = mprefix[(size_t)L];
        BLm1 = std::expm1(double(L) * logB);
        geomC = Msum / BLm1;
    }

    double len(long t) const {
        return scale * (*mult)[(size_t)(t % L)] * std::pow(B, double(t));
    }
    int ray(long t) const { return (*cycle)[(size_t)(t % L)]; }

    // Sum of tail lengths over iterations < t.
    double prefix(long t) const {
        const long a = t / L, rem = t % L;
        const double BaL = std::pow(B, double(a) * double(L));
        return scale * (geomC * (BaL - 1.0) + BaL * mprefix[(size_t)rem]);
    }

    // Least t in the residue class `pos` (mod L) with len(t) >= x.
    long first_in_class(long pos, double x) const {
        const double l0 = scale * (*mult)[(size_t)pos];
        long t = pos;
        if (!len_ge(len(t), x)) {
            const double theta = (std::log(x) - std::log(l0)) / logB;
            const long c = (long)std::floor((theta - double(pos)) / double(L)) - 1;
            if (c > 0) t = pos + c * L;
            while (!len_ge(len(t), x)) t += L;
            while (t - L >= pos && len_ge(len(t - L), x)) t -= L;
        }
        return t;
    }

    // Least t >= 0 with ray(t) == r and len(t) beyond x (strictly if `strict`,
    // else >=). Empty if r is not in the cycle.
    std::optional<long> first_reach(int r, double x, bool strict) const {
        std::optional<long> best;
        for (long pos = 0; pos < L; ++pos) {
            if ((*cycle)[(size_t)pos] != r) continue;
            const double l0 = scale * (*mult)[(size_t)pos];
            // log-estimate of the first qualifying cycle count, then adjust
            const double theta = (std::log(x) - std::log(l0)) / logB;
            long c = (long)std::floor((theta - double(pos)) / double(L)) - 1;
            if (c < 0) c = 0;
            long t = pos + c * L;
            auto ok = [&](long u) {
                const double l = len(u);
                return strict ? len_gt(l, x) : len_ge(l, x);
            };
            while (!ok(t)) t += L;
            while (t - L >= pos && ok(t - L)) t -= L;
            if (!best || t < *best) best = t;
        }
        return best;
    }
};

int thread_cap() {
    if (const char* s = std::getenv("STARSEARCH_THREADS")) {
        const long v = std::strtol(s, nullptr, 10);
        if (v >= 1) return (int)std::min<long>(v, 256);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

}  // namespace

Strategy::Strategy(int m, std::vector<Segment> segments, std::optional<GeometricTail> tail)
    : m_(m), segments_(std::move(segments)), tail_(std::move(tail)) {
    validate();
    for (const Segment& s : segments_) explicit_total_ += s.len;
}

void Strategy::validate() const {
    if (m_ < 2) throw std::invalid_argument("Strategy: m must be >= 2");
    std::vector<double> high((size_t)m_, 0.0);
    for (const Segment& s : segments_) {
        if (!(s.len > 0.0) || !std::isfinite(s.len))
            throw std::invalid_argument("Strategy: segment lengths must be positive and finite");
        if (s.ray < 0 || s.ray >= m_)
            throw std::invalid_argument("Strategy: segment ray out of range");
        if (high[(size_t)s.ray] > 0.0 && !len_gt(s.len, high[(size_t)s.ray]))
            throw std::invalid_argument(
                "Strategy: revisit does not exceed the previous maximum on its ray");
        high[(size_t)s.ray] = s.len;
    }
    if (!tail_) return;
    const GeometricTail& t = *tail_;
    if (!(t.base > 1.0) || !std::isfinite(t.base))
        throw std::invalid_argument("Strategy: tail base must be > 1");
    if (!(t.scale > 0.0) || !std::isfinite(t.scale))
        throw std::invalid_argument("Strategy: tail scale must be positive");
    if (t.ray_cycle.empty()) throw std::invalid_argument("Strategy: tail ray_cycle is empty");
    if (t.mult.size() != t.ray_cycle.size())
        throw std::invalid_argument("Strategy: tail mult size must match ray_cycle");
    for (int r : t.ray_cycle)
        if (r < 0 || r >= m_) throw std::invalid_argument("Strategy: tail ray out of range");
    for (double mu : t.mult)
        if (!(mu > 0.0) || !std::isfinite(mu))
            throw std::invalid_argument("Strategy: tail multipliers must be positive");

    const long L = (long)t.ray_cycle.size();
    // Per-ray monotonicity inside the tail: each occurrence must strictly
    // exceed the previous occurrence of the same ray (wrapping one cycle up).
    for (long pos = 0; pos < L; ++pos) {
        for (long d = 1; d <= L; ++d) {
            const long nxt = (pos + d) % L;
            if (t.ray_cycle[(size_t)nxt] != t.ray_cycle[(size_t)pos]) continue;
            const double growth = std::pow(t.base, double(d));
            if (!len_gt(t.mult[(size_t)nxt] * growth, t.mult[(size_t)pos]))
                throw std::invalid_argument(
                    "Strategy: tail revisit does not exceed the previous visit on its ray");
            break;
        }
    }
    // The first implied tail visit on each ray must go beyond the last
    // explicit segment there.
    TailMath tm(t);
    for (long pos = 0; pos < L; ++pos) {
        bool first = true;
        for (long q = 0; q < pos; ++q)
            if (t.ray_cycle[(size_t)q] == t.ray_cycle[(size_t)pos]) first = false;
        if (!first) continue;
        const double h = high[(size_t)t.ray_cycle[(size_t)pos]];
        if (h > 0.0 && !len_gt(tm.len(pos), h))
            throw std::invalid_argument(
                "Strategy: first tail visit does not exceed the explicit prefix on its ray");
    }
}

bool Strategy::covers_ray_unboundedly(int ray) const {
    if (!tail_) return false;
    for (int r : tail_->ray_cycle)
        if (r == ray) return true;
    return false;
}

double Strategy::tail_len(long t) const { return TailMath(*tail_).len(t); }

int Strategy::tail_ray(long t) const {
    const auto& c = tail_->ray_cycle;
    return c[(size_t)(t % (long)c.size())];
}

std::optional<Segment> Strategy::iteration(long i) const {
    if (i < (long)segments_.size()) return segments_[(size_t)i];
    if (!tail_) return std::nullopt;
    const long t = i - (long)segments_.size();
    return Segment{tail_len(t), tail_ray(t)};
}

Strategy Strategy::scaled(double lambda) const {
    if (!(lambda > 0.0)) throw std::invalid_argument("Strategy::scaled: lambda must be positive");
    std::vector<Segment> segs = segments_;
    for (Segment& s : segs) s.len *= lambda;
    std::optional<GeometricTail> t = tail_;
    if (t) t->scale *= lambda;
    return Strategy(m_, std::move(segs), std::move(t));
}

ParallelStrategy::ParallelStrategy(std::vector<Strategy> b) : branches(std::move(b)) {
    if (branches.empty()) throw std::invalid_argument("ParallelStrategy: needs >= 1 branch");
    for (const Strategy& s : branches)
        if (s.m() != branches.front().m())
            throw std::invalid_argument("ParallelStrategy: branches must share the ray count");
}

std::optional<double> prefix_before_reach(const Strategy& s, int ray, double x, bool beyond) {
    double acc = 0.0;
    for (const Segment& seg : s.segments()) {
        if (seg.ray == ray && (beyond ? len_gt(seg.len, x) : len_ge(seg.len, x))) return acc;
        acc += seg.len;
    }
    if (!s.tail()) return std::nullopt;
    TailMath tm(*s.tail());
    auto t = tm.first_reach(ray, x, beyond);
    if (!t) return std::nullopt;
    return acc + tm.prefix(*t);
}

std::optional<double> first_hit_cost(const Strategy& x, const Target& t) {
    double acc = 0.0;
    for (const Segment& seg : x.segments()) {
        if (seg.ray == t.ray && len_ge(seg.len, t.dist)) return 2.0 * acc + t.dist;
        acc += seg.len;
    }
    if (!x.tail()) return std::nullopt;
    TailMath tm(*x.tail());
    auto ti = tm.first_reach(t.ray, t.dist, false);
    if (!ti) return std::nullopt;
    return 2.0 * (acc + tm.prefix(*ti)) + t.dist;
}

std::optional<double> parallel_first_hit_cost(const ParallelStrategy& p, const Target& t) {
    std::optional<double> best;
    for (const Strategy& s : p.branches) {
        auto c = first_hit_cost(s, t);
        if (c && (!best || *c < *best)) best = c;
    }
    return best;
}

namespace {

struct Best {
    double value = 1.0;
    Target witness{0, 1.0};
    void consider(double v, const Target& w) {
        if (v > value) {
            value = v;
            witness = w;
        }
    }
};

RatioReport unbounded_report(const Strategy& x, const StarEnv& env, int ray) {
    double high = 0.0;
    for (const Segment& s : x.segments())
        if (s.ray == ray) high = std::max(high, s.len);
    RatioReport rep;
    rep.value = kInf;
    rep.witness = Target{ray, std::max(env.d_min, 2.0 * high)};
    rep.converged = true;
    rep.unbounded = true;
    rep.horizon_used = (long)x.segments().size();
    return rep;
}

// Largest tail index whose length stays finite and below 1e290, used to pick
// representative witnesses for limit candidates.
long far_index(const TailMath& tm, long t0, long cycles) {
    long t = t0;
    for (long c = 0; c < cycles; ++c) {
        if (tm.len(t + tm.L) > 1e290) break;
        t += tm.L;
    }
    return t;
}

}  // namespace

RatioReport competitive_ratio(const Strategy& x, const StarEnv& env) {
    std::vector<int> all((size_t)env.m);
    for (int r = 0; r < env.m; ++r) all[(size_t)r] = r;
    return competitive_ratio(x, env, all);
}

RatioReport competitive_ratio(const Strategy& x, const StarEnv& env, std::span<const int> rays) {
    if (x.m() != env.m) throw std::invalid_argument("competitive_ratio: m mismatch");
    if (rays.empty()) throw std::invalid_argument("competitive_ratio: empty ray restriction");
    for (int r : rays)
        if (r < 0 || r >= env.m) throw std::invalid_argument("competitive_ratio: bad ray index");

    for (int r : rays)
        if (!x.covers_ray_unboundedly(r)) return unbounded_report(x, env, r);

    std::set<int> allowed(rays.begin(), rays.end());
    Best best;
    long horizon = (long)x.segments().size();

    // Boundary targets at d_min.
    for (int r : allowed) {
        auto c = first_hit_cost(x, Target{r, env.d_min});
        best.consider(*c / env.d_min, Target{r, env.d_min});
    }

    // Explicit turn points: the supremum contribution of targets just beyond
    // (len, ray) is 1 + 2 * prefix(next visit past len) / len.
    for (const Segment& seg : x.segments()) {
        if (!allowed.count(seg.ray) || !len_ge(seg.len, env.d_min)) continue;
        auto pb = prefix_before_reach(x, seg.ray, seg.len, true);
        best.consider(1.0 + 2.0 * *pb / seg.len, Target{seg.ray, seg.len});
    }

    // Tail turn points, one residue class at a time. Within a class the
    // beyond-turn ratio is exactly monotone in the iteration index, so the
    // class supremum is max(first valid sample, analytic limit).
    const GeometricTail& tail = *x.tail();
    TailMath tm(tail);
    const double E = x.explicit_total();
    for (long pos = 0; pos < tm.L; ++pos) {
        const int ray = tail.ray_cycle[(size_t)pos];
        if (!allowed.count(ray)) continue;

        const long t0 = tm.first_in_class(pos, env.d_min);
        for (long t : {t0, t0 + tm.L}) {
            const double xlen = tm.len(t);
            auto tb = tm.first_reach(ray, xlen, true);
            const double pb = E + tm.prefix(*tb);
            best.consider(1.0 + 2.0 * pb / xlen, Target{ray, xlen});
            horizon = std::max(horizon, (long)x.segments().size() + t);
        }

        // Closed-form limit of the class.
        long delta = 1;
        while (tail.ray_cycle[(size_t)((pos + delta) % tm.L)] != ray) ++delta;
        const long rem = (pos + delta) % tm.L;
        const double limit =
            1.0 + 2.0 * std::pow(tm.B, double(delta - rem)) *
                      (tm.geomC + tm.mprefix[(size_t)rem]) / tail.mult[(size_t)pos];
        const long tf = far_index(tm, t0, 64);
        best.consider(limit, Target{ray, tm.len(tf)});
        horizon = std::max(horizon, (long)x.segments().size() + tf);
    }

    RatioReport rep;
    rep.value = best.value;
    rep.witness = best.witness;
    rep.converged = true;
    rep.horizon_used = horizon;
    rep.unbounded = false;
    return rep;
}

namespace {

std::optional<double> min_prefix_beyond(const std::vector<Strategy>& branches, int ray, double x) {
    std::optional<double> best;
    for (const Strategy& b : branches) {
        auto p = prefix_before_reach(b, ray, x, true);
        if (p && (!best || *p < *best)) best = p;
    }
    return best;
}

}  // namespace

RatioReport parallel_consistency(const ParallelStrategy& p, const StarEnv& env) {
    if (p.m() != env.m) throw std::invalid_argument("parallel_consistency: m mismatch");

    for (int r = 0; r < env.m; ++r) {
        bool covered = false;
        for (const Strategy& b : p.branches) covered = covered || b.covers_ray_unboundedly(r);
        if (!covered) {
            RatioReport rep;
            rep.value = kInf;
            rep.witness = Target{r, env.d_min};
            rep.unbounded = true;
            rep.converged = true;
            return rep;
        }
    }

    Best best;
    long horizon = 0;

    for (int r = 0; r < env.m; ++r) {
        auto c = parallel_first_hit_cost(p, Target{r, env.d_min});
        best.consider(*c / env.d_min, Target{r, env.d_min});
    }

    // Families built here are pure tails over a common base and cycle length;
    // those get exact closed-form limits. Anything else falls back to horizon
    // doubling.
    bool structured = true;
    for (const Strategy& b : p.branches) {
        if (!b.has_tail() || !b.segments().empty()) structured = false;
    }
    if (structured) {
        const GeometricTail& t0 = *p.branches.front().tail();
        for (const Strategy& b : p.branches) {
            const GeometricTail& t = *b.tail();
            if (t.ray_cycle.size() != t0.ray_cycle.size() ||
                std::fabs(t.base - t0.base) > 1e-12 * t0.base)
                structured = false;
        }
    }

    std::vector<TailMath> tms;
    for (const Strategy& b : p.branches)
        if (b.has_tail()) tms.emplace_back(*b.tail());

    auto sample_turns = [&](long cycles_per_class) {
        for (const Strategy& b : p.branches) {
            for (const Segment& seg : b.segments()) {
                if (!len_ge(seg.len, env.d_min)) continue;
                auto mp = min_prefix_beyond(p.branches, seg.ray, seg.len);
                if (mp) best.consider(1.0 + 2.0 * *mp / seg.len, Target{seg.ray, seg.len});
            }
            if (!b.has_tail()) continue;
            TailMath tm(*b.tail());
            for (long pos = 0; pos < tm.L; ++pos) {
                const int ray = b.tail()->ray_cycle[(size_t)pos];
                long t = tm.first_in_class(pos, env.d_min);
                for (long c = 0; c < cycles_per_class; ++c, t += tm.L) {
                    const double xlen = tm.len(t);
                    if (xlen > 1e290) break;
                    auto mp = min_prefix_beyond(p.branches, ray, xlen);
                    if (mp) best.consider(1.0 + 2.0 * *mp / xlen, Target{ray, xlen});
                    horizon = std::max(horizon, t);
                }
            }
        }
    };

    bool converged = true;
    if (structured) {
        sample_turns(4);
        // Closed-form class limits: for branch j's residue class on `ray`,
        // the first coverer past its turn points settles, for large indices,
        // into a fixed offset d for each candidate (branch, position).
        const long L = (long)p.branches.front().tail()->ray_cycle.size();
        const double B = p.branches.front().tail()->base;
        const double logB = std::log(B);
        for (size_t j = 0; j < p.branches.size(); ++j) {
            const GeometricTail& tj = *p.branches[j].tail();
            for (long pos = 0; pos < L; ++pos) {
                const int ray = tj.ray_cycle[(size_t)pos];
                const double xj = tj.scale * tj.mult[(size_t)pos];
                double lim = kInf;
                for (size_t q = 0; q < p.branches.size(); ++q) {
                    const GeometricTail& tq = *p.branches[q].tail();
                    const TailMath& tmq = tms[q];
                    for (long pos2 = 0; pos2 < L; ++pos2) {
                        if (tq.ray_cycle[(size_t)pos2] != ray) continue;
                        const double ratio0 =
                            xj / (tq.scale * tq.mult[(size_t)pos2]);
                        const long dclass = ((pos2 - pos) % L + L) % L;
                        const double theta = std::log(ratio0) / logB;
                        long k = (long)std::ceil((theta - double(dclass)) / double(L)) - 2;
                        long d = dclass + k * L;
                        while (!len_gt(std::pow(B, double(d)), ratio0)) d += L;
                        const double term = (tq.scale / xj) * std::pow(B, double(d - pos2)) *
                                            (tmq.geomC + tmq.mprefix[(size_t)pos2]);
                        lim = std::min(lim, term);
                    }
                }
                // Witness: a far representative turn point of the class.
                TailMath tmj(tj);
                const long tf = far_index(tmj, pos, 64);
                best.consider(1.0 + 2.0 * lim, Target{ray, tmj.len(tf)});
                horizon = std::max(horizon, tf);
            }
        }
    } else {
        double prev = -1.0;
        long cycles = 16;
        for (int round = 0; round < 8; ++round, cycles *= 2) {
            sample_turns(cycles);
            if (prev >= 0.0 && std::fabs(best.value - prev) < 1e-9) break;
            prev = best.value;
        }
        sample_turns(2 * cycles);
        converged = std::fabs(best.value - prev) < 1e-9;
    }

    RatioReport rep;
    rep.value = best.value;
    rep.witness = best.witness;
    rep.converged = converged;
    rep.horizon_used = horizon;
    rep.unbounded = false;
    return rep;
}

namespace {

// Per-(branch, ray) coverage breakpoints recorded by a literal walk:
// (new maximum reach, twice the length traversed before that iteration).
struct WalkTable {
    std::vector<std::vector<std::pair<double, double>>> per_ray;
};

WalkTable walk_breakpoints(const Strategy& s, double max_dist) {
    WalkTable w;
    w.per_ray.assign((size_t)s.m(), {});
    std::vector<double> high((size_t)s.m(), 0.0);
    double acc = 0.0;
    for (const Segment& seg : s.segments()) {
        if (seg.len > high[(size_t)seg.ray]) {
            w.per_ray[(size_t)seg.ray].emplace_back(seg.len, 2.0 * acc);
            high[(size_t)seg.ray] = seg.len;
        }
        acc += seg.len;
    }
    if (!s.tail()) return w;
    const GeometricTail& tail = *s.tail();
    const long L = (long)tail.ray_cycle.size();
    std::set<int> cycle_rays(tail.ray_cycle.begin(), tail.ray_cycle.end());
    double cur = tail.scale;  // base^t accumulated multiplicatively
    const long cap = 20'000'000;
    for (long t = 0; t < cap; ++t) {
        const long q = t % L;
        const double len = cur * tail.mult[(size_t)q];
        const int ray = tail.ray_cycle[(size_t)q];
        if (len > high[(size_t)ray]) {
            w.per_ray[(size_t)ray].emplace_back(len, 2.0 * acc);
            high[(size_t)ray] = len;
        }
        acc += len;
        if (q == L - 1) {
            bool done = true;
            for (int r : cycle_rays) done = done && high[(size_t)r] >= max_dist;
            if (done) break;
        }
        cur *= tail.base;
        if (!std::isfinite(cur) || !std::isfinite(acc)) break;
    }
    return w;
}

double brute_force_impl(std::span<const Strategy> branches, const StarEnv& env,
                        double grid_factor, double max_dist) {
    if (!(grid_factor > 1.0)) throw std::invalid_argument("brute_force_ratio: grid_factor <= 1");
    if (!(max_dist >= env.d_min)) throw std::invalid_argument("brute_force_ratio: max_dist < d_min");
    for (const Strategy& b : branches)
        if (b.m() != env.m) throw std::invalid_argument("brute_force_ratio: m mismatch");

    std::vector<WalkTable> tables;
    tables.reserve(branches.size());
    for (const Strategy& b : branches) tables.push_back(walk_breakpoints(b, max_dist));

    auto ray_max = [&](int ray) {
        double local = 1.0;
        std::vector<size_t> idx(branches.size(), 0);
        for (double d = env.d_min; d <= max_dist * (1.0 + 1e-12); d *= grid_factor) {
            double cost = kInf;
            for (size_t j = 0; j < branches.size(); ++j) {
                const auto& bps = tables[j].per_ray[(size_t)ray];
                size_t& i = idx[j];
                while (i < bps.size() && bps[i].first < d) ++i;
                if (i < bps.size()) cost = std::min(cost, bps[i].second + d);
            }
            if (cost < kInf) local = std::max(local, cost / d);
        }
        return local;
    };

    const int threads = std::min(thread_cap(), env.m);
    std::vector<double> per_ray((size_t)env.m, 1.0);
    if (threads <= 1) {
        for (int r = 0; r < env.m; ++r) per_ray[(size_t)r] = ray_max(r);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (int r = w; r < env.m; r += threads) per_ray[(size_t)r] = ray_max(r);
            });
        for (auto& th : pool) th.join();
    }
    return *std::max_element(per_ray.begin(), per_ray.end());
}

}  // namespace

double brute_force_ratio(const Strategy& x, const StarEnv& env, double grid_factor,
                         double max_dist) {
    return brute_force_impl({&x, 1}, env, grid_factor, max_dist);
}

double brute_force_ratio(const ParallelStrategy& p, const StarEnv& env, double grid_factor,
                         double max_dist) {
    return brute_force_impl(p.branches, env, grid_factor, max_dist);
}

ResponsibilityMap responsibility_map(const ParallelStrategy& p, int horizon) {
    if (horizon < 1) throw std::invalid_argument("responsibility_map: horizon must be >= 1");
    ResponsibilityMap out;
    out.responsible.assign(p.branches.size(), {});
    for (size_t j = 0; j < p.branches.size(); ++j) {
        const Strategy& b = p.branches[j];
        for (int i = 0; i < horizon; ++i) {
            auto seg = b.iteration(i);
            if (!seg) break;
            int who = -1;
            double bestp = kInf;
            for (size_t q = 0; q < p.branches.size(); ++q) {
                auto pb = prefix_before_reach(p.branches[q], seg->ray, seg->len, true);
                if (pb && *pb < bestp) {
                    bestp = *pb;
                    who = (int)q;
                }
            }
            out.responsible[j].push_back(who);
        }
    }
    out.single_bijection = true;
    out.pi.assign(p.branches.size(), -1);
    std::vector<char> used(p.branches.size(), 0);
    for (size_t j = 0; j < p.branches.size(); ++j) {
        const auto& row = out.responsible[j];
        if (row.empty() || row.front() < 0) {
            out.single_bijection = false;
            break;
        }
        for (int v : row)
            if (v != row.front()) out.single_bijection = false;
        if (!out.single_bijection) break;
        out.pi[j] = row.front();
        if (used[(size_t)row.front()]) out.single_bijection = false;
        used[(size_t)row.front()] = 1;
        if (!out.single_bijection) break;
    }
    if (!out.single_bijection) out.pi.clear();
    return out;
}

}  // namespace starsearch
