#pragma once

#include <optional>
#include <span>
#include <vector>

#include "starsearch/star.hpp"

namespace starsearch {

struct Segment {
    double len = 1.0;
    int ray = 0;
};

// Analytic continuation of a strategy: tail iteration t >= 0 explores ray
// ray_cycle[t mod L] out to length scale * mult[t mod L] * base^t. The
// per-entry multipliers realize biased and scaled geometric families.
struct GeometricTail {
    double base = 2.0;
    double scale = 1.0;
    std::vector<int> ray_cycle;
    std::vector<double> mult;  // one entry per ray_cycle entry
};

// A search plan: finitely many explicit segments followed by an optional
// geometric tail. Construction rejects degenerate revisits (a visit that does
// not go strictly beyond the previous maximum on its ray explores nothing).
class Strategy {
public:
    Strategy(int m, std::vector<Segment> segments,
             std::optional<GeometricTail> tail = std::nullopt);

    int m() const { return m_; }
    const std::vector<Segment>& segments() const { return segments_; }
    const std::optional<GeometricTail>& tail() const { return tail_; }

    bool has_tail() const { return tail_.has_value(); }
    // True iff the strategy's explored length on `ray` is unbounded.
    bool covers_ray_unboundedly(int ray) const;

    double tail_len(long t) const;  // length of tail iteration t >= 0
    int tail_ray(long t) const;
    // Unified view over explicit segments followed by tail iterations.
    // Returns nothing once a finite strategy is exhausted.
    std::optional<Segment> iteration(long i) const;

    double explicit_total() const { return explicit_total_; }

    // Same strategy with every length (and the tail scale) multiplied by
    // lambda > 0.
    Strategy scaled(double lambda) const;

private:
    int m_;
    std::vector<Segment> segments_;
    std::optional<GeometricTail> tail_;
    double explicit_total_ = 0.0;

    void validate() const;
};

// Ordered family of strategies over a common environment; the parallel cost
// of a target is the cheapest branch's cost.
struct ParallelStrategy {
    std::vector<Strategy> branches;

    explicit ParallelStrategy(std::vector<Strategy> b);
    int m() const { return branches.front().m(); }
};

struct RatioReport {
    double value = 1.0;
    Target witness{0, 1.0};
    bool converged = true;
    long horizon_used = 0;
    bool unbounded = false;
};

// First arrival time of a unit-speed searcher at t: twice the sum of all
// segment lengths before the discovering iteration, plus d(t). Empty when the
// strategy never covers t.
std::optional<double> first_hit_cost(const Strategy& x, const Target& t);

// Total length traversed before the searcher first covers (ray, x): with
// beyond = true, before the first visit strictly past x (the discovery of a
// target hiding just beyond x); otherwise before the first visit reaching x.
// Empty if the strategy never gets there.
std::optional<double> prefix_before_reach(const Strategy& s, int ray, double x, bool beyond);
std::optional<double> parallel_first_hit_cost(const ParallelStrategy& p, const Target& t);

// Exact worst-case ratio sup_t cost(t)/d(t) over targets with dist >= d_min.
// Turn-point suprema are evaluated as limits and the geometric tail is
// handled in closed form, so the report is exact for every representable
// strategy. Unbounded (some ray explored only finitely) sets the flag and
// value = +infinity.
RatioReport competitive_ratio(const Strategy& x, const StarEnv& env);

// Restriction of the supremum to targets on the given rays.
RatioReport competitive_ratio(const Strategy& x, const StarEnv& env,
                              std::span<const int> rays);

// Worst-case ratio of the family against the cheapest branch, with the same
// exactness guarantees for families whose branches share a tail base and
// cycle length. Other families fall back to horizon doubling and may report
// converged = false.
RatioReport parallel_consistency(const ParallelStrategy& p, const StarEnv& env);

// Independent oracle: max of cost/dist over the finite grid
// {d_min * grid_factor^n <= max_dist} on every ray, with the cost obtained by
// literal step-by-step walk simulation. Always a lower bound on the analytic
// supremum. Sweeps may run in parallel (capped by STARSEARCH_THREADS); the
// result is deterministic.
double brute_force_ratio(const Strategy& x, const StarEnv& env, double grid_factor,
                         double max_dist);
double brute_force_ratio(const ParallelStrategy& p, const StarEnv& env, double grid_factor,
                         double max_dist);

// responsible[j][i] is the branch whose searcher first reaches a target
// hiding infinitesimally beyond branch j's i-th turn point (-1 if no branch
// ever passes it). single_bijection is true iff one permutation pi covers
// every row: responsible[j][i] == pi[j] for all i < horizon.
struct ResponsibilityMap {
    std::vector<std::vector<int>> responsible;
    bool single_bijection = false;
    std::vector<int> pi;  // meaningful when single_bijection
};

ResponsibilityMap responsibility_map(const ParallelStrategy& p, int horizon);

}  // namespace starsearch
