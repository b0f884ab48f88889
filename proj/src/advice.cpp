#include "starsearch/advice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "starsearch/solver.hpp"

namespace starsearch {

namespace {

// The branch ladders start this many base powers below the unit distance, so
// that targets near d_min are reached with a fully developed prefix and the
// boundary targets never dominate the tail supremum.
constexpr int kDeepStart = 12;

void check_config(const AdviceFamilyConfig& cfg) {
    if (cfg.r < 9.0 - 1e-12) throw std::invalid_argument("advice: r must be >= 9 (line search)");
    if (cfg.k < 1 || cfg.k > 20) throw std::invalid_argument("advice: k must be in 1..20");
    if (cfg.tolerance < 0 || 2 * cfg.tolerance > cfg.k)
        throw std::invalid_argument("advice: tolerance must satisfy 0 <= 2H <= k");
}

// Weight of one candidate sitting in bucket j of a state with q queries left.
std::uint64_t bucket_weight(int q, int tolerance, int j) {
    const int slack = tolerance - j;
    if (slack < 0) return 0;
    return binom_tail(q, std::min(slack, q));
}

// ---- exact game analysis over interchangeable candidates -----------------
//
// Candidates inside one bucket are indistinguishable, so the game value
// depends only on the bucket counts and the queries left. States are solved
// by minimax with the Berlekamp weight as a hard prune. Exact values let the
// questioner navigate boundary games (weight exactly 2^Q) where a balanced
// but losing split exists.

using Counts = std::vector<int>;

std::uint64_t counts_weight(const Counts& n, int q, int tol) {
    std::uint64_t w = 0;
    for (int j = 0; j <= tol; ++j) w += (std::uint64_t)n[(size_t)j] * bucket_weight(q, tol, j);
    return w;
}

int counts_survivors(const Counts& n) {
    int s = 0;
    for (int v : n) s += v;
    return s;
}

// Successor counts when the s-selected candidates sit on the answered side.
Counts counts_after(const Counts& n, const Counts& s, bool yes_side) {
    const int tol = (int)n.size() - 1;
    Counts out((size_t)tol + 1, 0);
    for (int j = 0; j <= tol; ++j) {
        const int keep = yes_side ? s[(size_t)j] : n[(size_t)j] - s[(size_t)j];
        const int move = n[(size_t)j] - keep;
        out[(size_t)j] += keep;
        if (j + 1 <= tol) out[(size_t)j + 1] += move;
    }
    return out;
}

constexpr int kExactSurvivorCap = 600;
constexpr int kExactQueryCap = 24;

struct GameSolver {
    int tol = 0;
    std::map<std::pair<Counts, int>, bool> memo;

    bool feasible(const Counts& n, int q) const {
        return counts_survivors(n) <= kExactSurvivorCap && q <= kExactQueryCap && n.size() <= 6;
    }

    bool winnable(const Counts& n, int q) {
        if (counts_survivors(n) <= 1) return true;
        if (q <= 0) return false;
        if (counts_weight(n, q, tol) > (std::uint64_t(1) << q)) return false;
        const auto key = std::make_pair(n, q);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool any = false;
        Counts s((size_t)tol + 1, 0);
        std::function<void(int)> rec = [&](int j) {
            if (any) return;
            if (j > tol) {
                any = winnable(counts_after(n, s, true), q - 1) &&
                      winnable(counts_after(n, s, false), q - 1);
                return;
            }
            for (int v = 0; v <= n[(size_t)j] && !any; ++v) {
                s[(size_t)j] = v;
                rec(j + 1);
            }
            s[(size_t)j] = 0;
        };
        rec(0);
        memo[key] = any;
        return any;
    }
};

thread_local GameSolver g_solver;

Counts state_counts(const LieGameState& s) {
    Counts n;
    for (const auto& b : s.buckets) n.push_back((int)b.size());
    return n;
}

// Realize a bucket split as a concrete query: the lowest-indexed s_j
// candidates of each bucket.
std::vector<int> realize_query(const LieGameState& s, const Counts& take) {
    std::vector<int> q;
    for (size_t j = 0; j < s.buckets.size(); ++j)
        for (int i = 0; i < take[j]; ++i) q.push_back(s.buckets[j][(size_t)i]);
    std::sort(q.begin(), q.end());
    return q;
}

}  // namespace

int branch_count(const AdviceFamilyConfig& cfg) {
    check_config(cfg);
    const std::uint64_t denom = binom_tail(cfg.k, cfg.tolerance);
    const std::uint64_t p = (std::uint64_t(1) << cfg.k) / denom;
    if (p < 2) throw TooFewBranches("advice: fewer than 2 decodable branches for (k, tolerance)");
    return (int)p;
}

ParallelStrategy build_advice_family(const AdviceFamilyConfig& cfg) {
    const int p = branch_count(cfg);
    const double br = solve_base(2, cfg.r);
    std::vector<Strategy> branches;
    branches.reserve((size_t)p);
    for (int j = 0; j < p; ++j) {
        GeometricTail tail;
        tail.base = br;
        tail.scale = std::pow(br, 2.0 * j / p - kDeepStart);
        tail.ray_cycle = {0, 1};
        tail.mult = {1.0, 1.0};
        branches.emplace_back(2, std::vector<Segment>{}, tail);
    }
    return ParallelStrategy(std::move(branches));
}

double consistency_bound(const AdviceFamilyConfig& cfg) {
    const int p = branch_count(cfg);
    const double br = solve_base(2, cfg.r);
    return 1.0 + 2.0 * std::pow(br, 2.0 / p) / (br - 1.0);
}

double entropy_gap(const AdviceFamilyConfig& cfg) {
    check_config(cfg);
    if (!(cfg.tolerance > 0 && 2 * cfg.tolerance < cfg.k))
        throw std::domain_error("entropy_gap: need 0 < H < k/2");
    const double bound =
        std::exp2(double(cfg.k) * (binary_entropy(double(cfg.tolerance) / cfg.k) - 1.0) + 1.0);
    const double inv_q =
        double(binom_tail(cfg.k, cfg.tolerance)) / std::exp2(double(cfg.k - 1));
    if (inv_q > bound * (1.0 + 1e-12))
        throw std::logic_error("entropy_gap: bound violated");  // unreachable
    return bound;
}

int LieGameState::survivors() const {
    int n = 0;
    for (const auto& b : buckets) n += (int)b.size();
    return n;
}

LieGameState make_lie_game(int candidates, int queries, int tolerance) {
    if (candidates < 1 || queries < 0 || tolerance < 0)
        throw std::invalid_argument("make_lie_game: bad parameters");
    LieGameState s;
    s.buckets.assign((size_t)tolerance + 1, {});
    s.buckets[0].resize((size_t)candidates);
    for (int i = 0; i < candidates; ++i) s.buckets[0][(size_t)i] = i;
    s.queries_remaining = queries;
    s.tolerance = tolerance;
    return s;
}

std::uint64_t berlekamp_weight(const LieGameState& s) {
    std::uint64_t w = 0;
    for (int j = 0; j <= s.tolerance; ++j)
        w += (std::uint64_t)s.buckets[(size_t)j].size() *
             bucket_weight(s.queries_remaining, s.tolerance, j);
    return w;
}

std::vector<int> ask_next(const LieGameState& s) {
    if (s.survivors() <= 1) return {};
    if (s.queries_remaining < 1) throw GameOver("ask_next: no queries left with >1 survivor");

    const int tol = s.tolerance;
    const int q = s.queries_remaining;
    const Counts n = state_counts(s);

    // Exact play when the state space allows it: among splits whose both
    // successors stay winnable, take the most weight-balanced one (lowest
    // bucket counts on ties). Falls back to pure weight balancing when the
    // game is out of reach anyway, or too large to solve exactly.
    GameSolver& solver = g_solver;
    if (solver.tol != tol) {
        solver.tol = tol;
        solver.memo.clear();
    }
    const bool use_exact = solver.feasible(n, q) && solver.winnable(n, q);

    Counts best_take;
    std::uint64_t best_hi = std::numeric_limits<std::uint64_t>::max();
    bool best_winning = false;
    Counts take((size_t)tol + 1, 0);
    std::function<void(int)> sweep = [&](int j) {
        if (j > tol) {
            const Counts yes = counts_after(n, take, true);
            const Counts no = counts_after(n, take, false);
            const std::uint64_t hi = std::max(counts_weight(yes, q - 1, tol),
                                              counts_weight(no, q - 1, tol));
            bool winning = false;
            if (use_exact)
                winning = solver.winnable(yes, q - 1) && solver.winnable(no, q - 1);
            // winning splits beat non-winning; then lower weight; then lex order
            const bool better =
                (winning && !best_winning) ||
                (winning == best_winning && (hi < best_hi || (hi == best_hi && take < best_take)));
            if (best_take.empty() || better) {
                best_take = take;
                best_hi = hi;
                best_winning = winning;
            }
            return;
        }
        for (int v = 0; v <= n[(size_t)j]; ++v) {
            take[(size_t)j] = v;
            sweep(j + 1);
        }
        take[(size_t)j] = 0;
    };

    long combos = 1;
    for (int v : n) combos *= (long)v + 1;
    if (combos <= 2'000'000) {
        sweep(0);
        return realize_query(s, best_take);
    }

    // Very large state: greedy half split on the top bucket (these games are
    // far from the weight boundary, where balancing is sufficient).
    Counts half((size_t)tol + 1, 0);
    for (int j = 0; j <= tol; ++j) half[(size_t)j] = n[(size_t)j] / 2;
    return realize_query(s, half);
}

LieGameState update(const LieGameState& s, const std::vector<int>& query, bool answer) {
    if (s.queries_remaining < 1) throw std::invalid_argument("update: no queries remaining");
    LieGameState n;
    n.buckets.assign((size_t)s.tolerance + 1, {});
    n.queries_remaining = s.queries_remaining - 1;
    n.tolerance = s.tolerance;
    auto in_query = [&](int id) { return std::binary_search(query.begin(), query.end(), id); };
    for (int j = 0; j <= s.tolerance; ++j) {
        for (int id : s.buckets[(size_t)j]) {
            const bool consistent = (in_query(id) == answer);
            if (consistent)
                n.buckets[(size_t)j].push_back(id);
            else if (j < s.tolerance)
                n.buckets[(size_t)j + 1].push_back(id);
            // else: exceeded the lie budget, dropped
        }
    }
    for (auto& b : n.buckets) std::sort(b.begin(), b.end());
    return n;
}

int run_advice_protocol(const AdviceFamilyConfig& cfg, int true_branch,
                        const std::set<int>& lie_positions) {
    const int p = branch_count(cfg);
    if (true_branch < 0 || true_branch >= p)
        throw std::invalid_argument("run_advice_protocol: true_branch out of range");
    if ((int)lie_positions.size() > cfg.tolerance)
        throw std::invalid_argument("run_advice_protocol: more lies than the tolerance");

    LieGameState s = make_lie_game(p, cfg.k, cfg.tolerance);
    for (int step = 0; step < cfg.k && s.survivors() > 1; ++step) {
        const std::vector<int> q = ask_next(s);
        const bool honest = std::binary_search(q.begin(), q.end(), true_branch);
        const bool answer = lie_positions.count(step) ? !honest : honest;
        s = update(s, q, answer);
    }
    if (s.survivors() != 1)
        throw AmbiguousDecoding("run_advice_protocol: decoding did not isolate one branch");
    for (const auto& b : s.buckets)
        if (!b.empty()) return b.front();
    return -1;  // unreachable
}

}  // namespace starsearch
