#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "starsearch/strategy.hpp"

namespace starsearch {

// Line search (m = 2) with a k-bit untrusted answer string. `tolerance` is
// the number of answers allowed to be wrong (0 = error-free Pareto case).
struct AdviceFamilyConfig {
    double r = 9.0;   // robustness target, >= 9
    int k = 1;        // advice bits, 1..20
    int tolerance = 0;  // H, with 2H <= k
};

struct TooFewBranches : std::domain_error {
    using std::domain_error::domain_error;
};
struct GameOver : std::logic_error {
    using std::logic_error::logic_error;
};
struct AmbiguousDecoding : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Number of branches: floor(2^k / binom_tail(k, H)). Throws TooFewBranches
// below 2 and std::invalid_argument on a malformed config.
int branch_count(const AdviceFamilyConfig& cfg);

// The 2^k-branch family (p = branch_count(cfg) under tolerance): branch j is
// the pure geometric ladder with per-iteration base b_r, scale b_r^(2j/p),
// alternating rays from ray 0. Jointly the branches cover each ray at every
// scale b_r^(2/p)-apart; individually each branch is exactly r-robust.
ParallelStrategy build_advice_family(const AdviceFamilyConfig& cfg);

// 1 + 2 * b_r^(2/p) / (b_r - 1), the family's exact consistency.
double consistency_bound(const AdviceFamilyConfig& cfg);

// Upper bound 2^(k (H(H/k) - 1) + 1) on 1/q, q = 2^(k-1)/binom_tail(k,H).
// Domain: 0 < H < k/2.
double entropy_gap(const AdviceFamilyConfig& cfg);

// State of the comparison-query game with a lying responder: buckets[j]
// holds the candidate indices consistent with exactly j wrong answers so far.
struct LieGameState {
    std::vector<std::vector<int>> buckets;  // size tolerance + 1
    int queries_remaining = 0;
    int tolerance = 0;

    int survivors() const;
};

LieGameState make_lie_game(int candidates, int queries, int tolerance);

// Berlekamp weight sum_j |buckets[j]| * binom_tail(queries_remaining, H - j);
// never increases under the balanced questioner below.
std::uint64_t berlekamp_weight(const LieGameState& s);

// Subset query minimizing the worse successor weight max(W_yes, W_no);
// deterministic tie-breaking. Throws GameOver when no queries remain with
// more than one survivor.
std::vector<int> ask_next(const LieGameState& s);

// Answer transition: consistent candidates keep their lie count, the others
// move one bucket up (dropped past the tolerance). The query must be sorted
// ascending (as ask_next returns it).
LieGameState update(const LieGameState& s, const std::vector<int>& query, bool answer);

// Runs the k-query adaptive protocol against a responder that answers
// honestly except at the given query indices (flipped). With at most
// `tolerance` lies the unique survivor is always the true branch.
int run_advice_protocol(const AdviceFamilyConfig& cfg, int true_branch,
                        const std::set<int>& lie_positions);

}  // namespace starsearch
