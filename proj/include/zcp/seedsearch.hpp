#pragma once

#include "zcp/sequence.hpp"

#include <optional>
#include <string>

namespace zcp {

// True iff len(b) = len(a)+1 and every per-shift sum aacf(a,tau)+aacf(b,tau)
// for tau in [1, len(a)] has magnitude exactly 1 (the proven floor; the sums
// are always odd, so 1 is the best reachable value).
bool verify_floor(const sequence& a, const sequence& b);

enum class search_mode { first_hit, enumerate_all, count_only };

struct search_task {
    int n = 1;                           // length of the shorter member
    search_mode mode = search_mode::enumerate_all;
    std::optional<std::uint64_t> max_results;
    bool canonicalize = true;            // quotient by (negate-a, negate-b, reverse-both)
    int threads = 0;                     // 0: ZCP_THREADS env or hardware count
    std::optional<double> time_budget_s; // partial result with exhausted=false on expiry
    std::optional<std::string> checkpoint_path;  // resumed if present, written on expiry
};

struct search_result {
    std::vector<seq_pair> pairs;   // sorted by (a,b) text; empty in count-only mode
    std::uint64_t count = 0;       // number of qualifying pairs found
    std::uint64_t nodes_visited = 0;
    double wall_time = 0.0;        // seconds
    bool exhausted = true;         // false when stopped by budget or result cap
};

// Depth-first enumeration of all floor-meeting seed pairs of lengths (n, n+1),
// pruned by per-shift reachability of the target magnitude. Every emitted pair
// is re-verified through the correlation oracle before being returned.
search_result search_seeds(const search_task& task);

// Lexicographically smallest image of (a,b) under negations of either member
// and joint reversal ('+' sorts before '-').
std::pair<std::string, std::string> canonical_form(const sequence& a, const sequence& b);

}  // namespace zcp
