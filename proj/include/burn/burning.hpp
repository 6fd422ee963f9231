#pragma once

#include <vector>

#include "burn/bounds.hpp"
#include "burn/graph.hpp"

namespace burn {

struct CoverEntry {
    int center = 0;
    int radius = 0;
    bool operator==(const CoverEntry&) const = default;
};

// Ball cover claiming V is inside the union of the entries' closed balls.
// Canonical form sorts entries by decreasing radius.
struct BurnCover {
    std::vector<CoverEntry> entries;

    static BurnCover canonical(std::vector<CoverEntry> entries);
    int size() const { return static_cast<int>(entries.size()); }
};

// Ordered ignition sources; round i (1-based) ignites sources[i-1].
struct BurnSchedule {
    std::vector<int> sources;
    int rounds() const { return static_cast<int>(sources.size()); }
};

// Per-vertex round at which the vertex burned; 0 means never burned.
struct BurnTrace {
    std::vector<int> burned_at;

    bool all_burned() const;
    int rounds_used() const;  // latest burn round, 0 if nothing burned
};

// Runs the burning process for exactly |s| rounds: each round spreads fire
// from vertices burned in earlier rounds, then ignites this round's source.
// burned_at[v] = min_i (i + d(v, sources[i])) whenever that is <= |s|.
// In strict mode, igniting a vertex burned in a previous round is rejected.
BurnTrace simulate(const Graph& g, const BurnSchedule& s, bool strict = false);

// True iff the schedule burns every vertex within |s| rounds (and, in strict
// mode, never ignites an already-burned vertex).
bool verify_schedule(const Graph& g, const BurnSchedule& s, bool strict = false);

// Diagnostic spacing condition d(s_i, s_j) >= j - i for all i < j.
bool schedule_spacing_ok(const Graph& g, const BurnSchedule& s);

// True iff every vertex lies within some entry's ball.
bool verify_cover(const Graph& g, const BurnCover& c);

// Cover with radii budgets[i]-1 at centers[i].
bool verify_budget_cover(const Graph& g, const BudgetSet& budgets,
                         const std::vector<int>& centers);

// Repairs a valid cover with radii exactly {k-1,...,0} into an ignition
// schedule of length <= k with distinct sources: each round ignites the
// entry's center if it is still unburned, otherwise the smallest unburned
// vertex; rounds after everything has burned are dropped.
BurnSchedule cover_to_schedule(const Graph& g, const BurnCover& c);

}  // namespace burn
