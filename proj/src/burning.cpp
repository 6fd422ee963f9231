#include "burn/burning.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "burn/errors.hpp"

namespace burn {

namespace {

void validate_sources(const Graph& g, const BurnSchedule& s) {
    if (s.sources.empty()) throw std::invalid_argument("empty schedule");
    for (int v : s.sources)
        if (v < 0 || v >= g.n) throw std::invalid_argument("vertex id out of range");
}

// Mark all vertices within `radius` of `center` in `covered`.
void mark_ball(const Graph& g, int center, int radius, std::vector<char>& covered) {
    std::vector<int> dist(g.n, kUnreachable);
    std::queue<int> q;
    dist[center] = 0;
    covered[center] = 1;
    if (radius == 0) return;
    q.push(center);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adjacency[v]) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                covered[w] = 1;
                if (dist[w] < radius) q.push(w);
            }
        }
    }
}

}  // namespace

BurnCover BurnCover::canonical(std::vector<CoverEntry> entries) {
    std::sort(entries.begin(), entries.end(), [](const CoverEntry& a, const CoverEntry& b) {
        if (a.radius != b.radius) return a.radius > b.radius;
        return a.center < b.center;
    });
    return BurnCover{std::move(entries)};
}

bool BurnTrace::all_burned() const {
    return std::all_of(burned_at.begin(), burned_at.end(), [](int t) { return t > 0; });
}

int BurnTrace::rounds_used() const {
    return *std::max_element(burned_at.begin(), burned_at.end());
}

BurnTrace simulate(const Graph& g, const BurnSchedule& s, bool strict) {
    validate_sources(g, s);
    BurnTrace trace;
    trace.burned_at.assign(g.n, 0);
    std::vector<int> frontier;  // vertices burned in the previous round
    for (int round = 1; round <= s.rounds(); ++round) {
        std::vector<int> next;
        for (int v : frontier) {
            for (int w : g.adjacency[v]) {
                if (trace.burned_at[w] == 0) {
                    trace.burned_at[w] = round;
                    next.push_back(w);
                }
            }
        }
        int src = s.sources[round - 1];
        if (trace.burned_at[src] != 0 && trace.burned_at[src] < round) {
            if (strict) throw std::invalid_argument("source already burned or duplicated");
        } else if (trace.burned_at[src] == 0) {
            trace.burned_at[src] = round;
            next.push_back(src);
        }
        frontier = std::move(next);
    }
    return trace;
}

bool verify_schedule(const Graph& g, const BurnSchedule& s, bool strict) {
    try {
        return simulate(g, s, strict).all_burned();
    } catch (const std::invalid_argument&) {
        return false;
    }
}

bool schedule_spacing_ok(const Graph& g, const BurnSchedule& s) {
    validate_sources(g, s);
    for (int i = 0; i < s.rounds(); ++i) {
        auto dist = bfs_distances(g, s.sources[i]);
        for (int j = i + 1; j < s.rounds(); ++j) {
            int d = dist[s.sources[j]];
            if (d == kUnreachable || d < j - i) return false;
        }
    }
    return true;
}

bool verify_cover(const Graph& g, const BurnCover& c) {
    std::vector<char> covered(g.n, 0);
    for (const auto& e : c.entries) {
        if (e.center < 0 || e.center >= g.n)
            throw std::invalid_argument("vertex id out of range");
        if (e.radius < 0) throw std::invalid_argument("negative radius");
        mark_ball(g, e.center, e.radius, covered);
    }
    return std::all_of(covered.begin(), covered.end(), [](char x) { return x != 0; });
}

bool verify_budget_cover(const Graph& g, const BudgetSet& budgets,
                         const std::vector<int>& centers) {
    if (budgets.size() != static_cast<int>(centers.size()))
        throw std::invalid_argument("budget/center count mismatch");
    std::vector<CoverEntry> entries;
    entries.reserve(centers.size());
    for (int i = 0; i < budgets.size(); ++i)
        entries.push_back({centers[i], budgets.values()[i] - 1});
    return verify_cover(g, BurnCover{std::move(entries)});
}

BurnSchedule cover_to_schedule(const Graph& g, const BurnCover& c) {
    BurnCover cover = BurnCover::canonical(c.entries);
    const int k = cover.size();
    if (k == 0) throw std::invalid_argument("not a canonical burning cover");
    for (int i = 0; i < k; ++i)
        if (cover.entries[i].radius != k - 1 - i)
            throw std::invalid_argument("not a canonical burning cover");
    if (!verify_cover(g, cover))
        throw std::invalid_argument("cover does not cover the graph");

    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> earliest(g.n, kInf);  // min_i (i + d(v, s_i)) over placed sources
    BurnSchedule out;
    for (int round = 1; round <= k; ++round) {
        // Unburned at the start of this round means earliest >= round.
        int src = cover.entries[round - 1].center;
        if (earliest[src] < round) {
            src = -1;
            for (int v = 0; v < g.n; ++v) {
                if (earliest[v] >= round) {
                    src = v;
                    break;
                }
            }
            if (src == -1) break;  // everything already burned; drop the tail
        }
        out.sources.push_back(src);
        auto dist = bfs_distances(g, src);
        for (int v = 0; v < g.n; ++v)
            if (dist[v] != kUnreachable)
                earliest[v] = std::min(earliest[v], round + dist[v]);
    }
    for (int v = 0; v < g.n; ++v)
        internal_check(earliest[v] <= k, "repaired schedule fails to burn the graph");
    return out;
}

}  // namespace burn
