#pragma once

#include <utility>
#include <vector>

namespace burn {

constexpr int kUnreachable = -1;

// Undirected simple graph over dense vertex ids 0..n-1.
// Neighbor lists are sorted; construction enforces symmetry, no self-loops
// and no duplicate edges. Instances are immutable after construction.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adjacency;

    static Graph empty(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
    bool has_edge(int u, int v) const;
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

    bool operator==(const Graph&) const = default;
};

// Shortest-path distances from src; unreachable vertices carry kUnreachable.
std::vector<int> bfs_distances(const Graph& g, int src);

bool is_connected(const Graph& g);

struct DistanceMetrics {
    std::vector<int> eccentricity;
    int radius = 0;
    int diameter = 0;
    std::vector<int> center;  // ascending ids attaining the radius
};

// Throws std::invalid_argument("graph not connected") on disconnected input.
DistanceMetrics metrics(const Graph& g);

Graph complement(const Graph& g);

// Brute-force isomorphism check over all vertex permutations; order <= 8.
bool isomorphic_small(const Graph& a, const Graph& b);

}  // namespace burn
