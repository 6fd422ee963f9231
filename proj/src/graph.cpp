#include "burn/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace burn {

Graph Graph::empty(int n) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    Graph g;
    g.n = n;
    g.adjacency.assign(n, {});
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("vertex id out of range");
        if (u == v) throw std::invalid_argument("self-loops not allowed");
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adjacency[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

long long Graph::edge_count() const {
    long long deg_sum = 0;
    for (const auto& nbrs : adjacency) deg_sum += static_cast<long long>(nbrs.size());
    return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adjacency[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    if (src < 0 || src >= g.n) throw std::invalid_argument("vertex id out of range");
    std::vector<int> dist(g.n, kUnreachable);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adjacency[v]) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](int d) { return d == kUnreachable; });
}

DistanceMetrics metrics(const Graph& g) {
    DistanceMetrics m;
    m.eccentricity.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        auto dist = bfs_distances(g, v);
        int ecc = 0;
        for (int d : dist) {
            if (d == kUnreachable) throw std::invalid_argument("graph not connected");
            ecc = std::max(ecc, d);
        }
        m.eccentricity[v] = ecc;
    }
    m.radius = *std::min_element(m.eccentricity.begin(), m.eccentricity.end());
    m.diameter = *std::max_element(m.eccentricity.begin(), m.eccentricity.end());
    for (int v = 0; v < g.n; ++v)
        if (m.eccentricity[v] == m.radius) m.center.push_back(v);
    return m;
}

Graph complement(const Graph& g) {
    Graph out = Graph::empty(g.n);
    for (int u = 0; u < g.n; ++u) {
        const auto& nbrs = g.adjacency[u];
        std::size_t i = 0;
        for (int v = 0; v < g.n; ++v) {
            while (i < nbrs.size() && nbrs[i] < v) ++i;
            bool adjacent = i < nbrs.size() && nbrs[i] == v;
            if (v != u && !adjacent) out.adjacency[u].push_back(v);
        }
    }
    return out;
}

bool isomorphic_small(const Graph& a, const Graph& b) {
    if (a.n != b.n) return false;
    if (a.n > 8) throw std::invalid_argument("isomorphism check limited to order 8");
    if (a.edge_count() != b.edge_count()) return false;
    auto degrees = [](const Graph& g) {
        std::vector<int> d(g.n);
        for (int v = 0; v < g.n; ++v) d[v] = g.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(a) != degrees(b)) return false;

    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < a.n && match; ++u)
            for (int v : a.adjacency[u]) {
                if (u < v && !b.has_edge(perm[u], perm[v])) {
                    match = false;
                    break;
                }
            }
        if (match) return true;  // equal edge counts make one direction enough
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace burn
