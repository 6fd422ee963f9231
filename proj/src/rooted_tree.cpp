#include "burn/rooted_tree.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "burn/errors.hpp"

namespace burn {

namespace {

// Fill parent/depth/height by BFS from the root over tree edges.
void index_from_root(RootedTree& t) {
    const int n = t.graph.n;
    t.parent.assign(n, -1);
    t.depth.assign(n, -1);
    t.parent[t.root] = t.root;
    t.depth[t.root] = 0;
    t.height = 0;
    std::queue<int> q;
    q.push(t.root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.graph.adjacency[v]) {
            if (t.depth[w] == -1) {
                t.depth[w] = t.depth[v] + 1;
                t.parent[w] = v;
                t.height = std::max(t.height, t.depth[w]);
                q.push(w);
            }
        }
    }
    for (int d : t.depth)
        if (d == -1) throw std::invalid_argument("graph not connected");
}

// Build the compacted piece induced by `vertices` (ascending old ids).
PrunedPart compact(const RootedTree& t, const std::vector<int>& vertices, int old_root) {
    PrunedPart part;
    part.to_original = vertices;
    std::vector<int> to_new(t.graph.n, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        to_new[vertices[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (int old_u : vertices)
        for (int old_v : t.graph.adjacency[old_u])
            if (old_u < old_v && to_new[old_v] != -1)
                edges.emplace_back(to_new[old_u], to_new[old_v]);

    Graph g = Graph::from_edges(static_cast<int>(vertices.size()), edges);
    part.tree = RootedTree::from_tree(std::move(g), to_new[old_root]);
    return part;
}

}  // namespace

RootedTree RootedTree::from_tree(Graph tree, int root) {
    if (root < 0 || root >= tree.n) throw std::invalid_argument("vertex id out of range");
    if (tree.edge_count() != tree.n - 1) throw std::invalid_argument("not a tree");
    RootedTree t;
    t.graph = std::move(tree);
    t.root = root;
    index_from_root(t);  // also rejects disconnected input
    return t;
}

RootedTree bfs_spanning_tree(const Graph& g, int root) {
    if (root < 0 || root >= g.n) throw std::invalid_argument("vertex id out of range");
    auto dist = bfs_distances(g, root);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> seen(g.n, 0);
    seen[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adjacency[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                edges.emplace_back(v, w);
                q.push(w);
            }
        }
    }
    if (static_cast<int>(edges.size()) != g.n - 1)
        throw std::invalid_argument("graph not connected");
    auto t = RootedTree::from_tree(Graph::from_edges(g.n, edges), root);
    for (int v = 0; v < g.n; ++v)
        internal_check(t.depth[v] == dist[v], "spanning tree does not preserve root distances");
    return t;
}

std::vector<int> subtree_vertices(const RootedTree& t, int v) {
    if (v < 0 || v >= t.graph.n) throw std::invalid_argument("vertex id out of range");
    std::vector<int> out;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (int w : t.graph.adjacency[u])
            if (t.parent[w] == u && w != u) stack.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int ancestor_at(const RootedTree& t, int v, int steps) {
    internal_check(steps >= 0 && steps <= t.depth[v], "ancestor walk out of range");
    int u = v;
    for (int i = 0; i < steps; ++i) u = t.parent[u];
    return u;
}

int deepest_leaf(const RootedTree& t) {
    int best = t.root;
    for (int v = 0; v < t.graph.n; ++v)
        if (t.depth[v] > t.depth[best]) best = v;  // scan order gives smallest id on ties
    return best;
}

PruneResult prune_subtree(const RootedTree& t, int v) {
    auto sub = subtree_vertices(t, v);
    PruneResult res;
    res.subtree = compact(t, sub, v);
    if (v == t.root) return res;

    std::vector<char> in_sub(t.graph.n, 0);
    for (int u : sub) in_sub[u] = 1;
    std::vector<int> rest;
    for (int u = 0; u < t.graph.n; ++u)
        if (!in_sub[u]) rest.push_back(u);
    res.remainder = compact(t, rest, t.root);
    return res;
}

}  // namespace burn
