#pragma once

#include <optional>
#include <vector>

#include "burn/graph.hpp"

namespace burn {

// Tree with a designated root plus parent/depth arrays. parent[root] == root.
struct RootedTree {
    Graph graph;
    int root = 0;
    std::vector<int> parent;
    std::vector<int> depth;
    int height = 0;

    int order() const { return graph.n; }

    // Validates that the graph is a tree (n-1 edges, connected).
    static RootedTree from_tree(Graph tree, int root);
};

// BFS tree of a connected graph; depth[v] equals bfs_distances(g, root)[v].
RootedTree bfs_spanning_tree(const Graph& g, int root);

// Vertices of the subtree rooted at v (v plus descendants), ascending.
std::vector<int> subtree_vertices(const RootedTree& t, int v);

// Walk `steps` edges from v toward the root.
int ancestor_at(const RootedTree& t, int v, int steps);

// Deepest vertex; ties broken by smallest id. Returns the root for a
// single-vertex tree.
int deepest_leaf(const RootedTree& t);

// A pruned piece with compacted ids; to_original maps new id -> old id.
struct PrunedPart {
    RootedTree tree;
    std::vector<int> to_original;
};

struct PruneResult {
    PrunedPart subtree;                   // rooted at the pruned vertex
    std::optional<PrunedPart> remainder;  // keeps the old root; empty iff v == root
};

PruneResult prune_subtree(const RootedTree& t, int v);

}  // namespace burn
