#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "burn/graph.hpp"
#include "burn/rooted_tree.hpp"

namespace burn {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// k+1 disjoint paths of order `len` each; one endpoint of each of the k legs
// is joined to vertex 0, the designated endpoint of path 0. Order (k+1)*len.
// Vertex layout: path 0 occupies 0..len-1, leg i occupies i*len..(i+1)*len-1
// with i*len attached to the hub.
Graph spider(int k, int len);

// Seeded 64-bit generator (mt19937_64) with bit-portable bounded draws.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    std::uint64_t below(std::uint64_t n);  // uniform in [0, n), rejection sampled
    double unit();                         // uniform in [0, 1)

  private:
    struct State;
    std::uint64_t s_[312];  // mt19937_64 state exposed via <random>
    void* unused_ = nullptr;
};

std::uint64_t labeled_graph_count(int n);  // 2^C(n,2); requires C(n,2) <= 63
std::uint64_t labeled_tree_count(int n);   // n^(n-2)

// Graph whose edge set is the adjacency bitmask: bit t of `mask` is edge
// (i, j), pairs enumerated as (0,1),(0,2),(1,2),(0,3),...
Graph graph_from_mask(int n, std::uint64_t mask);

// Streams all labeled graphs on n vertices in increasing mask order.
class GraphEnumerator {
  public:
    explicit GraphEnumerator(int n, int cap = 7);
    bool next(Graph& out);
    std::uint64_t total() const { return total_; }

  private:
    int n_;
    std::uint64_t mask_ = 0;
    std::uint64_t total_;
};

// Decode a length-(n-2) sequence over [0, n) into tree edges.
std::vector<std::pair<int, int>> decode_tree_sequence(const std::vector<int>& seq);

// Streams all n^(n-2) labeled trees, rooted at vertex 0, in sequence order.
class TreeEnumerator {
  public:
    explicit TreeEnumerator(int n, int cap = 9);
    bool next(RootedTree& out);
    std::uint64_t total() const { return total_; }

  private:
    int n_;
    std::uint64_t index_ = 0;
    std::uint64_t total_;
};

// Uniform random labeled tree (random sequence decode), rooted at vertex 0.
RootedTree random_tree(int n, std::uint64_t seed);

// G(n, p) conditioned on connectivity by rejection; throws after the retry
// cap with "p too small for connectivity at this n".
Graph random_connected(int n, double p, std::uint64_t seed, int max_tries = 10000);

enum class Family {
    path,
    cycle,
    complete,
    spider,
    random_tree,
    random_connected,
    enumerate_graphs,
    enumerate_trees,
};

struct GenSpec {
    Family family = Family::path;
    std::vector<long long> params;
    double p = 0.0;
    std::uint64_t seed = 0;
};

// Parses CLI-style tokens, e.g. {"spider", "3", "2"} or
// {"random_connected", "20", "0.3", "42"}.
GenSpec parse_genspec(const std::vector<std::string>& args);

bool is_single_graph_family(Family f);
Graph generate(const GenSpec& spec);  // single-graph families only
std::string family_name(Family f);

}  // namespace burn
