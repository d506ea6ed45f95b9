#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bne {

// A k-simplex stored as its strictly increasing vertex list. A k-simplex has
// k+1 vertices and corresponds to a (k+1)-clique of the underlying graph.
struct Simplex {
    std::vector<int> vertices;

    Simplex() = default;
    explicit Simplex(std::vector<int> v);

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    std::uint64_t mask() const;
    static Simplex from_mask(std::uint64_t mask);

    bool operator==(const Simplex&) const = default;
};

struct MultipartiteSpec {
    int clusters = 0;
    int cluster_size = 0;
};

// Simple undirected graph on vertices 0..n-1, n <= 64. Adjacency is kept as
// one 64-bit neighbour mask per vertex so clique tests are a few AND ops.
class Graph {
public:
    explicit Graph(int n);

    int n() const { return n_; }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    std::size_t edge_count() const;
    std::uint64_t neighbours(int v) const { return adj_[v]; }

    // true iff every pair of vertices in `mask` is adjacent
    bool is_clique_mask(std::uint64_t mask) const;

    const std::optional<MultipartiteSpec>& partite() const { return partite_; }

private:
    friend Graph complete_multipartite(int clusters, int cluster_size);
    int n_;
    std::vector<std::uint64_t> adj_;
    std::optional<MultipartiteSpec> partite_;
};

// Complete (clusters)-partite graph with equally sized clusters; vertices
// c*cluster_size .. (c+1)*cluster_size-1 form cluster c, and two vertices are
// adjacent iff they lie in different clusters.
Graph complete_multipartite(int clusters, int cluster_size);

bool is_clique(const Graph& g, const Simplex& s);

// All k-simplices of the clique complex, in lexicographic vertex-list order.
std::vector<Simplex> enumerate_k_simplices(const Graph& g, int k);

// Edge-list file: one "u v" pair per line, '#' starts a comment, blank lines
// ignored; vertices are 0-based and n is max index + 1.
Graph load_edge_list(const std::string& path);

// "multipartite:<clusters>x<cluster_size>" or a path to an edge-list file.
Graph parse_graph_spec(const std::string& spec);

}  // namespace bne
