#include "bne/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bne {

Simplex::Simplex(std::vector<int> v) : vertices(std::move(v)) {
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (vertices[i] >= vertices[i + 1]) {
            throw std::invalid_argument("simplex vertices must be strictly increasing");
        }
    }
}

std::uint64_t Simplex::mask() const {
    std::uint64_t m = 0;
    for (int v : vertices) m |= std::uint64_t{1} << v;
    return m;
}

Simplex Simplex::from_mask(std::uint64_t mask) {
    Simplex s;
    while (mask) {
        const int v = std::countr_zero(mask);
        s.vertices.push_back(v);
        mask &= mask - 1;
    }
    return s;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
    if (n < 1 || n > 64) {
        throw std::invalid_argument("graph must have between 1 and 64 vertices");
    }
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

bool Graph::has_edge(int u, int v) const {
    return (adj_[u] >> v) & 1;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto m : adj_) twice += std::popcount(m);
    return twice / 2;
}

bool Graph::is_clique_mask(std::uint64_t mask) const {
    std::uint64_t rest = mask;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        // v must be adjacent to every remaining (higher) vertex of the mask
        if ((adj_[v] & rest) != rest) return false;
    }
    return true;
}

Graph complete_multipartite(int clusters, int cluster_size) {
    if (clusters < 1 || cluster_size < 1) {
        throw std::invalid_argument("multipartite parameters must be positive");
    }
    Graph g(clusters * cluster_size);
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (u / cluster_size != v / cluster_size) g.add_edge(u, v);
        }
    }
    g.partite_ = MultipartiteSpec{clusters, cluster_size};
    return g;
}

bool is_clique(const Graph& g, const Simplex& s) {
    for (int v : s.vertices) {
        if (v < 0 || v >= g.n()) return false;
    }
    return g.is_clique_mask(s.mask());
}

namespace {

void extend_cliques(const Graph& g, std::vector<int>& cur, std::uint64_t cand,
                    int want, std::vector<Simplex>& out) {
    if (static_cast<int>(cur.size()) == want) {
        out.push_back(Simplex(cur));
        return;
    }
    while (cand) {
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        cur.push_back(v);
        extend_cliques(g, cur, cand & g.neighbours(v), want, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Simplex> enumerate_k_simplices(const Graph& g, int k) {
    if (k < 0 || k >= g.n()) {
        throw std::invalid_argument("k must satisfy 0 <= k < n");
    }
    std::vector<Simplex> out;
    std::vector<int> cur;
    const std::uint64_t all =
        g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    extend_cliques(g, cur, all, k + 1, out);
    return out;  // DFS over increasing vertices emits lex order directly
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    std::vector<std::pair<int, int>> edges;
    int max_v = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v)) {
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected two vertex indices");
        }
        std::string extra;
        if (ls >> extra) {
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": trailing tokens");
        }
        if (u < 0 || v < 0) {
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": vertices must be non-negative");
        }
        if (u == v) {
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": self-loop");
        }
        edges.emplace_back(u, v);
        max_v = std::max({max_v, u, v});
    }
    if (edges.empty()) throw std::invalid_argument("edge list has no edges: " + path);
    Graph g(max_v + 1);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph parse_graph_spec(const std::string& spec) {
    const std::string prefix = "multipartite:";
    if (spec.rfind(prefix, 0) == 0) {
        const std::string body = spec.substr(prefix.size());
        const auto x = body.find('x');
        if (x == std::string::npos) {
            throw std::invalid_argument("bad multipartite spec: " + spec);
        }
        int clusters = 0, size = 0;
        try {
            std::size_t p1 = 0, p2 = 0;
            clusters = std::stoi(body.substr(0, x), &p1);
            size = std::stoi(body.substr(x + 1), &p2);
            if (p1 != x || p2 != body.size() - x - 1) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad multipartite spec: " + spec);
        }
        return complete_multipartite(clusters, size);
    }
    return load_edge_list(spec);
}

}  // namespace bne
