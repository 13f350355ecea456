#pragma once

// Independent reference implementations used only by the tests. None of these
// share code with the library paths they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "sumbalaban/graph.hpp"

namespace oracle {

using sumbalaban::Edge;
using sumbalaban::Graph;
using sumbalaban::Vertex;

/// All-pairs distances by Floyd-Warshall on an adjacency matrix.
inline std::vector<std::vector<long long>> floyd_distances(const Graph& g) {
    const std::size_t n = g.order();
    const long long inf = 1LL << 40;
    std::vector<std::vector<long long>> d(n, std::vector<long long>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline std::vector<long long> floyd_transmissions(const Graph& g) {
    const auto d = floyd_distances(g);
    std::vector<long long> w(g.order(), 0);
    for (std::size_t i = 0; i < g.order(); ++i) w[i] = std::accumulate(d[i].begin(), d[i].end(), 0LL);
    return w;
}

/// Wiener index by direct summation over unordered pairs.
inline long long wiener_pairs(const Graph& g) {
    const auto d = floyd_distances(g);
    long long s = 0;
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = i + 1; j < g.order(); ++j) s += d[i][j];
    return s;
}

/// Isomorphism classes of all labelled graphs on n <= 7 vertices.
///
/// Every labelled graph is an upper-triangle bit code. Codes are visited in
/// increasing order; an unseen code starts a new class and all of its images
/// under the n! permutations are marked seen.
struct BruteForceClasses {
    std::vector<Graph> all;        ///< one representative per class
    std::vector<Graph> connected;  ///< representatives of connected classes
};

inline BruteForceClasses brute_force_classes(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
    const std::size_t bits = pairs.size();
    std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
    for (std::size_t k = 0; k < bits; ++k) index[pairs[k].first][pairs[k].second] = index[pairs[k].second][pairs[k].first] = k;

    std::vector<std::vector<std::size_t>> perm_maps;
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    do {
        std::vector<std::size_t> m(bits);
        for (std::size_t k = 0; k < bits; ++k) m[k] = index[p[pairs[k].first]][p[pairs[k].second]];
        perm_maps.push_back(std::move(m));
    } while (std::next_permutation(p.begin(), p.end()));

    BruteForceClasses out;
    std::vector<bool> seen(std::size_t{1} << bits, false);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        if (seen[code]) continue;
        for (const auto& m : perm_maps) {
            std::uint64_t img = 0;
            for (std::size_t k = 0; k < bits; ++k)
                if ((code >> k) & 1U) img |= std::uint64_t{1} << m[k];
            seen[img] = true;
        }
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < bits; ++k)
            if ((code >> k) & 1U) edges.push_back({pairs[k].first, pairs[k].second});
        auto g = Graph::from_edge_list(n, edges);
        // Connectivity by union-find, independent of the library BFS.
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t components = n;
        for (const auto& e : edges) {
            const auto a = find(e.u), b = find(e.v);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
        if (components <= 1) out.connected.push_back(g);
        out.all.push_back(std::move(g));
    }
    return out;
}

/// Isomorphism by trying every permutation (small n only).
inline bool isomorphic_by_permutation(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    std::vector<Vertex> p(g.order());
    std::iota(p.begin(), p.end(), Vertex{0});
    do {
        if (g.relabeled(p) == h) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (coin(rng)) edges.push_back({i, j});
    return Graph::from_edge_list(n, edges);
}

/// Random connected graph: a random spanning tree plus random extra edges.
inline Graph random_connected_graph(std::size_t n, double density, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> pick(0, v - 1);
        edges.push_back({pick(rng), v});
    }
    std::bernoulli_distribution coin(density);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (coin(rng)) edges.push_back({i, j});
    return Graph::from_edge_list(n, edges);
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace oracle
