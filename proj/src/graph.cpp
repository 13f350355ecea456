#include "sumbalaban/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sumbalaban {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

void Graph::set_edge(Vertex u, Vertex v) {
    auto& wu = bits_[u * words_ + v / 64];
    const std::uint64_t mu = std::uint64_t{1} << (v % 64);
    if ((wu & mu) != 0) return;
    wu |= mu;
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++m_;
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") has an endpoint outside 0.." + std::to_string(n) + "-1");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        }
        g.set_edge(e.u, e.v);
    }
    return g;
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
    const std::size_t n = rows.size();
    if (n > 64) throw std::invalid_argument("from_rows supports at most 64 vertices");
    Graph g(n);
    const std::uint64_t valid = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::size_t degree_sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t r = rows[i];
        if ((r & ~valid) != 0 || ((r >> i) & 1U) != 0) {
            throw std::invalid_argument("adjacency row " + std::to_string(i) + " is out of range or has a loop");
        }
        for (std::uint64_t w = r; w != 0; w &= w - 1) {
            const auto j = static_cast<std::size_t>(__builtin_ctzll(w));
            if (((rows[j] >> i) & 1U) == 0) throw std::invalid_argument("adjacency rows are not symmetric");
        }
        g.bits_[i] = r;
        degree_sum += static_cast<std::size_t>(__builtin_popcountll(r));
    }
    g.m_ = degree_sum / 2;
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
    return ((bits_[u * words_ + v / 64] >> (v % 64)) & 1U) != 0;
}

std::size_t Graph::degree(Vertex v) const {
    if (v >= n_) throw std::out_of_range("vertex index out of range");
    std::size_t d = 0;
    for (const auto w : row(v)) d += static_cast<std::size_t>(__builtin_popcountll(w));
    return d;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
        for_each_neighbor(u, [&](Vertex v) {
            if (u < v) out.push_back({u, v});
        });
    }
    return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
    std::vector<std::size_t> d(n_);
    for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != n_) throw std::invalid_argument("permutation size differs from graph order");
    std::vector<bool> seen(n_, false);
    for (const auto p : perm) {
        if (p >= n_ || seen[p]) throw std::invalid_argument("relabeling is not a permutation");
        seen[p] = true;
    }
    Graph g(n_);
    for (const auto& e : edges()) g.set_edge(perm[e.u], perm[e.v]);
    return g;
}

std::uint64_t TransmissionVector::total() const {
    return std::accumulate(values.begin(), values.end(), std::uint64_t{0});
}

Graph from_edge_list(std::size_t n, std::span<const Edge> edges) { return Graph::from_edge_list(n, edges); }

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    const std::size_t n = g.order();
    std::vector<int> dist(n, -1);
    if (source >= n) throw std::out_of_range("BFS source out of range");
    std::vector<Vertex> queue;
    queue.reserve(n);
    queue.push_back(source);
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        g.for_each_neighbor(x, [&](Vertex y) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        });
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    const auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

TransmissionVector transmissions(const Graph& g) {
    const std::size_t n = g.order();
    const std::size_t words = g.words_per_row();
    TransmissionVector tv{std::vector<std::uint64_t>(n, 0)};

    // Level-synchronous BFS over bitsets: the next frontier is the union of
    // the frontier's rows minus everything already visited.
    std::vector<std::uint64_t> visited(words), frontier(words), next(words);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(visited.begin(), visited.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        visited[s / 64] = frontier[s / 64] = std::uint64_t{1} << (s % 64);
        std::size_t reached = 1;
        std::uint64_t sum = 0;
        for (std::uint64_t level = 1; reached < n; ++level) {
            std::fill(next.begin(), next.end(), 0);
            for (std::size_t w = 0; w < words; ++w) {
                for (std::uint64_t f = frontier[w]; f != 0; f &= f - 1) {
                    const auto x = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(f)));
                    const auto r = g.row(x);
                    for (std::size_t k = 0; k < words; ++k) next[k] |= r[k];
                }
            }
            std::size_t added = 0;
            for (std::size_t k = 0; k < words; ++k) {
                next[k] &= ~visited[k];
                visited[k] |= next[k];
                added += static_cast<std::size_t>(__builtin_popcountll(next[k]));
            }
            if (added == 0) {
                throw DisconnectedGraph("transmissions: vertex " + std::to_string(s) +
                                        " does not reach every vertex");
            }
            reached += added;
            sum += level * added;
            frontier.swap(next);
        }
        tv.values[s] = sum;
    }
    return tv;
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i < n; ++i) e.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
    return Graph::from_edge_list(n, e);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    return Graph::from_edge_list(n, e);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph::from_edge_list(n, e);
}

Graph star_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 1; i < n; ++i) e.push_back({0, i});
    return Graph::from_edge_list(n, e);
}

}  // namespace sumbalaban
