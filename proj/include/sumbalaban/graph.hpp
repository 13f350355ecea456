#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace sumbalaban {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown when an operation needs a connected graph and does not get one.
class DisconnectedGraph : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as one bitset row per vertex, packed into 64-bit words,
/// so edge tests are O(1) and neighbourhood scans are word-parallel. A Graph
/// is immutable once built.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    /// Duplicate pairs and both orientations collapse to one edge. Throws
    /// std::invalid_argument on an out-of-range endpoint or a self-loop.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

    /// Single-word rows, bit j of rows[i] set iff i~j. Requires n <= 64 and a
    /// symmetric, loop-free relation (checked).
    static Graph from_rows(std::span<const std::uint64_t> rows);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool has_edge(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::size_t max_degree() const;

    std::span<const std::uint64_t> row(Vertex v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    /// First word of a row; the whole row when n <= 64.
    std::uint64_t row_word(Vertex v) const { return bits_[static_cast<std::size_t>(v) * words_]; }

    template <class F>
    void for_each_neighbor(Vertex v, F&& f) const {
        const auto r = row(v);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t word = r[w];
            while (word != 0) {
                const int bit = __builtin_ctzll(word);
                f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)));
                word &= word - 1;
            }
        }
    }

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    std::vector<std::size_t> degree_sequence() const;

    /// Vertex v of this graph becomes vertex perm[v] of the result.
    Graph relabeled(std::span<const Vertex> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    void set_edge(Vertex u, Vertex v);

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Per-vertex distance sums w(v) = sum_x dist(v, x).
struct TransmissionVector {
    std::vector<std::uint64_t> values;

    std::uint64_t operator[](Vertex v) const { return values[v]; }
    std::size_t size() const noexcept { return values.size(); }
    std::uint64_t total() const;

    friend bool operator==(const TransmissionVector&, const TransmissionVector&) = default;
};

Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

bool is_connected(const Graph& g);

/// BFS from every vertex. Throws DisconnectedGraph if some vertex is
/// unreachable.
TransmissionVector transmissions(const Graph& g);

/// Breadth-first distances from one source; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Common shapes used throughout the tests and tools.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t n);

}  // namespace sumbalaban
