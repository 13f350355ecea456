#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumbalaban/graph.hpp"

namespace sumbalaban {

/// Hard ceiling on the order handled by the generator.
inline constexpr std::size_t kMaxEnumerationOrder = 16;
/// Above this order the edge window must be tight (max_edges <= 2n).
inline constexpr std::size_t kMaxUnconstrainedOrder = 12;

class ResourceGuardExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Window of connected graphs to generate: order n, edge count in
/// [min_edges, max_edges], every degree at most max_degree.
struct SearchConstraints {
    std::size_t n = 1;
    std::size_t min_edges = 0;
    std::size_t max_edges = 0;
    std::size_t max_degree = 0;

    /// n-1 <= m <= C(n,2), degree cap n-1.
    static SearchConstraints defaults(std::size_t n);

    /// Throws std::invalid_argument on an inconsistent window and
    /// ResourceGuardExceeded when the window is too large to enumerate.
    void validate() const;

    /// True iff g is connected and fits the window.
    bool admits(const Graph& g) const;

    std::string describe() const;

    friend bool operator==(const SearchConstraints&, const SearchConstraints&) = default;
};

/// Root of an independent generation subtree: a connected graph on
/// `rows.size()` vertices that the generator accepted at that depth.
struct WorkUnit {
    std::vector<std::uint64_t> rows;
};

using GraphVisitor = std::function<void(const Graph&)>;

/// Emits one graph per isomorphism class of connected graphs in the window,
/// in a fixed order. Generation adds one vertex at a time and keeps a child
/// only when the new vertex lies in the canonical orbit of non-cut vertices
/// of minimum (degree, neighbour-degree sum), with siblings deduplicated by
/// the parent's automorphism group. No set of seen graphs is kept.
std::uint64_t generate_connected(const SearchConstraints& c, const GraphVisitor& visit);

/// Subtree roots at depth min(depth, n), in emission order. Running
/// generate_from on each unit in order emits exactly what
/// generate_connected emits.
std::vector<WorkUnit> split_generation(const SearchConstraints& c, std::size_t depth);

std::uint64_t generate_from(const SearchConstraints& c, const WorkUnit& unit, const GraphVisitor& visit);

}  // namespace sumbalaban
