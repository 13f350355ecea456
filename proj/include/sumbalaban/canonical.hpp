#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sumbalaban/graph.hpp"

namespace sumbalaban {

/// Canonical labelling works on single-word adjacency rows and emits graph6.
inline constexpr std::size_t kCanonicalMaxOrder = 62;

struct CanonicalLabeling {
    /// label[v] is the position of v in the canonical ordering.
    std::vector<Vertex> label;
    /// Rows of the canonically relabelled graph.
    std::vector<std::uint64_t> canonical_rows;
    /// Automorphisms discovered during the search; they generate Aut(G).
    std::vector<std::vector<Vertex>> generators;
    /// orbit[v] is the smallest vertex in the Aut(G)-orbit of v.
    std::vector<Vertex> orbit;
};

/// Individualisation-refinement: equitable partition refinement, then a
/// depth-first search over individualised vertices, pruned by automorphisms
/// that fix the current prefix. The canonical graph is the lexicographically
/// smallest leaf (row by row).
CanonicalLabeling canonical_labeling(std::span<const std::uint64_t> rows);
CanonicalLabeling canonical_labeling(const Graph& g);

/// Graph6 string of the canonical relabelling. Equal iff isomorphic.
struct CanonicalForm {
    std::string graph6;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace sumbalaban
