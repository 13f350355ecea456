#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumbalaban/dumbbell.hpp"
#include "sumbalaban/enumerate.hpp"
#include "sumbalaban/indices.hpp"
#include "sumbalaban/parallel.hpp"

namespace sumbalaban {

/// Graphs whose index is within this absolute distance of the minimum are
/// all kept as witnesses.
inline constexpr double kWitnessTolerance = 1e-9;

struct SearchResult {
    IndexKind index = IndexKind::sum_balaban;
    double best_value = 0.0;
    /// Canonical graph6 strings, sorted and distinct.
    std::vector<std::string> witnesses;
    std::uint64_t examined = 0;
    SearchConstraints constraints;
};

/// Exact minimum of the index over every connected class in the window.
/// Work is split into generation subtrees and merged in a fixed order, so
/// the result does not depend on the thread count.
SearchResult min_index_search(const SearchConstraints& c, IndexKind kind, std::size_t threads);

SearchResult min_sj_search(const SearchConstraints& c, std::size_t threads = default_thread_count());

/// Search window used for the published extremal pictures: the full space
/// for n <= 10; degree at most 5 with n <= m <= 22 for n = 11, 12; degree
/// at most 5 with 15 <= m <= 20 for n = 13, 14.
SearchConstraints figure_constraints(std::size_t n);

/// True iff some witness of the figure search for n is isomorphic to
/// `reference`. Requires 3 <= n <= 14.
bool verify_figure(std::size_t n, const Graph& reference, std::size_t threads = default_thread_count());

bool result_contains(const SearchResult& result, const Graph& g);

/// A drawn extremal graph: named vertices, solid edges, and dotted edges.
/// The dotted edges belong to the sum-Balaban minimiser; dropping them gives
/// the Balaban minimiser.
struct FigureFixture {
    std::size_t n = 0;
    std::string panel;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> solid;
    std::vector<std::pair<std::string, std::string>> dotted;
    /// Optional override of the search window for this drawing.
    std::optional<SearchConstraints> constraints;

    Graph sum_balaban_graph() const;
    Graph balaban_graph() const;
};

/// Reads the JSON fixture file. Throws std::runtime_error on I/O or format
/// problems, including unknown vertex names and wrong vertex counts.
std::vector<FigureFixture> load_figure_fixtures(const std::string& path);

struct C1Entry {
    std::int64_t n = 0;
    DumbbellOptimum best;  ///< full scan with a >= 1
    bool near_balanced = false;
    DumbbellOptimum best_with_empty;  ///< full scan allowing a = 0
    bool near_balanced_with_empty = false;
};

/// For every n in [n_lo, n_hi], whether the unrestricted dumbbell minimiser
/// has a' in {a, a+1}. Both the a >= 1 and the a >= 0 regimes are reported.
std::vector<C1Entry> conjecture_c1_scan(std::int64_t n_lo, std::int64_t n_hi,
                                        std::size_t threads = default_thread_count());

struct C3Report {
    std::size_t n = 0;
    SearchResult global;
    DumbbellOptimum best_like;  ///< over every dumbbell-like spec, a >= 0
    double gap = 0.0;           ///< best_like.value - global.best_value
    /// A dumbbell-like spec isomorphic to some global witness, if any.
    std::optional<DumbbellSpec> witness_spec;
};

/// Global exhaustive minimum against the best dumbbell-like graph, for
/// 2 <= n <= 10.
C3Report conjecture_c3_spotcheck(std::size_t n, std::size_t threads = default_thread_count());

}  // namespace sumbalaban
