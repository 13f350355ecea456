#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sumbalaban/graph.hpp"

namespace sumbalaban {

/// Parameters of the dumbbell-like graph D^ell_{a,b,a'}.
///
/// Vertex layout of the constructed graph: the left clique K_a occupies
/// 0..a-1, the path v_0..v_{b-1} occupies a..a+b-1, and the right clique
/// K'_{a'} occupies a+b..n-1. Every vertex of K_a is joined to v_0 and every
/// vertex of K'_{a'} to v_{b-1}.
///
/// ell > 0 adds the edges v_1-u for the ell lowest-indexed u in K_a;
/// ell < 0 drops the edges v_{b-1}-u for the -ell highest-indexed u in K'.
struct DumbbellSpec {
    std::int64_t a = 0;
    std::int64_t b = 1;
    std::int64_t a_prime = 0;
    std::int64_t ell = 0;

    std::int64_t order() const noexcept { return a + b + a_prime; }
    std::int64_t edge_count() const noexcept;

    friend bool operator==(const DumbbellSpec&, const DumbbellSpec&) = default;
};

/// Throws std::invalid_argument unless: a >= 0, b >= 1, a' >= a, n >= 2, and
/// ell is 0 or lies in [-(a'-1), a] with b >= 2 whenever ell > 0.
void validate(const DumbbellSpec& spec);
bool is_feasible(const DumbbellSpec& spec) noexcept;

/// Feasible ell values for (a, b, a'), ascending.
std::vector<std::int64_t> feasible_ells(std::int64_t a, std::int64_t b, std::int64_t a_prime);

Graph make_dumbbell(const DumbbellSpec& spec);
Graph make_dumbbell_like(const DumbbellSpec& spec);

/// Transmissions of the balanced dumbbell D_{a,b} as given in closed form:
///   w(u)   = b^2/2 + ab + b/2 + 2a - 1           for u in either clique,
///   w(v_i) = i^2/2 + (b-i)^2/2 + ab - b/2 + i + a for path vertices.
struct BalancedTransmissions {
    double w_clique = 0.0;
    std::vector<double> w_path;
};

BalancedTransmissions closed_form_transmissions(std::int64_t a, std::int64_t b);

/// Exact transmissions of D^ell_{a,b,a'} in the make_dumbbell_like layout,
/// computed from distance casework in O(n) without building the graph.
TransmissionVector dumbbell_transmissions(const DumbbellSpec& spec);

/// SJ(D^ell_{a,b,a'}) in O(n) time and memory.
double sj_dumbbell(const DumbbellSpec& spec);

struct DumbbellOptimum {
    DumbbellSpec spec;
    double value = 0.0;
};

/// Arg-min of sj_dumbbell over dumbbells (ell = 0) on n vertices with a >= 1.
/// near_balanced_only restricts to a' in {a, a+1}; otherwise every a <= a'
/// with b >= 1 is scanned. allow_empty_clique also admits a = 0. Ties go to
/// the smaller a, then the smaller a'.
DumbbellOptimum optimal_dumbbell(std::int64_t n, bool near_balanced_only, bool allow_empty_clique = false);

struct TwoStepResult {
    DumbbellOptimum dumbbell;  ///< step (i): best near-balanced dumbbell
    DumbbellOptimum like;      ///< step (ii): best ell for that (a, b, a')
    /// Another ell gives a value that is indistinguishable at 4 decimals.
    bool displayed_tie = false;
};

/// Step (i) near-balanced dumbbell optimum, then the best ell for it. Ties
/// prefer ell = 0, then the smaller |ell|, then the smaller ell.
TwoStepResult two_step_optimum(std::int64_t n);

/// Minimum of sj_dumbbell over every feasible (a, b, a', ell) on n vertices.
DumbbellOptimum optimal_dumbbell_like(std::int64_t n, bool allow_empty_clique = false);

/// Every feasible spec on n vertices, (a, a', ell) ascending.
std::vector<DumbbellSpec> all_dumbbell_like_specs(std::int64_t n, bool allow_empty_clique = true);

/// "a,b,a',ell"
std::string to_csv(const DumbbellSpec& spec);
DumbbellSpec parse_spec_csv(std::string_view text);

}  // namespace sumbalaban
