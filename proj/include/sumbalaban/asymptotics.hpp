#pragma once

#include <cstdint>
#include <vector>

#include "sumbalaban/parallel.hpp"

namespace sumbalaban {

/// sum_{i=0}^{b} 1 / sqrt(i^2 + (b-i)^2), a Riemann sum for q_constant().
double riemann_q(std::int64_t b);

/// Q = sqrt(2) * ln(1 + sqrt(2)), the integral of 1/sqrt(x^2 + (1-x)^2)
/// over [0, 1].
double q_constant();

/// c = Q^(1/4): optimal balanced cliques have about c * sqrt(n) vertices.
double clique_coefficient();

/// 2 sqrt(Q) + 1 + Q, the minimum over c of c^2 + 1 + Q + Q/c^2.
double sj_limit();

/// 2 sqrt(n / (n-1)), a lower bound on SJ for connected graphs with n >= 4.
double lower_bound_simple(std::int64_t n);

struct TracePoint {
    std::int64_t n = 0;
    std::int64_t a_star = 0;
    std::int64_t b = 0;
    double sj_star = 0.0;
    double ratio = 0.0;  ///< a_star / sqrt(n)
};

/// Best balanced dumbbell D_{a,n-2a} over every a >= 1 with n - 2a >= 1.
/// Exact: candidates are visited in order of a cheap lower bound and the
/// scan stops once that bound exceeds the best value found. Ties go to the
/// smaller a.
TracePoint balanced_optimum(std::int64_t n);

struct AsymptoticsReport {
    double q_constant = 0.0;
    double clique_coefficient = 0.0;
    double sj_limit = 0.0;
    std::vector<TracePoint> traces;
};

/// Balanced optimum for each n (n >= 10), in the order given.
AsymptoticsReport convergence_study(const std::vector<std::int64_t>& ns,
                                    std::size_t threads = default_thread_count());

}  // namespace sumbalaban
