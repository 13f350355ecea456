#include "sumbalaban/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sumbalaban/dumbbell.hpp"

namespace sumbalaban {

double riemann_q(std::int64_t b) {
    if (b < 1) throw std::invalid_argument("riemann_q needs b >= 1");
    double sum = 0.0;
    for (std::int64_t i = 0; i <= b; ++i) {
        const auto x = static_cast<double>(i);
        const auto y = static_cast<double>(b - i);
        sum += 1.0 / std::sqrt(x * x + y * y);
    }
    return sum;
}

double q_constant() { return std::sqrt(2.0) * std::log1p(std::sqrt(2.0)); }

double clique_coefficient() { return std::sqrt(std::sqrt(q_constant())); }

double sj_limit() {
    const double q = q_constant();
    return 2.0 * std::sqrt(q) + 1.0 + q;
}

double lower_bound_simple(std::int64_t n) {
    if (n < 4) throw std::invalid_argument("the bound 2 sqrt(n/(n-1)) is stated for n >= 4");
    const auto x = static_cast<double>(n);
    return 2.0 * std::sqrt(x / (x - 1.0));
}

namespace {

// Every edge term is at least 1/sqrt(2 w_max), and in D_{a,b} the clique
// vertices have the largest transmission.
double balanced_lower_bound(std::int64_t a, std::int64_t b) {
    const auto m = static_cast<double>(a * a + a + b - 1);
    const auto cyclomatic = static_cast<double>(a * a - a + 1);
    const auto w_clique = static_cast<double>((b * b + b) / 2 + a * b + 2 * a - 1);
    return m / cyclomatic * m / std::sqrt(2.0 * w_clique);
}

}  // namespace

TracePoint balanced_optimum(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("balanced dumbbells need n >= 3");
    std::vector<std::pair<double, std::int64_t>> order;
    for (std::int64_t a = 1; 2 * a + 1 <= n; ++a) order.emplace_back(balanced_lower_bound(a, n - 2 * a), a);
    std::sort(order.begin(), order.end());

    TracePoint best;
    best.n = n;
    best.sj_star = HUGE_VAL;
    for (const auto& [bound, a] : order) {
        // The margin absorbs rounding in both the bound and the exact value.
        if (bound > best.sj_star * (1.0 + 1e-9)) break;
        const double v = sj_dumbbell({a, n - 2 * a, a, 0});
        if (v < best.sj_star || (v == best.sj_star && a < best.a_star)) {
            best.sj_star = v;
            best.a_star = a;
        }
    }
    best.b = n - 2 * best.a_star;
    best.ratio = static_cast<double>(best.a_star) / std::sqrt(static_cast<double>(n));
    return best;
}

AsymptoticsReport convergence_study(const std::vector<std::int64_t>& ns, std::size_t threads) {
    for (const auto n : ns) {
        if (n < 10) throw std::invalid_argument("convergence study needs n >= 10, got " + std::to_string(n));
    }
    AsymptoticsReport r;
    r.q_constant = q_constant();
    r.clique_coefficient = clique_coefficient();
    r.sj_limit = sj_limit();
    r.traces.resize(ns.size());
    parallel_for(ns.size(), threads, [&](std::size_t i) { r.traces[i] = balanced_optimum(ns[i]); });
    return r;
}

}  // namespace sumbalaban
