#include "sumbalaban/indices.hpp"

#include <cmath>
#include <stdexcept>

namespace sumbalaban {

namespace {

double prefactor(const Graph& g) {
    const auto n = static_cast<double>(g.order());
    const auto m = static_cast<double>(g.size());
    return m / (m - n + 2.0);
}

void require_indexable(const Graph& g, const TransmissionVector& w) {
    if (g.order() < 2) throw std::invalid_argument("index needs a connected graph with at least 2 vertices");
    if (w.size() != g.order()) throw std::invalid_argument("transmission vector size differs from graph order");
}

template <class Term>
double edge_sum(const Graph& g, const TransmissionVector& w, Term term) {
    double sum = 0.0;
    for (Vertex u = 0; u < g.order(); ++u) {
        g.for_each_neighbor(u, [&](Vertex v) {
            if (u < v) sum += term(static_cast<double>(w[u]), static_cast<double>(w[v]));
        });
    }
    return sum;
}

}  // namespace

double sum_balaban(const Graph& g, const TransmissionVector& w) {
    require_indexable(g, w);
    return prefactor(g) * edge_sum(g, w, [](double a, double b) { return 1.0 / std::sqrt(a + b); });
}

double balaban(const Graph& g, const TransmissionVector& w) {
    require_indexable(g, w);
    return prefactor(g) * edge_sum(g, w, [](double a, double b) { return 1.0 / std::sqrt(a * b); });
}

double sum_balaban(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("sum-Balaban index needs at least 2 vertices");
    return sum_balaban(g, transmissions(g));
}

double balaban(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("Balaban index needs at least 2 vertices");
    return balaban(g, transmissions(g));
}

double evaluate_index(IndexKind kind, const Graph& g) {
    return kind == IndexKind::sum_balaban ? sum_balaban(g) : balaban(g);
}

const char* index_name(IndexKind kind) { return kind == IndexKind::sum_balaban ? "sum-balaban" : "balaban"; }

}  // namespace sumbalaban
