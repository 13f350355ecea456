#pragma once

#include "sumbalaban/graph.hpp"

namespace sumbalaban {

// Both indices share the prefactor m / (m - n + 2); for a connected graph the
// denominator is the cyclomatic number plus one, so it is at least 1.
//
// Edges are summed in lexicographic (u < v) order, which makes results
// bit-reproducible for a given labelling.

/// SJ(G) = m/(m-n+2) * sum over edges uv of 1/sqrt(w(u) + w(v)).
double sum_balaban(const Graph& g);
double sum_balaban(const Graph& g, const TransmissionVector& w);

/// J(G) = m/(m-n+2) * sum over edges uv of 1/sqrt(w(u) * w(v)).
double balaban(const Graph& g);
double balaban(const Graph& g, const TransmissionVector& w);

enum class IndexKind { sum_balaban, balaban };

double evaluate_index(IndexKind kind, const Graph& g);

const char* index_name(IndexKind kind);

}  // namespace sumbalaban
