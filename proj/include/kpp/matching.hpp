// Copyright 2026 the kpp authors
// License: Apache License 2.0
#pragma once

#include <vector>

#include "kpp/graph.hpp"

namespace kpp {

// Edge-weighted graph; weights are aligned with base.edges() order.
struct WeightedGraph {
    Graph base;
    std::vector<long long> weights;  // non-negative

    WeightedGraph() = default;
    WeightedGraph(Graph g, std::vector<long long> w);
    long long weight_of(int edge_index) const { return weights[edge_index]; }
};

struct Matching {
    std::vector<Edge> edges;
    long long weight = 0;
};

// Exact maximum-weight matching (maximum total weight, not maximum
// cardinality). Integer primal-dual blossom algorithm; O(V^3).
Matching max_weight_matching(const WeightedGraph& wg);

// Exact maximum-cardinality matching (Edmonds blossom search).
Matching max_cardinality_matching(const Graph& g);

// Test oracle: exact optimum by enumeration over independent edge sets.
// Guarded to |V| <= 16.
Matching brute_force_matching(const WeightedGraph& wg);

// Structural check used by tests and internal assertions.
bool is_valid_matching(const Graph& g, const Matching& m);

}  // namespace kpp
