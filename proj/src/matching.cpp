// Copyright 2026 the kpp authors
// License: Apache License 2.0
#include "kpp/matching.hpp"

#include <algorithm>

#include "blossom_card.hpp"
#include "kpp/errors.hpp"

namespace kpp {

WeightedGraph::WeightedGraph(Graph g, std::vector<long long> w)
    : base(std::move(g)), weights(std::move(w)) {
    if ((int)weights.size() != base.num_edges())
        throw std::invalid_argument("weight vector size mismatch");
    for (long long x : weights)
        if (x < 0) throw std::invalid_argument("negative edge weight");
}

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::vector<char> hit(g.num_vertices(), 0);
    for (auto [u, v] : m.edges) {
        if (!g.has_edge(u, v)) return false;
        if (hit[u] || hit[v]) return false;
        hit[u] = hit[v] = 1;
    }
    return true;
}

Matching max_cardinality_matching(const Graph& g) {
    std::vector<std::vector<int>> adj(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) adj[v] = g.neighbors(v);
    CardinalityBlossom cb(std::move(adj));
    cb.run_maximum_matching();
    Matching m;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (cb.mate(v) > v) m.edges.push_back({v, cb.mate(v)});
    m.weight = (long long)m.edges.size();
    return m;
}

namespace {

void brute_rec(const WeightedGraph& wg, int idx, std::vector<char>& used, long long acc,
               std::vector<Edge>& cur, long long& best, std::vector<Edge>& best_edges) {
    const auto& es = wg.base.edges();
    if (idx == (int)es.size()) {
        if (acc > best) {
            best = acc;
            best_edges = cur;
        }
        return;
    }
    brute_rec(wg, idx + 1, used, acc, cur, best, best_edges);
    auto [u, v] = es[idx];
    if (!used[u] && !used[v]) {
        used[u] = used[v] = 1;
        cur.push_back(es[idx]);
        brute_rec(wg, idx + 1, used, acc + wg.weights[idx], cur, best, best_edges);
        cur.pop_back();
        used[u] = used[v] = 0;
    }
}

}  // namespace

Matching brute_force_matching(const WeightedGraph& wg) {
    if (wg.base.num_vertices() > 16)
        throw limit_error("brute_force_matching limited to 16 vertices");
    std::vector<char> used(wg.base.num_vertices(), 0);
    std::vector<Edge> cur, best_edges;
    long long best = -1;
    brute_rec(wg, 0, used, 0, cur, best, best_edges);
    Matching m;
    m.edges = std::move(best_edges);
    m.weight = best < 0 ? 0 : best;
    return m;
}

}  // namespace kpp
