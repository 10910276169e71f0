// Copyright 2026 the kpp authors
// License: Apache License 2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kpp {

using Edge = std::pair<int, int>;  // normalized u < v

// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
// construction; neighbor lists are sorted ascending so every algorithm
// downstream iterates in a fixed order.
class Graph {
public:
    Graph() = default;
    // Deduplicates edges; throws format_error on self-loops or ids out of range.
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return (int)edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return (int)adj_[v].size(); }
    bool has_edge(int u, int v) const;

    std::string serialize() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;            // sorted lexicographically
    std::vector<std::vector<int>> adj_;  // sorted ascending
};

// Relabeling between an induced subgraph and its parent graph.
struct VertexMapping {
    std::vector<int> forward;  // sub vertex -> parent vertex (injective)
    std::vector<int> inverse;  // parent vertex -> sub vertex, or -1
};

// Parses the edge-list text format: first non-comment line "n m", then one
// "u v" line per edge; '#' starts a comment; duplicate edges collapse.
Graph parse_edge_list(const std::string& text);

// Subgraph induced by `keep` (need not be sorted; duplicates rejected).
std::pair<Graph, VertexMapping> induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Vertex sets of connected components, each sorted, ordered by minimum vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

struct FamilySpec {
    enum class Kind { gnp, cycles_plus_chords, planted_cover };
    Kind kind = Kind::gnp;
    double p = 0.5;  // gnp only
    int k = 9;       // planted_cover only

    static FamilySpec gnp(double p) { return {Kind::gnp, p, 0}; }
    static FamilySpec cycles_plus_chords() { return {Kind::cycles_plus_chords, 0.0, 0}; }
    static FamilySpec planted_cover(int k) { return {Kind::planted_cover, 0.0, k}; }
    // "gnp:0.3" | "cycles_plus_chords" | "planted_cover:9"
    static FamilySpec parse(const std::string& text);
    std::string str() const;
};

// Deterministic for fixed (n, family, seed) on every platform.
Graph random_graph(int n, const FamilySpec& family, std::uint64_t seed);

}  // namespace kpp
