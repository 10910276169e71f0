// Copyright 2026 the kpp authors
// License: Apache License 2.0
#pragma once

#include <vector>

namespace kpp {

// Edmonds blossom search on an unweighted graph, array-based with base[]
// contraction. Supports two uses:
//  - plain maximum-cardinality matching (augment from every exposed vertex);
//  - a matching-matroid independence oracle: try_cover(x) extends the
//    current matching so that x and every previously kept vertex stay
//    covered, possibly un-covering a non-kept vertex, and reports whether
//    that is possible.
class CardinalityBlossom {
public:
    explicit CardinalityBlossom(std::vector<std::vector<int>> adj);

    // Runs one alternating-tree search from `root` (must be exposed) and
    // augments if an exposed vertex is reachable.
    bool try_augment_from(int root);

    // Computes a maximum matching from scratch.
    void run_maximum_matching();

    // Matroid greedy step: make x covered while keeping all kept vertices
    // covered. Marks x kept on success.
    bool try_cover(int x);

    bool covered(int v) const { return match_[v] != -1; }
    int mate(int v) const { return match_[v]; }
    int num_vertices() const { return n_; }
    const std::vector<int>& mates() const { return match_; }

    // Direct matching surgery used by gadget canonicalization.
    void unmatch_pair(int u, int v);
    void match_pair(int u, int v);

private:
    enum class Accept { any_exposed, only_target };
    bool find_path(int root, Accept accept, int target, int forbidden);
    int lca(int a, int b);
    void mark_path(int v, int b, int child);

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_;
    std::vector<char> keep_;
    // per-search scratch
    std::vector<int> p_, base_, q_;
    std::vector<char> used_, blossom_;
    std::vector<int> lca_mark_;
    int lca_stamp_ = 0;
};

}  // namespace kpp
