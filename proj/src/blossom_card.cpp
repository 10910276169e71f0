// Copyright 2026 the kpp authors
// License: Apache License 2.0
#include "blossom_card.hpp"

#include <algorithm>
#include <cassert>

#include "kpp/errors.hpp"

namespace kpp {

CardinalityBlossom::CardinalityBlossom(std::vector<std::vector<int>> adj)
    : n_((int)adj.size()), adj_(std::move(adj)) {
    match_.assign(n_, -1);
    keep_.assign(n_, 0);
    p_.assign(n_, -1);
    base_.resize(n_);
    used_.assign(n_, 0);
    blossom_.assign(n_, 0);
    lca_mark_.assign(n_, -1);
}

int CardinalityBlossom::lca(int a, int b) {
    ++lca_stamp_;
    // Rise from a to the root marking bases, then rise from b to the first mark.
    int v = a;
    while (true) {
        v = base_[v];
        lca_mark_[v] = lca_stamp_;
        if (match_[v] == -1) break;  // root
        v = p_[match_[v]];
    }
    v = b;
    while (true) {
        v = base_[v];
        if (lca_mark_[v] == lca_stamp_) return v;
        v = p_[match_[v]];
    }
}

void CardinalityBlossom::mark_path(int v, int b, int child) {
    while (base_[v] != b) {
        blossom_[base_[v]] = 1;
        blossom_[base_[match_[v]]] = 1;
        p_[v] = child;
        child = match_[v];
        v = p_[match_[v]];
    }
}

bool CardinalityBlossom::find_path(int root, Accept accept, int target, int forbidden) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(p_.begin(), p_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    q_.clear();
    q_.push_back(root);
    for (size_t qi = 0; qi < q_.size(); ++qi) {
        int v = q_[qi];
        for (int to : adj_[v]) {
            if (to == forbidden) continue;
            if (base_[v] == base_[to] || match_[v] == to) continue;
            if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
                // `to` is an outer vertex: contract the blossom.
                int curbase = lca(v, to);
                std::fill(blossom_.begin(), blossom_.end(), 0);
                mark_path(v, curbase, to);
                mark_path(to, curbase, v);
                for (int i = 0; i < n_; ++i)
                    if (blossom_[base_[i]]) {
                        base_[i] = curbase;
                        if (!used_[i]) {
                            used_[i] = 1;
                            q_.push_back(i);
                        }
                    }
            } else if (p_[to] == -1) {
                if (match_[to] == -1) {
                    if (accept == Accept::only_target && to != target) continue;
                    // Augment along the tree path ending at `to`.
                    p_[to] = v;
                    int u = to;
                    while (u != -1) {
                        int pv = p_[u], ppv = match_[pv];
                        match_[u] = pv;
                        match_[pv] = u;
                        u = ppv;
                    }
                    return true;
                }
                p_[to] = v;
                used_[match_[to]] = 1;
                q_.push_back(match_[to]);
            }
        }
    }
    return false;
}

bool CardinalityBlossom::try_augment_from(int root) {
    assert(match_[root] == -1);
    return find_path(root, Accept::any_exposed, -1, -1);
}

void CardinalityBlossom::run_maximum_matching() {
    for (int v = 0; v < n_; ++v)
        if (match_[v] == -1) find_path(v, Accept::any_exposed, -1, -1);
}

bool CardinalityBlossom::try_cover(int x) {
    if (match_[x] != -1) {
        keep_[x] = 1;
        return true;
    }
    if (find_path(x, Accept::any_exposed, -1, -1)) {
        keep_[x] = 1;
        return true;
    }
    // No augmenting path. The outer (even-reachable) set of the last search
    // is in used_; a non-kept outer vertex y can trade its coverage to x.
    int y = -1;
    for (int v = 0; v < n_; ++v)
        if (used_[v] && v != x && !keep_[v]) {
            y = v;
            break;
        }
    if (y == -1) return false;
    int t = match_[y];
    assert(t != -1);  // outer non-root vertices are matched
    match_[y] = -1;
    match_[t] = -1;
    bool ok = find_path(x, Accept::only_target, t, y);
    if (!ok) throw internal_error("matroid rotation lost its target");
    keep_[x] = 1;
    return true;
}

void CardinalityBlossom::unmatch_pair(int u, int v) {
    assert(match_[u] == v && match_[v] == u);
    match_[u] = -1;
    match_[v] = -1;
}

void CardinalityBlossom::match_pair(int u, int v) {
    assert(match_[u] == -1 && match_[v] == -1);
    match_[u] = v;
    match_[v] = u;
}

}  // namespace kpp
