// Copyright 2026 the kpp authors
// License: Apache License 2.0
//
// Maximum-weight matching in general graphs: primal-dual blossom algorithm
// with integer duals (Galil's O(V^3) scheme). Slack is defined as
// y_i + y_j - 2*w so all duals stay integral for integer weights.

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <vector>

#include "kpp/errors.hpp"
#include "kpp/matching.hpp"

namespace kpp {
namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

class WeightedMatcher {
public:
    WeightedMatcher(int n, const std::vector<Edge>& es, const std::vector<long long>& ws)
        : n_(n), m_((int)es.size()) {
        edges_.reserve(m_);
        maxweight_ = 0;
        for (int k = 0; k < m_; ++k) {
            edges_.push_back({es[k].first, es[k].second, ws[k]});
            maxweight_ = std::max(maxweight_, ws[k]);
        }
        endpoint_.resize(2 * m_);
        for (int p = 0; p < 2 * m_; ++p)
            endpoint_[p] = (p & 1) ? edges_[p >> 1].j : edges_[p >> 1].i;
        neighbend_.assign(n_, {});
        for (int k = 0; k < m_; ++k) {
            neighbend_[edges_[k].i].push_back(2 * k + 1);
            neighbend_[edges_[k].j].push_back(2 * k);
        }
        mate_.assign(n_, -1);
        label_.assign(2 * n_, 0);
        labelend_.assign(2 * n_, -1);
        inblossom_.resize(n_);
        for (int v = 0; v < n_; ++v) inblossom_[v] = v;
        blossomparent_.assign(2 * n_, -1);
        blossombase_.assign(2 * n_, -1);
        for (int v = 0; v < n_; ++v) blossombase_[v] = v;
        blossomchilds_.assign(2 * n_, {});
        blossomendps_.assign(2 * n_, {});
        for (int b = 2 * n_ - 1; b >= n_; --b) unusedblossoms_.push_back(b);
        dualvar_.assign(2 * n_, 0);
        for (int v = 0; v < n_; ++v) dualvar_[v] = maxweight_;
        allowedge_.assign(m_, false);
    }

    std::vector<int> solve() {
        if (n_ == 0 || m_ == 0) return std::vector<int>(n_, -1);
        for (int stage = 0; stage < n_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(labelend_.begin(), labelend_.end(), -1);
            std::fill(allowedge_.begin(), allowedge_.end(), false);
            queue_.clear();
            for (int v = 0; v < n_; ++v)
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    assert(label_[inblossom_[v]] == 1);
                    for (int p : neighbend_[v]) {
                        int k = p >> 1;
                        int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;
                        if (!allowedge_[k] && slack(k) <= 0) allowedge_[k] = true;
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                assert(label_[inblossom_[w]] == 2);
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        }
                    }
                }
                if (augmented) break;

                // No tight edge leads anywhere: adjust duals.
                int deltatype = -1;
                long long delta = 0;
                int deltaedge = -1, deltablossom = -1;

                for (int v = 0; v < n_; ++v)
                    if (deltatype == -1 || dualvar_[v] < delta) {
                        delta = dualvar_[v];
                        deltatype = 1;
                    }
                for (int k = 0; k < m_; ++k) {
                    if (allowedge_[k]) continue;
                    int bi = inblossom_[edges_[k].i], bj = inblossom_[edges_[k].j];
                    if (bi == bj) continue;
                    int li = label_[bi], lj = label_[bj];
                    if ((li == 1 && lj == 0) || (li == 0 && lj == 1)) {
                        long long d = slack(k);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = k;
                        }
                    } else if (li == 1 && lj == 1) {
                        long long d = slack(k) / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = k;
                        }
                    }
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2) {
                        long long d = dualvar_[b] / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 4;
                            deltablossom = b;
                        }
                    }
                }
                assert(deltatype >= 1);

                for (int v = 0; v < n_; ++v) {
                    int lab = label_[inblossom_[v]];
                    if (lab == 1) dualvar_[v] -= delta;
                    else if (lab == 2) dualvar_[v] += delta;
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) dualvar_[b] += 2 * delta;
                        else if (label_[b] == 2) dualvar_[b] -= 2 * delta;
                    }
                }

                if (deltatype == 1) break;  // optimum reached
                if (deltatype == 2) {
                    allowedge_[deltaedge] = true;
                    int i = edges_[deltaedge].i;
                    if (label_[inblossom_[i]] == 0) i = edges_[deltaedge].j;
                    assert(label_[inblossom_[i]] == 1);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = true;
                    assert(label_[inblossom_[edges_[deltaedge].i]] == 1);
                    queue_.push_back(edges_[deltaedge].i);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;
            for (int b = n_; b < 2 * n_; ++b)
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
                    dualvar_[b] == 0)
                    expand_blossom(b, true);
        }
        std::vector<int> partner(n_, -1);
        for (int v = 0; v < n_; ++v)
            if (mate_[v] >= 0) partner[v] = endpoint_[mate_[v]];
        for (int v = 0; v < n_; ++v)
            assert(partner[v] == -1 || partner[partner[v]] == v);
        return partner;
    }

private:
    struct E {
        int i, j;
        long long w;
    };

    long long slack(int k) const {
        return dualvar_[edges_[k].i] + dualvar_[edges_[k].j] - 2 * edges_[k].w;
    }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < n_) {
            out.push_back(b);
        } else {
            for (int c : blossomchilds_[b]) blossom_leaves(c, out);
        }
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom_[w];
        assert(label_[w] == 0 && label_[b] == 0);
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        if (t == 1) {
            std::vector<int> leaves;
            blossom_leaves(b, leaves);
            for (int leaf : leaves) queue_.push_back(leaf);
        } else {
            int base = blossombase_[b];
            assert(mate_[base] >= 0);
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            assert(label_[b] == 1);
            path.push_back(b);
            label_[b] = 5;
            assert(labelend_[b] == mate_[blossombase_[b]]);
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                assert(label_[b] == 2);
                assert(labelend_[b] >= 0);
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges_[k].i, w = edges_[k].j;
        int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        assert(!unusedblossoms_.empty());
        int b = unusedblossoms_.back();
        unusedblossoms_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        std::vector<int> path, endps;
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            assert(label_[bv] == 2 ||
                   (label_[bv] == 1 && labelend_[bv] == mate_[blossombase_[bv]]));
            assert(labelend_[bv] >= 0);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            assert(label_[bw] == 2 ||
                   (label_[bw] == 1 && labelend_[bw] == mate_[blossombase_[bw]]));
            assert(labelend_[bw] >= 0);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        blossomchilds_[b] = std::move(path);
        blossomendps_[b] = std::move(endps);
        assert(label_[bb] == 1);
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        std::vector<int> leaves;
        blossom_leaves(b, leaves);
        for (int leaf : leaves) {
            if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
            inblossom_[leaf] = b;
        }
    }

    static int wrap(int idx, int len) { return ((idx % len) + len) % len; }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds_[b]) {
            blossomparent_[s] = -1;
            if (s < n_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> leaves;
                blossom_leaves(s, leaves);
                for (int leaf : leaves) inblossom_[leaf] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            // The blossom sat on an alternating tree path; relabel the even
            // side and free the other side so the search can continue.
            assert(labelend_[b] >= 0);
            int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int len = (int)blossomchilds_[b].size();
            int j = 0;
            for (int idx = 0; idx < len; ++idx)
                if (blossomchilds_[b][idx] == entrychild) {
                    j = idx;
                    break;
                }
            int jstep, endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[blossomendps_[b][wrap(j - endptrick, len)] ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[blossomendps_[b][wrap(j - endptrick, len)] >> 1] = true;
                j += jstep;
                p = blossomendps_[b][wrap(j - endptrick, len)] ^ endptrick;
                allowedge_[p >> 1] = true;
                j += jstep;
            }
            int bv = blossomchilds_[b][wrap(j, len)];
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            j += jstep;
            while (blossomchilds_[b][wrap(j, len)] != entrychild) {
                int bw = blossomchilds_[b][wrap(j, len)];
                if (label_[bw] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> leaves;
                blossom_leaves(bw, leaves);
                int v = -1;
                for (int leaf : leaves)
                    if (label_[leaf] != 0) {
                        v = leaf;
                        break;
                    }
                if (v >= 0) {
                    assert(label_[v] == 2);
                    assert(inblossom_[v] == bw);
                    label_[v] = 0;
                    label_[endpoint_[mate_[blossombase_[bw]]]] = 0;
                    assign_label(v, 2, labelend_[v]);
                }
                j += jstep;
            }
        }
        label_[b] = -1;
        labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        dualvar_[b] = 0;
        unusedblossoms_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= n_) augment_blossom(t, v);
        int len = (int)blossomchilds_[b].size();
        int i = 0;
        for (int idx = 0; idx < len; ++idx)
            if (blossomchilds_[b][idx] == t) {
                i = idx;
                break;
            }
        int j = i, jstep, endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            int tc = blossomchilds_[b][wrap(j, len)];
            int p = blossomendps_[b][wrap(j - endptrick, len)] ^ endptrick;
            if (tc >= n_) augment_blossom(tc, endpoint_[p]);
            j += jstep;
            tc = blossomchilds_[b][wrap(j, len)];
            if (tc >= n_) augment_blossom(tc, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(blossomchilds_[b].begin(), blossomchilds_[b].begin() + i,
                    blossomchilds_[b].end());
        std::rotate(blossomendps_[b].begin(), blossomendps_[b].begin() + i,
                    blossomendps_[b].end());
        blossombase_[b] = blossombase_[blossomchilds_[b][0]];
        assert(blossombase_[b] == v);
    }

    void augment_matching(int k) {
        int v = edges_[k].i, w = edges_[k].j;
        for (auto [s, p] : {std::pair<int, int>{v, 2 * k + 1}, std::pair<int, int>{w, 2 * k}}) {
            while (true) {
                int bs = inblossom_[s];
                assert(label_[bs] == 1);
                assert(labelend_[bs] == mate_[blossombase_[bs]]);
                if (bs >= n_) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;
                int t = endpoint_[labelend_[bs]];
                int bt = inblossom_[t];
                assert(label_[bt] == 2);
                assert(labelend_[bt] >= 0);
                s = endpoint_[labelend_[bt]];
                int j = endpoint_[labelend_[bt] ^ 1];
                assert(blossombase_[bt] == t);
                if (bt >= n_) augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int n_, m_;
    std::vector<E> edges_;
    long long maxweight_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_, labelend_, inblossom_, blossomparent_, blossombase_;
    std::vector<std::vector<int>> blossomchilds_, blossomendps_;
    std::vector<int> unusedblossoms_;
    std::vector<long long> dualvar_;
    std::vector<char> allowedge_;
    std::vector<int> queue_;
};

}  // namespace

Matching max_weight_matching(const WeightedGraph& wg) {
    const Graph& g = wg.base;
    for (long long w : wg.weights)
        if (w < 0 || w > (1LL << 50)) throw std::invalid_argument("edge weight out of range");
    WeightedMatcher matcher(g.num_vertices(), g.edges(), wg.weights);
    std::vector<int> partner = matcher.solve();
    Matching m;
    for (int k = 0; k < g.num_edges(); ++k) {
        auto [u, v] = g.edges()[k];
        if (partner[u] == v) {
            m.edges.push_back({u, v});
            m.weight += wg.weights[k];
        }
    }
    if (!is_valid_matching(g, m)) throw internal_error("weighted matcher returned invalid matching");
    return m;
}

}  // namespace kpp
