// Copyright 2026 the kpp authors
// License: Apache License 2.0
#include "kpp/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "kpp/errors.hpp"

namespace kpp {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw format_error("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw format_error("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw format_error("edge {" + std::to_string(u) + "," + std::to_string(v) +
                               "} out of range for n=" + std::to_string(n));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::string Graph::serialize() const {
    std::ostringstream out;
    out << n_ << ' ' << edges_.size() << '\n';
    for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    int n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_header) {
            if (!(ls >> n >> m)) {
                std::string junk;
                if (ls.clear(), std::istringstream(line) >> junk)
                    throw format_error("line " + std::to_string(lineno) + ": expected header \"n m\"");
                continue;  // blank / comment-only line before header
            }
            std::string extra;
            if (ls >> extra) throw format_error("line " + std::to_string(lineno) + ": trailing tokens in header");
            if (n < 0 || m < 0) throw format_error("negative header values");
            have_header = true;
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) {
            std::string junk;
            if (ls.clear(), std::istringstream(line) >> junk)
                throw format_error("line " + std::to_string(lineno) + ": expected \"u v\"");
            continue;
        }
        std::string extra;
        if (ls >> extra) throw format_error("line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw format_error("line " + std::to_string(lineno) + ": vertex index out of range");
        if (u == v) throw format_error("line " + std::to_string(lineno) + ": self-loop");
        edges.push_back({(int)u, (int)v});
    }
    if (!have_header) throw format_error("missing \"n m\" header");
    return Graph(n, std::move(edges));
}

std::pair<Graph, VertexMapping> induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    VertexMapping map;
    map.forward = keep;
    std::sort(map.forward.begin(), map.forward.end());
    for (size_t i = 1; i < map.forward.size(); ++i)
        if (map.forward[i] == map.forward[i - 1]) throw format_error("duplicate vertex in keep set");
    map.inverse.assign(g.num_vertices(), -1);
    for (int i = 0; i < (int)map.forward.size(); ++i) {
        int p = map.forward[i];
        if (p < 0 || p >= g.num_vertices()) throw format_error("keep vertex out of range");
        map.inverse[p] = i;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int su = map.inverse[u], sv = map.inverse[v];
        if (su >= 0 && sv >= 0) edges.push_back({su, sv});
    }
    return {Graph((int)map.forward.size(), std::move(edges)), std::move(map)};
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = (int)out.size();
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

FamilySpec FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (name == "gnp") {
        if (arg.empty()) throw format_error("gnp family needs a probability, e.g. gnp:0.3");
        return gnp(std::stod(arg));
    }
    if (name == "cycles_plus_chords") return cycles_plus_chords();
    if (name == "planted_cover") {
        if (arg.empty()) throw format_error("planted_cover family needs k, e.g. planted_cover:9");
        return planted_cover(std::stoi(arg));
    }
    throw format_error("unknown graph family: " + text);
}

std::string FamilySpec::str() const {
    switch (kind) {
        case Kind::gnp: return "gnp:" + std::to_string(p);
        case Kind::cycles_plus_chords: return "cycles_plus_chords";
        case Kind::planted_cover: return "planted_cover:" + std::to_string(k);
    }
    return "?";
}

namespace {

// mt19937_64 output is portable; derive doubles and bounded ints by hand so
// no libstdc++ distribution details leak into the edge sets.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double u01() { return (double)(eng() >> 11) * (1.0 / 9007199254740992.0); }
    int below(int bound) { return bound <= 1 ? 0 : (int)(eng() % (std::uint64_t)bound); }
};

}  // namespace

Graph random_graph(int n, const FamilySpec& family, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_graph: n must be >= 1");
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 12345);
    std::vector<Edge> edges;
    switch (family.kind) {
        case FamilySpec::Kind::gnp: {
            if (family.p < 0.0 || family.p > 1.0)
                throw std::invalid_argument("gnp: p must be in [0,1]");
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.u01() < family.p) edges.push_back({u, v});
            break;
        }
        case FamilySpec::Kind::cycles_plus_chords: {
            for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
            if (n >= 3) edges.push_back({0, n - 1});
            int chords = (n + 4) / 5;
            for (int c = 0; c < chords; ++c) {
                int u = rng.below(n), v = rng.below(n);
                if (u != v) edges.push_back({std::min(u, v), std::max(u, v)});
            }
            break;
        }
        case FamilySpec::Kind::planted_cover: {
            if (family.k < 1) throw std::invalid_argument("planted_cover: k must be >= 1");
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
            int pos = 0;
            while (pos < n) {
                int len = 1 + rng.below(std::min(family.k, n - pos));
                for (int i = 1; i < len; ++i) edges.push_back({perm[pos + i - 1], perm[pos + i]});
                pos += len;
            }
            int noise = (n + 3) / 4;
            for (int c = 0; c < noise; ++c) {
                int u = rng.below(n), v = rng.below(n);
                if (u != v) edges.push_back({std::min(u, v), std::max(u, v)});
            }
            break;
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace kpp
