#pragma once

// Shared test oracles. These are written on purpose as plain, slow,
// obviously-correct algorithms that do not reuse the library's machinery:
// girth via per-edge BFS, connectivity via union-find, forcing via repeated
// full rescans, Z via a full subset sweep.

#include <bit>
#include <climits>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "zf/forcing.hpp"
#include "zf/graph.hpp"

namespace zft {

// ---- forcing ---------------------------------------------------------

// Applies one force at a time, rescanning from scratch each time.
inline std::vector<char> naive_closure(const zf::Graph& g,
                                       std::vector<char> colored) {
    const int n = g.order();
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < n && !progress; ++v) {
            if (!colored[static_cast<std::size_t>(v)]) continue;
            int white = -1;
            int cnt = 0;
            for (int u = 0; u < n; ++u)
                if (g.has_edge(v, u) && !colored[static_cast<std::size_t>(u)]) {
                    white = u;
                    ++cnt;
                }
            if (cnt == 1) {
                colored[static_cast<std::size_t>(white)] = 1;
                progress = true;
            }
        }
    }
    return colored;
}

// Set-typed convenience wrapper over the byte-level rescanner above.
inline zf::VertexSet naive_closure(const zf::Graph& g, const zf::VertexSet& s) {
    const int n = g.order();
    std::vector<char> colored(static_cast<std::size_t>(n), 0);
    s.for_each([&](int v) { colored[static_cast<std::size_t>(v)] = 1; });
    const std::vector<char> done = naive_closure(g, std::move(colored));
    zf::VertexSet out(n);
    for (int v = 0; v < n; ++v)
        if (done[static_cast<std::size_t>(v)]) out.add(v);
    return out;
}

inline bool naive_is_zfs(const zf::Graph& g, unsigned long long mask) {
    const int n = g.order();
    std::vector<char> colored(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) colored[static_cast<std::size_t>(v)] = 1;
    const auto done = naive_closure(g, std::move(colored));
    for (int v = 0; v < n; ++v)
        if (!done[static_cast<std::size_t>(v)]) return false;
    return true;
}

struct NaiveZ {
    int z = 0;
    unsigned long long witness = 0;  // colex-least at size z
};

// Full sweep over all 2^n subsets (keep n <= 12 or so).
inline NaiveZ naive_zero_forcing(const zf::Graph& g) {
    const int n = g.order();
    if (n == 0) return {0, 0};
    NaiveZ best{n + 1, 0};
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        const int k = std::popcount(mask);
        if (k >= best.z) continue;  // ascending scan: first hit per size wins
        if (naive_is_zfs(g, mask)) best = {k, mask};
    }
    return best;
}

// ---- girth -------------------------------------------------------------

// Shortest cycle through edge (u,v) = shortest u-v path avoiding that edge,
// plus one; minimized over all edges.
inline std::optional<int> oracle_girth(const zf::Graph& g) {
    const int n = g.order();
    int best = INT_MAX;
    for (const auto& [eu, ev] : g.edges()) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<int> queue;
        dist[static_cast<std::size_t>(eu)] = 0;
        queue.push_back(eu);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            if (dist[static_cast<std::size_t>(x)] + 1 >= best) break;
            for (int y = 0; y < n; ++y) {
                if (!g.has_edge(x, y)) continue;
                if ((x == eu && y == ev) || (x == ev && y == eu)) continue;
                if (dist[static_cast<std::size_t>(y)] >= 0) continue;
                dist[static_cast<std::size_t>(y)] =
                    dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
        if (dist[static_cast<std::size_t>(ev)] >= 0)
            best = std::min(best, dist[static_cast<std::size_t>(ev)] + 1);
    }
    if (best == INT_MAX) return std::nullopt;
    return best;
}

// ---- connectivity / cut structure --------------------------------------

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Component count, optionally pretending a vertex or an edge is absent.
inline int oracle_components(const zf::Graph& g, int skip_vertex = -1,
                             int skip_u = -1, int skip_v = -1) {
    const int n = g.order();
    Dsu dsu(n);
    for (const auto& [u, v] : g.edges()) {
        if (u == skip_vertex || v == skip_vertex) continue;
        if ((u == skip_u && v == skip_v) || (u == skip_v && v == skip_u))
            continue;
        dsu.unite(u, v);
    }
    int count = 0;
    for (int v = 0; v < n; ++v) {
        if (v == skip_vertex) continue;
        if (dsu.find(v) == v) ++count;
    }
    return count;
}

inline std::vector<int> oracle_cut_vertices(const zf::Graph& g) {
    std::vector<int> out;
    const int base = oracle_components(g);
    for (int v = 0; v < g.order(); ++v)
        if (oracle_components(g, v) > base) out.push_back(v);
    return out;
}

inline std::vector<zf::Edge> oracle_cut_edges(const zf::Graph& g) {
    std::vector<zf::Edge> out;
    const int base = oracle_components(g);
    for (const auto& [u, v] : g.edges())
        if (oracle_components(g, -1, u, v) > base) out.push_back({u, v});
    return out;
}

// ---- random graphs ------------------------------------------------------

inline zf::Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<zf::Edge> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng)) edges.push_back({u, v});
    return zf::Graph::from_edge_list(n, edges);
}

inline zf::ColorSet random_subset(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    zf::ColorSet s(n);
    for (int v = 0; v < n; ++v)
        if (coin(rng)) s.add(v);
    return s;
}

}  // namespace zft
