#include "zf/graph.hpp"

#include <algorithm>
#include <numeric>

namespace zf {

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.row_words_ = static_cast<int>((static_cast<std::size_t>(n) + 63) / 64);
    g.bits_.assign(static_cast<std::size_t>(n) * g.row_words_, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw GraphError("loop (" + std::to_string(u) + "," + std::to_string(v) +
                             ") not allowed");
        Word* ru = g.bits_.data() + static_cast<std::size_t>(u) * g.row_words_;
        Word* rv = g.bits_.data() + static_cast<std::size_t>(v) * g.row_words_;
        ru[v >> 6] |= Word{1} << (v & 63);
        rv[u >> 6] |= Word{1} << (u & 63);
    }
    long long total = 0;
    for (Word w : g.bits_) total += std::popcount(w);
    g.m_ = total / 2;  // duplicates collapsed by the bitset
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for_each_neighbor(u, [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

// Shortest cycle through BFS from every root: the first non-tree edge (u,w)
// with w != parent(u) closes a cycle of length dist[u]+dist[w]+1, and the
// minimum of those candidates over all roots is exact.
Girth girth(const Graph& g) {
    const int n = g.order();
    int best = 0;  // 0 = none found
    std::vector<int> dist(n), parent(n), queue(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        int head = 0, tail = 0;
        queue[tail++] = root;
        dist[root] = 0;
        parent[root] = -1;
        while (head < tail) {
            int u = queue[head++];
            if (best && 2 * dist[u] >= best) break;  // no shorter cycle reachable
            bool stop = false;
            g.for_each_neighbor(u, [&](int w) {
                if (stop) return;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (!best || len < best) best = len;
                    if (len == 3) stop = true;
                }
            });
            if (stop) break;
        }
        if (best == 3) break;
    }
    return best ? Girth::finite(best) : Girth::infinite();
}

DegreeProfile degree_profile(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw GraphError("degree profile undefined for the empty graph");
    DegreeProfile p;
    p.min_degree = n;
    p.max_degree = 0;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        p.min_degree = std::min(p.min_degree, d);
        p.max_degree = std::max(p.max_degree, d);
    }
    p.average_degree = Rational(2 * g.edge_count(), n);
    return p;
}

bool is_triangle_free(const Graph& g) {
    const int n = g.order();
    const int words = g.row_words();
    for (int u = 0; u < n; ++u) {
        const Word* ru = g.row(u);
        bool hit = false;
        g.for_each_neighbor(u, [&](int v) {
            if (hit || v <= u) return;
            const Word* rv = g.row(v);
            for (int i = 0; i < words; ++i)
                if (ru[i] & rv[i]) {
                    hit = true;
                    return;
                }
        });
        if (hit) return false;
    }
    return true;
}

bool is_complete(const Graph& g) {
    long long n = g.order();
    return g.edge_count() == n * (n - 1) / 2;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<int> comp;
        stack.push_back(root);
        seen[root] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            g.for_each_neighbor(u, [&](int w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;  // roots visited in ascending order => sorted by least vertex
}

int component_count(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    int count = 0;
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        ++count;
        stack.push_back(root);
        seen[root] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            g.for_each_neighbor(u, [&](int w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            });
        }
    }
    return count;
}

namespace {

// Iterative lowlink DFS shared by cut_vertices and cut_edges. Parallel edges
// cannot occur (simple graph), so the parent edge is skipped exactly once via
// parent_skipped.
struct LowlinkState {
    std::vector<int> disc, low, parent;
    std::vector<char> parent_skipped;
    int tick = 0;

    explicit LowlinkState(int n)
        : disc(n, -1), low(n, 0), parent(n, -1), parent_skipped(n, 0) {}
};

template <typename TreeEdgeDone>
void lowlink_dfs(const Graph& g, int root, LowlinkState& st, TreeEdgeDone&& on_tree_edge_done,
                 int* root_children) {
    // Explicit stack of (vertex, neighbor list cursor).
    std::vector<std::pair<int, std::vector<int>>> stack;
    auto neighbor_list = [&](int v) {
        std::vector<int> out;
        g.for_each_neighbor(v, [&](int w) { out.push_back(w); });
        return out;
    };
    st.disc[root] = st.low[root] = st.tick++;
    stack.emplace_back(root, neighbor_list(root));
    *root_children = 0;
    while (!stack.empty()) {
        auto& [u, nbrs] = stack.back();
        if (!nbrs.empty()) {
            int w = nbrs.back();
            nbrs.pop_back();
            if (st.disc[w] < 0) {
                st.parent[w] = u;
                st.parent_skipped[w] = 0;
                st.disc[w] = st.low[w] = st.tick++;
                if (u == root) ++*root_children;
                stack.emplace_back(w, neighbor_list(w));
            } else if (w == st.parent[u] && !st.parent_skipped[u]) {
                st.parent_skipped[u] = 1;
            } else {
                st.low[u] = std::min(st.low[u], st.disc[w]);
            }
        } else {
            int u_done = u;
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back().first;
                st.low[p] = std::min(st.low[p], st.low[u_done]);
                on_tree_edge_done(p, u_done);
            }
        }
    }
}

}  // namespace

std::vector<int> cut_vertices(const Graph& g) {
    const int n = g.order();
    LowlinkState st(n);
    std::vector<char> is_cut(n, 0);
    for (int root = 0; root < n; ++root) {
        if (st.disc[root] >= 0) continue;
        int root_children = 0;
        lowlink_dfs(
            g, root, st,
            [&](int p, int child) {
                if (p != root && st.low[child] >= st.disc[p]) is_cut[p] = 1;
            },
            &root_children);
        if (root_children >= 2) is_cut[root] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) out.push_back(v);
    return out;
}

std::vector<Edge> cut_edges(const Graph& g) {
    const int n = g.order();
    LowlinkState st(n);
    std::vector<Edge> out;
    for (int root = 0; root < n; ++root) {
        if (st.disc[root] >= 0) continue;
        int root_children = 0;
        lowlink_dfs(
            g, root, st,
            [&](int p, int child) {
                if (st.low[child] > st.disc[p]) out.emplace_back(std::min(p, child), std::max(p, child));
            },
            &root_children);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RelabeledGraph erase_vertices_edges(const Graph& g, std::span<const int> vertices,
                                    std::span<const Edge> edges) {
    const int n = g.order();
    std::vector<char> gone(n, 0);
    for (int v : vertices) {
        if (v < 0 || v >= n)
            throw GraphError("cannot delete vertex " + std::to_string(v) + ": not in graph");
        gone[v] = 1;
    }
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || !g.has_edge(u, v))
            throw GraphError("cannot delete edge (" + std::to_string(u) + "," +
                             std::to_string(v) + "): not in graph");
    }

    RelabeledGraph out;
    out.old_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!gone[v]) {
            out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
            out.new_to_old.push_back(v);
        }
    }

    std::vector<char> edge_gone;  // marks deleted edges by index into g.edges() order
    std::vector<Edge> kept;
    auto all = g.edges();
    edge_gone.assign(all.size(), 0);
    for (auto [u, v] : edges) {
        Edge e{std::min(u, v), std::max(u, v)};
        auto it = std::lower_bound(all.begin(), all.end(), e);
        edge_gone[static_cast<std::size_t>(it - all.begin())] = 1;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        auto [u, v] = all[i];
        if (edge_gone[i] || gone[u] || gone[v]) continue;
        kept.emplace_back(out.old_to_new[u], out.old_to_new[v]);
    }
    out.graph = Graph::from_edge_list(static_cast<int>(out.new_to_old.size()), kept);
    return out;
}

RelabeledGraph erase_vertices(const Graph& g, const VertexSet& vertices) {
    if (vertices.universe() != g.order())
        throw GraphError("vertex set universe does not match graph order");
    auto vs = vertices.to_vector();
    return erase_vertices_edges(g, vs, {});
}

Graph erase_vertex(const Graph& g, int v) {
    int vs[1] = {v};
    return erase_vertices_edges(g, vs, {}).graph;
}

Graph erase_edge(const Graph& g, int u, int v) {
    Edge es[1] = {{u, v}};
    return erase_vertices_edges(g, {}, es).graph;
}

RelabeledGraph induced_subgraph(const Graph& g, std::span<const int> keep) {
    const int n = g.order();
    std::vector<char> keep_mask(n, 0);
    for (int v : keep) {
        if (v < 0 || v >= n) throw GraphError("induced subgraph vertex out of range");
        keep_mask[v] = 1;
    }
    std::vector<int> drop;
    for (int v = 0; v < n; ++v)
        if (!keep_mask[v]) drop.push_back(v);
    return erase_vertices_edges(g, drop, {});
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    int off = a.order();
    for (auto [u, v] : b.edges()) es.emplace_back(u + off, v + off);
    return Graph::from_edge_list(a.order() + b.order(), es);
}

}  // namespace zf
