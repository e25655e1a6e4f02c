#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "zf/errors.hpp"
#include "zf/vertex_set.hpp"

namespace zf {

using Edge = std::pair<int, int>;
using Rational = boost::rational<long long>;

/// Length of a shortest cycle; acyclic graphs carry the infinite sentinel.
class Girth {
public:
    static Girth infinite() noexcept { return Girth(0); }

    static Girth finite(int length) {
        if (length < 3) throw GraphError("finite girth must be >= 3");
        return Girth(length);
    }

    bool is_finite() const noexcept { return v_ != 0; }

    int value() const {
        if (!is_finite()) throw GraphError("girth is infinite");
        return v_;
    }

    /// Whether girth >= k; an infinite girth satisfies every threshold.
    bool at_least(int k) const noexcept { return !is_finite() || v_ >= k; }

    bool operator==(const Girth&) const = default;

    std::string str() const { return is_finite() ? std::to_string(v_) : "inf"; }

private:
    explicit Girth(int v) : v_(v) {}
    int v_;  // 0 encodes infinity
};

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    Rational average_degree{0};  // exactly 2m/n
};

/// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency
/// rows. Rows are stored contiguously (row_words() words per vertex) so the
/// forcing kernels can scan them directly.
class Graph {
public:
    static Graph from_edge_list(int n, std::span<const Edge> edges);
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const noexcept { return n_; }
    long long edge_count() const noexcept { return m_; }
    int row_words() const noexcept { return row_words_; }

    bool has_edge(int u, int v) const {
        check(u);
        check(v);
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    int degree(int v) const {
        check(v);
        const Word* r = row(v);
        int d = 0;
        for (int i = 0; i < row_words_; ++i) d += std::popcount(r[i]);
        return d;
    }

    const Word* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * row_words_; }

    /// All adjacency rows back to back; row v starts at rows()[v * row_words()].
    const Word* rows() const noexcept { return bits_.data(); }

    VertexSet neighbors(int v) const {
        check(v);
        VertexSet s(n_);
        const Word* r = row(v);
        for (int u = 0; u < n_; ++u)
            if ((r[u >> 6] >> (u & 63)) & 1u) s.add(u);
        return s;
    }

    template <typename F>
    void for_each_neighbor(int v, F&& f) const {
        const Word* r = row(v);
        for (int i = 0; i < row_words_; ++i) {
            Word w = r[i];
            while (w) {
                f(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<Edge> edges() const;  // ascending (u < v, lexicographic)

    bool operator==(const Graph&) const = default;

private:
    Graph() = default;

    void check(int v) const {
        if (v < 0 || v >= n_)
            throw GraphError("vertex " + std::to_string(v) + " out of range for n=" +
                             std::to_string(n_));
    }

    int n_ = 0;
    int row_words_ = 0;
    long long m_ = 0;
    std::vector<Word> bits_;
};

Girth girth(const Graph& g);

/// Exact min/max/average degree; throws for the empty graph (no degrees).
DegreeProfile degree_profile(const Graph& g);

bool is_triangle_free(const Graph& g);

bool is_complete(const Graph& g);

/// Connected components as ascending vertex lists, ordered by least vertex.
std::vector<std::vector<int>> components(const Graph& g);

int component_count(const Graph& g);

/// Vertices whose removal increases the component count, ascending.
std::vector<int> cut_vertices(const Graph& g);

/// Bridges as (u,v) with u < v, ascending lexicographic.
std::vector<Edge> cut_edges(const Graph& g);

/// Result of a deletion: the new graph plus label maps. Remaining vertices
/// are relabeled 0..n'-1 preserving ascending original order; old_to_new is
/// -1 for removed vertices.
struct RelabeledGraph {
    Graph graph = Graph::from_edge_list(0, std::span<const Edge>{});
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

RelabeledGraph erase_vertices_edges(const Graph& g, std::span<const int> vertices,
                                    std::span<const Edge> edges);

RelabeledGraph erase_vertices(const Graph& g, const VertexSet& vertices);

Graph erase_vertex(const Graph& g, int v);
Graph erase_edge(const Graph& g, int u, int v);

/// Subgraph induced by `keep` with the same ascending relabeling contract.
RelabeledGraph induced_subgraph(const Graph& g, std::span<const int> keep);

/// Disjoint union; vertices of b are shifted up by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace zf
