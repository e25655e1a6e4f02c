#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "helpers.hpp"
#include "zf/errors.hpp"
#include "zf/generators.hpp"
#include "zf/graph.hpp"
#include "zf/vertex_set.hpp"

using namespace zf;

namespace {

// Every labeled graph on n vertices, by edge-mask. Keep n small.
template <typename F>
void for_each_labeled_graph(int n, F&& f) {
    const int pairs = n * (n - 1) / 2;
    std::vector<Edge> all;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) all.push_back({u, v});
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<Edge> edges;
        for (int i = 0; i < pairs; ++i)
            if ((mask >> i) & 1) edges.push_back(all[static_cast<std::size_t>(i)]);
        f(Graph::from_edge_list(n, edges));
    }
}

}  // namespace

TEST_CASE("edge list construction and basic accessors") {
    const Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {1, 2}, {2, 1}});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 2);  // duplicates and reversals collapse
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);
    CHECK(g.neighbors(1) == VertexSet::of(4, {0, 2}));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edge_list(-1, {}), GraphError);
    CHECK_THROWS_WITH(Graph::from_edge_list(2, {{0, 5}}),
                      doctest::Contains("(0,5)"));

    CHECK(Graph::from_edge_list(3, {{0, 1}}) == Graph::from_edge_list(3, {{1, 0}}));
    CHECK(Graph::from_edge_list(3, {{0, 1}}) != Graph::from_edge_list(3, {{0, 2}}));
}

TEST_CASE("multi-word adjacency (n > 64)") {
    const Graph g = make_cycle(70);
    CHECK(g.row_words() == 2);
    CHECK(g.edge_count() == 70);
    for (int v = 0; v < 70; ++v) CHECK(g.degree(v) == 2);
    CHECK(g.has_edge(63, 64));
    CHECK(g.has_edge(69, 0));
    CHECK_FALSE(g.has_edge(0, 64));
    int seen = 0;
    g.for_each_neighbor(64, [&](int u) {
        ++seen;
        CHECK((u == 63 || u == 65));
    });
    CHECK(seen == 2);
}

TEST_CASE("girth sentinel semantics") {
    const Girth inf = Girth::infinite();
    CHECK_FALSE(inf.is_finite());
    CHECK(inf.at_least(3));
    CHECK(inf.at_least(5));
    CHECK(inf.at_least(1000));  // infinite clears every threshold
    CHECK(inf.str() == "inf");
    CHECK_THROWS_AS(inf.value(), GraphError);

    const Girth five = Girth::finite(5);
    CHECK(five.is_finite());
    CHECK(five.value() == 5);
    CHECK(five.at_least(5));
    CHECK_FALSE(five.at_least(6));
    CHECK(five.str() == "5");
    CHECK_THROWS_AS(Girth::finite(2), GraphError);
}

TEST_CASE("girth on named graphs") {
    for (int n = 3; n <= 12; ++n)
        CHECK(girth(make_cycle(n)) == Girth::finite(n));
    CHECK_FALSE(girth(make_path(9)).is_finite());
    CHECK_FALSE(girth(make_empty(5)).is_finite());
    CHECK(girth(make_complete(5)) == Girth::finite(3));
    CHECK(girth(make_complete_bipartite(2, 3)) == Girth::finite(4));
    CHECK(girth(make_petersen()) == Girth::finite(5));
    CHECK(girth(make_heawood()) == Girth::finite(6));
    CHECK(girth(make_grid222k(2)) == Girth::finite(4));
}

TEST_CASE("girth equals the per-edge BFS oracle, exhaustively to n=6") {
    for (int n = 0; n <= 6; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            const auto expect = zft::oracle_girth(g);
            const Girth got = girth(g);
            if (expect) {
                REQUIRE(got.is_finite());
                CHECK(got.value() == *expect);
            } else {
                CHECK_FALSE(got.is_finite());
            }
        });
}

TEST_CASE("girth equals the oracle on random graphs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 10);
        const double p = 0.05 + 0.25 * static_cast<double>(rng() % 4);
        const Graph g = zft::random_graph(n, p, rng);
        const auto expect = zft::oracle_girth(g);
        const Girth got = girth(g);
        if (expect) {
            REQUIRE(got.is_finite());
            CHECK(got.value() == *expect);
        } else {
            CHECK_FALSE(got.is_finite());
        }
    }
}

TEST_CASE("degree profile") {
    const auto p = degree_profile(make_petersen());
    CHECK(p.min_degree == 3);
    CHECK(p.max_degree == 3);
    CHECK(p.average_degree == Rational(3));

    const auto q = degree_profile(make_path(4));
    CHECK(q.min_degree == 1);
    CHECK(q.max_degree == 2);
    CHECK(q.average_degree == Rational(3, 2));

    CHECK_THROWS_AS(degree_profile(make_empty(0)), GraphError);
}

TEST_CASE("triangle-free and completeness predicates") {
    CHECK(is_triangle_free(make_petersen()));
    CHECK(is_triangle_free(make_complete_bipartite(4, 4)));
    CHECK(is_triangle_free(make_path(6)));
    CHECK_FALSE(is_triangle_free(make_complete(3)));
    CHECK_FALSE(is_triangle_free(make_complete(7)));

    for (int n = 0; n <= 5; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            const auto gi = girth(g);
            CHECK(is_triangle_free(g) == (!gi.is_finite() || gi.value() > 3));
        });

    CHECK(is_complete(make_complete(5)));
    CHECK(is_complete(make_complete(1)));
    CHECK(is_complete(make_path(2)));  // K_2
    CHECK_FALSE(is_complete(make_path(3)));
    CHECK_FALSE(is_complete(make_empty(2)));
}

TEST_CASE("components") {
    const Graph g = Graph::from_edge_list(6, {{4, 5}, {0, 2}});
    const auto comps = components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == std::vector<int>{0, 2});
    CHECK(comps[1] == std::vector<int>{1});
    CHECK(comps[2] == std::vector<int>{3});
    CHECK(comps[3] == std::vector<int>{4, 5});
    CHECK(component_count(g) == 4);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph r = zft::random_graph(12, 0.15, rng);
        CHECK(component_count(r) == zft::oracle_components(r));
    }
}

TEST_CASE("cut vertices and cut edges match delete-and-recount oracles") {
    // Spot checks first.
    CHECK(cut_vertices(make_path(5)) == std::vector<int>{1, 2, 3});
    CHECK(cut_vertices(make_cycle(6)).empty());
    CHECK(cut_vertices(make_petersen()).empty());
    CHECK(cut_edges(make_path(3)) == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(cut_edges(make_cycle(5)).empty());

    for (int n = 0; n <= 6; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            CHECK(cut_vertices(g) == zft::oracle_cut_vertices(g));
            CHECK(cut_edges(g) == zft::oracle_cut_edges(g));
        });

    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = zft::random_graph(14, 0.12, rng);
        CHECK(cut_vertices(g) == zft::oracle_cut_vertices(g));
        CHECK(cut_edges(g) == zft::oracle_cut_edges(g));
    }
}

TEST_CASE("vertex and edge deletion with label maps") {
    const Graph g = make_cycle(5);

    SUBCASE("erase a vertex") {
        const Graph h = erase_vertex(g, 0);  // leaves the path 1-2-3-4
        CHECK(h.order() == 4);
        CHECK(h.edge_count() == 3);
        CHECK(h == make_path(4));
    }
    SUBCASE("erase an edge") {
        const Graph h = erase_edge(g, 4, 0);
        CHECK(h == make_path(5));
        CHECK_THROWS_AS(erase_edge(g, 0, 2), GraphError);
        CHECK_THROWS_WITH(erase_edge(g, 0, 2), doctest::Contains("not in graph"));
    }
    SUBCASE("erase a vertex set, label maps") {
        const RelabeledGraph r = erase_vertices(g, VertexSet::of(5, {1, 3}));
        CHECK(r.graph.order() == 3);
        CHECK(r.new_to_old == std::vector<int>{0, 2, 4});
        CHECK(r.old_to_new == std::vector<int>{0, -1, 1, -1, 2});
        CHECK(r.graph.edge_count() == 1);  // only 4-0 survives
        CHECK(r.graph.has_edge(2, 0));
        CHECK_THROWS_AS(erase_vertices(g, VertexSet::of(4, {1})), GraphError);
    }
    SUBCASE("bad vertex") {
        CHECK_THROWS_WITH(erase_vertex(g, 7), doctest::Contains("vertex 7"));
    }
}

TEST_CASE("induced subgraph and disjoint union") {
    const Graph g = make_petersen();
    const auto sub = induced_subgraph(g, std::vector<int>{0, 1, 2, 5});
    CHECK(sub.graph.order() == 4);
    CHECK(sub.new_to_old == std::vector<int>{0, 1, 2, 5});
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            CHECK(sub.graph.has_edge(a, b) ==
                  g.has_edge(sub.new_to_old[static_cast<std::size_t>(a)],
                             sub.new_to_old[static_cast<std::size_t>(b)]));
        }

    const Graph u = disjoint_union(make_cycle(3), make_path(2));
    CHECK(u.order() == 5);
    CHECK(u.edge_count() == 4);
    CHECK(u.has_edge(3, 4));
    CHECK_FALSE(u.has_edge(2, 3));
    CHECK(component_count(u) == 2);
}

TEST_CASE("vertex set basics") {
    VertexSet s(10);
    CHECK(s.empty());
    CHECK(s.universe() == 10);
    s.add(3);
    s.add(7);
    CHECK(s.count() == 2);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(4));
    CHECK(s.first() == 3);
    s.remove(3);
    CHECK(s.first() == 7);
    CHECK_THROWS_AS(s.add(10), GraphError);
    CHECK_THROWS_AS(s.contains(-1), GraphError);

    const VertexSet a = VertexSet::of(6, {0, 2, 4});
    const VertexSet b = VertexSet::of(6, {2, 3});
    CHECK((a | b) == VertexSet::of(6, {0, 2, 3, 4}));
    CHECK((a & b) == VertexSet::of(6, {2}));
    CHECK((a - b) == VertexSet::of(6, {0, 4}));
    CHECK(VertexSet::of(6, {2}).is_subset_of(a));
    CHECK(VertexSet::of(6, {2}).is_proper_subset_of(a));
    CHECK_FALSE(a.is_proper_subset_of(a));
    CHECK_THROWS_AS(a.is_subset_of(VertexSet::of(5, {1})), GraphError);

    CHECK(a.str() == "{0,2,4}");
    CHECK(a.to_vector() == std::vector<int>{0, 2, 4});
    CHECK(VertexSet::full(70).count() == 70);
    CHECK(VertexSet::full(64).count() == 64);
    CHECK(VertexSet::from_word(5, 0b10110) == VertexSet::of(5, {1, 2, 4}));
    CHECK(VertexSet::from_word(3, ~Word{0}) == VertexSet::full(3));  // trimmed
}

TEST_CASE("colexicographic comparison") {
    // Reference: colex(a) < colex(b) iff max element of the symmetric
    // difference belongs to b.
    auto ref = [](const VertexSet& a, const VertexSet& b) {
        const auto av = a.to_vector();
        const auto bv = b.to_vector();
        int hi = -1;
        int side = 0;
        for (int v : av)
            if (!b.contains(v) && v > hi) {
                hi = v;
                side = 1;
            }
        for (int v : bv)
            if (!a.contains(v) && v > hi) {
                hi = v;
                side = -1;
            }
        return side;  // side=+1 -> a holds the max -> a colex-greater
    };

    std::mt19937 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 80);
        const auto a = zft::random_subset(n, 0.4, rng);
        const auto b = zft::random_subset(n, 0.4, rng);
        const int got = VertexSet::colex_compare(a, b);
        const int want = ref(a, b);
        CHECK(((got < 0 && want < 0) || (got > 0 && want > 0) ||
               (got == 0 && want == 0)));
    }
    CHECK(VertexSet::colex_compare(VertexSet::of(5, {0, 1}),
                                   VertexSet::of(5, {0, 2})) < 0);
    CHECK(VertexSet::colex_compare(VertexSet::of(5, {4}),
                                   VertexSet::of(5, {0, 1, 2, 3})) > 0);
}
