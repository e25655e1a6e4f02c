#include "zf/bounds.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zf/errors.hpp"

namespace zf {
namespace {

using boost::multiprecision::cpp_int;

BoundReport make_report(const char* key, BoundKind kind, bool conjectural,
                        std::string citation) {
    BoundReport r;
    r.key = key;
    r.kind = kind;
    r.conjectural = conjectural;
    r.citation = std::move(citation);
    return r;
}

// Lower bounds are reported clamped to >= 0; the raw formula value rides
// along so dominance arguments stay auditable.
void set_lower(BoundReport& r, long long raw, std::string reason) {
    r.applicable = true;
    r.raw_value = raw;
    r.value = std::max(raw, 0LL);
    r.reason = std::move(reason);
    r.prunable = !r.conjectural;
}

void set_upper(BoundReport& r, long long value, std::string reason) {
    r.applicable = true;
    r.raw_value = value;
    r.value = value;
    r.reason = std::move(reason);
}

void set_inapplicable(BoundReport& r, std::string reason) {
    r.applicable = false;
    r.reason = std::move(reason);
}

std::string girth_guard_note(const Girth& g) {
    if (!g.is_finite()) return "girth inf (acyclic counts as girth >= 5)";
    return "girth " + g.str();
}

}  // namespace

BoundReport lb_min_degree(const Graph& g) {
    auto r = make_report(bound_keys::lb_min_degree, BoundKind::Lower, false,
                         "Z(G) >= delta");
    if (g.order() == 0) {
        set_inapplicable(r, "empty graph");
        return r;
    }
    const int d = degree_profile(g).min_degree;
    set_lower(r, d, "delta = " + std::to_string(d));
    return r;
}

BoundReport ub_max_degree(const Graph& g) {
    auto r = make_report(bound_keys::ub_max_degree, BoundKind::Upper, false,
                         "Z(G) <= floor(n*Delta/(Delta+1)) when delta >= 1");
    if (g.order() == 0) {
        set_inapplicable(r, "empty graph");
        return r;
    }
    const auto prof = degree_profile(g);
    if (prof.min_degree < 1) {
        set_inapplicable(r, "delta = 0 (an isolated vertex)");
        return r;
    }
    const long long n = g.order();
    const long long D = prof.max_degree;
    set_upper(r, n * D / (D + 1),
              "n = " + std::to_string(n) + ", Delta = " + std::to_string(D));
    return r;
}

BoundReport ub_not_complete(const Graph& g) {
    auto r = make_report(bound_keys::ub_not_complete, BoundKind::Upper, false,
                         "Z(G) <= n-2 when G is connected, has an edge, and "
                         "G != K_n");
    if (g.edge_count() == 0) {
        set_inapplicable(r, "no edges");
        return r;
    }
    if (is_complete(g)) {
        set_inapplicable(r, "complete graph");
        return r;
    }
    // Connectivity is essential: K_3 + an isolated vertex reaches Z = n-1.
    if (components(g).size() != 1) {
        set_inapplicable(r, "disconnected");
        return r;
    }
    set_upper(r, g.order() - 2, "connected, non-complete, with an edge");
    return r;
}

BoundReport ub_girth(const Graph& g) {
    auto r = make_report(bound_keys::ub_girth, BoundKind::Upper, false,
                         "Z(G) <= n-g+2 when G contains a cycle");
    const Girth gi = girth(g);
    if (!gi.is_finite()) {
        set_inapplicable(r, "acyclic");
        return r;
    }
    set_upper(r, g.order() - gi.value() + 2, "girth " + gi.str());
    return r;
}

BoundReport lb_triangle_free(const Graph& g) {
    auto r = make_report(bound_keys::lb_triangle_free, BoundKind::Lower, false,
                         "Z(G) >= delta+1 when G is triangle-free and delta >= 3");
    if (g.order() == 0) {
        set_inapplicable(r, "empty graph");
        return r;
    }
    if (!is_triangle_free(g)) {
        set_inapplicable(r, "contains a triangle");
        return r;
    }
    const int d = degree_profile(g).min_degree;
    if (d < 3) {
        set_inapplicable(r, "delta = " + std::to_string(d) + " (need >= 3)");
        return r;
    }
    set_lower(r, d + 1LL, "triangle-free with delta = " + std::to_string(d));
    return r;
}

BoundReport lb_girth5(const Graph& g) {
    auto r = make_report(bound_keys::lb_girth5, BoundKind::Lower, false,
                         "Z(G) >= 2*delta-2 when girth >= 5 and delta >= 2");
    if (g.order() == 0) {
        set_inapplicable(r, "empty graph");
        return r;
    }
    const Girth gi = girth(g);
    if (!gi.at_least(5)) {
        set_inapplicable(r, "girth " + gi.str() + " (need >= 5)");
        return r;
    }
    const int d = degree_profile(g).min_degree;
    if (d < 2) {
        set_inapplicable(r, "delta = " + std::to_string(d) + " (need >= 2)");
        return r;
    }
    set_lower(r, 2LL * d - 2,
              girth_guard_note(gi) + ", delta = " + std::to_string(d));
    return r;
}

BoundReport lb_cut_vertex(const Graph& g) {
    auto r = make_report(
        bound_keys::lb_cut_vertex, BoundKind::Lower, false,
        "Z(G) >= 3*delta-6 when delta >= 3 and some cut vertex leaves a "
        "component of girth >= 5");
    if (g.order() == 0) {
        set_inapplicable(r, "empty graph");
        return r;
    }
    const int d = degree_profile(g).min_degree;
    if (d < 3) {
        set_inapplicable(r, "delta = " + std::to_string(d) + " (need >= 3)");
        return r;
    }
    const auto cuts = cut_vertices(g);
    if (cuts.empty()) {
        set_inapplicable(r, "no cut vertex");
        return r;
    }
    for (int v : cuts) {
        const Graph rest = erase_vertex(g, v);
        for (const auto& comp : components(rest)) {
            const Girth cg = girth(induced_subgraph(rest, comp).graph);
            if (cg.at_least(5)) {
                set_lower(r, 3LL * d - 6,
                          "cut vertex " + std::to_string(v) +
                              " leaves a component with " + girth_guard_note(cg));
                r.cut_vertex = v;
                return r;
            }
        }
    }
    set_inapplicable(r, "no cut vertex leaves a component with girth >= 5");
    return r;
}

BoundReport lb_cut_edge(const Graph& g) {
    auto r = make_report(bound_keys::lb_cut_edge, BoundKind::Lower, false,
                         "Z(G) >= 4*delta-9 when delta >= 3, girth >= 5 and G "
                         "has a cut edge");
    if (g.order() == 0) {
        set_inapplicable(r, "empty graph");
        return r;
    }
    const int d = degree_profile(g).min_degree;
    if (d < 3) {
        set_inapplicable(r, "delta = " + std::to_string(d) + " (need >= 3)");
        return r;
    }
    const Girth gi = girth(g);
    if (!gi.at_least(5)) {
        set_inapplicable(r, "girth " + gi.str() + " (need >= 5)");
        return r;
    }
    const auto bridges = cut_edges(g);
    if (bridges.empty()) {
        set_inapplicable(r, "no cut edge");
        return r;
    }
    set_lower(r, 4LL * d - 9,
              "cut edge {" + std::to_string(bridges.front().first) + "," +
                  std::to_string(bridges.front().second) + "}, " +
                  girth_guard_note(gi) + ", delta = " + std::to_string(d));
    return r;
}

BoundReport lb_vertex_deletion(const Graph& g, const VertexSet& removed) {
    auto r = make_report(bound_keys::lb_vertex_deletion, BoundKind::Lower, false,
                         "Z(G) >= 2*delta-3k-2 when the graph minus K has min "
                         "degree >= 2 and girth >= 5");
    if (removed.universe() != g.order())
        throw GraphError("deletion set universe " +
                         std::to_string(removed.universe()) +
                         " does not match graph order " +
                         std::to_string(g.order()));
    if (g.order() == 0) {
        set_inapplicable(r, "empty graph");
        return r;
    }
    const int k = removed.count();
    if (k == g.order()) {
        set_inapplicable(r, "deleting every vertex leaves nothing to inspect");
        return r;
    }
    const RelabeledGraph rest = erase_vertices(g, removed);
    const auto rest_prof = degree_profile(rest.graph);
    if (rest_prof.min_degree < 2) {
        set_inapplicable(r, "residual min degree " +
                                std::to_string(rest_prof.min_degree) +
                                " (need >= 2)");
        return r;
    }
    const Girth rg = girth(rest.graph);
    if (!rg.at_least(5)) {
        set_inapplicable(r, "residual girth " + rg.str() + " (need >= 5)");
        return r;
    }
    const int d = degree_profile(g).min_degree;
    set_lower(r, 2LL * d - 3LL * k - 2,
              "K = " + removed.str() + ", residual min degree " +
                  std::to_string(rest_prof.min_degree) + ", residual girth " +
                  rg.str());
    DeletionCertificate cert;
    cert.removed = removed;
    cert.k = k;
    cert.residual_girth = rg;
    cert.residual_min_degree = rest_prof.min_degree;
    r.certificate = cert;
    return r;
}

BoundReport best_vertex_deletion(const Graph& g, int k_max) {
    auto r = make_report(bound_keys::lb_vertex_deletion, BoundKind::Lower, false,
                         "Z(G) >= 2*delta-3k-2 when the graph minus K has min "
                         "degree >= 2 and girth >= 5");
    if (k_max < 0) throw GraphError("k_max must be >= 0");
    const int n = g.order();
    if (n == 0) {
        set_inapplicable(r, "empty graph");
        return r;
    }
    // 2*delta - 3k - 2 strictly decreases in k, so the first qualifying K
    // (smallest k, colex-least within that k) is the argmax and the search
    // can stop at the first hit.
    for (int k = 0; k <= std::min(k_max, n - 1); ++k) {
        std::vector<int> pick(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
        for (;;) {
            VertexSet removed(n);
            for (int v : pick) removed.add(v);
            BoundReport cand = lb_vertex_deletion(g, removed);
            if (cand.applicable) return cand;
            // advance to the next k-subset in colex order
            int i = 0;
            while (i < k && pick[static_cast<std::size_t>(i)] + 1 ==
                                (i + 1 < k ? pick[static_cast<std::size_t>(i) + 1] : n))
                ++i;
            if (i == k) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j) pick[static_cast<std::size_t>(j)] = j;
        }
    }
    set_inapplicable(r, "no deletion set K with |K| <= " + std::to_string(k_max) +
                            " leaves min degree >= 2 and girth >= 5");
    return r;
}

BoundReport lb_treewidth_girth(const Graph& g) {
    auto r = make_report(
        bound_keys::lb_tw_girth, BoundKind::Lower, false,
        "Z(G) >= tw(G) >= ceil((dbar-1)^(floor((g-1)/2)-1) / (12*(g+1)))");
    if (g.order() == 0) {
        set_inapplicable(r, "empty graph");
        return r;
    }
    const Girth gi = girth(g);
    if (!gi.is_finite()) {
        set_inapplicable(r, "acyclic");
        return r;
    }
    const Rational dbar = degree_profile(g).average_degree;
    if (dbar <= 1) {
        set_inapplicable(r, "average degree <= 1");
        return r;
    }
    const long long gv = gi.value();
    const int exponent = static_cast<int>((gv - 1) / 2 - 1);
    const Rational excess = dbar - 1;  // > 0 here
    const cpp_int num = boost::multiprecision::pow(
        cpp_int(excess.numerator()), static_cast<unsigned>(exponent));
    const cpp_int den = boost::multiprecision::pow(
                            cpp_int(excess.denominator()),
                            static_cast<unsigned>(exponent)) *
                        12 * (gv + 1);
    cpp_int value = (num + den - 1) / den;  // exact ceiling, num > 0
    if (value > LLONG_MAX) value = LLONG_MAX;
    set_lower(r, value.convert_to<long long>(),
              "girth " + gi.str() + ", average degree " +
                  std::to_string(dbar.numerator()) + "/" +
                  std::to_string(dbar.denominator()));
    return r;
}

BoundReport conjecture1(const Graph& g) {
    auto r = make_report(
        bound_keys::conj_girth, BoundKind::Lower, true,
        "conjectured: Z(G) >= (g-3)*(delta-2)+delta when g >= 3 and delta >= 2");
    if (g.order() == 0) {
        set_inapplicable(r, "empty graph");
        return r;
    }
    const Girth gi = girth(g);
    if (!gi.is_finite()) {
        set_inapplicable(r, "acyclic (needs finite girth)");
        return r;
    }
    const int d = degree_profile(g).min_degree;
    if (d < 2) {
        set_inapplicable(r, "delta = " + std::to_string(d) + " (need >= 2)");
        return r;
    }
    const long long gv = gi.value();
    set_lower(r, (gv - 3) * (d - 2LL) + d,
              "girth " + gi.str() + ", delta = " + std::to_string(d));
    return r;
}

BoundReport conjecture2(const Graph& g) {
    auto r = make_report(
        bound_keys::conj_triangle_free, BoundKind::Lower, true,
        "conjectured: Z(G) >= 2*delta-2 when G is triangle-free and delta >= 2");
    if (g.order() == 0) {
        set_inapplicable(r, "empty graph");
        return r;
    }
    if (!is_triangle_free(g)) {
        set_inapplicable(r, "contains a triangle");
        return r;
    }
    const int d = degree_profile(g).min_degree;
    if (d < 2) {
        set_inapplicable(r, "delta = " + std::to_string(d) + " (need >= 2)");
        return r;
    }
    set_lower(r, 2LL * d - 2, "triangle-free with delta = " + std::to_string(d));
    return r;
}

std::vector<BoundReport> evaluate_all(const Graph& g, int k_max) {
    std::vector<BoundReport> out;
    out.push_back(lb_min_degree(g));
    out.push_back(ub_max_degree(g));
    out.push_back(ub_not_complete(g));
    out.push_back(ub_girth(g));
    out.push_back(lb_triangle_free(g));
    out.push_back(lb_girth5(g));
    out.push_back(lb_cut_vertex(g));
    out.push_back(lb_cut_edge(g));
    out.push_back(best_vertex_deletion(g, k_max));
    out.push_back(lb_treewidth_girth(g));
    out.push_back(conjecture1(g));
    out.push_back(conjecture2(g));
    return out;
}

int best_proven_lower_bound(const Graph& g, int k_max) {
    if (g.order() == 0) return 0;
    long long best = 1;  // any non-empty graph needs at least one seed vertex
    for (const auto& r : evaluate_all(g, k_max))
        if (r.applicable && r.prunable && r.kind == BoundKind::Lower)
            best = std::max(best, *r.value);
    return static_cast<int>(best);
}

int best_proven_upper_bound(const Graph& g) {
    long long best = g.order();
    for (const auto& r : {ub_max_degree(g), ub_not_complete(g), ub_girth(g)})
        if (r.applicable) best = std::min(best, *r.value);
    return static_cast<int>(best);
}

}  // namespace zf
