#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zf/graph.hpp"
#include "zf/vertex_set.hpp"

namespace zf {

enum class BoundKind { Lower, Upper };

/// Witness for the vertex-deletion lower bound: the deleted set K and the
/// structure of the residual graph that makes the bound applicable.
struct DeletionCertificate {
    VertexSet removed{0};         // K in the original labeling
    int k = 0;                    // |K|
    Girth residual_girth = Girth::infinite();
    int residual_min_degree = 0;
};

/// One bound's verdict on one graph. `value` is clamped to >= 0 for lower
/// bounds; `raw_value` keeps the unclamped formula result. Both are present
/// exactly when the bound is applicable.
struct BoundReport {
    std::string key;
    BoundKind kind = BoundKind::Lower;
    bool conjectural = false;
    bool applicable = false;
    std::string reason;    // why the guard passed or failed
    std::optional<long long> value;
    std::optional<long long> raw_value;
    std::string citation;  // the inequality this report evaluates
    bool prunable = false;  // proven lower bounds may seed the exact solver

    std::optional<int> cut_vertex;                      // lb_cut_vertex witness
    std::optional<DeletionCertificate> certificate;     // lb_vertex_deletion witness
};

// Stable keys; these appear verbatim in CLI, CSV and JSON output.
namespace bound_keys {
inline constexpr const char* lb_min_degree = "lb_min_degree";
inline constexpr const char* ub_max_degree = "ub_max_degree";
inline constexpr const char* ub_not_complete = "ub_not_complete";
inline constexpr const char* ub_girth = "ub_girth";
inline constexpr const char* lb_triangle_free = "lb_triangle_free";
inline constexpr const char* lb_girth5 = "lb_girth5";
inline constexpr const char* lb_cut_vertex = "lb_cut_vertex";
inline constexpr const char* lb_cut_edge = "lb_cut_edge";
inline constexpr const char* lb_vertex_deletion = "lb_vertex_deletion";
inline constexpr const char* lb_tw_girth = "lb_tw_girth";
inline constexpr const char* conj_girth = "conj_girth";
inline constexpr const char* conj_triangle_free = "conj_triangle_free";
}  // namespace bound_keys

/// Z >= delta. Always applicable on non-empty graphs.
BoundReport lb_min_degree(const Graph& g);

/// Z <= floor(n*Delta/(Delta+1)), requires delta >= 1.
BoundReport ub_max_degree(const Graph& g);

/// Z <= n-2 for non-empty, non-complete graphs.
BoundReport ub_not_complete(const Graph& g);

/// Z <= n-g+2, requires a cycle.
BoundReport ub_girth(const Graph& g);

/// Z >= delta+1 for triangle-free graphs with delta >= 3.
BoundReport lb_triangle_free(const Graph& g);

/// Z >= 2*delta-2 for girth >= 5 (infinite qualifies) and delta >= 2.
BoundReport lb_girth5(const Graph& g);

/// Z >= 3*delta-6 when delta >= 3 and some cut vertex leaves a component of
/// girth >= 5; names the least qualifying cut vertex.
BoundReport lb_cut_vertex(const Graph& g);

/// Z >= 4*delta-9 when delta >= 3, girth >= 5 and a cut edge exists.
BoundReport lb_cut_edge(const Graph& g);

/// Z >= 2*delta(G) - 3|K| - 2 when the residual graph G-K has min degree >= 2
/// and girth >= 5. Throws GraphError when K is not within V.
BoundReport lb_vertex_deletion(const Graph& g, const VertexSet& removed);

/// Maximizes the vertex-deletion bound over all K with |K| <= k_max
/// (colex-least K among ties). Inapplicable when no K qualifies.
BoundReport best_vertex_deletion(const Graph& g, int k_max);

/// Z >= tw(G) >= ceil((dbar-1)^(floor((g-1)/2)-1) / (12(g+1))), requires a
/// cycle and average degree > 1. Evaluated in exact rational arithmetic.
BoundReport lb_treewidth_girth(const Graph& g);

/// Conjectured: Z >= (g-3)(delta-2)+delta for finite girth and delta >= 2.
BoundReport conjecture1(const Graph& g);

/// Conjectured: Z >= 2*delta-2 for triangle-free graphs with delta >= 2.
BoundReport conjecture2(const Graph& g);

/// Every bound above in fixed key order; lb_vertex_deletion is evaluated via
/// best_vertex_deletion(g, k_max).
std::vector<BoundReport> evaluate_all(const Graph& g, int k_max);

/// Largest applicable proven (prunable) lower bound, clamped to >= 1 for
/// non-empty graphs; used to seed the exact search.
int best_proven_lower_bound(const Graph& g, int k_max);

/// Smallest applicable proven upper bound, defaulting to n.
int best_proven_upper_bound(const Graph& g);

}  // namespace zf
