#pragma once

#include <string>
#include <string_view>

#include "zf/graph.hpp"

namespace zf {

// Named families with fixed, reproducible labelings (documented per family).
// All throw GenError on invalid parameters.

Graph make_path(int n);       // vertices 0..n-1 in path order, n >= 1
Graph make_cycle(int n);      // path plus the closing edge {n-1,0}, n >= 3
Graph make_complete(int n);   // n >= 1
Graph make_empty(int n);      // edgeless, n >= 0

/// Parts A = {0..a-1}, B = {a..a+b-1}; a, b >= 1.
Graph make_complete_bipartite(int a, int b);

/// P_2 x P_2 x P_k (Cartesian product); vertex (x,y,t) -> x + 2y + 4t, k >= 1.
Graph make_grid222k(int k);

/// Disjointness graph on the 2-subsets of {0..4}; vertex i is the i-th pair
/// in lexicographic order ((0,1),(0,2),...,(3,4)).
Graph make_petersen();

/// Bipartite on {p_0..p_6} = 0..6 and {l_0..l_6} = 7..13 with p_i ~ l_j
/// iff j in {i, i+1, i+3} mod 7.
Graph make_heawood();

/// Dispatch by "family" or "family:p1,p2" text, e.g. "cycle:6",
/// "complete_bipartite:3,3", "petersen".
Graph generate(std::string_view spec);

}  // namespace zf
