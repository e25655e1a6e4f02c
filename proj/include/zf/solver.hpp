#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zf/forcing.hpp"
#include "zf/graph.hpp"

namespace zf {

struct ZfOptions {
    // Wall-clock budget for the whole computation; absent = unbounded.
    std::optional<std::chrono::milliseconds> budget;
    // Worker threads for the subset scan. Results are identical for any
    // thread count; only the wall time changes.
    int threads = 1;
    // |K| cap handed to the vertex-deletion bound when seeding the search.
    int seed_k_max = 2;
};

struct ZfResult {
    int z = 0;
    ColorSet witness{0};  // colex-least zero forcing set of size z
    unsigned long long subsets_tested = 0;
    std::chrono::duration<double, std::milli> elapsed{0};
};

/// Raised when the budget runs out; carries the proven bracket for Z(G).
class TimeoutError : public std::runtime_error {
public:
    TimeoutError(int lower, int upper);
    int lower() const { return lower_; }
    int upper() const { return upper_; }

private:
    int lower_;
    int upper_;
};

/// Exact Z(G) by lower-bound-seeded subset search in colex order, solved per
/// connected component (Z is additive over components). The witness is the
/// colexicographically least minimum zero forcing set. Components larger
/// than 64 vertices are rejected with GraphError.
ZfResult zero_forcing_number(const Graph& g, const ZfOptions& opts = {});

/// Every minimum zero forcing set, in colex order. Guarded by `cap` since
/// the enumeration is exhaustive; throws CapError when g.order() > cap.
std::vector<ColorSet> all_minimum_zfs(const Graph& g, int cap = 14);

enum class Verdict { Holds, Fails, Inapplicable };

/// Checks, over every minimum zero forcing set S, that each vertex forced in
/// round 1 keeps a neighbor outside S. Inapplicable unless the graph is
/// triangle-free with min degree >= 3 (the hypothesis the claim rides on);
/// callers may still probe smaller degrees via lemma1_check_unguarded.
Verdict lemma1_check(const Graph& g, int cap = 14);

/// Same predicate without the triangle-free / degree guard; never returns
/// Inapplicable. Exposed so the guard boundary itself can be explored.
Verdict lemma1_check_unguarded(const Graph& g, int cap = 14);

/// True iff every minimum zero forcing set contains two adjacent vertices
/// that both force in round 1. Same cap as all_minimum_zfs.
bool requires_two_neighbor_start(const Graph& g, int cap = 14);

}  // namespace zf
