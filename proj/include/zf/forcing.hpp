#pragma once

#include <utility>
#include <vector>

#include "zf/graph.hpp"
#include "zf/vertex_set.hpp"

namespace zf {

using ColorSet = VertexSet;

struct Force {
    int forcer;
    int forced;
    int round;  // 1-based: the force turned S_{round-1} into S_{round}

    bool operator==(const Force&) const = default;
};

/// Full record of a forcing run: the nested layers S_0..S_T, every force
/// with its round, and per-layer active sets (vertices able to force next).
struct ForcingTrace {
    std::vector<ColorSet> layers;
    std::vector<Force> forces;
    std::vector<ColorSet> active;

    const ColorSet& final_set() const { return layers.back(); }
    int rounds() const { return static_cast<int>(layers.size()) - 1; }
};

/// One simultaneous round. Returns the newly colored vertices and the applied
/// forces; when several colored vertices could force the same target, the
/// least-index forcer is recorded.
std::pair<ColorSet, std::vector<std::pair<int, int>>> force_step(const Graph& g,
                                                                 const ColorSet& colored);

/// Runs simultaneous rounds to the fixpoint.
ForcingTrace closure(const Graph& g, const ColorSet& start);

bool is_zero_forcing_set(const Graph& g, const ColorSet& start);

/// Order-independence oracle: applies one force at a time, always the least
/// (forcer, forced) pair, and returns only the terminal colored set.
ColorSet closure_sequential(const Graph& g, const ColorSet& start);

}  // namespace zf
