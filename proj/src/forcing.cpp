#include "zf/forcing.hpp"

#include <bit>

#include "zf/kernels.hpp"

namespace zf {

namespace {

void require_colorset(const Graph& g, const ColorSet& s) {
    if (s.universe() != g.order())
        throw GraphError("color set universe does not match graph order");
}

// White neighbors of v under the given coloring; stops counting past 2.
// Returns the count (capped at 2) and the single white neighbor when count==1.
std::pair<int, int> white_neighbor(const Graph& g, const VertexSet& colored, int v) {
    const Word* row = g.row(v);
    auto cw = colored.words();
    int count = 0, single = -1;
    for (int i = 0; i < g.row_words(); ++i) {
        Word white = row[i] & ~cw[i];
        while (white) {
            if (++count > 1) return {2, -1};
            single = static_cast<int>(i * 64 + std::countr_zero(white));
            white &= white - 1;
        }
    }
    return {count, single};
}

}  // namespace

std::pair<ColorSet, std::vector<std::pair<int, int>>> force_step(const Graph& g,
                                                                 const ColorSet& colored) {
    require_colorset(g, colored);
    ColorSet newly(g.order());
    std::vector<std::pair<int, int>> forces;
    // Ascending scan makes the recorded forcer the least-index one per target.
    colored.for_each([&](int v) {
        auto [count, w] = white_neighbor(g, colored, v);
        if (count == 1 && !newly.contains(w)) {
            newly.add(w);
            forces.emplace_back(v, w);
        }
    });
    return {newly, forces};
}

ForcingTrace closure(const Graph& g, const ColorSet& start) {
    require_colorset(g, start);
    ForcingTrace tr;
    tr.layers.push_back(start);

    auto active_of = [&](const ColorSet& s) {
        ColorSet act(g.order());
        s.for_each([&](int v) {
            if (white_neighbor(g, s, v).first == 1) act.add(v);
        });
        return act;
    };

    for (;;) {
        const ColorSet& cur = tr.layers.back();
        tr.active.push_back(active_of(cur));
        auto [newly, forces] = force_step(g, cur);
        if (newly.empty()) break;
        int round = static_cast<int>(tr.layers.size());
        for (auto [v, w] : forces) tr.forces.push_back({v, w, round});
        tr.layers.push_back(cur | newly);
    }
    return tr;
}

bool is_zero_forcing_set(const Graph& g, const ColorSet& start) {
    require_colorset(g, start);
    const int n = g.order();
    if (n == 0) return true;
    if (g.row_words() == 1) {
        Word full = (n == 64) ? ~Word{0} : (Word{1} << n) - 1;
        return kernels::active_kernel().closure(g.rows(), n, start.word0()) == full;
    }
    ColorSet cur = start;
    for (;;) {
        auto [newly, forces] = force_step(g, cur);
        if (newly.empty()) return cur == VertexSet::full(n);
        cur |= newly;
    }
}

ColorSet closure_sequential(const Graph& g, const ColorSet& start) {
    require_colorset(g, start);
    ColorSet cur = start;
    for (;;) {
        int forcer = -1, forced = -1;
        cur.for_each([&](int v) {
            if (forcer >= 0) return;  // least eligible forcer wins
            auto [count, w] = white_neighbor(g, cur, v);
            if (count == 1) {
                forcer = v;
                forced = w;
            }
        });
        if (forcer < 0) return cur;
        cur.add(forced);
    }
}

}  // namespace zf
