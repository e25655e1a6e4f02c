// Regenerates the checked-in graph6 fixtures:
//   connected_upto8.g6            every connected graph with 1 <= n <= 8
//   tf_connected_delta2_upto10.g6 every connected triangle-free graph with
//                                 min degree >= 2 and 4 <= n <= 10
// Enumeration is augmentation (add one vertex joined to every subset /
// independent subset) with canonical-form deduplication. Level totals are
// asserted against the known counts of all / connected / triangle-free
// graphs, so a bug here fails loudly instead of producing a short fixture.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "zf/graph.hpp"
#include "zf/graph6.hpp"

namespace {

using Word = std::uint64_t;

constexpr int kMaxN = 10;

struct Rows {
    int n = 0;
    std::array<Word, kMaxN + 1> adj{};
};

bool connected(const Rows& g) {
    if (g.n == 0) return false;
    Word seen = 1;
    Word frontier = 1;
    while (frontier) {
        Word next = 0;
        for (Word f = frontier; f;) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.adj[static_cast<std::size_t>(v)];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (Word{1} << g.n) - 1;
}

int min_degree(const Rows& g) {
    int best = g.n;
    for (int v = 0; v < g.n; ++v)
        best = std::min(best, std::popcount(g.adj[static_cast<std::size_t>(v)]));
    return best;
}

bool independent(const Rows& g, Word mask) {
    for (Word m = mask; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        if (g.adj[static_cast<std::size_t>(v)] & mask) return false;
    }
    return true;
}

Rows extend(const Rows& g, Word mask) {
    Rows h = g;
    h.n = g.n + 1;
    h.adj[static_cast<std::size_t>(g.n)] = mask;
    for (Word m = mask; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        h.adj[static_cast<std::size_t>(v)] |= Word{1} << g.n;
    }
    return h;
}

// Canonical form: the lexicographically largest column-packed adjacency
// string over vertex orders that respect (degree, neighbor-degree multiset)
// classes, found by branch-and-bound with twin skipping. Any isomorphism-
// invariant restriction of the candidate orders keeps the key canonical:
// equal keys force both graphs to equal the graph the key spells out.
class Canon {
public:
    explicit Canon(Rows g) : g_(g) {
        classify();
        best_.assign(static_cast<std::size_t>(g.n), 0);
        perm_.assign(static_cast<std::size_t>(g.n), -1);
        dfs(0);
    }

    // All C(n,2) <= 45 column bits packed into one word, low columns first.
    Word key() const {
        Word k = 0;
        int shift = 0;
        for (int p = 0; p < g_.n; ++p) {
            k |= best_[static_cast<std::size_t>(p)] << shift;
            shift += p;
        }
        return k;
    }

    Rows result() const {
        Rows h;
        h.n = g_.n;
        for (int p = 1; p < g_.n; ++p)
            for (int j = 0; j < p; ++j)
                if ((best_[static_cast<std::size_t>(p)] >> (p - 1 - j)) & 1) {
                    h.adj[static_cast<std::size_t>(j)] |= Word{1} << p;
                    h.adj[static_cast<std::size_t>(p)] |= Word{1} << j;
                }
        return h;
    }

private:
    void classify() {
        struct Inv {
            int deg;
            std::vector<int> nbr_degs;
            int v;
            bool operator<(const Inv& o) const {
                if (deg != o.deg) return deg > o.deg;
                return nbr_degs > o.nbr_degs;
            }
            bool same(const Inv& o) const {
                return deg == o.deg && nbr_degs == o.nbr_degs;
            }
        };
        std::vector<Inv> invs;
        for (int v = 0; v < g_.n; ++v) {
            Inv iv{std::popcount(g_.adj[static_cast<std::size_t>(v)]), {}, v};
            for (Word m = g_.adj[static_cast<std::size_t>(v)]; m;) {
                const int u = std::countr_zero(m);
                m &= m - 1;
                iv.nbr_degs.push_back(
                    std::popcount(g_.adj[static_cast<std::size_t>(u)]));
            }
            std::sort(iv.nbr_degs.rbegin(), iv.nbr_degs.rend());
            invs.push_back(std::move(iv));
        }
        std::sort(invs.begin(), invs.end());
        class_members_.clear();
        cls_of_pos_.clear();
        for (std::size_t i = 0; i < invs.size(); ++i) {
            if (i == 0 || !invs[i].same(invs[i - 1]))
                class_members_.emplace_back();
            class_members_.back().push_back(invs[i].v);
            cls_of_pos_.push_back(static_cast<int>(class_members_.size()) - 1);
        }
    }

    bool twins(int x, int y) const {
        const Word drop = (Word{1} << x) | (Word{1} << y);
        return (g_.adj[static_cast<std::size_t>(x)] & ~drop) ==
               (g_.adj[static_cast<std::size_t>(y)] & ~drop);
    }

    void dfs(int pos) {
        if (pos == g_.n) return;
        std::vector<int> tried;
        for (int x : class_members_[static_cast<std::size_t>(
                 cls_of_pos_[static_cast<std::size_t>(pos)])]) {
            if (used_ & (Word{1} << x)) continue;
            bool dup = false;
            for (int y : tried)
                if (twins(x, y)) {
                    dup = true;
                    break;
                }
            tried.push_back(x);
            if (dup) continue;
            Word col = 0;
            for (int j = 0; j < pos; ++j)
                col = (col << 1) |
                      ((g_.adj[static_cast<std::size_t>(x)] >>
                        perm_[static_cast<std::size_t>(j)]) &
                       1);
            if (pos < valid_len_) {
                if (col < best_[static_cast<std::size_t>(pos)]) continue;
                if (col > best_[static_cast<std::size_t>(pos)]) {
                    best_[static_cast<std::size_t>(pos)] = col;
                    valid_len_ = pos + 1;
                }
            } else {
                best_[static_cast<std::size_t>(pos)] = col;
                valid_len_ = pos + 1;
            }
            perm_[static_cast<std::size_t>(pos)] = x;
            used_ |= Word{1} << x;
            dfs(pos + 1);
            used_ &= ~(Word{1} << x);
        }
    }

    const Rows g_;  // by value: the argument is usually a temporary
    std::vector<std::vector<int>> class_members_;
    std::vector<int> cls_of_pos_;
    std::vector<Word> best_;
    std::vector<int> perm_;
    Word used_ = 0;
    int valid_len_ = 0;
};

std::map<Word, Rows> augment(const std::map<Word, Rows>& prev, bool tf_only) {
    std::map<Word, Rows> out;
    for (const auto& [key, g] : prev) {
        (void)key;
        for (Word mask = 0; mask < (Word{1} << g.n); ++mask) {
            if (tf_only && !independent(g, mask)) continue;
            const Canon canon(extend(g, mask));
            out.emplace(canon.key(), canon.result());
        }
    }
    return out;
}

std::string to_g6(const Rows& g) {
    std::vector<zf::Edge> edges;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u)
            if ((g.adj[static_cast<std::size_t>(v)] >> u) & 1)
                edges.push_back({u, v});
    return zf::write_graph6(zf::Graph::from_edge_list(g.n, edges));
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FIXTURE GENERATION FAILED: " << what << "\n";
        std::exit(1);
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::string outdir = argc > 1 ? argv[1] : "tests/fixtures";
    std::filesystem::create_directories(outdir);

    // All graphs, then the connected ones, n <= 8.
    const std::vector<std::size_t> all_counts = {1, 2, 4, 11, 34, 156, 1044, 12346};
    const std::vector<std::size_t> conn_counts = {1, 1, 2, 6, 21, 112, 853, 11117};
    {
        std::ofstream out(outdir + "/connected_upto8.g6");
        expect(static_cast<bool>(out), "cannot write connected_upto8.g6");
        std::map<Word, Rows> level;
        level.emplace(0, Rows{1, {}});
        for (int n = 1; n <= 8; ++n) {
            if (n > 1) level = augment(level, false);
            expect(level.size() == all_counts[static_cast<std::size_t>(n - 1)],
                   "graph count mismatch at n=" + std::to_string(n) + ": got " +
                       std::to_string(level.size()));
            std::size_t conn = 0;
            for (const auto& [key, g] : level) {
                (void)key;
                if (!connected(g)) continue;
                ++conn;
                out << to_g6(g) << "\n";
            }
            expect(conn == conn_counts[static_cast<std::size_t>(n - 1)],
                   "connected count mismatch at n=" + std::to_string(n) +
                       ": got " + std::to_string(conn));
            std::cerr << "n=" << n << ": " << level.size() << " graphs, "
                      << conn << " connected\n";
        }
    }

    // Triangle-free graphs, then the connected min-degree >= 2 ones, n <= 10.
    const std::vector<std::size_t> tf_counts = {1,   2,   3,    7,    14,
                                                38,  107, 410,  1897, 12172};
    {
        std::ofstream out(outdir + "/tf_connected_delta2_upto10.g6");
        expect(static_cast<bool>(out), "cannot write tf fixture");
        std::map<Word, Rows> level;
        level.emplace(0, Rows{1, {}});
        std::size_t kept_total = 0;
        for (int n = 1; n <= 10; ++n) {
            if (n > 1) level = augment(level, true);
            expect(level.size() == tf_counts[static_cast<std::size_t>(n - 1)],
                   "triangle-free count mismatch at n=" + std::to_string(n) +
                       ": got " + std::to_string(level.size()));
            std::size_t kept = 0;
            for (const auto& [key, g] : level) {
                (void)key;
                if (!connected(g) || min_degree(g) < 2) continue;
                ++kept;
                out << to_g6(g) << "\n";
            }
            kept_total += kept;
            std::cerr << "n=" << n << ": " << level.size()
                      << " triangle-free, " << kept
                      << " connected with min degree >= 2\n";
        }
        std::cerr << "triangle-free fixture total: " << kept_total << "\n";
    }

    std::cerr << "fixtures written to " << outdir << "\n";
    return 0;
}
