#include "zf/graph6.hpp"

#include <vector>

#include "zf/errors.hpp"

namespace zf {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

// Guard against hostile size prefixes; adjacency storage is O(n^2) bits.
constexpr unsigned long long kMaxOrder = 100000;

// Value (0..63) of the 6-bit group at `pos`, validating presence and range.
int group_at(std::string_view line, std::size_t pos) {
    if (pos >= line.size())
        throw ParseError("unexpected end of graph6 line", line.size());
    const unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126)
        throw ParseError("character out of graph6 range 63..126", pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t pos = 0;
    if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    if (pos >= line.size()) throw ParseError("empty graph6 line", pos);

    unsigned long long n = 0;
    const int v0 = group_at(line, pos);
    if (v0 < 63) {
        n = static_cast<unsigned long long>(v0);
        ++pos;
    } else if (group_at(line, pos + 1) < 63) {
        ++pos;  // 4-byte form: 126 then 18 bits
        for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<unsigned>(group_at(line, pos++));
    } else {
        pos += 2;  // 8-byte form: 126 126 then 36 bits
        for (int i = 0; i < 6; ++i) n = (n << 6) | static_cast<unsigned>(group_at(line, pos++));
    }
    if (n > kMaxOrder)
        throw ParseError("graph order " + std::to_string(n) +
                             " exceeds the supported maximum " +
                             std::to_string(kMaxOrder),
                         0);

    const unsigned long long bits = n < 2 ? 0 : n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    const std::size_t have = line.size() - pos;
    if (have < need)
        throw ParseError("graph6 line too short: need " + std::to_string(need) +
                             " edge bytes for n=" + std::to_string(n) +
                             ", have " + std::to_string(have),
                         line.size());
    if (have > need)
        throw ParseError("graph6 line too long: need " + std::to_string(need) +
                             " edge bytes for n=" + std::to_string(n) +
                             ", have " + std::to_string(have),
                         pos + need);

    std::vector<Edge> edges;
    unsigned long long bit = 0;
    int u = 0;
    int v = 1;
    for (std::size_t i = 0; i < need; ++i) {
        const int val = group_at(line, pos + i);
        for (int j = 5; j >= 0; --j, ++bit) {
            const bool set = ((val >> j) & 1) != 0;
            if (bit >= bits) {
                if (set) throw ParseError("nonzero padding bits", pos + i);
                continue;
            }
            if (set) edges.push_back({u, v});
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const auto n = static_cast<unsigned long long>(g.order());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int s = 12; s >= 0; s -= 6)
            out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int s = 30; s >= 0; s -= 6)
            out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    }
    int acc = 0;
    int nbits = 0;
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits != 0) {
        acc <<= (6 - nbits);
        out.push_back(static_cast<char>(63 + acc));
    }
    return out;
}

}  // namespace zf
