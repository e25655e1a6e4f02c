#include "zf/generators.hpp"

#include <array>
#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "zf/errors.hpp"

namespace zf {
namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw GenError(msg);
}

}  // namespace

Graph make_path(int n) {
    require(n >= 1, "path needs n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph::from_edge_list(n, edges);
}

Graph make_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({n - 1, 0});
    return Graph::from_edge_list(n, edges);
}

Graph make_complete(int n) {
    require(n >= 1, "complete needs n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) edges.push_back({u, v});
    return Graph::from_edge_list(n, edges);
}

Graph make_empty(int n) {
    require(n >= 0, "empty needs n >= 0, got " + std::to_string(n));
    return Graph::from_edge_list(n, {});
}

Graph make_complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "complete_bipartite needs a, b >= 1, got " +
                                  std::to_string(a) + "," + std::to_string(b));
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph::from_edge_list(a + b, edges);
}

Graph make_grid222k(int k) {
    require(k >= 1, "grid222k needs k >= 1, got " + std::to_string(k));
    auto id = [](int x, int y, int t) { return x + 2 * y + 4 * t; };
    std::vector<Edge> edges;
    for (int t = 0; t < k; ++t)
        for (int y = 0; y < 2; ++y)
            for (int x = 0; x < 2; ++x) {
                if (x == 0) edges.push_back({id(0, y, t), id(1, y, t)});
                if (y == 0) edges.push_back({id(x, 0, t), id(x, 1, t)});
                if (t + 1 < k) edges.push_back({id(x, y, t), id(x, y, t + 1)});
            }
    return Graph::from_edge_list(4 * k, edges);
}

Graph make_petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
    std::vector<Edge> edges;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            const auto& [a, b] = pairs[static_cast<std::size_t>(i)];
            const auto& [c, d] = pairs[static_cast<std::size_t>(j)];
            if (a != c && a != d && b != c && b != d) edges.push_back({i, j});
        }
    return Graph::from_edge_list(10, edges);
}

Graph make_heawood() {
    std::vector<Edge> edges;
    for (int i = 0; i < 7; ++i)
        for (int off : {0, 1, 3}) edges.push_back({i, 7 + (i + off) % 7});
    return Graph::from_edge_list(14, edges);
}

Graph generate(std::string_view spec) {
    std::string_view name = spec;
    std::vector<int> params;
    if (const auto colon = spec.find(':'); colon != std::string_view::npos) {
        name = spec.substr(0, colon);
        std::string_view rest = spec.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view tok = rest.substr(0, comma);
            int value = 0;
            const auto [ptr, ec] =
                std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw GenError("bad generator parameter '" + std::string(tok) +
                               "' in '" + std::string(spec) + "'");
            params.push_back(value);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }

    auto arity = [&](std::size_t want) {
        require(params.size() == want,
                std::string(name) + " takes " + std::to_string(want) +
                    " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "path") {
        arity(1);
        return make_path(params[0]);
    }
    if (name == "cycle") {
        arity(1);
        return make_cycle(params[0]);
    }
    if (name == "complete") {
        arity(1);
        return make_complete(params[0]);
    }
    if (name == "empty") {
        arity(1);
        return make_empty(params[0]);
    }
    if (name == "complete_bipartite") {
        arity(2);
        return make_complete_bipartite(params[0], params[1]);
    }
    if (name == "grid222k") {
        arity(1);
        return make_grid222k(params[0]);
    }
    if (name == "petersen") {
        arity(0);
        return make_petersen();
    }
    if (name == "heawood") {
        arity(0);
        return make_heawood();
    }
    throw GenError("unknown graph family '" + std::string(name) +
                   "' (known: path, cycle, complete, empty, "
                   "complete_bipartite, grid222k, petersen, heawood)");
}

}  // namespace zf
