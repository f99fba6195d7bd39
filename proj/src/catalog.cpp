#include "ramsey/catalog.hpp"

#include "ramsey/error.hpp"

namespace ramsey {

Structure linear_order(int n) {
    if (n < 0) throw Error(ErrorCode::invalid_argument, "negative order size");
    return Structure(Signature{}, n, {}).with_identity_order();
}

Structure graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Tuple> tuples;
    for (auto [u, v] : edges) {
        if (u == v) throw Error(ErrorCode::invalid_argument, "graph edge is a loop");
        tuples.push_back({u, v});
        tuples.push_back({v, u});
    }
    return Structure(binary_signature(), n, {std::move(tuples)});
}

Structure edgeless_graph(int n) { return graph_from_edges(n, {}); }

Structure complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return graph_from_edges(n, edges);
}

Structure path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return graph_from_edges(n, edges);
}

Structure star_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return graph_from_edges(n, edges);
}

namespace {

std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

Structure graph_from_mask(int n, const std::vector<std::pair<int, int>>& pairs, unsigned mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask & (1u << i)) edges.push_back(pairs[i]);
    return graph_from_edges(n, edges);
}

}  // namespace

std::vector<Structure> graphs_up_to_isomorphism(int n) {
    if (n < 0 || n > 6) throw Error(ErrorCode::invalid_argument, "graph catalog supports 0..6 vertices");
    auto pairs = vertex_pairs(n);
    std::vector<Structure> reps;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        auto g = graph_from_mask(n, pairs, mask);
        bool fresh = true;
        for (const auto& r : reps)
            if (is_isomorphic(r, g)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(std::move(g));
    }
    return reps;
}

std::vector<Structure> ordered_graphs(int n) {
    if (n < 0 || n > 6) throw Error(ErrorCode::invalid_argument, "graph catalog supports 0..6 vertices");
    auto pairs = vertex_pairs(n);
    std::vector<Structure> out;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask)
        out.push_back(graph_from_mask(n, pairs, mask).with_identity_order());
    return out;
}

}  // namespace ramsey
