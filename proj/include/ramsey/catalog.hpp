#pragma once

// Named small structures used by tests, fixtures and CLI shorthands.

#include "ramsey/relstruct.hpp"

#include <utility>
#include <vector>

namespace ramsey {

/// The n-element linear order: empty signature, identity order.
Structure linear_order(int n);

/// Undirected graph on 0..n-1 with both orientations of every edge stored.
Structure graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);
Structure edgeless_graph(int n);
Structure complete_graph(int n);
Structure path_graph(int n);
Structure star_graph(int n);

/// One representative per isomorphism class of graphs on n vertices, in
/// increasing order of the edge-set bitmask of the first labelled graph seen.
std::vector<Structure> graphs_up_to_isomorphism(int n);

/// Every graph on the labelled set 0..n-1 with the identity order attached.
/// Ordered graphs are rigid, so this is one object per isomorphism type.
std::vector<Structure> ordered_graphs(int n);

}  // namespace ramsey
