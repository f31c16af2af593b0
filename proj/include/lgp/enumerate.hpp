#pragma once

#include <functional>

#include "lgp/graph.hpp"

namespace lgp {

/// All graphs on exactly n_vertices labelled vertices, one per isomorphism
/// class, in a deterministic order (ascending edge count, then canonical
/// form). Smaller graphs appear padded with isolated vertices.
std::vector<Graph> all_graphs(int n_vertices);

/// Connected graphs with 1..max_edges edges and no isolated vertices, one
/// per isomorphism class, grown by edge augmentation.
std::vector<Graph> connected_graphs_by_edges(int max_edges);

/// Iso-free graphs with 1..max_edges edges (disconnected ones included),
/// one per isomorphism class: multiset unions of the connected ones.
std::vector<Graph> graphs_by_edges(int max_edges);

/// Connected graphs on 1..max_vertices vertices with at least min_edges
/// edges, one per isomorphism class.
std::vector<Graph> connected_graphs_by_vertices(int max_vertices, int min_edges = 0);

} // namespace lgp
