#pragma once

#include "lgp/graph.hpp"

namespace lgp {

/// Witness of a containment: injective vertex map plus the induced edge map.
struct Embedding {
    std::vector<VertexId> vertex_map; // pattern vertex -> host vertex
    std::vector<EdgeId> edge_map;     // pattern edge -> host edge
};

/// Ordinary subgraph containment: some edge subset of host induces a graph
/// isomorphic to pattern. The pattern must be iso-free, which makes
/// edge-induced containment coincide with subgraph isomorphism.
std::optional<Embedding> contains_edge_induced(const Graph& host, const Graph& pattern);

/// Vertex-induced containment: the embedding preserves edges and non-edges
/// on the mapped vertices.
std::optional<Embedding> contains_vertex_induced(const Graph& host, const Graph& pattern);

struct LineGraphVerdict {
    bool is_line_graph;
    int violating_pattern;          // index 1..9 of the N_i found, 0 if none
    std::optional<Embedding> witness;
};

/// Line-graph test by the nine forbidden induced subgraphs.
LineGraphVerdict is_line_graph(const Graph& g);

} // namespace lgp
