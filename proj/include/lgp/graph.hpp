#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lgp/error.hpp"

namespace lgp {

using VertexId = int;
using EdgeId = int;

/// Simple undirected graph with dense integer vertex ids and edge ids
/// assigned in construction order. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on n_vertices with the given edges. Edge ids follow
    /// input order; endpoints are stored low-id-first. Rejects loops,
    /// duplicate edges and out-of-range vertex ids.
    static Graph build(int n_vertices, std::span<const std::pair<int, int>> edge_list);
    static Graph build(int n_vertices, std::initializer_list<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<VertexId, VertexId> edge(EdgeId e) const;
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    /// Edge ids incident with v, ascending.
    const std::vector<EdgeId>& incident(VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

    bool has_edge(VertexId u, VertexId v) const;
    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

    /// Edge ids adjacent to e (sharing an endpoint), ascending.
    std::vector<EdgeId> adjacent_edges(EdgeId e) const;

    /// Number of edges adjacent to e: deg(u) + deg(v) - 2.
    int edge_degree(EdgeId e) const;

    bool has_isolated_vertex() const;

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<EdgeId>> incident_;

    void check_vertex(VertexId v) const;
};

struct LineGraphResult {
    Graph graph;
    std::vector<VertexId> vertex_of_edge; // edge id of source -> vertex id of line graph
};

/// Line graph: one vertex per edge of g, adjacency iff the edges share an
/// endpoint. Isolated vertices of g leave no trace.
LineGraphResult line_graph(const Graph& g);

int max_degree(const Graph& g);

/// Clique number of the line graph, by the star/triangle rule: Delta(g) if
/// Delta(g) >= 3; 3 if Delta(g) = 2 and some component is a triangle;
/// 0 for an edgeless graph; Delta(g) otherwise.
int omega_line(const Graph& g);

/// A graph carved out of a host, with maps back to host ids.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> vertex_map; // new vertex id -> host vertex id
    std::vector<EdgeId> edge_map;     // new edge id -> host edge id
};

/// Connected components in order of smallest contained vertex id.
/// Isolated vertices become single-vertex components.
std::vector<Subgraph> components(const Graph& g);

bool is_connected(const Graph& g);

/// Edge-induced subgraph: vertex set = endpoints of the chosen edges,
/// edge set = exactly the chosen edges. Result is iso-free.
Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edge_ids);

struct BlockDecomposition {
    std::vector<std::vector<EdgeId>> blocks; // 2-connected blocks and bridge edges; partition of E
    std::vector<VertexId> cut_vertices;
};

BlockDecomposition blocks(const Graph& g);

/// Practical bound for canonical_form; beyond it the permutation search is
/// not attempted.
inline constexpr int kCanonicalVertexLimit = 12;

/// Canonical byte string: equal iff isomorphic. Brute-force permutation
/// minimisation with prefix pruning; vertex count is part of the string,
/// so graphs differing only in isolated vertices are distinct.
std::string canonical_form(const Graph& g);

/// Isomorphism test. Uses cheap invariants, then a backtracking bijection
/// search, so it also works above the canonical_form size limit.
bool isomorphic(const Graph& a, const Graph& b);

/// Disjoint union; vertices and edges of b are appended after a's.
Graph disjoint_union(const Graph& a, const Graph& b);

} // namespace lgp
