#include "lgp/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lgp {

std::vector<Graph> all_graphs(int n_vertices) {
    if (n_vertices > 7)
        fail(Errc::size_limit, "all_graphs: more than 7 vertices exceeds the desk-scale budget");
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n_vertices; ++j)
        for (int i = 0; i < j; ++i)
            pairs.emplace_back(i, j);
    int np = static_cast<int>(pairs.size());
    std::map<std::string, Graph> seen;
    std::vector<std::pair<int, int>> edges;
    for (long mask = 0; mask < (1L << np); ++mask) {
        edges.clear();
        for (int i = 0; i < np; ++i)
            if (mask >> i & 1)
                edges.push_back(pairs[i]);
        Graph g = Graph::build(n_vertices, edges);
        std::string key = std::to_string(edges.size()) + "|" + canonical_form(g);
        seen.emplace(std::move(key), std::move(g));
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [k, g] : seen)
        out.push_back(std::move(g));
    // map is keyed "m|canon" with m unpadded; reorder by numeric edge count
    std::stable_sort(out.begin(), out.end(),
                     [](const Graph& a, const Graph& b) { return a.edge_count() < b.edge_count(); });
    return out;
}

std::vector<Graph> connected_graphs_by_edges(int max_edges) {
    if (max_edges > 9)
        fail(Errc::size_limit, "connected_graphs_by_edges: beyond desk scale");
    std::vector<Graph> out;
    if (max_edges < 1)
        return out;
    std::map<std::string, Graph> level;
    Graph k2 = Graph::build(2, {{0, 1}});
    level.emplace(canonical_form(k2), k2);
    for (int m = 1; m <= max_edges; ++m) {
        for (auto& [key, g] : level)
            out.push_back(g);
        if (m == max_edges)
            break;
        std::map<std::string, Graph> next;
        for (auto& [key, g] : level) {
            int n = g.vertex_count();
            auto grow = [&](int extra_vertex, std::pair<int, int> e) {
                std::vector<std::pair<int, int>> es(g.edges());
                es.push_back(e);
                Graph h = Graph::build(n + extra_vertex, es);
                next.emplace(canonical_form(h), std::move(h));
            };
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v)
                    if (!g.has_edge(u, v))
                        grow(0, {u, v});
                grow(1, {u, n});
            }
        }
        level = std::move(next);
    }
    return out;
}

std::vector<Graph> graphs_by_edges(int max_edges) {
    std::vector<Graph> conn = connected_graphs_by_edges(max_edges);
    // sort pieces for a deterministic combination order
    std::vector<std::string> conn_keys(conn.size());
    for (size_t i = 0; i < conn.size(); ++i)
        conn_keys[i] = canonical_form(conn[i]);

    std::vector<Graph> out;
    std::set<std::vector<std::string>> seen; // multisets of component canonical forms
    // DFS over multisets of connected pieces with nondecreasing index
    std::vector<size_t> chosen;
    std::function<void(size_t, int)> rec = [&](size_t min_idx, int edges_left) {
        if (!chosen.empty()) {
            std::vector<std::string> sig;
            for (size_t i : chosen)
                sig.push_back(conn_keys[i]);
            std::sort(sig.begin(), sig.end());
            if (seen.insert(sig).second) {
                Graph g;
                for (size_t i : chosen)
                    g = disjoint_union(g, conn[i]);
                out.push_back(std::move(g));
            }
        }
        for (size_t i = min_idx; i < conn.size(); ++i) {
            int m = conn[i].edge_count();
            if (m > edges_left)
                continue;
            chosen.push_back(i);
            rec(i, edges_left - m);
            chosen.pop_back();
        }
    };
    rec(0, max_edges);
    std::stable_sort(out.begin(), out.end(),
                     [](const Graph& a, const Graph& b) { return a.edge_count() < b.edge_count(); });
    return out;
}

std::vector<Graph> connected_graphs_by_vertices(int max_vertices, int min_edges) {
    if (max_vertices > 7)
        fail(Errc::size_limit, "connected_graphs_by_vertices: beyond desk scale");
    std::vector<Graph> out;
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                pairs.emplace_back(i, j);
        int np = static_cast<int>(pairs.size());
        std::set<std::string> seen;
        std::vector<std::pair<int, int>> edges;
        for (long mask = 0; mask < (1L << np); ++mask) {
            edges.clear();
            for (int i = 0; i < np; ++i)
                if (mask >> i & 1)
                    edges.push_back(pairs[i]);
            if (static_cast<int>(edges.size()) < min_edges)
                continue;
            Graph g = Graph::build(n, edges);
            if (!is_connected(g))
                continue;
            if (seen.insert(canonical_form(g)).second)
                out.push_back(std::move(g));
        }
    }
    return out;
}

} // namespace lgp
