// Independent brute-force oracles used only by the test suites. These stay
// deliberately naive and avoid the library's own algorithms for the things
// they check.
#pragma once

#include <algorithm>
#include <vector>

#include "lgp/game.hpp"
#include "lgp/graph.hpp"

namespace lgp::oracles {

/// Maximum clique by exhaustive vertex-subset search.
inline int brute_clique(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    std::vector<int> members;
    auto rec = [&](auto&& self, int next) -> void {
        best = std::max(best, static_cast<int>(members.size()));
        for (int v = next; v < n; ++v) {
            bool ok = true;
            for (int u : members)
                if (!g.has_edge(u, v))
                    ok = false;
            if (!ok)
                continue;
            members.push_back(v);
            self(self, v + 1);
            members.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

/// Edge-induced containment by enumerating all edge subsets of the host
/// with the pattern's size and testing isomorphism.
inline bool brute_edge_induced(const Graph& host, const Graph& pattern) {
    int mh = host.edge_count(), mp = pattern.edge_count();
    if (mp > mh || mp == 0)
        return mp == 0;
    std::vector<EdgeId> pick;
    auto rec = [&](auto&& self, int next) -> bool {
        if (static_cast<int>(pick.size()) == mp) {
            Subgraph sub = edge_subgraph(host, pick);
            return isomorphic(sub.graph, pattern);
        }
        for (int e = next; e < mh; ++e) {
            pick.push_back(e);
            if (self(self, e + 1))
                return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

/// Blocks as the transitive closure of "lies on a common simple cycle",
/// found by enumerating all simple cycles.
inline std::vector<std::vector<EdgeId>> brute_blocks(const Graph& g) {
    int m = g.edge_count();
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i)
        parent[i] = i;
    auto find = [&](auto&& self, int x) -> int {
        return parent[x] == x ? x : parent[x] = self(self, parent[x]);
    };
    auto unite = [&](int a, int b) { parent[find(find, a)] = find(find, b); };

    // enumerate simple cycles: DFS paths from each start vertex, closing
    // back to the start, start being the smallest vertex of the cycle
    std::vector<VertexId> path;
    std::vector<EdgeId> path_edges;
    std::vector<char> on_path(g.vertex_count(), 0);
    auto dfs = [&](auto&& self, VertexId start, VertexId u) -> void {
        for (EdgeId e : g.incident(u)) {
            auto [a, b] = g.edge(e);
            VertexId w = (a == u) ? b : a;
            if (w == start && path.size() >= 3) {
                for (size_t i = 1; i < path_edges.size(); ++i)
                    unite(path_edges[0], path_edges[i]);
                unite(path_edges[0], e);
                continue;
            }
            if (w <= start || on_path[w])
                continue;
            on_path[w] = 1;
            path.push_back(w);
            path_edges.push_back(e);
            self(self, start, w);
            path.pop_back();
            path_edges.pop_back();
            on_path[w] = 0;
        }
    };
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        on_path[s] = 1;
        path = {s};
        dfs(dfs, s, s);
        on_path[s] = 0;
    }
    std::vector<std::vector<EdgeId>> out;
    std::vector<int> root_of(m, -1);
    for (int e = 0; e < m; ++e) {
        int r = find(find, e);
        if (root_of[r] == -1) {
            root_of[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[root_of[r]].push_back(e);
    }
    for (auto& blk : out)
        std::sort(blk.begin(), blk.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

/// Plain minimax over the rules layer: no memo, no shortcuts. The reference
/// the production solver is checked against.
inline Player reference_solve(const GameState& s, GameVariant v) {
    if (auto w = terminal(s, /*dead_edge_shortcut=*/false))
        return *w;
    Player me = s.to_move();
    for (const Move& m : legal_moves(s, v))
        if (reference_solve(play_move(s, m, v), v) == me)
            return me;
    return opponent(me);
}

} // namespace lgp::oracles
