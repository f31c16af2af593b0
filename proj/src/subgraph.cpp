#include "lgp/subgraph.hpp"

#include <algorithm>

#include "lgp/catalog.hpp"

namespace lgp {

namespace {

// Pattern vertices are matched in an order where every vertex after the
// first of its component has an already-matched neighbour.
std::vector<int> match_order(const Graph& pattern) {
    int n = pattern.vertex_count();
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        // prefer a vertex adjacent to a placed one, highest degree first
        for (int v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            bool touches = false;
            for (EdgeId e : pattern.incident(v)) {
                auto [a, b] = pattern.edge(e);
                if (placed[a == v ? b : a]) {
                    touches = true;
                    break;
                }
            }
            if (touches && (next == -1 || pattern.degree(v) > pattern.degree(next)))
                next = v;
        }
        if (next == -1) { // start a new component at an unplaced max-degree vertex
            for (int v = 0; v < n; ++v)
                if (!placed[v] && (next == -1 || pattern.degree(v) > pattern.degree(next)))
                    next = v;
        }
        placed[next] = 1;
        order.push_back(next);
    }
    return order;
}

bool degree_dominates(const Graph& host, const Graph& pattern) {
    std::vector<int> hd, pd;
    for (int v = 0; v < host.vertex_count(); ++v)
        hd.push_back(host.degree(v));
    for (int v = 0; v < pattern.vertex_count(); ++v)
        pd.push_back(pattern.degree(v));
    std::sort(hd.rbegin(), hd.rend());
    std::sort(pd.rbegin(), pd.rend());
    for (size_t i = 0; i < pd.size(); ++i)
        if (pd[i] > hd[i])
            return false;
    return true;
}

struct EmbedSearch {
    const Graph& host;
    const Graph& pattern;
    bool induced;
    std::vector<int> order;
    std::vector<int> map;   // pattern vertex -> host vertex or -1
    std::vector<char> used; // host vertex taken

    EmbedSearch(const Graph& h, const Graph& p, bool ind)
        : host(h), pattern(p), induced(ind), order(match_order(p)), map(p.vertex_count(), -1),
          used(h.vertex_count(), 0) {}

    bool place(size_t idx) {
        if (idx == order.size())
            return true;
        int pv = order[idx];
        for (int hv = 0; hv < host.vertex_count(); ++hv) {
            if (used[hv] || host.degree(hv) < pattern.degree(pv))
                continue;
            bool ok = true;
            for (size_t j = 0; j < idx && ok; ++j) {
                int pu = order[j];
                bool pe = pattern.has_edge(pu, pv);
                bool he = host.has_edge(map[pu], hv);
                if (pe && !he)
                    ok = false;
                if (induced && !pe && he)
                    ok = false;
            }
            if (!ok)
                continue;
            map[pv] = hv;
            used[hv] = 1;
            if (place(idx + 1))
                return true;
            used[hv] = 0;
            map[pv] = -1;
        }
        return false;
    }
};

std::optional<Embedding> embed(const Graph& host, const Graph& pattern, bool induced) {
    if (pattern.vertex_count() > host.vertex_count() ||
        pattern.edge_count() > host.edge_count())
        return std::nullopt;
    if (!degree_dominates(host, pattern))
        return std::nullopt;
    EmbedSearch s(host, pattern, induced);
    if (!s.place(0))
        return std::nullopt;
    Embedding emb;
    emb.vertex_map = s.map;
    emb.edge_map.resize(pattern.edge_count());
    for (EdgeId e = 0; e < pattern.edge_count(); ++e) {
        auto [u, v] = pattern.edge(e);
        emb.edge_map[e] = *host.edge_between(s.map[u], s.map[v]);
    }
    return emb;
}

} // namespace

std::optional<Embedding> contains_edge_induced(const Graph& host, const Graph& pattern) {
    if (pattern.has_isolated_vertex())
        fail(Errc::isolated_vertex_in_pattern, "contains_edge_induced: pattern must be iso-free");
    return embed(host, pattern, /*induced=*/false);
}

std::optional<Embedding> contains_vertex_induced(const Graph& host, const Graph& pattern) {
    return embed(host, pattern, /*induced=*/true);
}

LineGraphVerdict is_line_graph(const Graph& g) {
    for (int i = 1; i <= 9; ++i) {
        const Graph& ni = beineke_graph(i);
        if (auto emb = contains_vertex_induced(g, ni))
            return {false, i, std::move(emb)};
    }
    return {true, 0, std::nullopt};
}

} // namespace lgp
