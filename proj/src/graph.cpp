#include "lgp/graph.hpp"

#include <algorithm>
#include <numeric>

namespace lgp {

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
        fail(Errc::vertex_out_of_range, "vertex id " + std::to_string(v) + " out of range");
}

Graph Graph::build(int n_vertices, std::span<const std::pair<int, int>> edge_list) {
    if (n_vertices < 0)
        fail(Errc::bad_parameter, "negative vertex count");
    Graph g;
    g.n_ = n_vertices;
    g.incident_.resize(n_vertices);
    g.edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u == v)
            fail(Errc::loop_edge, "loop at vertex " + std::to_string(u));
        g.check_vertex(u);
        g.check_vertex(v);
        if (u > v)
            std::swap(u, v);
        if (g.has_edge(u, v))
            fail(Errc::duplicate_edge,
                 "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        EdgeId e = static_cast<EdgeId>(g.edges_.size());
        g.edges_.emplace_back(u, v);
        g.incident_[u].push_back(e);
        g.incident_[v].push_back(e);
    }
    return g;
}

Graph Graph::build(int n_vertices, std::initializer_list<std::pair<int, int>> edge_list) {
    return build(n_vertices, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

std::pair<VertexId, VertexId> Graph::edge(EdgeId e) const {
    if (e < 0 || e >= edge_count())
        fail(Errc::edge_out_of_range, "edge id " + std::to_string(e) + " out of range");
    return edges_[e];
}

const std::vector<EdgeId>& Graph::incident(VertexId v) const {
    check_vertex(v);
    return incident_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const { return edge_between(u, v).has_value(); }

std::optional<EdgeId> Graph::edge_between(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        return std::nullopt;
    if (u > v)
        std::swap(u, v);
    const auto& inc = incident_[u];
    for (EdgeId e : inc)
        if (edges_[e] == std::make_pair(u, v))
            return e;
    return std::nullopt;
}

std::vector<EdgeId> Graph::adjacent_edges(EdgeId e) const {
    auto [u, v] = edge(e);
    std::vector<EdgeId> out;
    out.reserve(incident_[u].size() + incident_[v].size() - 2);
    for (EdgeId f : incident_[u])
        if (f != e)
            out.push_back(f);
    for (EdgeId f : incident_[v])
        if (f != e)
            out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::edge_degree(EdgeId e) const {
    auto [u, v] = edge(e);
    return degree(u) + degree(v) - 2;
}

bool Graph::has_isolated_vertex() const {
    for (VertexId v = 0; v < n_; ++v)
        if (incident_[v].empty())
            return true;
    return false;
}

LineGraphResult line_graph(const Graph& g) {
    int m = g.edge_count();
    std::vector<std::pair<int, int>> le;
    for (EdgeId i = 0; i < m; ++i) {
        auto [a, b] = g.edge(i);
        for (EdgeId j = i + 1; j < m; ++j) {
            auto [c, d] = g.edge(j);
            if (a == c || a == d || b == c || b == d)
                le.emplace_back(i, j);
        }
    }
    LineGraphResult res;
    res.graph = Graph::build(m, le);
    res.vertex_of_edge.resize(m);
    std::iota(res.vertex_of_edge.begin(), res.vertex_of_edge.end(), 0);
    return res;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        d = std::max(d, g.degree(v));
    return d;
}

int omega_line(const Graph& g) {
    if (g.edge_count() == 0)
        return 0;
    int delta = max_degree(g);
    if (delta >= 3)
        return delta;
    if (delta == 2) {
        for (const auto& comp : components(g))
            if (comp.graph.vertex_count() == 3 && comp.graph.edge_count() == 3)
                return 3;
    }
    return delta;
}

namespace {

Subgraph induced_on(const Graph& g, const std::vector<VertexId>& verts,
                    const std::vector<EdgeId>& edge_ids) {
    Subgraph sub;
    sub.vertex_map = verts;
    sub.edge_map = edge_ids;
    std::vector<int> new_id(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i)
        new_id[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    es.reserve(edge_ids.size());
    for (EdgeId e : edge_ids) {
        auto [u, v] = g.edge(e);
        es.emplace_back(new_id[u], new_id[v]);
    }
    sub.graph = Graph::build(static_cast<int>(verts.size()), es);
    return sub;
}

} // namespace

std::vector<Subgraph> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] != -1)
            continue;
        comp[s] = ncomp;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(u)) {
                auto [a, b] = g.edge(e);
                VertexId w = (a == u) ? b : a;
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<VertexId>> verts(ncomp);
    for (VertexId v = 0; v < n; ++v)
        verts[comp[v]].push_back(v);
    std::vector<std::vector<EdgeId>> eids(ncomp);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        eids[comp[g.edge(e).first]].push_back(e);
    std::vector<Subgraph> out;
    out.reserve(ncomp);
    for (int c = 0; c < ncomp; ++c)
        out.push_back(induced_on(g, verts[c], eids[c]));
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0)
        return true;
    return components(g).size() == 1;
}

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edge_ids) {
    std::vector<EdgeId> eids(edge_ids.begin(), edge_ids.end());
    std::sort(eids.begin(), eids.end());
    eids.erase(std::unique(eids.begin(), eids.end()), eids.end());
    std::vector<char> keep(g.vertex_count(), 0);
    for (EdgeId e : eids) {
        auto [u, v] = g.edge(e); // validates
        keep[u] = keep[v] = 1;
    }
    std::vector<VertexId> verts;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (keep[v])
            verts.push_back(v);
    return induced_on(g, verts, eids);
}

namespace {

// Tarjan biconnected components with an explicit edge stack.
struct BlockFinder {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<char> is_cut;
    std::vector<EdgeId> estack;
    BlockDecomposition out;
    int counter = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), num(graph.vertex_count(), -1), low(graph.vertex_count(), 0),
          is_cut(graph.vertex_count(), 0) {}

    void pop_block(EdgeId until) {
        std::vector<EdgeId> blk;
        while (true) {
            EdgeId e = estack.back();
            estack.pop_back();
            blk.push_back(e);
            if (e == until)
                break;
        }
        std::sort(blk.begin(), blk.end());
        out.blocks.push_back(std::move(blk));
    }

    void dfs(VertexId u, EdgeId parent_edge) {
        num[u] = low[u] = counter++;
        int children = 0;
        for (EdgeId e : g.incident(u)) {
            if (e == parent_edge)
                continue;
            auto [a, b] = g.edge(e);
            VertexId w = (a == u) ? b : a;
            if (num[w] == -1) {
                estack.push_back(e);
                ++children;
                dfs(w, e);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= num[u]) {
                    if (parent_edge != -1 || children > 1)
                        is_cut[u] = 1;
                    pop_block(e);
                }
            } else if (num[w] < num[u]) {
                estack.push_back(e);
                low[u] = std::min(low[u], num[w]);
            }
        }
    }

    void run() {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (num[v] == -1)
                dfs(v, -1);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (is_cut[v])
                out.cut_vertices.push_back(v);
        std::sort(out.blocks.begin(), out.blocks.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
    }
};

} // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockFinder bf(g);
    bf.run();
    return bf.out;
}

namespace {

// DFS over vertex orderings minimising the upper-triangle bit string,
// column-major as in graph6. Partial orderings are pruned against the best
// complete string found so far.
struct CanonSearch {
    int n;
    const std::vector<uint16_t>& adj;
    std::vector<int> perm;    // canonical position -> original vertex
    std::vector<char> used;
    std::string current;      // bits for placed columns
    std::string best;
    bool have_best = false;

    CanonSearch(int n_, const std::vector<uint16_t>& adj_) : n(n_), adj(adj_), used(n_, 0) {}

    void place(int depth, bool tied) {
        if (depth == n) {
            if (!have_best || current < best) {
                best = current;
                have_best = true;
            }
            return;
        }
        size_t col_start = current.size();
        for (int x = 0; x < n; ++x) {
            if (used[x])
                continue;
            current.resize(col_start);
            for (int i = 0; i < depth; ++i)
                current.push_back((adj[x] >> perm[i]) & 1 ? '1' : '0');
            bool next_tied = tied;
            if (tied && have_best) {
                int cmp = current.compare(col_start, std::string::npos, best, col_start,
                                          current.size() - col_start);
                if (cmp > 0)
                    continue;
                if (cmp < 0)
                    next_tied = false;
            }
            used[x] = 1;
            perm.push_back(x);
            place(depth + 1, next_tied);
            perm.pop_back();
            used[x] = 0;
        }
        current.resize(col_start);
    }
};

} // namespace

std::string canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > kCanonicalVertexLimit)
        fail(Errc::size_limit, "canonical_form limited to " +
                                   std::to_string(kCanonicalVertexLimit) + " vertices");
    std::vector<uint16_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= static_cast<uint16_t>(1u << v);
        adj[v] |= static_cast<uint16_t>(1u << u);
    }
    CanonSearch cs(n, adj);
    cs.place(0, true);
    return std::to_string(n) + ":" + cs.best;
}

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

// backtracking bijection a -> b preserving adjacency both ways
struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> map;     // a vertex -> b vertex or -1
    std::vector<char> used;   // b vertex taken

    IsoSearch(const Graph& a_, const Graph& b_)
        : a(a_), b(b_), map(a_.vertex_count(), -1), used(b_.vertex_count(), 0) {}

    bool extend(int v) {
        if (v == a.vertex_count())
            return true;
        for (int w = 0; w < b.vertex_count(); ++w) {
            if (used[w] || a.degree(v) != b.degree(w))
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (a.has_edge(u, v) != b.has_edge(map[u], w))
                    ok = false;
            if (!ok)
                continue;
            map[v] = w;
            used[w] = 1;
            if (extend(v + 1))
                return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    }
};

} // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    if (sorted_degrees(a) != sorted_degrees(b))
        return false;
    IsoSearch s(a, b);
    return s.extend(0);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> es(a.edges());
    int off = a.vertex_count();
    for (auto [u, v] : b.edges())
        es.emplace_back(u + off, v + off);
    return Graph::build(a.vertex_count() + b.vertex_count(), es);
}

} // namespace lgp
