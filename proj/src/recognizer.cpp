#include "lgp/recognizer.hpp"

#include <algorithm>
#include <numeric>

namespace lgp {

bool is_line_perfect_trotter(const Graph& g) {
    for (int len = 5; len <= g.vertex_count(); len += 2)
        if (contains_edge_induced(g, cycle_graph(len)))
            return false;
    return true;
}

namespace {

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(u)) {
                auto [a, b] = g.edge(e);
                VertexId w = (a == u) ? b : a;
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    stack.push_back(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_triangular_book(const Graph& g) {
    // K_{1,1,n}: an edge uv plus n >= 1 vertices adjacent to exactly u and v
    int nv = g.vertex_count(), ne = g.edge_count();
    if (nv < 3 || ne != 2 * (nv - 2) + 1)
        return false;
    for (EdgeId e = 0; e < ne; ++e) {
        auto [u, v] = g.edge(e);
        bool ok = true;
        for (VertexId w = 0; w < nv && ok; ++w) {
            if (w == u || w == v)
                continue;
            ok = g.degree(w) == 2 && g.has_edge(w, u) && g.has_edge(w, v);
        }
        if (ok)
            return true;
    }
    return false;
}

bool is_k4(const Graph& g) { return g.vertex_count() == 4 && g.edge_count() == 6; }

} // namespace

bool is_line_perfect_maffray(const Graph& g) {
    for (const auto& blk : blocks(g).blocks) {
        Subgraph sub = edge_subgraph(g, blk);
        if (is_bipartite(sub.graph) || is_k4(sub.graph) || is_triangular_book(sub.graph))
            continue;
        return false;
    }
    return true;
}

bool is_line_perfect(const Graph& g) {
    bool trotter = is_line_perfect_trotter(g);
    bool maffray = is_line_perfect_maffray(g);
    if (trotter != maffray)
        fail(Errc::invariant_violation, "line-perfect routes disagree");
    return trotter;
}

const std::vector<ConfigName>& forbidden_list(GameVariant v) {
    static const std::vector<ConfigName> bb = {ConfigName::P5, ConfigName::C4};
    static const std::vector<ConfigName> bminus = {
        ConfigName::P5uP2, ConfigName::C4uP2, ConfigName::P6,     ConfigName::C5,
        ConfigName::Bull,  ConfigName::Diamond, ConfigName::F1};
    static const std::vector<ConfigName> ba = {ConfigName::P6, ConfigName::C5, ConfigName::F1};
    static const std::vector<ConfigName> aa = {ConfigName::P6, ConfigName::C5, ConfigName::F2,
                                               ConfigName::F3, ConfigName::F1uF1};
    if (v == kGameAA)
        return aa;
    if (v == kGameBA)
        return ba;
    if (v == kGameBminus)
        return bminus;
    return bb; // [B,B], [A,B], [A,-] share the list
}

ForbiddenVerdict check_forbidden(const Graph& g, GameVariant v) {
    for (ConfigName name : forbidden_list(v)) {
        Graph pattern = make_named(name);
        if (auto emb = contains_edge_induced(g, pattern))
            return {false, ForbiddenWitness{name, emb->edge_map}};
    }
    return {true, std::nullopt};
}

// --- structural route ---

namespace {

// candidate parameterisations consistent with the vertex/edge counts, then
// an isomorphism test; first match wins
std::optional<PermittedParams> match_class(const Graph& h, const PermittedParams& shape) {
    int nv = h.vertex_count(), ne = h.edge_count();
    auto iso = [&](PermittedParams p) -> std::optional<PermittedParams> {
        Graph built = make_permitted(p);
        if (built.vertex_count() == nv && built.edge_count() == ne && isomorphic(built, h))
            return p;
        return std::nullopt;
    };
    if (std::holds_alternative<IsolatedVertex>(shape)) {
        if (nv == 1 && ne == 0)
            return PermittedParams{IsolatedVertex{}};
        return std::nullopt;
    }
    if (std::holds_alternative<VaseOfFlowers>(shape)) {
        if (nv >= 3 && ne == nv)
            return iso(VaseOfFlowers{nv - 3});
        return std::nullopt;
    }
    if (std::holds_alternative<DoubleStar>(shape)) {
        if (ne != nv - 1 || nv < 2)
            return std::nullopt;
        for (int m = 0; m <= nv - 2; ++m)
            if (auto r = iso(DoubleStar{m, nv - 2 - m}))
                return r;
        return std::nullopt;
    }
    if (std::holds_alternative<Candy>(shape)) {
        int m = ne - nv + 2;
        if (m < 1 || nv - 2 - m < 0)
            return std::nullopt;
        for (int n1 = 0; n1 <= nv - 2 - m; ++n1)
            if (auto r = iso(Candy{m, n1, nv - 2 - m - n1}))
                return r;
        return std::nullopt;
    }
    if (std::holds_alternative<StarBook>(shape)) {
        int m = ne - nv + 1;
        if (m < 1 || nv - 2 - m < 0)
            return std::nullopt;
        for (int n1 = 0; n1 <= nv - 2 - m; ++n1)
            if (auto r = iso(StarBook{m, n1, nv - 2 - m - n1}))
                return r;
        return std::nullopt;
    }
    if (std::holds_alternative<ShootingStar>(shape)) {
        if (ne != nv - 1 || nv < 4)
            return std::nullopt;
        for (int m = 0; m <= nv - 4; ++m)
            if (auto r = iso(ShootingStar{m, nv - 4 - m}))
                return r;
        return std::nullopt;
    }
    if (std::holds_alternative<DoubleVase>(shape)) {
        if (nv >= 5 && ne == nv + 1)
            return iso(DoubleVase{nv - 5});
        return std::nullopt;
    }
    if (std::holds_alternative<Amaryllis>(shape)) {
        if (ne != nv || nv < 4)
            return std::nullopt;
        for (int m = 0; m <= nv - 4; ++m)
            if (auto r = iso(Amaryllis{m, nv - 4 - m}))
                return r;
        return std::nullopt;
    }
    if (std::holds_alternative<DiamondOfFlowers>(shape)) {
        if (nv >= 4 && ne == nv + 1)
            return iso(DiamondOfFlowers{nv - 4});
        return std::nullopt;
    }
    if (std::holds_alternative<TetrahedronOfFlowers>(shape)) {
        if (nv >= 4 && ne == nv + 2)
            return iso(TetrahedronOfFlowers{nv - 4});
        return std::nullopt;
    }
    if (std::holds_alternative<SingleGalaxy>(shape)) {
        int k = ne - nv + 1;
        if (k < 0)
            return std::nullopt;
        int rest = nv - 1 - 2 * k;
        if (rest < 0 || rest % 2)
            return std::nullopt;
        return iso(SingleGalaxy{k, rest / 2});
    }
    if (std::holds_alternative<DoubleGalaxy>(shape)) {
        int k = ne - nv + 1;
        if (k < 0 || nv < 2)
            return std::nullopt;
        int rest = nv - 2 - 2 * k;
        if (rest < 0)
            return std::nullopt;
        for (int l = 0; 2 * l <= rest; ++l)
            for (int m = 0; m <= rest - 2 * l; ++m)
                if (auto r = iso(DoubleGalaxy{k, l, m, rest - 2 * l - m}))
                    return r;
        return std::nullopt;
    }
    if (std::holds_alternative<FullTree>(shape)) {
        if (ne != nv - 1 || nv < 3)
            return std::nullopt;
        for (int n = 0; n <= nv - 3; ++n)
            for (int m1 = 0; m1 <= nv - 3 - n; ++m1)
                if (auto r = iso(FullTree{n, m1, nv - 3 - n - m1}))
                    return r;
        return std::nullopt;
    }
    if (std::holds_alternative<Satellite>(shape)) {
        if (ne != nv || nv < 4)
            return std::nullopt;
        for (int m1 = 0; m1 <= nv - 4; ++m1)
            if (auto r = iso(Satellite{m1, nv - 4 - m1}))
                return r;
        return std::nullopt;
    }
    return std::nullopt;
}

// per-game permitted shapes in the fixed aliasing-precedence order
std::vector<PermittedParams> shape_order(GameVariant v) {
    std::vector<PermittedParams> shapes = {IsolatedVertex{}};
    if (v == kGameBB || v == kGameAB || v == kGameAminus) {
        shapes.insert(shapes.end(), {VaseOfFlowers{0}, DoubleStar{0, 0}});
    } else if (v == kGameBminus) {
        shapes.insert(shapes.end(), {VaseOfFlowers{0}, DoubleStar{0, 0}, Candy{1, 0, 0},
                                     ShootingStar{0, 0}, DoubleVase{0}, Amaryllis{0, 0}});
    } else if (v == kGameBA) {
        shapes.insert(shapes.end(),
                      {Candy{1, 0, 0}, StarBook{1, 0, 0}, DiamondOfFlowers{0},
                       TetrahedronOfFlowers{0}, SingleGalaxy{0, 0}, DoubleGalaxy{0, 0, 0, 0},
                       Satellite{0, 0}});
    } else { // [A,A]
        shapes.insert(shapes.end(),
                      {Candy{1, 0, 0}, StarBook{1, 0, 0}, DiamondOfFlowers{0},
                       TetrahedronOfFlowers{0}, SingleGalaxy{0, 0}, DoubleGalaxy{0, 0, 0, 0},
                       FullTree{0, 0, 0}, Satellite{0, 0}});
    }
    return shapes;
}

} // namespace

bool is_permitted(const ComponentClass& c) {
    return std::holds_alternative<PermittedParams>(c);
}

ComponentClass classify_component(const Graph& h, GameVariant v) {
    if (!is_connected(h))
        fail(Errc::not_connected, "classify_component: input must be connected");
    for (const auto& shape : shape_order(v))
        if (auto p = match_class(h, shape)) {
            // E1/E2 gating as an exclusion test after base-shape matching:
            // the precedence order routes every aliased shape to an earlier
            // class, so a full tree or satellite reached here has leaves
            // everywhere the defining shape demands them
            if (std::holds_alternative<FullTree>(*p)) {
                auto ft = std::get<FullTree>(*p);
                if (ft.n < 1 || ft.m1 < 2 || ft.m2 < 2)
                    fail(Errc::invariant_violation,
                         "full tree matched although an earlier shape should cover it");
            }
            if (std::holds_alternative<Satellite>(*p)) {
                auto st = std::get<Satellite>(*p);
                if (st.m1 < 1 || st.m2 < 1)
                    fail(Errc::invariant_violation,
                         "satellite matched although star book should cover it");
                // a satellite with two leaves on both flanks holds a
                // 3-caterpillar, which game [B,A] forbids outright
                if (v == kGameBA && st.m1 >= 2 && st.m2 >= 2)
                    continue;
            }
            return *p;
        }
    auto verdict = check_forbidden(h, v);
    if (verdict.perfect)
        fail(Errc::invariant_violation,
             "component matches no permitted shape yet contains no forbidden configuration");
    return NotPermitted{*verdict.witness};
}

bool is_special_component(const PermittedParams& p) {
    // the shapes that contain a 3-caterpillar: these are the ones the
    // at-most-one rule of game [A,A] counts
    if (auto ft = std::get_if<FullTree>(&p))
        return ft->n >= 1 && ft->m1 >= 2 && ft->m2 >= 2;
    if (auto st = std::get_if<Satellite>(&p))
        return st->m1 >= 2 && st->m2 >= 2;
    return false;
}

bool is_line_xy_perfect_structural(const Graph& g, GameVariant v) {
    int nontrivial = 0;
    int special = 0;
    std::vector<PermittedParams> classes;
    for (const auto& comp : components(g)) {
        ComponentClass c = classify_component(comp.graph, v);
        if (!is_permitted(c))
            return false;
        if (comp.graph.edge_count() > 0)
            ++nontrivial;
        const auto& p = std::get<PermittedParams>(c);
        if (is_special_component(p))
            ++special;
        classes.push_back(p);
    }
    if (v == kGameAA)
        return special <= 1;
    if (v == kGameBminus) {
        // either everything is a double star / vase / isolated vertex, or
        // there is at most one nontrivial component
        bool all_basic = true;
        for (const auto& p : classes)
            if (!std::holds_alternative<DoubleStar>(p) &&
                !std::holds_alternative<VaseOfFlowers>(p) &&
                !std::holds_alternative<IsolatedVertex>(p))
                all_basic = false;
        return all_basic || nontrivial <= 1;
    }
    return true; // [B,B] family and [B,A]: membership of every component suffices
}

// --- definitional route ---

std::string iso_key(const Graph& g) {
    std::vector<std::string> parts;
    for (const auto& comp : components(g))
        parts.push_back(canonical_form(comp.graph));
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const auto& p : parts) {
        key += p;
        key += ';';
    }
    return key;
}

DefinitionalChecker::DefinitionalChecker(SolveOptions solve, int max_edges)
    : solve_(solve), max_edges_(max_edges) {}

bool DefinitionalChecker::is_line_xy_perfect(const Graph& g, GameVariant v) {
    int m = g.edge_count();
    if (m > max_edges_)
        fail(Errc::budget_exceeded, "definitional checker limited to " +
                                        std::to_string(max_edges_) + " edges");
    if (m == 0)
        return true; // vacuous: no nonempty edge subset
    std::string vc = variant_code(v);
    // ascending subset size so small losing subsets end the scan early
    std::vector<EdgeId> subset;
    auto test_subset = [&](const std::vector<EdgeId>& ids) -> bool { // true = Alice wins
        Subgraph sub = edge_subgraph(g, ids);
        std::string key = iso_key(sub.graph) + "|" + vc;
        if (auto it = nice_at_omega_.find(key); it != nice_at_omega_.end())
            return it->second;
        Solver solver(sub.graph, v, omega_line(sub.graph), solve_);
        bool alice = solver.solve() == Player::alice;
        nice_at_omega_.emplace(std::move(key), alice);
        return alice;
    };
    bool all_alice = true;
    auto rec = [&](auto&& self, int next, int want) -> bool { // false = stop scan
        if (static_cast<int>(subset.size()) == want)
            return test_subset(subset) ? true : (all_alice = false);
        for (int e = next; e < m; ++e) {
            subset.push_back(e);
            bool go_on = self(self, e + 1, want);
            subset.pop_back();
            if (!go_on)
                return false;
        }
        return true;
    };
    for (int size = 1; size <= m && all_alice; ++size)
        rec(rec, 0, size);
    return all_alice;
}

bool is_line_xy_perfect_definitional(const Graph& g, GameVariant v, SolveOptions opt,
                                     int max_edges) {
    DefinitionalChecker checker(opt, max_edges);
    return checker.is_line_xy_perfect(g, v);
}

bool is_edge_xy_perfect(const Graph& g, GameVariant v) {
    if (!check_forbidden(g, v).perfect)
        return false;
    return !contains_edge_induced(g, complete_graph(3)).has_value();
}

PerfectnessVerdict full_verdict(const Graph& g) {
    PerfectnessVerdict out;
    const auto& variants = all_variants();
    for (size_t i = 0; i < variants.size(); ++i) {
        out.line_game_perfect[i] = check_forbidden(g, variants[i]).perfect;
        out.edge_game_perfect[i] = is_edge_xy_perfect(g, variants[i]);
    }
    out.line_perfect = is_line_perfect(g);
    return out;
}

} // namespace lgp
