#include "lgp/checks.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lgp/enumerate.hpp"
#include "lgp/graph_io.hpp"
#include "lgp/recognizer.hpp"
#include "lgp/strategy.hpp"

namespace lgp::checks {

namespace {

std::string bool01(bool b) { return b ? "1" : "0"; }

} // namespace

Outcome forbidden_configurations(const SolveOptions& opt) {
    Outcome out{"forbidden-configurations"};
    struct Case {
        ConfigName config;
        GameVariant game;
        int k; // the omega(L) value the claim is about
    };
    const std::vector<Case> cases = {
        {ConfigName::P5, kGameBB, 2},      {ConfigName::C4, kGameAminus, 2},
        {ConfigName::P6, kGameAA, 2},      {ConfigName::C5, kGameAA, 2},
        {ConfigName::F1, kGameBA, 3},      {ConfigName::F2, kGameAA, 3},
        {ConfigName::F3, kGameAA, 4},      {ConfigName::F1uF1, kGameAA, 3},
        {ConfigName::P5uP2, kGameBminus, 2}, {ConfigName::C4uP2, kGameBminus, 2},
        {ConfigName::Bull, kGameBminus, 3},  {ConfigName::Diamond, kGameBminus, 3},
    };
    for (const auto& c : cases) {
        ++out.cases;
        Graph g = make_named(c.config);
        std::string label = std::string(config_name_string(c.config)) + " [" +
                            variant_code(c.game) + "] k=" + std::to_string(c.k);
        if (omega_line(g) != c.k) {
            out.fail_case(label + ": omega(L) is " + std::to_string(omega_line(g)));
            continue;
        }
        if (solve_edge_game(g, c.game, c.k, opt) != Player::bob)
            out.fail_case(label + ": Alice wins, expected Bob");
    }
    for (PrecolouredName name : {PrecolouredName::F1_1, PrecolouredName::F3_1}) {
        ++out.cases;
        PrecolouredConfig cfg = make_precoloured(name);
        GameState s = cfg.state();
        // an [X,A]-game claim: only the skipper matters from this state on
        if (solve(s, kGameAA, opt) != Player::bob)
            out.fail_case(name == PrecolouredName::F1_1 ? "F1^1: expected Bob"
                                                        : "F3^1: expected Bob");
    }
    return out;
}

std::vector<std::pair<PermittedParams, GameVariant>> permitted_grid(int max_edges) {
    std::vector<std::pair<PermittedParams, GameVariant>> grid;
    auto add = [&](PermittedParams p, GameVariant v) {
        if (make_permitted(p).edge_count() <= max_edges)
            grid.emplace_back(std::move(p), v);
    };
    for (int n = 0; n <= 6; ++n)
        add(VaseOfFlowers{n}, kGameBB);
    for (int m = 0; m <= 4; ++m)
        for (int n = m; n <= 4; ++n)
            add(DoubleStar{m, n}, kGameBB);
    for (int m = 1; m <= 3; ++m)
        for (int n1 = 0; n1 <= 2; ++n1)
            for (int n2 = 0; n2 <= 2; ++n2)
                add(Candy{m, n1, n2}, kGameBminus);
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            add(ShootingStar{m, n}, kGameBminus);
    for (int n = 0; n <= 3; ++n)
        add(DoubleVase{n}, kGameBminus);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n)
            add(Amaryllis{m, n}, kGameBminus);
    for (int m = 1; m <= 3; ++m)
        for (int n1 = 0; n1 <= 2; ++n1)
            for (int n2 = 0; n2 <= 2; ++n2)
                add(StarBook{m, n1, n2}, kGameBA);
    for (int n = 0; n <= 4; ++n)
        add(DiamondOfFlowers{n}, kGameBA);
    for (int n = 0; n <= 3; ++n)
        add(TetrahedronOfFlowers{n}, kGameBA);
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l + k <= 3; ++l)
            add(SingleGalaxy{k, l}, kGameBA);
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; l + k <= 3; ++l)
            for (int m = 0; m <= 2; ++m)
                for (int n = 0; n <= 2; ++n)
                    add(DoubleGalaxy{k, l, m, n}, kGameBA);
    for (int n = 0; n <= 3; ++n)
        for (int m1 = 0; m1 <= 3; ++m1)
            for (int m2 = m1; m2 <= 3; ++m2)
                add(FullTree{n, m1, m2}, kGameAA);
    for (int m1 = 0; m1 <= 2; ++m1)
        for (int m2 = m1; m2 <= 2; ++m2)
            add(Satellite{m1, m2}, kGameAA);
    grid.emplace_back(IsolatedVertex{}, kGameBB);
    return grid;
}

Outcome permitted_types(const SolveOptions& opt, int max_edges) {
    Outcome out{"permitted-types"};
    for (const auto& [params, game] : permitted_grid(max_edges)) {
        ++out.cases;
        PermittedInstance inst = make_permitted_instance(params);
        std::string label = permitted_to_string(params) + " [" + variant_code(game) + "]";
        int k = omega_line(inst.graph);
        if (solve_edge_game(inst.graph, game, k, opt) != Player::alice) {
            out.fail_case(label + ": Bob wins at omega(L)=" + std::to_string(k));
            continue;
        }
        if (!std::holds_alternative<std::monostate>(inst.layout)) {
            ValidationResult vr = validate_strategy(inst, game, opt);
            if (!vr.valid)
                out.fail_case(label + ": script refuted (" + vr.note + ")");
        }
    }
    return out;
}

Outcome decider_equivalence(int max_vertices, const SolveOptions& opt, const Logger& log) {
    Outcome out{"decider-equivalence"};
    DefinitionalChecker def(opt, max_vertices * (max_vertices - 1) / 2);
    for (const Graph& g : all_graphs(max_vertices)) {
        ++out.cases;
        bool agree = true;
        std::ostringstream line;
        line << to_graph6(g);
        for (GameVariant v : all_variants()) {
            bool d = def.is_line_xy_perfect(g, v);
            bool f = check_forbidden(g, v).perfect;
            bool s = is_line_xy_perfect_structural(g, v);
            line << ' ' << variant_code(v) << ":" << bool01(d) << bool01(f) << bool01(s);
            if (d != f || f != s)
                agree = false;
        }
        if (!agree)
            out.fail_case("deciders disagree on " + line.str());
        if (log)
            log(line.str() + (agree ? "" : " DISAGREE"));
    }
    return out;
}

Outcome observation_chains(int max_vertices, const SolveOptions& opt, const Logger& log) {
    Outcome out{"observation-chains"};
    // index order AA, A-, AB, BA, B-, BB as in all_variants()
    for (const Graph& g : all_graphs(max_vertices)) {
        ++out.cases;
        int omega = omega_line(g);
        int chi = chromatic_index(g);
        std::array<int, 6> idx;
        for (size_t i = 0; i < 6; ++i)
            idx[i] = game_chromatic_index_value(g, all_variants()[i], opt);
        bool ok = omega <= chi && chi <= idx[0];
        // omega <= chi' <= AA <= A- <= AB <= BB and AA <= BA <= B- <= BB
        ok = ok && idx[0] <= idx[1] && idx[1] <= idx[2] && idx[2] <= idx[5];
        ok = ok && idx[0] <= idx[3] && idx[3] <= idx[4] && idx[4] <= idx[5];
        // class inclusions along the same two chains, plus the three-game
        // verdict equality
        std::array<bool, 6> perf;
        for (size_t i = 0; i < 6; ++i)
            perf[i] = check_forbidden(g, all_variants()[i]).perfect;
        bool lp = is_line_perfect(g);
        auto implies = [](bool a, bool b) { return !a || b; };
        ok = ok && implies(perf[5], perf[2]) && implies(perf[2], perf[1]) &&
             implies(perf[1], perf[0]) && implies(perf[0], lp);
        ok = ok && implies(perf[5], perf[4]) && implies(perf[4], perf[3]) &&
             implies(perf[3], perf[0]);
        ok = ok && perf[5] == perf[2] && perf[2] == perf[1];
        std::ostringstream line;
        line << to_graph6(g) << " w=" << omega << " chi'=" << chi;
        for (size_t i = 0; i < 6; ++i)
            line << ' ' << variant_code(all_variants()[i]) << "=" << idx[i];
        if (!ok)
            out.fail_case("chain violated on " + line.str());
        if (log)
            log(line.str() + (ok ? "" : " VIOLATION"));
    }
    return out;
}

Outcome vertex_edge_duality(int max_edges, int max_k, const SolveOptions& opt,
                            const Logger& log) {
    Outcome out{"vertex-edge-duality"};
    for (const Graph& g : graphs_by_edges(max_edges)) {
        Graph lg = line_graph(g).graph;
        bool ok = true;
        for (GameVariant v : all_variants()) {
            for (int k = 0; k <= max_k; ++k) {
                ++out.cases;
                Player edge_winner = solve_edge_game(g, v, k, opt);
                Player vertex_winner = solve_vertex_game(lg, v, k, opt);
                if (edge_winner != vertex_winner) {
                    ok = false;
                    out.fail_case("edge/vertex solvers disagree: " + to_graph6(g) + " [" +
                                  variant_code(v) + "] k=" + std::to_string(k));
                }
            }
        }
        if (log)
            log(to_graph6(g) + (ok ? " ok" : " DISAGREE"));
    }
    return out;
}

Outcome line_perfect_routes(int max_vertices, const Logger& log) {
    Outcome out{"line-perfect-routes"};
    // no isomorphism reduction: both routes are cheap, duplicates harmless
    int n = max_vertices;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            pairs.emplace_back(i, j);
    std::vector<std::pair<int, int>> edges;
    for (long mask = 0; mask < (1L << pairs.size()); ++mask) {
        edges.clear();
        for (size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(pairs[i]);
        Graph g = Graph::build(n, edges);
        ++out.cases;
        bool trotter = is_line_perfect_trotter(g);
        bool maffray = is_line_perfect_maffray(g);
        if (trotter != maffray) {
            out.fail_case("routes disagree on " + to_graph6(g));
            if (log)
                log(to_graph6(g) + " DISAGREE");
        }
    }
    // the named spot checks
    struct Spot {
        Graph g;
        bool expected;
        const char* name;
    };
    const Spot spots[] = {
        {cycle_graph(5), false, "C5"},
        {complete_graph(4), true, "K4"},
        {make_permitted(StarBook{3, 0, 0}), true, "K_{1,1,3}"},
    };
    for (const auto& s : spots) {
        ++out.cases;
        if (is_line_perfect(s.g) != s.expected)
            out.fail_case(std::string(s.name) + ": wrong verdict");
    }
    return out;
}

Outcome heredity(int max_edges) {
    Outcome out{"heredity"};
    for (const auto& [params, game] : permitted_grid(max_edges)) {
        PermittedInstance inst = make_permitted_instance(params);
        const Graph& g = inst.graph;
        for (EdgeId drop = 0; drop < g.edge_count(); ++drop) {
            ++out.cases;
            std::vector<std::pair<int, int>> rest;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (e != drop)
                    rest.push_back(g.edge(e));
            Graph h = Graph::build(g.vertex_count(), rest);
            if (!is_line_xy_perfect_structural(h, game))
                out.fail_case(permitted_to_string(params) + " [" + variant_code(game) +
                              "] minus edge " + std::to_string(drop) +
                              ": components not permitted");
        }
    }
    return out;
}

Outcome line_graph_recognition(int max_vertices, const Logger& log) {
    Outcome out{"line-graph-recognition"};
    std::vector<Graph> hosts = connected_graphs_by_vertices(max_vertices, 1);
    // every line graph of the enumeration passes the nine-subgraph test
    std::vector<Graph> lines;
    lines.reserve(hosts.size());
    for (const Graph& g : hosts) {
        ++out.cases;
        Graph lg = line_graph(g).graph;
        if (!is_line_graph(lg).is_line_graph)
            out.fail_case("line graph flagged as non-line-graph: host " + to_graph6(g));
        lines.push_back(std::move(lg));
    }
    // the nine test graphs fail it
    for (int i = 1; i <= 9; ++i) {
        ++out.cases;
        if (is_line_graph(beineke_graph(i)).is_line_graph)
            out.fail_case("N" + std::to_string(i) + " passed the line-graph test");
    }
    // collisions: bucket by cheap invariants, compare pairwise
    std::map<std::string, std::vector<size_t>> buckets;
    for (size_t i = 0; i < hosts.size(); ++i) {
        std::ostringstream key;
        key << lines[i].vertex_count() << '/' << lines[i].edge_count() << '/';
        std::vector<int> degs(lines[i].vertex_count());
        for (int v = 0; v < lines[i].vertex_count(); ++v)
            degs[v] = lines[i].degree(v);
        std::sort(degs.begin(), degs.end());
        for (int d : degs)
            key << d << ',';
        buckets[key.str()].push_back(i);
    }
    Graph k3 = complete_graph(3);
    Graph k13 = star_graph(3);
    long collisions = 0;
    for (const auto& [key, idxs] : buckets) {
        for (size_t a = 0; a < idxs.size(); ++a) {
            for (size_t b = a + 1; b < idxs.size(); ++b) {
                ++out.cases;
                if (!isomorphic(lines[idxs[a]], lines[idxs[b]]))
                    continue;
                ++collisions;
                const Graph& g1 = hosts[idxs[a]];
                const Graph& g2 = hosts[idxs[b]];
                bool whitney_pair = (isomorphic(g1, k3) && isomorphic(g2, k13)) ||
                                    (isomorphic(g1, k13) && isomorphic(g2, k3));
                if (!whitney_pair)
                    out.fail_case("unexpected line-graph collision: " + to_graph6(g1) + " vs " +
                                  to_graph6(g2));
                else if (log)
                    log("collision (expected): " + to_graph6(g1) + " / " + to_graph6(g2));
            }
        }
    }
    ++out.cases;
    if (collisions != 1)
        out.fail_case("expected exactly one collision pair, found " + std::to_string(collisions));
    return out;
}

} // namespace lgp::checks
