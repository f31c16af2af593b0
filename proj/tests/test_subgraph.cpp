#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgp/catalog.hpp"
#include "lgp/enumerate.hpp"
#include "lgp/subgraph.hpp"
#include "oracles.hpp"

using namespace lgp;

TEST_CASE("edge-induced containment examples") {
    CHECK(contains_edge_induced(path_graph(6), path_graph(5)));
    CHECK(contains_edge_induced(make_permitted(DiamondOfFlowers{3}),
                                make_named(ConfigName::Diamond)));
    CHECK_FALSE(contains_edge_induced(cycle_graph(4), path_graph(5)));
    CHECK_FALSE(contains_edge_induced(make_permitted(Satellite{1, 1}), path_graph(6)));

    Graph with_iso = disjoint_union(path_graph(2), Graph::build(1, {}));
    CHECK_THROWS_AS(contains_edge_induced(path_graph(3), with_iso), Error);
}

TEST_CASE("embedding witnesses are consistent") {
    Graph host = make_permitted(DiamondOfFlowers{2});
    Graph pat = make_named(ConfigName::Diamond);
    auto emb = contains_edge_induced(host, pat);
    REQUIRE(emb);
    for (EdgeId e = 0; e < pat.edge_count(); ++e) {
        auto [u, v] = pat.edge(e);
        auto [hu, hv] = host.edge(emb->edge_map[e]);
        CHECK(std::minmax(emb->vertex_map[u], emb->vertex_map[v]) ==
              std::minmax(hu, hv));
    }
}

TEST_CASE("vertex-induced containment examples") {
    Graph claw_plus = Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    CHECK(contains_vertex_induced(claw_plus, star_graph(3)));
    CHECK_FALSE(contains_vertex_induced(complete_graph(4), cycle_graph(4)));
    Graph lf1 = line_graph(make_named(ConfigName::F1)).graph;
    CHECK_FALSE(contains_vertex_induced(lf1, star_graph(3)));
}

TEST_CASE("line graph test on named graphs") {
    auto claw = is_line_graph(star_graph(3));
    CHECK_FALSE(claw.is_line_graph);
    CHECK(claw.violating_pattern == 1);
    CHECK_FALSE(is_line_graph(make_named(ConfigName::N9)).is_line_graph);
    CHECK(is_line_graph(complete_graph(3)).is_line_graph);
    CHECK(is_line_graph(Graph::build(2, {})).is_line_graph);
}

TEST_CASE("all nine test graphs fail the line-graph test") {
    for (int i = 1; i <= 9; ++i)
        CHECK_FALSE(is_line_graph(beineke_graph(i)).is_line_graph);
}

TEST_CASE("line graphs of small roots pass the test") {
    for (const Graph& g : graphs_by_edges(8))
        CHECK(is_line_graph(line_graph(g).graph).is_line_graph);
}

TEST_CASE("beineke test agrees with root-graph existence") {
    // independent route: H is a line graph iff some connected root with
    // |V(H)| edges has line graph H (plus the empty-graph convention)
    std::vector<Graph> roots = connected_graphs_by_edges(6);
    auto has_root = [&](const Graph& h) {
        if (h.edge_count() == 0)
            return true; // L(nK2)
        for (const Graph& r : roots)
            if (r.edge_count() == h.vertex_count() &&
                isomorphic(line_graph(r).graph, h))
                return true;
        return false;
    };
    for (const Graph& h : connected_graphs_by_vertices(6)) {
        bool beineke = is_line_graph(h).is_line_graph;
        CHECK(beineke == has_root(h));
    }
}

TEST_CASE("containment agrees with the subset-enumeration oracle") {
    std::vector<Graph> patterns;
    for (ConfigName c : all_config_names())
        patterns.push_back(make_named(c));
    for (const Graph& g : graphs_by_edges(6)) {
        for (const Graph& p : patterns) {
            bool got = contains_edge_induced(g, p).has_value();
            CHECK(got == oracles::brute_edge_induced(g, p));
        }
    }
    // spot checks at eight edges, where whole-matrix brute force gets slow
    const Graph hosts[] = {make_named(ConfigName::F2), make_permitted(Satellite{2, 2}),
                           make_permitted(StarBook{2, 2, 1}),
                           make_permitted(SingleGalaxy{2, 1})};
    for (const Graph& g : hosts)
        for (const Graph& p : patterns) {
            bool got = contains_edge_induced(g, p).has_value();
            CHECK(got == oracles::brute_edge_induced(g, p));
        }
}

TEST_CASE("containment is transitive through intermediates") {
    const Graph g1 = make_permitted(SingleGalaxy{2, 2});
    const Graph g2 = make_named(ConfigName::F3);
    const Graph hosts[] = {g1, g2};
    std::vector<Graph> mids = {path_graph(5), make_permitted(VaseOfFlowers{2}),
                               make_named(ConfigName::F1), cycle_graph(3)};
    std::vector<Graph> pats = {path_graph(4), path_graph(3), complete_graph(3), path_graph(2)};
    for (const Graph& g : hosts)
        for (const Graph& h : mids)
            for (const Graph& p : pats)
                if (contains_edge_induced(g, h) && contains_edge_induced(h, p))
                    CHECK(contains_edge_induced(g, p));
}
