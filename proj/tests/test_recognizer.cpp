#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgp/checks.hpp"
#include "lgp/enumerate.hpp"
#include "lgp/recognizer.hpp"

using namespace lgp;

TEST_CASE("classical line perfectness") {
    CHECK_FALSE(is_line_perfect(cycle_graph(5)));
    CHECK(is_line_perfect(complete_graph(4)));
    CHECK(is_line_perfect(Graph::build(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 5}})));
    CHECK(is_line_perfect(make_permitted(StarBook{3, 0, 0}))); // K_{1,1,3}
    CHECK_FALSE(is_line_perfect(cycle_graph(7)));
    CHECK(is_line_perfect(cycle_graph(6)));
    CHECK(is_line_perfect(Graph::build(0, {})));
}

TEST_CASE("the two line-perfect routes agree on small graphs") {
    for (const Graph& g : connected_graphs_by_vertices(6))
        CHECK(is_line_perfect_trotter(g) == is_line_perfect_maffray(g));
}

TEST_CASE("forbidden lists per game") {
    CHECK(forbidden_list(kGameBB) == forbidden_list(kGameAB));
    CHECK(forbidden_list(kGameBB) == forbidden_list(kGameAminus));
    CHECK(forbidden_list(kGameBB).size() == 2);
    CHECK(forbidden_list(kGameBminus).size() == 7);
    CHECK(forbidden_list(kGameBA).size() == 3);
    CHECK(forbidden_list(kGameAA).size() == 5);
}

TEST_CASE("check_forbidden examples") {
    auto v1 = check_forbidden(path_graph(5), kGameBB);
    CHECK_FALSE(v1.perfect);
    CHECK(v1.witness->config == ConfigName::P5);
    CHECK(v1.witness->edges.size() == 4);

    CHECK(check_forbidden(make_permitted(Satellite{2, 3}), kGameAA).perfect);

    Graph two_sats = disjoint_union(make_permitted(Satellite{2, 3}),
                                    make_permitted(Satellite{2, 3}));
    auto v2 = check_forbidden(two_sats, kGameAA);
    CHECK_FALSE(v2.perfect);
    CHECK(v2.witness->config == ConfigName::F1uF1);

    CHECK_FALSE(check_forbidden(cycle_graph(4), kGameAminus).perfect);
    CHECK(check_forbidden(cycle_graph(4), kGameAA).perfect);
    CHECK(check_forbidden(complete_graph(3), kGameBB).perfect);
}

TEST_CASE("classify_component examples") {
    auto c1 = classify_component(make_permitted(StarBook{4, 2, 3}), kGameBA);
    REQUIRE(is_permitted(c1));
    auto sb = std::get<StarBook>(std::get<PermittedParams>(c1));
    CHECK(sb.m == 4);
    CHECK(sb.n1 + sb.n2 == 5);

    auto c2 = classify_component(path_graph(4), kGameBB);
    REQUIRE(is_permitted(c2));
    auto ds = std::get<DoubleStar>(std::get<PermittedParams>(c2));
    CHECK(ds.m + ds.n == 2);

    auto c3 = classify_component(make_permitted(FullTree{3, 4, 5}), kGameBA);
    REQUIRE_FALSE(is_permitted(c3));
    CHECK(std::get<NotPermitted>(c3).witness.config == ConfigName::F1);

    CHECK_THROWS_AS(classify_component(make_named(ConfigName::F1uF1), kGameAA), Error);
}

TEST_CASE("satellites at the caterpillar boundary") {
    // one flank with a single leaf: no 3-caterpillar inside, playable in
    // both [B,A] and [A,A]
    auto ba = classify_component(make_permitted(Satellite{1, 1}), kGameBA);
    REQUIRE(is_permitted(ba));
    CHECK_FALSE(is_special_component(std::get<PermittedParams>(ba)));

    // two leaves on both flanks: contains the caterpillar, [B,A] rejects it
    auto ba22 = classify_component(make_permitted(Satellite{2, 2}), kGameBA);
    REQUIRE_FALSE(is_permitted(ba22));
    CHECK(std::get<NotPermitted>(ba22).witness.config == ConfigName::F1);

    auto aa22 = classify_component(make_permitted(Satellite{2, 2}), kGameAA);
    REQUIRE(is_permitted(aa22));
    CHECK(is_special_component(std::get<PermittedParams>(aa22)));

    auto ft = classify_component(make_permitted(FullTree{1, 2, 2}), kGameAA);
    REQUIRE(is_permitted(ft));
    CHECK(is_special_component(std::get<PermittedParams>(ft)));
    CHECK_FALSE(is_special_component(PermittedParams{FullTree{2, 1, 3}})); // shooting star
}

TEST_CASE("classification round trip over the grid") {
    for (const auto& [params, game] : checks::permitted_grid(9)) {
        Graph g = make_permitted(params);
        if (!is_connected(g))
            continue;
        ComponentClass c = classify_component(g, game);
        REQUIRE(is_permitted(c));
        CHECK(isomorphic(make_permitted(std::get<PermittedParams>(c)), g));
    }
}

TEST_CASE("structural decider side conditions") {
    Graph two_vases = disjoint_union(make_permitted(VaseOfFlowers{2}),
                                     make_permitted(VaseOfFlowers{4}));
    CHECK(is_line_xy_perfect_structural(two_vases, kGameBB));

    Graph candy_plus = disjoint_union(make_permitted(Candy{2, 1, 1}), path_graph(2));
    CHECK_FALSE(is_line_xy_perfect_structural(candy_plus, kGameBminus));
    CHECK(is_line_xy_perfect_structural(make_permitted(Candy{2, 1, 1}), kGameBminus));
    Graph candy_iso = disjoint_union(make_permitted(Candy{2, 1, 1}), Graph::build(2, {}));
    CHECK(is_line_xy_perfect_structural(candy_iso, kGameBminus));

    Graph ds_and_vase = disjoint_union(make_permitted(DoubleStar{2, 2}),
                                       make_permitted(VaseOfFlowers{1}));
    CHECK(is_line_xy_perfect_structural(ds_and_vase, kGameBminus));

    CHECK(is_line_xy_perfect_structural(Graph::build(0, {}), kGameAA));

    Graph two_specials = disjoint_union(make_permitted(Satellite{2, 2}),
                                        make_permitted(FullTree{1, 2, 2}));
    CHECK_FALSE(is_line_xy_perfect_structural(two_specials, kGameAA));
    Graph one_special = disjoint_union(make_permitted(Satellite{2, 2}),
                                       make_permitted(Candy{2, 1, 0}));
    CHECK(is_line_xy_perfect_structural(one_special, kGameAA));
}

TEST_CASE("definitional decider") {
    CHECK_FALSE(is_line_xy_perfect_definitional(cycle_graph(4), kGameAminus));
    CHECK(is_line_xy_perfect_definitional(cycle_graph(4), kGameAA));
    for (GameVariant v : all_variants())
        CHECK(is_line_xy_perfect_definitional(complete_graph(3), v));
    CHECK(is_line_xy_perfect_definitional(Graph::build(3, {}), kGameBB));
    CHECK_THROWS_AS(is_line_xy_perfect_definitional(complete_graph(5), kGameAA), Error);
}

TEST_CASE("edge perfectness adds the triangle") {
    CHECK_FALSE(is_edge_xy_perfect(make_permitted(VaseOfFlowers{2}), kGameBB));
    CHECK(is_edge_xy_perfect(make_permitted(DoubleStar{3, 2}), kGameBB));
    CHECK(is_edge_xy_perfect(cycle_graph(4), kGameAA));
    CHECK_FALSE(is_edge_xy_perfect(path_graph(5), kGameBB));
    for (size_t i = 0; i < all_variants().size(); ++i) {
        PerfectnessVerdict pv = full_verdict(make_permitted(VaseOfFlowers{1}));
        CHECK_FALSE(pv.edge_game_perfect[i]);
    }
}

TEST_CASE("verdict panel respects the class inclusions") {
    const Graph gs[] = {path_graph(4),  cycle_graph(4), make_permitted(VaseOfFlowers{3}),
                        path_graph(6),  complete_graph(4), make_named(ConfigName::F1)};
    auto implies = [](bool a, bool b) { return !a || b; };
    for (const Graph& g : gs) {
        PerfectnessVerdict pv = full_verdict(g);
        // order: AA, A-, AB, BA, B-, BB
        CHECK(implies(pv.line_game_perfect[5], pv.line_game_perfect[2]));
        CHECK(implies(pv.line_game_perfect[2], pv.line_game_perfect[1]));
        CHECK(implies(pv.line_game_perfect[1], pv.line_game_perfect[0]));
        CHECK(implies(pv.line_game_perfect[0], pv.line_perfect));
        CHECK(implies(pv.line_game_perfect[5], pv.line_game_perfect[4]));
        CHECK(implies(pv.line_game_perfect[4], pv.line_game_perfect[3]));
        CHECK(implies(pv.line_game_perfect[3], pv.line_game_perfect[0]));
    }
}

TEST_CASE("iso_key groups isomorphic graphs") {
    Graph a = disjoint_union(path_graph(3), path_graph(2));
    Graph b = disjoint_union(path_graph(2), path_graph(3));
    CHECK(iso_key(a) == iso_key(b));
    CHECK(iso_key(a) != iso_key(path_graph(5)));
    // components small, whole graph beyond the canonical limit
    Graph many = Graph::build(0, {});
    for (int i = 0; i < 9; ++i)
        many = disjoint_union(many, path_graph(2));
    CHECK(iso_key(many).size() > 0);
}
