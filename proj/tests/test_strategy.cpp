#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgp/catalog.hpp"
#include "lgp/strategy.hpp"

using namespace lgp;

TEST_CASE("unsafe edges") {
    Graph ft = make_permitted(FullTree{3, 4, 5});
    CHECK(unsafe_edges(ft) == std::vector<EdgeId>{0, 1}); // vw1, vw2

    Graph sat = make_permitted(Satellite{2, 2});
    CHECK(unsafe_edges(sat) == std::vector<EdgeId>{0, 1, 2}); // the triangle

    CHECK(unsafe_edges(star_graph(5)).empty());
    CHECK(unsafe_edges(Graph::build(2, {})).empty());
}

TEST_CASE("star book script passes after the universal edge") {
    PermittedInstance inst = make_permitted_instance(StarBook{2, 1, 1});
    int k = omega_line(inst.graph);
    AliceStrategy strat = AliceStrategy::explicit_script(inst, kGameBA, k);
    Move bob = Move::colour_edge(0, 1); // the universal edge has id 0
    GameState s(inst.graph, k, Player::bob);
    s.apply(bob);
    StrategyAdvice adv = strat.advise(s, bob);
    CHECK(adv.move.is_pass);
    CHECK(adv.rationale == Rationale::pass_turn);
}

TEST_CASE("diamond of flowers mirrors Bob's first move") {
    PermittedInstance inst = make_permitted_instance(DiamondOfFlowers{2});
    const auto& lay = std::get<DiamondFlowersLayout>(inst.layout);
    int k = omega_line(inst.graph);
    AliceStrategy strat = AliceStrategy::explicit_script(inst, kGameBA, k);

    GameState s(inst.graph, k, Player::bob);
    Move bob = Move::colour_edge(lay.vu1, 2);
    s.apply(bob);
    StrategyAdvice adv = strat.advise(s, bob);
    CHECK(adv.move == Move::colour_edge(lay.wu2, 2));
    CHECK(adv.rationale == Rationale::mirror_move);

    GameState t(inst.graph, k, Player::bob);
    Move bob2 = Move::colour_edge(lay.star_edges[1], 1);
    t.apply(bob2);
    StrategyAdvice adv2 = strat.advise(t, bob2);
    CHECK(adv2.move == Move::colour_edge(lay.u1u2, 1));
}

TEST_CASE("tetrahedron pairs the perfect matchings") {
    PermittedInstance inst = make_permitted_instance(TetrahedronOfFlowers{1});
    const auto& lay = std::get<TetrahedronFlowersLayout>(inst.layout);
    int k = omega_line(inst.graph);
    AliceStrategy strat = AliceStrategy::explicit_script(inst, kGameBA, k);
    for (auto [a, b] : lay.matching_pairs) {
        GameState s(inst.graph, k, Player::bob);
        Move bob = Move::colour_edge(a, 1);
        s.apply(bob);
        CHECK(strat.advise(s, bob).move == Move::colour_edge(b, 1));
    }
}

TEST_CASE("satellite script misses the first turn, then mirrors") {
    PermittedInstance inst = make_permitted_instance(Satellite{2, 2});
    const auto& lay = std::get<SatelliteLayout>(inst.layout);
    int k = omega_line(inst.graph);
    AliceStrategy strat = AliceStrategy::explicit_script(inst, kGameAA, k);

    GameState s(inst.graph, k, Player::alice);
    CHECK(strat.advise(s, std::nullopt).move.is_pass);

    GameState t(inst.graph, k, Player::bob);
    Move bob = Move::colour_edge(lay.w1w2, 3);
    t.apply(bob);
    CHECK(strat.advise(t, bob).move == Move::colour_edge(lay.w0y, 3));

    GameState u(inst.graph, k, Player::bob);
    Move bob2 = Move::colour_edge(lay.w0w1, 1);
    u.apply(bob2);
    CHECK(strat.advise(u, bob2).move == Move::colour_edge(lay.z2_edges[0], 1));
}

TEST_CASE("full tree script secures the unsafe edges") {
    PermittedInstance inst = make_permitted_instance(FullTree{2, 2, 2});
    int k = omega_line(inst.graph);
    AliceStrategy strat = AliceStrategy::explicit_script(inst, kGameAA, k);
    GameState s(inst.graph, k, Player::alice);
    StrategyAdvice first = strat.advise(s, std::nullopt);
    CHECK(first.rationale == Rationale::unsafe_edge_first);
    CHECK(first.move.edge == 0);
    s.apply(first.move);
    Move bob = Move::colour_edge(4, 2); // a leaf at the centre
    s.apply(bob);
    StrategyAdvice second = strat.advise(s, bob);
    CHECK(second.move.edge == 1);
    s.apply(second.move);
    Move bob2 = Move::colour_edge(6, 1); // a leaf at w2
    s.apply(bob2);
    CHECK(strat.advise(s, bob2).move.is_pass);
}

TEST_CASE("single galaxy pairing responses") {
    PermittedInstance inst = make_permitted_instance(SingleGalaxy{1, 2});
    const auto& lay = std::get<GalaxyLayout>(inst.layout);
    REQUIRE(lay.objects.size() == 3);
    int k = omega_line(inst.graph);
    AliceStrategy strat = AliceStrategy::explicit_script(inst, kGameBA, k);

    // Bob colours the matching edge of O_0: Alice answers on a star edge of O_1
    GameState s(inst.graph, k, Player::bob);
    Move bob = Move::colour_edge(lay.objects[0].matching_edge, 1);
    s.apply(bob);
    StrategyAdvice adv = strat.advise(s, bob);
    CHECK(adv.rationale == Rationale::pairing_response);
    CHECK(adv.move == Move::colour_edge(lay.objects[1].star_edges[0], 1));

    // Bob colours the first star edge of O_1: Alice takes the matching edge of O_0
    GameState t(inst.graph, k, Player::bob);
    Move bob2 = Move::colour_edge(lay.objects[1].star_edges[0], 2);
    t.apply(bob2);
    StrategyAdvice adv2 = strat.advise(t, bob2);
    CHECK(adv2.move == Move::colour_edge(lay.objects[0].matching_edge, 2));

    // second star edge of the triangle object: Alice passes
    GameState u(inst.graph, k, Player::bob);
    u.apply(Move::colour_edge(lay.objects[0].star_edges[0], 1));
    u.toggle_turn(); // pretend it is Bob again
    Move bob3 = Move::colour_edge(lay.objects[0].star_edges[1], 2);
    u.apply(bob3);
    CHECK(strat.advise(u, bob3).move.is_pass);
}

TEST_CASE("double galaxy secures vz on the first matching move") {
    PermittedInstance inst = make_permitted_instance(DoubleGalaxy{1, 1, 1, 1});
    const auto& lay = std::get<GalaxyLayout>(inst.layout);
    int k = omega_line(inst.graph);
    AliceStrategy strat = AliceStrategy::explicit_script(inst, kGameBA, k);
    GameState s(inst.graph, k, Player::bob);
    Move bob = Move::colour_edge(lay.objects[0].matching_edge, 2);
    s.apply(bob);
    StrategyAdvice adv = strat.advise(s, bob);
    CHECK(adv.rationale == Rationale::colour_universal_edge);
    CHECK(adv.move == Move::colour_edge(*lay.vz, 2));
}

TEST_CASE("validation confirms the scripted classes at omega(L)") {
    struct Case {
        PermittedParams p;
        GameVariant v;
    };
    const Case cases[] = {
        {StarBook{2, 1, 1}, kGameBA},   {StarBook{1, 2, 0}, kGameBA},
        {DiamondOfFlowers{2}, kGameBA}, {TetrahedronOfFlowers{1}, kGameBA},
        {SingleGalaxy{2, 1}, kGameBA},  {SingleGalaxy{0, 3}, kGameBA},
        {DoubleGalaxy{1, 1, 1, 1}, kGameBA}, {FullTree{1, 2, 2}, kGameAA},
        {FullTree{0, 1, 1}, kGameAA},   {Satellite{2, 2}, kGameAA},
        {Satellite{1, 0}, kGameAA},
    };
    for (const auto& c : cases) {
        ValidationResult r = validate_strategy(make_permitted_instance(c.p), c.v);
        INFO(permitted_to_string(c.p));
        CHECK(r.valid);
    }
}

TEST_CASE("oracle validation matches the solver verdict") {
    ValidationResult bad = validate_oracle_strategy(path_graph(6), kGameAA, 2);
    CHECK_FALSE(bad.valid);
    CHECK_FALSE(bad.losing_line.empty());

    CHECK(validate_oracle_strategy(make_permitted(VaseOfFlowers{3}), kGameBB).valid);
    CHECK(validate_oracle_strategy(make_permitted(DoubleStar{2, 2}), kGameBB).valid);
    CHECK(validate_oracle_strategy(make_permitted(Candy{2, 1, 1}), kGameBminus).valid);
    CHECK(validate_oracle_strategy(path_graph(6), kGameAA, 3).valid);
}

TEST_CASE("losing lines replay to a Bob win") {
    ValidationResult bad = validate_oracle_strategy(path_graph(5), kGameBB, 2);
    REQUIRE_FALSE(bad.valid);
    Graph g = path_graph(5);
    GameState s(g, 2, Player::bob);
    for (const auto& tm : bad.losing_line) {
        CHECK(tm.player == s.to_move());
        s = play_move(s, tm.move, kGameBB);
    }
    CHECK(terminal(s) == Player::bob);
}

TEST_CASE("composite strategy wins disjoint unions") {
    CHECK(validate_composite({SingleGalaxy{1, 1}, StarBook{1, 1, 0}}, kGameBA).valid);
    CHECK(validate_composite({FullTree{1, 2, 2}, Candy{1, 1, 0}}, kGameAA).valid);
    CHECK(validate_composite({Satellite{2, 2}, SingleGalaxy{1, 0}}, kGameAA).valid);
    CHECK(validate_composite({DoubleStar{1, 1}, DoubleStar{2, 0}, IsolatedVertex{}}, kGameAA)
              .valid);
    CHECK_THROWS_AS(validate_composite({Satellite{2, 2}, FullTree{1, 2, 2}}, kGameAA), Error);
    CHECK_THROWS_AS(validate_composite({DoubleStar{1, 1}}, kGameBB), Error);
}

TEST_CASE("explicit scripts require a scripted class") {
    PermittedInstance candy = make_permitted_instance(Candy{2, 1, 1});
    CHECK_THROWS_AS(AliceStrategy::explicit_script(candy, kGameBminus, 3), Error);
}
