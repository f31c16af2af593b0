#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lgp/catalog.hpp"
#include "lgp/checks.hpp"
#include "lgp/game.hpp"

using namespace lgp;

namespace {

std::vector<int> degrees(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v)
        d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

// degree multiset straight from each definition
std::vector<int> expected_degrees(const PermittedParams& p) {
    std::vector<int> d;
    auto leaves = [&](int count) { d.insert(d.end(), count, 1); };
    auto twos = [&](int count) { d.insert(d.end(), count, 2); };
    std::visit(
        [&](auto&& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, VaseOfFlowers>) {
                d = {a.n + 2, 2, 2};
                leaves(a.n);
            } else if constexpr (std::is_same_v<T, DoubleStar>) {
                d = {a.m + 1, a.n + 1};
                leaves(a.m + a.n);
            } else if constexpr (std::is_same_v<T, Candy>) {
                d = {a.m + a.n1, a.m + a.n2};
                twos(a.m);
                leaves(a.n1 + a.n2);
            } else if constexpr (std::is_same_v<T, StarBook>) {
                d = {a.m + a.n1 + 1, a.m + a.n2 + 1};
                twos(a.m);
                leaves(a.n1 + a.n2);
            } else if constexpr (std::is_same_v<T, ShootingStar>) {
                d = {a.n + 2, a.m + 1, 2};
                leaves(a.m + a.n + 1);
            } else if constexpr (std::is_same_v<T, DoubleVase>) {
                d = {a.n + 4};
                twos(4);
                leaves(a.n);
            } else if constexpr (std::is_same_v<T, Amaryllis>) {
                d = {a.n + 3, a.m + 1, 2, 2};
                leaves(a.m + a.n);
            } else if constexpr (std::is_same_v<T, DiamondOfFlowers>) {
                d = {a.n + 2, 3, 3, 2};
                leaves(a.n);
            } else if constexpr (std::is_same_v<T, TetrahedronOfFlowers>) {
                d = {a.n + 3, 3, 3, 3};
                leaves(a.n);
            } else if constexpr (std::is_same_v<T, SingleGalaxy>) {
                d = {2 * a.k + a.l};
                twos(2 * a.k + a.l);
                leaves(a.l);
            } else if constexpr (std::is_same_v<T, DoubleGalaxy>) {
                d = {2 * a.k + a.l + a.n + 1, a.m + 1};
                twos(2 * a.k + a.l);
                leaves(a.l + a.m + a.n);
            } else if constexpr (std::is_same_v<T, FullTree>) {
                d = {a.m1 + 1, a.n + 2, a.m2 + 1};
                leaves(a.n + a.m1 + a.m2);
            } else if constexpr (std::is_same_v<T, Satellite>) {
                d = {3, a.m1 + 2, a.m2 + 2};
                leaves(a.m1 + a.m2 + 1);
            } else {
                d = {0};
            }
        },
        p);
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST_CASE("named configuration shapes") {
    Graph f1 = make_named(ConfigName::F1);
    CHECK(f1.edge_count() == 7);
    CHECK(max_degree(f1) == 3);
    CHECK(omega_line(f1) == 3);

    Graph f2 = make_named(ConfigName::F2);
    CHECK(f2.edge_count() == 8);
    CHECK(max_degree(f2) == 3);

    Graph f3 = make_named(ConfigName::F3);
    CHECK(f3.edge_count() == 9);
    CHECK(f3.vertex_count() == 9);
    CHECK(max_degree(f3) == 4);
    CHECK(omega_line(f3) == 4);

    Graph bull = make_named(ConfigName::Bull);
    CHECK(bull.vertex_count() == 5);
    CHECK(bull.edge_count() == 5);

    Graph p6 = make_named(ConfigName::P6);
    CHECK(p6.edge_count() == 5);
    CHECK(p6.vertex_count() == 6);

    CHECK(make_named(ConfigName::F1uF1).edge_count() == 14);
    CHECK(degrees(make_named(ConfigName::Diamond)) == std::vector<int>{2, 2, 3, 3});
}

TEST_CASE("catalog solve anchors") {
    // L(bull) is the 4-fan: a path of 4 on a hub
    Graph lbull = line_graph(make_named(ConfigName::Bull)).graph;
    Graph fan4 = Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
    CHECK(isomorphic(lbull, fan4));
    // the reconstructed F1 behaves as claimed: Bob wins [B,A] with 3 colours
    CHECK(solve_edge_game(make_named(ConfigName::F1), kGameBA, 3) == Player::bob);
    CHECK(solve_edge_game(make_named(ConfigName::F3), kGameAA, 4) == Player::bob);
}

TEST_CASE("constructor degree sequences match the definitions") {
    for (const auto& [params, game] : checks::permitted_grid(9)) {
        (void)game;
        CHECK(degrees(make_permitted(params)) == expected_degrees(params));
    }
}

TEST_CASE("permitted aliases from the definitions") {
    CHECK(isomorphic(make_permitted(FullTree{2, 3, 1}), make_permitted(ShootingStar{3, 2})));
    CHECK(isomorphic(make_permitted(FullTree{0, 2, 3}), make_permitted(Candy{1, 2, 3})));
    CHECK(isomorphic(make_permitted(FullTree{2, 3, 0}), make_permitted(DoubleStar{3, 3})));
    CHECK(isomorphic(make_permitted(SingleGalaxy{0, 0}), make_permitted(IsolatedVertex{})));
    CHECK(isomorphic(make_permitted(DoubleGalaxy{0, 0, 3, 2}), make_permitted(DoubleStar{3, 2})));
    CHECK(isomorphic(make_permitted(Amaryllis{0, 2}), make_permitted(VaseOfFlowers{3})));
    CHECK(isomorphic(make_permitted(DoubleVase{0}), make_permitted(SingleGalaxy{2, 0})));
    CHECK(isomorphic(make_permitted(DoubleStar{0, 0}), path_graph(2)));
    CHECK(isomorphic(make_permitted(ShootingStar{0, 0}), path_graph(4)));
    CHECK(isomorphic(make_permitted(StarBook{1, 0, 0}), complete_graph(3)));
    CHECK(isomorphic(make_permitted(Candy{2, 0, 0}), cycle_graph(4)));
    CHECK(isomorphic(make_permitted(FullTree{1, 2, 2}), make_named(ConfigName::F1)));
}

TEST_CASE("candy requires at least one sheet") {
    CHECK_THROWS_AS(make_permitted(Candy{0, 1, 1}), Error);
    CHECK_THROWS_AS(make_permitted(StarBook{0, 1, 1}), Error);
    CHECK_THROWS_AS(make_permitted(VaseOfFlowers{-1}), Error);
}

TEST_CASE("precoloured configurations") {
    PrecolouredConfig f11 = make_precoloured(PrecolouredName::F1_1);
    CHECK(f11.palette_size == 3);
    CHECK(f11.to_move == Player::alice);
    GameState s = f11.state();
    CHECK(s.colour_of(0) == 1);
    CHECK(s.uncoloured_count() == 6);
    CHECK(solve(s, kGameAA) == Player::bob);
    CHECK(solve(s, kGameBA) == Player::bob); // only the skipper matters here

    GameState wider(f11.graph, 4, Player::alice, f11.initial_colouring);
    CHECK(solve(wider, kGameAA) == Player::alice);

    PrecolouredConfig f31 = make_precoloured(PrecolouredName::F3_1);
    CHECK(f31.palette_size == 4);
    CHECK(solve(f31.state(), kGameAA) == Player::bob);
}

TEST_CASE("name lookup") {
    CHECK(isomorphic(*graph_by_name("P6"), path_graph(6)));
    CHECK(isomorphic(*graph_by_name("K1_5"), star_graph(5)));
    CHECK(isomorphic(*graph_by_name("candy(4,2,3)"), make_permitted(Candy{4, 2, 3})));
    CHECK(isomorphic(*graph_by_name("N8"), beineke_graph(8)));
    CHECK(isomorphic(*graph_by_name("K4"), complete_graph(4)));
    CHECK_FALSE(graph_by_name("nonsense").has_value());
    CHECK_FALSE(graph_by_name("candy(1,2)").has_value());
    CHECK(catalog_entries().size() >= 30);
}
