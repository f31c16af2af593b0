#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lgp/catalog.hpp"
#include "lgp/enumerate.hpp"
#include "lgp/game.hpp"
#include "lgp/graph_io.hpp"

using namespace lgp;

TEST_CASE("edge list round trip with comments") {
    std::string text = "# a path\n5 4\n0 1\n1 2\n# middle\n2 3\n3 4\n";
    Graph g = read_edge_list_string(text);
    CHECK(g.vertex_count() == 5);
    CHECK(isomorphic(g, path_graph(5)));
    std::ostringstream os;
    write_edge_list(os, g);
    Graph h = read_edge_list_string(os.str());
    CHECK(h.edges() == g.edges());
}

TEST_CASE("edge list errors") {
    CHECK_THROWS_AS(read_edge_list_string("nonsense\n"), Error);
    CHECK_THROWS_AS(read_edge_list_string("2 2\n0 1\n"), Error);   // count mismatch
    CHECK_THROWS_AS(read_edge_list_string("2 1\n0 0\n"), Error);   // loop
    CHECK_THROWS_AS(read_edge_list_string("2 1\n0 5\n"), Error);   // out of range
    try {
        read_edge_list_string("2 2\n0 1\n");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::parse_error);
    }
}

TEST_CASE("graph6 known values") {
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(path_graph(2)) == "A_");
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(isomorphic(parse_graph6("C~"), complete_graph(4)));
    CHECK(isomorphic(parse_graph6(">>graph6<<Dhc"), cycle_graph(5)));
    CHECK(parse_graph6("?").vertex_count() == 0);
}

TEST_CASE("graph6 round trip across an enumeration") {
    for (const Graph& g : all_graphs(5)) {
        Graph h = parse_graph6(to_graph6(g));
        CHECK(h.vertex_count() == g.vertex_count());
        std::vector<std::pair<int, int>> a = g.edges(), b = h.edges();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), Error);
    CHECK_THROWS_AS(parse_graph6("D"), Error);     // truncated
    CHECK_THROWS_AS(parse_graph6("B~~"), Error);   // too long
    CHECK_THROWS_AS(parse_graph6("A~"), Error);    // nonzero padding
}

TEST_CASE("file format auto-detection") {
    {
        std::ofstream f("/tmp/lgp_test_graph.el");
        f << "3 2\n0 1\n1 2\n";
    }
    {
        std::ofstream f("/tmp/lgp_test_graph.g6");
        f << to_graph6(cycle_graph(5)) << "\n";
    }
    CHECK(isomorphic(read_graph_file("/tmp/lgp_test_graph.el"), path_graph(3)));
    CHECK(isomorphic(read_graph_file("/tmp/lgp_test_graph.g6"), cycle_graph(5)));
    CHECK_THROWS_AS(read_graph_file("/tmp/lgp_no_such_file.el"), Error);
    std::remove("/tmp/lgp_test_graph.el");
    std::remove("/tmp/lgp_test_graph.g6");
}

TEST_CASE("transcript round trip replays to the same state") {
    Graph g = star_graph(3);
    GameVariant v = kGameBB;
    GameState s(g, 3, v.first_mover);
    Transcript t;
    t.variant_code = variant_code(v);
    t.palette_size = 3;
    while (!terminal(s)) {
        Move m = legal_moves(s, v).front();
        t.moves.push_back({s.to_move(), m});
        s = play_move(s, m, v);
    }
    t.winner = terminal(s);

    std::ostringstream os;
    write_transcript(os, t);
    std::istringstream is(os.str());
    Transcript back = read_transcript(is);
    CHECK(back.palette_size == t.palette_size);
    CHECK(back.variant_code == t.variant_code);
    CHECK(back.moves.size() == t.moves.size());
    GameState replayed = replay_transcript(g, back);
    CHECK(replayed.colouring() == s.colouring());
    CHECK(*back.winner == *t.winner);
}

TEST_CASE("transcript rejects bad input") {
    std::istringstream is("{\"player\":\"Alice\",\"edge\":0,\"colour\":1}\n");
    CHECK_THROWS_AS(read_transcript(is), Error); // missing final record
}
