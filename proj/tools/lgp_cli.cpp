#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgp/catalog.hpp"
#include "lgp/checks.hpp"
#include "lgp/enumerate.hpp"
#include "lgp/game.hpp"
#include "lgp/graph_io.hpp"
#include "lgp/recognizer.hpp"
#include "lgp/strategy.hpp"

using nlohmann::json;
using namespace lgp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInvariant = 4;

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case Errc::budget_exceeded:
        return kExitBudget;
    case Errc::invariant_violation:
        return kExitInvariant;
    default:
        return kExitParse;
    }
}

struct CommonOpts {
    std::string named;
    std::string input;
    std::string variant = "AA";
    std::string format = "human";
    std::string out;
    uint64_t budget = 100'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_variant = true) {
    auto* named = cmd->add_option("--named", o.named, "named configuration, e.g. P6, F1, candy(4,2,3)");
    auto* input = cmd->add_option("--input", o.input, "graph file (.el edge list, .g6 graph6)");
    named->excludes(input);
    if (with_variant)
        cmd->add_option("--variant", o.variant, "game variant: AA, A-, AB, BA, B-, BB");
    cmd->add_option("--format", o.format, "output format: human or json")
        ->check(CLI::IsMember({"human", "json"}));
    cmd->add_option("--out", o.out, "write the report to this file");
    cmd->add_option("--budget", o.budget, "solver node budget");
}

Graph load_graph(const CommonOpts& o) {
    if (!o.named.empty()) {
        if (auto g = graph_by_name(o.named))
            return *g;
        fail(Errc::parse_error, "unknown named configuration '" + o.named + "'");
    }
    if (!o.input.empty())
        return read_graph_file(o.input);
    fail(Errc::parse_error, "one of --named or --input is required");
}

GameVariant load_variant(const CommonOpts& o) {
    if (auto v = parse_variant(o.variant))
        return *v;
    fail(Errc::parse_error, "bad variant '" + o.variant + "' (want AA, A-, AB, BA, B-, BB)");
}

std::ostream& output_stream(const CommonOpts& o, std::ofstream& file) {
    if (o.out.empty())
        return std::cout;
    file.open(o.out);
    if (!file)
        fail(Errc::parse_error, "cannot open output file '" + o.out + "'");
    return file;
}

// --- solve ---

int cmd_solve(const CommonOpts& o, int k) {
    Graph g = load_graph(o);
    GameVariant v = load_variant(o);
    SolveOptions opt;
    opt.node_budget = o.budget;
    std::ofstream file;
    std::ostream& os = output_stream(o, file);
    if (k >= 0) {
        Player w = solve_edge_game(g, v, k, opt);
        if (o.format == "json") {
            json rec{{"variant", variant_code(v)}, {"k", k}, {"winner", player_name(w)}};
            os << rec.dump() << '\n';
        } else {
            os << "winner with k=" << k << " under [" << variant_code(v)
               << "]: " << player_name(w) << '\n';
        }
        return kExitOk;
    }
    IndexProfile p = game_chromatic_index(g, v, opt);
    if (o.format == "json") {
        json prof = json::array();
        for (size_t i = 0; i < p.winners.size(); ++i)
            prof.push_back({{"k", p.profile_lo + static_cast<int>(i)},
                            {"winner", player_name(p.winners[i])}});
        json rec{{"variant", variant_code(v)},
                 {"index", p.index},
                 {"omega_line", omega_line(g)},
                 {"profile", prof}};
        os << rec.dump() << '\n';
    } else {
        os << "game chromatic index under [" << variant_code(v) << "]: " << p.index << '\n';
        os << "profile (k: winner):";
        for (size_t i = 0; i < p.winners.size(); ++i)
            os << ' ' << (p.profile_lo + static_cast<int>(i)) << ':'
               << player_name(p.winners[i]);
        os << '\n';
    }
    return kExitOk;
}

// --- classify ---

json component_report(const Graph& g, GameVariant v) {
    json comps = json::array();
    for (const auto& comp : components(g)) {
        json rec;
        json verts = json::array();
        for (VertexId x : comp.vertex_map)
            verts.push_back(x);
        rec["vertices"] = verts;
        ComponentClass c = classify_component(comp.graph, v);
        if (is_permitted(c)) {
            const auto& p = std::get<PermittedParams>(c);
            rec["class"] = permitted_to_string(p);
            rec["special"] = is_special_component(p);
        } else {
            const auto& w = std::get<NotPermitted>(c).witness;
            rec["class"] = "not-permitted";
            rec["witness"] = config_name_string(w.config);
            json edges = json::array();
            for (EdgeId e : w.edges)
                edges.push_back(comp.edge_map[e]); // back to host edge ids
            rec["witness_edges"] = edges;
        }
        comps.push_back(std::move(rec));
    }
    return comps;
}

int cmd_classify(const CommonOpts& o) {
    Graph g = load_graph(o);
    GameVariant v = load_variant(o);
    PerfectnessVerdict verdict = full_verdict(g);
    json rec;
    for (size_t i = 0; i < all_variants().size(); ++i) {
        std::string code = variant_code(all_variants()[i]);
        rec["line_perfect_games"][code] = verdict.line_game_perfect[i];
        rec["edge_perfect_games"][code] = verdict.edge_game_perfect[i];
    }
    rec["line_perfect"] = verdict.line_perfect;
    rec["structural"] = is_line_xy_perfect_structural(g, v);
    rec["variant"] = variant_code(v);
    rec["components"] = component_report(g, v);
    auto forb = check_forbidden(g, v);
    if (!forb.perfect) {
        rec["witness"] = config_name_string(forb.witness->config);
        json edges = json::array();
        for (EdgeId e : forb.witness->edges)
            edges.push_back(e);
        rec["witness_edges"] = edges;
    }
    std::ofstream file;
    std::ostream& os = output_stream(o, file);
    if (o.format == "json") {
        os << rec.dump() << '\n';
    } else {
        os << "line [" << variant_code(v) << "]-perfect: "
           << (rec["line_perfect_games"][variant_code(v)].get<bool>() ? "yes" : "no") << '\n';
        if (rec.contains("witness"))
            os << "forbidden witness: " << rec["witness"].get<std::string>() << " on edges "
               << rec["witness_edges"].dump() << '\n';
        os << "components:" << '\n';
        for (const auto& c : rec["components"])
            os << "  " << c["class"].get<std::string>()
               << (c.contains("witness") ? " (witness " + c["witness"].get<std::string>() + ")"
                                         : "")
               << '\n';
        os << "panel:";
        for (GameVariant gv : all_variants())
            os << ' ' << variant_code(gv) << '='
               << (rec["line_perfect_games"][variant_code(gv)].get<bool>() ? 'y' : 'n');
        os << " line-perfect=" << (verdict.line_perfect ? 'y' : 'n') << '\n';
    }
    return kExitOk;
}

// --- catalog ---

int cmd_catalog(const CommonOpts& o) {
    std::ofstream file;
    std::ostream& os = output_stream(o, file);
    for (const auto& [name, g] : catalog_entries()) {
        if (o.format == "json") {
            json rec{{"name", name},
                     {"vertices", g.vertex_count()},
                     {"edges", g.edge_count()},
                     {"max_degree", max_degree(g)},
                     {"omega_line", omega_line(g)}};
            os << rec.dump() << '\n';
        } else {
            os << name << ": |V|=" << g.vertex_count() << " |E|=" << g.edge_count()
               << " Delta=" << max_degree(g) << " omega(L)=" << omega_line(g) << '\n';
        }
    }
    return kExitOk;
}

// --- check / enumerate ---

int report_outcome(std::ostream& os, const checks::Outcome& out, const std::string& format) {
    if (format == "json") {
        json rec{{"suite", out.name},
                 {"cases", out.cases},
                 {"failures", out.failures},
                 {"passed", out.passed()}};
        if (!out.failure_notes.empty())
            rec["notes"] = out.failure_notes;
        os << rec.dump() << '\n';
    } else {
        os << (out.passed() ? "PASS" : "FAIL") << ' ' << out.name << " (" << out.cases
           << " cases, " << out.failures << " failures)" << '\n';
        for (const auto& n : out.failure_notes)
            os << "  " << n << '\n';
    }
    return out.passed() ? kExitOk : kExitInvariant;
}

int cmd_check(const CommonOpts& o, const std::string& suite, int max_vertices) {
    SolveOptions opt;
    opt.node_budget = o.budget;
    std::ofstream file;
    std::ostream& os = output_stream(o, file);
    int rc = kExitOk;
    auto run = [&](const std::string& name, auto&& fn) {
        if (suite != "all" && suite != name)
            return;
        rc = std::max(rc, report_outcome(os, fn(), o.format));
    };
    run("forbidden", [&] { return checks::forbidden_configurations(opt); });
    run("permitted", [&] { return checks::permitted_types(opt); });
    run("equivalence", [&] { return checks::decider_equivalence(max_vertices, opt); });
    run("chains", [&] { return checks::observation_chains(max_vertices, opt); });
    run("aaa", [&] { return checks::vertex_edge_duality(7, 5, opt); });
    run("lineperfect", [&] { return checks::line_perfect_routes(std::min(max_vertices + 1, 7)); });
    run("heredity", [&] { return checks::heredity(); });
    run("whitney", [&] { return checks::line_graph_recognition(max_vertices); });
    return rc;
}

int cmd_enumerate(const CommonOpts& o, const std::string& check, int max_vertices) {
    SolveOptions opt;
    opt.node_budget = o.budget;
    std::ofstream file;
    std::ostream& os = output_stream(o, file);
    checks::Logger log = [&](const std::string& line) { os << line << '\n'; };
    checks::Outcome out;
    if (check == "equivalence")
        out = checks::decider_equivalence(max_vertices, opt, log);
    else if (check == "chains")
        out = checks::observation_chains(max_vertices, opt, log);
    else if (check == "whitney")
        out = checks::line_graph_recognition(max_vertices, log);
    else if (check == "aaa")
        out = checks::vertex_edge_duality(std::min(max_vertices + 1, 7), 5, opt, log);
    else
        fail(Errc::parse_error, "unknown check '" + check + "'");
    return report_outcome(os, out, o.format);
}

// --- play ---

int cmd_play(const CommonOpts& o, const std::string& side, int k) {
    Graph g = load_graph(o);
    GameVariant v = load_variant(o);
    SolveOptions opt;
    opt.node_budget = o.budget;
    if (k < 0)
        k = omega_line(g);
    bool human_is_alice = side == "alice";

    std::optional<AliceStrategy> alice_engine;
    if (!human_is_alice) {
        std::optional<PermittedParams> params;
        if (!o.named.empty())
            params = permitted_by_name(o.named);
        if (params) {
            PermittedInstance inst = make_permitted_instance(*params);
            if (!std::holds_alternative<std::monostate>(inst.layout) &&
                isomorphic(inst.graph, g)) {
                g = inst.graph; // play on the constructor's labelling
                alice_engine.emplace(AliceStrategy::explicit_script(inst, v, k, opt));
            }
        }
        if (!alice_engine)
            alice_engine.emplace(AliceStrategy::oracle(g, v, k, opt));
    }
    Solver bob_solver(g, v, k, opt);

    std::cout << "edges:";
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        std::cout << ' ' << e << ":(" << g.edge(e).first << ',' << g.edge(e).second << ')';
    std::cout << "\npalette 1.." << k << ", variant [" << variant_code(v) << "], you play "
              << (human_is_alice ? "Alice" : "Bob") << "\n";

    GameState s(g, k, v.first_mover);
    Transcript t;
    t.variant_code = variant_code(v);
    t.palette_size = k;
    std::optional<Move> last_bob;
    bool resigned = false;

    while (!terminal(s)) {
        bool human_turn = (s.to_move() == Player::alice) == human_is_alice;
        Move mv;
        if (human_turn) {
            while (true) {
                std::cout << player_name(s.to_move()) << "> " << std::flush;
                std::string lineb;
                if (!std::getline(std::cin, lineb) || lineb == "resign") {
                    resigned = true;
                    break;
                }
                if (lineb == "pass") {
                    mv = Move::pass();
                } else {
                    std::istringstream ls(lineb);
                    int e, c;
                    if (!(ls >> e >> c)) {
                        std::cout << "enter 'edge colour', 'pass' or 'resign'\n";
                        continue;
                    }
                    mv = Move::colour_edge(e, c);
                }
                try {
                    s = play_move(s, mv, v);
                    break;
                } catch (const Error& err) {
                    std::cout << "illegal move: " << err.what() << '\n';
                }
            }
            if (resigned)
                break;
        } else if (s.to_move() == Player::alice) {
            StrategyAdvice adv = alice_engine->advise(s, last_bob);
            mv = adv.move;
            std::cout << "engine (Alice): "
                      << (mv.is_pass ? std::string("pass")
                                     : "edge " + std::to_string(mv.edge) + " <- " +
                                           std::to_string(mv.colour))
                      << "  [" << rationale_name(adv.rationale) << "]\n";
            s = play_move(s, mv, v);
        } else {
            // Bob engine: any move keeping Bob's win if one exists
            std::vector<Move> moves = legal_moves(s, v);
            mv = moves.front();
            for (const Move& cand : moves) {
                GameState child = s;
                child.apply(cand);
                if (bob_solver.solve(child) == Player::bob) {
                    mv = cand;
                    break;
                }
            }
            std::cout << "engine (Bob): "
                      << (mv.is_pass ? std::string("pass")
                                     : "edge " + std::to_string(mv.edge) + " <- " +
                                           std::to_string(mv.colour))
                      << '\n';
            s = play_move(s, mv, v);
        }
        Player mover = opponent(s.to_move());
        t.moves.push_back({mover, mv});
        if (mover == Player::bob && !mv.is_pass)
            last_bob = mv;
    }
    if (resigned) {
        t.winner = human_is_alice ? Player::bob : Player::alice;
        std::cout << "resigned; " << player_name(*t.winner) << " wins\n";
    } else {
        t.winner = terminal(s);
        std::cout << "game over: " << player_name(*t.winner) << " wins\n";
    }
    std::ofstream file;
    std::ostream& os = output_stream(o, file);
    write_transcript(os, t);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"the six [X,Y]-edge colouring games: exact solving, recognition, strategies"};
    app.require_subcommand(1);

    CommonOpts so;
    int solve_k = -1;
    auto* solve_cmd = app.add_subcommand("solve", "winner or game chromatic index");
    add_common(solve_cmd, so);
    solve_cmd->add_option("--k", solve_k, "palette size (omit to compute the index)");

    CommonOpts co;
    auto* classify_cmd = app.add_subcommand("classify", "perfectness verdicts and components");
    add_common(classify_cmd, co);

    CommonOpts go;
    auto* catalog_cmd = app.add_subcommand("catalog", "list the named configurations");
    catalog_cmd->add_subcommand("list", "print the catalog");
    catalog_cmd->add_option("--format", go.format, "output format")
        ->check(CLI::IsMember({"human", "json"}));
    catalog_cmd->add_option("--out", go.out, "write to file");

    CommonOpts ko;
    std::string suite = "all";
    int check_vertices = 5;
    auto* check_cmd = app.add_subcommand("check", "run verification suites");
    add_common(check_cmd, ko, false);
    check_cmd->add_option("--suite", suite,
                          "forbidden|permitted|equivalence|chains|aaa|lineperfect|heredity|"
                          "whitney|all");
    check_cmd->add_option("--max-vertices", check_vertices, "enumeration bound");

    CommonOpts eo;
    std::string enum_check = "equivalence";
    int enum_vertices = 5;
    auto* enum_cmd = app.add_subcommand("enumerate", "stream per-graph verdicts");
    add_common(enum_cmd, eo, false);
    enum_cmd->add_option("--check", enum_check, "equivalence|chains|whitney|aaa");
    enum_cmd->add_option("--max-vertices", enum_vertices, "enumeration bound")
        ->check(CLI::Range(1, 7));

    CommonOpts po;
    std::string side = "bob";
    int play_k = -1;
    auto* play_cmd = app.add_subcommand("play", "interactive game against the engine");
    add_common(play_cmd, po);
    play_cmd->add_option("--side", side, "human side: alice or bob")
        ->check(CLI::IsMember({"alice", "bob"}));
    play_cmd->add_option("--k", play_k, "palette size (default omega(L))");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (solve_cmd->parsed())
            return cmd_solve(so, solve_k);
        if (classify_cmd->parsed())
            return cmd_classify(co);
        if (catalog_cmd->parsed())
            return cmd_catalog(go);
        if (check_cmd->parsed())
            return cmd_check(ko, suite, check_vertices);
        if (enum_cmd->parsed())
            return cmd_enumerate(eo, enum_check, enum_vertices);
        if (play_cmd->parsed())
            return cmd_play(po, side, play_k);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitOk;
}
