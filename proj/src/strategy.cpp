#include "lgp/strategy.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "lgp/recognizer.hpp"

namespace lgp {

const char* rationale_name(Rationale r) {
    switch (r) {
    case Rationale::pairing_response: return "pairing-response";
    case Rationale::mirror_move: return "mirror-move";
    case Rationale::colour_universal_edge: return "colour-universal-edge";
    case Rationale::unsafe_edge_first: return "unsafe-edge-first";
    case Rationale::delegate_to_oracle: return "delegate-to-oracle";
    case Rationale::pass_turn: return "pass";
    }
    return "?";
}

std::vector<EdgeId> unsafe_edges(const Graph& g) {
    int w = omega_line(g);
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.edge_degree(e) >= w)
            out.push_back(e);
    return out;
}

namespace {

int coloured_count(const GameState& s) {
    return s.graph().edge_count() - s.uncoloured_count();
}

std::optional<int> lowest_unused_colour(const GameState& s) {
    std::vector<char> used(s.palette_size() + 1, 0);
    for (EdgeId e = 0; e < s.graph().edge_count(); ++e)
        if (int c = s.colour_of(e))
            used[c] = 1;
    for (int c = 1; c <= s.palette_size(); ++c)
        if (!used[c])
            return c;
    return std::nullopt;
}

std::optional<int> lowest_feasible(const GameState& s, EdgeId e) {
    for (int c = 1; c <= s.palette_size(); ++c)
        if (s.feasible(e, c))
            return c;
    return std::nullopt;
}

// the mirror responses pair Bob's edge with a dominating partner: after the
// reply the shared colour must be feasible for no other edge
StrategyAdvice mirror_reply(const GameState& s, EdgeId target, int c) {
    if (s.colour_of(target) != 0 || !s.feasible(target, c))
        fail(Errc::invariant_violation, "mirror target unavailable on the first exchange");
    GameState after = s;
    after.apply(Move::colour_edge(target, c));
    for (EdgeId f = 0; f < after.graph().edge_count(); ++f)
        if (after.colour_of(f) == 0 && after.feasible(f, c))
            fail(Errc::invariant_violation, "mirror pair does not dominate the remaining edges");
    return {Move::colour_edge(target, c), Rationale::mirror_move};
}

bool contains_edge(const std::vector<EdgeId>& v, EdgeId e) {
    return std::find(v.begin(), v.end(), e) != v.end();
}

} // namespace

AliceStrategy::AliceStrategy(const Graph& g, GameVariant v, int palette_size, SolveOptions opt,
                             StrategyKind kind, StrategyLayout layout)
    : g_(&g), v_(v), k_(palette_size), opt_(opt), kind_(kind), layout_(std::move(layout)),
      unsafe_(unsafe_edges(g)) {}

AliceStrategy AliceStrategy::oracle(const Graph& g, GameVariant v, int palette_size,
                                    SolveOptions opt) {
    return AliceStrategy(g, v, palette_size, opt, StrategyKind::oracle, std::monostate{});
}

AliceStrategy AliceStrategy::explicit_script(const PermittedInstance& inst, GameVariant v,
                                             int palette_size, SolveOptions opt) {
    if (std::holds_alternative<std::monostate>(inst.layout))
        fail(Errc::bad_parameter, "no move script for class " + permitted_to_string(inst.params) +
                                      "; use the oracle strategy");
    return AliceStrategy(inst.graph, v, palette_size, opt, StrategyKind::explicit_script,
                         inst.layout);
}

Solver& AliceStrategy::solver() {
    if (!solver_)
        solver_ = std::make_unique<Solver>(*g_, v_, k_, opt_);
    return *solver_;
}

StrategyAdvice AliceStrategy::oracle_advice(const GameState& s) {
    for (const Move& mv : legal_moves(s, v_)) {
        GameState child = s;
        child.apply(mv);
        if (solver().solve(child) == Player::alice)
            return {mv, Rationale::delegate_to_oracle};
    }
    fail(Errc::no_winning_move, "no winning move exists in this state");
}

StrategyAdvice AliceStrategy::advise(const GameState& s, const std::optional<Move>& last) {
    if (s.to_move() != Player::alice)
        fail(Errc::bad_parameter, "advise called with Bob to move");
    if (kind_ == StrategyKind::oracle)
        return oracle_advice(s);
    return std::visit(
        [&](const auto& lay) -> StrategyAdvice {
            using T = std::decay_t<decltype(lay)>;
            if constexpr (std::is_same_v<T, GalaxyLayout>)
                return galaxy_advice(s, last, lay);
            else if constexpr (std::is_same_v<T, StarBookLayout>)
                return star_book_advice(s, last, lay);
            else if constexpr (std::is_same_v<T, DiamondFlowersLayout>)
                return diamond_advice(s, last, lay);
            else if constexpr (std::is_same_v<T, TetrahedronFlowersLayout>)
                return tetrahedron_advice(s, last, lay);
            else if constexpr (std::is_same_v<T, FullTreeLayout>)
                return full_tree_advice(s);
            else if constexpr (std::is_same_v<T, SatelliteLayout>)
                return satellite_advice(s, last, lay);
            else
                return oracle_advice(s);
        },
        layout_);
}

StrategyAdvice AliceStrategy::star_book_advice(const GameState& s, const std::optional<Move>& last,
                                               const StarBookLayout& lay) {
    if (last && !last->is_pass && last->edge == lay.universal_edge)
        return {Move::pass(), Rationale::pass_turn};
    return oracle_advice(s);
}

StrategyAdvice AliceStrategy::diamond_advice(const GameState& s, const std::optional<Move>& last,
                                             const DiamondFlowersLayout& lay) {
    if (coloured_count(s) == 1 && last && !last->is_pass) {
        EdgeId e = last->edge;
        int c = last->colour;
        if (e == lay.u1u2) {
            if (lay.star_edges.empty())
                return {Move::pass(), Rationale::pass_turn};
            return mirror_reply(s, lay.star_edges.front(), c);
        }
        if (contains_edge(lay.star_edges, e))
            return mirror_reply(s, lay.u1u2, c);
        if (e == lay.vu1)
            return mirror_reply(s, lay.wu2, c);
        if (e == lay.vu2)
            return mirror_reply(s, lay.wu1, c);
        if (e == lay.wu1)
            return mirror_reply(s, lay.vu2, c);
        if (e == lay.wu2)
            return mirror_reply(s, lay.vu1, c);
    }
    return oracle_advice(s);
}

StrategyAdvice AliceStrategy::tetrahedron_advice(const GameState& s,
                                                 const std::optional<Move>& last,
                                                 const TetrahedronFlowersLayout& lay) {
    if (coloured_count(s) == 1 && last && !last->is_pass) {
        EdgeId e = last->edge;
        int c = last->colour;
        for (auto [a, b] : lay.matching_pairs) {
            if (e == a)
                return mirror_reply(s, b, c);
            if (e == b)
                return mirror_reply(s, a, c);
        }
        if (contains_edge(lay.star_edges, e))
            return mirror_reply(s, lay.u1u2, c);
    }
    return oracle_advice(s);
}

StrategyAdvice AliceStrategy::satellite_advice(const GameState& s,
                                               const std::optional<Move>& last,
                                               const SatelliteLayout& lay) {
    if (coloured_count(s) == 0)
        return {Move::pass(), Rationale::pass_turn}; // Alice misses her first turn
    if (coloured_count(s) == 1 && last && !last->is_pass) {
        EdgeId e = last->edge;
        int c = last->colour;
        if (e == lay.w1w2)
            return mirror_reply(s, lay.w0y, c);
        if (e == lay.w0y)
            return mirror_reply(s, lay.w1w2, c);
        if (e == lay.w0w1) {
            if (lay.z2_edges.empty())
                return {Move::pass(), Rationale::pass_turn};
            return mirror_reply(s, lay.z2_edges.front(), c);
        }
        if (e == lay.w0w2) {
            if (lay.z1_edges.empty())
                return {Move::pass(), Rationale::pass_turn};
            return mirror_reply(s, lay.z1_edges.front(), c);
        }
        if (contains_edge(lay.z1_edges, e))
            return mirror_reply(s, lay.w0w2, c);
        if (contains_edge(lay.z2_edges, e))
            return mirror_reply(s, lay.w0w1, c);
    }
    return oracle_advice(s);
}

StrategyAdvice AliceStrategy::full_tree_advice(const GameState& s) {
    // P5 (two unsafe edges but only two colours): miss the first turn, then
    // the shooting-star strategy takes over
    bool p5_case = max_degree(*g_) == 2 && unsafe_.size() == 2;
    if (p5_case) {
        if (coloured_count(s) == 0)
            return {Move::pass(), Rationale::pass_turn};
        return oracle_advice(s);
    }
    for (EdgeId e : unsafe_) {
        if (s.colour_of(e) != 0)
            continue;
        auto c = lowest_feasible(s, e);
        if (!c)
            fail(Errc::invariant_violation, "unsafe edge starved of colours under the script");
        return {Move::colour_edge(e, *c), Rationale::unsafe_edge_first};
    }
    // once the unsafe edges are coloured nothing can die any more
    return {Move::pass(), Rationale::pass_turn};
}

StrategyAdvice AliceStrategy::galaxy_advice(const GameState& s, const std::optional<Move>& last,
                                            const GalaxyLayout& lay) {
    size_t n_obj = lay.objects.size();
    bool is_double = lay.vz.has_value();
    // small galaxies are handled by the sub-strategies the script defers to
    if ((is_double && n_obj <= 1) || (!is_double && n_obj <= 2))
        return oracle_advice(s);
    if (!last || last->is_pass)
        return oracle_advice(s);
    EdgeId e = last->edge;
    int c = last->colour;

    int obj = -1;
    bool on_matching = false;
    for (size_t i = 0; i < n_obj && obj < 0; ++i) {
        if (lay.objects[i].matching_edge == e) {
            obj = static_cast<int>(i);
            on_matching = true;
        } else if (contains_edge(lay.objects[i].star_edges, e)) {
            obj = static_cast<int>(i);
        }
    }

    auto colour_vz = [&](std::optional<int> preferred) -> StrategyAdvice {
        EdgeId vz = *lay.vz;
        if (preferred && s.feasible(vz, *preferred))
            return {Move::colour_edge(vz, *preferred), Rationale::colour_universal_edge};
        if (auto nc = lowest_unused_colour(s); nc && s.feasible(vz, *nc))
            return {Move::colour_edge(vz, *nc), Rationale::colour_universal_edge};
        if (auto lf = lowest_feasible(s, vz))
            return {Move::colour_edge(vz, *lf), Rationale::colour_universal_edge};
        return {Move::pass(), Rationale::pass_turn};
    };

    // the script promises vz is coloured before it can run out of colours:
    // a turn the rules would spend passing goes to vz while it is exposed
    auto pass_or_secure_vz = [&]() -> StrategyAdvice {
        if (is_double && s.colour_of(*lay.vz) == 0) {
            uint32_t cols = 0;
            int open = 0;
            for (EdgeId f : s.graph().adjacent_edges(*lay.vz)) {
                if (int cf = s.colour_of(f))
                    cols |= 1u << (cf - 1);
                else
                    ++open;
            }
            if (std::popcount(cols) + open >= s.palette_size())
                return colour_vz(c);
        }
        return {Move::pass(), Rationale::pass_turn};
    };

    if (on_matching) {
        // Bob coloured the matching edge of O_j
        if (is_double && s.colour_of(*lay.vz) == 0)
            return colour_vz(c); // first such move: secure vz, same colour if possible
        // park the colour on a star edge of the next pending object that
        // still has an open one (cyclically from O_{j+1})
        for (size_t t = 1; t <= n_obj; ++t) {
            const PendingObject& target = lay.objects[(obj + t) % n_obj];
            EdgeId open = -1;
            for (EdgeId se : target.star_edges)
                if (s.colour_of(se) == 0) {
                    open = se;
                    break;
                }
            if (open < 0)
                continue;
            for (EdgeId se : target.star_edges)
                if (s.colour_of(se) == 0 && s.feasible(se, c))
                    return {Move::colour_edge(se, c), Rationale::pairing_response};
            // monitored invariant (single galaxy, direct successor): the
            // same colour is blocked only when some star edge carries it
            if (!is_double && t == 1) {
                bool star_has_c = false;
                for (const auto& o : lay.objects)
                    for (EdgeId se : o.star_edges)
                        if (s.colour_of(se) == c)
                            star_has_c = true;
                if (!star_has_c)
                    fail(Errc::invariant_violation,
                         "pairing: same colour blocked although no star edge carries it");
            }
            if (auto nc = lowest_unused_colour(s); nc && s.feasible(open, *nc))
                return {Move::colour_edge(open, *nc), Rationale::pairing_response};
            if (auto lf = lowest_feasible(s, open))
                return {Move::colour_edge(open, *lf), Rationale::pairing_response};
            break;
        }
        return pass_or_secure_vz();
    }

    if (obj >= 0) {
        // Bob coloured a star edge of O_j
        const PendingObject& o = lay.objects[obj];
        int coloured_star = 0;
        for (EdgeId se : o.star_edges)
            if (s.colour_of(se) != 0)
                ++coloured_star;
        if (o.is_triangle && coloured_star >= 2)
            return pass_or_secure_vz(); // second star edge
        if (is_double) {
            bool star_left = false; // some pending object still has an open star edge
            for (const auto& other : lay.objects)
                for (EdgeId se : other.star_edges)
                    if (s.colour_of(se) == 0)
                        star_left = true;
            if (!star_left) {
                if (s.colour_of(*lay.vz) == 0)
                    return colour_vz(std::nullopt); // a new colour on vz
                return {Move::pass(), Rationale::pass_turn};
            }
        }
        EdgeId tm = lay.objects[(obj + static_cast<int>(n_obj) - 1) % n_obj].matching_edge;
        if (s.colour_of(tm) == 0 && s.feasible(tm, c))
            return {Move::colour_edge(tm, c), Rationale::pairing_response};
        return pass_or_secure_vz();
    }

    if (is_double) {
        if (e == *lay.vz || contains_edge(lay.pendant_edges, e))
            return pass_or_secure_vz();
        if (contains_edge(lay.z_star_edges, e)) {
            if (s.colour_of(*lay.vz) == 0)
                return colour_vz(std::nullopt);
            return {Move::pass(), Rationale::pass_turn};
        }
    }
    return oracle_advice(s);
}

// --- exhaustive adversarial validation ---

namespace {

struct Walker {
    const Graph& g;
    GameVariant v;
    std::function<StrategyAdvice(const GameState&, const std::optional<Move>&)> advise;
    ValidationResult result;
    std::vector<TranscriptMove> path;
    std::unordered_map<std::string, bool> bob_memo; // raw colouring -> Alice wins all lines

    std::string key(const GameState& s) const {
        std::string k(s.colouring().size(), 0);
        for (size_t i = 0; i < k.size(); ++i)
            k[i] = static_cast<char>(s.colouring()[i]);
        return k;
    }

    void record_loss(const std::string& note) {
        if (result.valid) {
            result.valid = false;
            result.losing_line = path;
            result.note = note;
        }
    }

    bool walk(const GameState& s, const std::optional<Move>& last_bob) {
        ++result.positions;
        if (auto w = terminal(s)) {
            if (*w == Player::bob)
                record_loss("terminal loss");
            return *w == Player::alice;
        }
        if (completion_guaranteed(s))
            return true; // nothing can die any more: every line ends fully coloured
        if (s.to_move() == Player::alice) {
            StrategyAdvice advice;
            try {
                advice = advise(s, last_bob);
            } catch (const Error& err) {
                if (err.code() != Errc::no_winning_move)
                    throw;
                // lost position: play on anyway so the refutation line runs
                // to an actual Bob win
                advice = {legal_moves(s, v).front(), Rationale::delegate_to_oracle};
            }
            GameState child = play_move(s, advice.move, v); // validates legality
            path.push_back({Player::alice, advice.move});
            bool ok = walk(child, std::nullopt);
            path.pop_back();
            return ok;
        }
        std::string k = key(s);
        if (auto it = bob_memo.find(k); it != bob_memo.end())
            return it->second;
        bool all_ok = true;
        for (const Move& mv : legal_moves(s, v)) {
            GameState child = play_move(s, mv, v);
            path.push_back({Player::bob, mv});
            bool ok = walk(child, mv);
            path.pop_back();
            if (!ok) {
                all_ok = false;
                break;
            }
        }
        bob_memo.emplace(std::move(k), all_ok);
        return all_ok;
    }
};

ValidationResult run_validation(
    const Graph& g, GameVariant v, int palette,
    std::function<StrategyAdvice(const GameState&, const std::optional<Move>&)> advise) {
    Walker w{g, v, std::move(advise), {}, {}, {}};
    GameState root(g, palette, v.first_mover);
    bool ok = w.walk(root, std::nullopt);
    w.result.valid = ok;
    return std::move(w.result);
}

} // namespace

ValidationResult validate_strategy(const PermittedInstance& inst, GameVariant v,
                                   SolveOptions opt) {
    int k = omega_line(inst.graph);
    AliceStrategy strat = AliceStrategy::explicit_script(inst, v, k, opt);
    return run_validation(inst.graph, v, k,
                          [&](const GameState& s, const std::optional<Move>& last) {
                              return strat.advise(s, last);
                          });
}

ValidationResult validate_oracle_strategy(const Graph& g, GameVariant v, int palette_size,
                                          SolveOptions opt) {
    int k = palette_size < 0 ? omega_line(g) : palette_size;
    AliceStrategy strat = AliceStrategy::oracle(g, v, k, opt);
    return run_validation(g, v, k, [&](const GameState& s, const std::optional<Move>& last) {
        return strat.advise(s, last);
    });
}

// --- whole-graph composition ---

CompositeStrategy::CompositeStrategy(const std::vector<PermittedParams>& parts, GameVariant v,
                                     SolveOptions opt)
    : v_(v), opt_(opt) {
    if (!v.skipper || *v.skipper != Player::alice)
        fail(Errc::bad_parameter, "composite strategy requires an Alice-skipping game");
    int eoff = 0;
    for (const auto& p : parts) {
        auto part = std::make_unique<Part>();
        part->inst = make_permitted_instance(p);
        part->edge_offset = eoff;
        eoff += part->inst.graph.edge_count();
        graph_ = disjoint_union(graph_, part->inst.graph);
        parts_.push_back(std::move(part));
    }
    k_ = omega_line(graph_);
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (is_special_component(parts_[i]->inst.params)) {
            if (special_ >= 0)
                fail(Errc::bad_parameter, "at most one special component is composable");
            special_ = static_cast<int>(i);
        }
        if (!std::holds_alternative<std::monostate>(parts_[i]->inst.layout))
            parts_[i]->script = std::make_unique<AliceStrategy>(
                AliceStrategy::explicit_script(parts_[i]->inst, v_, k_, opt_));
    }
}

GameState CompositeStrategy::local_state(const GameState& s, const Part& part) const {
    std::vector<std::pair<EdgeId, int>> init;
    for (EdgeId e = 0; e < part.inst.graph.edge_count(); ++e)
        if (int c = s.colour_of(part.edge_offset + e))
            init.emplace_back(e, c);
    return GameState(part.inst.graph, k_, Player::alice, init);
}

StrategyAdvice CompositeStrategy::escalate(const GameState& s, int part_index) {
    if (!whole_solver_)
        whole_solver_ = std::make_unique<Solver>(graph_, v_, k_, opt_);
    auto winning = [&](const Move& mv) {
        GameState child = s;
        child.apply(mv);
        return whole_solver_->solve(child) == Player::alice;
    };
    std::vector<Move> moves = legal_moves(s, v_);
    // prefer moves inside the active component, then passing, then anything
    auto in_part = [&](const Move& mv) {
        if (mv.is_pass || part_index < 0)
            return false;
        const Part& p = *parts_[part_index];
        return mv.edge >= p.edge_offset &&
               mv.edge < p.edge_offset + p.inst.graph.edge_count();
    };
    for (const Move& mv : moves)
        if (in_part(mv) && winning(mv))
            return {mv, Rationale::delegate_to_oracle};
    for (const Move& mv : moves)
        if (mv.is_pass && winning(mv))
            return {mv, Rationale::pass_turn};
    for (const Move& mv : moves)
        if (winning(mv))
            return {mv, Rationale::delegate_to_oracle};
    fail(Errc::no_winning_move, "no winning move exists in this state");
}

StrategyAdvice CompositeStrategy::advise(const GameState& s,
                                         const std::optional<Move>& last_bob_move) {
    if (s.to_move() != Player::alice)
        fail(Errc::bad_parameter, "advise called with Bob to move");
    if (coloured_count(s) == 0 && !last_bob_move) {
        // Alice's opening: play the special component's script, else pass
        if (special_ < 0)
            return {Move::pass(), Rationale::pass_turn};
        Part& sp = *parts_[special_];
        GameState local = local_state(s, sp);
        StrategyAdvice adv = sp.script->advise(local, std::nullopt);
        if (!adv.move.is_pass)
            adv.move.edge += sp.edge_offset;
        return adv;
    }
    if (!last_bob_move || last_bob_move->is_pass)
        return escalate(s, -1);
    int pi = -1;
    for (size_t i = 0; i < parts_.size(); ++i) {
        const Part& p = *parts_[i];
        if (last_bob_move->edge >= p.edge_offset &&
            last_bob_move->edge < p.edge_offset + p.inst.graph.edge_count())
            pi = static_cast<int>(i);
    }
    Part& part = *parts_[pi];
    GameState local = local_state(s, part);
    if (local.all_coloured())
        return {Move::pass(), Rationale::pass_turn};
    if (!part.script)
        return escalate(s, pi);
    Move local_last = Move::colour_edge(last_bob_move->edge - part.edge_offset,
                                        last_bob_move->colour);
    StrategyAdvice adv;
    try {
        adv = part.script->advise(local, local_last);
    } catch (const Error& err) {
        // the component-local oracle models Bob as confined to the
        // component; when that view offers nothing, the whole game decides
        if (err.code() != Errc::no_winning_move)
            throw;
        return escalate(s, pi);
    }
    if (adv.rationale == Rationale::delegate_to_oracle)
        return escalate(s, pi);
    if (!adv.move.is_pass)
        adv.move.edge += part.edge_offset;
    return adv;
}

ValidationResult validate_composite(const std::vector<PermittedParams>& parts, GameVariant v,
                                    SolveOptions opt) {
    CompositeStrategy strat(parts, v, opt);
    return run_validation(strat.graph(), v, strat.palette_size(),
                          [&](const GameState& s, const std::optional<Move>& last) {
                              return strat.advise(s, last);
                          });
}

} // namespace lgp
