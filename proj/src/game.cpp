#include "lgp/game.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace lgp {

const char* player_name(Player p) { return p == Player::alice ? "Alice" : "Bob"; }

const std::array<GameVariant, 6>& all_variants() {
    static const std::array<GameVariant, 6> v = {kGameAA,  kGameAminus, kGameAB,
                                                 kGameBA,  kGameBminus, kGameBB};
    return v;
}

std::string variant_code(GameVariant v) {
    std::string s(1, v.first_mover == Player::alice ? 'A' : 'B');
    s += !v.skipper ? '-' : (*v.skipper == Player::alice ? 'A' : 'B');
    return s;
}

std::optional<GameVariant> parse_variant(const std::string& code) {
    if (code.size() != 2)
        return std::nullopt;
    GameVariant v;
    if (code[0] == 'A')
        v.first_mover = Player::alice;
    else if (code[0] == 'B')
        v.first_mover = Player::bob;
    else
        return std::nullopt;
    if (code[1] == 'A')
        v.skipper = Player::alice;
    else if (code[1] == 'B')
        v.skipper = Player::bob;
    else if (code[1] == '-')
        v.skipper = std::nullopt;
    else
        return std::nullopt;
    return v;
}

GameState::GameState(const Graph& g, int palette_size, Player to_move)
    : g_(&g), k_(palette_size), col_(g.edge_count(), 0), to_move_(to_move),
      uncoloured_(g.edge_count()) {
    if (palette_size < 0)
        fail(Errc::bad_parameter, "negative palette size");
}

GameState::GameState(const Graph& g, int palette_size, Player to_move,
                     std::span<const std::pair<EdgeId, int>> initial_colouring)
    : GameState(g, palette_size, to_move) {
    for (auto [e, c] : initial_colouring) {
        if (c < 1 || c > k_)
            fail(Errc::bad_parameter, "initial colour out of range");
        if (col_[e] != 0)
            fail(Errc::bad_parameter, "edge precoloured twice");
        if (!feasible(e, c))
            fail(Errc::bad_parameter, "initial colouring not proper");
        col_[e] = c;
        --uncoloured_;
    }
}

int GameState::colour_of(EdgeId e) const {
    if (e < 0 || e >= static_cast<EdgeId>(col_.size()))
        fail(Errc::edge_out_of_range, "colour_of: bad edge id");
    return col_[e];
}

bool GameState::feasible(EdgeId e, int c) const {
    if (c < 1 || c > k_ || col_[e] != 0)
        return false;
    for (EdgeId f : g_->adjacent_edges(e))
        if (col_[f] == c)
            return false;
    return true;
}

std::vector<int> GameState::feasible_colours(EdgeId e) const {
    std::vector<int> out;
    for (int c = 1; c <= k_; ++c)
        if (feasible(e, c))
            out.push_back(c);
    return out;
}

void GameState::apply(const Move& m) {
    if (!m.is_pass) {
        if (!feasible(m.edge, m.colour))
            fail(Errc::illegal_move, "move is not a proper extension");
        col_[m.edge] = m.colour;
        --uncoloured_;
    }
    toggle_turn();
}

std::vector<Move> legal_moves(const GameState& s, GameVariant v) {
    std::vector<Move> out;
    const Graph& g = s.graph();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (s.colour_of(e) != 0)
            continue;
        for (int c : s.feasible_colours(e))
            out.push_back(Move::colour_edge(e, c));
    }
    if (!out.empty() && v.skipper && *v.skipper == s.to_move())
        out.push_back(Move::pass());
    return out;
}

std::optional<Player> terminal(const GameState& s, bool dead_edge_shortcut) {
    if (s.all_coloured())
        return Player::alice;
    bool any_feasible = false;
    bool any_dead = false;
    const Graph& g = s.graph();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (s.colour_of(e) != 0)
            continue;
        bool has = false;
        for (int c = 1; c <= s.palette_size() && !has; ++c)
            has = s.feasible(e, c);
        (has ? any_feasible : any_dead) = true;
        if (dead_edge_shortcut && any_dead)
            return Player::bob;
    }
    if (!any_feasible)
        return Player::bob;
    return std::nullopt;
}

bool completion_guaranteed(const GameState& s) {
    const Graph& g = s.graph();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (s.colour_of(e) != 0)
            continue;
        uint32_t colours = 0;
        int adj_uncoloured = 0;
        for (EdgeId f : g.adjacent_edges(e)) {
            if (int c = s.colour_of(f))
                colours |= 1u << (c - 1);
            else
                ++adj_uncoloured;
        }
        if (std::popcount(colours) + adj_uncoloured >= s.palette_size())
            return false;
    }
    return true;
}

GameState play_move(const GameState& s, const Move& m, GameVariant v) {
    if (m.is_pass) {
        if (!v.skipper || *v.skipper != s.to_move())
            fail(Errc::illegal_move, "only the skip-entitled player may pass");
        bool any = false;
        for (EdgeId e = 0; e < s.graph().edge_count() && !any; ++e)
            any = s.colour_of(e) == 0 && !s.feasible_colours(e).empty();
        if (!any)
            fail(Errc::illegal_move, "pass with no colour move available");
    } else if (m.edge < 0 || m.edge >= s.graph().edge_count()) {
        fail(Errc::illegal_move, "bad edge id in move");
    } else if (!s.feasible(m.edge, m.colour)) {
        fail(Errc::illegal_move, "colour not feasible for edge");
    }
    GameState next = s;
    next.apply(m);
    return next;
}

// --- solver ---

namespace {

std::vector<std::vector<int>> edge_adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        adj[e] = g.adjacent_edges(e);
    return adj;
}

std::vector<std::vector<int>> vertex_adjacency(const Graph& h) {
    std::vector<std::vector<int>> adj(h.vertex_count());
    for (auto [u, v] : h.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj)
        std::sort(a.begin(), a.end());
    return adj;
}

} // namespace

Solver::Solver(std::vector<std::vector<int>> adjacency, GameVariant v, int palette_size,
               SolveOptions opt)
    : adj_(std::move(adjacency)), variant_(v), k_(palette_size), opt_(opt),
      col_(adj_.size(), 0), uncoloured_(static_cast<int>(adj_.size())) {
    if (k_ < 0 || k_ > 31)
        fail(Errc::size_limit, "palette size outside 0..31");
    for (const auto& a : adj_)
        max_item_degree_ = std::max(max_item_degree_, static_cast<int>(a.size()));
    pack64_ = adj_.size() <= 15 && k_ <= 15;
}

Solver::Solver(const Graph& g, GameVariant v, int palette_size, SolveOptions opt)
    : Solver(edge_adjacency(g), v, palette_size, opt) {}

Solver Solver::vertex_game(const Graph& h, GameVariant v, int palette_size, SolveOptions opt) {
    return Solver(vertex_adjacency(h), v, palette_size, opt);
}

bool Solver::memo_key(Player to_move, uint64_t& key64, std::string& key_str) const {
    // canonical colour relabelling by order of first use over item order
    int relabel[32] = {0};
    int next = 0;
    if (pack64_) {
        uint64_t k = 0;
        for (size_t i = 0; i < col_.size(); ++i) {
            int c = col_[i];
            if (c && !relabel[c])
                relabel[c] = ++next;
            k |= static_cast<uint64_t>(relabel[c]) << (4 * i);
        }
        key64 = k | (static_cast<uint64_t>(to_move == Player::bob) << 63);
        return true;
    }
    key_str.clear();
    key_str.reserve(col_.size() + 1);
    for (size_t i = 0; i < col_.size(); ++i) {
        int c = col_[i];
        if (c && !relabel[c])
            relabel[c] = ++next;
        key_str.push_back(static_cast<char>(relabel[c]));
    }
    key_str.push_back(to_move == Player::bob ? 'B' : 'A');
    return false;
}

Player Solver::search(Player to_move) {
    if (++nodes_ > opt_.node_budget)
        fail(Errc::budget_exceeded, "solver node budget exceeded");
    if (uncoloured_ == 0)
        return Player::alice;
    // with more colours than any item can ever see, nothing dies
    if (k_ > max_item_degree_)
        return Player::alice;

    uint64_t key64 = 0;
    std::string key_str;
    bool packed = false;
    if (opt_.memoize) {
        packed = memo_key(to_move, key64, key_str);
        if (packed) {
            if (auto it = memo64_.find(key64); it != memo64_.end())
                return static_cast<Player>(it->second);
        } else {
            if (auto it = memo_str_.find(key_str); it != memo_str_.end())
                return static_cast<Player>(it->second);
        }
    }

    int m = static_cast<int>(adj_.size());
    const uint32_t full = (k_ >= 31) ? 0x7fffffffu : ((1u << k_) - 1);
    bool dead = false, any_feasible = false, all_deathproof = true;
    // (feasible-colour count, item) for uncoloured items, most constrained first
    std::vector<std::pair<int, int>> order;
    std::vector<uint32_t> feas(m, 0);
    for (int i = 0; i < m && !(dead && opt_.dead_edge_shortcut); ++i) {
        if (col_[i])
            continue;
        uint32_t forb = 0;
        int adj_uncoloured = 0;
        for (int nb : adj_[i]) {
            if (col_[nb])
                forb |= 1u << (col_[nb] - 1);
            else
                ++adj_uncoloured;
        }
        uint32_t f = full & ~forb;
        feas[i] = f;
        if (std::popcount(forb) + adj_uncoloured >= k_)
            all_deathproof = false;
        if (!f)
            dead = true;
        else {
            any_feasible = true;
            order.emplace_back(std::popcount(f), i);
        }
    }
    Player result;
    if (opt_.dead_edge_shortcut ? dead : !any_feasible) {
        result = Player::bob;
    } else if (all_deathproof) {
        // no item can ever lose its last colour, so the game runs to the end
        result = Player::alice;
    } else {
        std::sort(order.begin(), order.end());
        result = opponent(to_move);
        for (auto [cnt, i] : order) {
            uint32_t f = feas[i];
            while (f) {
                int c = std::countr_zero(f) + 1;
                f &= f - 1;
                col_[i] = static_cast<uint8_t>(c);
                --uncoloured_;
                Player w = search(opponent(to_move));
                col_[i] = 0;
                ++uncoloured_;
                if (w == to_move) {
                    result = to_move;
                    goto done;
                }
            }
        }
        if (variant_.skipper && *variant_.skipper == to_move) {
            if (search(opponent(to_move)) == to_move)
                result = to_move;
        }
    done:;
    }
    if (opt_.memoize) {
        if (packed)
            memo64_.emplace(key64, static_cast<uint8_t>(result));
        else
            memo_str_.emplace(std::move(key_str), static_cast<uint8_t>(result));
    }
    return result;
}

Player Solver::solve() {
    std::fill(col_.begin(), col_.end(), 0);
    uncoloured_ = static_cast<int>(col_.size());
    return search(variant_.first_mover);
}

Player Solver::solve(std::span<const int> colouring, Player to_move) {
    if (colouring.size() != col_.size())
        fail(Errc::bad_parameter, "colouring length mismatch");
    uncoloured_ = 0;
    for (size_t i = 0; i < col_.size(); ++i) {
        int c = colouring[i];
        if (c < 0 || c > k_)
            fail(Errc::bad_parameter, "colour out of range");
        col_[i] = static_cast<uint8_t>(c);
        if (!c)
            ++uncoloured_;
    }
    return search(to_move);
}

Player Solver::solve(const GameState& s) {
    if (s.palette_size() != k_)
        fail(Errc::bad_parameter, "state palette differs from solver palette");
    return solve(s.colouring(), s.to_move());
}

Player solve_edge_game(const Graph& g, GameVariant v, int k, SolveOptions opt) {
    Solver s(g, v, k, opt);
    return s.solve();
}

Player solve(const GameState& s, GameVariant v, SolveOptions opt) {
    Solver sv(s.graph(), v, s.palette_size(), opt);
    return sv.solve(s);
}

Player solve_vertex_game(const Graph& h, GameVariant v, int k, SolveOptions opt) {
    Solver s = Solver::vertex_game(h, v, k, opt);
    return s.solve();
}

IndexProfile game_chromatic_index(const Graph& g, GameVariant v, SolveOptions opt) {
    IndexProfile out;
    int omega = omega_line(g);
    int hi = std::max(omega, 2 * max_degree(g) - 1);
    out.profile_lo = omega;
    out.index = -1;
    for (int k = omega; k <= hi; ++k) {
        Player w = solve_edge_game(g, v, k, opt);
        out.winners.push_back(w);
        if (w == Player::alice && out.index < 0)
            out.index = k;
    }
    if (out.index < 0)
        fail(Errc::invariant_violation,
             "no winning palette up to 2*Delta-1; the counting bound says this cannot happen");
    return out;
}

int game_chromatic_index_value(const Graph& g, GameVariant v, SolveOptions opt) {
    int hi = std::max(omega_line(g), 2 * max_degree(g) - 1);
    for (int k = omega_line(g); k <= hi; ++k)
        if (solve_edge_game(g, v, k, opt) == Player::alice)
            return k;
    fail(Errc::invariant_violation,
         "no winning palette up to 2*Delta-1; the counting bound says this cannot happen");
}

namespace {

bool colourable(const Graph& g, int k) {
    int m = g.edge_count();
    // order edges by constraint: most adjacent edges first
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.edge_degree(a) > g.edge_degree(b); });
    std::vector<int> col(m, 0);
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == m)
            return true;
        EdgeId e = order[idx];
        int used_new = 0;
        for (int i = 0; i < idx; ++i)
            used_new = std::max(used_new, col[order[i]]);
        for (int c = 1; c <= std::min(k, used_new + 1); ++c) { // colour symmetry break
            bool ok = true;
            for (EdgeId f : g.adjacent_edges(e))
                if (col[f] == c) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            col[e] = c;
            if (self(self, idx + 1))
                return true;
            col[e] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace

int chromatic_index(const Graph& g) {
    if (g.edge_count() == 0)
        return 0;
    for (int k = max_degree(g);; ++k)
        if (colourable(g, k))
            return k;
}

// --- transcripts ---

void write_transcript(std::ostream& out, const Transcript& t) {
    for (const auto& tm : t.moves) {
        nlohmann::json rec;
        rec["player"] = player_name(tm.player);
        if (tm.move.is_pass) {
            rec["pass"] = true;
        } else {
            rec["edge"] = tm.move.edge;
            rec["colour"] = tm.move.colour;
        }
        out << rec.dump() << '\n';
    }
    nlohmann::json fin;
    fin["winner"] = t.winner ? player_name(*t.winner) : "open";
    fin["k"] = t.palette_size;
    fin["variant"] = t.variant_code;
    out << fin.dump() << '\n';
}

namespace {

Player parse_player(const std::string& s) {
    if (s == "Alice")
        return Player::alice;
    if (s == "Bob")
        return Player::bob;
    fail(Errc::parse_error, "transcript: unknown player '" + s + "'");
}

} // namespace

Transcript read_transcript(std::istream& in) {
    Transcript t;
    std::string line;
    bool closed = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (closed)
            fail(Errc::parse_error, "transcript: data after final record");
        nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
        if (rec.is_discarded())
            fail(Errc::parse_error, "transcript: bad JSON line");
        if (rec.contains("winner")) {
            t.palette_size = rec.at("k").get<int>();
            if (rec.contains("variant"))
                t.variant_code = rec.at("variant").get<std::string>();
            auto w = rec.at("winner").get<std::string>();
            if (w != "open")
                t.winner = parse_player(w);
            closed = true;
            continue;
        }
        TranscriptMove tm;
        tm.player = parse_player(rec.at("player").get<std::string>());
        if (rec.value("pass", false))
            tm.move = Move::pass();
        else
            tm.move = Move::colour_edge(rec.at("edge").get<EdgeId>(), rec.at("colour").get<int>());
        t.moves.push_back(tm);
    }
    if (!closed)
        fail(Errc::parse_error, "transcript: missing final record");
    return t;
}

GameState replay_transcript(const Graph& g, const Transcript& t) {
    auto v = parse_variant(t.variant_code);
    if (!v)
        fail(Errc::parse_error, "transcript: bad variant code");
    GameState s(g, t.palette_size, v->first_mover);
    for (const auto& tm : t.moves) {
        if (tm.player != s.to_move())
            fail(Errc::parse_error, "transcript: move out of turn");
        s = play_move(s, tm.move, *v);
    }
    return s;
}

} // namespace lgp
