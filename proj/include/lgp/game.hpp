#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <unordered_map>

#include "lgp/graph.hpp"

namespace lgp {

enum class Player : uint8_t { alice, bob };

inline Player opponent(Player p) { return p == Player::alice ? Player::bob : Player::alice; }
const char* player_name(Player p);

/// One of the six games: who moves first, and who (if anyone) may skip.
struct GameVariant {
    Player first_mover;
    std::optional<Player> skipper;

    bool operator==(const GameVariant&) const = default;
};

inline constexpr GameVariant kGameAA{Player::alice, Player::alice};
inline constexpr GameVariant kGameAminus{Player::alice, std::nullopt};
inline constexpr GameVariant kGameAB{Player::alice, Player::bob};
inline constexpr GameVariant kGameBA{Player::bob, Player::alice};
inline constexpr GameVariant kGameBminus{Player::bob, std::nullopt};
inline constexpr GameVariant kGameBB{Player::bob, Player::bob};

/// All six variants in the fixed order AA, A-, AB, BA, B-, BB.
const std::array<GameVariant, 6>& all_variants();

/// Two-letter code: "AA", "A-", "AB", "BA", "B-", "BB".
std::string variant_code(GameVariant v);
std::optional<GameVariant> parse_variant(const std::string& code);

/// Either Colour(edge, colour) or Pass.
struct Move {
    bool is_pass = false;
    EdgeId edge = -1;
    int colour = 0;

    static Move pass() { return Move{true, -1, 0}; }
    static Move colour_edge(EdgeId e, int c) { return Move{false, e, c}; }
    bool operator==(const Move&) const = default;
};

/// A partial proper edge colouring plus whose turn it is. The graph must
/// outlive the state.
class GameState {
public:
    GameState(const Graph& g, int palette_size, Player to_move);
    GameState(const Graph& g, int palette_size, Player to_move,
              std::span<const std::pair<EdgeId, int>> initial_colouring);

    const Graph& graph() const { return *g_; }
    int palette_size() const { return k_; }
    Player to_move() const { return to_move_; }
    int colour_of(EdgeId e) const;
    const std::vector<int>& colouring() const { return col_; }
    int uncoloured_count() const { return uncoloured_; }
    bool all_coloured() const { return uncoloured_ == 0; }

    /// True iff colour c (1..k) can legally go on uncoloured edge e.
    bool feasible(EdgeId e, int c) const;
    std::vector<int> feasible_colours(EdgeId e) const;

    void apply(const Move& m); // unchecked except colour properness
    void toggle_turn() { to_move_ = opponent(to_move_); }

private:
    const Graph* g_;
    int k_;
    std::vector<int> col_;
    Player to_move_;
    int uncoloured_;
};

/// All feasible Colour moves in (edge, colour) order, plus Pass iff the
/// mover is the variant's skipper and at least one Colour move exists.
std::vector<Move> legal_moves(const GameState& s, GameVariant v);

/// Alice once everything is coloured; Bob once no uncoloured edge has a
/// feasible colour. With the dead-edge shortcut, Bob already when a single
/// uncoloured edge has none (colours are never removed, so it stays dead).
std::optional<Player> terminal(const GameState& s, bool dead_edge_shortcut = true);

/// Applies a legal move and toggles the turn. Throws on illegal moves.
GameState play_move(const GameState& s, const Move& m, GameVariant v);

/// True when no uncoloured edge can ever run out of colours: for each, the
/// distinct adjacent colours plus adjacent uncoloured edges stay below k.
/// From such a state Alice wins no matter what is played.
bool completion_guaranteed(const GameState& s);

struct SolveOptions {
    uint64_t node_budget = 100'000'000;
    bool dead_edge_shortcut = true;
    bool memoize = true;
};

/// Exact winner search with memoization on colour-relabelled states.
/// A Solver instance is bound to one (conflict structure, variant, palette)
/// and may be reused across start states; the memo table is shared.
class Solver {
public:
    Solver(const Graph& g, GameVariant v, int palette_size, SolveOptions opt = {});

    /// Vertex-colouring game on h: items are vertices instead of edges.
    static Solver vertex_game(const Graph& h, GameVariant v, int palette_size,
                              SolveOptions opt = {});

    Player solve(); // from the empty colouring, first mover to move
    Player solve(std::span<const int> colouring, Player to_move);
    Player solve(const GameState& s);

    uint64_t nodes_visited() const { return nodes_; }
    int palette_size() const { return k_; }
    GameVariant variant() const { return variant_; }

private:
    Solver(std::vector<std::vector<int>> adjacency, GameVariant v, int palette_size,
           SolveOptions opt);

    Player search(Player to_move);
    bool memo_key(Player to_move, uint64_t& key64, std::string& key_str) const;

    std::vector<std::vector<int>> adj_;
    GameVariant variant_;
    int k_;
    SolveOptions opt_;
    int max_item_degree_ = 0;
    bool pack64_ = false;
    std::vector<uint8_t> col_;
    int uncoloured_ = 0;
    uint64_t nodes_ = 0;
    std::unordered_map<uint64_t, uint8_t> memo64_;
    std::unordered_map<std::string, uint8_t> memo_str_;
};

/// Winner of the [X,Y]-edge colouring game on g with k colours.
Player solve_edge_game(const Graph& g, GameVariant v, int k, SolveOptions opt = {});
Player solve(const GameState& s, GameVariant v, SolveOptions opt = {});

/// Winner of the [X,Y]-vertex colouring game on h with k colours.
Player solve_vertex_game(const Graph& h, GameVariant v, int k, SolveOptions opt = {});

/// Game chromatic index plus the win/loss profile over the whole candidate
/// range [omega(L(g)), 2*Delta-1]; winning need not be monotone in k.
struct IndexProfile {
    int index = 0;
    int profile_lo = 0;
    std::vector<Player> winners; // winners[i] = winner with k = profile_lo + i

    Player winner_at(int k) const { return winners.at(static_cast<size_t>(k - profile_lo)); }
    int profile_hi() const { return profile_lo + static_cast<int>(winners.size()) - 1; }
};

IndexProfile game_chromatic_index(const Graph& g, GameVariant v, SolveOptions opt = {});

/// Just the index: stops at the smallest winning k instead of profiling the
/// whole range.
int game_chromatic_index_value(const Graph& g, GameVariant v, SolveOptions opt = {});

/// Ordinary chromatic index (no game): smallest k admitting a proper edge
/// colouring, by backtracking.
int chromatic_index(const Graph& g);

// --- transcripts: one JSON record per move, then {winner, k} ---

struct TranscriptMove {
    Player player;
    Move move;
};

struct Transcript {
    std::string variant_code;
    int palette_size = 0;
    std::vector<TranscriptMove> moves;
    std::optional<Player> winner;
};

void write_transcript(std::ostream& out, const Transcript& t);
Transcript read_transcript(std::istream& in);

/// Replays transcript moves from the empty colouring, validating each.
GameState replay_transcript(const Graph& g, const Transcript& t);

} // namespace lgp
