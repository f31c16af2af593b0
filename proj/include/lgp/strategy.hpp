#pragma once

#include <memory>

#include "lgp/catalog.hpp"
#include "lgp/game.hpp"

namespace lgp {

enum class Rationale {
    pairing_response,
    mirror_move,
    colour_universal_edge,
    unsafe_edge_first,
    delegate_to_oracle,
    pass_turn,
};

const char* rationale_name(Rationale r);

struct StrategyAdvice {
    Move move;
    Rationale rationale;
};

/// Edges adjacent to at least omega(L(g)) other edges.
std::vector<EdgeId> unsafe_edges(const Graph& g);

enum class StrategyKind { explicit_script, oracle };

/// Alice's side of one game. The scripted strategies follow the per-class
/// move scripts (star book, diamond/tetrahedron of flowers, single/double
/// galaxy, full tree, satellite); wherever a script hands play over to a
/// sub-strategy that has no script of its own, the advice comes from the
/// exact solver instead. The oracle strategy is solver-backed throughout.
class AliceStrategy {
public:
    static AliceStrategy oracle(const Graph& g, GameVariant v, int palette_size,
                                SolveOptions opt = {});
    static AliceStrategy explicit_script(const PermittedInstance& inst, GameVariant v,
                                         int palette_size, SolveOptions opt = {});

    /// The scripted or solver-backed reply for a state with Alice to move.
    /// last_bob_move is Bob's immediately preceding move, if any.
    StrategyAdvice advise(const GameState& s, const std::optional<Move>& last_bob_move);

    StrategyKind kind() const { return kind_; }

private:
    AliceStrategy(const Graph& g, GameVariant v, int palette_size, SolveOptions opt,
                  StrategyKind kind, StrategyLayout layout);

    StrategyAdvice oracle_advice(const GameState& s);
    StrategyAdvice galaxy_advice(const GameState& s, const std::optional<Move>& last,
                                 const GalaxyLayout& lay);
    StrategyAdvice star_book_advice(const GameState& s, const std::optional<Move>& last,
                                    const StarBookLayout& lay);
    StrategyAdvice diamond_advice(const GameState& s, const std::optional<Move>& last,
                                  const DiamondFlowersLayout& lay);
    StrategyAdvice tetrahedron_advice(const GameState& s, const std::optional<Move>& last,
                                      const TetrahedronFlowersLayout& lay);
    StrategyAdvice full_tree_advice(const GameState& s);
    StrategyAdvice satellite_advice(const GameState& s, const std::optional<Move>& last,
                                    const SatelliteLayout& lay);

    Solver& solver();

    const Graph* g_;
    GameVariant v_;
    int k_;
    SolveOptions opt_;
    StrategyKind kind_;
    StrategyLayout layout_;
    std::vector<EdgeId> unsafe_;
    std::unique_ptr<Solver> solver_;
};

struct ValidationResult {
    bool valid = true;
    std::vector<TranscriptMove> losing_line; // first refuting line found, when invalid
    std::string note;
    uint64_t positions = 0;

    explicit operator bool() const { return valid; }
};

/// Plays Alice by her scripted strategy against every Bob line (including
/// Bob passes where he is entitled) with k = omega(L); valid iff every leaf
/// is an Alice win.
ValidationResult validate_strategy(const PermittedInstance& inst, GameVariant v,
                                   SolveOptions opt = {});

/// Same adversarial sweep with the solver-backed strategy. palette_size -1
/// means omega(L(g)).
ValidationResult validate_oracle_strategy(const Graph& g, GameVariant v, int palette_size = -1,
                                          SolveOptions opt = {});

/// Whole-graph composition for a disjoint union of permitted components
/// under an Alice-skipping game: special component first (at most one full
/// tree / satellite), afterwards respond in the component Bob just played,
/// otherwise pass.
class CompositeStrategy {
public:
    CompositeStrategy(const std::vector<PermittedParams>& parts, GameVariant v,
                      SolveOptions opt = {});

    const Graph& graph() const { return graph_; }
    int palette_size() const { return k_; }
    StrategyAdvice advise(const GameState& s, const std::optional<Move>& last_bob_move);

private:
    struct Part {
        PermittedInstance inst;
        int edge_offset;
        std::unique_ptr<AliceStrategy> script; // null for oracle-backed classes
    };

    StrategyAdvice escalate(const GameState& s, int part_index);
    GameState local_state(const GameState& s, const Part& part) const;

    Graph graph_;
    GameVariant v_;
    int k_;
    SolveOptions opt_;
    std::vector<std::unique_ptr<Part>> parts_;
    int special_ = -1;
    std::unique_ptr<Solver> whole_solver_;
};

ValidationResult validate_composite(const std::vector<PermittedParams>& parts, GameVariant v,
                                    SolveOptions opt = {});

} // namespace lgp
