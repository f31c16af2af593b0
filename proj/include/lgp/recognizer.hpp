#pragma once

#include <unordered_map>

#include "lgp/catalog.hpp"
#include "lgp/game.hpp"
#include "lgp/subgraph.hpp"

namespace lgp {

// --- classical line perfectness, two independent routes ---

/// No odd cycle of length >= 5 as an (edge-induced) subgraph.
bool is_line_perfect_trotter(const Graph& g);

/// Every block bipartite, or K4, or a triangular book K_{1,1,n}.
bool is_line_perfect_maffray(const Graph& g);

/// Runs both routes; they must agree (anything else is an internal error).
bool is_line_perfect(const Graph& g);

// --- forbidden-configuration route ---

struct ForbiddenWitness {
    ConfigName config;
    std::vector<EdgeId> edges; // host edge ids of the embedded configuration
};

struct ForbiddenVerdict {
    bool perfect;
    std::optional<ForbiddenWitness> witness;
};

/// The game's forbidden configurations, in detection order.
const std::vector<ConfigName>& forbidden_list(GameVariant v);

ForbiddenVerdict check_forbidden(const Graph& g, GameVariant v);

// --- structural route ---

struct NotPermitted {
    ForbiddenWitness witness;
};

using ComponentClass = std::variant<PermittedParams, NotPermitted>;

bool is_permitted(const ComponentClass& c);

/// Classifies a connected graph against the game's permitted component
/// shapes, trying them in the fixed aliasing-precedence order and returning
/// the first that matches up to isomorphism.
ComponentClass classify_component(const Graph& h, GameVariant v);

/// True for the [A,A] special classes: a full tree of type E1 or a
/// satellite of type E2 (the shapes containing a 3-caterpillar).
bool is_special_component(const PermittedParams& p);

bool is_line_xy_perfect_structural(const Graph& g, GameVariant v);

// --- definitional route ---

/// Plays the game on every nonempty edge subset (deduplicated up to
/// isomorphism) with omega(L) colours; the cache persists across calls, so
/// an enumeration sweep shares subset verdicts.
class DefinitionalChecker {
public:
    explicit DefinitionalChecker(SolveOptions solve = {}, int max_edges = 9);

    bool is_line_xy_perfect(const Graph& g, GameVariant v);

private:
    SolveOptions solve_;
    int max_edges_;
    std::unordered_map<std::string, bool> nice_at_omega_; // iso key + variant -> Alice wins
};

bool is_line_xy_perfect_definitional(const Graph& g, GameVariant v, SolveOptions opt = {},
                                     int max_edges = 9);

// --- edge perfectness (the stronger variant with K3 forbidden too) ---

bool is_edge_xy_perfect(const Graph& g, GameVariant v);

/// Verdict panel for one graph: the six line-game booleans (forbidden
/// route), classical line perfectness, and the six edge-game booleans.
struct PerfectnessVerdict {
    std::array<bool, 6> line_game_perfect; // indexed like all_variants()
    bool line_perfect;
    std::array<bool, 6> edge_game_perfect;
};

PerfectnessVerdict full_verdict(const Graph& g);

/// Isomorphism key that also works for graphs whose vertex count exceeds
/// the canonical_form limit, as long as every component is small: the
/// sorted component canonical forms.
std::string iso_key(const Graph& g);

} // namespace lgp
