#pragma once

#include <functional>

#include "lgp/catalog.hpp"
#include "lgp/game.hpp"

namespace lgp::checks {

/// Result of one verification sweep.
struct Outcome {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::vector<std::string> failure_notes; // first few failing cases
    bool passed() const { return failures == 0; }

    void fail_case(const std::string& note) {
        ++failures;
        if (failure_notes.size() < 20)
            failure_notes.push_back(note);
    }
};

/// Optional per-item streaming callback (one line per graph/case).
using Logger = std::function<void(const std::string&)>;

/// Bob wins each forbidden configuration with omega(L) colours, and the two
/// precoloured configurations with Alice to move.
Outcome forbidden_configurations(const SolveOptions& opt = {});

/// The parameter grid of permitted shapes with at most max_edges edges,
/// paired with the game each shape belongs to.
std::vector<std::pair<PermittedParams, GameVariant>> permitted_grid(int max_edges = 9);

/// Alice wins every permitted instance at omega(L) under its game, and the
/// scripted strategies survive the exhaustive adversary.
Outcome permitted_types(const SolveOptions& opt = {}, int max_edges = 9);

/// Definitional, forbidden-subgraph and structural deciders agree on every
/// graph with at most max_vertices vertices, for all six games.
Outcome decider_equivalence(int max_vertices, const SolveOptions& opt = {},
                            const Logger& log = {});

/// The two game-chromatic-index chains, the class-inclusion chain, and the
/// [B,B]=[A,B]=[A,-] verdict equality, on the same enumeration.
Outcome observation_chains(int max_vertices, const SolveOptions& opt = {},
                           const Logger& log = {});

/// Edge game on g equals vertex game on L(g), all variants, k <= max_k,
/// over all iso-free graphs with at most max_edges edges.
Outcome vertex_edge_duality(int max_edges, int max_k, const SolveOptions& opt = {},
                            const Logger& log = {});

/// Odd-cycle route vs. block route for classical line perfectness on all
/// graphs with at most max_vertices vertices.
Outcome line_perfect_routes(int max_vertices, const Logger& log = {});

/// Every single-edge deletion of a permitted instance splits into permitted
/// components for the same game (with the [A,A] special-component cap).
Outcome heredity(int max_edges = 9);

/// Line graphs of the enumeration pass the nine-subgraph test, the nine
/// test graphs fail it, and the only line-graph collision among connected
/// graphs is K3 / K1,3.
Outcome line_graph_recognition(int max_vertices, const Logger& log = {});

} // namespace lgp::checks
