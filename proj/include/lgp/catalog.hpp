#pragma once

#include <variant>

#include "lgp/game.hpp"
#include "lgp/graph.hpp"

namespace lgp {

// --- named configurations ---

enum class ConfigName {
    P5,
    C4,
    P5uP2,
    C4uP2,
    P6,
    C5,
    Bull,
    Diamond,
    F1,
    F2,
    F3,
    F1uF1,
    K3,
    N1, N2, N3, N4, N5, N6, N7, N8, N9,
};

Graph make_named(ConfigName name);
const char* config_name_string(ConfigName name);
const std::vector<ConfigName>& all_config_names();

/// The i-th (1..9) forbidden induced subgraph for line graphs.
const Graph& beineke_graph(int i);

Graph path_graph(int n);     // P_n, n >= 1
Graph cycle_graph(int n);    // C_n, n >= 3
Graph star_graph(int n);     // K_{1,n}
Graph complete_graph(int n); // K_n

// --- parameterised permitted component types ---

struct Candy { int m, n1, n2; };               // m >= 1
struct StarBook { int m, n1, n2; };            // m >= 1
struct VaseOfFlowers { int n; };
struct DoubleStar { int m, n; };
struct ShootingStar { int m, n; };
struct DoubleVase { int n; };
struct Amaryllis { int m, n; };
struct SingleGalaxy { int k, l; };
struct DoubleGalaxy { int k, l, m, n; };
struct DiamondOfFlowers { int n; };
struct TetrahedronOfFlowers { int n; };
struct FullTree { int n, m1, m2; };
struct Satellite { int m1, m2; };
struct IsolatedVertex {};

using PermittedParams =
    std::variant<VaseOfFlowers, DoubleStar, Candy, StarBook, ShootingStar, DoubleVase,
                 Amaryllis, DiamondOfFlowers, TetrahedronOfFlowers, SingleGalaxy,
                 DoubleGalaxy, FullTree, Satellite, IsolatedVertex>;

Graph make_permitted(const PermittedParams& p);
std::string permitted_to_string(const PermittedParams& p);

// --- edge-role layouts used by the scripted Alice strategies ---

struct PendingObject {
    std::vector<EdgeId> star_edges; // 2 for a triangle, 1 for a P3
    EdgeId matching_edge;
    bool is_triangle;
};

struct GalaxyLayout {
    std::vector<PendingObject> objects; // numbered by smallest incident edge id
    std::optional<EdgeId> vz;           // double galaxy only
    std::vector<EdgeId> z_star_edges;   // edges z-u_i
    std::vector<EdgeId> pendant_edges;  // edges v-w_j
};

struct StarBookLayout {
    EdgeId universal_edge;
};

struct DiamondFlowersLayout {
    EdgeId vu1, vu2, u1u2, wu1, wu2;
    std::vector<EdgeId> star_edges;
};

struct TetrahedronFlowersLayout {
    // the three perfect-matching pairs of the K4; each pair dominates all edges
    std::array<std::pair<EdgeId, EdgeId>, 3> matching_pairs;
    EdgeId u1u2;
    std::vector<EdgeId> star_edges;
};

struct FullTreeLayout {
    EdgeId vw1, vw2;
};

struct SatelliteLayout {
    EdgeId w0w1, w0w2, w1w2, w0y;
    std::vector<EdgeId> z1_edges, z2_edges; // leaves at w1 resp. w2
};

using StrategyLayout =
    std::variant<std::monostate, GalaxyLayout, StarBookLayout, DiamondFlowersLayout,
                 TetrahedronFlowersLayout, FullTreeLayout, SatelliteLayout>;

/// A constructed permitted component together with the edge roles the
/// scripted strategies refer to. Layout is monostate for the oracle-backed
/// classes (vase, double star, candy, shooting star, double vase, amaryllis).
struct PermittedInstance {
    PermittedParams params;
    Graph graph;
    StrategyLayout layout;
};

PermittedInstance make_permitted_instance(const PermittedParams& p);

// --- precoloured configurations ---

enum class PrecolouredName { F1_1, F3_1 };

struct PrecolouredConfig {
    Graph graph;
    std::vector<std::pair<EdgeId, int>> initial_colouring;
    int palette_size;
    Player to_move;

    GameState state() const { return GameState(graph, palette_size, to_move, initial_colouring); }
};

PrecolouredConfig make_precoloured(PrecolouredName name);

/// Permitted-shape names: "candy(4,2,3)", "vase(5)", "starbook(2,1,0)", ...
std::optional<PermittedParams> permitted_by_name(const std::string& name);

/// Name lookup for the CLI: fixed names (case-sensitive, e.g. "P6", "F1",
/// "N4"), families "P<n>"/"C<n>"/"K<n>"/"K1_<n>", and permitted shapes as
/// "candy(4,2,3)", "vase(5)", "starbook(2,1,0)", ...
std::optional<Graph> graph_by_name(const std::string& name);

struct CatalogEntry {
    std::string name;
    Graph graph;
};

/// Everything `catalog list` prints: the named configurations plus small
/// representatives of each permitted family.
std::vector<CatalogEntry> catalog_entries();

} // namespace lgp
