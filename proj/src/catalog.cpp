#include "lgp/catalog.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace lgp {

namespace {

void require(bool cond, const char* what) {
    if (!cond)
        fail(Errc::bad_parameter, what);
}

} // namespace

Graph path_graph(int n) {
    require(n >= 1, "path_graph: n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i)
        es.emplace_back(i, i + 1);
    return Graph::build(n, es);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle_graph: n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i)
        es.emplace_back(i, i + 1);
    es.emplace_back(n - 1, 0);
    return Graph::build(n, es);
}

Graph star_graph(int n) {
    require(n >= 0, "star_graph: n >= 0");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= n; ++i)
        es.emplace_back(0, i);
    return Graph::build(n + 1, es);
}

Graph complete_graph(int n) {
    require(n >= 0, "complete_graph: n >= 0");
    std::vector<std::pair<int, int>> es;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            es.emplace_back(i, j);
    return Graph::build(n, es);
}

namespace {

// 3-caterpillar: spine u1(0)-u2(1)-u3(2), a single leaf edge e0 at u2,
// two leaves at each of u1, u3. Edge ids: e0=0, e1=1, e2=2, then the leaves.
Graph make_f1() {
    return Graph::build(8, {{1, 3}, {0, 1}, {1, 2}, {0, 4}, {0, 5}, {2, 6}, {2, 7}});
}

// mini lobster: F1 with e0 grown into a pendant path of length 2 at u2
Graph make_f2() {
    return Graph::build(9, {{1, 3}, {0, 1}, {1, 2}, {0, 4}, {0, 5}, {2, 6}, {2, 7}, {3, 8}});
}

// trigraph: triangle v0(0) v1(1) v2(2) with two leaves at each vertex.
// Edge ids: e0 = v1v2 (opposite v0), e1 = v0v1, e2 = v0v2, then leaf edges
// f01 f02 f11 f12 f21 f22.
Graph make_f3() {
    return Graph::build(
        9, {{1, 2}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}});
}

// the nine minimal non-line graphs; N1..N3, N8, N9 have the customary
// shapes (claw, co-(P2 u P3), K5-e, triangular 3-ladder, 5-wheel), N4..N7
// are ordered by edge count
const std::vector<std::vector<std::pair<int, int>>>& beineke_edges() {
    static const std::vector<std::vector<std::pair<int, int>>> data = {
        // N1: claw
        {{0, 1}, {0, 2}, {0, 3}},
        // N2: complement of P2 u P3
        {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}},
        // N3: K5 minus an edge
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}},
        // N4: diamond with a pendant at each degree-2 vertex
        {{0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}},
        // N5: diamond whose degree-2 vertices are joined by an outside path
        {{0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}},
        // N6: K4 with an attached vertex of degree 2 carrying a pendant
        {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
        // N7: K2 joined to two disjoint edges
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}},
        // N8: triangular 3-ladder
        {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}},
        // N9: 5-wheel
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}},
    };
    return data;
}

int beineke_vertices(int i) {
    static const int nv[9] = {4, 5, 5, 6, 6, 6, 6, 6, 6};
    return nv[i - 1];
}

} // namespace

const Graph& beineke_graph(int i) {
    require(i >= 1 && i <= 9, "beineke_graph: index 1..9");
    static std::vector<Graph> cache = [] {
        std::vector<Graph> v;
        for (int j = 1; j <= 9; ++j)
            v.push_back(Graph::build(beineke_vertices(j), beineke_edges()[j - 1]));
        return v;
    }();
    return cache[i - 1];
}

Graph make_named(ConfigName name) {
    switch (name) {
    case ConfigName::P5:
        return path_graph(5);
    case ConfigName::C4:
        return cycle_graph(4);
    case ConfigName::P5uP2:
        return disjoint_union(path_graph(5), path_graph(2));
    case ConfigName::C4uP2:
        return disjoint_union(cycle_graph(4), path_graph(2));
    case ConfigName::P6:
        return path_graph(6);
    case ConfigName::C5:
        return cycle_graph(5);
    case ConfigName::Bull:
        return Graph::build(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
    case ConfigName::Diamond:
        return Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    case ConfigName::F1:
        return make_f1();
    case ConfigName::F2:
        return make_f2();
    case ConfigName::F3:
        return make_f3();
    case ConfigName::F1uF1:
        return disjoint_union(make_f1(), make_f1());
    case ConfigName::K3:
        return complete_graph(3);
    case ConfigName::N1:
    case ConfigName::N2:
    case ConfigName::N3:
    case ConfigName::N4:
    case ConfigName::N5:
    case ConfigName::N6:
    case ConfigName::N7:
    case ConfigName::N8:
    case ConfigName::N9:
        return beineke_graph(static_cast<int>(name) - static_cast<int>(ConfigName::N1) + 1);
    }
    fail(Errc::bad_parameter, "make_named: unknown name");
}

const char* config_name_string(ConfigName name) {
    switch (name) {
    case ConfigName::P5: return "P5";
    case ConfigName::C4: return "C4";
    case ConfigName::P5uP2: return "P5uP2";
    case ConfigName::C4uP2: return "C4uP2";
    case ConfigName::P6: return "P6";
    case ConfigName::C5: return "C5";
    case ConfigName::Bull: return "bull";
    case ConfigName::Diamond: return "diamond";
    case ConfigName::F1: return "F1";
    case ConfigName::F2: return "F2";
    case ConfigName::F3: return "F3";
    case ConfigName::F1uF1: return "F1uF1";
    case ConfigName::K3: return "K3";
    case ConfigName::N1: return "N1";
    case ConfigName::N2: return "N2";
    case ConfigName::N3: return "N3";
    case ConfigName::N4: return "N4";
    case ConfigName::N5: return "N5";
    case ConfigName::N6: return "N6";
    case ConfigName::N7: return "N7";
    case ConfigName::N8: return "N8";
    case ConfigName::N9: return "N9";
    }
    return "?";
}

const std::vector<ConfigName>& all_config_names() {
    static const std::vector<ConfigName> names = {
        ConfigName::P5,   ConfigName::C4,    ConfigName::P5uP2, ConfigName::C4uP2,
        ConfigName::P6,   ConfigName::C5,    ConfigName::Bull,  ConfigName::Diamond,
        ConfigName::F1,   ConfigName::F2,    ConfigName::F3,    ConfigName::F1uF1,
        ConfigName::K3,   ConfigName::N1,    ConfigName::N2,    ConfigName::N3,
        ConfigName::N4,   ConfigName::N5,    ConfigName::N6,    ConfigName::N7,
        ConfigName::N8,   ConfigName::N9,
    };
    return names;
}

// --- permitted types ---

namespace {

PermittedInstance build_vase(VaseOfFlowers p) {
    require(p.n >= 0, "vase: n >= 0");
    std::vector<std::pair<int, int>> es = {{0, 1}, {0, 2}, {1, 2}};
    for (int i = 0; i < p.n; ++i)
        es.emplace_back(0, 3 + i);
    return {p, Graph::build(3 + p.n, es), std::monostate{}};
}

PermittedInstance build_double_star(DoubleStar p) {
    require(p.m >= 0 && p.n >= 0, "double star: m, n >= 0");
    std::vector<std::pair<int, int>> es = {{0, 1}};
    for (int i = 0; i < p.m; ++i)
        es.emplace_back(0, 2 + i);
    for (int j = 0; j < p.n; ++j)
        es.emplace_back(1, 2 + p.m + j);
    return {p, Graph::build(2 + p.m + p.n, es), std::monostate{}};
}

// common core of candy and star book: K_{2,m} between v1=0 and v2=1 plus
// n1 leaves at v1 and n2 leaves at v2; star book adds the edge v1v2 first
PermittedInstance build_candy_like(bool book, int m, int n1, int n2, PermittedParams p) {
    require(m >= 1, "candy/star book: m >= 1");
    require(n1 >= 0 && n2 >= 0, "candy/star book: n1, n2 >= 0");
    std::vector<std::pair<int, int>> es;
    if (book)
        es.emplace_back(0, 1);
    for (int i = 0; i < m; ++i) {
        es.emplace_back(0, 2 + i);
        es.emplace_back(2 + i, 1);
    }
    for (int j = 0; j < n1; ++j)
        es.emplace_back(0, 2 + m + j);
    for (int j = 0; j < n2; ++j)
        es.emplace_back(1, 2 + m + n1 + j);
    Graph g = Graph::build(2 + m + n1 + n2, es);
    StrategyLayout layout = std::monostate{};
    if (book)
        layout = StarBookLayout{0};
    return {p, std::move(g), layout};
}

PermittedInstance build_shooting_star(ShootingStar p) {
    require(p.m >= 0 && p.n >= 0, "shooting star: m, n >= 0");
    // v=0, w=1, a=2, b=3; m leaves at w, n leaves at v
    std::vector<std::pair<int, int>> es = {{1, 0}, {0, 2}, {2, 3}};
    for (int i = 0; i < p.m; ++i)
        es.emplace_back(1, 4 + i);
    for (int j = 0; j < p.n; ++j)
        es.emplace_back(0, 4 + p.m + j);
    return {p, Graph::build(4 + p.m + p.n, es), std::monostate{}};
}

PermittedInstance build_double_vase(DoubleVase p) {
    require(p.n >= 0, "double vase: n >= 0");
    std::vector<std::pair<int, int>> es = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}};
    for (int j = 0; j < p.n; ++j)
        es.emplace_back(0, 5 + j);
    return {p, Graph::build(5 + p.n, es), std::monostate{}};
}

PermittedInstance build_amaryllis(Amaryllis p) {
    require(p.m >= 0 && p.n >= 0, "amaryllis: m, n >= 0");
    // v=0, w=1, triangle c1=2, c2=3; m leaves at w, n leaves at v
    std::vector<std::pair<int, int>> es = {{1, 0}, {0, 2}, {2, 3}, {3, 0}};
    for (int i = 0; i < p.m; ++i)
        es.emplace_back(1, 4 + i);
    for (int j = 0; j < p.n; ++j)
        es.emplace_back(0, 4 + p.m + j);
    return {p, Graph::build(4 + p.m + p.n, es), std::monostate{}};
}

PermittedInstance build_diamond_flowers(DiamondOfFlowers p) {
    require(p.n >= 0, "diamond of flowers: n >= 0");
    // v=0 (degree-2 vertex of the diamond, carries the leaves), u1=1, u2=2, w=3
    std::vector<std::pair<int, int>> es = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
    for (int j = 0; j < p.n; ++j)
        es.emplace_back(0, 4 + j);
    DiamondFlowersLayout lay;
    lay.vu1 = 0;
    lay.vu2 = 1;
    lay.u1u2 = 2;
    lay.wu1 = 3;
    lay.wu2 = 4;
    for (int j = 0; j < p.n; ++j)
        lay.star_edges.push_back(5 + j);
    return {p, Graph::build(4 + p.n, es), lay};
}

PermittedInstance build_tetrahedron_flowers(TetrahedronOfFlowers p) {
    require(p.n >= 0, "tetrahedron of flowers: n >= 0");
    // v=0, u1=1, u2=2, u3=3; edges vu1 vu2 vu3 u1u2 u1u3 u2u3 then leaves at v
    std::vector<std::pair<int, int>> es = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int j = 0; j < p.n; ++j)
        es.emplace_back(0, 4 + j);
    TetrahedronFlowersLayout lay;
    // the pairing: u1u2 <-> vu3, vu1 <-> u2u3, vu2 <-> u1u3
    lay.matching_pairs = {{{3, 2}, {0, 5}, {1, 4}}};
    lay.u1u2 = 3;
    for (int j = 0; j < p.n; ++j)
        lay.star_edges.push_back(6 + j);
    return {p, Graph::build(4 + p.n, es), lay};
}

void push_objects(GalaxyLayout& lay, std::vector<std::pair<int, int>>& es, int center, int k,
                  int l, int& next_vertex, int& next_edge) {
    for (int s = 0; s < k; ++s) {
        int c = next_vertex++, d = next_vertex++;
        es.emplace_back(center, c);
        es.emplace_back(center, d);
        es.emplace_back(c, d);
        lay.objects.push_back(PendingObject{{next_edge, next_edge + 1}, next_edge + 2, true});
        next_edge += 3;
    }
    for (int t = 0; t < l; ++t) {
        int x = next_vertex++, y = next_vertex++;
        es.emplace_back(center, x);
        es.emplace_back(x, y);
        lay.objects.push_back(PendingObject{{next_edge}, next_edge + 1, false});
        next_edge += 2;
    }
}

PermittedInstance build_single_galaxy(SingleGalaxy p) {
    require(p.k >= 0 && p.l >= 0, "single galaxy: k, l >= 0");
    std::vector<std::pair<int, int>> es;
    GalaxyLayout lay;
    int nv = 1, ne = 0;
    push_objects(lay, es, 0, p.k, p.l, nv, ne);
    return {p, Graph::build(nv, es), lay};
}

PermittedInstance build_double_galaxy(DoubleGalaxy p) {
    require(p.k >= 0 && p.l >= 0 && p.m >= 0 && p.n >= 0, "double galaxy: k, l, m, n >= 0");
    // v=0, z=1; edge vz first, then objects, then z-star edges, then pending P2s
    std::vector<std::pair<int, int>> es = {{0, 1}};
    GalaxyLayout lay;
    lay.vz = 0;
    int nv = 2, ne = 1;
    push_objects(lay, es, 0, p.k, p.l, nv, ne);
    for (int i = 0; i < p.m; ++i) {
        es.emplace_back(1, nv++);
        lay.z_star_edges.push_back(ne++);
    }
    for (int j = 0; j < p.n; ++j) {
        es.emplace_back(0, nv++);
        lay.pendant_edges.push_back(ne++);
    }
    return {p, Graph::build(nv, es), lay};
}

PermittedInstance build_full_tree(FullTree p) {
    require(p.n >= 0 && p.m1 >= 0 && p.m2 >= 0, "full tree: n, m1, m2 >= 0");
    // w1=0, v=1, w2=2; edges vw1, vw2 first
    std::vector<std::pair<int, int>> es = {{0, 1}, {1, 2}};
    int nv = 3;
    for (int i = 0; i < p.m1; ++i)
        es.emplace_back(0, nv++);
    for (int j = 0; j < p.n; ++j)
        es.emplace_back(1, nv++);
    for (int i = 0; i < p.m2; ++i)
        es.emplace_back(2, nv++);
    return {p, Graph::build(nv, es), FullTreeLayout{0, 1}};
}

PermittedInstance build_satellite(Satellite p) {
    require(p.m1 >= 0 && p.m2 >= 0, "satellite: m1, m2 >= 0");
    // w0=0, w1=1, w2=2, y=3
    std::vector<std::pair<int, int>> es = {{0, 1}, {0, 2}, {1, 2}, {0, 3}};
    SatelliteLayout lay;
    lay.w0w1 = 0;
    lay.w0w2 = 1;
    lay.w1w2 = 2;
    lay.w0y = 3;
    int nv = 4, ne = 4;
    for (int i = 0; i < p.m1; ++i) {
        es.emplace_back(1, nv++);
        lay.z1_edges.push_back(ne++);
    }
    for (int i = 0; i < p.m2; ++i) {
        es.emplace_back(2, nv++);
        lay.z2_edges.push_back(ne++);
    }
    return {p, Graph::build(nv, es), lay};
}

} // namespace

PermittedInstance make_permitted_instance(const PermittedParams& p) {
    return std::visit(
        [](auto&& arg) -> PermittedInstance {
            using T = std::decay_t<decltype(arg)>;
            if constexpr (std::is_same_v<T, VaseOfFlowers>)
                return build_vase(arg);
            else if constexpr (std::is_same_v<T, DoubleStar>)
                return build_double_star(arg);
            else if constexpr (std::is_same_v<T, Candy>)
                return build_candy_like(false, arg.m, arg.n1, arg.n2, arg);
            else if constexpr (std::is_same_v<T, StarBook>)
                return build_candy_like(true, arg.m, arg.n1, arg.n2, arg);
            else if constexpr (std::is_same_v<T, ShootingStar>)
                return build_shooting_star(arg);
            else if constexpr (std::is_same_v<T, DoubleVase>)
                return build_double_vase(arg);
            else if constexpr (std::is_same_v<T, Amaryllis>)
                return build_amaryllis(arg);
            else if constexpr (std::is_same_v<T, DiamondOfFlowers>)
                return build_diamond_flowers(arg);
            else if constexpr (std::is_same_v<T, TetrahedronOfFlowers>)
                return build_tetrahedron_flowers(arg);
            else if constexpr (std::is_same_v<T, SingleGalaxy>)
                return build_single_galaxy(arg);
            else if constexpr (std::is_same_v<T, DoubleGalaxy>)
                return build_double_galaxy(arg);
            else if constexpr (std::is_same_v<T, FullTree>)
                return build_full_tree(arg);
            else if constexpr (std::is_same_v<T, Satellite>)
                return build_satellite(arg);
            else
                return {arg, Graph::build(1, {}), std::monostate{}};
        },
        p);
}

Graph make_permitted(const PermittedParams& p) { return make_permitted_instance(p).graph; }

std::string permitted_to_string(const PermittedParams& p) {
    std::ostringstream os;
    std::visit(
        [&](auto&& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, VaseOfFlowers>)
                os << "vase(" << a.n << ")";
            else if constexpr (std::is_same_v<T, DoubleStar>)
                os << "doublestar(" << a.m << "," << a.n << ")";
            else if constexpr (std::is_same_v<T, Candy>)
                os << "candy(" << a.m << "," << a.n1 << "," << a.n2 << ")";
            else if constexpr (std::is_same_v<T, StarBook>)
                os << "starbook(" << a.m << "," << a.n1 << "," << a.n2 << ")";
            else if constexpr (std::is_same_v<T, ShootingStar>)
                os << "shootingstar(" << a.m << "," << a.n << ")";
            else if constexpr (std::is_same_v<T, DoubleVase>)
                os << "doublevase(" << a.n << ")";
            else if constexpr (std::is_same_v<T, Amaryllis>)
                os << "amaryllis(" << a.m << "," << a.n << ")";
            else if constexpr (std::is_same_v<T, DiamondOfFlowers>)
                os << "diamondflowers(" << a.n << ")";
            else if constexpr (std::is_same_v<T, TetrahedronOfFlowers>)
                os << "tetraflowers(" << a.n << ")";
            else if constexpr (std::is_same_v<T, SingleGalaxy>)
                os << "singlegalaxy(" << a.k << "," << a.l << ")";
            else if constexpr (std::is_same_v<T, DoubleGalaxy>)
                os << "doublegalaxy(" << a.k << "," << a.l << "," << a.m << "," << a.n << ")";
            else if constexpr (std::is_same_v<T, FullTree>)
                os << "fulltree(" << a.n << "," << a.m1 << "," << a.m2 << ")";
            else if constexpr (std::is_same_v<T, Satellite>)
                os << "satellite(" << a.m1 << "," << a.m2 << ")";
            else
                os << "isolatedvertex";
        },
        p);
    return os.str();
}

PrecolouredConfig make_precoloured(PrecolouredName name) {
    PrecolouredConfig cfg;
    cfg.to_move = Player::alice;
    if (name == PrecolouredName::F1_1) {
        cfg.graph = make_f1();
        cfg.initial_colouring = {{0, 1}}; // e0 <- colour 1
        cfg.palette_size = 3;
    } else {
        cfg.graph = make_f3();
        cfg.initial_colouring = {{0, 1}, {3, 2}}; // e0 <- 1, f01 <- 2
        cfg.palette_size = 4;
    }
    return cfg;
}

namespace {

std::optional<std::vector<int>> parse_args(const std::string& name, const std::string& prefix,
                                           size_t arity) {
    if (name.size() < prefix.size() + 2 || name.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    if (name[prefix.size()] != '(' || name.back() != ')')
        return std::nullopt;
    std::string body = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    std::vector<int> args;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ','))
        try {
            args.push_back(std::stoi(tok));
        } catch (...) {
            return std::nullopt;
        }
    if (args.size() != arity)
        return std::nullopt;
    return args;
}

} // namespace

std::optional<PermittedParams> permitted_by_name(const std::string& name) {
    struct Family {
        const char* prefix;
        size_t arity;
        std::function<PermittedParams(const std::vector<int>&)> make;
    };
    static const std::vector<Family> families = {
        {"vase", 1, [](auto& a) -> PermittedParams { return VaseOfFlowers{a[0]}; }},
        {"doublestar", 2, [](auto& a) -> PermittedParams { return DoubleStar{a[0], a[1]}; }},
        {"candy", 3, [](auto& a) -> PermittedParams { return Candy{a[0], a[1], a[2]}; }},
        {"starbook", 3, [](auto& a) -> PermittedParams { return StarBook{a[0], a[1], a[2]}; }},
        {"shootingstar", 2, [](auto& a) -> PermittedParams { return ShootingStar{a[0], a[1]}; }},
        {"doublevase", 1, [](auto& a) -> PermittedParams { return DoubleVase{a[0]}; }},
        {"amaryllis", 2, [](auto& a) -> PermittedParams { return Amaryllis{a[0], a[1]}; }},
        {"diamondflowers", 1, [](auto& a) -> PermittedParams { return DiamondOfFlowers{a[0]}; }},
        {"tetraflowers", 1, [](auto& a) -> PermittedParams { return TetrahedronOfFlowers{a[0]}; }},
        {"singlegalaxy", 2, [](auto& a) -> PermittedParams { return SingleGalaxy{a[0], a[1]}; }},
        {"doublegalaxy", 4,
         [](auto& a) -> PermittedParams { return DoubleGalaxy{a[0], a[1], a[2], a[3]}; }},
        {"fulltree", 3, [](auto& a) -> PermittedParams { return FullTree{a[0], a[1], a[2]}; }},
        {"satellite", 2, [](auto& a) -> PermittedParams { return Satellite{a[0], a[1]}; }},
    };
    if (name == "isolatedvertex")
        return PermittedParams{IsolatedVertex{}};
    for (const auto& fam : families)
        if (auto args = parse_args(name, fam.prefix, fam.arity))
            return fam.make(*args);
    return std::nullopt;
}

std::optional<Graph> graph_by_name(const std::string& name) {
    for (ConfigName c : all_config_names())
        if (name == config_name_string(c))
            return make_named(c);
    try {
        if (name.size() >= 2 && name[0] == 'P' && isdigit(static_cast<unsigned char>(name[1])))
            return path_graph(std::stoi(name.substr(1)));
        if (name.size() >= 2 && name[0] == 'C' && isdigit(static_cast<unsigned char>(name[1])))
            return cycle_graph(std::stoi(name.substr(1)));
        if (name.rfind("K1_", 0) == 0)
            return star_graph(std::stoi(name.substr(3)));
        if (name.size() >= 2 && name[0] == 'K' && isdigit(static_cast<unsigned char>(name[1])))
            return complete_graph(std::stoi(name.substr(1)));
        if (auto p = permitted_by_name(name))
            return make_permitted(*p);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> out;
    for (ConfigName c : all_config_names())
        out.push_back({config_name_string(c), make_named(c)});
    const std::vector<PermittedParams> reps = {
        VaseOfFlowers{5},      DoubleStar{4, 3},          Candy{4, 2, 3},
        StarBook{4, 2, 3},     ShootingStar{5, 3},        DoubleVase{5},
        Amaryllis{5, 3},       DiamondOfFlowers{5},       TetrahedronOfFlowers{5},
        SingleGalaxy{2, 3},    DoubleGalaxy{2, 3, 4, 5},  FullTree{3, 4, 5},
        Satellite{4, 5},       IsolatedVertex{},
    };
    for (const auto& p : reps)
        out.push_back({permitted_to_string(p), make_permitted(p)});
    return out;
}

} // namespace lgp
