#include "lgp/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace lgp {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        if (n < 0) {
            if (ls >> n >> m) {
                if (n < 0 || m < 0)
                    fail(Errc::parse_error, "edge list: negative counts");
                continue;
            }
            std::string tok;
            std::istringstream probe(strip_comment(line));
            if (probe >> tok)
                fail(Errc::parse_error, "edge list: expected 'n m' header");
            n = -1; // blank line before header
            continue;
        }
        long u, v;
        if (ls >> u >> v) {
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        } else {
            std::string tok;
            std::istringstream probe(strip_comment(line));
            if (probe >> tok)
                fail(Errc::parse_error, "edge list: bad edge line '" + line + "'");
        }
    }
    if (n < 0)
        fail(Errc::parse_error, "edge list: missing header");
    if (static_cast<long>(edges.size()) != m)
        fail(Errc::parse_error, "edge list: header announced " + std::to_string(m) +
                                    " edges, found " + std::to_string(edges.size()));
    try {
        return Graph::build(static_cast<int>(n), edges);
    } catch (const Error& e) {
        fail(Errc::parse_error, std::string("edge list: ") + e.what());
    }
}

Graph read_edge_list_string(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0)
        s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.pop_back();
    if (s.empty())
        fail(Errc::parse_error, "graph6: empty value");
    int c0 = static_cast<unsigned char>(s[0]);
    if (c0 == 126)
        fail(Errc::size_limit, "graph6: graphs with more than 62 vertices not supported");
    if (c0 < 63 || c0 > 126)
        fail(Errc::parse_error, "graph6: bad size byte");
    int n = c0 - 63;
    long nbits = static_cast<long>(n) * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(s.size()) != 1 + nbytes)
        fail(Errc::parse_error, "graph6: wrong length for n=" + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = static_cast<unsigned char>(s[1 + bit / 6]);
            if (byte < 63 || byte > 126)
                fail(Errc::parse_error, "graph6: bad data byte");
            int val = byte - 63;
            if ((val >> (5 - bit % 6)) & 1)
                edges.emplace_back(i, j);
        }
    }
    // padding bits must be zero
    for (long b = nbits; b < nbytes * 6; ++b) {
        int val = static_cast<unsigned char>(s[1 + b / 6]) - 63;
        if ((val >> (5 - b % 6)) & 1)
            fail(Errc::parse_error, "graph6: nonzero padding");
    }
    return Graph::build(n, edges);
}

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62)
        fail(Errc::size_limit, "graph6: graphs with more than 62 vertices not supported");
    std::string s(1, static_cast<char>(n + 63));
    long nbits = static_cast<long>(n) * (n - 1) / 2;
    std::vector<int> bytes((nbits + 5) / 6, 0);
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j))
                bytes[bit / 6] |= 1 << (5 - bit % 6);
        }
    }
    for (int b : bytes)
        s.push_back(static_cast<char>(b + 63));
    return s;
}

std::vector<Graph> read_graph6(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == ">>graph6<<")
            continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(Errc::parse_error, "cannot open '" + path + "'");
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
        auto graphs = read_graph6(in);
        if (graphs.empty())
            fail(Errc::parse_error, "no graph6 value in '" + path + "'");
        return graphs.front();
    }
    return read_edge_list(in);
}

} // namespace lgp
