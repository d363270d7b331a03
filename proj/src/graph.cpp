#include "cliquepoly/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cliquepoly/errors.hpp"

namespace cliquepoly {

namespace {

constexpr int kGraph6MaxOrder = 62;

bool parse_int(std::string_view token, int& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

Edge Edge::make(int a, int b) {
    if (a < 0 || b < 0 || a >= kMaxVertices || b >= kMaxVertices)
        throw DomainError("vertex index out of range: " + std::to_string(a) + "-" + std::to_string(b));
    if (a == b) throw DomainError("self-loop on vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

EdgeSet::EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (auto& e : edges_) e = Edge::make(e.u, e.v);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

EdgeSet EdgeSet::parse(std::string_view text) {
    std::vector<Edge> edges;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        std::size_t dash = item.find('-');
        int a = 0;
        int b = 0;
        if (dash == std::string_view::npos || !parse_int(item.substr(0, dash), a) ||
            !parse_int(item.substr(dash + 1), b))
            throw ParseError("malformed edge '" + std::string(item) + "', expected i-j");
        try {
            edges.push_back(Edge::make(a, b));
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
        pos = comma + 1;
        if (comma + 1 == text.size()) throw ParseError("trailing comma in edge list");
    }
    EdgeSet out(edges);
    if (out.size() != edges.size()) throw ParseError("duplicate edge in edge list");
    return out;
}

bool EdgeSet::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::string EdgeSet::to_string() const {
    std::string out;
    for (const auto& e : edges_) {
        if (!out.empty()) out += ',';
        out += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw ScaleError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
}

Graph Graph::from_edges(int n, const EdgeSet& edges) {
    Graph g(n);
    for (const auto& e : edges) {
        if (e.v >= n) throw DomainError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " exceeds graph order " + std::to_string(n));
        g.add_edge(e.u, e.v);
    }
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

int Graph::edge_count() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

EdgeSet Graph::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) out.push_back(Edge{i, j});
    return EdgeSet(std::move(out));
}

Graph Graph::with_edge(int u, int v) const {
    Edge e = Edge::make(u, v);
    if (e.v >= n_) throw DomainError("edge endpoint outside graph");
    Graph g = *this;
    g.add_edge(e.u, e.v);
    return g;
}

void Graph::add_edge(int u, int v) {
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

Graph parse_edge_list(std::string_view text) {
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;

        if (n < 0) {
            if (tokens.size() != 2 || tokens[0] != "n" || !parse_int(tokens[1], n))
                throw ParseError("expected header 'n <count>'", line_no);
            if (n < 0 || n > kMaxVertices)
                throw ParseError("vertex count " + std::to_string(n) + " outside 0.." +
                                     std::to_string(kMaxVertices),
                                 line_no);
            continue;
        }

        int i = 0;
        int j = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], i) || !parse_int(tokens[1], j))
            throw ParseError("expected 'i j'", line_no);
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw ParseError("vertex out of range 0.." + std::to_string(n - 1), line_no);
        if (i == j) throw ParseError("self-loop on vertex " + std::to_string(i), line_no);
        if (i > j) throw ParseError("endpoints must be listed as i < j", line_no);
        Edge e{i, j};
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw ParseError("duplicate edge " + std::to_string(i) + " " + std::to_string(j), line_no);
        edges.push_back(e);
    }
    if (n < 0) throw ParseError("missing header 'n <count>'", line_no);
    return Graph::from_edges(n, EdgeSet(std::move(edges)));
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string");
    for (char c : text) {
        auto u = static_cast<unsigned char>(c);
        if (u < 63 || u > 126) throw ParseError("graph6 byte outside 63..126");
    }
    int n = static_cast<unsigned char>(text[0]) - 63;
    if (n > kGraph6MaxOrder) throw ParseError("graph6 orders above 62 are not supported");

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() != 1 + bytes)
        throw ParseError("graph6 length " + std::to_string(text.size()) + ", expected " +
                         std::to_string(1 + bytes) + " for n=" + std::to_string(n));

    auto bit_at = [&](std::size_t k) {
        int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
        return (byte >> (5 - k % 6)) & 1;
    };
    for (std::size_t k = bits; k < bytes * 6; ++k)
        if (bit_at(k)) throw ParseError("nonzero graph6 padding bits");

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (bit_at(k)) edges.push_back(Edge{i, j});
    return Graph::from_edges(n, EdgeSet(std::move(edges)));
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) throw ScaleError("graph6 encoding supports n <= 62");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
    return out;
}

void require_subset_of_edges(const Graph& g, const EdgeSet& s) {
    for (const auto& e : s)
        if (e.v >= g.order() || !g.adjacent(e.u, e.v))
            throw DomainError(std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge of the graph");
}

Graph delete_edges(const Graph& g, const EdgeSet& m) {
    require_subset_of_edges(g, m);
    auto kept = g.edges();
    std::vector<Edge> rest;
    for (const auto& e : kept)
        if (!m.contains(e)) rest.push_back(e);
    return Graph::from_edges(g.order(), EdgeSet(std::move(rest)));
}

VertexSet support_vertices(const EdgeSet& s) {
    VertexSet out;
    for (const auto& e : s) out = out | e.endpoints();
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w) {
    if (!w.subset_of(g.vertices())) throw DomainError("vertex set exceeds graph order");
    InducedSubgraph out;
    out.labels = w.to_vector();
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < out.labels.size(); ++a)
        for (std::size_t b = a + 1; b < out.labels.size(); ++b)
            if (g.adjacent(out.labels[a], out.labels[b]))
                edges.push_back(Edge{static_cast<int>(a), static_cast<int>(b)});
    out.graph = Graph::from_edges(static_cast<int>(out.labels.size()), EdgeSet(std::move(edges)));
    return out;
}

VertexSet common_neighbors(const Graph& g, VertexSet w) {
    if (!w.subset_of(g.vertices())) throw DomainError("vertex set exceeds graph order");
    VertexSet out = g.vertices();
    for (int v : w.to_vector()) out = out & g.neighbors(v);
    return out;
}

InducedSubgraph common_neighborhood(const Graph& g, VertexSet w) {
    return induced_subgraph(g, common_neighbors(g, w));
}

bool edge_induced_is_complete(const EdgeSet& s) {
    if (s.empty()) return false;
    const auto r = static_cast<std::size_t>(support_vertices(s).size());
    return s.size() == r * (r - 1) / 2;
}

bool vertex_induced_is_clique(const Graph& g, VertexSet w) {
    for (int v : w.to_vector())
        if (!(w.without(v)).subset_of(g.neighbors(v))) return false;
    return true;
}

} // namespace cliquepoly
