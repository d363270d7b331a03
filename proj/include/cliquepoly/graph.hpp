#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cliquepoly {

inline constexpr int kMaxVertices = 64;

/// Set of vertex indices in [0, 64), stored as a single word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) bits_ |= std::uint64_t{1} << v;
    }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet first(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    /// Smallest member; undefined on the empty set.
    constexpr int lowest() const noexcept { return std::countr_zero(bits_); }

    constexpr VertexSet with(int v) const noexcept { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const noexcept { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    std::vector<int> to_vector() const;

private:
    std::uint64_t bits_ = 0;
};

/// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    /// Canonicalizes the endpoint order. Throws DomainError on a self-loop or bad index.
    static Edge make(int a, int b);

    constexpr VertexSet endpoints() const noexcept { return VertexSet{u, v}; }
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of edges.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> edges);
    explicit EdgeSet(std::vector<Edge> edges);

    /// Parses "i-j,i-j,...". Duplicates are rejected; an empty string gives the empty set.
    static EdgeSet parse(std::string_view text);

    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    const Edge& operator[](std::size_t i) const { return edges_[i]; }
    auto begin() const noexcept { return edges_.begin(); }
    auto end() const noexcept { return edges_.end(); }
    bool contains(const Edge& e) const;

    /// "0-1,0-2"; the empty set renders as "".
    std::string to_string() const;

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<Edge> edges_;
};

/// Simple undirected labeled graph on vertices 0..n-1, n <= 64.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    static Graph from_edges(int n, const EdgeSet& edges);
    static Graph complete(int n);

    int order() const noexcept { return n_; }
    VertexSet vertices() const noexcept { return VertexSet::first(n_); }
    VertexSet neighbors(int v) const noexcept { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
    bool adjacent(int u, int v) const noexcept { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
    int degree(int v) const noexcept { return neighbors(v).size(); }
    int edge_count() const noexcept;
    EdgeSet edges() const;

    Graph with_edge(int u, int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void add_edge(int u, int v);

    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// A subgraph relabeled to 0..k-1; labels[i] is the original index of new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> labels;
};

/// Edge-list text: "n <count>" then one "i j" per line, '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// G - M: same vertices, edges of M removed. Every edge of M must be an edge of G.
Graph delete_edges(const Graph& g, const EdgeSet& m);

/// Endpoints of every edge in s.
VertexSet support_vertices(const EdgeSet& s);

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w);

/// Subgraph induced on the vertices adjacent to every member of w. With w empty this is g.
InducedSubgraph common_neighborhood(const Graph& g, VertexSet w);

/// Vertices adjacent to every member of w, as a mask over g's labels.
VertexSet common_neighbors(const Graph& g, VertexSet w);

/// True iff s is the complete edge set on its own support (a single edge counts as K2).
/// The empty set is not a clique here.
bool edge_induced_is_complete(const EdgeSet& s);

/// True iff every pair in w is adjacent in g. Vacuously true for |w| <= 1.
bool vertex_induced_is_clique(const Graph& g, VertexSet w);

/// Throws DomainError unless every edge of s is an edge of g.
void require_subset_of_edges(const Graph& g, const EdgeSet& s);

} // namespace cliquepoly
