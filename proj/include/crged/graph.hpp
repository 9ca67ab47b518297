#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crged {

using Vertex = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1, stored as bit rows.
class Graph {
public:
    static constexpr std::size_t kMaxOrder = 4096;

    Graph() = default;
    explicit Graph(std::size_t order);
    Graph(std::size_t order, std::span<const Edge> edges);

    std::size_t order() const noexcept { return n_; }
    bool adjacent(Vertex u, Vertex v) const;
    void set_adjacent(Vertex u, Vertex v, bool on);
    void add_edge(Vertex u, Vertex v) { set_adjacent(u, v, true); }
    void toggle(Vertex u, Vertex v) { set_adjacent(u, v, !adjacent(u, v)); }

    std::size_t edge_count() const;
    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    /// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
    Graph induced(std::span<const Vertex> vertices) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

enum class Family : std::uint8_t { Path, Cycle, C2nStar, CTilde };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

/// Named families, labelled as in the usual vertex-naming conventions:
///   path:n    0~1~...~n-1
///   cycle:n   path plus {n-1,0}, n >= 3
///   c2nstar:N even cycle of order N = 2k >= 6 plus the long chord {0,k}
///   ctilde:n  cycle plus the short chord {0,2}, n >= 4
Graph build_family(Family f, std::size_t n);

Graph complement(const Graph& g);

/// Pattern vertices in BFS order, each component started from a maximum-degree
/// vertex (lowest label on ties).
std::vector<Vertex> bfs_order_from_max_degree(const Graph& g);

/// Maps pattern vertex i to host vertex (*result)[i] such that the image induces a
/// copy of `pattern`; nullopt if no induced copy exists.
std::optional<std::vector<Vertex>> find_induced(const Graph& host, const Graph& pattern);
inline bool has_induced(const Graph& host, const Graph& pattern) {
    return find_induced(host, pattern).has_value();
}

struct PathCycleProfile {
    std::size_t longest_path = 0;           // vertices on a longest path
    std::vector<std::size_t> cycle_lengths; // ascending
    bool hamiltonian = false;
    bool longest_path_closes = false;       // some longest path (>= 3 vertices) has adjacent endpoints
};

inline constexpr std::size_t kMaxProfileOrder = 16;

PathCycleProfile path_cycle_profile(const Graph& g);

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// Either a family spec such as "cycle:8" or a graph6 string.
Graph parse_graph_spec(std::string_view text);

} // namespace crged
