#include "crged/graph.hpp"

#include "crged/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <functional>
#include <numeric>

namespace crged {

Graph::Graph(std::size_t order) : n_(order), words_((order + 63) / 64), rows_(n_ * words_, 0) {
    if (order > kMaxOrder)
        throw ValidationError("graph order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : Graph(order) {
    for (const auto& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(Vertex v) const {
    if (v >= n_) throw ValidationError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

void Graph::set_adjacent(Vertex u, Vertex v, bool on) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ValidationError("self-loops are not allowed");
    const std::uint64_t bu = std::uint64_t{1} << (u % 64);
    const std::uint64_t bv = std::uint64_t{1} << (v % 64);
    if (on) {
        rows_[u * words_ + v / 64] |= bv;
        rows_[v * words_ + u / 64] |= bu;
    } else {
        rows_[u * words_ + v / 64] &= ~bv;
        rows_[v * words_ + u / 64] &= ~bu;
    }
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto w : rows_) twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
}

std::size_t Graph::degree(Vertex v) const {
    check_vertex(v);
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(rows_[v * words_ + w]));
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = rows_[v * words_ + w];
        while (bits) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.push_back({u, v});
    return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    Graph sub(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) sub.add_edge(i, j);
    return sub;
}

std::string_view family_name(Family f) {
    switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::C2nStar: return "c2nstar";
    case Family::CTilde: return "ctilde";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::Path, Family::Cycle, Family::C2nStar, Family::CTilde})
        if (family_name(f) == name) return f;
    throw ParseError("unknown graph family '" + std::string(name) + "' (expected path, cycle, c2nstar or ctilde)");
}

Graph build_family(Family f, std::size_t n) {
    const auto reject = [&](const std::string& need) {
        throw ValidationError(std::string(family_name(f)) + ":" + std::to_string(n) + " rejected: " + need);
    };
    switch (f) {
    case Family::Path:
        if (n < 1) reject("order must be >= 1");
        break;
    case Family::Cycle:
        if (n < 3) reject("order must be >= 3");
        break;
    case Family::CTilde:
        if (n < 4) reject("order must be >= 4");
        break;
    case Family::C2nStar:
        if (n % 2 != 0) reject("order must be even (the full order 2n)");
        if (n < 6) reject("order must be >= 6");
        break;
    }
    Graph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    if (f != Family::Path) g.add_edge(n - 1, 0);
    if (f == Family::C2nStar) g.add_edge(0, n / 2);
    if (f == Family::CTilde) g.add_edge(0, 2);
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

std::vector<Vertex> bfs_order_from_max_degree(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<char> seen(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    while (order.size() < n) {
        Vertex root = n;
        for (Vertex v = 0; v < n; ++v)
            if (!seen[v] && (root == n || deg[v] > deg[root])) root = v;
        std::deque<Vertex> queue{root};
        seen[root] = 1;
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
    }
    return order;
}

std::optional<std::vector<Vertex>> find_induced(const Graph& host, const Graph& pattern) {
    const std::size_t k = pattern.order();
    const std::size_t n = host.order();
    if (k > n) return std::nullopt;
    if (k == 0) return std::vector<Vertex>{};

    const auto order = bfs_order_from_max_degree(pattern);
    // anchor[i]: first earlier position adjacent to order[i]; candidates come from its image's neighbourhood.
    std::vector<std::size_t> anchor(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (pattern.adjacent(order[i], order[j])) {
                anchor[i] = j;
                break;
            }
    std::vector<std::vector<Vertex>> host_nbrs(n);
    std::vector<std::size_t> host_deg(n);
    for (Vertex v = 0; v < n; ++v) {
        host_nbrs[v] = host.neighbors(v);
        host_deg[v] = host_nbrs[v].size();
    }
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    std::vector<std::size_t> pattern_deg(k);
    for (std::size_t i = 0; i < k; ++i) pattern_deg[i] = pattern.degree(order[i]);

    std::vector<Vertex> image(k);
    std::vector<char> used(n, 0);
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == k) return true;
        const Vertex pv = order[i];
        const auto& candidates = anchor[i] < k ? host_nbrs[image[anchor[i]]] : all;
        for (Vertex h : candidates) {
            if (used[h] || host_deg[h] < pattern_deg[i]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = host.adjacent(h, image[j]) == pattern.adjacent(pv, order[j]);
            if (!ok) continue;
            used[h] = 1;
            image[i] = h;
            if (place(i + 1)) return true;
            used[h] = 0;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    std::vector<Vertex> mapping(k);
    for (std::size_t i = 0; i < k; ++i) mapping[order[i]] = image[i];
    return mapping;
}

PathCycleProfile path_cycle_profile(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kMaxProfileOrder)
        throw ResourceError("path/cycle profile is exhaustive; order " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxProfileOrder));
    PathCycleProfile out;
    if (n == 0) return out;

    std::vector<std::uint32_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) adj[v] |= 1U << w;

    const std::size_t masks = std::size_t{1} << n;
    // path_ends[mask]: end vertices of Hamiltonian paths of the subgraph on mask.
    std::vector<std::uint32_t> path_ends(masks, 0);
    // cycle_ends[mask]: ends of paths covering mask that start at its lowest vertex.
    std::vector<std::uint32_t> cycle_ends(masks, 0);
    for (Vertex v = 0; v < n; ++v) path_ends[1U << v] = cycle_ends[1U << v] = 1U << v;

    std::vector<char> has_cycle(n + 1, 0);
    for (std::size_t mask = 1; mask < masks; ++mask) {
        const auto m = static_cast<std::uint32_t>(mask);
        const auto size = static_cast<std::size_t>(std::popcount(m));
        if (path_ends[mask]) out.longest_path = std::max(out.longest_path, size);
        for (std::uint32_t ends = path_ends[mask]; ends; ends &= ends - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(ends));
            for (std::uint32_t ext = adj[v] & ~m; ext; ext &= ext - 1) {
                const auto w = static_cast<std::size_t>(std::countr_zero(ext));
                path_ends[mask | (std::size_t{1} << w)] |= 1U << w;
            }
        }
        const auto start = static_cast<std::size_t>(std::countr_zero(m));
        if (size >= 3 && (cycle_ends[mask] & adj[start])) has_cycle[size] = 1;
        for (std::uint32_t ends = cycle_ends[mask]; ends; ends &= ends - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(ends));
            const std::uint32_t above_start = ~((2U << start) - 1);
            for (std::uint32_t ext = adj[v] & ~m & above_start; ext; ext &= ext - 1) {
                const auto w = static_cast<std::size_t>(std::countr_zero(ext));
                cycle_ends[mask | (std::size_t{1} << w)] |= 1U << w;
            }
        }
    }
    for (std::size_t len = 3; len <= n; ++len)
        if (has_cycle[len]) out.cycle_lengths.push_back(len);
    out.hamiltonian = n >= 3 && has_cycle[n];
    out.longest_path_closes = out.longest_path >= 3 && has_cycle[out.longest_path];
    return out;
}

namespace {

constexpr char kGraph6Header[] = ">>graph6<<";

void append_size(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

} // namespace

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    append_size(out, n);
    int filled = 0;
    unsigned acc = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.starts_with(kGraph6Header)) text.remove_prefix(sizeof(kGraph6Header) - 1);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    const auto bad = [&](const std::string& why) -> ParseError {
        return ParseError("malformed graph6 '" + std::string(text) + "': " + why);
    };
    for (char c : text)
        if (c < 63 || c > 126) throw bad("character outside the graph6 alphabet");
    if (text.empty()) throw bad("empty");

    std::size_t n = 0;
    std::size_t pos = 0;
    const auto value = [&](std::size_t i) { return static_cast<std::size_t>(text[i] - 63); };
    if (text[0] != '~') {
        n = value(0);
        pos = 1;
    } else if (text.size() >= 2 && text[1] == '~') {
        if (text.size() < 8) throw bad("truncated size field");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
        pos = 8;
    } else {
        if (text.size() < 4) throw bad("truncated size field");
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | value(i);
        pos = 4;
    }
    if (n > Graph::kMaxOrder) throw ValidationError("graph6 order " + std::to_string(n) + " exceeds " + std::to_string(Graph::kMaxOrder));
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes) throw bad("expected " + std::to_string(bytes) + " adjacency bytes");

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            const std::size_t byte = value(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1U) g.add_edge(i, j);
        }
    if (bits % 6 != 0) {
        const std::size_t last = value(pos + bytes - 1);
        if (last & ((1U << (6 - bits % 6)) - 1)) throw bad("nonzero padding bits");
    }
    return g;
}

Graph parse_graph_spec(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) return from_graph6(text);
    const Family f = parse_family(text.substr(0, colon));
    const std::string_view num = text.substr(colon + 1);
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty())
        throw ParseError("malformed family spec '" + std::string(text) + "' (expected name:order)");
    return build_family(f, n);
}

} // namespace crged
