#include "crged/crg.hpp"

#include "crged/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace crged {

char to_char(VertexColor c) { return c == VertexColor::White ? 'W' : 'B'; }

char to_char(EdgeColor c) {
    switch (c) {
    case EdgeColor::White: return 'W';
    case EdgeColor::Gray: return 'G';
    case EdgeColor::Black: return 'B';
    }
    return '?';
}

Crg::Crg(std::vector<VertexColor> vertices, std::span<const EdgeColor> upper) : vertices_(std::move(vertices)) {
    const std::size_t m = vertices_.size();
    if (m == 0) throw ValidationError("a CRG needs at least one vertex");
    if (upper.size() != m * (m - 1) / 2)
        throw ValidationError("CRG on " + std::to_string(m) + " vertices needs " + std::to_string(m * (m - 1) / 2) +
                              " edge colors, got " + std::to_string(upper.size()));
    edges_.assign(m * m, EdgeColor::Gray);
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j, ++k) edges_[i * m + j] = edges_[j * m + i] = upper[k];
}

Crg Crg::uniform(std::vector<VertexColor> vertices, EdgeColor edges) {
    const std::size_t m = vertices.size();
    const std::vector<EdgeColor> upper(m * (m - (m > 0 ? 1 : 0)) / 2, edges);
    return Crg(std::move(vertices), upper);
}

EdgeColor Crg::edge(std::size_t u, std::size_t v) const {
    const std::size_t m = size();
    if (u >= m || v >= m || u == v) throw ValidationError("invalid CRG vertex pair");
    return edges_[u * m + v];
}

std::vector<EdgeColor> Crg::upper_triangle() const {
    const std::size_t m = size();
    std::vector<EdgeColor> out;
    out.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) out.push_back(edges_[i * m + j]);
    return out;
}

std::size_t Crg::count(VertexColor c) const {
    return static_cast<std::size_t>(std::count(vertices_.begin(), vertices_.end(), c));
}

std::size_t Crg::count(EdgeColor c) const {
    const auto upper = upper_triangle();
    return static_cast<std::size_t>(std::count(upper.begin(), upper.end(), c));
}

Crg Crg::induced(std::span<const std::size_t> vertices) const {
    std::vector<VertexColor> vc;
    std::vector<EdgeColor> upper;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        vc.push_back(vertex(vertices[i]));
        for (std::size_t j = i + 1; j < vertices.size(); ++j) upper.push_back(edge(vertices[i], vertices[j]));
    }
    return Crg(std::move(vc), upper);
}

Crg gray_crg(std::size_t white, std::size_t black) {
    if (white + black == 0) throw ValidationError("K(0,0) is not a CRG");
    std::vector<VertexColor> vc(white, VertexColor::White);
    vc.insert(vc.end(), black, VertexColor::Black);
    return Crg::uniform(std::move(vc), EdgeColor::Gray);
}

Crg swap_colors(const Crg& k) {
    std::vector<VertexColor> vc;
    for (auto c : k.vertex_colors()) vc.push_back(c == VertexColor::White ? VertexColor::Black : VertexColor::White);
    auto upper = k.upper_triangle();
    for (auto& c : upper)
        if (c != EdgeColor::Gray) c = c == EdgeColor::White ? EdgeColor::Black : EdgeColor::White;
    return Crg(std::move(vc), upper);
}

std::vector<SubCrg> sub_crgs(const Crg& k) {
    const std::size_t m = k.size();
    std::vector<SubCrg> out;
    const std::size_t full = (std::size_t{1} << m) - 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
        std::vector<std::size_t> vs;
        for (std::size_t v = 0; v < m; ++v)
            if (mask >> v & 1U) vs.push_back(v);
        Crg sub = k.induced(vs);
        out.push_back({std::move(vs), std::move(sub)});
    }
    return out;
}

namespace {

// Allowed images for a graph edge / non-edge at the CRG pair (a,b); a==b uses the vertex color.
bool allows_edge(const Crg& k, std::size_t a, std::size_t b) {
    if (a == b) return k.vertex(a) == VertexColor::Black;
    return k.edge(a, b) != EdgeColor::White;
}

bool allows_non_edge(const Crg& k, std::size_t a, std::size_t b) {
    if (a == b) return k.vertex(a) == VertexColor::White;
    return k.edge(a, b) != EdgeColor::Black;
}

bool twins(const Crg& k, std::size_t u, std::size_t v) {
    if (k.vertex(u) != k.vertex(v)) return false;
    for (std::size_t w = 0; w < k.size(); ++w)
        if (w != u && w != v && k.edge(u, w) != k.edge(v, w)) return false;
    return true;
}

} // namespace

bool is_valid_embedding(const Graph& h, const Crg& k, const EmbeddingMap& map) {
    if (map.size() != h.order()) return false;
    for (auto c : map)
        if (c >= k.size()) return false;
    for (Vertex u = 0; u < h.order(); ++u)
        for (Vertex v = u + 1; v < h.order(); ++v) {
            const bool ok = h.adjacent(u, v) ? allows_edge(k, map[u], map[v]) : allows_non_edge(k, map[u], map[v]);
            if (!ok) return false;
        }
    return true;
}

std::optional<EmbeddingMap> embeds(const Graph& h, const Crg& k, const EmbedLimits& limits) {
    const std::size_t n = h.order();
    const std::size_t m = k.size();
    if (n > limits.max_pattern)
        throw ResourceError("embedding search: graph order " + std::to_string(n) + " exceeds budget " +
                            std::to_string(limits.max_pattern));
    if (m > limits.max_host)
        throw ResourceError("embedding search: CRG size " + std::to_string(m) + " exceeds budget " +
                            std::to_string(limits.max_host));
    if (n == 0) return EmbeddingMap{};

    std::vector<char> ok_edge(m * m), ok_non(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            ok_edge[a * m + b] = allows_edge(k, a, b);
            ok_non[a * m + b] = allows_non_edge(k, a, b);
        }
    // Interchangeable vertices are opened in label order: an unused vertex is tried only
    // once its nearest lower twin is in use.
    std::vector<std::size_t> prev_twin(m, m);
    for (std::size_t v = 0; v < m; ++v)
        for (std::size_t u = v; u-- > 0;)
            if (twins(k, u, v)) {
                prev_twin[v] = u;
                break;
            }

    const auto order = bfs_order_from_max_degree(h);
    std::vector<char> adj(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) adj[i * n + j] = i != j && h.adjacent(order[i], order[j]);

    std::vector<std::size_t> image(n);
    std::vector<std::size_t> use_count(m, 0);
    std::uint64_t nodes = 0;
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t c = 0; c < m; ++c) {
            if (use_count[c] == 0 && prev_twin[c] < m && use_count[prev_twin[c]] == 0) continue;
            if (++nodes > limits.max_nodes)
                throw ResourceError("embedding search exceeded " + std::to_string(limits.max_nodes) + " nodes");
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                const std::size_t idx = c * m + image[j];
                ok = adj[i * n + j] ? ok_edge[idx] : ok_non[idx];
            }
            if (!ok) continue;
            image[i] = c;
            ++use_count[c];
            if (place(i + 1)) return true;
            --use_count[c];
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    EmbeddingMap map(n);
    for (std::size_t i = 0; i < n; ++i) map[order[i]] = image[i];
    return map;
}

CrgCode code_of(const Crg& k) {
    CrgCode code;
    for (auto c : k.vertex_colors()) code.push_back(static_cast<std::uint8_t>(c));
    for (auto c : k.upper_triangle()) code.push_back(static_cast<std::uint8_t>(c));
    return code;
}

namespace {

CrgCode permuted_code(const Crg& k, const std::vector<std::size_t>& perm) {
    const std::size_t m = k.size();
    CrgCode code;
    code.reserve(m + m * (m - 1) / 2);
    for (std::size_t i = 0; i < m; ++i) code.push_back(static_cast<std::uint8_t>(k.vertex(perm[i])));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) code.push_back(static_cast<std::uint8_t>(k.edge(perm[i], perm[j])));
    return code;
}

Crg crg_from_code(std::size_t m, const CrgCode& code) {
    std::vector<VertexColor> vc;
    for (std::size_t i = 0; i < m; ++i) vc.push_back(static_cast<VertexColor>(code[i]));
    std::vector<EdgeColor> upper;
    for (std::size_t i = m; i < code.size(); ++i) upper.push_back(static_cast<EdgeColor>(code[i]));
    return Crg(std::move(vc), upper);
}

} // namespace

CrgCode canonical_code(const Crg& k) {
    const std::size_t m = k.size();
    if (m > kMaxCanonicalSize)
        throw ResourceError("canonical form limited to " + std::to_string(kMaxCanonicalSize) + " vertices");
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    CrgCode best = permuted_code(k, perm);
    while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, permuted_code(k, perm));
    return best;
}

Crg canonical_form(const Crg& k) { return crg_from_code(k.size(), canonical_code(k)); }

bool color_isomorphic(const Crg& a, const Crg& b) {
    return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

std::vector<Crg> enumerate_crgs(std::size_t max_size, const std::function<bool(const Crg&)>& filter) {
    if (max_size == 0 || max_size > kMaxEnumerationSize)
        throw ValidationError("CRG enumeration size must be in 1.." + std::to_string(kMaxEnumerationSize));
    std::vector<Crg> out;
    for (std::size_t m = 1; m <= max_size; ++m) {
        const std::size_t pairs = m * (m - 1) / 2;
        std::vector<std::pair<std::size_t, std::size_t>> pair_list;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) pair_list.emplace_back(i, j);
        // Canonical codes have vertex colors sorted (white first), so more whites come first.
        for (std::size_t whites = m + 1; whites-- > 0;) {
            // Relabellings that keep the sorted vertex coloring: permute within each color block.
            std::vector<std::vector<std::size_t>> perms;
            std::vector<std::size_t> white_perm(whites), black_perm(m - whites);
            std::iota(white_perm.begin(), white_perm.end(), std::size_t{0});
            do {
                std::iota(black_perm.begin(), black_perm.end(), whites);
                do {
                    auto& p = perms.emplace_back(white_perm);
                    p.insert(p.end(), black_perm.begin(), black_perm.end());
                } while (std::next_permutation(black_perm.begin(), black_perm.end()));
            } while (std::next_permutation(white_perm.begin(), white_perm.end()));
            // Pair index lookup for permuted edges.
            std::vector<std::size_t> pair_index(m * m, 0);
            for (std::size_t e = 0; e < pairs; ++e) {
                pair_index[pair_list[e].first * m + pair_list[e].second] = e;
                pair_index[pair_list[e].second * m + pair_list[e].first] = e;
            }
            std::vector<std::uint8_t> edges(pairs, 0);
            while (true) {
                bool canonical = true;
                for (const auto& p : perms) {
                    // Compare permuted edge sequence against `edges`; vertex part is identical.
                    for (std::size_t e = 0; e < pairs; ++e) {
                        const auto c = edges[pair_index[p[pair_list[e].first] * m + p[pair_list[e].second]]];
                        if (c != edges[e]) {
                            if (c < edges[e]) canonical = false;
                            break;
                        }
                    }
                    if (!canonical) break;
                }
                if (canonical) {
                    std::vector<VertexColor> vc(whites, VertexColor::White);
                    vc.insert(vc.end(), m - whites, VertexColor::Black);
                    std::vector<EdgeColor> upper;
                    for (auto c : edges) upper.push_back(static_cast<EdgeColor>(c));
                    Crg k(std::move(vc), upper);
                    if (!filter || filter(k)) out.push_back(std::move(k));
                }
                // Base-3 increment, last pair least significant.
                std::size_t pos = pairs;
                while (pos > 0 && edges[pos - 1] == 2) edges[--pos] = 0;
                if (pos == 0) break;
                ++edges[pos - 1];
            }
        }
    }
    return out;
}

std::string to_text(const Crg& k) {
    std::string out = "crg v1\nvertices: ";
    for (auto c : k.vertex_colors()) out.push_back(to_char(c));
    out.push_back('\n');
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        for (std::size_t j = i + 1; j < k.size(); ++j) out.push_back(to_char(k.edge(i, j)));
        out.push_back('\n');
    }
    return out;
}

namespace {

std::vector<VertexColor> parse_vertex_colors(std::string_view s, std::string_view context) {
    std::vector<VertexColor> vc;
    for (char c : s) {
        if (c == 'W') vc.push_back(VertexColor::White);
        else if (c == 'B') vc.push_back(VertexColor::Black);
        else throw ParseError(std::string(context) + ": vertex color '" + std::string(1, c) + "' not in {W,B}");
    }
    if (vc.empty()) throw ParseError(std::string(context) + ": no vertices");
    return vc;
}

void append_edge_row(std::vector<EdgeColor>& upper, std::string_view row, std::size_t expected, std::string_view context) {
    if (row.size() != expected)
        throw ParseError(std::string(context) + ": edge row has " + std::to_string(row.size()) + " colors, expected " +
                         std::to_string(expected));
    for (char c : row) {
        if (c == 'W') upper.push_back(EdgeColor::White);
        else if (c == 'G') upper.push_back(EdgeColor::Gray);
        else if (c == 'B') upper.push_back(EdgeColor::Black);
        else throw ParseError(std::string(context) + ": edge color '" + std::string(1, c) + "' not in {W,G,B}");
    }
}

} // namespace

Crg parse_crg(std::string_view text) {
    constexpr std::string_view ctx = "crg v1";
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        if (nl == std::string_view::npos) {
            lines.push_back(text);
            break;
        }
        lines.push_back(text.substr(0, nl));
        text.remove_prefix(nl + 1);
    }
    if (lines.size() < 2 || lines[0] != "crg v1") throw ParseError("crg v1: missing 'crg v1' header");
    constexpr std::string_view prefix = "vertices: ";
    if (!lines[1].starts_with(prefix)) throw ParseError("crg v1: second line must be 'vertices: <W/B string>'");
    auto vc = parse_vertex_colors(lines[1].substr(prefix.size()), ctx);
    const std::size_t m = vc.size();
    if (lines.size() != 2 + (m - 1))
        throw ParseError("crg v1: expected " + std::to_string(m - 1) + " edge rows, found " + std::to_string(lines.size() - 2));
    std::vector<EdgeColor> upper;
    for (std::size_t i = 0; i + 1 < m; ++i) append_edge_row(upper, lines[2 + i], m - 1 - i, ctx);
    return Crg(std::move(vc), upper);
}

std::string to_compact(const Crg& k) {
    std::string out;
    for (auto c : k.vertex_colors()) out.push_back(to_char(c));
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        out.push_back(';');
        for (std::size_t j = i + 1; j < k.size(); ++j) out.push_back(to_char(k.edge(i, j)));
    }
    return out;
}

Crg parse_compact_crg(std::string_view text) {
    constexpr std::string_view ctx = "compact crg";
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto semi = text.find(';', start);
        parts.push_back(text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    auto vc = parse_vertex_colors(parts[0], ctx);
    const std::size_t m = vc.size();
    if (parts.size() != m) throw ParseError("compact crg: expected " + std::to_string(m - 1) + " edge rows");
    std::vector<EdgeColor> upper;
    for (std::size_t i = 0; i + 1 < m; ++i) append_edge_row(upper, parts[1 + i], m - 1 - i, ctx);
    return Crg(std::move(vc), upper);
}

} // namespace crged
