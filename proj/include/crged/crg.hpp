#pragma once

#include "crged/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crged {

enum class VertexColor : std::uint8_t { White = 0, Black = 1 };
enum class EdgeColor : std::uint8_t { White = 0, Gray = 1, Black = 2 };

char to_char(VertexColor c);
char to_char(EdgeColor c);

/// Colored regularity graph: a complete graph whose vertices are white or black
/// and whose edges are white, gray or black.
class Crg {
public:
    /// `upper` lists the colors of pairs (i,j), i<j, row by row.
    Crg(std::vector<VertexColor> vertices, std::span<const EdgeColor> upper);
    static Crg uniform(std::vector<VertexColor> vertices, EdgeColor edges);

    std::size_t size() const noexcept { return vertices_.size(); }
    VertexColor vertex(std::size_t v) const { return vertices_.at(v); }
    EdgeColor edge(std::size_t u, std::size_t v) const;
    const std::vector<VertexColor>& vertex_colors() const noexcept { return vertices_; }
    std::vector<EdgeColor> upper_triangle() const;

    std::size_t count(VertexColor c) const;
    std::size_t count(EdgeColor c) const;

    Crg induced(std::span<const std::size_t> vertices) const;

    bool operator==(const Crg&) const = default;

private:
    Crg() = default;

    std::vector<VertexColor> vertices_;
    std::vector<EdgeColor> edges_; // full m*m, diagonal unused
};

/// K(r,s): r white and s black vertices, every edge gray.
Crg gray_crg(std::size_t white, std::size_t black);

/// White <-> black on vertices and edges; gray fixed.
Crg swap_colors(const Crg& k);

struct SubCrg {
    std::vector<std::size_t> vertices;
    Crg crg;
};

/// Every nonempty proper induced sub-CRG, once each, by increasing vertex bitmask.
std::vector<SubCrg> sub_crgs(const Crg& k);

/// map[h] is the CRG vertex receiving graph vertex h; need not be injective.
using EmbeddingMap = std::vector<std::size_t>;

struct EmbedLimits {
    std::size_t max_pattern = 16;
    std::size_t max_host = 12;
    std::uint64_t max_nodes = 200'000'000;
};

/// Searches for a witness of H -> K. Exhausting the search proves H does not embed;
/// exceeding `limits` throws ResourceError instead of answering.
std::optional<EmbeddingMap> embeds(const Graph& h, const Crg& k, const EmbedLimits& limits = {});

/// Checks a map against the embedding definition directly.
bool is_valid_embedding(const Graph& h, const Crg& k, const EmbeddingMap& map);

/// Vertex colors then upper-triangle edge colors, as small integers.
using CrgCode = std::vector<std::uint8_t>;

CrgCode code_of(const Crg& k);
inline constexpr std::size_t kMaxCanonicalSize = 8;
/// Lexicographically least code over all vertex relabellings.
CrgCode canonical_code(const Crg& k);
Crg canonical_form(const Crg& k);
bool color_isomorphic(const Crg& a, const Crg& b);

inline constexpr std::size_t kMaxEnumerationSize = 5;

/// One representative per color-isomorphism class on 1..max_size vertices, ordered by
/// size then canonical code. Each representative is in canonical form.
std::vector<Crg> enumerate_crgs(std::size_t max_size, const std::function<bool(const Crg&)>& filter = {});

/// "crg v1" text format.
std::string to_text(const Crg& k);
Crg parse_crg(std::string_view text);

/// Single-token form for CSV cells, e.g. "WBB;GG;G".
std::string to_compact(const Crg& k);
Crg parse_compact_crg(std::string_view text);

} // namespace crged
