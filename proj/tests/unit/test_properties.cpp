// Structural statements about CRGs and their gray graphs, checked over enumerations.
#include "crged/curves.hpp"
#include "crged/gsolver.hpp"
#include "crged/spectrum.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace crged;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }
long cdiv(long a, long b) { return oracle::ceil_div(a, b); }

// All-black CRGs whose edges are white or gray, up to 5 vertices.
const std::vector<Crg>& black_white_gray() {
    static const auto crgs = enumerate_crgs(5, [](const Crg& k) {
        return k.count(VertexColor::White) == 0 && k.count(EdgeColor::Black) == 0;
    });
    return crgs;
}

Graph gray_graph(const Crg& k) {
    Graph f(k.size());
    for (std::size_t u = 0; u < k.size(); ++u)
        for (std::size_t v = u + 1; v < k.size(); ++v)
            if (k.edge(u, v) == EdgeColor::Gray) f.add_edge(u, v);
    return f;
}

bool common_neighbors_everywhere(const Graph& f) {
    for (std::size_t u = 0; u < f.order(); ++u)
        for (std::size_t v = u + 1; v < f.order(); ++v) {
            bool found = false;
            for (std::size_t w = 0; w < f.order() && !found; ++w) found = w != u && w != v && f.adjacent(u, w) && f.adjacent(v, w);
            if (!found) return false;
        }
    return true;
}

} // namespace

TEST_CASE("C~n-free black CRGs have no gray cycle of the middle lengths") {
    CHECK(black_white_gray().size() == 52);
    for (long n = 6; n <= 12; ++n) {
        const auto h = build_family(Family::CTilde, n);
        for (const auto& k : black_white_gray()) {
            if (embeds(h, k)) continue;
            for (auto len : path_cycle_profile(gray_graph(k)).cycle_lengths)
                REQUIRE_FALSE((long(len) >= cdiv(n - 1, 2) && long(len) <= n - 1));
        }
    }
}

TEST_CASE("Pn-free black CRGs have no long gray path") {
    for (long n = 3; n <= 12; ++n) {
        const auto h = build_family(Family::Path, n);
        for (const auto& k : black_white_gray()) {
            if (embeds(h, k)) continue;
            // Path length counted in vertices.
            REQUIRE(long(path_cycle_profile(gray_graph(k)).longest_path) <= cdiv(n, 2) - 1);
        }
    }
}

TEST_CASE("p-core black CRGs below gamma have large gray degrees and codegrees") {
    std::size_t exercised = 0;
    const auto run = [&](const Graph& h, long c) {
        const auto pts = extreme_points(clique_spectrum(h));
        for (long j = 1; j < 64; ++j) {
            const auto p = q(j, 64);
            if (p < q(1, c) || p >= q(1, 2)) continue;
            const auto bound = gamma(pts, p);
            for (const auto& k : black_white_gray()) {
                const auto res = g_value(k, p);
                if (res.value >= bound || !is_p_core(k, p)) continue;
                ++exercised;
                const auto stats = weight_stats(k, res);
                for (std::size_t v = 0; v < k.size(); ++v) {
                    REQUIRE(long(stats.vertices[v].gray_degree) >= c);
                    for (std::size_t w = v + 1; w < k.size(); ++w) REQUIRE(stats.codegree_count(v, w) >= 1);
                }
            }
        }
    };
    for (long n = 9; n <= 12; ++n) run(build_family(Family::CTilde, n), cdiv(n - 1, 3));
    for (long n = 8; n <= 12; ++n) run(build_family(Family::Path, n), cdiv(n - 1, 3));
    CHECK(exercised > 0);
}

TEST_CASE("no middle-length cycles and common neighbours rule out long cycles") {
    std::vector<Graph> graphs;
    // Windmills: k triangles sharing vertex 0.
    for (std::size_t blades = 2; blades <= 7; ++blades) {
        Graph g(2 * blades + 1);
        for (std::size_t b = 0; b < blades; ++b) {
            g.add_edge(0, 2 * b + 1);
            g.add_edge(0, 2 * b + 2);
            g.add_edge(2 * b + 1, 2 * b + 2);
        }
        graphs.push_back(g);
    }
    std::mt19937_64 rng(41);
    for (int t = 0; t < 4000; ++t) {
        const std::size_t order = 9 + t % 4;
        std::bernoulli_distribution coin(0.15 + 0.05 * (t % 5));
        Graph g(order);
        for (std::size_t u = 1; u < order; ++u) g.add_edge(0, u);
        for (std::size_t u = 1; u < order; ++u)
            for (std::size_t v = u + 1; v < order; ++v)
                if (coin(rng)) g.add_edge(u, v);
        graphs.push_back(g);
    }
    std::size_t exercised = 0;
    for (const auto& f : graphs) {
        if (!common_neighbors_everywhere(f)) continue;
        const auto lengths = path_cycle_profile(f).cycle_lengths;
        for (long n = 9; n <= 13; ++n) {
            const bool middle = std::any_of(lengths.begin(), lengths.end(),
                                            [&](std::size_t l) { return long(l) >= cdiv(n - 1, 2) && long(l) <= n - 1; });
            if (middle) continue;
            ++exercised;
            for (auto l : lengths) REQUIRE(long(l) <= cdiv(n - 1, 2) - 1);
        }
    }
    CHECK(exercised >= 6);
}
