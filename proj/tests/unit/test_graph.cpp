#include "crged/errors.hpp"
#include "crged/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace crged;

namespace {

Graph random_graph(std::size_t n, std::mt19937_64& rng, double density = 0.5) {
    std::bernoulli_distribution coin(density);
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph complete(std::size_t n) { return complement(Graph(n)); }

bool connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.order();
}

} // namespace

TEST_CASE("family constructions") {
    const auto p4 = build_family(Family::Path, 4);
    CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

    const auto c8s = build_family(Family::C2nStar, 8);
    CHECK(c8s.edge_count() == 9);
    CHECK(c8s.adjacent(0, 4));
    CHECK(c8s.adjacent(7, 0));

    const auto ct9 = build_family(Family::CTilde, 9);
    CHECK(ct9.edge_count() == 10);
    CHECK(ct9.adjacent(0, 2));

    for (std::size_t n = 3; n <= 12; ++n) {
        CHECK(build_family(Family::Path, n).edge_count() == n - 1);
        CHECK(build_family(Family::Cycle, n).edge_count() == n);
        if (n >= 4) CHECK(build_family(Family::CTilde, n).edge_count() == n + 1);
        if (n >= 6 && n % 2 == 0) CHECK(build_family(Family::C2nStar, n).edge_count() == n + 1);
    }
}

TEST_CASE("family orders out of range are validation errors") {
    CHECK_THROWS_AS(build_family(Family::C2nStar, 7), ValidationError);
    CHECK_THROWS_AS(build_family(Family::C2nStar, 4), ValidationError);
    CHECK_THROWS_AS(build_family(Family::CTilde, 3), ValidationError);
    CHECK_THROWS_AS(build_family(Family::Cycle, 2), ValidationError);
    CHECK_THROWS_AS(build_family(Family::Path, 0), ValidationError);
}

TEST_CASE("induced subgraph examples") {
    CHECK(has_induced(build_family(Family::Cycle, 5), build_family(Family::Path, 4)));
    CHECK_FALSE(has_induced(complete(4), build_family(Family::Path, 3)));
    CHECK_FALSE(has_induced(build_family(Family::C2nStar, 8), build_family(Family::Cycle, 8)));
    CHECK_FALSE(has_induced(build_family(Family::Path, 3), build_family(Family::Path, 4)));
}

TEST_CASE("induced subgraph witness is an induced copy") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        const auto host = random_graph(7, rng);
        const auto pattern = random_graph(1 + t % 5, rng);
        const auto w = find_induced(host, pattern);
        CHECK(w.has_value() == oracle::has_induced(host, pattern));
        if (w) CHECK(host.induced(*w) == pattern);
    }
}

TEST_CASE("has_induced basic properties") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const auto g = random_graph(1 + t % 10, rng);
        CHECK(has_induced(g, g));
        CHECK(has_induced(g, Graph(1)) == (g.order() > 0));
    }
    CHECK_FALSE(has_induced(Graph(0), Graph(1)));
}

TEST_CASE("complement") {
    CHECK(complement(complete(3)) == Graph(3));
    const auto cp3 = complement(build_family(Family::Path, 3));
    CHECK(cp3.edges() == std::vector<Edge>{{0, 2}});
    const auto c5 = build_family(Family::Cycle, 5);
    CHECK(complement(complement(c5)) == c5);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const auto g = random_graph(t % 11, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("path/cycle profile examples") {
    const auto p5 = path_cycle_profile(build_family(Family::Path, 5));
    CHECK(p5.longest_path == 5);
    CHECK(p5.cycle_lengths.empty());
    CHECK_FALSE(p5.hamiltonian);

    const auto c5 = path_cycle_profile(build_family(Family::Cycle, 5));
    CHECK(c5.longest_path == 5);
    CHECK(c5.cycle_lengths == std::vector<std::size_t>{5});
    CHECK(c5.hamiltonian);

    // Frozen from the DFS oracle: the chord {0,4} splits C8 into two 5-cycles.
    const auto c8s = path_cycle_profile(build_family(Family::C2nStar, 8));
    CHECK(c8s.longest_path == 8);
    CHECK(c8s.cycle_lengths == std::vector<std::size_t>{5, 8});
    CHECK(c8s.hamiltonian);

    CHECK_THROWS_AS(path_cycle_profile(Graph(17)), ResourceError);
}

TEST_CASE("path/cycle profile agrees with DFS oracle") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        const auto g = random_graph(1 + t % 9, rng, 0.2 + 0.1 * (t % 6));
        const auto got = path_cycle_profile(g);
        const auto want = oracle::profile(g);
        CHECK(got.longest_path == want.longest_path);
        CHECK(std::set<std::size_t>(got.cycle_lengths.begin(), got.cycle_lengths.end()) == want.cycle_lengths);
        CHECK(got.hamiltonian == (g.order() >= 3 && want.cycle_lengths.count(g.order()) == 1));
    }
}

TEST_CASE("connected graphs whose longest path closes are Hamiltonian") {
    // Exhaustive over all labelled graphs on up to 6 vertices.
    for (std::size_t n = 3; n <= 6; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
            const auto g = oracle::unpack(n, bits);
            if (!connected(g)) continue;
            const auto prof = path_cycle_profile(g);
            if (prof.longest_path_closes) REQUIRE(prof.hamiltonian);
        }
    }
    std::mt19937_64 rng(23);
    for (int t = 0; t < 3000; ++t) {
        const auto g = random_graph(7 + t % 3, rng, 0.25 + 0.05 * (t % 8));
        if (!connected(g)) continue;
        const auto prof = path_cycle_profile(g);
        if (prof.longest_path_closes) REQUIRE(prof.hamiltonian);
    }
}

TEST_CASE("graph6 encoding") {
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(build_family(Family::Path, 3)) == "Bg");
    CHECK(to_graph6(build_family(Family::Cycle, 5)) == "Dhc");
    CHECK(from_graph6(">>graph6<<Dhc") == build_family(Family::Cycle, 5));
    CHECK_THROWS_AS(from_graph6("Dh"), ParseError);
    CHECK_THROWS_AS(from_graph6("Bh"), ParseError); // nonzero padding bit
    CHECK_THROWS_AS(from_graph6("B\x7f"), ParseError);

    std::mt19937_64 rng(2);
    for (std::size_t n : {0, 1, 2, 5, 13, 62, 63, 64, 100, 300}) {
        const auto g = random_graph(n, rng);
        const auto s = to_graph6(g);
        CHECK(from_graph6(s) == g);
        CHECK(to_graph6(from_graph6(s)) == s);
    }
    CHECK(to_graph6(Graph(63)).substr(0, 4) == "~??~");
}

TEST_CASE("graph specs") {
    CHECK(parse_graph_spec("cycle:8") == build_family(Family::Cycle, 8));
    CHECK(parse_graph_spec("c2nstar:8") == build_family(Family::C2nStar, 8));
    CHECK(parse_graph_spec("Dhc") == build_family(Family::Cycle, 5));
    CHECK_THROWS_AS(parse_graph_spec("star:5"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("cycle:x"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("c2nstar:7"), ValidationError);
}
