#include "crged/edit_oracle.hpp"

#include "crged/parallel.hpp"

#include <functional>
#include <optional>
#include <random>

namespace crged {

namespace {

std::size_t pairs_of(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::size_t symmetric_difference(const Graph& a, const Graph& b) {
    std::size_t d = 0;
    for (Vertex u = 0; u < a.order(); ++u)
        for (Vertex v = u + 1; v < a.order(); ++v) d += a.adjacent(u, v) != b.adjacent(u, v);
    return d;
}

bool has_edge(const Graph& g) { return g.edge_count() > 0; }
bool has_non_edge(const Graph& g) { return g.edge_count() < pairs_of(g.order()); }

} // namespace

Rational normalize_edits(std::size_t edits, std::size_t order) {
    const std::size_t pairs = pairs_of(order);
    if (pairs == 0) return Rational(0);
    return make_rational(static_cast<long>(edits), static_cast<long>(pairs));
}

EditResult edit_distance(const Graph& g, const Graph& forbidden, const OracleOptions& options) {
    const std::size_t n = g.order();
    if (n > kMaxOracleOrder)
        throw ResourceError("edit oracle is exhaustive; order " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxOracleOrder));
    if (forbidden.order() > n) return {0, Rational(0), g};
    if (forbidden.order() <= 1)
        throw ValidationError("no graph on " + std::to_string(n) + " vertices avoids an induced graph on " +
                              std::to_string(forbidden.order()) + " vertices");

    // A trivial H-free target: complete graphs avoid any H with a non-edge, empty
    // graphs any H with an edge.
    std::optional<Graph> fallback;
    if (has_non_edge(forbidden)) {
        Graph complete = complement(Graph(n));
        fallback = std::move(complete);
    }
    if (has_edge(forbidden)) {
        Graph empty(n);
        if (!fallback || symmetric_difference(g, empty) < symmetric_difference(g, *fallback)) fallback = std::move(empty);
    }
    const std::size_t upper = symmetric_difference(g, *fallback);

    const std::size_t k = forbidden.order();
    Graph work = g;
    std::vector<char> blocked(n * n, 0); // flipped on this branch, or excluded by an earlier sibling
    std::uint64_t nodes = 0;

    std::function<bool(std::size_t)> search = [&](std::size_t budget) -> bool {
        if (++nodes > options.node_limit)
            throw SearchBudgetExceeded("edit oracle exceeded " + std::to_string(options.node_limit) + " nodes", upper);
        const auto copy = find_induced(work, forbidden);
        if (!copy) return true;
        if (budget == 0) return false;
        // Every solution flips some pair inside this copy; branch on the first such pair.
        std::vector<std::pair<Vertex, Vertex>> excluded;
        bool found = false;
        for (std::size_t i = 0; i < k && !found; ++i)
            for (std::size_t j = i + 1; j < k && !found; ++j) {
                const Vertex u = std::min((*copy)[i], (*copy)[j]);
                const Vertex v = std::max((*copy)[i], (*copy)[j]);
                if (blocked[u * n + v]) continue;
                blocked[u * n + v] = 1;
                work.toggle(u, v);
                found = search(budget - 1);
                if (found) break;
                work.toggle(u, v);
                excluded.emplace_back(u, v);
            }
        for (const auto& [u, v] : excluded) blocked[u * n + v] = 0;
        return found;
    };

    for (std::size_t depth = 0; depth < upper; ++depth) {
        work = g;
        std::fill(blocked.begin(), blocked.end(), 0);
        if (search(depth)) return {depth, normalize_edits(depth, n), work};
    }
    return {upper, normalize_edits(upper, n), *fallback};
}

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (true) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % range;
    }
}

std::vector<Graph> draw_samples(std::size_t n, std::size_t edges, std::uint64_t seed, std::size_t count) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (std::size_t s = 0; s < count; ++s) {
        auto order = pairs;
        for (std::size_t i = 0; i < edges; ++i) {
            const auto j = i + static_cast<std::size_t>(bounded(rng, order.size() - i));
            std::swap(order[i], order[j]);
        }
        out.emplace_back(n, std::span<const Edge>(order.data(), edges));
    }
    return out;
}

std::size_t edge_target(std::size_t n, const Rational& p) {
    if (!in_unit_interval(p)) throw ValidationError("p = " + to_string(p) + " must lie in [0,1]");
    const Rational exact = p * Rational(static_cast<long>(pairs_of(n)));
    mpz_class floor_value;
    mpz_fdiv_q(floor_value.get_mpz_t(), exact.get_num_mpz_t(), exact.get_den_mpz_t());
    return floor_value.get_ui();
}

} // namespace

Graph sample_graph(std::size_t n, std::size_t edges, std::uint64_t seed, std::size_t index) {
    return draw_samples(n, edges, seed, index + 1).back();
}

EstimateResult max_dist_estimate(std::size_t n, const Rational& p, const Graph& forbidden, std::size_t samples,
                                 std::uint64_t seed, const OracleOptions& options, std::size_t jobs) {
    if (n > kMaxEstimateOrder)
        throw ResourceError("estimate runs the exact oracle per sample; n = " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxEstimateOrder));
    if (samples == 0) throw ValidationError("need at least one sample");
    const auto graphs = draw_samples(n, edge_target(n, p), seed, samples);

    std::vector<std::optional<Rational>> dist(samples);
    parallel_for(samples, jobs, [&](std::size_t i) {
        try {
            dist[i] = edit_distance(graphs[i], forbidden, options).normalized;
        } catch (const ResourceError&) {
            dist[i] = std::nullopt;
        }
    });

    std::optional<EstimateResult> best;
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        if (!dist[i]) {
            ++skipped;
            continue;
        }
        if (!best || *dist[i] > best->max_normalized) best = EstimateResult{*dist[i], graphs[i], i, 0};
    }
    if (!best) throw ResourceError("every sample exceeded the oracle budget");
    best->skipped = skipped;
    return *best;
}

} // namespace crged
