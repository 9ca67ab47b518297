#pragma once

#include "crged/errors.hpp"
#include "crged/graph.hpp"
#include "crged/rational.hpp"

#include <cstddef>
#include <cstdint>

namespace crged {

struct EditResult {
    std::size_t edits = 0;
    Rational normalized; // edits / C(n,2), 0 when C(n,2) = 0
    Graph witness;       // an H-free graph at that distance
};

struct OracleOptions {
    std::uint64_t node_limit = 20'000'000;
};

/// Raised when the node budget runs out; carries the best edit count known to suffice.
class SearchBudgetExceeded : public ResourceError {
public:
    SearchBudgetExceeded(const std::string& what, std::size_t best_upper_bound)
        : ResourceError(what), best_upper_bound_(best_upper_bound) {}
    std::size_t best_upper_bound() const noexcept { return best_upper_bound_; }

private:
    std::size_t best_upper_bound_;
};

inline constexpr std::size_t kMaxOracleOrder = 10;

/// Minimum number of adjacency flips making g free of induced copies of `forbidden`,
/// by iterative deepening that branches on the pairs of one induced copy.
EditResult edit_distance(const Graph& g, const Graph& forbidden, const OracleOptions& options = {});

/// C(n,2) as a rational divisor; edits/C(n,2), or 0 when n < 2.
Rational normalize_edits(std::size_t edits, std::size_t order);

struct EstimateResult {
    Rational max_normalized;
    Graph witness;             // sampled graph attaining the maximum
    std::size_t sample_index = 0;
    std::size_t skipped = 0;   // samples whose oracle call ran out of budget
};

inline constexpr std::size_t kMaxEstimateOrder = 9;

/// Draws `samples` graphs with exactly floor(p*C(n,2)) edges and returns the largest
/// exact distance seen. A finite-n lower bound on the maximum, not an estimate of the limit.
///
/// Sampling is reproducible bit for bit: std::mt19937_64 seeded with `seed`, bounded
/// integers by rejection on the raw 64-bit output (threshold (2^64 - r) mod r, then
/// x mod r), edges chosen by a partial Fisher-Yates shuffle of the pairs (i,j), i<j, in
/// lexicographic order. Ties keep the lowest sample index.
EstimateResult max_dist_estimate(std::size_t n, const Rational& p, const Graph& forbidden, std::size_t samples,
                                 std::uint64_t seed, const OracleOptions& options = {}, std::size_t jobs = 1);

/// The graph sampled as sample `index` by max_dist_estimate with the same arguments.
Graph sample_graph(std::size_t n, std::size_t edges, std::uint64_t seed, std::size_t index);

} // namespace crged
