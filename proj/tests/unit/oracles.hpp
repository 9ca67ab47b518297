// Independent reference implementations used only by tests. Deliberately naive:
// exhaustive enumeration, no pruning shared with the library.
#pragma once

#include "crged/crg.hpp"
#include "crged/graph.hpp"
#include "crged/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <unordered_map>
#include <vector>

namespace oracle {

using crged::Crg;
using crged::EdgeColor;
using crged::Graph;
using crged::Rational;
using crged::VertexColor;

// Every map V(H) -> V(K), |V(K)|^n of them.
inline bool embeds(const Graph& h, const Crg& k) {
    const std::size_t n = h.order(), m = k.size();
    std::vector<std::size_t> phi(n, 0);
    while (true) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = a + 1; b < n && ok; ++b) {
                const bool edge = h.adjacent(a, b);
                if (phi[a] == phi[b]) {
                    ok = (k.vertex(phi[a]) == VertexColor::Black) == edge;
                } else {
                    const auto c = k.edge(phi[a], phi[b]);
                    ok = c == EdgeColor::Gray || (c == EdgeColor::Black) == edge;
                }
            }
        if (ok) return true;
        std::size_t i = 0;
        while (i < n && ++phi[i] == m) phi[i++] = 0;
        if (i == n) return false;
    }
}

// Every injective map pattern -> host.
inline bool has_induced(const Graph& host, const Graph& pattern) {
    const std::size_t n = host.order(), k = pattern.order();
    if (k > n) return false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        std::vector<std::size_t> vs;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        do {
            bool ok = true;
            for (std::size_t a = 0; a < k && ok; ++a)
                for (std::size_t b = a + 1; b < k && ok; ++b) ok = pattern.adjacent(a, b) == host.adjacent(vs[a], vs[b]);
            if (ok) return true;
        } while (std::next_permutation(vs.begin(), vs.end()));
    }
    return false;
}

inline std::uint64_t pack(const Graph& g) {
    std::uint64_t bits = 0;
    std::size_t i = 0;
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v, ++i)
            if (g.adjacent(u, v)) bits |= std::uint64_t{1} << i;
    return bits;
}

inline Graph unpack(std::size_t n, std::uint64_t bits) {
    Graph g(n);
    std::size_t i = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v, ++i)
            if (bits >> i & 1) g.add_edge(u, v);
    return g;
}

// Breadth-first search over edit layers: layer k holds every graph at exactly k flips.
inline std::size_t edit_distance(const Graph& g, const Graph& forbidden) {
    const std::size_t n = g.order();
    const std::size_t pairs = n * (n - 1) / 2;
    std::unordered_map<std::uint64_t, std::size_t> dist;
    std::queue<std::uint64_t> q;
    const auto start = pack(g);
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        const auto cur = q.front();
        q.pop();
        if (!oracle::has_induced(unpack(n, cur), forbidden)) return dist[cur];
        for (std::size_t i = 0; i < pairs; ++i) {
            const auto next = cur ^ (std::uint64_t{1} << i);
            if (dist.emplace(next, dist[cur] + 1).second) q.push(next);
        }
    }
    return pairs + 1;
}

// Simple cycles and paths by plain DFS from every start vertex.
struct Profile {
    std::size_t longest_path = 0;
    std::set<std::size_t> cycle_lengths;
};

inline Profile profile(const Graph& g) {
    Profile out;
    const std::size_t n = g.order();
    std::vector<bool> used(n, false);
    std::vector<std::size_t> path;
    auto dfs = [&](auto&& self, std::size_t v) -> void {
        out.longest_path = std::max(out.longest_path, path.size());
        for (std::size_t w = 0; w < n; ++w) {
            if (!g.adjacent(v, w)) continue;
            if (w == path.front() && path.size() >= 3) out.cycle_lengths.insert(path.size());
            if (used[w]) continue;
            used[w] = true;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used[w] = false;
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        used[s] = true;
        path = {s};
        dfs(dfs, s);
        used[s] = false;
    }
    return out;
}

// The printed terms, written out literally.
inline Rational half_p(const Rational& p) { return p / 2; }
inline Rational mixed_term(const Rational& p, long c) { return p * (1 - p) / (1 + (c - 2) * p); }
inline Rational black_term(const Rational& p, long d) { return (1 - p) / d; }

inline long ceil_div(long a, long b) { return (a + b - 1) / b; }

// Minimum of x^T M x over the simplex grid {x : N x integral}; an upper bound on g.
inline Rational grid_min(const Crg& k, const Rational& p, long N) {
    const std::size_t m = k.size();
    auto entry = [&](std::size_t i, std::size_t j) -> Rational {
        if (i == j) return k.vertex(i) == VertexColor::White ? p : Rational(1 - p);
        switch (k.edge(i, j)) {
        case EdgeColor::White: return p;
        case EdgeColor::Black: return 1 - p;
        case EdgeColor::Gray: return 0;
        }
        return 0;
    };
    std::optional<Rational> best;
    std::vector<long> c(m, 0);
    auto rec = [&](auto&& self, std::size_t i, long left) -> void {
        if (i + 1 == m) {
            c[i] = left;
            Rational v = 0;
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) v += entry(a, b) * c[a] * c[b];
            v /= Rational(N * N);
            if (!best || v < *best) best = v;
            return;
        }
        for (long t = 0; t <= left; ++t) {
            c[i] = t;
            self(self, i + 1, left - t);
        }
    };
    rec(rec, 0, N);
    return *best;
}

} // namespace oracle
