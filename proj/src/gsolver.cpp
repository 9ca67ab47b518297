#include "crged/gsolver.hpp"

#include "crged/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>

namespace crged {

PMatrix::PMatrix(std::size_t dim, std::vector<Rational> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) throw ValidationError("PMatrix entry count does not match dimension");
}

Rational PMatrix::quadratic_form(const std::vector<Rational>& x) const {
    if (x.size() != dim_) throw ValidationError("weight vector dimension mismatch");
    Rational total = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < dim_; ++j) row += entries_[i * dim_ + j] * x[j];
        total += x[i] * row;
    }
    return total;
}

namespace {

void check_p(const Rational& p) {
    if (!in_unit_interval(p)) throw ValidationError("p = " + to_string(p) + " must lie in [0,1]");
}

enum class Entry : std::uint8_t { Zero, P, OneMinusP };

Entry entry_kind(const Crg& k, std::size_t i, std::size_t j) {
    if (i == j) return k.vertex(i) == VertexColor::White ? Entry::P : Entry::OneMinusP;
    switch (k.edge(i, j)) {
    case EdgeColor::White: return Entry::P;
    case EdgeColor::Black: return Entry::OneMinusP;
    case EdgeColor::Gray: return Entry::Zero;
    }
    return Entry::Zero;
}

/// Fraction-free (Bareiss) elimination on the integer augmented matrix [A | rhs], then
/// rational back substitution. nullopt when A is singular.
std::optional<std::vector<Rational>> solve_integer_system(std::vector<std::vector<mpz_class>> a) {
    const std::size_t n = a.size();
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) std::swap(a[pivot], a[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(a[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(a[i][j]) * x[j];
        acc /= Rational(a[i][i]);
        x[i] = acc;
    }
    return x;
}

struct Candidate {
    Rational value;
    std::vector<Rational> weights;
    std::vector<std::size_t> support;
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
    return a.support < b.support;
}

/// `scaled` is c*M for a positive integer c, row-major; the minimizer is unchanged by c.
GResult solve(const std::vector<mpz_class>& scaled, const PMatrix& matrix) {
    const std::size_t m = matrix.dim();
    if (m > kMaxSolverSize)
        throw ResourceError("g solver enumerates supports; size " + std::to_string(m) + " exceeds " +
                            std::to_string(kMaxSolverSize));
    if (m == 0) throw ValidationError("g is undefined for an empty CRG");

    std::optional<Candidate> best;
    const std::size_t masks = std::size_t{1} << m;
    for (std::size_t mask = 1; mask < masks; ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t v = 0; v < m; ++v)
            if (mask >> v & 1U) s.push_back(v);
        const std::size_t k = s.size();
        // Stationarity on the face S: (c M_S) x - mu 1 = 0, 1^T x = 1.
        std::vector<std::vector<mpz_class>> sys(k + 1, std::vector<mpz_class>(k + 2, 0));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) sys[i][j] = scaled[s[i] * m + s[j]];
            sys[i][k] = -1;
            sys[k][i] = 1;
        }
        sys[k][k + 1] = 1;
        // Singular faces are skipped: any feasible stationary point there has the same
        // value as one on a smaller face.
        const auto sol = solve_integer_system(std::move(sys));
        if (!sol) continue;
        bool feasible = true;
        for (std::size_t i = 0; i < k && feasible; ++i) feasible = sgn((*sol)[i]) >= 0;
        if (!feasible) continue;

        Candidate c;
        c.weights.assign(m, Rational(0));
        for (std::size_t i = 0; i < k; ++i) c.weights[s[i]] = (*sol)[i];
        for (std::size_t v = 0; v < m; ++v)
            if (sgn(c.weights[v]) > 0) c.support.push_back(v);
        c.value = matrix.quadratic_form(c.weights);
        if (!best || better(c, *best)) best = std::move(c);
    }
    // Singleton faces always give a nonsingular system, so best is set.
    return GResult{std::move(best->value), std::move(best->weights), std::move(best->support)};
}

} // namespace

PMatrix build_matrix(const Crg& k, const Rational& p) {
    check_p(p);
    const std::size_t m = k.size();
    const Rational q = 1 - p;
    std::vector<Rational> entries(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            switch (entry_kind(k, i, j)) {
            case Entry::Zero: entries[i * m + j] = 0; break;
            case Entry::P: entries[i * m + j] = p; break;
            case Entry::OneMinusP: entries[i * m + j] = q; break;
            }
        }
    return PMatrix(m, std::move(entries));
}

GResult g_value(const Crg& k, const Rational& p) {
    const PMatrix matrix = build_matrix(k, p);
    const std::size_t m = k.size();
    // p = a/b: b*M has entries in {0, a, b-a}.
    const mpz_class a = p.get_num();
    const mpz_class b = p.get_den();
    std::vector<mpz_class> scaled(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            switch (entry_kind(k, i, j)) {
            case Entry::Zero: scaled[i * m + j] = 0; break;
            case Entry::P: scaled[i * m + j] = a; break;
            case Entry::OneMinusP: scaled[i * m + j] = b - a; break;
            }
        }
    return solve(scaled, matrix);
}

GResult g_value(const PMatrix& matrix) {
    const std::size_t m = matrix.dim();
    mpz_class lcm = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), matrix(i, j).get_den_mpz_t());
    std::vector<mpz_class> scaled(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Rational v = matrix(i, j) * Rational(lcm);
            scaled[i * m + j] = v.get_num();
        }
    return solve(scaled, matrix);
}

Rational closed_form_gray(std::size_t white, std::size_t black, const Rational& p) {
    if (white + black == 0) throw ValidationError("closed form needs r + s >= 1");
    check_p(p);
    const Rational q = 1 - p;
    const Rational den = Rational(static_cast<long>(white)) * q + Rational(static_cast<long>(black)) * p;
    if (sgn(den) == 0) {
        // p = 1 with s = 0, or p = 0 with r = 0: the limit of the formula along p.
        if (black == 0) return p / Rational(static_cast<long>(white));
        return q / Rational(static_cast<long>(black));
    }
    return p * q / den;
}

bool is_p_core(const Crg& k, const Rational& p) {
    if (k.size() > kMaxCoreCheckSize)
        throw ResourceError("p-core check limited to " + std::to_string(kMaxCoreCheckSize) + " vertices");
    const Rational g = g_value(k, p).value;
    for (const auto& sub : sub_crgs(k))
        if (g_value(sub.crg, p).value <= g) return false;
    return true;
}

WeightStats weight_stats(const Crg& k, const GResult& res) {
    const std::size_t m = k.size();
    if (res.weights.size() != m)
        throw ValidationError("weight vector has " + std::to_string(res.weights.size()) + " entries for a CRG of size " +
                              std::to_string(m));
    WeightStats out;
    out.vertices.resize(m);
    out.gray_codegree.assign(m * m, Rational(0));
    out.gray_codegree_count.assign(m * m, 0);
    for (std::size_t v = 0; v < m; ++v) {
        auto& vw = out.vertices[v];
        (k.vertex(v) == VertexColor::White ? vw.white : vw.black) += res.weights[v];
        for (std::size_t w = 0; w < m; ++w) {
            if (w == v) continue;
            switch (k.edge(v, w)) {
            case EdgeColor::Gray:
                vw.gray += res.weights[w];
                ++vw.gray_degree;
                break;
            case EdgeColor::White: vw.white += res.weights[w]; break;
            case EdgeColor::Black: vw.black += res.weights[w]; break;
            }
        }
    }
    for (std::size_t v = 0; v < m; ++v)
        for (std::size_t w = 0; w < m; ++w) {
            if (v == w) continue;
            for (std::size_t u = 0; u < m; ++u) {
                if (u == v || u == w) continue;
                if (k.edge(v, u) == EdgeColor::Gray && k.edge(w, u) == EdgeColor::Gray) {
                    out.gray_codegree[v * m + w] += res.weights[u];
                    ++out.gray_codegree_count[v * m + w];
                }
            }
        }
    return out;
}

std::string to_json(const GResult& res) {
    nlohmann::ordered_json j;
    j["value"] = to_string(res.value);
    j["weights"] = nlohmann::json::array();
    for (const auto& w : res.weights) j["weights"].push_back(to_string(w));
    j["support"] = res.support;
    return j.dump();
}

} // namespace crged
