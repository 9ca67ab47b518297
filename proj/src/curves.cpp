#include "crged/curves.hpp"

#include "crged/errors.hpp"
#include "crged/gsolver.hpp"
#include "crged/parallel.hpp"

#include <algorithm>
#include <optional>

namespace crged {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

void require_order(bool ok, TheoremFamily f, std::size_t n, const char* need) {
    if (!ok)
        throw ValidationError(std::string(theorem_family_name(f)) + " with n = " + std::to_string(n) + " rejected: " + need);
}

} // namespace

std::string_view theorem_family_name(TheoremFamily f) {
    switch (f) {
    case TheoremFamily::C8Star: return "c8star";
    case TheoremFamily::CTilde: return "ctilde";
    case TheoremFamily::Path: return "path";
    case TheoremFamily::Cycle: return "cycle";
    }
    return "?";
}

TheoremFamily parse_theorem_family(std::string_view name) {
    for (auto f : {TheoremFamily::C8Star, TheoremFamily::CTilde, TheoremFamily::Path, TheoremFamily::Cycle})
        if (theorem_family_name(f) == name) return f;
    throw ParseError("unknown theorem family '" + std::string(name) + "' (expected c8star, ctilde, path or cycle)");
}

Graph theorem_graph(TheoremFamily f, std::size_t n) {
    (void)theorem_interval(f, n);
    switch (f) {
    case TheoremFamily::C8Star: return build_family(Family::C2nStar, 8);
    case TheoremFamily::CTilde: return build_family(Family::CTilde, n);
    case TheoremFamily::Path: return build_family(Family::Path, n);
    case TheoremFamily::Cycle: return build_family(Family::Cycle, n);
    }
    throw ValidationError("unknown theorem family");
}

Interval theorem_interval(TheoremFamily f, std::size_t n) {
    const Interval whole{Rational(0), Rational(1)};
    switch (f) {
    case TheoremFamily::C8Star:
        require_order(n == 8, f, n, "the closed form covers C8* only (n = 8)");
        return whole;
    case TheoremFamily::CTilde:
        require_order(n >= 9, f, n, "n must be >= 9");
        return whole;
    case TheoremFamily::Path:
        require_order(n >= 3, f, n, "n must be >= 3");
        return {make_rational(1, static_cast<long>(ceil_div(n - 1, 3))), Rational(1)};
    case TheoremFamily::Cycle:
        require_order(n >= 4, f, n, "n must be >= 4");
        if (n % 2 == 1) return whole;
        return {make_rational(1, static_cast<long>(ceil_div(n, 3))), Rational(1)};
    }
    throw ValidationError("unknown theorem family");
}

std::vector<SpectrumPoint> theorem_terms(TheoremFamily f, std::size_t n) {
    (void)theorem_interval(f, n);
    switch (f) {
    case TheoremFamily::C8Star: return {{2, 0}, {1, 2}, {0, 3}};
    case TheoremFamily::CTilde: return {{2, 0}, {1, ceil_div(n - 1, 3) - 1}, {0, ceil_div(n - 3, 2)}};
    case TheoremFamily::Path: return {{1, ceil_div(n - 1, 3) - 1}, {0, ceil_div(n, 2) - 1}};
    case TheoremFamily::Cycle:
        if (n % 2 == 1) return {{2, 0}, {1, ceil_div(n, 3) - 1}, {0, ceil_div(n, 2) - 1}};
        return {{1, ceil_div(n, 3) - 1}, {0, ceil_div(n, 2) - 1}};
    }
    throw ValidationError("unknown theorem family");
}

Rational theorem_value(TheoremFamily f, std::size_t n, const Rational& p) {
    const Interval iv = theorem_interval(f, n);
    if (!iv.contains(p))
        throw TheoremRangeError("p = " + to_string(p) + " is outside [" + to_string(iv.lo) + ", " + to_string(iv.hi) +
                                "] where the " + std::string(theorem_family_name(f)) + " closed form holds");
    return gamma(theorem_terms(f, n), p);
}

std::string_view curve_source_name(CurveSource s) {
    switch (s) {
    case CurveSource::TheoremFormula: return "theorem_formula";
    case CurveSource::Gamma: return "gamma";
    case CurveSource::BoundedSearch: return "bounded_search";
    }
    return "?";
}

std::string spectrum_point_label(const SpectrumPoint& pt) {
    return "K(" + std::to_string(pt.white) + "," + std::to_string(pt.black) + ")";
}

std::vector<Rational> uniform_grid(std::size_t denominator) {
    if (denominator == 0) throw ValidationError("grid denominator must be positive");
    std::vector<Rational> grid;
    for (std::size_t k = 0; k <= denominator; ++k)
        grid.push_back(make_rational(static_cast<long>(k), static_cast<long>(denominator)));
    return grid;
}

std::vector<Rational> restrict_grid(std::span<const Rational> grid, const Interval& interval) {
    std::vector<Rational> out;
    for (const auto& p : grid)
        if (interval.contains(p)) out.push_back(p);
    return out;
}

std::vector<CurveSample> sample_points(std::span<const Rational> grid, const std::function<CurveSample(const Rational&)>& fn,
                                       std::size_t jobs) {
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i - 1] < grid[i])) throw ValidationError("grid must be strictly increasing");
    std::vector<CurveSample> out(grid.size());
    parallel_for(grid.size(), jobs, [&](std::size_t i) { out[i] = fn(grid[i]); });
    return out;
}

namespace {

CurveSample gray_terms_sample(const std::vector<SpectrumPoint>& terms, const Rational& p) {
    CurveSample s{p, gamma(terms, p), {}};
    for (const auto& pt : gamma_minimizers(terms, p)) s.witnesses.push_back(spectrum_point_label(pt));
    return s;
}

} // namespace

Curve theorem_curve(TheoremFamily f, std::size_t n, std::span<const Rational> grid, std::size_t jobs) {
    const auto terms = theorem_terms(f, n);
    for (const auto& p : grid) (void)theorem_value(f, n, p);
    return {sample_points(grid, [&](const Rational& p) { return gray_terms_sample(terms, p); }, jobs),
            CurveSource::TheoremFormula};
}

Curve gamma_curve(const Graph& h, std::span<const Rational> grid, std::size_t jobs) {
    const auto points = extreme_points(clique_spectrum(h));
    return {sample_points(grid, [&](const Rational& p) { return gray_terms_sample(points, p); }, jobs), CurveSource::Gamma};
}

BoundedSearch::BoundedSearch(const Graph& h, std::size_t max_size, bool allow_long_running, const EmbedLimits& limits)
    : max_size_(max_size) {
    if (max_size > kMaxRoutineSearchSize && !allow_long_running)
        throw ValidationError("bounded search with max size " + std::to_string(max_size) +
                              " is long-running; enable it explicitly");
    candidates_ = enumerate_crgs(max_size, [&](const Crg& k) { return !embeds(h, k, limits).has_value(); });
    if (candidates_.empty()) throw ValidationError("H embeds in every CRG of the searched sizes");
}

BoundedMin BoundedSearch::at(const Rational& p) const {
    std::optional<Rational> best;
    std::vector<const Crg*> attaining;
    for (const auto& k : candidates_) {
        Rational v = g_value(k, p).value;
        if (!best || v < *best) {
            best = std::move(v);
            attaining.assign(1, &k);
        } else if (v == *best) {
            attaining.push_back(&k);
        }
    }
    BoundedMin out{*best, {}};
    // A non-core attainer has an attaining proper sub-CRG, itself a candidate; listing
    // only p-core attainers drops those duplicates without losing any class.
    for (const Crg* k : attaining)
        if (is_p_core(*k, p)) out.witnesses.push_back(*k);
    return out;
}

BoundedMin bounded_min_g(const Graph& h, std::size_t max_size, const Rational& p, bool allow_long_running) {
    return BoundedSearch(h, max_size, allow_long_running).at(p);
}

Curve bounded_curve(const BoundedSearch& search, std::span<const Rational> grid, std::size_t jobs) {
    return {sample_points(grid,
                          [&](const Rational& p) {
                              const auto res = search.at(p);
                              CurveSample s{p, res.value, {}};
                              for (const auto& k : res.witnesses) s.witnesses.push_back(to_compact(k));
                              return s;
                          },
                          jobs),
            CurveSource::BoundedSearch};
}

CurveAnalysis analyze_curve(const Curve& curve) {
    const auto& s = curve.samples;
    if (s.size() < 3) throw ValidationError("curve analysis needs at least 3 samples");
    CurveAnalysis out{s[0].value, s[0].p, {}};
    for (const auto& sample : s)
        if (sample.value > out.max_value) {
            out.max_value = sample.value;
            out.argmax = sample.p;
        }
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t c = a + 2; c < s.size(); ++c) {
            const Rational mid = (s[a].p + s[c].p) / 2;
            const auto it = std::lower_bound(s.begin() + static_cast<std::ptrdiff_t>(a), s.begin() + static_cast<std::ptrdiff_t>(c), mid,
                                             [](const CurveSample& x, const Rational& q) { return x.p < q; });
            if (it->p != mid) continue;
            const auto m = static_cast<std::size_t>(it - s.begin());
            if (2 * s[m].value < s[a].value + s[c].value) out.concavity_violations.push_back({a, m, c});
        }
    return out;
}

bool satisfies_lipschitz(const Curve& curve, const Rational& lipschitz) {
    const auto& s = curve.samples;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (abs(s[i].value - s[i - 1].value) > lipschitz * (s[i].p - s[i - 1].p)) return false;
    return true;
}

std::string to_csv(const Curve& curve) {
    std::string out = "p,value,source,witness\n";
    for (const auto& s : curve.samples) {
        std::string w;
        for (const auto& x : s.witnesses) w += (w.empty() ? "" : " ") + x;
        out += to_string(s.p) + "," + to_string(s.value) + "," + std::string(curve_source_name(curve.provenance)) + "," + w + "\n";
    }
    return out;
}

} // namespace crged
