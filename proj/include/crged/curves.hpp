#pragma once

#include "crged/crg.hpp"
#include "crged/graph.hpp"
#include "crged/rational.hpp"
#include "crged/spectrum.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crged {

/// Forbidden-graph families with a closed-form edit distance function.
enum class TheoremFamily : std::uint8_t { C8Star, CTilde, Path, Cycle };

std::string_view theorem_family_name(TheoremFamily f);
TheoremFamily parse_theorem_family(std::string_view name);

/// The forbidden graph itself: C8*, C~n, Pn or Cn.
Graph theorem_graph(TheoremFamily f, std::size_t n);

struct Interval {
    Rational lo;
    Rational hi;
    bool contains(const Rational& p) const { return lo <= p && p <= hi; }
};

/// Closed interval of p on which the closed form is asserted. Throws ValidationError
/// for orders outside the family's range.
Interval theorem_interval(TheoremFamily f, std::size_t n);

/// The gray CRGs K(r,s) whose values are the terms of the closed form,
/// p(1-p)/(r(1-p)+sp). Terms: p/2 = K(2,0), p(1-p)/(1+(c-2)p) = K(1,c-1), (1-p)/d = K(0,d).
std::vector<SpectrumPoint> theorem_terms(TheoremFamily f, std::size_t n);

/// Exact closed-form value; TheoremRangeError outside theorem_interval.
Rational theorem_value(TheoremFamily f, std::size_t n, const Rational& p);

enum class CurveSource : std::uint8_t { TheoremFormula, Gamma, BoundedSearch };
std::string_view curve_source_name(CurveSource s);

struct CurveSample {
    Rational p;
    Rational value;
    std::vector<std::string> witnesses; // "K(r,s)" labels or compact CRGs, canonical order
};

struct Curve {
    std::vector<CurveSample> samples; // p strictly increasing
    CurveSource provenance;
};

/// {k/denominator : 0 <= k <= denominator}
std::vector<Rational> uniform_grid(std::size_t denominator);
std::vector<Rational> restrict_grid(std::span<const Rational> grid, const Interval& interval);

/// Evaluates fn at each grid point with up to `jobs` workers; order of the result
/// follows the grid regardless of scheduling.
std::vector<CurveSample> sample_points(std::span<const Rational> grid, const std::function<CurveSample(const Rational&)>& fn,
                                       std::size_t jobs = 1);

Curve theorem_curve(TheoremFamily f, std::size_t n, std::span<const Rational> grid, std::size_t jobs = 1);
Curve gamma_curve(const Graph& h, std::span<const Rational> grid, std::size_t jobs = 1);

struct BoundedMin {
    Rational value;
    std::vector<Crg> witnesses; // every attaining p-core candidate, canonical enumeration order
};

inline constexpr std::size_t kMaxRoutineSearchSize = 4;

/// Candidate CRGs of at most max_size vertices into which H does not embed. Building it
/// enumerates and embeds once; evaluating at many p reuses the list.
class BoundedSearch {
public:
    /// Size 5 enumerates ~10^4 classes per p and needs allow_long_running.
    BoundedSearch(const Graph& h, std::size_t max_size, bool allow_long_running = false,
                  const EmbedLimits& limits = {});

    std::size_t max_size() const noexcept { return max_size_; }
    const std::vector<Crg>& candidates() const noexcept { return candidates_; }

    /// Minimum g over the candidates: an upper bound on the edit distance at p, exact
    /// whenever some optimal CRG has at most max_size vertices.
    BoundedMin at(const Rational& p) const;

private:
    std::size_t max_size_;
    std::vector<Crg> candidates_;
};

BoundedMin bounded_min_g(const Graph& h, std::size_t max_size, const Rational& p, bool allow_long_running = false);

Curve bounded_curve(const BoundedSearch& search, std::span<const Rational> grid, std::size_t jobs = 1);

struct ConcavityViolation {
    std::size_t left;
    std::size_t mid;
    std::size_t right;
};

struct CurveAnalysis {
    Rational max_value;                               // d*
    Rational argmax;                                  // p*, leftmost on ties
    std::vector<ConcavityViolation> concavity_violations;
};

/// Max/argmax and every sample triple (a,m,c) with p_m the midpoint of p_a, p_c and
/// value_m < (value_a + value_c)/2.
CurveAnalysis analyze_curve(const Curve& curve);

/// |value_{i+1} - value_i| <= lipschitz * (p_{i+1} - p_i) for adjacent samples.
bool satisfies_lipschitz(const Curve& curve, const Rational& lipschitz);

/// "p,value,source,witness" CSV with header; witnesses joined by spaces.
std::string to_csv(const Curve& curve);

std::string spectrum_point_label(const SpectrumPoint& pt);

} // namespace crged
