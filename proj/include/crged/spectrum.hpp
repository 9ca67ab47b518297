#pragma once

#include "crged/crg.hpp"
#include "crged/graph.hpp"
#include "crged/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace crged {

/// (r,s) with H not embedding in K(r,s).
struct SpectrumPoint {
    std::size_t white = 0;
    std::size_t black = 0;
    auto operator<=>(const SpectrumPoint&) const = default;
};

/// Clique spectrum of Forb(H) restricted to the box [0,white_bound] x [0,black_bound],
/// stored as its boundary profile (membership is downward closed).
class CliqueSpectrum {
public:
    CliqueSpectrum(std::size_t white_bound, std::size_t black_bound, std::vector<std::optional<std::size_t>> max_black);

    std::size_t white_bound() const noexcept { return white_bound_; }
    std::size_t black_bound() const noexcept { return black_bound_; }
    /// Largest s with (r,s) in the spectrum, nullopt if (r,0) is already excluded.
    std::optional<std::size_t> max_black(std::size_t r) const;
    bool contains(std::size_t r, std::size_t s) const;

    /// Rows "r,s,member" for every point of the box, with a header line.
    std::string to_csv() const;

private:
    std::size_t white_bound_;
    std::size_t black_bound_;
    std::vector<std::optional<std::size_t>> max_black_;
};

struct SpectrumBounds {
    std::optional<std::size_t> white; // default |V(H)|
    std::optional<std::size_t> black; // default |V(H)|
};

/// Embedding limits for gray CRGs: their twin classes collapse the search, so hosts
/// larger than the generic budget are fine here.
EmbedLimits spectrum_embed_limits();

/// Direct test: H does not embed in K(r,s). (0,0) is always a member for nonempty H.
bool in_spectrum(const Graph& h, std::size_t white, std::size_t black, const EmbedLimits& limits = spectrum_embed_limits());

/// Walks the staircase boundary; bounds widen automatically if the boundary reaches them.
CliqueSpectrum clique_spectrum(const Graph& h, const SpectrumBounds& bounds = {},
                               const EmbedLimits& limits = spectrum_embed_limits());

/// Maximal points under the coordinatewise order, sorted by r descending.
std::vector<SpectrumPoint> extreme_points(const CliqueSpectrum& spectrum);

std::string extreme_points_csv(const std::vector<SpectrumPoint>& points);

/// min over the points of closed_form_gray(r,s,p); (0,0) is skipped.
Rational gamma(const std::vector<SpectrumPoint>& points, const Rational& p);
Rational gamma(const Graph& h, const Rational& p);

/// Points attaining gamma at p, in the given order.
std::vector<SpectrumPoint> gamma_minimizers(const std::vector<SpectrumPoint>& points, const Rational& p);

} // namespace crged
