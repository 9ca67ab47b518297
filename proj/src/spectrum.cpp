#include "crged/spectrum.hpp"

#include "crged/errors.hpp"
#include "crged/gsolver.hpp"

#include <algorithm>

namespace crged {

CliqueSpectrum::CliqueSpectrum(std::size_t white_bound, std::size_t black_bound,
                               std::vector<std::optional<std::size_t>> max_black)
    : white_bound_(white_bound), black_bound_(black_bound), max_black_(std::move(max_black)) {
    if (max_black_.size() != white_bound_ + 1) throw ValidationError("spectrum profile must have one entry per r");
}

std::optional<std::size_t> CliqueSpectrum::max_black(std::size_t r) const {
    if (r > white_bound_) return std::nullopt;
    return max_black_[r];
}

bool CliqueSpectrum::contains(std::size_t r, std::size_t s) const {
    const auto top = max_black(r);
    return top && s <= *top;
}

std::string CliqueSpectrum::to_csv() const {
    std::string out = "r,s,member\n";
    for (std::size_t r = 0; r <= white_bound_; ++r)
        for (std::size_t s = 0; s <= black_bound_; ++s)
            out += std::to_string(r) + "," + std::to_string(s) + "," + (contains(r, s) ? "true" : "false") + "\n";
    return out;
}

EmbedLimits spectrum_embed_limits() {
    EmbedLimits limits;
    limits.max_host = 64;
    return limits;
}

bool in_spectrum(const Graph& h, std::size_t white, std::size_t black, const EmbedLimits& limits) {
    if (h.order() == 0) throw ValidationError("the clique spectrum needs a nonempty forbidden graph");
    if (white + black == 0) return true;
    return !embeds(h, gray_crg(white, black), limits).has_value();
}

CliqueSpectrum clique_spectrum(const Graph& h, const SpectrumBounds& bounds, const EmbedLimits& limits) {
    const std::size_t n = h.order();
    if (n == 0) throw ValidationError("the clique spectrum needs a nonempty forbidden graph");
    std::size_t r_bound = bounds.white.value_or(n);
    std::size_t s_bound = bounds.black.value_or(n);

    std::vector<std::optional<std::size_t>> profile;
    for (std::size_t r = 0;; ++r) {
        std::optional<std::size_t> top;
        if (r == 0) {
            std::size_t s = 0; // (0,0) is a member
            while (in_spectrum(h, 0, s + 1, limits)) ++s;
            top = s;
        } else if (profile.back()) {
            // Downward closure: the row can only shrink.
            for (std::size_t s = *profile.back() + 1; s-- > 0;)
                if (in_spectrum(h, r, s, limits)) {
                    top = s;
                    break;
                }
        }
        if (top && *top >= s_bound) s_bound = *top + 1;
        profile.push_back(top);
        if (!top && r >= r_bound) break;
        if (top && r >= r_bound) r_bound = r + 1;
    }
    profile.resize(r_bound + 1);
    return CliqueSpectrum(r_bound, s_bound, std::move(profile));
}

std::vector<SpectrumPoint> extreme_points(const CliqueSpectrum& spectrum) {
    std::vector<SpectrumPoint> out;
    for (std::size_t r = spectrum.white_bound() + 1; r-- > 0;) {
        const auto top = spectrum.max_black(r);
        if (!top) continue;
        const auto next = spectrum.max_black(r + 1);
        if (!next || *next < *top) out.push_back({r, *top});
    }
    return out;
}

std::string extreme_points_csv(const std::vector<SpectrumPoint>& points) {
    std::string out = "r,s\n";
    for (const auto& pt : points) out += std::to_string(pt.white) + "," + std::to_string(pt.black) + "\n";
    return out;
}

Rational gamma(const std::vector<SpectrumPoint>& points, const Rational& p) {
    std::optional<Rational> best;
    for (const auto& pt : points) {
        if (pt.white + pt.black == 0) continue;
        Rational v = closed_form_gray(pt.white, pt.black, p);
        if (!best || v < *best) best = std::move(v);
    }
    if (!best) throw ValidationError("gamma is undefined: the spectrum contains only (0,0)");
    return *best;
}

Rational gamma(const Graph& h, const Rational& p) { return gamma(extreme_points(clique_spectrum(h)), p); }

std::vector<SpectrumPoint> gamma_minimizers(const std::vector<SpectrumPoint>& points, const Rational& p) {
    const Rational best = gamma(points, p);
    std::vector<SpectrumPoint> out;
    for (const auto& pt : points)
        if (pt.white + pt.black > 0 && closed_form_gray(pt.white, pt.black, p) == best) out.push_back(pt);
    return out;
}

} // namespace crged
