#pragma once

#include "crged/crg.hpp"
#include "crged/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace crged {

/// M_K(p): p on white pairs and white diagonal, 1-p on black pairs and black
/// diagonal, 0 on gray pairs.
class PMatrix {
public:
    PMatrix(std::size_t dim, std::vector<Rational> entries);

    std::size_t dim() const noexcept { return dim_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    /// x^T M x
    Rational quadratic_form(const std::vector<Rational>& x) const;

private:
    std::size_t dim_;
    std::vector<Rational> entries_;
};

PMatrix build_matrix(const Crg& k, const Rational& p);

/// Minimum of x^T M x over the probability simplex, with a minimizing x.
struct GResult {
    Rational value;
    std::vector<Rational> weights;
    std::vector<std::size_t> support; // ascending, weights > 0
};

inline constexpr std::size_t kMaxSolverSize = 12;

/// Exact global minimum by enumerating supports. Among minimizers the witness has the
/// smallest support, then the lexicographically smallest support set.
GResult g_value(const Crg& k, const Rational& p);
GResult g_value(const PMatrix& m);

/// p(1-p) / (r(1-p) + sp), the value of K(r,s). Where the denominator vanishes
/// (p = 1 with s = 0, or p = 0 with r = 0) the continuous extension p/r or (1-p)/s is used.
Rational closed_form_gray(std::size_t white, std::size_t black, const Rational& p);

inline constexpr std::size_t kMaxCoreCheckSize = 10;

/// True iff every proper sub-CRG has strictly larger g at p.
bool is_p_core(const Crg& k, const Rational& p);

struct VertexWeights {
    Rational gray;  // d_G(v)
    Rational white; // d_W(v); v's own weight counts here when v is white
    Rational black; // d_B(v); v's own weight counts here when v is black
    std::size_t gray_degree = 0;
};

struct WeightStats {
    std::vector<VertexWeights> vertices;
    std::vector<Rational> gray_codegree;          // d_G(v,w), row-major m*m, 0 on the diagonal
    std::vector<std::size_t> gray_codegree_count; // deg_G(v,w)

    const Rational& codegree(std::size_t v, std::size_t w) const { return gray_codegree[v * vertices.size() + w]; }
    std::size_t codegree_count(std::size_t v, std::size_t w) const { return gray_codegree_count[v * vertices.size() + w]; }
};

WeightStats weight_stats(const Crg& k, const GResult& res);

/// {"value": "a/b", "weights": [...], "support": [...]}
std::string to_json(const GResult& res);

} // namespace crged
