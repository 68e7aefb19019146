#pragma once

// Stability functions on K0(Rep Q), semistable characteristic functions via
// the Harder-Narasimhan recursion and via Reineke's inversion, and a
// brute-force semistability test.

#include <string>
#include <vector>

#include "kronhall/hall.hpp"
#include "kronhall/kronrep.hpp"

namespace kronhall {

/// Z(d) = (a.d) + i (b.d), slope mu(d) = -(a.d)/(b.d).
struct StabilityFunction {
    int a1 = -1, a2 = 0;
    int b1 = 1, b2 = 1;

    /// Throws std::invalid_argument unless b is positive on both simples.
    void validate() const;
    int re(const DimVec& d) const { return a1 * d.d1 + a2 * d.d2; }
    int im(const DimVec& d) const { return b1 * d.d1 + b2 * d.d2; }
    Rational slope(const DimVec& d) const;
    /// Sign of mu(x) - mu(y), computed by cross multiplication.
    int compare(const DimVec& x, const DimVec& y) const;
    std::string str() const;
    friend bool operator==(const StabilityFunction&, const StabilityFunction&) = default;
    friend auto operator<=>(const StabilityFunction&, const StabilityFunction&) = default;
};

/// -m + i(m+n): mu(m,n) = m/(m+n), tubes at 1/2.
StabilityFunction default_stability();

/// Strict: HN types with mu(alpha_1) > ... > mu(alpha_t). Weak allows ties,
/// as in the displayed identity.
enum class HNOrder { Strict, Weak };

/// Factors listed from the bottom of the filtration up. In products the
/// subobject stands on the right, so the element is 1_{alpha_t} ... 1_{alpha_1}.
struct HNDecomposition {
    std::vector<std::pair<DimVec, HallElement>> factors;
};

/// Ordered tuples of nonzero dimension vectors summing to alpha.
std::vector<std::vector<DimVec>> ordered_decompositions(const DimVec& alpha);

/// v^{sum_{k<l} <b_k, b_l>} x_1 ... x_k: cancels the twist of the product, so
/// characteristic functions multiply to sums over filtrations.
HallElement untwisted_product(const std::vector<HallElement>& xs);

HallElement hn_semistable(const DimVec& alpha, const StabilityFunction& z, int q,
                          HNOrder order = HNOrder::Strict);

/// The HN strata of one_alpha: every type of length >= 2 with its product.
std::vector<HNDecomposition> hn_strata(const DimVec& alpha, const StabilityFunction& z, int q,
                                       HNOrder order = HNOrder::Strict);

/// ClassSums: mu(alpha_1 + ... + alpha_s) > mu(alpha) for every s < t.
/// SlopeSums: mu(alpha_1) + ... + mu(alpha_s) > mu(alpha), as displayed.
enum class ReinekeCondition { ClassSums, SlopeSums };

HallElement reineke_semistable(const DimVec& alpha, const StabilityFunction& z, int q,
                               ReinekeCondition cond = ReinekeCondition::ClassSums);

/// No subrepresentation of strictly larger slope, tested on the canonical model.
bool is_semistable(const IsoClass& x, const StabilityFunction& z, int q);
/// Sum of [X] over classes of dimension alpha passing is_semistable.
HallElement brute_semistable(const DimVec& alpha, const StabilityFunction& z, int q);

}  // namespace kronhall
