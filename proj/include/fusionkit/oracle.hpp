#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fusionkit/adjoint_rules.hpp"
#include "fusionkit/algebra.hpp"
#include "fusionkit/weights.hpp"

namespace fusionkit {

/// A weight reached by folding, with the sign (-1)^{#reflections}.
struct SignedWeight {
    Weight weight;
    int sign = 1;
    long long multiplicity = 1;
};

struct WeightMultiplicity {
    Weight weight;
    long long multiplicity = 1;
};

/// Roots with multiplicity 1 plus the zero weight with multiplicity r.
std::vector<WeightMultiplicity> adjoint_weight_system(const RootSystem& rs);

/// Independent ground truth for adjoint products: Racah-Speiser folding for
/// tensor products and Kac-Walton affine folding for fusion.
///
/// The folding routines accept any weight system; only the adjoint one and
/// the trivial one are exercised.
class Oracle {
public:
    explicit Oracle(RootSystemPtr rs);

    const RootSystem& root_system() const { return *rs_; }

    /// Folds a rho-shifted point into the open dominant chamber. Empty when
    /// the orbit meets a wall.
    std::optional<SignedWeight> finite_fold(const Weight& shifted) const;
    /// Folds a rho-shifted point into the open fundamental alcove at shifted
    /// level `shifted_level` = k + h^vee. Empty on any wall.
    std::optional<SignedWeight> affine_fold(const Weight& shifted, int shifted_level) const;

    FusionDecomposition racah_speiser_tensor(const Weight& mu) const;
    FusionDecomposition racah_speiser_tensor(std::span<const WeightMultiplicity> system, const Weight& mu) const;

    /// Throws LevelTooSmall for k < 2.
    FusionDecomposition kac_walton_fusion(const AffineWeight& mu) const;
    /// Any level >= 0; the caller vouches for the weight system.
    FusionDecomposition kac_walton_fusion(std::span<const WeightMultiplicity> system, const AffineWeight& mu) const;

private:
    RootSystemPtr rs_;
    std::vector<WeightMultiplicity> adjoint_;
    int fold_limit_;
};

}  // namespace fusionkit
