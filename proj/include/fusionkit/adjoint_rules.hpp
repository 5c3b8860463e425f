#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fusionkit/algebra.hpp"
#include "fusionkit/weights.hpp"

namespace fusionkit {

/// Support of a tensor or fusion product: dominant weight -> multiplicity >= 1.
///
/// `level` is empty for tensor products.
struct FusionDecomposition {
    AlgebraId algebra;
    std::optional<int> level;
    std::map<Weight, long long> entries;

    long long at(const Weight& nu) const {
        auto it = entries.find(nu);
        return it == entries.end() ? 0 : it->second;
    }
    friend bool operator==(const FusionDecomposition&, const FusionDecomposition&) = default;
};

/// A positive root beta and the single simple index i whose depth-rule
/// condition is not implied by dominance.
///
/// nu - mu = beta requires mu_i >= threshold_plus = d_i[beta];
/// nu - mu = -beta requires mu_i >= threshold_minus = h_i[beta].
struct NontrivialCondition {
    Root root;
    int index = 0;  ///< zero-based simple index
    int threshold_plus = 0;
    int threshold_minus = 0;

    friend bool operator==(const NontrivialCondition& a, const NontrivialCondition& b) {
        return a.root == b.root && a.index == b.index && a.threshold_plus == b.threshold_plus &&
               a.threshold_minus == b.threshold_minus;
    }
};

/// Closed-form adjoint tensor and fusion rules for one algebra.
class AdjointRules {
public:
    explicit AdjointRules(RootSystemPtr rs);

    const RootSystem& root_system() const { return *rs_; }
    RootSystemPtr root_system_ptr() const { return rs_; }

    /// Nonzero affine labels minus one. Throws LevelTooSmall for k < 2.
    int diag_fusion(const AffineWeight& mu) const;
    /// Number of nonzero finite labels.
    int diag_tensor(const Weight& mu) const;

    /// Off-diagonal tensor coefficient via the depth weight: nu - mu in the
    /// root set and mu - delta[nu - mu] dominant.
    int offdiag_tensor(const Weight& mu, const Weight& nu) const;
    /// Same coefficient from the sign-split rule: positive roots test
    /// beta + (mu_i + 1) alpha_i, negative roots test beta - (nu_i + 1) alpha_i.
    int offdiag_tensor_signed(const Weight& mu, const Weight& nu) const;
    /// Same coefficient from beta + (mu_i + 1) alpha_i not in roots or 0, all i.
    int offdiag_tensor_two_case(const Weight& mu, const Weight& nu) const;
    /// Same coefficient from the precomputed nontrivial-condition table.
    int offdiag_tensor_fast(const Weight& mu, const Weight& nu) const;

    /// Off-diagonal fusion coefficient. Equal to the tensor coefficient for
    /// weights of the level-k polytope. Throws LevelMismatch.
    int offdiag_fusion(const AffineWeight& mu, const AffineWeight& nu) const;
    /// The full affine rule: nu - r_i.mu not in roots or 0 for every i in
    /// {0, ..., r}, where r_0.mu = mu + (mu_0 + 1) theta.
    int offdiag_fusion_full(const AffineWeight& mu, const AffineWeight& nu) const;

    /// Conditions generated from the root system: all (beta > 0, i) with
    /// d_i[beta] > max(0, -beta_i).
    const std::vector<NontrivialCondition>& nontrivial_conditions() const { return conditions_; }

    /// adjoint (x)_k L(mu). Throws LevelTooSmall for k < 2.
    FusionDecomposition decompose(const AffineWeight& mu) const;
    /// adjoint (x) L(mu).
    FusionDecomposition decompose_tensor(const Weight& mu) const;

private:
    int root_index(const Weight& mu, const Weight& nu) const;

    RootSystemPtr rs_;
    std::vector<NontrivialCondition> conditions_;
    /// Per root index: (simple index, required mu_i), or index -1.
    std::vector<std::pair<int, int>> fast_lookup_;
};

std::vector<NontrivialCondition> generate_nontrivial_conditions(const RootSystem& rs);

}  // namespace fusionkit
