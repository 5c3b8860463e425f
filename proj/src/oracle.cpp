#include "fusionkit/oracle.hpp"

#include <stdexcept>
#include <string>

#include "fusionkit/error.hpp"

namespace fusionkit {

std::vector<WeightMultiplicity> adjoint_weight_system(const RootSystem& rs) {
    std::vector<WeightMultiplicity> out;
    out.reserve(rs.root_count() + 1);
    for (const Root& beta : rs.roots()) out.push_back({beta.labels, 1});
    out.push_back({Weight::zero(rs.rank()), rs.rank()});
    return out;
}

Oracle::Oracle(RootSystemPtr rs)
    : rs_(std::move(rs)),
      adjoint_(adjoint_weight_system(*rs_)),
      fold_limit_(10 * static_cast<int>(rs_->positive_roots().size())) {}

std::optional<SignedWeight> Oracle::finite_fold(const Weight& shifted) const {
    SignedWeight out{shifted, 1, 1};
    for (int step = 0;; ++step) {
        if (step > fold_limit_) throw std::logic_error("finite fold exceeded its iteration bound");
        int worst = -1;
        for (int i = 0; i < rs_->rank(); ++i) {
            int x = out.weight[i];
            if (x == 0) return std::nullopt;
            if (x < 0 && (worst < 0 || x < out.weight[worst])) worst = i;
        }
        if (worst < 0) return out;
        out.weight = rs_->reflect(worst, out.weight);
        out.sign = -out.sign;
    }
}

std::optional<SignedWeight> Oracle::affine_fold(const Weight& shifted, int shifted_level) const {
    SignedWeight out{shifted, 1, 1};
    const Weight& theta = rs_->highest_root().labels;
    for (int step = 0;; ++step) {
        if (step > fold_limit_) throw std::logic_error("affine fold exceeded its iteration bound");
        auto folded = finite_fold(out.weight);
        if (!folded) return std::nullopt;
        out.weight = folded->weight;
        out.sign *= folded->sign;
        // theta^vee = theta under (theta, theta) = 2.
        int excess = rs_->theta_product(out.weight) - shifted_level;
        if (excess == 0) return std::nullopt;
        if (excess < 0) return out;
        out.weight = out.weight - excess * theta;
        out.sign = -out.sign;
    }
}

FusionDecomposition Oracle::racah_speiser_tensor(const Weight& mu) const { return racah_speiser_tensor(adjoint_, mu); }

FusionDecomposition Oracle::racah_speiser_tensor(std::span<const WeightMultiplicity> system, const Weight& mu) const {
    if (mu.rank() != rs_->rank()) throw AlgebraMismatch("weight does not belong to " + rs_->algebra().str());
    if (!mu.is_dominant()) throw std::invalid_argument("mu = " + mu.str() + " is not dominant");
    const Weight& rho = rs_->weyl_vector();
    std::map<Weight, long long> acc;
    for (const auto& [xi, mult] : system) {
        auto folded = finite_fold(mu + xi + rho);
        if (!folded) continue;
        acc[folded->weight - rho] += folded->sign * mult;
    }
    FusionDecomposition out{rs_->algebra(), std::nullopt, {}};
    for (auto& [nu, m] : acc) {
        if (m < 0) throw std::logic_error("negative tensor multiplicity at " + nu.str());
        if (m > 0) out.entries.emplace(nu, m);
    }
    return out;
}

FusionDecomposition Oracle::kac_walton_fusion(const AffineWeight& mu) const {
    if (mu.level < 2)
        throw LevelTooSmall("adjoint fusion needs level >= 2, got " + std::to_string(mu.level));
    return kac_walton_fusion(adjoint_, mu);
}

FusionDecomposition Oracle::kac_walton_fusion(std::span<const WeightMultiplicity> system,
                                              const AffineWeight& mu) const {
    const int k = mu.level;
    Weight finite = mu.finite();
    if (finite.rank() != rs_->rank()) throw AlgebraMismatch("weight does not belong to " + rs_->algebra().str());
    if (!mu.is_dominant() || mu.labels[0] + rs_->theta_product(finite) != k)
        throw std::invalid_argument("mu = " + mu.str() + " is not a dominant level-" + std::to_string(k) + " weight");

    const Weight& rho = rs_->weyl_vector();
    const int shifted_level = k + rs_->dual_coxeter();
    std::map<Weight, long long> acc;
    for (const auto& [nu, c] : racah_speiser_tensor(system, finite).entries) {
        auto folded = affine_fold(nu + rho, shifted_level);
        if (!folded) continue;
        acc[folded->weight - rho] += folded->sign * c;
    }
    FusionDecomposition out{rs_->algebra(), k, {}};
    for (auto& [nu, m] : acc) {
        if (m < 0) throw std::logic_error("negative fusion multiplicity at " + nu.str());
        if (m == 0) continue;
        if (!nu.is_dominant() || rs_->theta_product(nu) > k)
            throw std::logic_error("fusion result " + nu.str() + " outside the level-" + std::to_string(k) + " alcove");
        out.entries.emplace(nu, m);
    }
    return out;
}

}  // namespace fusionkit
