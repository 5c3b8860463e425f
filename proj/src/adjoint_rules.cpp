#include "fusionkit/adjoint_rules.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "fusionkit/error.hpp"

namespace fusionkit {

namespace {

void require_level_member(const RootSystem& rs, const AffineWeight& w) {
    if (w.rank() != rs.rank()) throw AlgebraMismatch("affine weight does not belong to " + rs.algebra().str());
    int level = w.labels[0] + rs.theta_product(w.finite());
    if (level != w.level)
        throw std::invalid_argument("affine weight " + w.str() + " violates the level-" + std::to_string(w.level) +
                                    " constraint");
}

}  // namespace

std::vector<NontrivialCondition> generate_nontrivial_conditions(const RootSystem& rs) {
    std::vector<NontrivialCondition> out;
    const auto positive = rs.positive_roots();
    for (std::size_t idx = 0; idx < positive.size(); ++idx) {
        const Root& beta = positive[idx];
        for (int i = 0; i < rs.rank(); ++i) {
            int d = rs.depth(idx, i);
            if (d > std::max(0, -beta.labels[i])) out.push_back({beta, i, d, rs.height(idx, i)});
        }
    }
    return out;
}

AdjointRules::AdjointRules(RootSystemPtr rs) : rs_(std::move(rs)) {
    conditions_ = generate_nontrivial_conditions(*rs_);
    fast_lookup_.assign(rs_->root_count(), {-1, 0});
    for (const auto& c : conditions_) {
        int plus = rs_->find_root_coords(c.root.coords);
        int minus = rs_->find_root(-c.root.labels);
        // One index per root; a second condition would overwrite the first.
        assert(fast_lookup_[static_cast<std::size_t>(plus)].first < 0);
        fast_lookup_[static_cast<std::size_t>(plus)] = {c.index, c.threshold_plus};
        fast_lookup_[static_cast<std::size_t>(minus)] = {c.index, c.threshold_minus};
    }
}

int AdjointRules::diag_fusion(const AffineWeight& mu) const {
    if (mu.level < 2)
        throw LevelTooSmall("adjoint fusion needs level >= 2, got " + std::to_string(mu.level));
    require_level_member(*rs_, mu);
    return nonzero_affine_labels(mu) - 1;
}

int AdjointRules::diag_tensor(const Weight& mu) const {
    if (mu.rank() != rs_->rank()) throw AlgebraMismatch("weight does not belong to " + rs_->algebra().str());
    return mu.nonzero_count();
}

int AdjointRules::root_index(const Weight& mu, const Weight& nu) const {
    if (mu.rank() != rs_->rank() || nu.rank() != rs_->rank())
        throw AlgebraMismatch("weights do not belong to " + rs_->algebra().str());
    if (!mu.is_dominant()) throw std::invalid_argument("mu = " + mu.str() + " is not dominant");
    if (mu == nu) throw std::invalid_argument("off-diagonal coefficient requested with mu == nu");
    if (!nu.is_dominant()) return -1;
    return rs_->find_root(nu - mu);
}

int AdjointRules::offdiag_tensor(const Weight& mu, const Weight& nu) const {
    int idx = root_index(mu, nu);
    if (idx < 0) return 0;
    for (int i = 0; i < rs_->rank(); ++i)
        if (mu[i] < rs_->depth(static_cast<std::size_t>(idx), i)) return 0;
    return 1;
}

int AdjointRules::offdiag_tensor_signed(const Weight& mu, const Weight& nu) const {
    int idx = root_index(mu, nu);
    if (idx < 0) return 0;
    const Root& beta = rs_->root(static_cast<std::size_t>(idx));
    const bool positive = beta.is_positive();
    for (int i = 0; i < rs_->rank(); ++i) {
        Weight shifted = positive ? beta.labels + (mu[i] + 1) * rs_->simple_root(i)
                                  : beta.labels - (nu[i] + 1) * rs_->simple_root(i);
        int hit = rs_->find_root(shifted);
        if (hit >= 0 && rs_->root(static_cast<std::size_t>(hit)).is_positive() == positive) return 0;
    }
    return 1;
}

int AdjointRules::offdiag_tensor_two_case(const Weight& mu, const Weight& nu) const {
    int idx = root_index(mu, nu);
    if (idx < 0) return 0;
    const Weight& beta = rs_->root(static_cast<std::size_t>(idx)).labels;
    for (int i = 0; i < rs_->rank(); ++i) {
        Weight shifted = beta + (mu[i] + 1) * rs_->simple_root(i);
        if (shifted.is_zero() || rs_->is_root(shifted)) return 0;
    }
    return 1;
}

int AdjointRules::offdiag_tensor_fast(const Weight& mu, const Weight& nu) const {
    int idx = root_index(mu, nu);
    if (idx < 0) return 0;
    auto [i, need] = fast_lookup_[static_cast<std::size_t>(idx)];
    return (i < 0 || mu[i] >= need) ? 1 : 0;
}

int AdjointRules::offdiag_fusion(const AffineWeight& mu, const AffineWeight& nu) const {
    if (mu.level != nu.level)
        throw LevelMismatch("levels differ: " + std::to_string(mu.level) + " vs " + std::to_string(nu.level));
    require_level_member(*rs_, mu);
    require_level_member(*rs_, nu);
    if (!mu.is_dominant()) throw std::invalid_argument("mu = " + mu.str() + " is not dominant");
    if (!nu.is_dominant()) return 0;
    int value = offdiag_tensor(mu.finite(), nu.finite());
    // The affine i = 0 clause is implied for dominant level-k weights.
    assert(value == offdiag_fusion_full(mu, nu));
    return value;
}

int AdjointRules::offdiag_fusion_full(const AffineWeight& mu, const AffineWeight& nu) const {
    if (mu.level != nu.level)
        throw LevelMismatch("levels differ: " + std::to_string(mu.level) + " vs " + std::to_string(nu.level));
    Weight m = mu.finite();
    Weight n = nu.finite();
    if (m == n) throw std::invalid_argument("off-diagonal coefficient requested with mu == nu");
    Weight beta = n - m;
    if (!rs_->is_root(beta)) return 0;
    for (int i = 0; i < rs_->rank(); ++i) {
        Weight shifted = beta + (m[i] + 1) * rs_->simple_root(i);
        if (shifted.is_zero() || rs_->is_root(shifted)) return 0;
    }
    // alpha_0 = -theta.
    Weight shifted = beta - (mu.labels[0] + 1) * rs_->highest_root().labels;
    if (shifted.is_zero() || rs_->is_root(shifted)) return 0;
    return 1;
}

FusionDecomposition AdjointRules::decompose(const AffineWeight& mu) const {
    if (mu.level < 2)
        throw LevelTooSmall("adjoint fusion needs level >= 2, got " + std::to_string(mu.level));
    require_level_member(*rs_, mu);
    if (!mu.is_dominant()) throw std::invalid_argument("mu = " + mu.str() + " is not dominant");
    FusionDecomposition out{rs_->algebra(), mu.level, {}};
    if (int diag = diag_fusion(mu); diag > 0) out.entries[mu.finite()] = diag;
    const Weight finite = mu.finite();
    for (const Root& beta : rs_->roots()) {
        Weight nu = finite + beta.labels;
        if (!nu.is_dominant()) continue;
        int nu0 = mu.level - rs_->theta_product(nu);
        if (nu0 < 0) continue;
        AffineWeight nu_hat{mu.level, {}};
        nu_hat.labels.push_back(nu0);
        nu_hat.labels.insert(nu_hat.labels.end(), nu.labels.begin(), nu.labels.end());
        if (offdiag_fusion(mu, nu_hat) == 1) out.entries[nu] = 1;
    }
    return out;
}

FusionDecomposition AdjointRules::decompose_tensor(const Weight& mu) const {
    if (mu.rank() != rs_->rank()) throw AlgebraMismatch("weight does not belong to " + rs_->algebra().str());
    if (!mu.is_dominant()) throw std::invalid_argument("mu = " + mu.str() + " is not dominant");
    FusionDecomposition out{rs_->algebra(), std::nullopt, {}};
    if (int diag = diag_tensor(mu); diag > 0) out.entries[mu] = diag;
    for (const Root& beta : rs_->roots()) {
        Weight nu = mu + beta.labels;
        if (nu.is_dominant() && offdiag_tensor(mu, nu) == 1) out.entries[nu] = 1;
    }
    return out;
}

}  // namespace fusionkit
