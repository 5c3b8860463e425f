#include "fusionkit/adjoint_rules.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/oracle.hpp"
#include "support.hpp"

using namespace fusionkit;
using testing::rs;

namespace {

AffineWeight hat(int level, std::vector<int> labels) { return AffineWeight{level, std::move(labels)}; }

std::map<Weight, long long> entries(std::initializer_list<std::pair<Weight, long long>> list) {
    return std::map<Weight, long long>(list.begin(), list.end());
}

}  // namespace

TEST_SUITE("rules") {

TEST_CASE("diagonal coefficients") {
    AdjointRules a1(rs("A1"));
    CHECK(a1.diag_fusion(hat(2, {1, 1})) == 1);
    CHECK(a1.diag_fusion(hat(2, {0, 2})) == 0);
    CHECK_THROWS_AS(a1.diag_fusion(hat(1, {0, 1})), LevelTooSmall);
    CHECK(a1.diag_tensor(Weight{0}) == 0);
    AdjointRules a3(rs("A3"));
    CHECK(a3.diag_tensor(Weight{1, 1, 1}) == 3);
    CHECK(a3.diag_fusion(hat(5, {2, 1, 1, 1})) == 3);
    AdjointRules e8(rs("E8"));
    CHECK(e8.diag_fusion(hat(30, {1, 1, 1, 1, 1, 1, 1, 1, 1})) == 8);
}

TEST_CASE("large level diagonal equals the tensor diagonal") {
    for (const char* name : {"B3", "C3", "G2", "F4"}) {
        auto sys = rs(name);
        AdjointRules rules(sys);
        for (const auto& mu : enumerate_level(*sys, 4))
            if (mu.labels[0] > 0) CHECK(rules.diag_fusion(mu) == rules.diag_tensor(mu.finite()));
    }
}

TEST_CASE("G2 off-diagonal examples") {
    AdjointRules g2(rs("G2"));
    CHECK(g2.offdiag_tensor(Weight{0, 2}, Weight{1, 1}) == 1);
    CHECK(g2.offdiag_fusion(hat(3, {1, 0, 2}), hat(3, {0, 1, 1})) == 1);
    CHECK(g2.offdiag_tensor(Weight{0, 1}, Weight{1, 0}) == 0);
    CHECK(g2.offdiag_tensor(Weight{0, 1}, Weight{3, 3}) == 0);
    // theta row: mu_0 >= 2 gives nu-hat = (mu_0 - 2; mu_1 + 1, mu_2).
    for (const auto& mu : enumerate_level(*rs("G2"), 6)) {
        if (mu.labels[0] < 2) continue;
        CHECK(g2.offdiag_fusion(mu, hat(6, {mu.labels[0] - 2, mu.labels[1] + 1, mu.labels[2]})) == 1);
    }
}

TEST_CASE("A1 and D4 off-diagonal fusion") {
    AdjointRules a1(rs("A1"));
    CHECK(a1.offdiag_fusion(hat(2, {0, 2}), hat(2, {2, 0})) == 1);
    CHECK_THROWS_AS(a1.offdiag_fusion(hat(2, {0, 2}), hat(3, {3, 0})), LevelMismatch);

    auto d4 = rs("D4");
    AdjointRules rules(d4);
    for (int k = 2; k <= 4; ++k)
        for (const auto& mu : enumerate_level(*d4, k))
            for (const auto& nu : enumerate_level(*d4, k))
                if (d4->is_root(nu.finite() - mu.finite())) CHECK(rules.offdiag_fusion(mu, nu) == 1);
}

TEST_CASE("nontrivial conditions") {
    CHECK(AdjointRules(rs("A5")).nontrivial_conditions().empty());
    CHECK(AdjointRules(rs("E7")).nontrivial_conditions().empty());
    const AdjointRules b4_rules(rs("B4"));
    const auto& b4 = b4_rules.nontrivial_conditions();
    REQUIRE(b4.size() == 3);
    for (const auto& c : b4) {
        CHECK(c.index == 3);
        CHECK(c.threshold_plus == 1);
        CHECK(c.threshold_minus == 1);
    }
    const AdjointRules g2_rules(rs("G2"));
    const auto& g2 = g2_rules.nontrivial_conditions();
    REQUIRE(g2.size() == 2);
    CHECK(g2[0].root.coords == std::vector<int>{1, 1});
    CHECK(g2[0].index == 1);
    CHECK(g2[0].threshold_plus == 2);
    CHECK(g2[0].threshold_minus == 1);
    CHECK(g2[1].root.coords == std::vector<int>{1, 2});
    CHECK(g2[1].threshold_plus == 1);
    CHECK(g2[1].threshold_minus == 2);
    // At most one index per root, up to rank 8.
    for (const char* name : {"B8", "C8", "D8", "E8", "F4", "G2"}) {
        const AdjointRules rules(rs(name));
        const auto& cs = rules.nontrivial_conditions();
        for (std::size_t i = 1; i < cs.size(); ++i) CHECK_FALSE(cs[i].root == cs[i - 1].root);
    }
}

TEST_CASE("the four off-diagonal forms agree") {
    for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4", "B5", "C6", "E6"}) {
        CAPTURE(name);
        auto sys = rs(name);
        AdjointRules rules(sys);
        const int r = sys->rank();
        // Every weight with labels <= bound, and every root shift.
        const int bound = r <= 4 ? 4 : 2;
        std::vector<int> labels(static_cast<std::size_t>(r), 0);
        for (;;) {
            Weight mu(labels);
            for (const Root& beta : sys->roots()) {
                Weight nu = mu + beta.labels;
                if (!nu.is_dominant()) continue;
                int depth = rules.offdiag_tensor(mu, nu);
                CHECK(rules.offdiag_tensor_signed(mu, nu) == depth);
                CHECK(rules.offdiag_tensor_two_case(mu, nu) == depth);
                CHECK(rules.offdiag_tensor_fast(mu, nu) == depth);
            }
            int i = 0;
            while (i < r && labels[static_cast<std::size_t>(i)] == bound) labels[static_cast<std::size_t>(i++)] = 0;
            if (i == r) break;
            ++labels[static_cast<std::size_t>(i)];
        }
    }
}

TEST_CASE("fusion off-diagonal equals tensor off-diagonal inside the polytope") {
    for (const char* name : {"A4", "B3", "C4", "D5", "G2", "F4"}) {
        CAPTURE(name);
        auto sys = rs(name);
        AdjointRules rules(sys);
        for (int k = 2; k <= (sys->rank() >= 5 ? 4 : 6); ++k)
            for (const auto& mu : enumerate_level(*sys, k))
                for (const Root& beta : sys->roots()) {
                    Weight nu = mu.finite() + beta.labels;
                    if (!nu.is_dominant() || sys->theta_product(nu) > k) continue;
                    AffineWeight nu_hat = affinize(*sys, nu, k);
                    CHECK(rules.offdiag_fusion_full(mu, nu_hat) == rules.offdiag_tensor(mu.finite(), nu));
                }
    }
}

TEST_CASE("decompositions") {
    AdjointRules a1(rs("A1"));
    CHECK(a1.decompose(hat(2, {0, 2})).entries == entries({{Weight{0}, 1}}));
    CHECK(a1.decompose(hat(3, {1, 2})).entries == entries({{Weight{0}, 1}, {Weight{2}, 1}}));
    CHECK(a1.decompose_tensor(Weight{2}).entries == entries({{Weight{0}, 1}, {Weight{2}, 1}, {Weight{4}, 1}}));
    CHECK(a1.decompose(hat(3, {1, 2})).level == 3);
    CHECK_FALSE(a1.decompose_tensor(Weight{2}).level.has_value());
    CHECK_THROWS_AS(a1.decompose(hat(1, {0, 1})), LevelTooSmall);
}

TEST_CASE("large level fusion equals tensor restricted to the polytope") {
    for (const char* name : {"A2", "B3", "G2"}) {
        auto sys = rs(name);
        AdjointRules rules(sys);
        for (const auto& mu : enumerate_level(*sys, 4)) {
            const int k = sys->theta_product(mu.finite()) + 2;
            auto fusion = rules.decompose(affinize(*sys, mu.finite(), k)).entries;
            auto tensor = rules.decompose_tensor(mu.finite()).entries;
            std::erase_if(tensor, [&](const auto& e) { return sys->theta_product(e.first) > k; });
            CHECK(fusion == tensor);
        }
    }
}

}
